//! Graphviz export of the precedence graph.

use std::fmt::Write;

use crate::workflow::Workflow;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One `prerequisite -> task` edge per prerequisite entry, exactly as
/// written (no transitive reduction). Variant groups become clusters holding
/// their members and a diamond node for the group code.
pub fn export_dot(workflow: &Workflow) -> String {
    let mut out = String::new();
    writeln!(out, "digraph workflow {{").unwrap();
    writeln!(out, "    rankdir=LR;").unwrap();
    writeln!(out, "    node [shape=box];").unwrap();

    let grouped: Vec<&str> = workflow
        .variant_groups()
        .iter()
        .flat_map(|g| g.members.iter().map(String::as_str))
        .collect();
    for t in workflow.tasks() {
        if grouped.contains(&t.code.as_str()) {
            continue;
        }
        writeln!(
            out,
            "    {} [label={}];",
            quote(&t.code),
            quote(&format!("{}\\n{}", t.code, t.name))
        )
        .unwrap();
    }
    for g in workflow.variant_groups() {
        writeln!(out, "    subgraph {} {{", quote(&format!("cluster_{}", g.code))).unwrap();
        writeln!(out, "        label={};", quote(&g.code)).unwrap();
        writeln!(out, "        style=dashed;").unwrap();
        writeln!(out, "        {} [shape=diamond];", quote(&g.code)).unwrap();
        for m in &g.members {
            let name = workflow.task(m).map(|t| t.name.as_str()).unwrap_or("");
            writeln!(out, "        {} [label={}];", quote(m), quote(&format!("{m}\\n{name}"))).unwrap();
        }
        writeln!(out, "    }}").unwrap();
    }
    for (from, to) in workflow.prerequisite_edges() {
        writeln!(out, "    {} -> {};", quote(&from), quote(&to)).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Edges in a DOT text produced by [`export_dot`].
pub fn parse_edges(dot: &str) -> Vec<(String, String)> {
    dot.lines()
        .filter_map(|l| {
            let l = l.trim().trim_end_matches(';');
            let (a, b) = l.split_once("->")?;
            Some((
                a.trim().trim_matches('"').to_string(),
                b.trim().trim_matches('"').to_string(),
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use std::collections::BTreeSet;

    #[test]
    fn checkin_edges_match_prerequisites() {
        let wf = fixtures::checkin_full();
        let dot = export_dot(&wf);
        assert!(dot.starts_with("digraph workflow {"));
        assert!(dot.ends_with("}\n"));
        let edges: BTreeSet<_> = parse_edges(&dot).into_iter().collect();
        let expected: BTreeSet<_> = wf.prerequisite_edges().into_iter().collect();
        assert_eq!(edges, expected);
        assert!(edges.contains(&("AUTH".to_string(), "CFRM".to_string())));
        assert!(dot.contains("cluster_AUTH"));
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
