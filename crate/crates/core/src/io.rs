//! JSON workflow and cost-model documents.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cost::{CostModel, EffectSize, RecentPracticeScope, RuleId};
use crate::workflow::{CognitiveResource, Task, TaskOrdering, VariantGroup, Workflow};

/// Environment variable naming the cost-model file used when none is given.
pub const COST_MODEL_ENV: &str = "COGSEQ_COST_MODEL";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{context}: malformed JSON at line {line}, column {column}: {message}")]
    Json {
        context: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: {field}: {message}")]
    Schema {
        context: String,
        field: String,
        message: String,
    },
    #[error("{context}: invalid workflow:\n{report}")]
    Invalid { context: String, report: String },
}

fn json_error(context: &str, e: serde_json::Error) -> IoError {
    IoError::Json {
        context: context.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn schema(context: &str, field: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema {
        context: context.to_string(),
        field: field.into(),
        message: message.into(),
    }
}

/// On-disk task row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskRecord {
    pub code: String,
    #[serde(default)]
    pub name: String,
    pub resource: String,
    pub modality: String,
    pub voluntary: bool,
    pub familiarity: u8,
    pub complexity: u8,
    #[serde(default)]
    pub prerequisites: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub code: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct WorkflowDocument {
    pub tasks: Vec<TaskRecord>,
    #[serde(default)]
    pub variant_groups: Vec<GroupRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub known_orderings: BTreeMap<String, Vec<String>>,
}

/// A parsed workflow plus the named orderings shipped alongside it.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedWorkflow {
    pub workflow: Workflow,
    pub known_orderings: BTreeMap<String, TaskOrdering>,
    /// Unknown keys seen in non-strict mode.
    pub warnings: Vec<String>,
}

const WORKFLOW_KEYS: &[&str] = &["tasks", "variant_groups", "known_orderings"];
const TASK_KEYS: &[&str] = &[
    "code",
    "name",
    "resource",
    "modality",
    "voluntary",
    "familiarity",
    "complexity",
    "prerequisites",
];
const GROUP_KEYS: &[&str] = &["code", "members"];
const COST_MODEL_KEYS: &[&str] = &[
    "matrix",
    "matrix_overrides",
    "rules",
    "recent_practice_scope",
    "rules_enabled",
];

fn unknown_keys(value: &Value, allowed: &[&str], at: &str, out: &mut Vec<String>) {
    if let Value::Object(map) = value {
        for k in map.keys() {
            if !allowed.contains(&k.as_str()) {
                out.push(format!("{at}.{k}"));
            }
        }
    }
}

fn check_keys(value: &Value, strict: bool, context: &str, allowed_top: &[&str]) -> Result<Vec<String>, IoError> {
    let mut unknown = Vec::new();
    unknown_keys(value, allowed_top, "$", &mut unknown);
    if let Some(Value::Array(tasks)) = value.get("tasks") {
        for (i, t) in tasks.iter().enumerate() {
            unknown_keys(t, TASK_KEYS, &format!("$.tasks[{i}]"), &mut unknown);
        }
    }
    if let Some(Value::Array(groups)) = value.get("variant_groups") {
        for (i, g) in groups.iter().enumerate() {
            unknown_keys(g, GROUP_KEYS, &format!("$.variant_groups[{i}]"), &mut unknown);
        }
    }
    if strict {
        if let Some(first) = unknown.first() {
            return Err(schema(context, first.clone(), "unknown key"));
        }
    }
    Ok(unknown
        .into_iter()
        .map(|k| format!("ignoring unknown key {k}"))
        .collect())
}

impl WorkflowDocument {
    pub fn from_workflow(workflow: &Workflow, known_orderings: &BTreeMap<String, TaskOrdering>) -> Self {
        WorkflowDocument {
            tasks: workflow
                .tasks()
                .iter()
                .map(|t| TaskRecord {
                    code: t.code.clone(),
                    name: t.name.clone(),
                    resource: t.resource.abbreviation().to_string(),
                    modality: t.modality.as_str().to_string(),
                    voluntary: t.voluntary,
                    familiarity: t.familiarity,
                    complexity: t.complexity,
                    prerequisites: t.prerequisites.iter().cloned().collect(),
                })
                .collect(),
            variant_groups: workflow
                .variant_groups()
                .iter()
                .map(|g| GroupRecord {
                    code: g.code.clone(),
                    members: g.members.iter().cloned().collect(),
                })
                .collect(),
            known_orderings: known_orderings
                .iter()
                .map(|(k, v)| (k.clone(), v.codes().to_vec()))
                .collect(),
        }
    }

    fn into_workflow(self, context: &str) -> Result<(Workflow, BTreeMap<String, TaskOrdering>), IoError> {
        let mut tasks = Vec::with_capacity(self.tasks.len());
        for (i, r) in self.tasks.into_iter().enumerate() {
            let resource: CognitiveResource = r.resource.parse().map_err(|e: crate::workflow::UnknownResource| {
                schema(context, format!("tasks[{i}].resource"), e.to_string())
            })?;
            let mut task = Task::new(&r.code, resource, &r.modality)
                .voluntary(r.voluntary)
                .familiarity(r.familiarity)
                .complexity(r.complexity)
                .after(r.prerequisites);
            task.name = if r.name.is_empty() { r.code.clone() } else { r.name };
            tasks.push(task);
        }
        let groups = self
            .variant_groups
            .into_iter()
            .map(|g| VariantGroup::new(&g.code, g.members))
            .collect();
        let known = self
            .known_orderings
            .into_iter()
            .map(|(k, v)| (k, TaskOrdering(v)))
            .collect();
        Ok((Workflow::new(tasks, groups), known))
    }
}

/// Parses a workflow document without validating its structure.
pub fn read_workflow(text: &str, strict: bool, context: &str) -> Result<LoadedWorkflow, IoError> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    let warnings = check_keys(&value, strict, context, WORKFLOW_KEYS)?;
    let doc: WorkflowDocument = serde_json::from_value(value).map_err(|e| schema(context, "$", e.to_string()))?;
    let (workflow, known_orderings) = doc.into_workflow(context)?;
    Ok(LoadedWorkflow {
        workflow,
        known_orderings,
        warnings,
    })
}

/// Parses and validates a workflow document.
pub fn parse_workflow(text: &str, strict: bool, context: &str) -> Result<LoadedWorkflow, IoError> {
    let loaded = read_workflow(text, strict, context)?;
    let report = loaded.workflow.validate();
    if !report.is_valid() {
        return Err(IoError::Invalid {
            context: context.to_string(),
            report: report.to_string(),
        });
    }
    for (name, ordering) in &loaded.known_orderings {
        for code in ordering.iter() {
            if loaded.workflow.task(code).is_none() {
                return Err(schema(
                    context,
                    format!("known_orderings.{name}"),
                    format!("unknown task {code}"),
                ));
            }
        }
    }
    Ok(loaded)
}

pub fn load_workflow(path: &Path, strict: bool) -> Result<LoadedWorkflow, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_workflow(&text, strict, &path.display().to_string())
}

/// Pretty JSON with a trailing newline.
pub fn serialize_workflow(workflow: &Workflow, known_orderings: &BTreeMap<String, TaskOrdering>) -> String {
    let doc = WorkflowDocument::from_workflow(workflow, known_orderings);
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct MatrixCell {
    pub from: String,
    pub to: String,
    pub cost: f64,
}

/// Cost-model overrides; anything omitted keeps its default.
#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
pub struct CostModelDocument {
    pub matrix: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub matrix_overrides: Vec<MatrixCell>,
    #[serde(default)]
    pub rules: BTreeMap<String, f64>,
    pub recent_practice_scope: Option<RecentPracticeScope>,
    pub rules_enabled: Option<bool>,
}

impl CostModelDocument {
    pub fn into_model(self, context: &str) -> Result<CostModel, IoError> {
        let mut model = CostModel::default();
        let effect =
            |field: String, v: f64| EffectSize::from_decimal(v).map_err(|e| schema(context, field, e.to_string()));
        if let Some(rows) = self.matrix {
            if rows.len() != 5 || rows.iter().any(|r| r.len() != 5) {
                return Err(schema(context, "matrix", "expected 5 rows of 5 entries"));
            }
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    let c = effect(format!("matrix[{i}][{j}]"), v)?;
                    model.matrix.0[i][j] = c;
                }
            }
        }
        for (k, cell) in self.matrix_overrides.iter().enumerate() {
            let field = format!("matrix_overrides[{k}]");
            let from: CognitiveResource = cell
                .from
                .parse()
                .map_err(|e: crate::workflow::UnknownResource| schema(context, field.clone(), e.to_string()))?;
            let to: CognitiveResource = cell
                .to
                .parse()
                .map_err(|e: crate::workflow::UnknownResource| schema(context, field.clone(), e.to_string()))?;
            let c = effect(field, cell.cost)?;
            model.matrix.set(from, to, c);
        }
        for r in CognitiveResource::ALL {
            if model.matrix.get(r, r) != EffectSize::ZERO {
                return Err(schema(context, "matrix", format!("diagonal entry for {r} must be 0")));
            }
        }
        for (name, &v) in &self.rules {
            let rule: RuleId = name.parse().map_err(|e: String| schema(context, "rules", e))?;
            model.rules.set(rule, effect(format!("rules.{name}"), v)?);
        }
        if let Some(scope) = self.recent_practice_scope {
            model.recent_practice_scope = scope;
        }
        if let Some(enabled) = self.rules_enabled {
            model.rules_enabled = enabled;
        }
        Ok(model)
    }
}

/// Parses a cost-model document; blank text yields the defaults.
pub fn parse_cost_model(text: &str, strict: bool, context: &str) -> Result<(CostModel, Vec<String>), IoError> {
    if text.trim().is_empty() {
        return Ok((CostModel::default(), Vec::new()));
    }
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(context, e))?;
    if !value.is_object() {
        return Err(schema(context, "$", "expected a JSON object"));
    }
    let warnings = check_keys(&value, strict, context, COST_MODEL_KEYS)?;
    let doc: CostModelDocument = serde_json::from_value(value).map_err(|e| schema(context, "$", e.to_string()))?;
    Ok((doc.into_model(context)?, warnings))
}

/// Loads `path`, falling back to the file named by [`COST_MODEL_ENV`], then
/// to the built-in defaults.
pub fn load_cost_model(path: Option<&Path>) -> Result<CostModel, IoError> {
    let env_path = std::env::var_os(COST_MODEL_ENV);
    let path = path.or(env_path.as_deref().map(Path::new));
    match path {
        None => Ok(CostModel::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|source| IoError::Read {
                path: p.display().to_string(),
                source,
            })?;
            Ok(parse_cost_model(&text, false, &p.display().to_string())?.0)
        }
    }
}

/// Reads orderings one per line (comma or whitespace separated), or a JSON
/// array of code arrays. Blank lines and `#` comments are skipped.
pub fn parse_orderings(text: &str) -> Result<Vec<TaskOrdering>, IoError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| json_error("orderings", e))?;
        return Ok(rows.into_iter().map(TaskOrdering).collect());
    }
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(TaskOrdering::parse)
        .collect())
}

/// Codes named in an ordering that belong to each variant group, used to
/// infer which member an ordering instantiates.
pub fn infer_variants(workflow: &Workflow, ordering: &TaskOrdering) -> Vec<(String, String)> {
    let present: BTreeSet<&str> = ordering.iter().collect();
    workflow
        .variant_groups()
        .iter()
        .filter_map(|g| {
            let chosen: Vec<&String> = g.members.iter().filter(|m| present.contains(m.as_str())).collect();
            match chosen.as_slice() {
                [one] => Some((g.code.clone(), (*one).clone())),
                _ => None,
            }
        })
        .collect()
}
