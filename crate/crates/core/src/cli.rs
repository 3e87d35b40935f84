//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for domain errors (bad files, invalid
//! workflows, infeasible requests), 2 for usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{consensus_ordering, ordering_distance, transition_report, ReportRow};
use crate::cost::{CostModel, EffectSize};
use crate::dot::export_dot;
use crate::fixtures;
use crate::io::{infer_variants, load_cost_model, parse_orderings, parse_workflow, read_workflow, LoadedWorkflow};
use crate::solver::{compare_variants_with, solve, Backend, Objective, SearchStats, Solution, SolveRequest};
use crate::workflow::{count_linear_extensions, enumerate_linear_extensions, TaskOrdering, Workflow};

#[derive(Debug, Parser)]
#[command(
    name = "cogseq",
    version,
    about = "Minimum task-switching-cost orderings of workflows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a workflow file and list any structural problems.
    Validate(WorkflowArgs),
    /// Find the best (or worst) orderings.
    Solve(SolveArgs),
    /// Solve once per variant-group member and rank the results.
    CompareVariants(CompareArgs),
    /// Cost breakdown of a given ordering.
    Explain(ExplainArgs),
    /// Euclidean distance between the position vectors of two orderings.
    Distance(DistanceArgs),
    /// Consensus ordering from a file of orderings.
    Consensus(ConsensusArgs),
    /// Precedence graph as Graphviz DOT.
    ExportDot(WorkflowArgs),
    /// Enumerate or count linear extensions.
    Extensions(ExtensionsArgs),
}

#[derive(Debug, Args)]
struct WorkflowArgs {
    /// Workflow JSON file, or `builtin:checkin-full` / `builtin:checkin-validation`.
    workflow: String,
    /// Reject unknown keys instead of warning.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Cost-model override file (defaults to $COGSEQ_COST_MODEL, then built-in values).
    #[arg(long, value_name = "FILE")]
    cost_model: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BackendArg {
    Bnb,
    Exhaustive,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    wf: WorkflowArgs,
    /// Instantiate a variant group, e.g. AUTH=AUPS. Repeatable.
    #[arg(long = "variant", value_name = "GROUP=MEMBER")]
    variants: Vec<String>,
    #[arg(long, value_enum, default_value = "min")]
    objective: ObjectiveArg,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value = "bnb")]
    backend: BackendArg,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Worker threads for the search; output does not depend on it.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Include search statistics (node counts, timing).
    #[arg(long)]
    stats: bool,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    wf: WorkflowArgs,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Debug, Args)]
struct ExplainArgs {
    #[command(flatten)]
    wf: WorkflowArgs,
    /// Comma-separated codes, or the name of an ordering stored in the file.
    #[arg(long)]
    ordering: String,
    #[arg(long = "variant", value_name = "GROUP=MEMBER")]
    variants: Vec<String>,
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct DistanceArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

#[derive(Debug, Args)]
struct ConsensusArgs {
    /// One ordering per line, or a JSON array of code arrays.
    file: PathBuf,
}

#[derive(Debug, Args)]
struct ExtensionsArgs {
    #[command(flatten)]
    wf: WorkflowArgs,
    #[arg(long = "variant", value_name = "GROUP=MEMBER")]
    variants: Vec<String>,
    #[arg(long)]
    limit: Option<usize>,
    /// Print only the number of extensions.
    #[arg(long)]
    count: bool,
}

/// A domain failure; reported on stderr with exit code 1.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

/// Runs the CLI with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Validate(a) => validate(&a, out, err),
        Command::Solve(a) => solve_cmd(&a, out, err),
        Command::CompareVariants(a) => compare_cmd(&a, out, err),
        Command::Explain(a) => explain_cmd(&a, out, err),
        Command::Distance(a) => {
            let d = ordering_distance(&TaskOrdering::parse(&a.a), &TaskOrdering::parse(&a.b))?;
            writeln!(out, "{d:.4}")?;
            Ok(())
        }
        Command::Consensus(a) => {
            let text = fs::read_to_string(&a.file).map_err(|e| Failure(format!("{}: {e}", a.file.display())))?;
            let orderings = parse_orderings(&text)?;
            writeln!(out, "{}", consensus_ordering(&orderings)?)?;
            Ok(())
        }
        Command::ExportDot(a) => {
            let loaded = load(&a, err)?;
            out.write_all(export_dot(&loaded.workflow).as_bytes())?;
            Ok(())
        }
        Command::Extensions(a) => extensions_cmd(&a, out, err),
    }
}

fn workflow_text(spec: &str) -> Result<(String, String), Failure> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let text = fixtures::builtin(name).ok_or_else(|| {
            Failure(format!(
                "no built-in workflow '{name}' (try checkin-full or checkin-validation)"
            ))
        })?;
        return Ok((text.to_string(), format!("{name}.json")));
    }
    let text = fs::read_to_string(spec).map_err(|e| Failure(format!("{spec}: {e}")))?;
    Ok((text, spec.to_string()))
}

fn load(args: &WorkflowArgs, err: &mut dyn Write) -> Result<LoadedWorkflow, Failure> {
    let (text, context) = workflow_text(&args.workflow)?;
    let loaded = parse_workflow(&text, args.strict, &context)?;
    for w in &loaded.warnings {
        writeln!(err, "warning: {w}")?;
    }
    Ok(loaded)
}

fn model(args: &ModelArgs) -> Result<CostModel, Failure> {
    Ok(load_cost_model(args.cost_model.as_deref().map(Path::new))?)
}

fn parse_variants(raw: &[String]) -> Result<Vec<(String, String)>, Failure> {
    raw.iter()
        .map(|v| {
            v.split_once('=')
                .map(|(g, m)| (g.trim().to_string(), m.trim().to_string()))
                .ok_or_else(|| Failure(format!("--variant expects GROUP=MEMBER, got '{v}'")))
        })
        .collect()
}

fn instantiate(workflow: &Workflow, choices: &[(String, String)]) -> Result<Workflow, Failure> {
    let wf = workflow.instantiate_all(choices.iter().map(|(g, m)| (g.as_str(), m.as_str())))?;
    if !wf.is_concrete() {
        let missing: Vec<_> = wf.variant_groups().iter().map(|g| g.code.as_str()).collect();
        return Err(Failure(format!(
            "variant groups {} need a member; pass --variant GROUP=MEMBER or use compare-variants",
            missing.join(", ")
        )));
    }
    Ok(wf)
}

fn validate(args: &WorkflowArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (text, context) = workflow_text(&args.workflow)?;
    let loaded = read_workflow(&text, args.strict, &context)?;
    for w in &loaded.warnings {
        writeln!(err, "warning: {w}")?;
    }
    let report = loaded.workflow.validate();
    if report.is_valid() {
        writeln!(
            out,
            "valid: {} tasks, {} variant groups",
            loaded.workflow.len(),
            loaded.workflow.variant_groups().len()
        )?;
        Ok(())
    } else {
        for v in &report.violations {
            writeln!(out, "violation: {v}")?;
        }
        Err(Failure(format!("{} violation(s)", report.violations.len())))
    }
}

#[derive(Serialize)]
struct RuleJson {
    rule: String,
    cost_thousandths: u64,
    cost: String,
}

#[derive(Serialize)]
struct TransitionJson {
    from: String,
    to: String,
    resource_cost_thousandths: u64,
    resource_cost: String,
    rules: Vec<RuleJson>,
    total_thousandths: u64,
    total: String,
    running_total_thousandths: u64,
}

#[derive(Serialize)]
struct StatsJson {
    nodes: u64,
    prunes: u64,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct SolutionJson {
    rank: usize,
    ordering: Vec<String>,
    total_thousandths: u64,
    total: String,
    transitions: Vec<TransitionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<StatsJson>,
}

fn transitions_json(rows: &[ReportRow]) -> Vec<TransitionJson> {
    rows.iter()
        .map(|r| TransitionJson {
            from: r.from.clone(),
            to: r.to.clone(),
            resource_cost_thousandths: r.resource_cost.thousandths(),
            resource_cost: r.resource_cost.to_string(),
            rules: r
                .fired_rules
                .iter()
                .map(|(id, c)| RuleJson {
                    rule: id.to_string(),
                    cost_thousandths: c.thousandths(),
                    cost: c.to_string(),
                })
                .collect(),
            total_thousandths: r.transition_total.thousandths(),
            total: r.transition_total.to_string(),
            running_total_thousandths: r.running_total.thousandths(),
        })
        .collect()
}

fn stats_json(s: &SearchStats) -> StatsJson {
    StatsJson {
        nodes: s.nodes,
        prunes: s.prunes,
        elapsed_ms: s.elapsed.as_secs_f64() * 1000.0,
    }
}

fn solution_json(rank: usize, s: &Solution, with_stats: bool) -> SolutionJson {
    SolutionJson {
        rank,
        ordering: s.ordering.codes().to_vec(),
        total_thousandths: s.total.thousandths(),
        total: s.total.to_string(),
        transitions: transitions_json(&transition_report(s)),
        stats: with_stats.then(|| stats_json(&s.stats)),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn mean(total: EffectSize, transitions: usize) -> String {
    if transitions == 0 {
        "0.000".to_string()
    } else {
        format!("{:.3}", total.as_f64() / transitions as f64)
    }
}

fn write_report_table(out: &mut dyn Write, rows: &[ReportRow]) -> CliResult {
    writeln!(
        out,
        "  {:<6} {:<6} {:>9} {:>8} {:>8}  rules",
        "from", "to", "resource", "step", "running"
    )?;
    for r in rows {
        let rules: Vec<String> = r.fired_rules.iter().map(|(id, c)| format!("{id} {c}")).collect();
        writeln!(
            out,
            "  {:<6} {:<6} {:>9} {:>8} {:>8}  {}",
            r.from,
            r.to,
            r.resource_cost.to_string(),
            r.transition_total.to_string(),
            r.running_total.to_string(),
            if rules.is_empty() {
                "-".to_string()
            } else {
                rules.join(", ")
            }
        )?;
    }
    Ok(())
}

fn solve_cmd(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let loaded = load(&args.wf, err)?;
    let choices = parse_variants(&args.variants)?;
    let workflow = instantiate(&loaded.workflow, &choices)?;
    let objective = match args.objective {
        ObjectiveArg::Min => Objective::Minimize,
        ObjectiveArg::Max => Objective::Maximize,
    };
    let backend = match args.backend {
        BackendArg::Bnb => Backend::BranchAndBound,
        BackendArg::Exhaustive => Backend::Exhaustive,
    };
    let request = SolveRequest::new(workflow, model(&args.model)?)
        .objective(objective)
        .k(args.k)
        .backend(backend)
        .workers(args.workers);
    let solutions = solve(&request)?;

    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                objective: &'static str,
                k: usize,
                variants: Vec<String>,
                solutions: Vec<SolutionJson>,
            }
            let doc = Doc {
                objective: match objective {
                    Objective::Minimize => "min",
                    Objective::Maximize => "max",
                },
                k: args.k,
                variants: choices.iter().map(|(g, m)| format!("{g}={m}")).collect(),
                solutions: solutions
                    .iter()
                    .enumerate()
                    .map(|(i, s)| solution_json(i + 1, s, args.stats))
                    .collect(),
            };
            write_json(out, &doc)
        }
        Format::Table => {
            for (i, s) in solutions.iter().enumerate() {
                writeln!(
                    out,
                    "#{}  total {}  ({} transitions, mean {})",
                    i + 1,
                    s.total,
                    s.breakdowns.len(),
                    mean(s.total, s.breakdowns.len())
                )?;
                writeln!(out, "  {}", s.ordering)?;
                if i == 0 {
                    write_report_table(out, &transition_report(s))?;
                }
            }
            if args.stats {
                let st = &solutions[0].stats;
                writeln!(
                    out,
                    "nodes {}  prunes {}  elapsed {:.1} ms",
                    st.nodes,
                    st.prunes,
                    st.elapsed.as_secs_f64() * 1000.0
                )?;
            }
            Ok(())
        }
    }
}

fn compare_cmd(args: &CompareArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let loaded = load(&args.wf, err)?;
    let cmp = compare_variants_with(&loaded.workflow, &model(&args.model)?, args.workers)?;
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                variant: String,
                #[serde(flatten)]
                solution: SolutionJson,
            }
            #[derive(Serialize)]
            struct Doc {
                rows: Vec<Row>,
                spread_thousandths: u64,
                spread: String,
            }
            let doc = Doc {
                rows: cmp
                    .rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| Row {
                        variant: r.label(),
                        solution: solution_json(i + 1, &r.solution, false),
                    })
                    .collect(),
                spread_thousandths: cmp.spread.thousandths(),
                spread: cmp.spread.to_string(),
            };
            write_json(out, &doc)
        }
        Format::Table => {
            writeln!(
                out,
                "{:<4} {:<14} {:>8} {:>6}  ordering",
                "rank", "variant", "total", "mean"
            )?;
            for (i, r) in cmp.rows.iter().enumerate() {
                let s = &r.solution;
                writeln!(
                    out,
                    "{:<4} {:<14} {:>8} {:>6}  {}",
                    i + 1,
                    r.label(),
                    s.total.to_string(),
                    mean(s.total, s.breakdowns.len()),
                    s.ordering
                )?;
            }
            writeln!(out, "spread {}", cmp.spread)?;
            Ok(())
        }
    }
}

fn explain_cmd(args: &ExplainArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let loaded = load(&args.wf, err)?;
    let ordering = if !args.ordering.contains(',') {
        loaded
            .known_orderings
            .get(args.ordering.trim())
            .cloned()
            .unwrap_or_else(|| TaskOrdering::parse(&args.ordering))
    } else {
        TaskOrdering::parse(&args.ordering)
    };
    let mut choices = parse_variants(&args.variants)?;
    if choices.is_empty() {
        choices = infer_variants(&loaded.workflow, &ordering);
    }
    let workflow = instantiate(&loaded.workflow, &choices)?;
    let model = model(&args.model)?;
    let (total, breakdowns) = model.sequence_cost(&ordering, &workflow)?;
    let solution = Solution {
        ordering,
        total,
        breakdowns,
        stats: SearchStats::default(),
    };
    let rows = transition_report(&solution);
    match args.format {
        Format::Json => write_json(out, &solution_json(1, &solution, false)),
        Format::Table => {
            writeln!(out, "{}", solution.ordering)?;
            write_report_table(out, &rows)?;
            writeln!(
                out,
                "total {}  ({} transitions, mean {})",
                total,
                rows.len(),
                mean(total, rows.len())
            )?;
            Ok(())
        }
    }
}

fn extensions_cmd(args: &ExtensionsArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let loaded = load(&args.wf, err)?;
    let workflow = instantiate(&loaded.workflow, &parse_variants(&args.variants)?)?;
    if args.count {
        writeln!(out, "{}", count_linear_extensions(&workflow)?)?;
        return Ok(());
    }
    for ordering in enumerate_linear_extensions(&workflow, args.limit)? {
        writeln!(out, "{ordering}")?;
    }
    Ok(())
}
