//! Exact search for optimal, pessimal and top-k orderings.
//!
//! The search extends prefixes of linear extensions one eligible task at a
//! time, in ascending code order, so complete orderings are reached in
//! lexicographic order. Branch and bound prunes a prefix when its cost plus
//! an optimistic estimate for the remaining tasks cannot beat the k-th best
//! ordering found so far.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::cost::{CostError, CostModel, EffectSize, RecentPracticeScope, RuleId, TransitionBreakdown};
use crate::workflow::{
    bits, count_linear_extensions, enumerate_linear_extensions, PrecedenceGraph, TaskOrdering, Workflow, WorkflowError,
};

/// Largest extension count [`brute_force`] accepts by default.
pub const DEFAULT_BRUTE_FORCE_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Objective {
    #[default]
    Minimize,
    Maximize,
}

impl Objective {
    /// Orders totals best-first.
    fn rank(self, a: u64, b: u64) -> Ordering {
        match self {
            Objective::Minimize => a.cmp(&b),
            Objective::Maximize => b.cmp(&a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    #[default]
    BranchAndBound,
    /// Visits every linear extension; no pruning.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub elapsed: Duration,
}

impl SearchStats {
    fn merge(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes += other.prunes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub ordering: TaskOrdering,
    pub total: EffectSize,
    pub breakdowns: Vec<TransitionBreakdown>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone)]
pub struct SolveRequest {
    pub workflow: Workflow,
    pub model: CostModel,
    pub objective: Objective,
    pub k: usize,
    pub backend: Backend,
    /// 0 or 1 runs on the calling thread.
    pub workers: usize,
}

impl SolveRequest {
    pub fn new(workflow: Workflow, model: CostModel) -> Self {
        SolveRequest {
            workflow,
            model,
            objective: Objective::Minimize,
            k: 1,
            backend: Backend::BranchAndBound,
            workers: 1,
        }
    }

    pub fn objective(mut self, objective: Objective) -> Self {
        self.objective = objective;
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error(transparent)]
    Workflow(#[from] WorkflowError),
    #[error(transparent)]
    Cost(#[from] CostError),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("workflow has {count} linear extensions, over the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("workflow has no variant groups; use solve instead")]
    NoVariantGroups,
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Dense per-pair costs for one workflow and model.
struct Problem {
    graph: PrecedenceGraph,
    /// Adjacent-only transition totals.
    pair: Vec<Vec<u64>>,
    /// Transition totals without the recent-practice term.
    base: Vec<Vec<u64>>,
    recent_practice: u64,
    full_history: bool,
    modality: Vec<usize>,
    resource: Vec<usize>,
    /// Per task, candidate predecessors sorted best-first for the bound.
    incoming: Vec<Vec<(u64, usize)>>,
    objective: Objective,
}

impl Problem {
    fn new(workflow: &Workflow, model: &CostModel, objective: Objective) -> Result<Self, WorkflowError> {
        let graph = PrecedenceGraph::new(workflow)?;
        let tasks = workflow.tasks();
        let n = tasks.len();
        let rp = if model.rules_enabled {
            model.rules.get(RuleId::RecentPractice).thousandths()
        } else {
            0
        };
        let full_history = model.recent_practice_scope == RecentPracticeScope::FullHistory;

        let mut pair = vec![vec![0; n]; n];
        let mut base = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let bd = model.transition_cost(&tasks[a], &tasks[b], &[&tasks[a]]);
                let fired_rp: u64 = bd
                    .fired_rules
                    .iter()
                    .filter(|(r, _)| *r == RuleId::RecentPractice)
                    .map(|(_, c)| c.thousandths())
                    .sum();
                pair[a][b] = bd.total.thousandths();
                base[a][b] = bd.total.thousandths() - fired_rp;
            }
        }
        // Highest cost a transition can reach under any history.
        let pair_high: Vec<Vec<u64>> = if full_history {
            base.iter().map(|row| row.iter().map(|c| c + rp).collect()).collect()
        } else {
            pair.clone()
        };

        let mut modality_ids: BTreeMap<&str, usize> = BTreeMap::new();
        let modality = tasks
            .iter()
            .map(|t| {
                let next = modality_ids.len();
                *modality_ids.entry(t.modality.as_str()).or_insert(next)
            })
            .collect();
        let resource = tasks.iter().map(|t| t.resource.index()).collect();

        let descendants = graph.descendants();
        // Under full history the adjacent-only cost never exceeds the real
        // one, and `pair_high` never falls below it.
        let bound_costs = match objective {
            Objective::Minimize => &pair,
            Objective::Maximize => &pair_high,
        };
        let incoming = (0..n)
            .map(|t| {
                let mut v: Vec<(u64, usize)> = (0..n)
                    .filter(|&p| p != t && descendants[t] & (1 << p) == 0)
                    .map(|p| (bound_costs[p][t], p))
                    .collect();
                v.sort_by(|a, b| objective.rank(a.0, b.0).then(a.1.cmp(&b.1)));
                v
            })
            .collect();

        Ok(Problem {
            graph,
            pair,
            base,
            recent_practice: rp,
            full_history,
            modality,
            resource,
            incoming,
            objective,
        })
    }

    fn n(&self) -> usize {
        self.graph.len()
    }

    fn step(&self, last: usize, next: usize, seen_modalities: u64, seen_resources: u8) -> u64 {
        if !self.full_history {
            return self.pair[last][next];
        }
        let practiced =
            seen_modalities & (1 << self.modality[next]) != 0 || seen_resources & (1 << self.resource[next]) != 0;
        self.base[last][next] + if practiced { self.recent_practice } else { 0 }
    }

    /// Optimistic completion estimate for the tasks in `remaining`, given
    /// the prefix ends with `last`.
    fn completion_bound(&self, last: usize, remaining: u64) -> u64 {
        let available = remaining | 1 << last;
        bits(remaining)
            .map(|t| {
                self.incoming[t]
                    .iter()
                    .find(|(_, p)| available & (1 << p) != 0)
                    .map(|&(c, _)| c)
                    .unwrap_or(0)
            })
            .sum()
    }
}

/// Best-k store ordered by (objective, lexicographic sequence).
struct TopK {
    k: usize,
    objective: Objective,
    entries: Vec<(u64, Vec<usize>)>,
}

impl TopK {
    fn new(k: usize, objective: Objective) -> Self {
        TopK {
            k,
            objective,
            entries: Vec::with_capacity(k + 1),
        }
    }

    fn cmp(&self, a: &(u64, Vec<usize>), b: &(u64, Vec<usize>)) -> Ordering {
        self.objective.rank(a.0, b.0).then_with(|| a.1.cmp(&b.1))
    }

    fn offer(&mut self, cost: u64, seq: &[usize]) {
        if self.entries.len() == self.k {
            let worst = self.entries.last().unwrap();
            if self.objective.rank(cost, worst.0) != Ordering::Less {
                return;
            }
        }
        let item = (cost, seq.to_vec());
        let pos = self
            .entries
            .binary_search_by(|e| self.cmp(e, &item))
            .unwrap_or_else(|p| p);
        self.entries.insert(pos, item);
        self.entries.truncate(self.k);
    }

    /// True when no completion with this optimistic total can enter the
    /// store. Sequences arrive in lexicographic order, so a tie with the
    /// current k-th entry loses.
    fn excludes(&self, bound: u64) -> bool {
        self.entries.len() == self.k && self.objective.rank(bound, self.entries.last().unwrap().0) != Ordering::Less
    }

    fn merge(&mut self, other: TopK) {
        for (c, s) in other.entries {
            self.offer(c, &s);
        }
    }
}

struct Search<'p> {
    problem: &'p Problem,
    prune: bool,
    best: TopK,
    stats: SearchStats,
    prefix: Vec<usize>,
}

impl<'p> Search<'p> {
    fn new(problem: &'p Problem, k: usize, prune: bool) -> Self {
        Search {
            problem,
            prune,
            best: TopK::new(k, problem.objective),
            stats: SearchStats::default(),
            prefix: Vec::with_capacity(problem.n()),
        }
    }

    fn run_from(&mut self, first: usize) {
        let p = self.problem;
        self.prefix.push(first);
        self.stats.nodes += 1;
        self.descend(1 << first, 0, 1 << p.modality[first], 1 << p.resource[first]);
        self.prefix.pop();
    }

    fn descend(&mut self, done: u64, cost: u64, seen_modalities: u64, seen_resources: u8) {
        let p = self.problem;
        let full = p.graph.full_mask();
        if done == full {
            self.best.offer(cost, &self.prefix);
            return;
        }
        let last = *self.prefix.last().unwrap();
        for next in bits(p.graph.eligible(done)) {
            let c = cost + p.step(last, next, seen_modalities, seen_resources);
            let done_next = done | 1 << next;
            self.stats.nodes += 1;
            if self.prune && self.best.excludes(c + p.completion_bound(next, full & !done_next)) {
                self.stats.prunes += 1;
                continue;
            }
            self.prefix.push(next);
            self.descend(
                done_next,
                c,
                seen_modalities | 1 << p.modality[next],
                seen_resources | 1 << p.resource[next],
            );
            self.prefix.pop();
        }
    }
}

fn build_solution(
    request: &SolveRequest,
    graph: &PrecedenceGraph,
    cost: u64,
    seq: &[usize],
    stats: SearchStats,
) -> Result<Solution, SolverError> {
    let ordering = TaskOrdering(seq.iter().map(|&i| graph.code(i).to_string()).collect());
    let (total, breakdowns) = request.model.sequence_cost(&ordering, &request.workflow)?;
    assert_eq!(
        total.thousandths(),
        cost,
        "search cost disagrees with sequence cost for {ordering}"
    );
    Ok(Solution {
        ordering,
        total,
        breakdowns,
        stats,
    })
}

/// Best orderings for the request, best first, at most `k` of them. Ties
/// go to the lexicographically smaller code sequence; the result does not
/// depend on the worker count.
pub fn solve(request: &SolveRequest) -> Result<Vec<Solution>, SolverError> {
    if request.k == 0 {
        return Err(SolverError::ZeroK);
    }
    let started = Instant::now();
    let problem = Problem::new(&request.workflow, &request.model, request.objective)?;
    let prune = request.backend == Backend::BranchAndBound;

    let (best, mut stats) = if problem.n() == 0 {
        let mut best = TopK::new(request.k, request.objective);
        best.offer(0, &[]);
        (best, SearchStats::default())
    } else {
        let roots: Vec<usize> = bits(problem.graph.eligible(0)).collect();
        if request.workers <= 1 {
            let mut search = Search::new(&problem, request.k, prune);
            for &r in &roots {
                search.run_from(r);
            }
            (search.best, search.stats)
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(request.workers)
                .build()
                .map_err(|e| SolverError::Pool(e.to_string()))?;
            let parts: Vec<(TopK, SearchStats)> = pool.install(|| {
                roots
                    .par_iter()
                    .map(|&r| {
                        let mut search = Search::new(&problem, request.k, prune);
                        search.run_from(r);
                        (search.best, search.stats)
                    })
                    .collect()
            });
            let mut best = TopK::new(request.k, request.objective);
            let mut stats = SearchStats::default();
            for (part, s) in parts {
                best.merge(part);
                stats.merge(&s);
            }
            (best, stats)
        }
    };
    stats.elapsed = started.elapsed();

    best.entries
        .iter()
        .map(|(c, s)| build_solution(request, &problem.graph, *c, s, stats))
        .collect()
}

/// Exhaustive oracle: scores every linear extension with
/// [`CostModel::sequence_cost`] and keeps the extremal one.
pub fn brute_force(
    workflow: &Workflow,
    model: &CostModel,
    objective: Objective,
    budget: u128,
) -> Result<Solution, SolverError> {
    let started = Instant::now();
    let count = count_linear_extensions(workflow)?;
    if count > budget {
        return Err(SolverError::BudgetExceeded { count, budget });
    }
    let mut best: Option<(EffectSize, TaskOrdering, Vec<TransitionBreakdown>)> = None;
    let mut nodes = 0u64;
    for ordering in enumerate_linear_extensions(workflow, None)? {
        nodes += 1;
        let (total, breakdowns) = model.sequence_cost(&ordering, workflow)?;
        let better = match &best {
            None => true,
            Some((b, _, _)) => objective.rank(total.thousandths(), b.thousandths()) == Ordering::Less,
        };
        if better {
            best = Some((total, ordering, breakdowns));
        }
    }
    let (total, ordering, breakdowns) = best.expect("at least one extension");
    Ok(Solution {
        ordering,
        total,
        breakdowns,
        stats: SearchStats {
            nodes,
            prunes: 0,
            elapsed: started.elapsed(),
        },
    })
}

/// One instantiation of the workflow's variant groups and its optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantRow {
    /// (group, member) pairs.
    pub choices: Vec<(String, String)>,
    pub solution: Solution,
}

impl VariantRow {
    pub fn label(&self) -> String {
        self.choices
            .iter()
            .map(|(g, m)| format!("{g}={m}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantComparison {
    /// Cheapest first.
    pub rows: Vec<VariantRow>,
    /// Dearest minus cheapest.
    pub spread: EffectSize,
}

/// Minimum-cost ordering for every combination of variant-group members.
pub fn compare_variants(workflow: &Workflow, model: &CostModel) -> Result<VariantComparison, SolverError> {
    compare_variants_with(workflow, model, 1)
}

pub fn compare_variants_with(
    workflow: &Workflow,
    model: &CostModel,
    workers: usize,
) -> Result<VariantComparison, SolverError> {
    let groups = workflow.variant_groups();
    if groups.is_empty() {
        return Err(SolverError::NoVariantGroups);
    }
    let mut combos: Vec<Vec<(String, String)>> = vec![Vec::new()];
    for g in groups {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                g.members.iter().map(move |m| {
                    let mut c = prefix.clone();
                    c.push((g.code.clone(), m.clone()));
                    c
                })
            })
            .collect();
    }

    let mut rows = Vec::with_capacity(combos.len());
    for choices in combos {
        let concrete = workflow.instantiate_all(choices.iter().map(|(g, m)| (g.as_str(), m.as_str())))?;
        let request = SolveRequest::new(concrete, *model).workers(workers);
        let solution = solve(&request)?.remove(0);
        rows.push(VariantRow { choices, solution });
    }
    rows.sort_by(|a, b| {
        a.solution
            .total
            .cmp(&b.solution.total)
            .then_with(|| a.choices.cmp(&b.choices))
    });
    let spread = rows
        .last()
        .unwrap()
        .solution
        .total
        .saturating_sub(rows[0].solution.total);
    Ok(VariantComparison { rows, spread })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::workflow::{CognitiveResource::*, Task, VariantGroup};

    fn chain() -> Workflow {
        Workflow::new(
            vec![
                Task::new("A", SemanticRecognition, "t"),
                Task::new("B", EpisodicRecognition, "t").after(["A"]),
                Task::new("C", VisualWorkingMemory, "t").after(["B"]),
            ],
            vec![],
        )
    }

    #[test]
    fn chain_has_single_solution() {
        let sols = solve(&SolveRequest::new(chain(), CostModel::default()).k(3)).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].ordering, TaskOrdering::parse("A,B,C"));
    }

    #[test]
    fn zero_k_is_rejected() {
        assert!(matches!(
            solve(&SolveRequest::new(chain(), CostModel::default()).k(0)),
            Err(SolverError::ZeroK)
        ));
    }

    #[test]
    fn groups_must_be_instantiated() {
        assert!(matches!(
            solve(&SolveRequest::new(fixtures::checkin_full(), CostModel::default())),
            Err(SolverError::Workflow(WorkflowError::NotConcrete(_)))
        ));
    }

    #[test]
    fn antichain_picks_cheaper_direction() {
        let wf = Workflow::new(
            vec![
                Task::new("A", SemanticRecognition, "x"),
                Task::new("B", ProceduralMemory, "y"),
            ],
            vec![],
        );
        let m = CostModel::without_rules();
        // A->B = SR->PM = 0.842, B->A = PM->SR = 0.699.
        let bf = brute_force(&wf, &m, Objective::Minimize, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
        assert_eq!(bf.ordering, TaskOrdering::parse("B,A"));
        assert_eq!(bf.total.thousandths(), 699);
        let worst = brute_force(&wf, &m, Objective::Maximize, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
        assert_eq!(worst.total.thousandths(), 842);
        assert_eq!(solve(&SolveRequest::new(wf, m)).unwrap()[0].ordering, bf.ordering);
    }

    #[test]
    fn single_task() {
        let wf = Workflow::new(vec![Task::new("A", SemanticRecognition, "x")], vec![]);
        let bf = brute_force(&wf, &CostModel::default(), Objective::Minimize, 10).unwrap();
        assert_eq!(bf.ordering, TaskOrdering::parse("A"));
        assert_eq!(bf.total, EffectSize::ZERO);
        let s = solve(&SolveRequest::new(wf, CostModel::default())).unwrap();
        assert_eq!(s[0].total, EffectSize::ZERO);
    }

    #[test]
    fn empty_workflow() {
        let wf = Workflow::new(vec![], vec![]);
        let s = solve(&SolveRequest::new(wf, CostModel::default())).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].ordering.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let tasks = (0..5)
            .map(|i| Task::new(&format!("T{i}"), ProceduralMemory, "x"))
            .collect();
        let wf = Workflow::new(tasks, vec![]);
        match brute_force(&wf, &CostModel::default(), Objective::Minimize, 100) {
            Err(SolverError::BudgetExceeded { count, budget }) => {
                assert_eq!(count, 120);
                assert_eq!(budget, 100);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ties_break_lexicographically() {
        // Identical tasks: every ordering costs the same.
        let tasks = ["C", "A", "B"]
            .iter()
            .map(|c| Task::new(c, ProceduralMemory, "x"))
            .collect();
        let wf = Workflow::new(tasks, vec![]);
        let sols = solve(&SolveRequest::new(wf, CostModel::default()).k(6)).unwrap();
        let got: Vec<String> = sols.iter().map(|s| s.ordering.to_string()).collect();
        assert_eq!(got, ["A,B,C", "A,C,B", "B,A,C", "B,C,A", "C,A,B", "C,B,A"]);
    }

    #[test]
    fn checkin_matches_brute_force() {
        let model = CostModel::default();
        let wf = fixtures::checkin_with("AUPS");
        let s = solve(&SolveRequest::new(wf.clone(), model)).unwrap().remove(0);
        let bf = brute_force(&wf, &model, Objective::Minimize, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
        assert_eq!(s.total, bf.total);
        assert_eq!(s.ordering, bf.ordering);
        assert!(s.stats.prunes > 0);
    }

    #[test]
    fn top_k_is_sorted_and_distinct() {
        let wf = fixtures::checkin_validation();
        let sols = solve(&SolveRequest::new(wf.clone(), CostModel::default()).k(10)).unwrap();
        assert_eq!(sols.len(), 10);
        for w in sols.windows(2) {
            assert!((w[0].total, &w[0].ordering) < (w[1].total, &w[1].ordering));
        }
        let exhaustive = solve(
            &SolveRequest::new(wf, CostModel::default())
                .k(10)
                .backend(Backend::Exhaustive),
        )
        .unwrap();
        let a: Vec<_> = sols.iter().map(|s| (&s.ordering, s.total)).collect();
        let b: Vec<_> = exhaustive.iter().map(|s| (&s.ordering, s.total)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn full_history_bnb_matches_exhaustive() {
        let model = CostModel::default().with_scope(RecentPracticeScope::FullHistory);
        let wf = fixtures::checkin_validation();
        for objective in [Objective::Minimize, Objective::Maximize] {
            let bnb = solve(&SolveRequest::new(wf.clone(), model).objective(objective).k(3)).unwrap();
            let ex = solve(
                &SolveRequest::new(wf.clone(), model)
                    .objective(objective)
                    .k(3)
                    .backend(Backend::Exhaustive),
            )
            .unwrap();
            let a: Vec<_> = bnb.iter().map(|s| (&s.ordering, s.total)).collect();
            let b: Vec<_> = ex.iter().map(|s| (&s.ordering, s.total)).collect();
            assert_eq!(a, b, "{objective:?}");
            let bf = brute_force(&wf, &model, objective, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
            assert_eq!(bnb[0].total, bf.total);
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let wf = fixtures::checkin_with("AUCC");
        let base = SolveRequest::new(wf, CostModel::default()).k(5);
        let seq = solve(&base).unwrap();
        let par = solve(&base.clone().workers(4)).unwrap();
        let a: Vec<_> = seq.iter().map(|s| (&s.ordering, s.total)).collect();
        let b: Vec<_> = par.iter().map(|s| (&s.ordering, s.total)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn compare_needs_groups() {
        assert!(matches!(
            compare_variants(&chain(), &CostModel::default()),
            Err(SolverError::NoVariantGroups)
        ));
    }

    #[test]
    fn one_member_group_equals_plain_solve() {
        let wf = Workflow::new(
            vec![
                Task::new("A", SemanticRecognition, "t"),
                Task::new("M", ProceduralMemory, "s").after(["A"]),
                Task::new("Z", EpisodicRecognition, "t").after(["G"]),
            ],
            vec![VariantGroup::new("G", ["M"])],
        );
        let cmp = compare_variants(&wf, &CostModel::default()).unwrap();
        assert_eq!(cmp.rows.len(), 1);
        assert_eq!(cmp.spread, EffectSize::ZERO);
        let plain = solve(&SolveRequest::new(
            wf.instantiate_variant("G", "M").unwrap(),
            CostModel::default(),
        ))
        .unwrap()
        .remove(0);
        assert_eq!(cmp.rows[0].solution.total, plain.total);
        assert_eq!(cmp.rows[0].solution.ordering, plain.ordering);
    }

    #[test]
    fn two_groups_cover_every_combination() {
        let wf = Workflow::new(
            vec![
                Task::new("A1", SemanticRecognition, "t"),
                Task::new("A2", ProceduralMemory, "s"),
                Task::new("B1", EpisodicRecognition, "t"),
                Task::new("B2", DeclarativeRecall, "q"),
                Task::new("Z", VisualWorkingMemory, "t").after(["GA", "GB"]),
            ],
            vec![
                VariantGroup::new("GA", ["A1", "A2"]),
                VariantGroup::new("GB", ["B1", "B2"]),
            ],
        );
        let cmp = compare_variants(&wf, &CostModel::default()).unwrap();
        assert_eq!(cmp.rows.len(), 4);
        for w in cmp.rows.windows(2) {
            assert!(w[0].solution.total <= w[1].solution.total);
        }
    }
}
