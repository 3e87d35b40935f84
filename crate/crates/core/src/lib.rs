//! Exact minimum cognitive-cost ordering of partially ordered workflows.
//!
//! A workflow is a set of tasks with prerequisites. Every switch from one
//! task to the next costs an effect size that depends on the cognitive
//! resources and properties of the two tasks. The solver finds the linear
//! extensions of the precedence order with the lowest (or highest) summed
//! switching cost.
//!
//! ```
//! use cogseq::{fixtures, solve, CostModel, SolveRequest};
//!
//! let workflow = fixtures::checkin_with("AUPS");
//! let best = solve(&SolveRequest::new(workflow, CostModel::default())).unwrap();
//! assert_eq!(best[0].breakdowns.len(), 12);
//! ```

pub mod analysis;
pub mod cli;
pub mod cost;
pub mod dot;
pub mod fixtures;
pub mod io;
pub mod solver;
pub mod wcsp;
pub mod workflow;

pub use analysis::{consensus_ordering, ordering_distance, transition_report, PositionVector, ReportRow};
pub use cost::{CostModel, EffectSize, RecentPracticeScope, RuleId, TransitionBreakdown};
pub use solver::{
    brute_force, compare_variants, solve, Backend, Objective, Solution, SolveRequest, SolverError, VariantComparison,
    DEFAULT_BRUTE_FORCE_BUDGET,
};
pub use wcsp::{encode_workflow, evaluate_assignment, Assignment, HardConstraint, Valuation, WcspInstance};
pub use workflow::{
    count_linear_extensions, enumerate_linear_extensions, CognitiveResource, Task, TaskOrdering, ValidationReport,
    VariantGroup, Violation, Workflow,
};
