//! Weighted CSP encoding of a workflow.
//!
//! One variable per step, whose value is the task done at that step. Hard
//! constraints (all-different, pairwise order) carry infinite cost; the only
//! soft constraint is a binary cost table applied to every pair of adjacent
//! variables. Costs combine by addition over nonnegative thousandths.

use std::fmt;

use thiserror::Error;

use crate::cost::{CostModel, EffectSize, RecentPracticeScope};
use crate::workflow::{TaskOrdering, Workflow, WorkflowError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HardConstraint {
    /// No value is used by two variables.
    AllDifferent,
    /// The task with value `before` is never placed after the task with
    /// value `after`.
    OrderPair { before: usize, after: usize },
}

/// A possibly partial assignment of values to variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(pub Vec<Option<usize>>);

impl Assignment {
    pub fn complete(values: Vec<usize>) -> Self {
        Assignment(values.into_iter().map(Some).collect())
    }

    pub fn is_complete(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }
}

/// Result of evaluating a complete assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Cost(EffectSize),
    /// Some hard constraint is violated.
    Infeasible(HardConstraint),
}

impl Valuation {
    pub fn cost(self) -> Option<EffectSize> {
        match self {
            Valuation::Cost(c) => Some(c),
            Valuation::Infeasible(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WcspError {
    #[error("the binary encoding cannot express full-history recent practice; use the sequence search")]
    FullHistoryScope,
    #[error("assignment leaves variable {0} unassigned")]
    Incomplete(usize),
    #[error("assignment has {got} variables, instance has {expected}")]
    WrongArity { expected: usize, got: usize },
    #[error("value {0} is outside the domain")]
    OutOfDomain(usize),
    #[error("task {0} is not in the instance")]
    UnknownTask(String),
    #[error(transparent)]
    Workflow(#[from] WorkflowError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WcspInstance {
    /// Value `v` stands for `values[v]`; ascending task code.
    values: Vec<String>,
    hard: Vec<HardConstraint>,
    binary_costs: Vec<Vec<EffectSize>>,
}

impl WcspInstance {
    /// Builds the instance for a concrete workflow. Needs the adjacent-only
    /// recent-practice scope.
    pub fn encode(workflow: &Workflow, model: &CostModel) -> Result<Self, WcspError> {
        if model.recent_practice_scope == RecentPracticeScope::FullHistory {
            return Err(WcspError::FullHistoryScope);
        }
        workflow.ensure_concrete()?;
        let values: Vec<String> = workflow.codes().map(str::to_string).collect();
        let value_of = |code: &str| values.binary_search_by(|v| v.as_str().cmp(code)).unwrap();

        let mut hard = vec![HardConstraint::AllDifferent];
        for t in workflow.tasks() {
            for p in &t.prerequisites {
                hard.push(HardConstraint::OrderPair {
                    before: value_of(p),
                    after: value_of(&t.code),
                });
            }
        }

        let tasks = workflow.tasks();
        let binary_costs = tasks
            .iter()
            .map(|a| tasks.iter().map(|b| model.transition_cost(a, b, &[a]).total).collect())
            .collect();

        Ok(WcspInstance {
            values,
            hard,
            binary_costs,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.values.len()
    }

    pub fn domain_size(&self) -> usize {
        self.values.len()
    }

    pub fn value_table(&self) -> &[String] {
        &self.values
    }

    pub fn hard_constraints(&self) -> &[HardConstraint] {
        &self.hard
    }

    pub fn order_pair_count(&self) -> usize {
        self.hard
            .iter()
            .filter(|c| matches!(c, HardConstraint::OrderPair { .. }))
            .count()
    }

    pub fn value_of(&self, code: &str) -> Option<usize> {
        self.values.binary_search_by(|v| v.as_str().cmp(code)).ok()
    }

    pub fn binary_cost(&self, a: usize, b: usize) -> EffectSize {
        self.binary_costs[a][b]
    }

    pub fn binary_costs(&self) -> &[Vec<EffectSize>] {
        &self.binary_costs
    }

    pub fn assignment_for(&self, ordering: &TaskOrdering) -> Result<Assignment, WcspError> {
        ordering
            .iter()
            .map(|c| {
                self.value_of(c)
                    .map(Some)
                    .ok_or_else(|| WcspError::UnknownTask(c.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Assignment)
    }

    fn violated(&self, values: &[usize]) -> Option<HardConstraint> {
        for &c in &self.hard {
            match c {
                HardConstraint::AllDifferent => {
                    let mut seen = vec![false; self.values.len()];
                    for &v in values {
                        if std::mem::replace(&mut seen[v], true) {
                            return Some(c);
                        }
                    }
                }
                HardConstraint::OrderPair { before, after } => {
                    // Pairwise decomposition: for every i < j, not (x_i = after and x_j = before).
                    for i in 0..values.len() {
                        for j in i + 1..values.len() {
                            if values[i] == after && values[j] == before {
                                return Some(c);
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Sum of all cost functions on a complete assignment.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Valuation, WcspError> {
        if assignment.0.len() != self.values.len() {
            return Err(WcspError::WrongArity {
                expected: self.values.len(),
                got: assignment.0.len(),
            });
        }
        let mut values = Vec::with_capacity(assignment.0.len());
        for (i, v) in assignment.0.iter().enumerate() {
            let v = v.ok_or(WcspError::Incomplete(i))?;
            if v >= self.values.len() {
                return Err(WcspError::OutOfDomain(v));
            }
            values.push(v);
        }
        if let Some(c) = self.violated(&values) {
            return Ok(Valuation::Infeasible(c));
        }
        let total = values.windows(2).map(|w| self.binary_costs[w[0]][w[1]]).sum();
        Ok(Valuation::Cost(total))
    }
}

/// Free-function form of [`WcspInstance::encode`].
pub fn encode_workflow(workflow: &Workflow, model: &CostModel) -> Result<WcspInstance, WcspError> {
    WcspInstance::encode(workflow, model)
}

/// Free-function form of [`WcspInstance::evaluate`].
pub fn evaluate_assignment(instance: &WcspInstance, assignment: &Assignment) -> Result<Valuation, WcspError> {
    instance.evaluate(assignment)
}

/// Debug dump; not a stable format.
impl fmt::Display for WcspInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.values.len();
        writeln!(f, "variables: x1..x{n}")?;
        write!(f, "domain:")?;
        for (v, code) in self.values.iter().enumerate() {
            write!(f, " {v}={code}")?;
        }
        writeln!(f)?;
        for c in &self.hard {
            match c {
                HardConstraint::AllDifferent => writeln!(f, "alldiff(x1..x{n})")?,
                HardConstraint::OrderPair { before, after } => {
                    writeln!(f, "order({}, {})", self.values[*before], self.values[*after])?
                }
            }
        }
        writeln!(f, "binary costs (row = from):")?;
        write!(f, "{:>6}", "")?;
        for code in &self.values {
            write!(f, " {code:>6}")?;
        }
        writeln!(f)?;
        for (a, row) in self.binary_costs.iter().enumerate() {
            write!(f, "{:>6}", self.values[a])?;
            for c in row {
                write!(f, " {:>6}", c.to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
