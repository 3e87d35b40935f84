//! Comparing orderings: positional distance, consensus, and per-transition
//! reports.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::cost::{EffectSize, RuleId};
use crate::solver::Solution;
use crate::workflow::TaskOrdering;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("orderings cover different tasks (symmetric difference: {})", .0.join(", "))]
    DifferentTasks(Vec<String>),
    #[error("ordering repeats task {0}")]
    Repeated(String),
    #[error("no orderings given")]
    Empty,
}

/// Task code to zero-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionVector(BTreeMap<String, usize>);

impl PositionVector {
    pub fn new(ordering: &TaskOrdering) -> Result<Self, AnalysisError> {
        let mut map = BTreeMap::new();
        for (i, code) in ordering.iter().enumerate() {
            if map.insert(code.to_string(), i).is_some() {
                return Err(AnalysisError::Repeated(code.to_string()));
            }
        }
        Ok(PositionVector(map))
    }

    pub fn get(&self, code: &str) -> Option<usize> {
        self.0.get(code).copied()
    }

    pub fn codes(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    fn same_tasks(&self, other: &PositionVector) -> Result<(), AnalysisError> {
        let a: BTreeSet<&str> = self.codes().collect();
        let b: BTreeSet<&str> = other.codes().collect();
        if a == b {
            Ok(())
        } else {
            Err(AnalysisError::DifferentTasks(
                a.symmetric_difference(&b).map(|s| s.to_string()).collect(),
            ))
        }
    }
}

/// Sum of squared position differences, exact.
pub fn squared_distance(a: &TaskOrdering, b: &TaskOrdering) -> Result<u64, AnalysisError> {
    let pa = PositionVector::new(a)?;
    let pb = PositionVector::new(b)?;
    pa.same_tasks(&pb)?;
    Ok(pa
        .0
        .iter()
        .map(|(code, &i)| {
            let d = i.abs_diff(pb.0[code]) as u64;
            d * d
        })
        .sum())
}

/// Euclidean distance between the position vectors of two orderings.
pub fn ordering_distance(a: &TaskOrdering, b: &TaskOrdering) -> Result<f64, AnalysisError> {
    Ok((squared_distance(a, b)? as f64).sqrt())
}

/// Builds one ordering out of many from positional mode frequencies.
///
/// Positions are filled in ascending order; each takes the unused task that
/// appears there most often, ties going to the smaller code. Positions left
/// empty (every task seen there is already placed) receive the leftover
/// tasks by ascending mean position, then code.
pub fn consensus_ordering(orderings: &[TaskOrdering]) -> Result<TaskOrdering, AnalysisError> {
    let first = orderings.first().ok_or(AnalysisError::Empty)?;
    let reference = PositionVector::new(first)?;
    let mut vectors = Vec::with_capacity(orderings.len());
    for o in orderings {
        let pv = PositionVector::new(o)?;
        reference.same_tasks(&pv)?;
        vectors.push(pv);
    }
    let n = first.len();

    // counts[pos][code]
    let mut counts: Vec<BTreeMap<&str, usize>> = vec![BTreeMap::new(); n];
    for o in orderings {
        for (i, code) in o.iter().enumerate() {
            *counts[i].entry(code).or_default() += 1;
        }
    }

    let mut used: BTreeSet<&str> = BTreeSet::new();
    let mut slots: Vec<Option<&str>> = vec![None; n];
    for (pos, slot) in slots.iter_mut().enumerate() {
        let pick = counts[pos]
            .iter()
            .filter(|(code, _)| !used.contains(*code))
            // Higher count wins, then the smaller code.
            .max_by(|(ca, na), (cb, nb)| na.cmp(nb).then_with(|| cb.cmp(ca)))
            .map(|(code, _)| *code);
        if let Some(code) = pick {
            used.insert(code);
            *slot = Some(code);
        }
    }

    let mut leftovers: Vec<(u64, &str)> = reference
        .codes()
        .filter(|c| !used.contains(c))
        .map(|c| (vectors.iter().map(|v| v.get(c).unwrap() as u64).sum::<u64>(), c))
        .collect();
    // Equal counts of orderings, so comparing sums compares means.
    leftovers.sort();
    let mut leftovers = leftovers.into_iter().map(|(_, c)| c);
    let codes = slots
        .into_iter()
        .map(|s| s.unwrap_or_else(|| leftovers.next().expect("one leftover per empty slot")))
        .map(str::to_string)
        .collect();
    Ok(TaskOrdering(codes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub from: String,
    pub to: String,
    pub resource_cost: EffectSize,
    pub fired_rules: Vec<(RuleId, EffectSize)>,
    pub transition_total: EffectSize,
    pub running_total: EffectSize,
}

/// One row per transition, in sequence order.
pub fn transition_report(solution: &Solution) -> Vec<ReportRow> {
    let mut running = EffectSize::ZERO;
    solution
        .breakdowns
        .iter()
        .map(|b| {
            running += b.total;
            ReportRow {
                from: b.from.clone(),
                to: b.to.clone(),
                resource_cost: b.resource_cost,
                fired_rules: b.fired_rules.clone(),
                transition_total: b.total,
                running_total: running,
            }
        })
        .collect()
}
