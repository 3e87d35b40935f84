//! Task-switching costs.
//!
//! Moving from one task to the next costs the resource-transition matrix
//! entry for the pair of cognitive resources, plus a flat amount for each
//! property rule whose condition holds. All costs are Cohen's d effect
//! sizes held as integer thousandths, so sums are exact.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::workflow::{CognitiveResource, ExtensionError, Task, TaskOrdering, Workflow};

/// A nonnegative effect size in thousandths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EffectSize(u64);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EffectSizeError {
    #[error("effect size {0} is negative or not finite")]
    Negative(String),
    #[error("effect size {0} has more than three fractional digits")]
    TooPrecise(String),
    #[error("'{0}' is not a decimal number")]
    Malformed(String),
}

impl EffectSize {
    pub const ZERO: EffectSize = EffectSize(0);

    pub const fn from_thousandths(t: u64) -> Self {
        EffectSize(t)
    }

    pub const fn thousandths(self) -> u64 {
        self.0
    }

    /// Converts a decimal value, rejecting anything that is not a whole
    /// number of thousandths.
    pub fn from_decimal(value: f64) -> Result<Self, EffectSizeError> {
        if !value.is_finite() || value < 0.0 {
            return Err(EffectSizeError::Negative(value.to_string()));
        }
        let scaled = value * 1000.0;
        let rounded = scaled.round();
        if (scaled - rounded).abs() > 1e-6 {
            return Err(EffectSizeError::TooPrecise(value.to_string()));
        }
        Ok(EffectSize(rounded as u64))
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 1000.0
    }

    pub fn saturating_sub(self, other: EffectSize) -> EffectSize {
        EffectSize(self.0.saturating_sub(other.0))
    }
}

impl FromStr for EffectSize {
    type Err = EffectSizeError;

    /// Parses `1.078`, `0.5`, `2` exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let malformed = || EffectSizeError::Malformed(s.to_string());
        if s.starts_with('-') {
            return Err(EffectSizeError::Negative(s.to_string()));
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(malformed());
        }
        if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(malformed());
        }
        let frac_trimmed = frac.trim_end_matches('0');
        if frac_trimmed.len() > 3 {
            return Err(EffectSizeError::TooPrecise(s.to_string()));
        }
        let whole: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| malformed())?
        };
        let mut milli: u64 = 0;
        for (i, c) in frac_trimmed.chars().enumerate() {
            milli += (c as u64 - '0' as u64) * 10u64.pow(2 - i as u32);
        }
        Ok(EffectSize(whole * 1000 + milli))
    }
}

impl fmt::Display for EffectSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:03}", self.0 / 1000, self.0 % 1000)
    }
}

impl Add for EffectSize {
    type Output = EffectSize;
    fn add(self, rhs: EffectSize) -> EffectSize {
        EffectSize(self.0 + rhs.0)
    }
}

impl AddAssign for EffectSize {
    fn add_assign(&mut self, rhs: EffectSize) {
        self.0 += rhs.0;
    }
}

impl Sum for EffectSize {
    fn sum<I: Iterator<Item = EffectSize>>(iter: I) -> EffectSize {
        iter.fold(EffectSize::ZERO, Add::add)
    }
}

const fn es(t: u64) -> EffectSize {
    EffectSize(t)
}

/// Switching cost between cognitive resources, indexed `[from][to]` in the
/// order VWM, PM, DR, SR, ER.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceTransitionMatrix(pub [[EffectSize; 5]; 5]);

impl Default for ResourceTransitionMatrix {
    fn default() -> Self {
        ResourceTransitionMatrix([
            [es(0), es(495), es(495), es(495), es(157)],
            [es(495), es(0), es(495), es(699), es(699)],
            [es(495), es(495), es(0), es(482), es(482)],
            [es(495), es(842), es(1078), es(0), es(433)],
            [es(307), es(842), es(1078), es(354), es(0)],
        ])
    }
}

impl ResourceTransitionMatrix {
    pub fn get(&self, from: CognitiveResource, to: CognitiveResource) -> EffectSize {
        self.0[from.index()][to.index()]
    }

    pub fn set(&mut self, from: CognitiveResource, to: CognitiveResource, cost: EffectSize) {
        self.0[from.index()][to.index()] = cost;
    }
}

/// Property-transition rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleId {
    /// Same resource, different response modality.
    Modality,
    /// The incoming task shares a modality or resource with a task in scope.
    RecentPractice,
    /// The incoming task is more familiar than the outgoing one.
    Familiarity,
    /// Complexity drops into a voluntary task.
    VoluntaryComplexityDrop,
    /// Complexity drops into an involuntary task.
    InvoluntaryComplexityDrop,
}

impl RuleId {
    pub const ALL: [RuleId; 5] = [
        RuleId::Modality,
        RuleId::RecentPractice,
        RuleId::Familiarity,
        RuleId::VoluntaryComplexityDrop,
        RuleId::InvoluntaryComplexityDrop,
    ];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Modality => "modality",
            RuleId::RecentPractice => "recent_practice",
            RuleId::Familiarity => "familiarity",
            RuleId::VoluntaryComplexityDrop => "voluntary_complexity_drop",
            RuleId::InvoluntaryComplexityDrop => "involuntary_complexity_drop",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s.trim())
            .ok_or_else(|| format!("unknown rule '{s}'"))
    }
}

/// Flat cost for each rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleCosts([EffectSize; 5]);

impl Default for RuleCosts {
    fn default() -> Self {
        RuleCosts([es(160), es(310), es(420), es(2920), es(1630)])
    }
}

impl RuleCosts {
    pub fn get(&self, rule: RuleId) -> EffectSize {
        self.0[rule.index()]
    }

    pub fn set(&mut self, rule: RuleId, cost: EffectSize) {
        self.0[rule.index()] = cost;
    }
}

/// How far back the recent-practice rule looks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecentPracticeScope {
    /// Only the immediately preceding task.
    #[default]
    AdjacentOnly,
    /// Every task done so far.
    FullHistory,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub matrix: ResourceTransitionMatrix,
    pub rules: RuleCosts,
    pub recent_practice_scope: RecentPracticeScope,
    pub rules_enabled: bool,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel {
            matrix: ResourceTransitionMatrix::default(),
            rules: RuleCosts::default(),
            recent_practice_scope: RecentPracticeScope::AdjacentOnly,
            rules_enabled: true,
        }
    }
}

/// The terms behind one transition's cost.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionBreakdown {
    pub from: String,
    pub to: String,
    pub resource_cost: EffectSize,
    pub fired_rules: Vec<(RuleId, EffectSize)>,
    pub total: EffectSize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CostError {
    #[error("ordering is not a linear extension: {0}")]
    NotAnExtension(#[from] ExtensionError),
}

/// Whether `cur` shares a modality or resource with `other`.
fn practiced(other: &Task, cur: &Task) -> bool {
    other.modality == cur.modality || other.resource == cur.resource
}

impl CostModel {
    pub fn without_rules() -> Self {
        CostModel {
            rules_enabled: false,
            ..CostModel::default()
        }
    }

    pub fn with_scope(mut self, scope: RecentPracticeScope) -> Self {
        self.recent_practice_scope = scope;
        self
    }

    pub fn resource_switch_cost(&self, from: CognitiveResource, to: CognitiveResource) -> EffectSize {
        self.matrix.get(from, to)
    }

    /// Rules that fire when moving from `prev` to `cur`. `history` holds the
    /// tasks done before `cur`, ending with `prev`.
    pub fn fired_rules(&self, prev: &Task, cur: &Task, history: &[&Task]) -> Vec<(RuleId, EffectSize)> {
        if !self.rules_enabled {
            return Vec::new();
        }
        let mut fired = Vec::new();
        let mut fire = |rule: RuleId| fired.push((rule, self.rules.get(rule)));

        if prev.resource == cur.resource && prev.modality != cur.modality {
            fire(RuleId::Modality);
        }
        let recent = match self.recent_practice_scope {
            RecentPracticeScope::AdjacentOnly => practiced(prev, cur),
            RecentPracticeScope::FullHistory => practiced(prev, cur) || history.iter().any(|h| practiced(h, cur)),
        };
        if recent {
            fire(RuleId::RecentPractice);
        }
        if cur.familiarity > prev.familiarity {
            fire(RuleId::Familiarity);
        }
        if cur.complexity < prev.complexity {
            if cur.voluntary {
                fire(RuleId::VoluntaryComplexityDrop);
            } else {
                fire(RuleId::InvoluntaryComplexityDrop);
            }
        }
        fired
    }

    pub fn transition_cost(&self, prev: &Task, cur: &Task, history: &[&Task]) -> TransitionBreakdown {
        let resource_cost = self.resource_switch_cost(prev.resource, cur.resource);
        let fired_rules = self.fired_rules(prev, cur, history);
        let total = resource_cost + fired_rules.iter().map(|&(_, c)| c).sum();
        TransitionBreakdown {
            from: prev.code.clone(),
            to: cur.code.clone(),
            resource_cost,
            fired_rules,
            total,
        }
    }

    /// Total cost of an ordering and its per-transition terms. The first
    /// task is free.
    pub fn sequence_cost(
        &self,
        ordering: &TaskOrdering,
        workflow: &Workflow,
    ) -> Result<(EffectSize, Vec<TransitionBreakdown>), CostError> {
        workflow.check_extension(ordering)?;
        let tasks: Vec<&Task> = ordering
            .iter()
            .map(|c| workflow.task(c).expect("checked extension"))
            .collect();
        let breakdowns: Vec<TransitionBreakdown> = (1..tasks.len())
            .map(|i| self.transition_cost(tasks[i - 1], tasks[i], &tasks[..i]))
            .collect();
        let total = breakdowns.iter().map(|b| b.total).sum();
        Ok((total, breakdowns))
    }
}
