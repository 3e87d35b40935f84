//! Tasks, precedence constraints and variant groups.
//!
//! A [`Workflow`] is a set of tasks partially ordered by their prerequisite
//! lists. A prerequisite may name another task or a [`VariantGroup`], an
//! abstract slot (such as authentication) that is filled by exactly one of
//! several interchangeable tasks. A workflow with variant groups must be
//! instantiated with [`Workflow::instantiate_variant`] before it can be
//! ordered or solved.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest task set the bitmask-based routines accept.
pub const MAX_TASKS: usize = 64;

/// The dominant cognitive mechanism a task engages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CognitiveResource {
    /// Visual working memory.
    #[serde(rename = "VWM")]
    VisualWorkingMemory,
    /// Procedural memory.
    #[serde(rename = "PM")]
    ProceduralMemory,
    /// Declarative recall.
    #[serde(rename = "DR")]
    DeclarativeRecall,
    /// Semantic recognition.
    #[serde(rename = "SR")]
    SemanticRecognition,
    /// Episodic recognition.
    #[serde(rename = "ER")]
    EpisodicRecognition,
}

impl CognitiveResource {
    /// Matrix order: VWM, PM, DR, SR, ER.
    pub const ALL: [CognitiveResource; 5] = [
        CognitiveResource::VisualWorkingMemory,
        CognitiveResource::ProceduralMemory,
        CognitiveResource::DeclarativeRecall,
        CognitiveResource::SemanticRecognition,
        CognitiveResource::EpisodicRecognition,
    ];

    pub fn index(self) -> usize {
        match self {
            CognitiveResource::VisualWorkingMemory => 0,
            CognitiveResource::ProceduralMemory => 1,
            CognitiveResource::DeclarativeRecall => 2,
            CognitiveResource::SemanticRecognition => 3,
            CognitiveResource::EpisodicRecognition => 4,
        }
    }

    pub fn abbreviation(self) -> &'static str {
        match self {
            CognitiveResource::VisualWorkingMemory => "VWM",
            CognitiveResource::ProceduralMemory => "PM",
            CognitiveResource::DeclarativeRecall => "DR",
            CognitiveResource::SemanticRecognition => "SR",
            CognitiveResource::EpisodicRecognition => "ER",
        }
    }
}

impl fmt::Display for CognitiveResource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbreviation())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown cognitive resource '{0}' (expected one of VWM, PM, DR, SR, ER)")]
pub struct UnknownResource(pub String);

impl FromStr for CognitiveResource {
    type Err = UnknownResource;

    /// Accepts the abbreviations and the long names used in task property
    /// tables. "PWM" is accepted as an alias of PM and the bare "Episodic"
    /// shorthand as an alias of ER.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase();
        let r = match norm.as_str() {
            "vwm" | "visual working memory" => CognitiveResource::VisualWorkingMemory,
            "pm" | "pwm" | "procedural memory" => CognitiveResource::ProceduralMemory,
            "dr" | "declarative recall" => CognitiveResource::DeclarativeRecall,
            "sr" | "semantic recognition" => CognitiveResource::SemanticRecognition,
            "er" | "episodic recognition" | "episodic" => CognitiveResource::EpisodicRecognition,
            _ => return Err(UnknownResource(s.to_string())),
        };
        Ok(r)
    }
}

/// Physical response channel of a task, compared after lowercasing and
/// trimming.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modality(String);

impl Modality {
    pub fn new(label: &str) -> Self {
        Modality(label.trim().to_lowercase())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One workflow step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Task {
    pub code: String,
    pub name: String,
    pub resource: CognitiveResource,
    pub modality: Modality,
    pub voluntary: bool,
    /// 1 (low) to 5 (high).
    pub familiarity: u8,
    /// 1 (low) to 5 (high).
    pub complexity: u8,
    /// Task codes or variant-group codes that must be completed first.
    pub prerequisites: BTreeSet<String>,
}

impl Task {
    /// A task with mid-scale familiarity and complexity and no prerequisites.
    pub fn new(code: &str, resource: CognitiveResource, modality: &str) -> Self {
        Task {
            code: code.to_string(),
            name: code.to_string(),
            resource,
            modality: Modality::new(modality),
            voluntary: false,
            familiarity: 3,
            complexity: 3,
            prerequisites: BTreeSet::new(),
        }
    }

    pub fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn voluntary(mut self, voluntary: bool) -> Self {
        self.voluntary = voluntary;
        self
    }

    pub fn familiarity(mut self, familiarity: u8) -> Self {
        self.familiarity = familiarity;
        self
    }

    pub fn complexity(mut self, complexity: u8) -> Self {
        self.complexity = complexity;
        self
    }

    pub fn after<I, S>(mut self, prerequisites: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.prerequisites.extend(prerequisites.into_iter().map(Into::into));
        self
    }
}

/// A set of interchangeable tasks standing in for one abstract step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantGroup {
    pub code: String,
    pub members: BTreeSet<String>,
}

impl VariantGroup {
    pub fn new<I, S>(code: &str, members: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        VariantGroup {
            code: code.to_string(),
            members: members.into_iter().map(Into::into).collect(),
        }
    }
}

/// A sequence of task codes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TaskOrdering(pub Vec<String>);

impl TaskOrdering {
    pub fn new<I, S>(codes: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        TaskOrdering(codes.into_iter().map(Into::into).collect())
    }

    /// Parses a comma- or whitespace-separated code list.
    pub fn parse(text: &str) -> Self {
        TaskOrdering(
            text.split(|c: char| c == ',' || c.is_whitespace())
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect(),
        )
    }

    pub fn codes(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl fmt::Display for TaskOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(","))
    }
}

/// A structural problem found by [`Workflow::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyCode,
    DuplicateCode(String),
    SelfPrerequisite(String),
    UnknownPrerequisite {
        task: String,
        prerequisite: String,
    },
    OutOfRange {
        task: String,
        property: &'static str,
        value: u8,
    },
    EmptyGroup(String),
    GroupCodeClash(String),
    DuplicateGroup(String),
    UnknownGroupMember {
        group: String,
        member: String,
    },
    MemberInSeveralGroups(String),
    MemberReferencedDirectly {
        task: String,
        member: String,
    },
    /// A closed path of codes; the first code is repeated at the end.
    Cycle(Vec<String>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCode => write!(f, "task with an empty code"),
            Violation::DuplicateCode(c) => write!(f, "duplicate task code {c}"),
            Violation::SelfPrerequisite(c) => write!(f, "task {c} lists itself as a prerequisite"),
            Violation::UnknownPrerequisite { task, prerequisite } => {
                write!(f, "task {task} has unknown prerequisite {prerequisite}")
            }
            Violation::OutOfRange { task, property, value } => {
                write!(f, "task {task} has {property} {value}, expected 1..=5")
            }
            Violation::EmptyGroup(g) => write!(f, "variant group {g} has no members"),
            Violation::GroupCodeClash(g) => {
                write!(f, "variant group code {g} is also a task code")
            }
            Violation::DuplicateGroup(g) => write!(f, "duplicate variant group {g}"),
            Violation::UnknownGroupMember { group, member } => {
                write!(f, "variant group {group} names unknown task {member}")
            }
            Violation::MemberInSeveralGroups(m) => {
                write!(f, "task {m} belongs to more than one variant group")
            }
            Violation::MemberReferencedDirectly { task, member } => write!(
                f,
                "task {task} lists variant member {member} directly instead of its group"
            ),
            Violation::Cycle(path) => write!(f, "precedence cycle {}", path.join(" -> ")),
        }
    }
}

/// Outcome of validation; empty when the workflow is well formed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkflowError {
    #[error("workflow has no variant group {0}")]
    UnknownGroup(String),
    #[error("{member} is not a member of variant group {group}")]
    NotAMember { group: String, member: String },
    #[error("workflow still has variant groups ({0}); instantiate them first")]
    NotConcrete(String),
    #[error("workflow is invalid: {0}")]
    Invalid(String),
    #[error("workflow has {0} tasks; at most {MAX_TASKS} are supported")]
    TooLarge(usize),
}

/// Why an ordering is not a linear extension.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("task {0} is not part of the workflow")]
    UnknownTask(String),
    #[error("task {0} appears more than once")]
    Duplicated(String),
    #[error("task {0} is missing from the ordering")]
    Missing(String),
    #[error("{task} is placed before its prerequisite {prerequisite}")]
    PrecedenceViolated { prerequisite: String, task: String },
    #[error(transparent)]
    Workflow(#[from] WorkflowError),
}

/// Tasks plus variant groups. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Workflow {
    tasks: Vec<Task>,
    variant_groups: Vec<VariantGroup>,
    index: BTreeMap<String, usize>,
}

impl Workflow {
    /// Builds a workflow without checking it; see [`Workflow::validate`].
    /// Tasks are kept in ascending code order; when a code repeats the
    /// first occurrence is the one looked up.
    pub fn new(mut tasks: Vec<Task>, variant_groups: Vec<VariantGroup>) -> Self {
        tasks.sort_by(|a, b| a.code.cmp(&b.code));
        let mut index = BTreeMap::new();
        for (i, t) in tasks.iter().enumerate() {
            index.entry(t.code.clone()).or_insert(i);
        }
        Workflow {
            tasks,
            variant_groups,
            index,
        }
    }

    pub fn tasks(&self) -> &[Task] {
        &self.tasks
    }

    pub fn variant_groups(&self) -> &[VariantGroup] {
        &self.variant_groups
    }

    pub fn task(&self, code: &str) -> Option<&Task> {
        self.index.get(code).map(|&i| &self.tasks[i])
    }

    pub fn group(&self, code: &str) -> Option<&VariantGroup> {
        self.variant_groups.iter().find(|g| g.code == code)
    }

    pub fn len(&self) -> usize {
        self.tasks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tasks.is_empty()
    }

    pub fn is_concrete(&self) -> bool {
        self.variant_groups.is_empty()
    }

    /// Task codes in ascending order.
    pub fn codes(&self) -> impl Iterator<Item = &str> {
        self.tasks.iter().map(|t| t.code.as_str())
    }

    /// Every (prerequisite, task) pair as written, group codes included.
    pub fn prerequisite_edges(&self) -> Vec<(String, String)> {
        self.tasks
            .iter()
            .flat_map(|t| t.prerequisites.iter().map(move |p| (p.clone(), t.code.clone())))
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let mut seen = BTreeSet::new();
        for t in &self.tasks {
            if t.code.trim().is_empty() {
                violations.push(Violation::EmptyCode);
            } else if !seen.insert(t.code.as_str()) {
                violations.push(Violation::DuplicateCode(t.code.clone()));
            }
            for (property, value) in [("familiarity", t.familiarity), ("complexity", t.complexity)] {
                if !(1..=5).contains(&value) {
                    violations.push(Violation::OutOfRange {
                        task: t.code.clone(),
                        property,
                        value,
                    });
                }
            }
        }

        let mut group_codes = BTreeSet::new();
        let mut membership: BTreeMap<&str, &str> = BTreeMap::new();
        for g in &self.variant_groups {
            if !group_codes.insert(g.code.as_str()) {
                violations.push(Violation::DuplicateGroup(g.code.clone()));
            }
            if self.index.contains_key(&g.code) {
                violations.push(Violation::GroupCodeClash(g.code.clone()));
            }
            if g.members.is_empty() {
                violations.push(Violation::EmptyGroup(g.code.clone()));
            }
            for m in &g.members {
                if !self.index.contains_key(m) {
                    violations.push(Violation::UnknownGroupMember {
                        group: g.code.clone(),
                        member: m.clone(),
                    });
                }
                if membership.insert(m, &g.code).is_some() {
                    violations.push(Violation::MemberInSeveralGroups(m.clone()));
                }
            }
        }

        for t in &self.tasks {
            for p in &t.prerequisites {
                if *p == t.code {
                    violations.push(Violation::SelfPrerequisite(t.code.clone()));
                } else if membership.contains_key(p.as_str()) {
                    violations.push(Violation::MemberReferencedDirectly {
                        task: t.code.clone(),
                        member: p.clone(),
                    });
                } else if !self.index.contains_key(p) && !group_codes.contains(p.as_str()) {
                    violations.push(Violation::UnknownPrerequisite {
                        task: t.code.clone(),
                        prerequisite: p.clone(),
                    });
                }
            }
        }

        if let Some(cycle) = self.find_cycle() {
            violations.push(Violation::Cycle(cycle));
        }

        ValidationReport { violations }
    }

    /// Predecessor codes of a task with every group reference expanded to
    /// all of the group's members.
    fn expanded_prerequisites<'a>(&'a self, task: &'a Task) -> impl Iterator<Item = &'a str> {
        task.prerequisites.iter().flat_map(move |p| match self.group(p) {
            Some(g) => g.members.iter().map(String::as_str).collect::<Vec<_>>(),
            None => vec![p.as_str()],
        })
    }

    /// Depth-first search over the expanded precedence relation.
    fn find_cycle(&self) -> Option<Vec<String>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut marks = vec![Mark::New; self.tasks.len()];

        for root in 0..self.tasks.len() {
            if marks[root] != Mark::New {
                continue;
            }
            // (task index, remaining predecessor list)
            let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
            let preds = |i: usize| -> Vec<usize> {
                self.expanded_prerequisites(&self.tasks[i])
                    .filter_map(|c| self.index.get(c).copied())
                    .collect()
            };
            marks[root] = Mark::Active;
            stack.push((root, preds(root)));
            while let Some((node, pending)) = stack.last_mut() {
                let node = *node;
                match pending.pop() {
                    Some(next) => match marks[next] {
                        Mark::New => {
                            marks[next] = Mark::Active;
                            let p = preds(next);
                            stack.push((next, p));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|(n, _)| *n == next).unwrap();
                            // Walking predecessors, so reverse to get execution order.
                            let mut path: Vec<String> = stack[start..]
                                .iter()
                                .map(|(n, _)| self.tasks[*n].code.clone())
                                .collect();
                            path.reverse();
                            path.push(path[0].clone());
                            return Some(path);
                        }
                        Mark::Done => {}
                    },
                    None => {
                        marks[node] = Mark::Done;
                        stack.pop();
                    }
                }
            }
        }
        None
    }

    /// Replaces a variant group by one of its members: the other members are
    /// dropped and references to the group are rewritten to the member.
    pub fn instantiate_variant(&self, group: &str, member: &str) -> Result<Workflow, WorkflowError> {
        let g = self
            .group(group)
            .ok_or_else(|| WorkflowError::UnknownGroup(group.to_string()))?;
        if !g.members.contains(member) {
            return Err(WorkflowError::NotAMember {
                group: group.to_string(),
                member: member.to_string(),
            });
        }
        let tasks = self
            .tasks
            .iter()
            .filter(|t| t.code == member || !g.members.contains(&t.code))
            .map(|t| {
                let mut t = t.clone();
                if t.prerequisites.remove(group) {
                    t.prerequisites.insert(member.to_string());
                }
                t
            })
            .collect();
        let groups = self
            .variant_groups
            .iter()
            .filter(|other| other.code != group)
            .cloned()
            .collect();
        Ok(Workflow::new(tasks, groups))
    }

    /// Applies `--variant`-style choices in order.
    pub fn instantiate_all<'a, I>(&self, choices: I) -> Result<Workflow, WorkflowError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut wf = self.clone();
        for (group, member) in choices {
            wf = wf.instantiate_variant(group, member)?;
        }
        Ok(wf)
    }

    /// Rejects workflows that still carry variant groups or fail validation.
    pub fn ensure_concrete(&self) -> Result<(), WorkflowError> {
        if !self.is_concrete() {
            let codes: Vec<_> = self.variant_groups.iter().map(|g| g.code.as_str()).collect();
            return Err(WorkflowError::NotConcrete(codes.join(", ")));
        }
        let report = self.validate();
        if !report.is_valid() {
            return Err(WorkflowError::Invalid(report.to_string()));
        }
        if self.tasks.len() > MAX_TASKS {
            return Err(WorkflowError::TooLarge(self.tasks.len()));
        }
        Ok(())
    }

    /// Checks that `ordering` is a linear extension, reporting the first
    /// problem found.
    pub fn check_extension(&self, ordering: &TaskOrdering) -> Result<(), ExtensionError> {
        if !self.is_concrete() {
            return Err(WorkflowError::NotConcrete(
                self.variant_groups
                    .iter()
                    .map(|g| g.code.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            )
            .into());
        }
        let mut position = BTreeMap::new();
        for (i, code) in ordering.iter().enumerate() {
            if self.task(code).is_none() {
                return Err(ExtensionError::UnknownTask(code.to_string()));
            }
            if position.insert(code, i).is_some() {
                return Err(ExtensionError::Duplicated(code.to_string()));
            }
        }
        if let Some(t) = self.tasks.iter().find(|t| !position.contains_key(t.code.as_str())) {
            return Err(ExtensionError::Missing(t.code.clone()));
        }
        for code in ordering.iter() {
            let task = self.task(code).unwrap();
            for p in &task.prerequisites {
                match position.get(p.as_str()) {
                    Some(&pi) if pi < position[code] => {}
                    _ => {
                        return Err(ExtensionError::PrecedenceViolated {
                            prerequisite: p.clone(),
                            task: code.to_string(),
                        })
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_linear_extension(&self, ordering: &TaskOrdering) -> bool {
        self.check_extension(ordering).is_ok()
    }
}

/// A concrete workflow indexed by ascending code, with predecessor bitmasks.
#[derive(Debug, Clone)]
pub struct PrecedenceGraph {
    codes: Vec<String>,
    preds: Vec<u64>,
}

impl PrecedenceGraph {
    pub fn new(workflow: &Workflow) -> Result<Self, WorkflowError> {
        workflow.ensure_concrete()?;
        let codes: Vec<String> = workflow.codes().map(str::to_string).collect();
        let preds = workflow
            .tasks()
            .iter()
            .map(|t| {
                t.prerequisites.iter().fold(0u64, |mask, p| {
                    mask | 1u64 << codes.binary_search(p).expect("validated prerequisite")
                })
            })
            .collect();
        Ok(PrecedenceGraph { codes, preds })
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[String] {
        &self.codes
    }

    pub fn code(&self, i: usize) -> &str {
        &self.codes[i]
    }

    /// Direct predecessors of task `i`.
    pub fn preds(&self, i: usize) -> u64 {
        self.preds[i]
    }

    pub fn full_mask(&self) -> u64 {
        if self.codes.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.codes.len()) - 1
        }
    }

    /// Tasks not in `done` whose predecessors are all in `done`.
    pub fn eligible(&self, done: u64) -> u64 {
        let mut mask = 0;
        for i in 0..self.codes.len() {
            if done & (1 << i) == 0 && self.preds[i] & !done == 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// For each task, the set of tasks that must come after it.
    pub fn descendants(&self) -> Vec<u64> {
        let n = self.codes.len();
        let mut desc = vec![0u64; n];
        // Fixed point over the direct edges; n is small.
        let mut changed = true;
        while changed {
            changed = false;
            for t in 0..n {
                for p in bits(self.preds[t]) {
                    let add = desc[t] | 1 << t;
                    if desc[p] | add != desc[p] {
                        desc[p] |= add;
                        changed = true;
                    }
                }
            }
        }
        desc
    }

    /// Number of linear extensions, by dynamic programming over completed
    /// subsets. Saturates at `u128::MAX`.
    pub fn count_extensions(&self) -> u128 {
        let n = self.codes.len();
        if n == 0 {
            return 1;
        }
        let mut memo: BTreeMap<u64, u128> = BTreeMap::new();
        fn go(g: &PrecedenceGraph, done: u64, memo: &mut BTreeMap<u64, u128>) -> u128 {
            if done == g.full_mask() {
                return 1;
            }
            if let Some(&c) = memo.get(&done) {
                return c;
            }
            let mut total: u128 = 0;
            for i in bits(g.eligible(done)) {
                total = total.saturating_add(go(g, done | 1 << i, memo));
            }
            memo.insert(done, total);
            total
        }
        go(self, 0, &mut memo)
    }
}

/// Iterates the set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Lexicographic-by-code stream of every linear extension.
pub struct LinearExtensions {
    graph: PrecedenceGraph,
    prefix: Vec<usize>,
    done: u64,
    // Per depth: eligible tasks not yet tried.
    pending: Vec<u64>,
    started: bool,
}

impl LinearExtensions {
    fn new(graph: PrecedenceGraph) -> Self {
        LinearExtensions {
            graph,
            prefix: Vec::new(),
            done: 0,
            pending: Vec::new(),
            started: false,
        }
    }
}

impl Iterator for LinearExtensions {
    type Item = TaskOrdering;

    fn next(&mut self) -> Option<TaskOrdering> {
        let n = self.graph.len();
        if !self.started {
            self.started = true;
            if n == 0 {
                return Some(TaskOrdering::default());
            }
            self.pending.push(self.graph.eligible(0));
        }
        while let Some(top) = self.pending.last_mut() {
            if *top == 0 {
                self.pending.pop();
                if let Some(last) = self.prefix.pop() {
                    self.done &= !(1 << last);
                }
                continue;
            }
            let i = top.trailing_zeros() as usize;
            *top &= *top - 1;
            self.prefix.push(i);
            self.done |= 1 << i;
            if self.prefix.len() == n {
                let out = TaskOrdering(self.prefix.iter().map(|&j| self.graph.code(j).to_string()).collect());
                self.prefix.pop();
                self.done &= !(1 << i);
                return Some(out);
            }
            let next = self.graph.eligible(self.done);
            self.pending.push(next);
        }
        None
    }
}

/// Every linear extension of a concrete workflow, optionally truncated.
pub fn enumerate_linear_extensions(
    workflow: &Workflow,
    limit: Option<usize>,
) -> Result<std::iter::Take<LinearExtensions>, WorkflowError> {
    let graph = PrecedenceGraph::new(workflow)?;
    Ok(LinearExtensions::new(graph).take(limit.unwrap_or(usize::MAX)))
}

/// Count-only mode of [`enumerate_linear_extensions`].
pub fn count_linear_extensions(workflow: &Workflow) -> Result<u128, WorkflowError> {
    Ok(PrecedenceGraph::new(workflow)?.count_extensions())
}
