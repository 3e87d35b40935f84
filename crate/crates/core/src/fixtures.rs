//! Bundled airport self-service check-in workflows.
//!
//! `checkin-full.json` has all sixteen task rows, with the four
//! authentication mechanisms grouped under `AUTH`. `checkin-validation.json`
//! is the ten-task subset without language selection, authentication and
//! return-seat selection, along with the optimal, pessimal and expert
//! orderings that go with it.

use crate::io::{parse_workflow, LoadedWorkflow};
use crate::workflow::{TaskOrdering, Workflow};

pub const CHECKIN_FULL_JSON: &str = include_str!("../fixtures/checkin-full.json");
pub const CHECKIN_VALIDATION_JSON: &str = include_str!("../fixtures/checkin-validation.json");

/// The authentication mechanisms, cheapest first under the default model.
pub const AUTH_MEMBERS: [&str; 4] = ["AUPS", "AUCC", "AUPI", "AUPW"];

/// Resolves `builtin:checkin-full` style names.
pub fn builtin(name: &str) -> Option<&'static str> {
    match name.trim_end_matches(".json") {
        "checkin-full" => Some(CHECKIN_FULL_JSON),
        "checkin-validation" => Some(CHECKIN_VALIDATION_JSON),
        _ => None,
    }
}

pub fn checkin_full_document() -> LoadedWorkflow {
    parse_workflow(CHECKIN_FULL_JSON, true, "checkin-full.json").expect("bundled fixture")
}

pub fn checkin_validation_document() -> LoadedWorkflow {
    parse_workflow(CHECKIN_VALIDATION_JSON, true, "checkin-validation.json").expect("bundled fixture")
}

pub fn checkin_full() -> Workflow {
    checkin_full_document().workflow
}

pub fn checkin_validation() -> Workflow {
    checkin_validation_document().workflow
}

/// Full check-in with `AUTH` resolved to `member`.
pub fn checkin_with(member: &str) -> Workflow {
    checkin_full().instantiate_variant("AUTH", member).expect("AUTH member")
}

pub fn known_ordering(doc: &LoadedWorkflow, name: &str) -> TaskOrdering {
    doc.known_orderings
        .get(name)
        .cloned()
        .unwrap_or_else(|| panic!("fixture has no ordering {name}"))
}
