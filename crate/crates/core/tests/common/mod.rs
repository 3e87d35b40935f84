#![allow(dead_code)]

use std::collections::BTreeSet;

use cogseq::{CognitiveResource, Task, TaskOrdering, Workflow};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const MODALITIES: [&str; 4] = ["touchscreen", "touchscreen qwerty", "card reader", "scanner"];

/// A random concrete workflow with `n` tasks, properties drawn like the
/// check-in table, and a random DAG.
pub fn random_workflow_n(rng: &mut StdRng, n: usize) -> Workflow {
    let mut codes: Vec<String> = (0..n).map(|i| format!("T{}", (b'A' + i as u8) as char)).collect();
    codes.shuffle(rng);
    let density: f64 = rng.gen_range(0.0..0.5);
    let mut tasks = Vec::with_capacity(n);
    for (j, code) in codes.iter().enumerate() {
        let resource = CognitiveResource::ALL[rng.gen_range(0..5)];
        let modality = MODALITIES[rng.gen_range(0..MODALITIES.len())];
        let prereqs: Vec<String> = codes[..j].iter().filter(|_| rng.gen_bool(density)).cloned().collect();
        tasks.push(
            Task::new(code, resource, modality)
                .voluntary(rng.gen_bool(0.3))
                .familiarity(rng.gen_range(1..=5))
                .complexity(rng.gen_range(1..=5))
                .after(prereqs),
        );
    }
    Workflow::new(tasks, vec![])
}

pub fn random_workflow(seed: u64, max_n: usize) -> Workflow {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_n);
    random_workflow_n(&mut rng, n)
}

/// Naive recursive count of linear extensions, by code lookups.
pub fn naive_extension_count(workflow: &Workflow) -> u64 {
    fn go(workflow: &Workflow, done: &mut BTreeSet<String>) -> u64 {
        if done.len() == workflow.len() {
            return 1;
        }
        let ready: Vec<String> = workflow
            .tasks()
            .iter()
            .filter(|t| !done.contains(&t.code) && t.prerequisites.iter().all(|p| done.contains(p)))
            .map(|t| t.code.clone())
            .collect();
        let mut total = 0;
        for code in ready {
            done.insert(code.clone());
            total += go(workflow, done);
            done.remove(&code);
        }
        total
    }
    go(workflow, &mut BTreeSet::new())
}

/// A random permutation of the workflow's tasks.
pub fn random_permutation(rng: &mut StdRng, workflow: &Workflow) -> TaskOrdering {
    let mut codes: Vec<String> = workflow.codes().map(str::to_string).collect();
    codes.shuffle(rng);
    TaskOrdering(codes)
}

pub fn random_codes(rng: &mut StdRng, n: usize) -> TaskOrdering {
    let mut codes: Vec<String> = (0..n).map(|i| format!("C{i:02}")).collect();
    codes.shuffle(rng);
    TaskOrdering(codes)
}
