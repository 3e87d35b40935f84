mod common;

use std::collections::BTreeSet;

use cogseq::analysis::squared_distance;
use cogseq::{
    brute_force, consensus_ordering, count_linear_extensions, encode_workflow, enumerate_linear_extensions,
    ordering_distance, solve, Backend, CostModel, Objective, RecentPracticeScope, SolveRequest, Task, TaskOrdering,
    Valuation, VariantGroup, Workflow, DEFAULT_BRUTE_FORCE_BUDGET,
};
use common::{naive_extension_count, random_codes, random_permutation, random_workflow};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn optimum(wf: &Workflow, model: CostModel, objective: Objective) -> u64 {
    solve(&SolveRequest::new(wf.clone(), model).objective(objective)).unwrap()[0]
        .total
        .thousandths()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumerated_orderings_are_distinct_extensions(seed in any::<u64>()) {
        let wf = random_workflow(seed, 8);
        let all: Vec<TaskOrdering> = enumerate_linear_extensions(&wf, None).unwrap().collect();
        for o in &all {
            prop_assert!(wf.is_linear_extension(o));
        }
        let distinct: BTreeSet<_> = all.iter().map(|o| o.0.clone()).collect();
        prop_assert_eq!(distinct.len(), all.len());
        prop_assert_eq!(all.len() as u64, naive_extension_count(&wf));
        prop_assert_eq!(count_linear_extensions(&wf).unwrap(), all.len() as u128);
    }

    #[test]
    fn wcsp_feasibility_matches_precedence(seed in any::<u64>()) {
        let wf = random_workflow(seed, 8);
        let model = CostModel::default();
        let instance = encode_workflow(&wf, &model).unwrap();
        let mut rng = StdRng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..20 {
            let o = random_permutation(&mut rng, &wf);
            let valuation = instance.evaluate(&instance.assignment_for(&o).unwrap()).unwrap();
            if wf.is_linear_extension(&o) {
                let (total, _) = model.sequence_cost(&o, &wf).unwrap();
                prop_assert_eq!(valuation, Valuation::Cost(total));
            } else {
                prop_assert!(matches!(valuation, Valuation::Infeasible(_)), "{:?}", valuation);
            }
        }
    }

    #[test]
    fn rules_off_cost_depends_only_on_resources(seed in any::<u64>()) {
        let wf = random_workflow(seed, 8);
        let model = CostModel::without_rules();
        for o in enumerate_linear_extensions(&wf, Some(50)).unwrap() {
            let (total, breakdowns) = model.sequence_cost(&o, &wf).unwrap();
            let expected: u64 = o
                .0
                .windows(2)
                .map(|w| {
                    let a = wf.task(&w[0]).unwrap().resource;
                    let b = wf.task(&w[1]).unwrap().resource;
                    model.resource_switch_cost(a, b).thousandths()
                })
                .sum();
            prop_assert_eq!(total.thousandths(), expected);
            prop_assert!(breakdowns.iter().all(|b| b.fired_rules.is_empty()));
        }
    }

    #[test]
    fn transition_never_below_resource_cost(seed in any::<u64>()) {
        let wf = random_workflow(seed, 8);
        for scope in [RecentPracticeScope::AdjacentOnly, RecentPracticeScope::FullHistory] {
            let model = CostModel::default().with_scope(scope);
            for o in enumerate_linear_extensions(&wf, Some(50)).unwrap() {
                let (total, breakdowns) = model.sequence_cost(&o, &wf).unwrap();
                prop_assert_eq!(breakdowns.len(), o.len().saturating_sub(1));
                for b in &breakdowns {
                    prop_assert!(b.total >= b.resource_cost);
                    let rules: u64 = b.fired_rules.iter().map(|(_, c)| c.thousandths()).sum();
                    prop_assert_eq!(b.total.thousandths(), b.resource_cost.thousandths() + rules);
                }
                prop_assert_eq!(breakdowns.iter().map(|b| b.total).sum::<cogseq::EffectSize>(), total);
            }
        }
    }

    #[test]
    fn full_history_cost_dominates_adjacent(seed in any::<u64>()) {
        let wf = random_workflow(seed, 8);
        let adjacent = CostModel::default();
        let full = CostModel::default().with_scope(RecentPracticeScope::FullHistory);
        for o in enumerate_linear_extensions(&wf, Some(50)).unwrap() {
            let (a, _) = adjacent.sequence_cost(&o, &wf).unwrap();
            let (f, _) = full.sequence_cost(&o, &wf).unwrap();
            prop_assert!(f >= a);
        }
    }

    #[test]
    fn full_history_prefix_is_unchanged_by_suffix(seed in any::<u64>()) {
        let wf = random_workflow(seed, 8);
        let model = CostModel::default().with_scope(RecentPracticeScope::FullHistory);
        for o in enumerate_linear_extensions(&wf, Some(20)).unwrap() {
            let (_, full) = model.sequence_cost(&o, &wf).unwrap();
            for cut in 1..o.len() {
                let tasks: Vec<&Task> = o.iter().map(|c| wf.task(c).unwrap()).collect();
                let b = model.transition_cost(tasks[cut - 1], tasks[cut], &tasks[..cut]);
                prop_assert_eq!(&b, &full[cut - 1]);
            }
        }
    }

    #[test]
    fn search_matches_exhaustive_oracle(seed in any::<u64>()) {
        let wf = random_workflow(seed, 7);
        for scope in [RecentPracticeScope::AdjacentOnly, RecentPracticeScope::FullHistory] {
            let model = CostModel::default().with_scope(scope);
            for objective in [Objective::Minimize, Objective::Maximize] {
                let oracle = brute_force(&wf, &model, objective, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
                let bnb = solve(&SolveRequest::new(wf.clone(), model).objective(objective)).unwrap();
                prop_assert_eq!(bnb[0].total, oracle.total);
                prop_assert_eq!(&bnb[0].ordering, &oracle.ordering);
            }
        }
    }

    #[test]
    fn top_k_agrees_across_backends_and_workers(seed in any::<u64>(), k in 1usize..6) {
        let wf = random_workflow(seed, 7);
        let model = CostModel::default();
        let base = SolveRequest::new(wf.clone(), model).k(k);
        let exhaustive = solve(&base.clone().backend(Backend::Exhaustive)).unwrap();
        let bnb = solve(&base.clone()).unwrap();
        let parallel = solve(&base.clone().workers(4)).unwrap();
        let summary = |v: &[cogseq::Solution]| v.iter().map(|s| (s.total, s.ordering.clone())).collect::<Vec<_>>();
        prop_assert_eq!(summary(&bnb), summary(&exhaustive));
        prop_assert_eq!(summary(&parallel), summary(&exhaustive));
        let expected_len = (count_linear_extensions(&wf).unwrap() as usize).min(k);
        prop_assert_eq!(bnb.len(), expected_len);
        prop_assert!(bnb.windows(2).all(|w| w[0].total <= w[1].total));
    }

    #[test]
    fn extra_precedence_never_lowers_the_minimum(seed in any::<u64>()) {
        let wf = random_workflow(seed, 7);
        let model = CostModel::default();
        let before = optimum(&wf, model, Objective::Minimize);
        let max_before = optimum(&wf, model, Objective::Maximize);

        // Add an edge consistent with some linear extension so the result stays acyclic.
        let reference = enumerate_linear_extensions(&wf, Some(1)).unwrap().next().unwrap();
        if reference.len() < 2 {
            return Ok(());
        }
        let mut rng = StdRng::seed_from_u64(seed);
        let i = rng.gen_range(0..reference.len() - 1);
        let j = rng.gen_range(i + 1..reference.len());
        let mut tasks = wf.tasks().to_vec();
        let target = tasks.iter_mut().find(|t| t.code == reference.0[j]).unwrap();
        target.prerequisites.insert(reference.0[i].clone());
        let tighter = Workflow::new(tasks, vec![]);
        prop_assert!(tighter.validate().is_valid());

        prop_assert!(optimum(&tighter, model, Objective::Minimize) >= before);
        prop_assert!(optimum(&tighter, model, Objective::Maximize) <= max_before);
    }

    #[test]
    fn distance_is_a_metric(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_codes(&mut rng, n);
        let b = random_codes(&mut rng, n);
        let c = random_codes(&mut rng, n);
        let ab = ordering_distance(&a, &b).unwrap();
        prop_assert_eq!(ordering_distance(&a, &a).unwrap(), 0.0);
        prop_assert_eq!(ab, ordering_distance(&b, &a).unwrap());
        prop_assert_eq!(ab == 0.0, a == b);
        prop_assert!(ab <= ordering_distance(&a, &c).unwrap() + ordering_distance(&c, &b).unwrap() + 1e-9);
        prop_assert_eq!(squared_distance(&a, &b).unwrap() % 2, 0);
    }

    #[test]
    fn consensus_is_a_fixed_point_permutation(seed in any::<u64>(), n in 1usize..=10, m in 1usize..=6) {
        let mut rng = StdRng::seed_from_u64(seed);
        let sample: Vec<TaskOrdering> = (0..m).map(|_| random_codes(&mut rng, n)).collect();
        let c = consensus_ordering(&sample).unwrap();
        let mut got = c.0.clone();
        got.sort();
        let mut want = sample[0].0.clone();
        want.sort();
        prop_assert_eq!(got, want);
        prop_assert_eq!(consensus_ordering(&vec![c.clone(); m]).unwrap(), c.clone());
        prop_assert_eq!(consensus_ordering(std::slice::from_ref(&sample[0])).unwrap(), sample[0].clone());
    }

    #[test]
    fn instantiation_keeps_workflows_acyclic(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let base = random_workflow(seed, 7);
        let codes: Vec<String> = base.codes().map(str::to_string).collect();
        // Turn a random task into a two-member variant group with a fresh sibling.
        let pick = &codes[rng.gen_range(0..codes.len())];
        let group = format!("G{pick}");
        let sibling = format!("{pick}X");
        let mut tasks: Vec<Task> = base
            .tasks()
            .iter()
            .map(|t| {
                let mut t = t.clone();
                if t.prerequisites.remove(pick) {
                    t.prerequisites.insert(group.clone());
                }
                t
            })
            .collect();
        let original = tasks.iter().find(|t| &t.code == pick).unwrap().clone();
        let mut twin = original.clone();
        twin.code = sibling.clone();
        twin.complexity = rng.gen_range(1..=5);
        tasks.push(twin);
        let wf = Workflow::new(tasks, vec![VariantGroup::new(&group, [pick.as_str(), sibling.as_str()])]);
        prop_assert!(wf.validate().is_valid(), "{}", wf.validate());

        for member in [pick.as_str(), sibling.as_str()] {
            let concrete = wf.instantiate_variant(&group, member).unwrap();
            prop_assert!(concrete.validate().is_valid());
            prop_assert!(concrete.is_concrete());
            prop_assert_eq!(concrete.len(), base.len());
            prop_assert!(concrete.tasks().iter().all(|t| !t.prerequisites.contains(&group)));
            prop_assert_eq!(
                count_linear_extensions(&concrete).unwrap(),
                count_linear_extensions(&base).unwrap()
            );
        }
    }
}

#[test]
fn aups_extension_count_matches_naive_counter() {
    let wf = cogseq::fixtures::checkin_with("AUPS");
    assert_eq!(naive_extension_count(&wf), 114_624);
    assert_eq!(count_linear_extensions(&wf).unwrap(), 114_624);
}
