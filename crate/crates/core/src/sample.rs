//! Seeded random instance generators shared by the test suites and the
//! benchmark harness: formulas, lasso words, planning domains and plans.

use rand::prelude::*;

use crate::domain::{FiniteMemoryPlan, PlanningDomain};
use crate::ltl::{AtomSet, Formula, LassoWord, Letter};

/// Random formula with at most `max_temporal` temporal operators.
pub fn random_formula<R: Rng>(atoms: &AtomSet, max_temporal: usize, rng: &mut R) -> Formula {
    let budget = rng.gen_range(0..=max_temporal);
    random_formula_inner(atoms, budget, 3, rng)
}

fn random_formula_inner<R: Rng>(
    atoms: &AtomSet,
    temporal_budget: usize,
    depth: usize,
    rng: &mut R,
) -> Formula {
    let leaf_only = depth == 0;
    let choice = if leaf_only { rng.gen_range(0..2) } else { rng.gen_range(0..10) };
    match choice {
        0 | 1 => {
            if atoms.is_empty() || rng.gen_ratio(1, 8) {
                if rng.gen() {
                    Formula::True
                } else {
                    Formula::False
                }
            } else {
                let ids: Vec<_> = atoms.ids().collect();
                Formula::Atom(*ids.choose(rng).unwrap())
            }
        }
        2 => Formula::not(random_formula_inner(atoms, temporal_budget, depth - 1, rng)),
        3 | 4 => {
            let left_budget = rng.gen_range(0..=temporal_budget);
            let a = random_formula_inner(atoms, left_budget, depth - 1, rng);
            let b = random_formula_inner(atoms, temporal_budget - left_budget, depth - 1, rng);
            if choice == 3 {
                Formula::and(a, b)
            } else {
                Formula::or(a, b)
            }
        }
        5 => {
            let left_budget = rng.gen_range(0..=temporal_budget);
            let a = random_formula_inner(atoms, left_budget, depth - 1, rng);
            let b = random_formula_inner(atoms, temporal_budget - left_budget, depth - 1, rng);
            Formula::implies(a, b)
        }
        6 if temporal_budget > 0 => Formula::next(random_formula_inner(
            atoms,
            temporal_budget - 1,
            depth - 1,
            rng,
        )),
        7 if temporal_budget > 0 => {
            let left_budget = rng.gen_range(0..temporal_budget);
            let a = random_formula_inner(atoms, left_budget, depth - 1, rng);
            let b =
                random_formula_inner(atoms, temporal_budget - 1 - left_budget, depth - 1, rng);
            Formula::until(a, b)
        }
        8 if temporal_budget > 0 => Formula::eventually(random_formula_inner(
            atoms,
            temporal_budget - 1,
            depth - 1,
            rng,
        )),
        9 if temporal_budget > 0 => Formula::always(random_formula_inner(
            atoms,
            temporal_budget - 1,
            depth - 1,
            rng,
        )),
        _ => random_formula_inner(atoms, temporal_budget, 0, rng),
    }
}

/// Random lasso with stem and loop each at most `max_len` letters
/// (loop at least one).
pub fn random_lasso<R: Rng>(atoms: &AtomSet, max_len: usize, rng: &mut R) -> LassoWord {
    let stem_len = rng.gen_range(0..=max_len);
    let cycle_len = rng.gen_range(1..=max_len.max(1));
    let mut letter = |rng: &mut R| {
        Letter::from_atoms(atoms.ids().filter(|_| rng.gen()))
    };
    let stem = (0..stem_len).map(|_| letter(rng)).collect();
    let cycle = (0..cycle_len).map(|_| letter(rng)).collect();
    LassoWord::new(stem, cycle).expect("nonempty loop")
}

/// Random serial planning domain over atoms `p`, `q`.
pub fn random_domain<R: Rng>(max_states: usize, max_actions: usize, rng: &mut R) -> PlanningDomain {
    let n_states = rng.gen_range(1..=max_states.max(1));
    let n_actions = rng.gen_range(1..=max_actions.max(1));
    let states: Vec<String> = (0..n_states).map(|i| format!("s{i}")).collect();
    let actions: Vec<String> = (0..n_actions).map(|i| format!("a{i}")).collect();
    let atoms = AtomSet::new(["p", "q"]).unwrap();

    let mut builder = PlanningDomain::builder(atoms.clone());
    for s in &states {
        let label = Letter::from_atoms(atoms.ids().filter(|_| rng.gen_ratio(2, 5)));
        builder.state(s, label);
    }
    builder.init("s0");
    for (si, s) in states.iter().enumerate() {
        // Guarantee seriality with one mandatory action per state.
        let forced = rng.gen_range(0..n_actions);
        for (ai, a) in actions.iter().enumerate() {
            if ai != forced && !rng.gen_ratio(3, 5) {
                continue;
            }
            let mut succs: Vec<usize> = (0..n_states).filter(|_| rng.gen_ratio(1, 3)).collect();
            if succs.is_empty() {
                succs.push(rng.gen_range(0..n_states));
            }
            succs.sort_unstable();
            succs.dedup();
            let succ_names: Vec<&str> = succs.iter().map(|&i| states[i].as_str()).collect();
            builder.transition(a, s, &succ_names);
        }
        let _ = si;
    }
    builder.build().expect("generated domain is valid")
}

/// The six-memory blocks-world controller that stacks B on A and C on B,
/// unstacks them again, then waits forever; any failure along the way makes
/// it give up and wait.
pub fn blocks_build_teardown_plan(domain: &PlanningDomain) -> FiniteMemoryPlan {
    let state = |n: &str| domain.state_by_name(n).expect("blocks-world state");
    let action = |n: &str| domain.action_by_name(n).expect("blocks-world action");
    let all_table = state("A_B_C");
    let ab = state("AB_C");
    let abc = state("ABC");
    let wait = action("wait");

    let mut output = std::collections::BTreeMap::new();
    let mut update = std::collections::BTreeMap::new();
    let mut at = |m: usize, s, a, m2: usize| {
        output.insert((m, s), a);
        update.insert((m, s), m2);
    };
    at(0, all_table, action("put_B_on_A"), 1);
    at(1, ab, action("put_C_on_B"), 2);
    at(1, all_table, wait, 5); // put_B_on_A failed
    at(2, abc, action("put_C_on_table"), 3);
    at(2, all_table, wait, 5); // put_C_on_B failed
    at(3, ab, action("put_B_on_table"), 4);
    at(4, all_table, wait, 4);
    at(5, all_table, wait, 5);
    FiniteMemoryPlan::new(6, 0, output, update)
}

/// Random plan for `domain` with at most `memory` memory states. The plan is
/// built by closing the reachable (memory, state) pairs under random choices,
/// so it is always valid.
pub fn random_plan<R: Rng>(
    domain: &PlanningDomain,
    memory: usize,
    rng: &mut R,
) -> FiniteMemoryPlan {
    let memory = memory.max(1);
    let mut output = std::collections::BTreeMap::new();
    let mut update = std::collections::BTreeMap::new();
    let mut stack = vec![(0usize, domain.init())];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert((0usize, domain.init()));
    while let Some((m, s)) = stack.pop() {
        let acts = domain.applicable_actions(s);
        let a = *acts.choose(rng).expect("serial domain");
        let m2 = rng.gen_range(0..memory);
        output.insert((m, s), a);
        update.insert((m, s), m2);
        for &s2 in domain.successors(s, a) {
            if seen.insert((m2, s2)) {
                stack.push((m2, s2));
            }
        }
    }
    FiniteMemoryPlan::new(memory, 0, output, update)
}
