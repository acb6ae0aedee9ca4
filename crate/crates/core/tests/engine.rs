use gloa_core::engine::{one_way_crossover, recombine, select_leader, SampledRates};
use gloa_core::{BoundPolicy, Candidate, FnObjective, Gloa, GloaConfig, Interval, RandomTerm, Rate, Rates, RunState};
use proptest::prelude::*;

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn wavy(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v + (5.0 * v).sin()).sum()
}

fn config(groups: usize, members: usize, dim: usize, seed: u64, clip: bool, symmetric: bool) -> GloaConfig {
    let rates = Rates {
        r1: Rate::between(0.5, 0.9),
        r2: Rate::Fixed(0.2),
        r3: Rate::between(0.0, 0.2),
        complementary: false,
    };
    let mut c = GloaConfig::new(groups, members, rates, vec![Interval::new(-3.0, 5.0); dim]).with_seed(seed);
    c.bound_policy = if clip { BoundPolicy::Clip } else { BoundPolicy::FreeAfterInit };
    c.random_term = if symmetric { RandomTerm::Symmetric } else { RandomTerm::Domain };
    c.max_iterations = 15;
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn best_never_worsens(
        groups in 1usize..5, members in 1usize..8, dim in 1usize..6, seed: u64, clip: bool, symmetric: bool,
    ) {
        let c = config(groups, members, dim, seed, clip, symmetric);
        let obj = FnObjective::new(dim, wavy);
        let r = Gloa::new(&c, &obj).run().unwrap();
        prop_assert_eq!(r.best_fitness_per_iteration.len(), c.max_iterations + 1);
        prop_assert!(r.best_fitness_per_iteration.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(Some(r.best_fitness()), r.best_fitness_per_iteration.last().copied());
    }

    #[test]
    fn leaders_and_bounds_hold_after_every_step(
        groups in 1usize..5, members in 1usize..8, dim in 1usize..6, seed: u64, symmetric: bool,
    ) {
        let c = config(groups, members, dim, seed, true, symmetric);
        let obj = FnObjective::new(dim, wavy);
        let mut state = RunState::init(&c, &obj, None).unwrap();
        for it in 1..=10 {
            state.step(&c, &obj, it).unwrap();
            for g in &state.groups.groups {
                prop_assert_eq!(select_leader(&g.members).unwrap(), g.leader);
                for m in &g.members {
                    prop_assert!(m.values.iter().all(|v| (-3.0..=5.0).contains(v)));
                }
            }
        }
    }

    #[test]
    fn parallel_matches_sequential(groups in 2usize..6, members in 1usize..6, dim in 1usize..5, seed: u64) {
        let c = config(groups, members, dim, seed, false, true);
        let obj = FnObjective::new(dim, wavy);
        let a = Gloa::new(&c, &obj).run().unwrap();
        let b = Gloa::new(&c.clone().with_parallel(true), &obj).run().unwrap();
        prop_assert_eq!(a.best_candidate, b.best_candidate);
        prop_assert_eq!(a.best_fitness_per_iteration, b.best_fitness_per_iteration);
        prop_assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn crossover_on_flat_objective_changes_nothing(groups in 2usize..5, members in 1usize..6, dim in 1usize..6, seed: u64) {
        let mut c = config(groups, members, dim, seed, true, false);
        c.transfer_mutation = true;
        let obj = FnObjective::new(dim, |_: &[f64]| 0.0);
        let mut state = RunState::init(&c, &obj, None).unwrap();
        let before = state.groups.clone();
        let t = one_way_crossover(&mut state.groups, &obj, &c, &mut state.streams.crossover).unwrap();
        prop_assert_eq!(t.accepted, 0);
        prop_assert!(t.attempted >= groups);
        prop_assert_eq!(before, state.groups);
    }

    #[test]
    fn crossover_keeps_only_strict_gains(groups in 2usize..5, members in 1usize..6, dim in 1usize..6, seed: u64) {
        let c = config(groups, members, dim, seed, true, false);
        let obj = FnObjective::new(dim, sphere);
        let mut state = RunState::init(&c, &obj, None).unwrap();
        let before = state.groups.clone();
        let t = one_way_crossover(&mut state.groups, &obj, &c, &mut state.streams.crossover).unwrap();
        let mut changed = 0;
        for (g0, g1) in before.groups.iter().zip(&state.groups.groups) {
            for (m0, m1) in g0.members.iter().zip(&g1.members) {
                if m0 != m1 {
                    changed += 1;
                    prop_assert!(m1.fitness().unwrap() < m0.fitness().unwrap());
                    prop_assert_eq!(m1.fitness().unwrap(), sphere(&m1.values));
                    let differing = m0.values.iter().zip(&m1.values).filter(|(a, b)| a != b).count();
                    prop_assert!(differing >= 1);
                }
            }
        }
        prop_assert!(changed <= t.accepted);
    }

    #[test]
    fn recombine_is_the_rate_mix(
        old in prop::collection::vec(-10.0f64..10.0, 1..8),
        r1 in 0.0f64..1.0, r2 in 0.0f64..1.0, r3 in 0.0f64..1.0,
    ) {
        let leader: Vec<f64> = old.iter().map(|v| v * 0.5 + 1.0).collect();
        let random: Vec<f64> = old.iter().map(|v| -v).collect();
        let out = recombine(&old, &leader, &random, SampledRates { r1, r2, r3 });
        for i in 0..old.len() {
            let expected = r1 * old[i] + r2 * leader[i] + r3 * random[i];
            prop_assert!((out[i] - expected).abs() <= 1e-12 * (1.0 + expected.abs()));
        }
    }

    #[test]
    fn leader_is_first_argmin(fits in prop::collection::vec(prop::sample::select(vec![0.0, 1.0, 2.0, -1.0]), 1..12)) {
        let members: Vec<Candidate> = fits.iter().map(|f| Candidate::with_fitness(vec![0.0], *f)).collect();
        let min = fits.iter().cloned().fold(f64::INFINITY, f64::min);
        prop_assert_eq!(select_leader(&members).unwrap(), fits.iter().position(|f| *f == min).unwrap());
    }
}

#[test]
fn same_seed_same_run() {
    let c = config(4, 6, 3, 99, true, false);
    let obj = FnObjective::new(3, wavy);
    let a = Gloa::new(&c, &obj).run().unwrap();
    let b = Gloa::new(&c, &obj).run().unwrap();
    assert_eq!(a.best_candidate, b.best_candidate);
    let other = Gloa::new(&c.clone().with_seed(100), &obj).run().unwrap();
    assert_ne!(a.best_fitness_per_iteration, other.best_fitness_per_iteration);
}

#[test]
fn target_stops_early() {
    let c = config(5, 10, 2, 3, true, false).with_max_iterations(2000).with_target(0.0, 1e-2);
    let obj = FnObjective::new(2, sphere);
    let r = Gloa::new(&c, &obj).run().unwrap();
    assert_eq!(r.termination_reason, gloa_core::TerminationReason::TargetReached);
    assert!(r.best_fitness() <= 1e-2);
    assert!(r.iterations_run < 2000);
}

#[test]
fn dimension_mismatch_is_an_error() {
    let c = config(2, 2, 3, 0, true, false);
    assert!(Gloa::new(&c, &FnObjective::new(4, sphere)).run().is_err());
}
