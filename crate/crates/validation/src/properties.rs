use gloa_core::engine::{one_way_crossover, select_leader};
use gloa_core::rng::stream;
use gloa_core::{
    BoundPolicy, FnObjective, Gloa, GloaConfig, GroupSet, Interval, Objective, RandomTerm, Rate, Rates, RunState,
};
use rand::Rng;

use crate::Verdict;

const CASES: u64 = 60;
const STEPS: usize = 25;

fn random_rate(rng: &mut impl Rng, low: f64, high: f64) -> Rate {
    if rng.gen_bool(0.5) {
        Rate::Fixed(rng.gen_range(low..=high))
    } else {
        let a = rng.gen_range(low..=high);
        Rate::between(a, rng.gen_range(low..=high))
    }
}

fn random_config(case: u64) -> GloaConfig {
    let mut rng = stream(0x5eed_0000 + case);
    let dim = rng.gen_range(1..=8);
    let rates = Rates {
        r1: random_rate(&mut rng, 0.3, 0.95),
        r2: random_rate(&mut rng, 0.0, 0.5),
        r3: random_rate(&mut rng, 0.0, 0.3),
        complementary: rng.gen_bool(0.3),
    };
    let bounds = (0..dim)
        .map(|_| {
            let lo = rng.gen_range(-10.0..0.0);
            Interval::new(lo, lo + rng.gen_range(0.5..20.0))
        })
        .collect();
    let mut c = GloaConfig::new(rng.gen_range(2..=6), rng.gen_range(2..=10), rates, bounds);
    c.random_term = if rng.gen_bool(0.5) { RandomTerm::Domain } else { RandomTerm::Symmetric };
    c.bound_policy = if rng.gen_bool(0.5) { BoundPolicy::Clip } else { BoundPolicy::FreeAfterInit };
    c.transfer_mutation = rng.gen_bool(0.5);
    c.max_iterations = STEPS;
    c.seed = rng.gen();
    c
}

fn rastrigin_like(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (v - i as f64 * 0.3).powi(2) + 2.0 * (1.0 - (3.0 * v).cos()))
        .sum()
}

fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn bits(set: &GroupSet) -> Vec<u64> {
    set.groups
        .iter()
        .flat_map(|g| &g.members)
        .flat_map(|m| m.values.iter().map(|v| v.to_bits()))
        .collect()
}

#[derive(Default)]
struct Violations {
    monotone: usize,
    leader: usize,
    bounds: usize,
    determinism: usize,
    constant_crossover: usize,
    crossover_gain: usize,
}

fn check_case(case: u64, out: &mut Violations) {
    let config = random_config(case);
    let objective = FnObjective::new(config.dimension(), rastrigin_like);

    let mut hooked = Vec::new();
    let report = Gloa::new(&config, &objective)
        .on_iteration(|info| hooked.push(info.best_fitness))
        .run()
        .expect("valid random config");
    if hooked.windows(2).any(|w| w[1] > w[0])
        || report.best_fitness_per_iteration.windows(2).any(|w| w[1] > w[0])
    {
        out.monotone += 1;
    }

    let parallel = Gloa::new(&config.clone().with_parallel(true), &objective).run().expect("parallel run");
    if parallel.best_candidate != report.best_candidate
        || parallel.best_fitness_per_iteration != report.best_fitness_per_iteration
        || parallel.evaluations != report.evaluations
    {
        out.determinism += 1;
    }

    let mut state = RunState::init(&config, &objective, None).expect("init");
    for it in 1..=STEPS {
        state.step(&config, &objective, it).expect("step");
        for g in &state.groups.groups {
            if select_leader(&g.members).ok() != Some(g.leader) {
                out.leader += 1;
            }
            if config.bound_policy == BoundPolicy::Clip {
                let outside = g
                    .members
                    .iter()
                    .any(|m| m.values.iter().zip(&config.bounds).any(|(v, b)| !b.contains(*v)));
                out.bounds += outside as usize;
            }
        }
    }

    let flat = FnObjective::new(config.dimension(), |_: &[f64]| 1.0);
    let mut flat_state = RunState::init(&config, &flat, None).expect("init");
    let before = bits(&flat_state.groups);
    one_way_crossover(&mut flat_state.groups, &flat, &config, &mut flat_state.streams.crossover).expect("crossover");
    if bits(&flat_state.groups) != before {
        out.constant_crossover += 1;
    }

    let bowl = FnObjective::new(config.dimension(), sphere);
    let mut bowl_state = RunState::init(&config, &bowl, None).expect("init");
    let snapshot = bowl_state.groups.clone();
    let t = one_way_crossover(&mut bowl_state.groups, &bowl, &config, &mut bowl_state.streams.crossover)
        .expect("crossover");
    let mut changed = 0;
    for (g0, g1) in snapshot.groups.iter().zip(&bowl_state.groups.groups) {
        for (m0, m1) in g0.members.iter().zip(&g1.members) {
            if m0.values != m1.values {
                changed += 1;
                let (f0, f1) = (m0.fitness().unwrap_or(f64::NAN), m1.fitness().unwrap_or(f64::NAN));
                if !(f1 < f0) || (bowl.evaluate(&m1.values).ok() != Some(f1)) {
                    out.crossover_gain += 1;
                }
            }
        }
    }
    if changed > t.accepted || t.accepted > t.attempted {
        out.crossover_gain += 1;
    }
}

pub fn engine_properties() -> Verdict {
    let mut v = Verdict::new(5, "engine invariants over random configurations");
    let mut found = Violations::default();
    for case in 0..CASES {
        check_case(case, &mut found);
    }
    for (name, count) in [
        ("non-increasing best", found.monotone),
        ("leader is group argmin", found.leader),
        ("clip keeps members in bounds", found.bounds),
        ("sequential equals parallel", found.determinism),
        ("flat objective crossover is a no-op", found.constant_crossover),
        ("crossover only keeps strict gains", found.crossover_gain),
    ] {
        v.check(count == 0, format!("{name}: {count} violations in {CASES} configs"));
    }
    v
}
