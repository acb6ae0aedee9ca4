use gloa_core::benchmarks::Benchmark;
use gloa_core::Gloa;
use rayon::prelude::*;

use crate::{share_at_least, Verdict};

const SINGLE_SEEDS: u64 = 20;
const MULTI_SEEDS: u64 = 10;

/// Final `|f - f*|` for seeds `0..seeds` at `dimension`, with the
/// benchmark's default settings and no early stop.
fn final_errors(b: Benchmark, dimension: usize, seeds: u64) -> Vec<f64> {
    let spec = b.spec();
    let objective = spec.objective(dimension).expect("valid dimension");
    (0..seeds)
        .into_par_iter()
        .map(|seed| {
            let config = spec.preset(dimension).with_seed(seed);
            let report = Gloa::new(&config, &objective).run().expect("benchmarks never fail");
            (report.best_fitness() - spec.known_minimum_value).abs()
        })
        .collect()
}

pub fn single_variable_optima() -> Verdict {
    let mut v = Verdict::new(1, "two-variable optima, 20 seeds, >= 90%");
    for (b, tol) in [
        (Benchmark::Beale, 1e-3),
        (Benchmark::Easom, 1e-3),
        (Benchmark::GoldsteinPrice, 1e-3),
        (Benchmark::Shubert, 0.05),
    ] {
        let spec = b.spec();
        let config = spec.preset(2);
        assert_eq!((config.groups, config.members, config.max_iterations), (10, 25, 500));
        let errors = final_errors(b, 2, SINGLE_SEEDS);
        let hits = errors.iter().filter(|e| **e < tol).count();
        v.check(
            share_at_least(hits, errors.len(), 0.9),
            format!("{} {hits}/{} within {tol}", b.name(), errors.len()),
        );
    }
    v
}

/// Error bound per function.
pub const MULTI_BOUNDS: [(Benchmark, f64); 5] = [
    (Benchmark::Rosenbrock, 1.0),
    (Benchmark::Griewank, 0.1),
    (Benchmark::Ackley, 0.05),
    (Benchmark::Sphere, 0.1),
    (Benchmark::Rastrigin, 0.05),
];

pub fn multi_dimensional_errors(dimensions: &[usize]) -> Verdict {
    let mut v = Verdict::new(2, "n-dimensional error bounds, 10 seeds, >= 80%");
    for (b, bound) in MULTI_BOUNDS {
        for &d in dimensions {
            let errors = final_errors(b, d, MULTI_SEEDS);
            let hits = errors.iter().filter(|e| **e <= bound).count();
            let worst = errors.iter().cloned().fold(0.0, f64::max);
            v.check(
                share_at_least(hits, errors.len(), 0.8),
                format!("{} d={d} {hits}/{} <= {bound} (worst {worst:.3e})", b.name(), errors.len()),
            );
        }
    }
    v
}
