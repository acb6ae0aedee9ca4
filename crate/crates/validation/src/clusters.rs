use gloa_core::fit::fit_power_law;
use gloa_core::lj::{self, incremental_chain, local_minimize, ClusterGeometry, LjObjective, ReferenceMinima};
use gloa_core::Gloa;
use rayon::prelude::*;

use crate::{share_at_least, Verdict};

const SEEDS: u64 = 10;
const TOLERANCE: f64 = 0.1;
const SEED_FRACTION: f64 = 0.5;

pub fn lj_small_clusters() -> Verdict {
    let mut v = Verdict::new(3, "Lennard-Jones clusters");
    let reference = ReferenceMinima::builtin();

    // N <= 4: engine then local minimization against the closed forms
    for (n, exact) in [(2usize, -1.0), (3, -3.0), (4, -6.0)] {
        let config = lj::preset(n).with_seed(1);
        let report = Gloa::new(&config, &LjObjective::new(n)).run().expect("cluster run");
        let g = ClusterGeometry::new(report.best_candidate.values.clone()).expect("3N coordinates");
        let e = local_minimize(&g, 100_000, 1e-10).energy().unwrap_or(f64::INFINITY);
        v.check((e - exact).abs() <= 1e-3, format!("N={n} {e:.6} vs {exact}"));
    }

    // N = 5..13, chained from a cold N = 4 per seed
    let sizes: Vec<usize> = (4..=13).collect();
    let chains: Vec<Vec<(usize, f64, f64)>> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| {
            let template = lj::preset(4).with_seed(seed);
            incremental_chain(&sizes, &template, &reference, 1e-3, SEED_FRACTION)
                .expect("chain")
                .into_iter()
                .map(|s| (s.n, s.report.elapsed, s.report.best_fitness()))
                .collect()
        })
        .collect();
    for n in 5..=13 {
        let target = reference.get(n).expect("reference energy");
        let hits = chains
            .iter()
            .filter(|c| c.iter().any(|&(m, _, e)| m == n && (e - target).abs() <= TOLERANCE))
            .count();
        let worst = chains
            .iter()
            .flat_map(|c| c.iter().filter(|s| s.0 == n).map(|s| s.2 - target))
            .fold(0.0, f64::max);
        v.check(
            share_at_least(hits, SEEDS as usize, 0.8),
            format!("N={n} {hits}/{SEEDS} within {TOLERANCE} (worst +{worst:.3})"),
        );
    }

    // power-law fitting: exact on synthetic data, reported on measured data
    for b in [2.0, 2.5] {
        let pts: Vec<(f64, f64)> = (5..=13).map(|n| (n as f64, 3e-4 * (n as f64).powf(b))).collect();
        let fit = fit_power_law(&pts).expect("synthetic fit");
        v.check((fit.exponent - b).abs() <= 0.01, format!("synthetic N^{b} -> {:.4}", fit.exponent));
    }
    let mut measured = Vec::new();
    for n in 5..=13 {
        let times: Vec<f64> = chains
            .iter()
            .flat_map(|c| c.iter().filter(|s| s.0 == n).map(|s| s.1))
            .collect();
        measured.push((n as f64, times.iter().sum::<f64>() / times.len() as f64));
    }
    match fit_power_law(&measured) {
        Ok(fit) => {
            let ok = fit.exponent.is_finite() && fit.stderr.is_finite();
            v.check(ok, format!("measured time ~ N^{:.2} +/- {:.2}", fit.exponent, fit.stderr));
        }
        Err(e) => v.check(false, format!("measured fit failed: {e}")),
    }
    v
}
