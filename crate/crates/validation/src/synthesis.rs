use gloa_core::quantum::{
    circuit_unitary, diffusion_preset, grover_diffusion, grover_iterations, simulate_grover, simulate_grover_with,
};
use gloa_core::Gloa;
use rayon::prelude::*;

use crate::Verdict;

const SEEDS: u64 = 10;

pub fn quantum_synthesis() -> Verdict {
    let mut v = Verdict::new(4, "two-qubit diffusion synthesis");
    let exact_d = grover_diffusion(2).expect("two qubits");
    let exact: Vec<f64> = (0..4).map(|a| simulate_grover(2, a).expect("exact pipeline")).collect();
    let exact_dev = exact.iter().map(|p| (p - 1.0).abs()).fold(0.0, f64::max);
    v.check(exact_dev <= 1e-9, format!("exact pipeline |p - 1| = {exact_dev:.1e}"));
    assert_eq!(exact_d.order(), 4);

    let (objective, config) = diffusion_preset();
    assert_eq!((config.groups, config.members, config.max_iterations), (15, 25, 1000));
    let runs: Vec<(u64, f64, f64, f64, gloa_core::quantum::CircuitGenome)> = (0..SEEDS)
        .into_par_iter()
        .map(|seed| {
            let c = config.clone().with_seed(seed);
            let report = Gloa::new(&c, &objective).run().expect("synthesis run");
            let circuit = objective.decode(&report.best_candidate.values).expect("genome length");
            let (y, corr, cost) = objective.score(&circuit).expect("same order");
            (seed, y, corr, cost, circuit)
        })
        .collect();
    let hits = runs.iter().filter(|r| r.1 <= 0.1).count();
    v.check(hits >= 1, format!("{hits}/{SEEDS} seeds with y <= 0.1"));
    let best = runs.iter().min_by(|a, b| a.1.total_cmp(&b.1)).expect("ten runs");
    let (seed, y, corr, cost, circuit) = best;
    v.check(*corr >= 0.999, format!("best seed {seed}: y {y:.4}, C {corr:.6}, cost {cost}, {} gates", circuit.len()));
    let found = circuit_unitary(circuit);
    let dev = (0..4)
        .map(|a| {
            let p = simulate_grover_with(2, a, &found, grover_iterations(2)).expect("substituted pipeline");
            (p - exact[a]).abs()
        })
        .fold(0.0, f64::max);
    v.check(dev <= 1e-3, format!("substituted circuit |dp| = {dev:.2e}"));
    v
}
