use std::f64::consts::PI;

use gloa_core::lj::{energy, gradient};
use gloa_core::quantum::{
    circuit_unitary, correctness, decode_genome, gate_unitary, GateKind, GateSpec, UnitaryMatrix, GENES_PER_GATE,
};
use gloa_core::rng::stream;
use num_complex::Complex64;
use rand::Rng;

use crate::Verdict;

const GEOMETRIES: usize = 200;
const CIRCUITS: usize = 200;

/// Random cluster of `n` particles with no pair closer than `min_distance`.
fn spread_cluster(rng: &mut impl Rng, n: usize, min_distance: f64) -> Vec<f64> {
    let mut pts: Vec<[f64; 3]> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = [rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)];
        let clear = pts.iter().all(|q| {
            let d2: f64 = (0..3).map(|k| (p[k] - q[k]).powi(2)).sum();
            d2 >= min_distance * min_distance
        });
        if clear {
            pts.push(p);
        }
    }
    pts.into_iter().flatten().collect()
}

fn worst_gradient_error() -> f64 {
    let mut rng = stream(606);
    let mut worst: f64 = 0.0;
    for _ in 0..GEOMETRIES {
        let n = rng.gen_range(2..=8);
        let x = spread_cluster(&mut rng, n, 0.8);
        let g = gradient(&x).expect("separated particles");
        let scale = g.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for i in 0..x.len() {
            let h = 1e-6 * x[i].abs().max(1.0);
            let (mut up, mut down) = (x.clone(), x.clone());
            up[i] += h;
            down[i] -= h;
            let fd = (energy(&up).expect("finite") - energy(&down).expect("finite")) / (2.0 * h);
            worst = worst.max((fd - g[i]).abs() / scale);
        }
    }
    worst
}

fn worst_unitarity_error() -> f64 {
    let mut rng = stream(607);
    let mut worst: f64 = 0.0;
    for _ in 0..CIRCUITS {
        let n = rng.gen_range(1..=4);
        let gates = rng.gen_range(1..=12);
        let genome: Vec<f64> = (0..gates * GENES_PER_GATE).map(|_| rng.gen_range(-1.0..14.0)).collect();
        let circuit = decode_genome(&genome, n, gates).expect("genome length matches");
        worst = worst.max(circuit_unitary(&circuit).unitarity_error());
        for g in &circuit.gates {
            worst = worst.max(gate_unitary(g, n).expect("decoded gates are valid").unitarity_error());
        }
    }
    for kind in GateKind::ALL {
        let g = if kind.is_controlled() {
            GateSpec::controlled(kind, 2, 0, 1.234)
        } else {
            GateSpec::single(kind, 1, 1.234)
        };
        worst = worst.max(gate_unitary(&g, 3).expect("valid gate").unitarity_error());
    }
    worst
}

fn worst_phase_error() -> f64 {
    let mut rng = stream(608);
    let mut worst: f64 = 0.0;
    for _ in 0..CIRCUITS {
        let n = rng.gen_range(1..=4);
        let genome: Vec<f64> = (0..8 * GENES_PER_GATE).map(|_| rng.gen_range(0.0..12.0)).collect();
        let u: UnitaryMatrix = circuit_unitary(&decode_genome(&genome, n, 8).expect("genome length matches"));
        let phase = Complex64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI));
        let c = correctness(&u, &u.scaled(phase)).expect("same order");
        worst = worst.max((c - 1.0).abs());
    }
    worst
}

pub fn numerical_oracles() -> Verdict {
    let mut v = Verdict::new(6, "numerical oracles");
    let fd = worst_gradient_error();
    v.check(fd <= 1e-5, format!("LJ gradient vs central differences: {fd:.2e} relative"));
    let unitary = worst_unitarity_error();
    v.check(unitary <= 1e-10, format!("max |UU^H - I| over gates and circuits: {unitary:.2e}"));
    let phase = worst_phase_error();
    v.check(phase <= 1e-12, format!("correctness under a global phase: |C - 1| = {phase:.2e}"));
    v
}
