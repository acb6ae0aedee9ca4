use std::f64::consts::PI;

use gloa_core::quantum::{
    circuit_cost, circuit_unitary, correctness, decode_genome, diffusion_preset, encode_genome, grover_diffusion,
    parse_unitary, simulate_grover, CircuitGenome, GateKind, GateSpec, SynthesisObjective, UnitaryMatrix,
    GENES_PER_GATE,
};
use gloa_core::Objective;
use num_complex::Complex64;
use proptest::prelude::*;

fn genome(max_gates: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0f64..14.0, GENES_PER_GATE * max_gates)
}

fn diffusion_circuit() -> CircuitGenome {
    let half = PI / 2.0;
    CircuitGenome::new(
        2,
        vec![
            GateSpec::single(GateKind::Ry, 1, half),
            GateSpec::controlled(GateKind::CX, 1, 0, 0.0),
            GateSpec::single(GateKind::Z, 1, 0.0),
            GateSpec::single(GateKind::Ry, 1, -half),
        ],
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn decoded_circuits_are_unitary(n in 1usize..5, x in genome(10)) {
        let c = decode_genome(&x, n, 10).unwrap();
        prop_assert!(c.len() <= 10);
        for g in &c.gates {
            prop_assert!(g.validate(n).is_ok());
        }
        prop_assert!(circuit_unitary(&c).unitarity_error() < 1e-10);
    }

    #[test]
    fn encode_decode_round_trip(n in 1usize..5, x in genome(6)) {
        let c = decode_genome(&x, n, 6).unwrap();
        let back = decode_genome(&encode_genome(&c, 6).unwrap(), n, 6).unwrap();
        prop_assert_eq!(c, back);
    }

    #[test]
    fn cost_is_additive(n in 2usize..5, a in genome(4), b in genome(5)) {
        let ca = decode_genome(&a, n, 4).unwrap();
        let cb = decode_genome(&b, n, 5).unwrap();
        let joined = ca.then(&cb).unwrap();
        prop_assert_eq!(circuit_cost(&joined), circuit_cost(&ca) + circuit_cost(&cb));
        let mut x = a.clone();
        x.extend_from_slice(&b);
        prop_assert_eq!(decode_genome(&x, n, 9).unwrap(), joined);
    }

    #[test]
    fn objective_matches_closed_form(x in genome(8), alpha in 0.5f64..1.0) {
        let (base, _) = diffusion_preset();
        let obj = base.with_weights(alpha, 1.0 - alpha);
        let c = obj.decode(&x).unwrap();
        let corr = correctness(&obj.target, &circuit_unitary(&c)).unwrap();
        let cost = circuit_cost(&c);
        let term = if c.is_empty() { 0.0 } else { (1.0 - alpha) / cost };
        let y = obj.evaluate(&x).unwrap();
        prop_assert!((y - (1.0 - (alpha * corr + term)).abs()).abs() < 1e-12);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&corr));
    }

    #[test]
    fn correctness_ignores_global_phase(x in genome(6), phi in 0.0f64..(2.0 * PI)) {
        let u = circuit_unitary(&decode_genome(&x, 3, 6).unwrap());
        let c = correctness(&u, &u.scaled(Complex64::from_polar(1.0, phi))).unwrap();
        prop_assert!((c - 1.0).abs() < 1e-12);
    }
}

#[test]
fn known_diffusion_circuit_scores() {
    let (obj, _) = diffusion_preset();
    let (y, c, cost) = obj.score(&diffusion_circuit()).unwrap();
    assert!((c - 1.0).abs() < 1e-12);
    assert_eq!(cost, 5.0);
    assert!((y - 0.08).abs() < 1e-12);
}

#[test]
fn empty_circuit_has_no_cost_term() {
    let d = grover_diffusion(2).unwrap();
    let obj = SynthesisObjective::new(d.clone(), 3);
    let (y, c, _) = obj.score(&CircuitGenome::empty(2)).unwrap();
    let expected = correctness(&d, &UnitaryMatrix::identity(2)).unwrap();
    assert!((c - expected).abs() < 1e-15);
    assert!((y - (1.0 - 0.9 * c)).abs() < 1e-15);
}

#[test]
fn grover_succeeds_for_every_mark() {
    for a in 0..4 {
        assert!((simulate_grover(2, a).unwrap() - 1.0).abs() < 1e-9);
    }
    for n in 3..=6 {
        for a in [0, (1 << n) - 1] {
            assert!(simulate_grover(n, a).unwrap() > 0.9, "n={n} a={a}");
        }
    }
}

#[test]
fn unitary_text_round_trip() {
    let d = grover_diffusion(2).unwrap();
    let mut text = String::from("# diffusion\n");
    for i in 0..4 {
        let row: Vec<String> = (0..4)
            .map(|j| format!("{} {}", d.matrix()[(i, j)].re, d.matrix()[(i, j)].im))
            .collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    let parsed = parse_unitary(&text).unwrap();
    assert!((correctness(&d, &parsed).unwrap() - 1.0).abs() < 1e-12);
    assert!(parse_unitary("1 0 0 0\n0 0 2 0\n").is_err());
}
