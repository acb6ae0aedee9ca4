use gloa_validation::*;

fn report(v: Verdict) {
    println!("{v}");
    assert!(v.passed, "{v}");
}

#[test]
fn criterion_1_two_variable_optima() {
    report(single_variable_optima());
}

#[test]
fn criterion_2_high_dimensional_errors() {
    report(multi_dimensional_errors(&[10, 50, 100]));
}

#[test]
fn criterion_3_lennard_jones_clusters() {
    report(lj_small_clusters());
}

#[test]
fn criterion_4_diffusion_synthesis() {
    report(quantum_synthesis());
}

#[test]
fn criterion_5_engine_invariants() {
    report(engine_properties());
}

#[test]
fn criterion_6_numerical_oracles() {
    report(numerical_oracles());
}
