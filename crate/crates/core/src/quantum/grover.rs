use std::f64::consts::FRAC_PI_4;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{UnitaryMatrix, MAX_QUBITS};
use crate::error::{Error, Result};

fn check(n_qubits: usize) -> Result<usize> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::Domain(format!("register of {n_qubits} qubits (supported: 1..={MAX_QUBITS})")));
    }
    Ok(1 << n_qubits)
}

/// Phase flip of the marked state: `I - 2|a><a|`.
pub fn grover_oracle(a: usize, n_qubits: usize) -> Result<UnitaryMatrix> {
    let order = check(n_qubits)?;
    if a >= order {
        return Err(Error::Domain(format!("marked state {a} outside 0..{order}")));
    }
    let mut m = DMatrix::identity(order, order);
    m[(a, a)] = Complex64::new(-1.0, 0.0);
    UnitaryMatrix::from_matrix(m)
}

/// Inversion about the mean, `2|psi><psi| - I` with `psi` uniform.
pub fn grover_diffusion(n_qubits: usize) -> Result<UnitaryMatrix> {
    let order = check(n_qubits)?;
    let off = 2.0 / order as f64;
    let m = DMatrix::from_fn(order, order, |i, j| {
        Complex64::new(if i == j { off - 1.0 } else { off }, 0.0)
    });
    UnitaryMatrix::from_matrix(m)
}

/// `floor(pi/4 * sqrt(N))`.
pub fn grover_iterations(n_qubits: usize) -> usize {
    (FRAC_PI_4 * ((1usize << n_qubits) as f64).sqrt()).floor() as usize
}

/// Probability of measuring `a` after the standard number of iterations.
pub fn simulate_grover(n_qubits: usize, a: usize) -> Result<f64> {
    simulate_grover_with(n_qubits, a, &grover_diffusion(n_qubits)?, grover_iterations(n_qubits))
}

/// Like [`simulate_grover`], with any matrix in place of the diffusion step
/// and an explicit iteration count.
pub fn simulate_grover_with(n_qubits: usize, a: usize, diffusion: &UnitaryMatrix, iterations: usize) -> Result<f64> {
    let order = check(n_qubits)?;
    if diffusion.order() != order {
        return Err(Error::DimensionMismatch {
            expected: order,
            actual: diffusion.order(),
        });
    }
    let oracle = grover_oracle(a, n_qubits)?;
    // H on every qubit of |0...0>
    let mut state = vec![Complex64::new(1.0 / (order as f64).sqrt(), 0.0); order];
    for _ in 0..iterations {
        state = diffusion.apply(&oracle.apply(&state)?)?;
    }
    Ok(state[a].norm_sqr())
}
