//! Decomposition of unitary matrices into gate sequences.
//!
//! Qubit 0 is the most significant bit of a basis-state index, so on two
//! qubits `|q0 q1>` maps to index `2 * q0 + q1`.

mod gates;
mod genome;
mod grover;
mod io;
mod synthesis;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub use gates::{apply_gate, gate_unitary, GateKind, GateSpec};
pub use genome::{circuit_cost, circuit_unitary, decode_genome, encode_genome, CircuitGenome, GENES_PER_GATE};
pub use grover::{
    grover_diffusion, grover_iterations, grover_oracle, simulate_grover, simulate_grover_with,
};
pub use io::{parse_unitary, write_circuit};
pub use synthesis::{diffusion_preset, SynthesisObjective};

/// Largest register handled; matrices grow as `4^n`.
pub const MAX_QUBITS: usize = 8;

/// Square complex matrix acting on `n` qubits (order `2^n`).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    n_qubits: usize,
    m: DMatrix<Complex64>,
}

impl UnitaryMatrix {
    pub fn identity(n_qubits: usize) -> Self {
        let order = 1 << n_qubits;
        UnitaryMatrix {
            n_qubits,
            m: DMatrix::identity(order, order),
        }
    }

    /// Wraps `m` after checking that it is square with a power-of-two order.
    /// Unitarity is not checked here; see [`UnitaryMatrix::unitarity_error`].
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        let order = m.nrows();
        if order != m.ncols() {
            return Err(Error::Domain(format!("matrix is {}x{}, not square", m.nrows(), m.ncols())));
        }
        if order < 2 || !order.is_power_of_two() {
            return Err(Error::Domain(format!("matrix order {order} is not a power of two >= 2")));
        }
        let n_qubits = order.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::Domain(format!("{n_qubits} qubits exceeds the limit of {MAX_QUBITS}")));
        }
        Ok(UnitaryMatrix { n_qubits, m })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn order(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.m
    }

    pub fn adjoint(&self) -> Self {
        UnitaryMatrix {
            n_qubits: self.n_qubits,
            m: self.m.adjoint(),
        }
    }

    /// `self * rhs`, i.e. `rhs` applied first.
    pub fn mul(&self, rhs: &UnitaryMatrix) -> Result<Self> {
        check_order(self, rhs)?;
        Ok(UnitaryMatrix {
            n_qubits: self.n_qubits,
            m: &self.m * &rhs.m,
        })
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        UnitaryMatrix {
            n_qubits: self.n_qubits,
            m: self.m.map(|z| z * factor),
        }
    }

    /// Largest entry-wise deviation of `U U†` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let p = &self.m * self.m.adjoint();
        let mut worst = 0.0f64;
        for i in 0..p.nrows() {
            for j in 0..p.ncols() {
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p[(i, j)] - Complex64::new(expect, 0.0)).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.unitarity_error() <= tolerance
    }

    /// `U |psi>`.
    pub fn apply(&self, state: &[Complex64]) -> Result<Vec<Complex64>> {
        if state.len() != self.order() {
            return Err(Error::DimensionMismatch {
                expected: self.order(),
                actual: state.len(),
            });
        }
        Ok((0..self.order())
            .map(|i| (0..self.order()).map(|j| self.m[(i, j)] * state[j]).sum())
            .collect())
    }
}

fn check_order(a: &UnitaryMatrix, b: &UnitaryMatrix) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch {
            expected: a.order(),
            actual: b.order(),
        });
    }
    Ok(())
}

/// `|Tr(Ug Uf†)| / N`: 1 when the two agree up to a global phase.
pub fn correctness(ug: &UnitaryMatrix, uf: &UnitaryMatrix) -> Result<f64> {
    check_order(ug, uf)?;
    // Tr(A B†) = sum_ij A_ij conj(B_ij)
    let tr: Complex64 = ug.m.iter().zip(uf.m.iter()).map(|(a, b)| a * b.conj()).sum();
    Ok(tr.norm() / ug.order() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pauli_x() -> UnitaryMatrix {
        UnitaryMatrix::from_matrix(DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)])).unwrap()
    }

    fn pauli_z() -> UnitaryMatrix {
        UnitaryMatrix::from_matrix(DMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)])).unwrap()
    }

    #[test]
    fn correctness_examples() {
        let z = pauli_z();
        assert_eq!(correctness(&z, &z).unwrap(), 1.0);
        assert_eq!(correctness(&z, &pauli_x()).unwrap(), 0.0);
        let phased = z.scaled(Complex64::from_polar(1.0, 0.77));
        assert!((correctness(&z, &phased).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert!(correctness(&UnitaryMatrix::identity(1), &UnitaryMatrix::identity(2)).is_err());
        assert!(UnitaryMatrix::identity(1).mul(&UnitaryMatrix::identity(3)).is_err());
    }

    #[test]
    fn shape_checks() {
        assert!(UnitaryMatrix::from_matrix(DMatrix::zeros(3, 3)).is_err());
        assert!(UnitaryMatrix::from_matrix(DMatrix::zeros(2, 4)).is_err());
        assert!(UnitaryMatrix::from_matrix(DMatrix::zeros(1, 1)).is_err());
        let u = UnitaryMatrix::from_matrix(DMatrix::identity(8, 8)).unwrap();
        assert_eq!((u.n_qubits(), u.order()), (3, 8));
        assert!(!UnitaryMatrix::from_matrix(DMatrix::zeros(2, 2)).unwrap().is_unitary(0.5));
    }

    #[test]
    fn apply_matches_product() {
        let x = pauli_x();
        let out = x.apply(&[c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        assert_eq!(out, vec![c(0.0, 0.8), c(0.6, 0.0)]);
        assert!(x.apply(&[c(1.0, 0.0)]).is_err());
    }
}
