use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::genome::CircuitGenome;
use super::UnitaryMatrix;
use crate::error::{Error, Result};

/// Tolerance on `U U† = I` for user-supplied targets.
const LOAD_TOLERANCE: f64 = 1e-8;

/// One gate per line: `kind target control angle name`. A missing control
/// is written as `-1`.
pub fn write_circuit(c: &CircuitGenome) -> String {
    let mut out = format!("# qubits {}\n# kind target control angle name\n", c.n_qubits);
    for g in &c.gates {
        let control = g.control.map_or(-1, |q| q as i64);
        let _ = writeln!(out, "{} {} {} {:.16e} {}", g.kind.index(), g.target, control, g.angle, g.kind.name());
    }
    out
}

/// Row-major `re im` pairs, whitespace separated; `#` starts a comment.
/// The entry count fixes the order, which must be a power of two, and the
/// matrix must be unitary.
pub fn parse_unitary(text: &str) -> Result<UnitaryMatrix> {
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::Domain(format!("unitary line {}: bad number {tok:?}", lineno + 1)))?;
            values.push(v);
        }
    }
    if values.len() % 2 != 0 {
        return Err(Error::Domain("unitary: odd number of values (expected re im pairs)".into()));
    }
    let entries = values.len() / 2;
    let order = (entries as f64).sqrt().round() as usize;
    if order * order != entries {
        return Err(Error::Domain(format!("unitary: {entries} entries do not form a square matrix")));
    }
    let z: Vec<Complex64> = values.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect();
    let u = UnitaryMatrix::from_matrix(DMatrix::from_row_slice(order, order, &z))?;
    let err = u.unitarity_error();
    if err > LOAD_TOLERANCE {
        return Err(Error::Domain(format!("unitary: matrix is not unitary (|UU† - I| = {err:.3e})")));
    }
    Ok(u)
}
