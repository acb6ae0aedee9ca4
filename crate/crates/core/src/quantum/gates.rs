use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::UnitaryMatrix;
use crate::error::{Error, Result};

type Mat2 = [[Complex64; 2]; 2];

/// Gate library. Index 0 of the genome encoding is the no-op and has no
/// variant here; decoding drops it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    Rx,
    Ry,
    Rz,
    Phase,
    CX,
    CZ,
    CPhase,
}

impl GateKind {
    pub const ALL: [GateKind; 11] = [
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::Rx,
        GateKind::Ry,
        GateKind::Rz,
        GateKind::Phase,
        GateKind::CX,
        GateKind::CZ,
        GateKind::CPhase,
    ];

    /// Highest library index (the no-op is 0).
    pub const MAX_INDEX: usize = 11;

    pub fn index(self) -> usize {
        GateKind::ALL.iter().position(|&k| k == self).unwrap() + 1
    }

    /// `None` for 0 (no-op) and for anything past the library.
    pub fn from_index(i: usize) -> Option<GateKind> {
        i.checked_sub(1).and_then(|k| GateKind::ALL.get(k).copied())
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::Rx => "RX",
            GateKind::Ry => "RY",
            GateKind::Rz => "RZ",
            GateKind::Phase => "P",
            GateKind::CX => "CX",
            GateKind::CZ => "CZ",
            GateKind::CPhase => "CP",
        }
    }

    pub fn is_controlled(self) -> bool {
        matches!(self, GateKind::CX | GateKind::CZ | GateKind::CPhase)
    }

    pub fn uses_angle(self) -> bool {
        matches!(self, GateKind::Rx | GateKind::Ry | GateKind::Rz | GateKind::Phase | GateKind::CPhase)
    }

    /// The 2x2 block acting on the target qubit (applied only when the control
    /// is set, for controlled kinds).
    fn block(self, theta: f64) -> Mat2 {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        match self {
            GateKind::H => {
                let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
                [[h, h], [h, -h]]
            }
            GateKind::X | GateKind::CX => [[z, one], [one, z]],
            GateKind::Y => [[z, -i], [i, z]],
            GateKind::Z | GateKind::CZ => [[one, z], [z, -one]],
            GateKind::Rx => [[c.into(), -i * s], [-i * s, c.into()]],
            GateKind::Ry => [[c.into(), (-s).into()], [s.into(), c.into()]],
            GateKind::Rz => [[Complex64::from_polar(1.0, -theta / 2.0), z], [z, Complex64::from_polar(1.0, theta / 2.0)]],
            GateKind::Phase | GateKind::CPhase => [[one, z], [z, Complex64::from_polar(1.0, theta)]],
        }
    }
}

/// One gate of a circuit. Single-qubit kinds carry a control index too (the
/// genome always encodes one) but ignore it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateSpec {
    pub kind: GateKind,
    pub target: usize,
    pub control: Option<usize>,
    pub angle: f64,
}

impl GateSpec {
    pub fn single(kind: GateKind, target: usize, angle: f64) -> Self {
        GateSpec {
            kind,
            target,
            control: None,
            angle,
        }
    }

    pub fn controlled(kind: GateKind, control: usize, target: usize, angle: f64) -> Self {
        GateSpec {
            kind,
            target,
            control: Some(control),
            angle,
        }
    }

    pub fn validate(&self, n_qubits: usize) -> Result<()> {
        if self.target >= n_qubits {
            return Err(Error::Domain(format!("target qubit {} outside a {n_qubits}-qubit register", self.target)));
        }
        match self.control {
            Some(c) if c >= n_qubits => {
                Err(Error::Domain(format!("control qubit {c} outside a {n_qubits}-qubit register")))
            }
            Some(c) if c == self.target => Err(Error::Domain(format!("control and target are both qubit {c}"))),
            None if self.kind.is_controlled() => {
                Err(Error::Domain(format!("{} gate without a control qubit", self.kind.name())))
            }
            _ => Ok(()),
        }
    }

    /// 1 for a single-qubit gate, twice the control-target distance otherwise.
    pub fn cost(&self) -> f64 {
        match self.control {
            Some(c) if self.kind.is_controlled() => 2.0 * c.abs_diff(self.target) as f64,
            _ => 1.0,
        }
    }
}

/// Applies `gate` in place to an `n`-qubit state vector.
pub fn apply_gate(gate: &GateSpec, n_qubits: usize, state: &mut [Complex64]) {
    let m = gate.kind.block(gate.angle);
    let t = 1usize << (n_qubits - 1 - gate.target);
    let c = match gate.control {
        Some(c) if gate.kind.is_controlled() => 1usize << (n_qubits - 1 - c),
        _ => 0,
    };
    for i in 0..state.len() {
        if i & t != 0 || i & c != c {
            continue;
        }
        let (a, b) = (state[i], state[i | t]);
        state[i] = m[0][0] * a + m[0][1] * b;
        state[i | t] = m[1][0] * a + m[1][1] * b;
    }
}

/// Full-register matrix of a single gate.
pub fn gate_unitary(gate: &GateSpec, n_qubits: usize) -> Result<UnitaryMatrix> {
    gate.validate(n_qubits)?;
    let mut u = UnitaryMatrix::identity(n_qubits);
    for mut col in u.m.column_iter_mut() {
        apply_gate(gate, n_qubits, col.as_mut_slice());
    }
    Ok(u)
}
