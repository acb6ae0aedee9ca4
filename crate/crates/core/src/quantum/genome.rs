use super::gates::{apply_gate, GateKind, GateSpec};
use super::{UnitaryMatrix, MAX_QUBITS};
use crate::error::{Error, Result};

/// Genes per gate: kind, target, control, angle.
pub const GENES_PER_GATE: usize = 4;

/// Gate sequence on a fixed register, first gate applied first.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitGenome {
    pub n_qubits: usize,
    pub gates: Vec<GateSpec>,
}

impl CircuitGenome {
    pub fn new(n_qubits: usize, gates: Vec<GateSpec>) -> Result<Self> {
        check_register(n_qubits)?;
        for g in &gates {
            g.validate(n_qubits)?;
        }
        Ok(CircuitGenome { n_qubits, gates })
    }

    pub fn empty(n_qubits: usize) -> Self {
        CircuitGenome {
            n_qubits,
            gates: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// `self` followed by `other` on the same register.
    pub fn then(&self, other: &CircuitGenome) -> Result<CircuitGenome> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits,
                actual: other.n_qubits,
            });
        }
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&other.gates);
        Ok(CircuitGenome {
            n_qubits: self.n_qubits,
            gates,
        })
    }
}

fn check_register(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::Domain(format!("register of {n_qubits} qubits (supported: 1..={MAX_QUBITS})")));
    }
    Ok(())
}

/// Nearest integer clamped into `0..=max`; non-finite genes map to 0.
fn discrete(v: f64, max: usize) -> usize {
    if v.is_finite() {
        v.round().clamp(0.0, max as f64) as usize
    } else {
        0
    }
}

/// Reads `x` as `max_gates` consecutive `(kind, target, control, angle)`
/// tuples. Kind 0 is a no-op and is dropped, so the effective circuit may be
/// shorter than `max_gates`. A control equal to its target moves to the next
/// qubit (mod `n`); on a single qubit controlled gates have nowhere to go and
/// are dropped as well.
pub fn decode_genome(x: &[f64], n_qubits: usize, max_gates: usize) -> Result<CircuitGenome> {
    check_register(n_qubits)?;
    if x.len() != GENES_PER_GATE * max_gates {
        return Err(Error::DimensionMismatch {
            expected: GENES_PER_GATE * max_gates,
            actual: x.len(),
        });
    }
    let mut gates = Vec::with_capacity(max_gates);
    for t in x.chunks_exact(GENES_PER_GATE) {
        let Some(kind) = GateKind::from_index(discrete(t[0], GateKind::MAX_INDEX)) else {
            continue;
        };
        let target = discrete(t[1], n_qubits - 1);
        let mut control = discrete(t[2], n_qubits - 1);
        if control == target {
            control = (control + 1) % n_qubits;
        }
        let control = (control != target).then_some(control);
        if kind.is_controlled() && control.is_none() {
            continue;
        }
        gates.push(GateSpec {
            kind,
            target,
            control,
            angle: t[3],
        });
    }
    Ok(CircuitGenome { n_qubits, gates })
}

/// Inverse of [`decode_genome`], padding with no-ops up to `max_gates`.
///
/// `decode_genome(encode_genome(g))` reproduces `g` for every genome that
/// came out of `decode_genome`. A missing control is written as the target
/// itself, which decodes to the next qubit on registers of two or more.
pub fn encode_genome(g: &CircuitGenome, max_gates: usize) -> Result<Vec<f64>> {
    if g.gates.len() > max_gates {
        return Err(Error::Domain(format!("{} gates do not fit in {max_gates} slots", g.gates.len())));
    }
    let mut x = vec![0.0; GENES_PER_GATE * max_gates];
    for (slot, gate) in x.chunks_exact_mut(GENES_PER_GATE).zip(&g.gates) {
        slot[0] = gate.kind.index() as f64;
        slot[1] = gate.target as f64;
        slot[2] = gate.control.unwrap_or(gate.target) as f64;
        slot[3] = gate.angle;
    }
    Ok(x)
}

/// `M_k ... M_2 M_1` for gates `1..=k`; the identity for an empty circuit.
pub fn circuit_unitary(g: &CircuitGenome) -> UnitaryMatrix {
    let mut u = UnitaryMatrix::identity(g.n_qubits);
    for mut col in u.m.column_iter_mut() {
        let col = col.as_mut_slice();
        for gate in &g.gates {
            apply_gate(gate, g.n_qubits, col);
        }
    }
    u
}

pub fn circuit_cost(g: &CircuitGenome) -> f64 {
    g.gates.iter().map(GateSpec::cost).sum()
}
