use std::f64::consts::TAU;

use super::gates::GateKind;
use super::genome::{circuit_cost, circuit_unitary, decode_genome, CircuitGenome, GENES_PER_GATE};
use super::{correctness, grover_diffusion, UnitaryMatrix};
use crate::engine::{BoundPolicy, GloaConfig, Rates};
use crate::error::{ObjectiveError, Result};
use crate::objective::{Interval, Objective};

/// Scores a genome against a target unitary:
/// `y = |1 - (alpha * C + beta / cost)|`, with `C` the trace correctness and
/// the cost term taken as 0 for an empty circuit.
#[derive(Debug, Clone)]
pub struct SynthesisObjective {
    pub target: UnitaryMatrix,
    pub alpha: f64,
    pub beta: f64,
    pub max_gates: usize,
}

impl SynthesisObjective {
    pub fn new(target: UnitaryMatrix, max_gates: usize) -> Self {
        SynthesisObjective {
            target,
            alpha: 0.9,
            beta: 0.1,
            max_gates,
        }
    }

    pub fn with_weights(mut self, alpha: f64, beta: f64) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    pub fn n_qubits(&self) -> usize {
        self.target.n_qubits()
    }

    pub fn decode(&self, x: &[f64]) -> Result<CircuitGenome> {
        decode_genome(x, self.n_qubits(), self.max_gates)
    }

    /// Search box per gate: kind `[0, 11.49]`, qubits `[-0.49, n - 0.51]`,
    /// angle `[0, 2pi]`, so rounding hits every discrete value evenly.
    pub fn bounds(&self) -> Vec<Interval> {
        let q = Interval::new(-0.49, self.n_qubits() as f64 - 0.51);
        let gate = [
            Interval::new(0.0, GateKind::MAX_INDEX as f64 + 0.49),
            q,
            q,
            Interval::new(0.0, TAU),
        ];
        gate.iter().copied().cycle().take(GENES_PER_GATE * self.max_gates).collect()
    }

    /// `(y, C, cost)` of a decoded circuit.
    pub fn score(&self, circuit: &CircuitGenome) -> Result<(f64, f64, f64)> {
        let c = correctness(&self.target, &circuit_unitary(circuit))?;
        let cost = circuit_cost(circuit);
        let cost_term = if circuit.is_empty() { 0.0 } else { self.beta / cost };
        Ok(((1.0 - (self.alpha * c + cost_term)).abs(), c, cost))
    }
}

impl Objective for SynthesisObjective {
    fn dimension(&self) -> usize {
        GENES_PER_GATE * self.max_gates
    }

    fn evaluate(&self, x: &[f64]) -> std::result::Result<f64, ObjectiveError> {
        let circuit = self.decode(x).map_err(|e| ObjectiveError(e.to_string()))?;
        self.score(&circuit).map(|s| s.0).map_err(|e| ObjectiveError(e.to_string()))
    }
}

/// Two-qubit diffusion target with 8 gate slots and the matching engine
/// settings: 15 groups of 25, rates 0.8/0.1/0.1, 1000 iterations, clipped to
/// the genome box.
pub fn diffusion_preset() -> (SynthesisObjective, GloaConfig) {
    let objective = SynthesisObjective::new(grover_diffusion(2).expect("two qubits"), 8);
    let mut config = GloaConfig::new(15, 25, Rates::fixed(0.8, 0.1, 0.1), objective.bounds());
    config.bound_policy = BoundPolicy::Clip;
    config.max_iterations = 1000;
    (objective, config)
}
