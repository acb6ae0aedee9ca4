//! Experiment files.
//!
//! An experiment names one objective and optionally overrides engine
//! settings; anything left out of `[gloa]` falls back to the objective's own
//! defaults.
//!
//! ```toml
//! repeats = 10
//!
//! [objective]
//! kind = "benchmark"
//! name = "rastrigin"
//! dimension = 50
//!
//! [gloa]
//! groups = 10
//! r1 = 0.6
//! r2 = [0.1, 0.3]   # sampled on every use
//! ```

use std::path::{Path, PathBuf};

use gloa_core::benchmarks::{self, BenchmarkObjective, BenchmarkSpec};
use gloa_core::lj::{self, ReferenceMinima};
use gloa_core::quantum::{self, SynthesisObjective, UnitaryMatrix, MAX_QUBITS};
use gloa_core::{BoundPolicy, GloaConfig, Interval, Objective, RandomTerm, Rate, Refinement, Target};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default = "one")]
    pub repeats: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_dir: Option<PathBuf>,
    pub objective: ObjectiveConfig,
    #[serde(default)]
    pub gloa: GloaSection,
    #[serde(default)]
    pub report: ReportFlags,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObjectiveConfig {
    Benchmark(BenchmarkParams),
    Lj(LjParams),
    Quantum(QuantumParams),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchmarkParams {
    pub name: String,
    /// Required for the n-dimensional functions; the two-variable ones
    /// accept only 2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LjParams {
    pub particles: usize,
    /// Solve every size from this one up, seeding each from the previous
    /// solution.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incremental_from: Option<usize>,
    /// Share of every group seeded from the smaller cluster (default 0.5).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_fraction: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuantumTarget {
    Diffusion,
    Oracle,
    File,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumParams {
    pub target: QuantumTarget,
    /// Register size for the generated targets (default 2).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubits: Option<usize>,
    /// Marked state of the oracle target.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<usize>,
    /// `re im` text file for `target = "file"`, relative to the config file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_gates: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
}

/// A rate given as a constant or as `[low, high]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RateSpec {
    Fixed(f64),
    Range([f64; 2]),
}

impl RateSpec {
    fn to_rate(self, field: &str) -> Result<Rate> {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        match self {
            RateSpec::Fixed(v) if unit(v) => Ok(Rate::Fixed(v)),
            RateSpec::Range([a, b]) if unit(a) && unit(b) => Ok(Rate::between(a, b)),
            _ => Err(CliError::field(field, "must lie in [0, 1]")),
        }
    }
}

impl From<Rate> for RateSpec {
    fn from(r: Rate) -> Self {
        match r {
            Rate::Fixed(v) => RateSpec::Fixed(v),
            Rate::Interval(iv) => RateSpec::Range([iv.low, iv.high]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RandomTermName {
    Domain,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundPolicyName {
    Clip,
    FreeAfterInit,
}

/// Engine overrides; every field is optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GloaSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r1: Option<RateSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r2: Option<RateSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r3: Option<RateSpec>,
    /// Take `r2 = 1 - r1` on every draw.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complementary: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random_term: Option<RandomTermName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_policy: Option<BoundPolicyName>,
    /// Same `[low, high]` for every variable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    /// Stop once the best fitness is within `tolerance` of this value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// `false` disables the target stop, including the objective's default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub early_stop: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallel: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transfer_mutation: Option<bool>,
    /// Refine leaders every this many iterations (objectives that support it).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refine_every: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refine_steps: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReportFlags {
    pub trajectory: bool,
    pub summary: bool,
    /// First-encounter table; needs a target.
    pub encounters: bool,
    /// XYZ geometries and circuit files.
    pub artifacts: bool,
}

impl Default for ReportFlags {
    fn default() -> Self {
        ReportFlags {
            trajectory: true,
            summary: true,
            encounters: false,
            artifacts: true,
        }
    }
}

pub const DEFAULT_SEED_FRACTION: f64 = 0.5;
const DEFAULT_TOLERANCE: f64 = 1e-6;
const LJ_TOLERANCE: f64 = 1e-3;

/// A resolved objective, ready to run.
#[derive(Debug, Clone)]
pub enum Problem {
    Benchmark {
        spec: BenchmarkSpec,
        objective: BenchmarkObjective,
    },
    Lj {
        particles: usize,
        chain_from: Option<usize>,
        seed_fraction: f64,
        reference: ReferenceMinima,
    },
    Quantum(SynthesisObjective),
}

impl Problem {
    pub fn dimension(&self) -> usize {
        match self {
            Problem::Benchmark { objective, .. } => objective.dimension(),
            Problem::Lj { particles, .. } => 3 * particles,
            Problem::Quantum(q) => q.dimension(),
        }
    }

    /// Engine defaults for this objective (for LJ, at `n` particles).
    fn default_config(&self, n: usize) -> GloaConfig {
        match self {
            Problem::Benchmark { spec, objective } => {
                let mut c = spec.preset(objective.dimension());
                if spec.benchmark.is_two_variable() {
                    c.target = Some(Target {
                        value: spec.known_minimum_value,
                        tolerance: DEFAULT_TOLERANCE,
                    });
                }
                c
            }
            Problem::Lj { reference, .. } => {
                let mut c = lj::preset(n);
                c.target = reference.get(n).map(|value| Target {
                    value,
                    tolerance: LJ_TOLERANCE,
                });
                c
            }
            Problem::Quantum(_) => quantum::diffusion_preset().1,
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        parse_config(text, &[])
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Checks every field and resolves the objective. `base_dir` anchors
    /// relative paths inside the config.
    pub fn problem(&self, base_dir: &Path) -> Result<Problem> {
        if self.repeats == 0 {
            return Err(CliError::field("repeats", "must be at least 1"));
        }
        match &self.objective {
            ObjectiveConfig::Benchmark(b) => {
                let spec = benchmarks::registry(&b.name).ok_or_else(|| {
                    let known: Vec<&str> = benchmarks::Benchmark::ALL.iter().map(|b| b.name()).collect();
                    CliError::field("objective.name", format!("unknown benchmark {:?} (known: {})", b.name, known.join(", ")))
                })?;
                let dimension = match (b.dimension, spec.benchmark.is_two_variable()) {
                    (Some(d), _) => d,
                    (None, true) => 2,
                    (None, false) => {
                        return Err(CliError::field("objective.dimension", format!("required for {}", b.name)))
                    }
                };
                let objective = BenchmarkObjective::new(spec.benchmark, dimension)
                    .map_err(|_| CliError::field("objective.dimension", format!("{} is not defined for dimension {dimension}", b.name)))?;
                Ok(Problem::Benchmark { spec, objective })
            }
            ObjectiveConfig::Lj(l) => {
                if l.particles < 2 {
                    return Err(CliError::field("objective.particles", "need at least 2 particles"));
                }
                if let Some(from) = l.incremental_from {
                    if from < 2 || from >= l.particles {
                        return Err(CliError::field(
                            "objective.incremental_from",
                            format!("must lie in 2..{}", l.particles),
                        ));
                    }
                }
                let seed_fraction = l.seed_fraction.unwrap_or(DEFAULT_SEED_FRACTION);
                if !(0.0..=1.0).contains(&seed_fraction) {
                    return Err(CliError::field("objective.seed_fraction", "must lie in [0, 1]"));
                }
                Ok(Problem::Lj {
                    particles: l.particles,
                    chain_from: l.incremental_from,
                    seed_fraction,
                    reference: ReferenceMinima::builtin(),
                })
            }
            ObjectiveConfig::Quantum(q) => {
                let qubits = q.qubits.unwrap_or(2);
                if qubits == 0 || qubits > MAX_QUBITS {
                    return Err(CliError::field("objective.qubits", format!("must lie in 1..={MAX_QUBITS}")));
                }
                let target = match q.target {
                    QuantumTarget::Diffusion => quantum::grover_diffusion(qubits)?,
                    QuantumTarget::Oracle => {
                        let a = q.marked.ok_or_else(|| CliError::field("objective.marked", "required for the oracle target"))?;
                        quantum::grover_oracle(a, qubits)
                            .map_err(|e| CliError::field("objective.marked", e.to_string()))?
                    }
                    QuantumTarget::File => {
                        let rel = q.file.as_ref().ok_or_else(|| CliError::field("objective.file", "required for target = \"file\""))?;
                        load_unitary(&base_dir.join(rel))?
                    }
                };
                let max_gates = q.max_gates.unwrap_or(8);
                if max_gates == 0 {
                    return Err(CliError::field("objective.max_gates", "must be at least 1"));
                }
                let mut objective = SynthesisObjective::new(target, max_gates);
                let (alpha, beta) = (q.alpha.unwrap_or(objective.alpha), q.beta.unwrap_or(objective.beta));
                for (name, v) in [("objective.alpha", alpha), ("objective.beta", beta)] {
                    if !(v >= 0.0 && v.is_finite()) {
                        return Err(CliError::field(name, "must be a non-negative number"));
                    }
                }
                objective = objective.with_weights(alpha, beta);
                Ok(Problem::Quantum(objective))
            }
        }
    }

    /// Engine settings for `problem` at `n` particles (ignored for other
    /// objectives): the objective defaults with `[gloa]` applied on top.
    pub fn engine_config(&self, problem: &Problem, n: usize) -> Result<GloaConfig> {
        let g = &self.gloa;
        let mut c = problem.default_config(n);
        let dim = c.dimension();
        if let Some(v) = g.groups {
            c.groups = v;
        }
        if let Some(v) = g.members {
            c.members = v;
        }
        if c.groups == 0 {
            return Err(CliError::field("gloa.groups", "must be at least 1"));
        }
        if c.members == 0 {
            return Err(CliError::field("gloa.members", "must be at least 1"));
        }
        if let Some(r) = g.r1 {
            c.rates.r1 = r.to_rate("gloa.r1")?;
        }
        if let Some(r) = g.r2 {
            c.rates.r2 = r.to_rate("gloa.r2")?;
        }
        if let Some(r) = g.r3 {
            c.rates.r3 = r.to_rate("gloa.r3")?;
        }
        if let Some(v) = g.complementary {
            c.rates.complementary = v;
        }
        if let Some(v) = g.random_term {
            c.random_term = match v {
                RandomTermName::Domain => RandomTerm::Domain,
                RandomTermName::Symmetric => RandomTerm::Symmetric,
            };
        }
        if let Some(v) = g.bound_policy {
            c.bound_policy = match v {
                BoundPolicyName::Clip => BoundPolicy::Clip,
                BoundPolicyName::FreeAfterInit => BoundPolicy::FreeAfterInit,
            };
        }
        if let Some([lo, hi]) = g.bounds {
            if matches!(problem, Problem::Quantum(_)) {
                return Err(CliError::field("gloa.bounds", "fixed by the genome layout for quantum objectives"));
            }
            let iv = Interval::new(lo, hi);
            if !iv.is_valid() || lo == hi {
                return Err(CliError::field("gloa.bounds", "expected [low, high] with low < high"));
            }
            c.bounds = vec![iv; dim];
        }
        if let Some(v) = g.max_iterations {
            c.max_iterations = v;
        }
        let tolerance = g.tolerance.or(c.target.map(|t| t.tolerance)).unwrap_or(DEFAULT_TOLERANCE);
        if !(tolerance >= 0.0) {
            return Err(CliError::field("gloa.tolerance", "must be non-negative"));
        }
        c.target = match (g.target, c.target) {
            (Some(value), _) => Some(Target { value, tolerance }),
            (None, Some(t)) => Some(Target { value: t.value, tolerance }),
            (None, None) => None,
        };
        if g.early_stop == Some(false) {
            c.target = None;
        }
        if let Some(v) = g.seed {
            c.seed = v;
        }
        if let Some(v) = g.parallel {
            c.parallel = v;
        }
        if let Some(v) = g.transfer_mutation {
            c.transfer_mutation = v;
        }
        if g.refine_every.is_some() || g.refine_steps.is_some() {
            let d = Refinement::default();
            let every = g.refine_every.unwrap_or(d.every);
            if every == 0 {
                return Err(CliError::field("gloa.refine_every", "must be at least 1"));
            }
            c.refinement = Some(Refinement {
                every,
                max_steps: g.refine_steps.unwrap_or(d.max_steps),
            });
        }
        c.validate().map_err(|e| CliError::field("gloa", e.to_string()))?;
        Ok(c)
    }

    /// Resolves the objective and the engine settings, reporting the first
    /// bad field.
    pub fn validate(&self, base_dir: &Path) -> Result<()> {
        let problem = self.problem(base_dir)?;
        let n = match &problem {
            Problem::Lj { particles, .. } => *particles,
            _ => 0,
        };
        self.engine_config(&problem, n).map(|_| ())
    }
}

/// Parses `text`, applying `key=value` overrides (dotted keys, TOML values;
/// bare words are taken as strings) before validation.
pub fn parse_config(text: &str, overrides: &[String]) -> Result<ExperimentConfig> {
    if overrides.is_empty() {
        return toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()));
    }
    let mut table: toml::Table = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    for raw in overrides {
        apply_override(&mut table, raw)?;
    }
    // Re-serialize so errors still quote the offending key.
    let text = toml::to_string(&table).map_err(|e| CliError::Parse(e.to_string()))?;
    toml::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn load_config(path: &Path, overrides: &[String]) -> Result<ExperimentConfig> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_config(&text, overrides).map_err(|e| match e {
        CliError::Parse(m) => CliError::Input {
            path: path.to_path_buf(),
            message: m,
        },
        other => other,
    })
}

pub fn apply_override(table: &mut toml::Table, raw: &str) -> Result<()> {
    let (key, value) = raw
        .split_once('=')
        .ok_or_else(|| CliError::Parse(format!("override {raw:?}: expected key=value")))?;
    let key = key.trim();
    let parts: Vec<&str> = key.split('.').collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Parse(format!("override {raw:?}: empty key segment")));
    }
    let value = parse_value(value.trim());
    let (last, path) = parts.split_last().expect("split yields at least one segment");
    let mut node = table;
    for (i, p) in path.iter().enumerate() {
        let entry = node
            .entry(p.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        node = entry
            .as_table_mut()
            .ok_or_else(|| CliError::field(parts[..=i].join("."), "is not a table"))?;
    }
    node.insert(last.to_string(), value);
    Ok(())
}

fn parse_value(raw: &str) -> toml::Value {
    toml::from_str::<toml::Table>(&format!("v = {raw}"))
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(raw.to_string()))
}

pub fn load_unitary(path: &Path) -> Result<UnitaryMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    quantum::parse_unitary(&text).map_err(|e| CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}
