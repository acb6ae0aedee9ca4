use rayon::prelude::*;

use super::{seed_from_smaller, ClusterGeometry, LjObjective, ReferenceMinima};
use crate::engine::{BoundPolicy, Gloa, GloaConfig, RandomTerm, Rate, Rates, RunReport};
use crate::error::{Error, Result};
use crate::fit::{fit_power_law, PowerLawFit};
use crate::objective::Interval;

/// Default engine settings for an `n`-particle cluster: 15 groups of 30,
/// `r1 ~ U[0.85, 0.95]` with `r2 = 1 - r1`, `r3 ~ U[1e-4, 1e-3]` scaling a
/// `U[-1, 1]` perturbation, initial coordinates in `[-2, 2]`, and at most 3000
/// iterations. Coordinates are free to leave the initial box.
pub fn preset(n_particles: usize) -> GloaConfig {
    let rates = Rates {
        r1: Rate::between(0.85, 0.95),
        r2: Rate::between(0.05, 0.15),
        r3: Rate::between(0.001, 0.0001),
        complementary: true,
    };
    let mut c = GloaConfig::new(15, 30, rates, vec![Interval::symmetric(2.0); 3 * n_particles]);
    c.random_term = RandomTerm::Symmetric;
    c.bound_policy = BoundPolicy::FreeAfterInit;
    c.transfer_mutation = true;
    c.max_iterations = 3000;
    c
}

/// `template` resized to `n` particles, stopping within `tolerance` of the
/// reference energy when one is known.
fn sized(template: &GloaConfig, n: usize, reference: &ReferenceMinima, tolerance: f64) -> GloaConfig {
    let mut c = template.clone();
    let init = template.bounds.first().copied().unwrap_or(Interval::symmetric(2.0));
    c.bounds = vec![init; 3 * n];
    c.target = reference.get(n).map(|e| crate::engine::Target {
        value: e,
        tolerance,
    });
    c
}

/// First time a cold-start run came within tolerance of the reference energy.
#[derive(Debug, Clone, PartialEq)]
pub struct Encounter {
    pub run: usize,
    pub seed: u64,
    /// `None` when the run hit its iteration cap first (censored).
    pub iterations: Option<usize>,
    pub seconds: f64,
    pub final_energy: f64,
}

/// Independent cold-start runs seeded `template.seed + run`, in parallel.
pub fn first_encounter_experiment(
    n: usize,
    runs: usize,
    template: &GloaConfig,
    tolerance: f64,
    reference: &ReferenceMinima,
) -> Result<Vec<Encounter>> {
    if reference.get(n).is_none() {
        return Err(Error::Domain(format!("no reference energy for N = {n}")));
    }
    let objective = LjObjective::new(n);
    (0..runs)
        .into_par_iter()
        .map(|run| {
            let mut config = sized(template, n, reference, tolerance);
            config.seed = template.seed.wrapping_add(run as u64);
            config.parallel = false;
            let report = Gloa::new(&config, &objective).run()?;
            let reached = report.termination_reason == crate::engine::TerminationReason::TargetReached;
            Ok(Encounter {
                run,
                seed: config.seed,
                iterations: reached.then_some(report.iterations_run),
                seconds: report.elapsed,
                final_energy: report.best_fitness(),
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct IncrementalStep {
    pub n: usize,
    pub report: RunReport,
    pub geometry: ClusterGeometry,
}

/// Solves `sizes` in ascending order, seeding each size from the best
/// geometry found for the previous one. The first size starts cold.
pub fn incremental_chain(
    sizes: &[usize],
    template: &GloaConfig,
    reference: &ReferenceMinima,
    tolerance: f64,
    seed_fraction: f64,
) -> Result<Vec<IncrementalStep>> {
    if sizes.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain("cluster sizes must be strictly ascending".into()));
    }
    let mut steps: Vec<IncrementalStep> = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let config = sized(template, n, reference, tolerance);
        let objective = LjObjective::new(n);
        let report = match steps.last() {
            Some(prev) if prev.n + 1 == n => {
                let seeder = seed_from_smaller(&prev.geometry, seed_fraction);
                Gloa::new(&config, &objective).seeder(&seeder).run()?
            }
            _ => Gloa::new(&config, &objective).run()?,
        };
        let geometry = ClusterGeometry::new(report.best_candidate.values.clone())
            .map_err(|e| Error::Domain(e.to_string()))?;
        steps.push(IncrementalStep { n, report, geometry });
    }
    Ok(steps)
}

#[derive(Debug, Clone)]
pub struct ScalingResult {
    /// `(N, seconds, final energy)` per cluster size.
    pub table: Vec<(usize, f64, f64)>,
    /// Exponent of `seconds ~ N^b`; `None` with fewer than three sizes.
    pub fit: Option<PowerLawFit>,
}

/// Wall time of incrementally seeded runs over `sizes` and its power-law fit.
pub fn scaling_experiment(
    sizes: &[usize],
    template: &GloaConfig,
    reference: &ReferenceMinima,
    tolerance: f64,
    seed_fraction: f64,
) -> Result<ScalingResult> {
    let steps = incremental_chain(sizes, template, reference, tolerance, seed_fraction)?;
    let table: Vec<(usize, f64, f64)> = steps
        .iter()
        .map(|s| (s.n, s.report.elapsed.max(1e-9), s.report.best_fitness()))
        .collect();
    let fit = if table.len() >= 3 {
        let points: Vec<(f64, f64)> = table.iter().map(|&(n, t, _)| (n as f64, t)).collect();
        Some(fit_power_law(&points)?)
    } else {
        None
    };
    Ok(ScalingResult { table, fit })
}
