//! The optimization engine.
//!
//! A run proceeds as:
//!
//! 1. random groups (optionally partly seeded) are created and evaluated and
//!    each group picks its leader;
//! 2. every member of every group is mixed with its leader and a random point
//!    ([`mutate_recombine`]) and replaced when the result is strictly better;
//! 3. groups exchange single variables through [`one_way_crossover`];
//! 4. steps 2-3 repeat until the iteration budget or the target is reached.
//!
//! Step 2 touches only one group at a time and can run on the rayon pool.
//! Step 3 reads across groups and always runs sequentially after it.

mod config;
mod operators;
mod population;

use std::time::Instant;

use rayon::prelude::*;

pub use config::{
    BoundPolicy, GloaConfig, RandomTerm, Rate, Rates, Refinement, SampledRates, Target,
};
pub use operators::{
    mutate_recombine, one_way_crossover, random_point, recombine, transfer_budget, Transfers,
};
pub use population::{init_population, select_leader, Candidate, Group, GroupSet, Seeder};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::{GloaRng, Streams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminationReason {
    MaxIterations,
    TargetReached,
}

impl TerminationReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            TerminationReason::MaxIterations => "max_iterations",
            TerminationReason::TargetReached => "target_reached",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub best_candidate: Candidate,
    /// Entry 0 is the initial population, entry `k` the state after iteration `k`.
    pub best_fitness_per_iteration: Vec<f64>,
    pub evaluations: usize,
    pub iterations_run: usize,
    pub termination_reason: TerminationReason,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl RunReport {
    pub fn best_fitness(&self) -> f64 {
        self.best_candidate.fitness().unwrap_or(f64::INFINITY)
    }
}

/// Read-only view handed to the per-iteration hook.
#[derive(Debug)]
pub struct IterationInfo<'a> {
    pub iteration: usize,
    pub best_fitness: f64,
    pub leader_fitnesses: &'a [f64],
}

/// Mutable state of a run, exposed so callers can step it by hand.
#[derive(Debug, Clone)]
pub struct RunState {
    pub groups: GroupSet,
    pub streams: Streams,
    pub evaluations: usize,
}

impl RunState {
    pub fn init<O: Objective + ?Sized>(
        config: &GloaConfig,
        objective: &O,
        seeder: Option<&dyn Seeder>,
    ) -> Result<Self> {
        let mut streams = Streams::new(config.seed, config.groups);
        let groups = init_population(config, objective, &mut streams, seeder)?;
        Ok(RunState {
            groups,
            streams,
            evaluations: config.groups * config.members,
        })
    }

    /// One full iteration: leader refresh, mutation sweep, crossover, and
    /// optional refinement when `iteration` is a multiple of its interval.
    pub fn step<O: Objective + ?Sized>(
        &mut self,
        config: &GloaConfig,
        objective: &O,
        iteration: usize,
    ) -> Result<()> {
        self.groups.refresh_leaders()?;
        self.sweep(config, objective)?;
        let t = one_way_crossover(&mut self.groups, objective, config, &mut self.streams.crossover)?;
        self.evaluations += t.attempted;
        if let Some(r) = config.refinement {
            if iteration % r.every == 0 {
                self.refine_leaders(objective, r.max_steps)?;
            }
        }
        Ok(())
    }

    /// Mutation and recombination over all `n * p` members.
    pub fn sweep<O: Objective + ?Sized>(&mut self, config: &GloaConfig, objective: &O) -> Result<()> {
        let work = |(i, (group, rng)): (usize, (&mut Group, &mut GloaRng))| -> Result<()> {
            for j in 0..group.members.len() {
                let candidate = mutate_recombine(&group.members[j], group.leader(), config, rng)?;
                group
                    .greedy_replace(j, candidate, objective)
                    .map_err(|source| Error::Evaluation {
                        group: i,
                        member: j,
                        source,
                    })?;
            }
            Ok(())
        };
        if config.parallel {
            self.groups
                .groups
                .par_iter_mut()
                .zip(self.streams.groups.par_iter_mut())
                .enumerate()
                .try_for_each(work)?;
        } else {
            self.groups
                .groups
                .iter_mut()
                .zip(self.streams.groups.iter_mut())
                .enumerate()
                .try_for_each(work)?;
        }
        self.evaluations += config.groups * config.members;
        Ok(())
    }

    fn refine_leaders<O: Objective + ?Sized>(&mut self, objective: &O, max_steps: usize) -> Result<()> {
        for (i, group) in self.groups.groups.iter_mut().enumerate() {
            let mut values = group.leader().values.clone();
            if objective.refine(&mut values, max_steps).is_none() {
                return Ok(());
            }
            let leader = group.leader;
            self.evaluations += 1;
            group
                .greedy_replace(leader, Candidate::new(values), objective)
                .map_err(|source| Error::Evaluation {
                    group: i,
                    member: leader,
                    source,
                })?;
        }
        Ok(())
    }
}

/// Runner tying a configuration to an objective.
///
/// ```
/// use gloa_core::{FnObjective, Gloa, GloaConfig, Interval, Rates};
///
/// let sphere = FnObjective::new(2, |x: &[f64]| x.iter().map(|v| v * v).sum());
/// let config = GloaConfig::new(4, 10, Rates::fixed(0.6, 0.2, 0.2), vec![Interval::symmetric(5.0); 2])
///     .with_max_iterations(50);
/// let report = Gloa::new(&config, &sphere).run().unwrap();
/// assert_eq!(report.best_fitness_per_iteration.len(), 51);
/// ```
pub struct Gloa<'a, O: ?Sized> {
    config: &'a GloaConfig,
    objective: &'a O,
    seeder: Option<&'a dyn Seeder>,
    hook: Option<Box<dyn FnMut(&IterationInfo<'_>) + 'a>>,
}

impl<'a, O: Objective + ?Sized> Gloa<'a, O> {
    pub fn new(config: &'a GloaConfig, objective: &'a O) -> Self {
        Gloa {
            config,
            objective,
            seeder: None,
            hook: None,
        }
    }

    pub fn seeder(mut self, seeder: &'a dyn Seeder) -> Self {
        self.seeder = Some(seeder);
        self
    }

    pub fn on_iteration(mut self, hook: impl FnMut(&IterationInfo<'_>) + 'a) -> Self {
        self.hook = Some(Box::new(hook));
        self
    }

    pub fn run(mut self) -> Result<RunReport> {
        let start = Instant::now();
        let config = self.config;
        let mut state = RunState::init(config, self.objective, self.seeder)?;
        let mut trajectory = vec![state.groups.best().fitness().unwrap_or(f64::INFINITY)];
        self.notify(0, &state.groups, trajectory[0]);

        let mut reason = TerminationReason::MaxIterations;
        let mut iterations = 0;
        if config.target.is_some_and(|t| t.reached(trajectory[0])) {
            reason = TerminationReason::TargetReached;
        } else {
            for it in 1..=config.max_iterations {
                if let Err(e) = state.step(config, self.objective, it) {
                    let partial = report(&state, trajectory, iterations, reason, start);
                    return Err(Error::Aborted {
                        partial: Box::new(partial),
                        source: Box::new(e),
                    });
                }
                iterations = it;
                let best = state.groups.best().fitness().unwrap_or(f64::INFINITY);
                trajectory.push(best);
                self.notify(it, &state.groups, best);
                if config.target.is_some_and(|t| t.reached(best)) {
                    reason = TerminationReason::TargetReached;
                    break;
                }
            }
        }
        Ok(report(&state, trajectory, iterations, reason, start))
    }

    fn notify(&mut self, iteration: usize, groups: &GroupSet, best: f64) {
        if let Some(hook) = self.hook.as_mut() {
            let leaders = groups.leader_fitnesses();
            hook(&IterationInfo {
                iteration,
                best_fitness: best,
                leader_fitnesses: &leaders,
            });
        }
    }
}

fn report(
    state: &RunState,
    trajectory: Vec<f64>,
    iterations: usize,
    reason: TerminationReason,
    start: Instant,
) -> RunReport {
    RunReport {
        best_candidate: state.groups.best().clone(),
        best_fitness_per_iteration: trajectory,
        evaluations: state.evaluations,
        iterations_run: iterations,
        termination_reason: reason,
        elapsed: start.elapsed().as_secs_f64(),
    }
}

/// Shorthand for `Gloa::new(config, objective).run()`.
pub fn run<O: Objective + ?Sized>(config: &GloaConfig, objective: &O) -> Result<RunReport> {
    Gloa::new(config, objective).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objective::{FnObjective, Interval};
    use crate::ObjectiveError;

    fn sphere(dim: usize) -> FnObjective<impl Fn(&[f64]) -> f64 + Sync> {
        FnObjective::new(dim, |x: &[f64]| x.iter().map(|v| v * v).sum())
    }

    #[test]
    fn zero_iterations_reports_initial_best() {
        let obj = sphere(2);
        let config = GloaConfig::new(3, 4, Rates::fixed(0.8, 0.2, 0.0), vec![Interval::symmetric(10.0); 2])
            .with_max_iterations(0);
        let r = run(&config, &obj).unwrap();
        assert_eq!(r.iterations_run, 0);
        assert_eq!(r.best_fitness_per_iteration.len(), 1);
        assert_eq!(r.best_fitness(), r.best_fitness_per_iteration[0]);
        assert_eq!(r.evaluations, 12);
        assert_eq!(r.termination_reason, TerminationReason::MaxIterations);
    }

    #[test]
    fn sphere_converges() {
        let obj = sphere(2);
        let config = GloaConfig::new(10, 25, Rates::fixed(0.6, 0.2, 0.2), vec![Interval::symmetric(100.0); 2])
            .with_max_iterations(200)
            .with_seed(1);
        let r = run(&config, &obj).unwrap();
        assert!(r.best_fitness() <= 1e-4, "best {}", r.best_fitness());
        assert!(r.best_fitness() < 1e-6 * r.best_fitness_per_iteration[0]);
    }

    #[test]
    fn target_stops_early() {
        let obj = sphere(2);
        let config = GloaConfig::new(5, 10, Rates::fixed(0.6, 0.2, 0.2), vec![Interval::symmetric(5.0); 2])
            .with_max_iterations(5000)
            .with_target(0.0, 1e-2);
        let r = run(&config, &obj).unwrap();
        assert_eq!(r.termination_reason, TerminationReason::TargetReached);
        assert!(r.iterations_run < 5000);
        assert!(r.best_fitness() <= 1e-2);
    }

    #[test]
    fn hook_sees_every_iteration() {
        let obj = sphere(3);
        let config = GloaConfig::new(3, 5, Rates::fixed(0.6, 0.2, 0.2), vec![Interval::symmetric(5.0); 3])
            .with_max_iterations(7);
        let mut seen = Vec::new();
        let r = Gloa::new(&config, &obj)
            .on_iteration(|info| {
                assert_eq!(info.leader_fitnesses.len(), 3);
                seen.push((info.iteration, info.best_fitness));
            })
            .run()
            .unwrap();
        assert_eq!(seen.len(), 8);
        let fs: Vec<f64> = seen.iter().map(|s| s.1).collect();
        assert_eq!(fs, r.best_fitness_per_iteration);
    }

    #[test]
    fn abort_keeps_partial_trajectory() {
        use std::sync::atomic::{AtomicUsize, Ordering};
        struct Flaky(AtomicUsize);
        impl Objective for Flaky {
            fn dimension(&self) -> usize {
                1
            }
            fn evaluate(&self, x: &[f64]) -> std::result::Result<f64, ObjectiveError> {
                if self.0.fetch_add(1, Ordering::SeqCst) >= 100 {
                    Err(ObjectiveError("model crashed".into()))
                } else {
                    Ok(x[0] * x[0])
                }
            }
        }
        let config = GloaConfig::new(2, 4, Rates::fixed(0.6, 0.2, 0.2), vec![Interval::symmetric(1.0)])
            .with_max_iterations(100);
        match Gloa::new(&config, &Flaky(AtomicUsize::new(0))).run() {
            Err(Error::Aborted { partial, source }) => {
                assert!(partial.iterations_run > 0);
                assert_eq!(partial.best_fitness_per_iteration.len(), partial.iterations_run + 1);
                assert!(matches!(*source, Error::Evaluation { .. }));
            }
            other => panic!("expected abort, got {other:?}"),
        }
    }
}
