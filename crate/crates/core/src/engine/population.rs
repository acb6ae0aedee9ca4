use rand::Rng;
use rayon::prelude::*;

use super::config::GloaConfig;
use crate::error::{Error, ObjectiveError, Result};
use crate::objective::Objective;
use crate::rng::{GloaRng, Streams};

/// A group member: decision variables plus a cached fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub values: Vec<f64>,
    fitness: Option<f64>,
}

impl Candidate {
    /// Unevaluated candidate.
    pub fn new(values: Vec<f64>) -> Self {
        Candidate {
            values,
            fitness: None,
        }
    }

    pub fn with_fitness(values: Vec<f64>, fitness: f64) -> Self {
        Candidate {
            values,
            fitness: Some(fitness),
        }
    }

    pub fn fitness(&self) -> Option<f64> {
        self.fitness
    }

    pub fn is_valid(&self) -> bool {
        self.fitness.is_some()
    }

    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    /// Evaluates and caches the fitness. NaN is stored as `+inf` so that
    /// comparisons stay total.
    pub fn evaluate<O: Objective + ?Sized>(&mut self, objective: &O) -> Result<f64, ObjectiveError> {
        let f = objective.evaluate(&self.values)?;
        let f = if f.is_nan() { f64::INFINITY } else { f };
        self.fitness = Some(f);
        Ok(f)
    }

    /// Overwrites the values and drops the cached fitness.
    pub fn set_values(&mut self, values: Vec<f64>) {
        self.values = values;
        self.fitness = None;
    }
}

/// Produces initial members from prior knowledge (e.g. a smaller solved problem).
pub trait Seeder: Sync {
    /// Fraction of each group drawn from [`Seeder::sample`]; the rest is uniform.
    fn fraction(&self) -> f64;

    fn sample(&self, rng: &mut GloaRng) -> Vec<f64>;
}

/// Index of the lowest fitness; ties resolve to the lowest index.
pub fn select_leader(members: &[Candidate]) -> Result<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (j, m) in members.iter().enumerate() {
        let f = m.fitness().ok_or(Error::StaleFitness { member: j })?;
        match best {
            Some((_, bf)) if f >= bf => {}
            _ => best = Some((j, f)),
        }
    }
    best.map(|(j, _)| j)
        .ok_or_else(|| Error::Config("cannot select a leader from an empty group".into()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub members: Vec<Candidate>,
    pub leader: usize,
}

impl Group {
    pub fn new(members: Vec<Candidate>) -> Result<Self> {
        let leader = select_leader(&members)?;
        Ok(Group { members, leader })
    }

    pub fn leader(&self) -> &Candidate {
        &self.members[self.leader]
    }

    pub fn leader_fitness(&self) -> f64 {
        self.leader().fitness().unwrap_or(f64::INFINITY)
    }

    pub fn refresh_leader(&mut self) -> Result<()> {
        self.leader = select_leader(&self.members)?;
        Ok(())
    }

    /// Evaluates `candidate` and stores it at `member` iff strictly better.
    /// The leader index follows an accepted candidate that beats the leader.
    pub fn greedy_replace<O: Objective + ?Sized>(
        &mut self,
        member: usize,
        mut candidate: Candidate,
        objective: &O,
    ) -> Result<bool, ObjectiveError> {
        let f = candidate.evaluate(objective)?;
        let current = self.members[member].fitness().unwrap_or(f64::INFINITY);
        if f < current {
            let lf = self.leader_fitness();
            self.members[member] = candidate;
            if f < lf || (f == lf && member < self.leader) {
                self.leader = member;
            }
            Ok(true)
        } else {
            Ok(false)
        }
    }
}

/// `n` groups of `p` members each.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSet {
    pub groups: Vec<Group>,
}

impl GroupSet {
    pub fn n(&self) -> usize {
        self.groups.len()
    }

    pub fn p(&self) -> usize {
        self.groups.first().map_or(0, |g| g.members.len())
    }

    pub fn leader_indices(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.leader).collect()
    }

    pub fn leader_fitnesses(&self) -> Vec<f64> {
        self.groups.iter().map(Group::leader_fitness).collect()
    }

    /// Global best as `(group, member)`, lowest group index on ties.
    pub fn best_position(&self) -> (usize, usize) {
        let mut best = (0, self.groups[0].leader);
        let mut best_f = self.groups[0].leader_fitness();
        for (i, g) in self.groups.iter().enumerate().skip(1) {
            if g.leader_fitness() < best_f {
                best_f = g.leader_fitness();
                best = (i, g.leader);
            }
        }
        best
    }

    pub fn best(&self) -> &Candidate {
        let (i, j) = self.best_position();
        &self.groups[i].members[j]
    }

    pub fn refresh_leaders(&mut self) -> Result<()> {
        self.groups.iter_mut().try_for_each(Group::refresh_leader)
    }

    pub fn greedy_replace<O: Objective + ?Sized>(
        &mut self,
        group: usize,
        member: usize,
        candidate: Candidate,
        objective: &O,
    ) -> Result<bool> {
        let dim = self.groups[group].members[member].dimension();
        if candidate.dimension() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: candidate.dimension(),
            });
        }
        self.groups[group]
            .greedy_replace(member, candidate, objective)
            .map_err(|source| Error::Evaluation {
                group,
                member,
                source,
            })
    }
}

pub(crate) fn check_dimension<O: Objective + ?Sized>(config: &GloaConfig, objective: &O) -> Result<()> {
    if config.dimension() != objective.dimension() {
        return Err(Error::DimensionMismatch {
            expected: objective.dimension(),
            actual: config.dimension(),
        });
    }
    Ok(())
}

fn uniform_point(config: &GloaConfig, rng: &mut GloaRng) -> Vec<f64> {
    config
        .bounds
        .iter()
        .map(|b| {
            if b.width() > 0.0 {
                rng.gen_range(b.low..=b.high)
            } else {
                b.low
            }
        })
        .collect()
}

fn init_group<O: Objective + ?Sized>(
    group: usize,
    config: &GloaConfig,
    objective: &O,
    seeder: Option<&dyn Seeder>,
    rng: &mut GloaRng,
) -> Result<Group> {
    let seeded = seeder.map_or(0, |s| {
        ((s.fraction().clamp(0.0, 1.0) * config.members as f64).round()) as usize
    });
    let mut members = Vec::with_capacity(config.members);
    for j in 0..config.members {
        let values = match seeder {
            Some(s) if j < seeded => s.sample(rng),
            _ => uniform_point(config, rng),
        };
        if values.len() != config.dimension() {
            return Err(Error::DimensionMismatch {
                expected: config.dimension(),
                actual: values.len(),
            });
        }
        let mut c = Candidate::new(values);
        c.evaluate(objective).map_err(|source| Error::Evaluation {
            group,
            member: j,
            source,
        })?;
        members.push(c);
    }
    Group::new(members)
}

/// Random initial population with every fitness evaluated and leaders chosen.
pub fn init_population<O: Objective + ?Sized>(
    config: &GloaConfig,
    objective: &O,
    streams: &mut Streams,
    seeder: Option<&dyn Seeder>,
) -> Result<GroupSet> {
    config.validate()?;
    check_dimension(config, objective)?;
    if streams.groups.len() != config.groups {
        return Err(Error::Config(format!(
            "{} random streams for {} groups",
            streams.groups.len(),
            config.groups
        )));
    }
    let groups = if config.parallel {
        streams
            .groups
            .par_iter_mut()
            .enumerate()
            .map(|(i, rng)| init_group(i, config, objective, seeder, rng))
            .collect::<Result<Vec<_>>>()?
    } else {
        streams
            .groups
            .iter_mut()
            .enumerate()
            .map(|(i, rng)| init_group(i, config, objective, seeder, rng))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(GroupSet { groups })
}
