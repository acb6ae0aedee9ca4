use rand::Rng;

use super::config::{BoundPolicy, GloaConfig, RandomTerm, SampledRates};
use super::population::{Candidate, GroupSet};
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::GloaRng;

/// `r1 * old + r2 * leader + r3 * random`, coordinate-wise.
pub fn recombine(old: &[f64], leader: &[f64], random: &[f64], rates: SampledRates) -> Vec<f64> {
    old.iter()
        .zip(leader)
        .zip(random)
        .map(|((o, l), r)| rates.r1 * o + rates.r2 * l + rates.r3 * r)
        .collect()
}

/// Draws the random point of the mutation step, one value per coordinate.
pub fn random_point(config: &GloaConfig, rng: &mut GloaRng) -> Vec<f64> {
    match config.random_term {
        RandomTerm::Domain => config
            .bounds
            .iter()
            .map(|b| {
                if b.width() > 0.0 {
                    rng.gen_range(b.low..=b.high)
                } else {
                    b.low
                }
            })
            .collect(),
        RandomTerm::Symmetric => (0..config.bounds.len())
            .map(|_| rng.gen_range(-1.0..=1.0))
            .collect(),
    }
}

pub(crate) fn apply_bounds(config: &GloaConfig, values: &mut [f64]) {
    if config.bound_policy == BoundPolicy::Clip {
        for (v, b) in values.iter_mut().zip(&config.bounds) {
            *v = b.clamp(*v);
        }
    }
}

/// Mutation and recombination of one member toward its leader.
///
/// Interval rates are sampled once per call. The result is not evaluated.
pub fn mutate_recombine(
    member: &Candidate,
    leader: &Candidate,
    config: &GloaConfig,
    rng: &mut GloaRng,
) -> Result<Candidate> {
    let dim = member.dimension();
    if leader.dimension() != dim || config.dimension() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            actual: if leader.dimension() != dim {
                leader.dimension()
            } else {
                config.dimension()
            },
        });
    }
    let rates = config.rates.sample(rng);
    let random = random_point(config, rng);
    let mut values = recombine(&member.values, &leader.values, &random, rates);
    apply_bounds(config, &mut values);
    Ok(Candidate::new(values))
}

/// Outcome of one crossover phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Transfers {
    pub attempted: usize,
    pub accepted: usize,
}

/// Number of transfers a group performs: uniform on `1..=dim/2 + 1`.
pub fn transfer_budget(dimension: usize, rng: &mut GloaRng) -> usize {
    rng.gen_range(1..=dimension / 2 + 1)
}

/// One-way crossover between groups.
///
/// Group by group, a random member receives a single variable copied from a
/// random member of another group. The receiving member is replaced only if
/// the trial is strictly better; the donor is never touched.
pub fn one_way_crossover<O: Objective + ?Sized>(
    groups: &mut GroupSet,
    objective: &O,
    config: &GloaConfig,
    rng: &mut GloaRng,
) -> Result<Transfers> {
    let n = groups.n();
    let p = groups.p();
    let mut out = Transfers::default();
    if n < 2 {
        return Ok(out);
    }
    let dim = config.dimension();
    for i in 0..n {
        let t = transfer_budget(dim, rng);
        for _ in 0..t {
            let j = rng.gen_range(0..p);
            let mut x = rng.gen_range(0..n - 1);
            if x >= i {
                x += 1;
            }
            let k = rng.gen_range(0..p);
            let pr = rng.gen_range(0..dim);
            let mut value = groups.groups[x].members[k].values[pr];
            if config.transfer_mutation {
                let r3 = config.rates.r3.sample(rng);
                value += r3 * rng.gen_range(-1.0..=1.0);
            }
            let mut trial = groups.groups[i].members[j].values.clone();
            trial[pr] = value;
            apply_bounds(config, &mut trial);
            out.attempted += 1;
            if groups.greedy_replace(i, j, Candidate::new(trial), objective)? {
                out.accepted += 1;
            }
        }
    }
    Ok(out)
}
