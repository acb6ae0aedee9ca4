use rand::Rng;

use crate::error::{Error, Result};
use crate::objective::Interval;

/// A mixing rate: either a constant or an interval sampled on every use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rate {
    Fixed(f64),
    Interval(Interval),
}

impl Rate {
    /// Interval rate; reversed endpoints are accepted and reordered.
    pub fn between(a: f64, b: f64) -> Self {
        Rate::Interval(Interval::new(a, b).ordered())
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            Rate::Fixed(v) => v,
            Rate::Interval(iv) if iv.width() > 0.0 => rng.gen_range(iv.low..=iv.high),
            Rate::Interval(iv) => iv.low,
        }
    }

    fn within_unit(&self) -> bool {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        match *self {
            Rate::Fixed(v) => unit(v),
            Rate::Interval(iv) => iv.is_valid() && unit(iv.low) && unit(iv.high),
        }
    }
}

impl From<f64> for Rate {
    fn from(v: f64) -> Self {
        Rate::Fixed(v)
    }
}

/// Rates of the old member, the leader and the random point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rates {
    pub r1: Rate,
    pub r2: Rate,
    pub r3: Rate,
    /// When set, `r2` is ignored and taken as `1 - r1` on every draw.
    pub complementary: bool,
}

impl Rates {
    pub fn fixed(r1: f64, r2: f64, r3: f64) -> Self {
        Rates {
            r1: Rate::Fixed(r1),
            r2: Rate::Fixed(r2),
            r3: Rate::Fixed(r3),
            complementary: false,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SampledRates {
        let r1 = self.r1.sample(rng);
        let r2 = if self.complementary {
            1.0 - r1
        } else {
            self.r2.sample(rng)
        };
        let r3 = self.r3.sample(rng);
        SampledRates { r1, r2, r3 }
    }
}

/// One concrete draw of the three rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampledRates {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

/// Distribution of the random point mixed in by the mutation step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RandomTerm {
    /// Uniform over each variable's bound interval.
    #[default]
    Domain,
    /// Uniform over `[-1, 1]` per variable; `r3` then acts as a step size.
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundPolicy {
    /// Every new candidate is clamped into the bounds.
    #[default]
    Clip,
    /// Bounds only shape initialization and the random term.
    FreeAfterInit,
}

/// Early-stop condition: `|best - value| <= tolerance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Target {
    pub value: f64,
    pub tolerance: f64,
}

impl Target {
    pub fn reached(&self, fitness: f64) -> bool {
        (fitness - self.value).abs() <= self.tolerance
    }
}

/// Periodic local refinement of the group leaders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Refinement {
    pub every: usize,
    pub max_steps: usize,
}

impl Default for Refinement {
    fn default() -> Self {
        Refinement {
            every: 50,
            max_steps: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GloaConfig {
    /// Number of groups.
    pub groups: usize,
    /// Members per group.
    pub members: usize,
    pub rates: Rates,
    pub random_term: RandomTerm,
    pub bounds: Vec<Interval>,
    pub bound_policy: BoundPolicy,
    pub max_iterations: usize,
    pub target: Option<Target>,
    pub seed: u64,
    /// Sweep groups on the rayon pool. Results are identical either way.
    pub parallel: bool,
    /// Perturb transferred variables by `r3 * U[-1, 1]` during crossover.
    pub transfer_mutation: bool,
    pub refinement: Option<Refinement>,
}

impl GloaConfig {
    pub fn new(groups: usize, members: usize, rates: Rates, bounds: Vec<Interval>) -> Self {
        GloaConfig {
            groups,
            members,
            rates,
            random_term: RandomTerm::Domain,
            bounds,
            bound_policy: BoundPolicy::Clip,
            max_iterations: 1000,
            target: None,
            seed: 0,
            parallel: false,
            transfer_mutation: false,
            refinement: None,
        }
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_max_iterations(mut self, iterations: usize) -> Self {
        self.max_iterations = iterations;
        self
    }

    pub fn with_target(mut self, value: f64, tolerance: f64) -> Self {
        self.target = Some(Target { value, tolerance });
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.groups == 0 {
            return Err(Error::Config("groups must be positive".into()));
        }
        if self.members == 0 {
            return Err(Error::Config("members must be positive".into()));
        }
        for (name, rate) in [
            ("r1", &self.rates.r1),
            ("r2", &self.rates.r2),
            ("r3", &self.rates.r3),
        ] {
            if name == "r2" && self.rates.complementary {
                continue;
            }
            if !rate.within_unit() {
                return Err(Error::Config(format!("{name} must lie in [0, 1]")));
            }
        }
        if self.bounds.is_empty() {
            return Err(Error::Config("bounds must cover at least one variable".into()));
        }
        if let Some(k) = self.bounds.iter().position(|b| !b.is_valid()) {
            return Err(Error::Config(format!("bounds[{k}] is empty or not finite")));
        }
        if let Some(t) = self.target {
            if !(t.tolerance >= 0.0) {
                return Err(Error::Config("target tolerance must be non-negative".into()));
            }
        }
        if let Some(r) = self.refinement {
            if r.every == 0 {
                return Err(Error::Config("refinement interval must be positive".into()));
            }
        }
        Ok(())
    }
}
