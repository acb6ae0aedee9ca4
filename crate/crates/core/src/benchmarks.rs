//! Analytic test functions with known global minima.
//!
//! The two-variable functions (Beale, Easom, Goldstein-Price, Shubert) and the
//! n-variable ones (Rosenbrock, Griewank, Ackley, Sphere, Rastrigin) each come
//! with their search domain and a ready-made engine configuration.

use std::f64::consts::{E, PI};

use crate::engine::{BoundPolicy, GloaConfig, RandomTerm, Rates};
use crate::error::ObjectiveError;
use crate::objective::{Interval, Objective};

pub fn beale(x1: f64, x2: f64) -> f64 {
    (1.5 - x1 * (1.0 - x2)).powi(2)
        + (2.25 - x1 * (1.0 - x2 * x2)).powi(2)
        + (2.625 - x1 * (1.0 - x2 * x2 * x2)).powi(2)
}

pub fn easom(x1: f64, x2: f64) -> f64 {
    -x1.cos() * x2.cos() * (-(x1 - PI).powi(2) - (x2 - PI).powi(2)).exp()
}

pub fn goldstein_price(x1: f64, x2: f64) -> f64 {
    let a = 1.0
        + (x1 + x2 + 1.0).powi(2)
            * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    let b = 30.0
        + (2.0 * x1 - 3.0 * x2).powi(2)
            * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    a * b
}

fn shubert_factor(x: f64) -> f64 {
    (1..=5)
        .map(|i| {
            let i = i as f64;
            i * ((i + 1.0) * x + i).cos()
        })
        .sum()
}

pub fn shubert(x1: f64, x2: f64) -> f64 {
    shubert_factor(x1) * shubert_factor(x2)
}

/// `sum 100 (x_i - x_{i+1})^2 + (x_i - 1)^2`. Minimum 0 at the ones vector.
pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[0] - w[1]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// The classical banana: `sum 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2`.
pub fn rosenbrock_classic(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v / 4000.0).sum();
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    1.0 + sum - prod
}

/// Ackley with the mean (not the sum) of the cosines in the second exponential.
pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    20.0 + E - 20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp()
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Benchmark {
    Beale,
    Easom,
    GoldsteinPrice,
    Shubert,
    Rosenbrock,
    RosenbrockClassic,
    Griewank,
    Ackley,
    Sphere,
    Rastrigin,
}

impl Benchmark {
    pub const ALL: [Benchmark; 10] = [
        Benchmark::Beale,
        Benchmark::Easom,
        Benchmark::GoldsteinPrice,
        Benchmark::Shubert,
        Benchmark::Rosenbrock,
        Benchmark::RosenbrockClassic,
        Benchmark::Griewank,
        Benchmark::Ackley,
        Benchmark::Sphere,
        Benchmark::Rastrigin,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Benchmark::Beale => "beale",
            Benchmark::Easom => "easom",
            Benchmark::GoldsteinPrice => "goldstein_price",
            Benchmark::Shubert => "shubert",
            Benchmark::Rosenbrock => "rosenbrock",
            Benchmark::RosenbrockClassic => "rosenbrock_classic",
            Benchmark::Griewank => "griewank",
            Benchmark::Ackley => "ackley",
            Benchmark::Sphere => "sphere",
            Benchmark::Rastrigin => "rastrigin",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Benchmark::ALL.into_iter().find(|b| b.name() == name)
    }

    /// Two-variable functions only accept dimension 2.
    pub fn is_two_variable(&self) -> bool {
        matches!(
            self,
            Benchmark::Beale | Benchmark::Easom | Benchmark::GoldsteinPrice | Benchmark::Shubert
        )
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Benchmark::Beale => beale(x[0], x[1]),
            Benchmark::Easom => easom(x[0], x[1]),
            Benchmark::GoldsteinPrice => goldstein_price(x[0], x[1]),
            Benchmark::Shubert => shubert(x[0], x[1]),
            Benchmark::Rosenbrock => rosenbrock(x),
            Benchmark::RosenbrockClassic => rosenbrock_classic(x),
            Benchmark::Griewank => griewank(x),
            Benchmark::Ackley => ackley(x),
            Benchmark::Sphere => sphere(x),
            Benchmark::Rastrigin => rastrigin(x),
        }
    }

    pub fn spec(&self) -> BenchmarkSpec {
        use Benchmark::*;
        let (domain, min, minimizer, rates, iterations) = match self {
            Beale => (100.0, 0.0, Minimizer::Point(vec![3.0, 0.5]), SINGLE, SINGLE_ITERATIONS),
            Easom => (100.0, -1.0, Minimizer::Point(vec![PI, PI]), SINGLE, SINGLE_ITERATIONS),
            GoldsteinPrice => (100.0, 3.0, Minimizer::Point(vec![0.0, -1.0]), SINGLE, SINGLE_ITERATIONS),
            Shubert => (
                10.0,
                SHUBERT_MIN,
                Minimizer::Point(SHUBERT_ARGMIN.to_vec()),
                SINGLE,
                SINGLE_ITERATIONS,
            ),
            Rosenbrock | RosenbrockClassic => (100.0, 0.0, Minimizer::Fill(1.0), (0.8, 0.1, 0.1), 2000),
            Griewank => (600.0, 0.0, Minimizer::Fill(0.0), (0.8, 0.19, 0.01), 1000),
            Ackley => (32.768, 0.0, Minimizer::Fill(0.0), (0.8, 0.19, 0.01), 1000),
            Sphere => (100.0, 0.0, Minimizer::Fill(0.0), (0.6, 0.2, 0.2), 1000),
            Rastrigin => (10.0, 0.0, Minimizer::Fill(0.0), (0.6, 0.2, 0.2), 1500),
        };
        BenchmarkSpec {
            benchmark: *self,
            domain: Interval::symmetric(domain),
            known_minimum_value: min,
            known_minimizer: minimizer,
            rates: Rates::fixed(rates.0, rates.1, rates.2),
            iterations,
        }
    }
}

const SINGLE: (f64, f64, f64) = (0.8, 0.2, 0.0);
const SINGLE_ITERATIONS: usize = 500;

// One of the 18 global minimizers: the product of the 1-D factor's minimum
// and maximum, each located by root-finding the factor's derivative.
const SHUBERT_ARGMIN: [f64; 2] = [-7.708313735499347, -0.8003211004719731];
const SHUBERT_MIN: f64 = -186.73090883102383;

#[derive(Debug, Clone, PartialEq)]
pub enum Minimizer {
    Point(Vec<f64>),
    /// Every coordinate equal to the given value, at any dimension.
    Fill(f64),
}

impl Minimizer {
    pub fn at_dimension(&self, dimension: usize) -> Vec<f64> {
        match self {
            Minimizer::Point(p) => p.clone(),
            Minimizer::Fill(v) => vec![*v; dimension],
        }
    }
}

/// Search domain, known optimum and default parameters of one benchmark.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub benchmark: Benchmark,
    pub domain: Interval,
    pub known_minimum_value: f64,
    pub known_minimizer: Minimizer,
    pub rates: Rates,
    pub iterations: usize,
}

impl BenchmarkSpec {
    pub fn name(&self) -> &'static str {
        self.benchmark.name()
    }

    /// Ten groups of 25 with this benchmark's rates, domain and iteration budget.
    ///
    /// The random term is drawn from `[-1, 1]`; a domain-wide draw makes the
    /// `r3` noise far too coarse on the wide domains to settle near the optimum.
    pub fn preset(&self, dimension: usize) -> GloaConfig {
        let mut c = GloaConfig::new(10, 25, self.rates, vec![self.domain; dimension]);
        c.max_iterations = self.iterations;
        c.random_term = RandomTerm::Symmetric;
        c.bound_policy = BoundPolicy::Clip;
        c
    }

    pub fn objective(&self, dimension: usize) -> Result<BenchmarkObjective, crate::Error> {
        BenchmarkObjective::new(self.benchmark, dimension)
    }
}

/// Looks a benchmark up by registry name.
pub fn registry(name: &str) -> Option<BenchmarkSpec> {
    Benchmark::from_name(name).map(|b| b.spec())
}

/// A benchmark bound to a dimension, usable by the engine.
#[derive(Debug, Clone, Copy)]
pub struct BenchmarkObjective {
    pub benchmark: Benchmark,
    dimension: usize,
}

impl BenchmarkObjective {
    pub fn new(benchmark: Benchmark, dimension: usize) -> Result<Self, crate::Error> {
        let ok = if benchmark.is_two_variable() {
            dimension == 2
        } else {
            dimension >= if matches!(benchmark, Benchmark::Rosenbrock | Benchmark::RosenbrockClassic) { 2 } else { 1 }
        };
        if !ok {
            return Err(crate::Error::Config(format!(
                "{} is not defined for dimension {dimension}",
                benchmark.name()
            )));
        }
        Ok(BenchmarkObjective {
            benchmark,
            dimension,
        })
    }
}

impl Objective for BenchmarkObjective {
    fn dimension(&self) -> usize {
        self.dimension
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        Ok(self.benchmark.eval(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn beale_values() {
        assert_eq!(beale(3.0, 0.5), 0.0);
        assert_abs_diff_eq!(beale(0.0, 0.0), 14.203125, epsilon = 1e-12);
        assert!(beale(3.0, 0.5 + 1e-8) > 0.0);
        assert!(beale(3.0, 0.5 - 1e-8) > 0.0);
    }

    #[test]
    fn easom_values() {
        assert_abs_diff_eq!(easom(PI, PI), -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(easom(0.0, 0.0), -(-2.0 * PI * PI).exp(), epsilon = 1e-20);
        assert_abs_diff_eq!(easom(0.0, 0.0), -2.675e-9, epsilon = 1e-12);
        assert!(easom(PI, PI + 10.0).abs() < 1e-40);
    }

    #[test]
    fn goldstein_price_values() {
        assert_abs_diff_eq!(goldstein_price(0.0, -1.0), 3.0, epsilon = 1e-12);
        assert_eq!(goldstein_price(0.0, 0.0), 600.0);
    }

    #[test]
    fn goldstein_price_grid_floor() {
        let mut min = f64::INFINITY;
        for i in 0..=400 {
            for j in 0..=400 {
                let x1 = -2.0 + 0.01 * i as f64;
                let x2 = -2.0 + 0.01 * j as f64;
                min = min.min(goldstein_price(x1, x2));
            }
        }
        assert!(min >= 3.0 - 1e-9, "{min}");
    }

    #[test]
    fn shubert_values() {
        let s: f64 = (1..=5).map(|i| i as f64 * (i as f64).cos()).sum();
        assert_abs_diff_eq!(s, -4.458232413165797, epsilon = 1e-12);
        assert_abs_diff_eq!(shubert(0.0, 0.0), s * s, epsilon = 1e-12);
        assert_abs_diff_eq!(shubert(0.0, 0.0), 19.875836249802127, epsilon = 1e-9);
        assert_eq!(shubert(1.3, -4.2), shubert(-4.2, 1.3));
        assert_abs_diff_eq!(shubert(SHUBERT_ARGMIN[0], SHUBERT_ARGMIN[1]), -186.7309, epsilon = 1e-4);
    }

    #[test]
    fn rosenbrock_values() {
        assert_eq!(rosenbrock(&[1.0; 7]), 0.0);
        assert_eq!(rosenbrock(&[0.0, 0.0]), 1.0);
        assert_eq!(rosenbrock(&[0.0; 10]), 9.0);
        assert_eq!(rosenbrock_classic(&[1.0; 7]), 0.0);
        // the two forms disagree away from the diagonal
        assert_eq!(rosenbrock_classic(&[2.0, 2.0]), 100.0 * 4.0 + 1.0);
        assert_eq!(rosenbrock(&[2.0, 2.0]), 1.0);
    }

    #[test]
    fn griewank_values() {
        assert_eq!(griewank(&[0.0; 5]), 0.0);
        let mut x = vec![0.0; 6];
        x[0] = 100.0;
        assert_abs_diff_eq!(griewank(&x), 3.5 - 100f64.cos(), epsilon = 1e-12);
    }

    #[test]
    fn griewank_grid_nonnegative() {
        for i in -300..=300 {
            for j in -300..=300 {
                let v = griewank(&[i as f64 * 0.5, j as f64 * 0.5]);
                assert!(v >= 0.0, "{i} {j} {v}");
            }
        }
    }

    #[test]
    fn ackley_values() {
        assert_abs_diff_eq!(ackley(&[0.0; 4]), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ackley(&[1.0, 1.0]), 20.0 - 20.0 * (-0.2f64).exp(), epsilon = 1e-12);
        assert_abs_diff_eq!(ackley(&[1.0, 1.0]), 3.6254, epsilon = 1e-4);
    }

    #[test]
    fn sphere_values() {
        assert_eq!(sphere(&[0.0; 3]), 0.0);
        assert_eq!(sphere(&[1.0, 2.0, 3.0]), 14.0);
    }

    #[test]
    fn rastrigin_values() {
        assert_eq!(rastrigin(&[0.0; 3]), 0.0);
        assert_abs_diff_eq!(rastrigin(&[1.0, 1.0]), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn minimizers_reproduce_minimum() {
        for b in Benchmark::ALL {
            let spec = b.spec();
            for dim in if b.is_two_variable() { vec![2] } else { vec![2, 10, 100] } {
                let x = spec.known_minimizer.at_dimension(dim);
                assert!(
                    (b.eval(&x) - spec.known_minimum_value).abs() <= 1e-9,
                    "{} at dim {dim}: {}",
                    b.name(),
                    b.eval(&x)
                );
            }
        }
    }

    #[test]
    fn two_variable_grid_never_beats_known_minimum() {
        for b in [Benchmark::Beale, Benchmark::Easom, Benchmark::GoldsteinPrice, Benchmark::Shubert] {
            let spec = b.spec();
            let (lo, hi) = (spec.domain.low, spec.domain.high);
            let steps = ((hi - lo) / 0.01).round() as usize;
            let mut min = f64::INFINITY;
            // Shubert factorizes, so its grid minimum is a product of 1-D extremes
            if b == Benchmark::Shubert {
                let f: Vec<f64> = (0..=steps).map(|i| shubert_factor(lo + 0.01 * i as f64)).collect();
                for a in &f {
                    for c in &f {
                        min = min.min(a * c);
                    }
                }
            } else {
                for i in 0..=steps {
                    let x1 = lo + 0.01 * i as f64;
                    for j in 0..=steps {
                        min = min.min(b.eval(&[x1, lo + 0.01 * j as f64]));
                    }
                }
            }
            assert!(min >= spec.known_minimum_value - 1e-6, "{}: {min}", b.name());
        }
    }

    #[test]
    fn registry_lookup() {
        assert_eq!(registry("beale").unwrap().known_minimum_value, 0.0);
        assert_eq!(registry("rastrigin").unwrap().iterations, 1500);
        assert!(registry("himmelblau").is_none());
        let p = registry("griewank").unwrap().preset(10);
        assert_eq!((p.groups, p.members, p.bounds.len()), (10, 25, 10));
        assert_eq!(p.bounds[0], Interval::symmetric(600.0));
    }

    #[test]
    fn objective_dimension_checks() {
        assert!(BenchmarkObjective::new(Benchmark::Beale, 3).is_err());
        assert!(BenchmarkObjective::new(Benchmark::Rosenbrock, 1).is_err());
        assert!(BenchmarkObjective::new(Benchmark::Sphere, 1).is_ok());
    }

    proptest! {
        #[test]
        fn sphere_is_homogeneous(x in prop::collection::vec(-10.0f64..10.0, 1..8), c in -5.0f64..5.0) {
            let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
            let lhs = sphere(&scaled);
            let rhs = c * c * sphere(&x);
            prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs.abs()));
        }

        #[test]
        fn rastrigin_equals_sphere_on_lattice(x in prop::collection::vec(-10i32..10, 1..8)) {
            let x: Vec<f64> = x.into_iter().map(f64::from).collect();
            prop_assert!((rastrigin(&x) - sphere(&x)).abs() < 1e-9);
        }

        #[test]
        fn ackley_diagonal_depends_on_value_only(a in -30.0f64..30.0, n in 1usize..12, m in 1usize..12) {
            prop_assert!((ackley(&vec![a; n]) - ackley(&vec![a; m])).abs() < 1e-12);
        }

        #[test]
        fn ackley_permutation_invariant(mut x in prop::collection::vec(-30.0f64..30.0, 2..8)) {
            let before = ackley(&x);
            x.reverse();
            prop_assert!((ackley(&x) - before).abs() < 1e-12);
        }
    }
}
