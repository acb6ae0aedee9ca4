use rand::Rng;

use super::ClusterGeometry;
use crate::engine::Seeder;
use crate::rng::GloaRng;

/// Seeds an `N + 1` particle search from a solved `N` particle cluster: the
/// known positions are copied verbatim and one particle is added uniformly
/// inside the solution's bounding box grown by one unit on every side.
#[derive(Debug, Clone, PartialEq)]
pub struct SmallerClusterSeeder {
    base: Vec<f64>,
    low: [f64; 3],
    high: [f64; 3],
    fraction: f64,
}

impl SmallerClusterSeeder {
    pub fn base(&self) -> &[f64] {
        &self.base
    }

    pub fn box_bounds(&self) -> ([f64; 3], [f64; 3]) {
        (self.low, self.high)
    }

    pub fn candidate(&self, rng: &mut GloaRng) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.base.len() + 3);
        out.extend_from_slice(&self.base);
        for k in 0..3 {
            out.push(rng.gen_range(self.low[k]..=self.high[k]));
        }
        out
    }
}

impl Seeder for SmallerClusterSeeder {
    fn fraction(&self) -> f64 {
        self.fraction
    }

    fn sample(&self, rng: &mut GloaRng) -> Vec<f64> {
        self.candidate(rng)
    }
}

/// Builds the seeder for `solution`; `fraction` of every group is seeded.
pub fn seed_from_smaller(solution: &ClusterGeometry, fraction: f64) -> SmallerClusterSeeder {
    let mut low = [f64::INFINITY; 3];
    let mut high = [f64::NEG_INFINITY; 3];
    for p in solution.coords().chunks(3) {
        for k in 0..3 {
            low[k] = low[k].min(p[k]);
            high[k] = high[k].max(p[k]);
        }
    }
    for k in 0..3 {
        low[k] -= 1.0;
        high[k] += 1.0;
    }
    SmallerClusterSeeder {
        base: solution.coords().to_vec(),
        low,
        high,
        fraction: fraction.clamp(0.0, 1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{init_population, GloaConfig, Rates};
    use crate::lj::LjObjective;
    use crate::objective::Interval;
    use crate::rng::{stream, Streams};

    fn optimal_pair() -> ClusterGeometry {
        let r = 2f64.powf(1.0 / 6.0);
        ClusterGeometry::new(vec![0.0, 0.0, 0.0, r, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn copies_known_positions() {
        let pair = optimal_pair();
        let s = seed_from_smaller(&pair, 1.0);
        let mut rng = stream(0);
        for _ in 0..20 {
            let c = s.candidate(&mut rng);
            assert_eq!(c.len(), 9);
            assert_eq!(&c[..6], pair.coords());
            let (lo, hi) = s.box_bounds();
            for k in 0..3 {
                assert!(c[6 + k] >= lo[k] && c[6 + k] <= hi[k]);
            }
        }
        assert_eq!(s.box_bounds().0, [-1.0, -1.0, -1.0]);
    }

    #[test]
    fn zero_fraction_matches_plain_init() {
        let obj = LjObjective::new(3);
        let config = GloaConfig::new(3, 6, Rates::fixed(0.9, 0.1, 0.001), vec![Interval::symmetric(2.0); 9])
            .with_seed(4);
        let seeder = seed_from_smaller(&optimal_pair(), 0.0);
        let a = init_population(&config, &obj, &mut Streams::new(4, 3), Some(&seeder)).unwrap();
        let b = init_population(&config, &obj, &mut Streams::new(4, 3), None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fraction_controls_seeded_members() {
        let obj = LjObjective::new(3);
        let config = GloaConfig::new(2, 10, Rates::fixed(0.9, 0.1, 0.001), vec![Interval::symmetric(2.0); 9]);
        let pair = optimal_pair();
        let seeder = seed_from_smaller(&pair, 0.3);
        let set = init_population(&config, &obj, &mut Streams::new(0, 2), Some(&seeder)).unwrap();
        for g in &set.groups {
            let seeded = g.members.iter().filter(|m| &m.values[..6] == pair.coords()).count();
            assert_eq!(seeded, 3);
        }
    }
}
