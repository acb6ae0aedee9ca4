//! Lennard-Jones clusters in reduced units (`epsilon = sigma = 1`).
//!
//! `E = 4 * sum_{i<j} (r_ij^-12 - r_ij^-6)` over the `N` particles of a
//! cluster stored as a flat `[x0, y0, z0, x1, ...]` coordinate vector.

mod experiments;
mod minimize;
mod reference;
mod seeding;
mod xyz;

pub use experiments::{
    first_encounter_experiment, incremental_chain, preset, scaling_experiment, Encounter,
    IncrementalStep, ScalingResult,
};
pub use minimize::local_minimize;
pub use reference::ReferenceMinima;
pub use seeding::{seed_from_smaller, SmallerClusterSeeder};
pub use xyz::{read_xyz, write_xyz};

use thiserror::Error;

use crate::error::ObjectiveError;
use crate::objective::Objective;

/// Pairs closer than this are treated as coincident.
pub const MIN_DISTANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("particles {i} and {j} coincide")]
pub struct CoincidentParticles {
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("coordinate count {0} is not a multiple of 3")]
    Ragged(usize),
    #[error("a cluster needs at least 2 particles, got {0}")]
    TooSmall(usize),
}

/// Particle positions of a cluster.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterGeometry {
    coords: Vec<f64>,
}

impl ClusterGeometry {
    pub fn new(coords: Vec<f64>) -> Result<Self, GeometryError> {
        if coords.len() % 3 != 0 {
            return Err(GeometryError::Ragged(coords.len()));
        }
        if coords.len() < 6 {
            return Err(GeometryError::TooSmall(coords.len() / 3));
        }
        Ok(ClusterGeometry { coords })
    }

    pub fn from_points(points: &[[f64; 3]]) -> Result<Self, GeometryError> {
        Self::new(points.iter().flatten().copied().collect())
    }

    pub fn n_particles(&self) -> usize {
        self.coords.len() / 3
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn particle(&self, i: usize) -> [f64; 3] {
        [self.coords[3 * i], self.coords[3 * i + 1], self.coords[3 * i + 2]]
    }

    pub fn energy(&self) -> Result<f64, CoincidentParticles> {
        energy(&self.coords)
    }
}

#[inline]
fn pair_terms(coords: &[f64], i: usize, j: usize) -> (f64, f64, f64, f64) {
    let dx = coords[3 * i] - coords[3 * j];
    let dy = coords[3 * i + 1] - coords[3 * j + 1];
    let dz = coords[3 * i + 2] - coords[3 * j + 2];
    (dx, dy, dz, dx * dx + dy * dy + dz * dz)
}

/// Energy of a flat coordinate vector.
pub fn energy(coords: &[f64]) -> Result<f64, CoincidentParticles> {
    let n = coords.len() / 3;
    let mut e = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let (_, _, _, r2) = pair_terms(coords, i, j);
            if r2 < MIN_DISTANCE * MIN_DISTANCE {
                return Err(CoincidentParticles { i, j });
            }
            let inv6 = 1.0 / (r2 * r2 * r2);
            e += inv6 * inv6 - inv6;
        }
    }
    Ok(4.0 * e)
}

/// Analytic gradient of [`energy`] with respect to every coordinate.
pub fn gradient(coords: &[f64]) -> Result<Vec<f64>, CoincidentParticles> {
    let n = coords.len() / 3;
    let mut g = vec![0.0; coords.len()];
    for i in 0..n {
        for j in (i + 1)..n {
            let (dx, dy, dz, r2) = pair_terms(coords, i, j);
            if r2 < MIN_DISTANCE * MIN_DISTANCE {
                return Err(CoincidentParticles { i, j });
            }
            let inv2 = 1.0 / r2;
            let inv6 = inv2 * inv2 * inv2;
            // (dE/dr) / r
            let s = 4.0 * (-12.0 * inv6 * inv6 + 6.0 * inv6) * inv2;
            for (k, d) in [dx, dy, dz].into_iter().enumerate() {
                g[3 * i + k] += s * d;
                g[3 * j + k] -= s * d;
            }
        }
    }
    Ok(g)
}

pub fn lj_energy(g: &ClusterGeometry) -> Result<f64, CoincidentParticles> {
    energy(&g.coords)
}

pub fn lj_gradient(g: &ClusterGeometry) -> Result<Vec<f64>, CoincidentParticles> {
    gradient(&g.coords)
}

/// Cluster energy as an engine objective. Coincident particles score `+inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LjObjective {
    pub n_particles: usize,
    /// Tolerance on the gradient norm used by [`Objective::refine`].
    pub refine_tolerance: f64,
}

impl LjObjective {
    pub fn new(n_particles: usize) -> Self {
        LjObjective {
            n_particles,
            refine_tolerance: 1e-6,
        }
    }
}

impl Objective for LjObjective {
    fn dimension(&self) -> usize {
        3 * self.n_particles
    }

    fn evaluate(&self, x: &[f64]) -> Result<f64, ObjectiveError> {
        Ok(energy(x).unwrap_or(f64::INFINITY))
    }

    fn refine(&self, x: &mut [f64], max_steps: usize) -> Option<f64> {
        let g = ClusterGeometry::new(x.to_vec()).ok()?;
        let out = local_minimize(&g, max_steps, self.refine_tolerance);
        x.copy_from_slice(out.coords());
        Some(energy(x).unwrap_or(f64::INFINITY))
    }
}
