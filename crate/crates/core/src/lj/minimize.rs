use super::{energy, gradient, ClusterGeometry};

const ARMIJO: f64 = 1e-4;
const MIN_STEP: f64 = 1e-16;

/// Steepest descent with Armijo backtracking.
///
/// Stops once the gradient norm drops below `tolerance`, after `max_steps`
/// accepted steps, or when no step length decreases the energy. The returned
/// geometry never has a higher energy than the input.
pub fn local_minimize(g: &ClusterGeometry, max_steps: usize, tolerance: f64) -> ClusterGeometry {
    let mut x = g.coords().to_vec();
    let Ok(mut e) = energy(&x) else {
        return g.clone();
    };
    let mut step = 1e-2;
    for _ in 0..max_steps {
        let Ok(grad) = gradient(&x) else { break };
        let norm2: f64 = grad.iter().map(|v| v * v).sum();
        if norm2.sqrt() < tolerance {
            break;
        }
        let mut accepted = false;
        while step > MIN_STEP {
            let trial: Vec<f64> = x.iter().zip(&grad).map(|(xi, gi)| xi - step * gi).collect();
            match energy(&trial) {
                Ok(et) if et <= e - ARMIJO * step * norm2 => {
                    x = trial;
                    e = et;
                    accepted = true;
                    break;
                }
                _ => step *= 0.5,
            }
        }
        if !accepted {
            break;
        }
        step *= 2.0;
    }
    ClusterGeometry { coords: x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lj::lj_energy;
    use rand::Rng;

    fn norm(v: &[f64]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn distance(g: &ClusterGeometry, i: usize, j: usize) -> f64 {
        let (a, b) = (g.particle(i), g.particle(j));
        ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
    }

    #[test]
    fn stretched_pair_relaxes_to_minimum() {
        let g = ClusterGeometry::new(vec![0.0, 0.0, 0.0, 1.2, 0.0, 0.0]).unwrap();
        let out = local_minimize(&g, 10_000, 1e-10);
        assert!((lj_energy(&out).unwrap() + 1.0).abs() < 1e-6);
        assert!((distance(&out, 0, 1) - 2f64.powf(1.0 / 6.0)).abs() < 1e-6);
    }

    #[test]
    fn minimal_input_is_left_alone() {
        let r = 2f64.powf(1.0 / 6.0);
        let g = ClusterGeometry::new(vec![0.0, 0.0, 0.0, r, 0.0, 0.0]).unwrap();
        let out = local_minimize(&g, 100, 1e-8);
        for (a, b) in out.coords().iter().zip(g.coords()) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn random_start_descends() {
        let mut rng = crate::rng::stream(17);
        for _ in 0..10 {
            let g = ClusterGeometry::new((0..12).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
            let e0 = lj_energy(&g).unwrap();
            let g0 = norm(&gradient(g.coords()).unwrap());
            let out = local_minimize(&g, 200, 1e-8);
            assert!(lj_energy(&out).unwrap() <= e0);
            assert!(norm(&gradient(out.coords()).unwrap()) < g0);
        }
    }

    #[test]
    fn tetrahedron_from_noise() {
        let mut rng = crate::rng::stream(5);
        let r = 2f64.powf(1.0 / 6.0);
        let base = [[0.0, 0.0, 0.0], [r, 0.0, 0.0], [r / 2.0, r * 0.866, 0.0], [r / 2.0, r * 0.289, r * 0.816]];
        let coords: Vec<f64> = base.iter().flatten().map(|v| v + rng.gen_range(-0.05..0.05)).collect();
        let out = local_minimize(&ClusterGeometry::new(coords).unwrap(), 20_000, 1e-9);
        assert!((lj_energy(&out).unwrap() + 6.0).abs() < 1e-6);
    }
}
