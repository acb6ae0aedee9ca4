//! Least-squares power-law fit in log-log space.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    /// Intercept of `ln y = a + b ln x`.
    pub intercept: f64,
    /// The exponent `b`.
    pub exponent: f64,
    /// Standard error of `b`; zero for exactly collinear data.
    pub stderr: f64,
}

impl PowerLawFit {
    pub fn predict(&self, x: f64) -> f64 {
        (self.intercept + self.exponent * x.ln()).exp()
    }
}

/// Fits `y = exp(a) * x^b` to at least three strictly positive points.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<PowerLawFit> {
    if points.len() < 3 {
        return Err(Error::Domain(format!(
            "power-law fit needs at least 3 points, got {}",
            points.len()
        )));
    }
    if let Some((x, y)) = points.iter().find(|(x, y)| !(*x > 0.0 && *y > 0.0)) {
        return Err(Error::Domain(format!(
            "power-law fit needs positive values, got ({x}, {y})"
        )));
    }
    let n = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("power-law fit needs at least two distinct x values".into()));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let sse: f64 = lx
        .iter()
        .zip(&ly)
        .map(|(x, y)| (y - intercept - exponent * x).powi(2))
        .sum();
    let stderr = (sse / (n - 2.0) / sxx).sqrt();
    Ok(PowerLawFit {
        intercept,
        exponent,
        stderr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synth(c: f64, b: f64) -> Vec<(f64, f64)> {
        (5..=13).map(|n| (n as f64, c * (n as f64).powf(b))).collect()
    }

    #[test]
    fn recovers_exact_exponents() {
        let f = fit_power_law(&synth(1.0, 2.5)).unwrap();
        assert!((f.exponent - 2.5).abs() < 1e-9);
        assert!(f.stderr < 1e-9);
        let f = fit_power_law(&synth(3e-4, 2.0)).unwrap();
        assert!((f.exponent - 2.0).abs() < 1e-9);
        assert!((f.predict(7.0) - 3e-4 * 49.0).abs() < 1e-12);
    }

    #[test]
    fn constant_data_has_zero_exponent() {
        let f = fit_power_law(&synth(0.7, 0.0)).unwrap();
        assert!(f.exponent.abs() < 1e-9);
    }

    #[test]
    fn noisy_data_has_positive_stderr() {
        let pts = vec![(1.0, 1.0), (2.0, 4.4), (3.0, 8.1), (4.0, 17.0)];
        let f = fit_power_law(&pts).unwrap();
        assert!((f.exponent - 2.0).abs() < 0.2);
        assert!(f.stderr > 0.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_power_law(&[(1.0, 1.0), (2.0, 2.0)]).is_err());
        assert!(fit_power_law(&[(1.0, 1.0), (2.0, 0.0), (3.0, 1.0)]).is_err());
        assert!(fit_power_law(&[(-1.0, 1.0), (2.0, 1.0), (3.0, 1.0)]).is_err());
        assert!(fit_power_law(&[(2.0, 1.0), (2.0, 3.0), (2.0, 1.0)]).is_err());
    }
}
