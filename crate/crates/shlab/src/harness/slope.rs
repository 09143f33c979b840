//! Log-log slope fitting for epsilon-ladder measurements.

use serde::Serialize;

use crate::{Error, Result};

/// Least-squares fit of `log(value)` against `log(eps)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square of the fit residuals in log space.
    pub residual_rms: f64,
    /// Standard error of the slope estimate (0 when the fit is exact or has
    /// no spare degrees of freedom).
    pub slope_stderr: f64,
}

impl SlopeFit {
    /// Two-sigma confidence interval for the slope.
    pub fn interval(&self) -> (f64, f64) {
        (
            self.slope - 2.0 * self.slope_stderr,
            self.slope + 2.0 * self.slope_stderr,
        )
    }
}

/// Fit `value ~ C * eps^slope`; needs at least 3 points with positive values.
pub fn fit_slope(points: &[(f64, f64)]) -> Result<SlopeFit> {
    if points.len() < 3 || points.iter().any(|&(e, v)| !(e > 0.0) || !(v > 0.0)) {
        return Err(Error::SlopeFit);
    }
    let n = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(e, v)| (e.ln(), v.ln())).collect();
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return Err(Error::SlopeFit);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ssr: f64 = logs
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let residual_rms = (ssr / n).sqrt();
    let slope_stderr = if points.len() > 2 {
        (ssr / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Ok(SlopeFit {
        slope,
        intercept,
        residual_rms,
        slope_stderr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exact_power_laws() {
        let pts: Vec<(f64, f64)> = [0.1, 0.05, 0.025].iter().map(|&e| (e, e * e)).collect();
        let fit = fit_slope(&pts).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!(fit.residual_rms < 1e-12);

        let pts: Vec<(f64, f64)> = [0.1, 0.05, 0.025, 0.0125]
            .iter()
            .map(|&e| (e, 7.3 * e * e * e))
            .collect();
        let fit = fit_slope(&pts).unwrap();
        assert!((fit.slope - 3.0).abs() < 1e-12);
    }

    #[test]
    fn noisy_quadratic_stays_near_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        for _ in 0..50 {
            let pts: Vec<(f64, f64)> = [0.1, 0.05, 0.025, 0.0125]
                .iter()
                .map(|&e| (e, e * e * rng.gen_range(0.95..1.05)))
                .collect();
            let fit = fit_slope(&pts).unwrap();
            assert!((fit.slope - 2.0).abs() <= 0.15, "slope {}", fit.slope);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_slope(&[(0.1, 1.0), (0.05, 0.5)]).is_err());
        assert!(fit_slope(&[(0.1, 1.0), (0.05, 0.5), (0.025, -0.2)]).is_err());
        assert!(fit_slope(&[(0.1, 1.0), (0.1, 0.5), (0.1, 0.2)]).is_err());
    }
}
