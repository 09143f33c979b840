//! Periodic computational domain.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::{Error, Result};

/// Torus of length `2 pi M` sampled at `N` equispaced points.
///
/// Wavenumbers are `kappa = f / M` for signed integer frequencies
/// `f in [-N/2, N/2)`, so the spacing is `1/M` and the integer wavenumbers
/// `+-1, +-2, +-3` lie exactly on the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusGrid {
    m: usize,
    n: usize,
}

impl TorusGrid {
    /// `m >= 1`, `n` a power of two with `n / (2 m) >= 4` so that the third
    /// harmonic of the critical mode is resolved with dealiasing headroom.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGrid("domain factor must be positive".into()));
        }
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "{n} grid points (need a power of two)"
            )));
        }
        if n < 8 * m {
            return Err(Error::InvalidGrid(format!(
                "{n} points resolve |kappa| only up to {}; need >= 4",
                n as f64 / (2 * m) as f64
            )));
        }
        Ok(Self { m, n })
    }

    /// Default resolution: wavenumber ceiling `n / (2 m) >= 8`, rounded up to
    /// a power of two.
    pub fn with_default_resolution(m: usize) -> Result<Self> {
        Self::new(m, (16 * m).next_power_of_two())
    }

    /// Domain factor `M` (length `2 pi M`).
    pub fn domain_factor(&self) -> usize {
        self.m
    }

    /// Number of sample points.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Physical domain length `2 pi M`.
    pub fn length(&self) -> f64 {
        2.0 * PI * self.m as f64
    }

    /// Sample point `x_j = 2 pi M j / N`.
    pub fn point(&self, j: usize) -> f64 {
        self.length() * j as f64 / self.n as f64
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.point(j)).collect()
    }

    /// Signed integer frequency of FFT bin `i`.
    pub fn freq(&self, bin: usize) -> i64 {
        let half = (self.n / 2) as i64;
        let i = bin as i64;
        if i < half {
            i
        } else {
            i - self.n as i64
        }
    }

    /// Wavenumber `kappa = f / M` of FFT bin `i`.
    pub fn wavenumber(&self, bin: usize) -> f64 {
        self.freq(bin) as f64 / self.m as f64
    }

    /// Wavenumber spacing `1/M`.
    pub fn spacing(&self) -> f64 {
        1.0 / self.m as f64
    }

    /// Largest resolved wavenumber `N / (2M)`.
    pub fn max_wavenumber(&self) -> f64 {
        self.n as f64 / (2 * self.m) as f64
    }

    /// FFT bin holding signed frequency `f`, if resolved.
    pub fn bin_of_freq(&self, f: i64) -> Option<usize> {
        let half = (self.n / 2) as i64;
        if f >= half || f < -half {
            None
        } else if f >= 0 {
            Some(f as usize)
        } else {
            Some((f + self.n as i64) as usize)
        }
    }
}
