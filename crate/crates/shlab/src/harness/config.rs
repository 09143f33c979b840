//! Run configuration: the epsilon ladder, kernels, amplitude preset, and
//! solver overrides.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::kernel::{KernelMeasure, KernelSpec};
use crate::spectral::{SpectralField, TorusGrid};
use crate::{Error, Result};

fn default_t_star() -> f64 {
    1.0
}

fn default_snapshots() -> usize {
    100
}

/// Kernel pair of the quadratic (`Q`) and cubic (`K`) nonlinearities.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct KernelsSpec {
    #[serde(rename = "Q", default)]
    pub q: KernelSpec,
    #[serde(rename = "K", default)]
    pub k: KernelSpec,
}

/// Initial amplitude preset on the slow grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "lowercase")]
pub enum AmplitudeSpec {
    /// `A = 0`.
    Zero,
    /// The exact stationary roll `A = 1/sqrt(gamma)`; needs `gamma > 0`.
    Roll,
    /// `A(X) = amplitude * sech(width (X - L/2))`, band-limited by spectral
    /// truncation so the zero-mode filter is transparent for every ladder
    /// member.
    Sech { amplitude: f64, width: f64 },
}

impl Default for AmplitudeSpec {
    fn default() -> Self {
        AmplitudeSpec::Sech {
            amplitude: 0.8,
            width: 0.35,
        }
    }
}

/// Optional resolution/timestep overrides.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Overrides {
    /// Fast-grid step; default 0.1.
    #[serde(default)]
    pub dt: Option<f64>,
    /// Slow-grid step; default 0.0025.
    #[serde(rename = "dT", default)]
    pub dt_slow: Option<f64>,
    /// Grid points per domain factor before rounding up to a power of two;
    /// default 16 (wavenumber ceiling 8).
    #[serde(default)]
    pub points_per_m: Option<usize>,
}

/// One experiment: ladder `eps = P / M` over `M_list`, kernels, time horizon
/// `T_star` (fast horizon `T_star / eps^2`), initial-perturbation scale `d`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(rename = "P")]
    pub p: usize,
    #[serde(rename = "M_list")]
    pub m_list: Vec<usize>,
    #[serde(default)]
    pub kernels: KernelsSpec,
    #[serde(rename = "T_star", default = "default_t_star")]
    pub t_star: f64,
    #[serde(default)]
    pub amplitude: AmplitudeSpec,
    #[serde(default)]
    pub d: f64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_snapshots")]
    pub snapshots: usize,
    #[serde(default)]
    pub overrides: Overrides,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: RunConfig = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.p == 0 {
            return Err(Error::Config("P must be positive".into()));
        }
        if self.m_list.is_empty() {
            return Err(Error::Config("M_list must not be empty".into()));
        }
        if self.m_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("M_list must be strictly increasing".into()));
        }
        if self.m_list[0] <= self.p {
            return Err(Error::Config(format!(
                "every M must exceed P = {} so that eps < 1",
                self.p
            )));
        }
        if !(self.t_star > 0.0) {
            return Err(Error::Config("T_star must be positive".into()));
        }
        if self.d < 0.0 {
            return Err(Error::Config("d must be nonnegative".into()));
        }
        if self.snapshots < 2 {
            return Err(Error::Config("need at least 2 snapshots".into()));
        }
        self.kernels.q.build()?;
        self.kernels.k.build()?;
        Ok(())
    }

    /// The ladder `eps = P / M`, decreasing.
    pub fn epsilons(&self) -> Vec<f64> {
        self.m_list
            .iter()
            .map(|&m| self.p as f64 / m as f64)
            .collect()
    }

    /// Largest ladder epsilon (used to fix the shared amplitude band limit).
    pub fn eps_max(&self) -> f64 {
        self.p as f64 / self.m_list[0] as f64
    }

    pub fn build_kernels(&self) -> Result<(KernelMeasure, KernelMeasure)> {
        Ok((self.kernels.q.build()?, self.kernels.k.build()?))
    }

    pub fn fast_grid(&self, m: usize) -> Result<TorusGrid> {
        let per_m = self.overrides.points_per_m.unwrap_or(16);
        TorusGrid::new(m, (per_m * m).next_power_of_two())
    }

    pub fn slow_grid(&self, fast: TorusGrid) -> Result<TorusGrid> {
        TorusGrid::new(self.p, fast.len())
    }

    pub fn dt_fast(&self) -> f64 {
        self.overrides.dt.unwrap_or(0.1)
    }

    pub fn dt_slow(&self) -> f64 {
        self.overrides.dt_slow.unwrap_or(0.0025)
    }

    /// Initial amplitude on the slow grid. The sech preset is truncated at
    /// the mode ceiling of the *coarsest* ladder member, so every run shares
    /// the identical band-limited profile.
    pub fn initial_amplitude(&self, slow: TorusGrid, gamma: f64) -> Result<SpectralField> {
        match self.amplitude {
            AmplitudeSpec::Zero => Ok(SpectralField::zeros(slow)),
            AmplitudeSpec::Roll => {
                if gamma <= 0.0 {
                    return Err(Error::Config(format!(
                        "roll preset needs gamma > 0, got {gamma}"
                    )));
                }
                Ok(SpectralField::from_real_fn(slow, |_| 1.0 / gamma.sqrt()))
            }
            AmplitudeSpec::Sech { amplitude, width } => {
                // periodized sech centered at L/2 via its exact Fourier
                // coefficients c_j = a/(2 P w) sech(pi j / (2 w P)) (-1)^j,
                // truncated at the mode ceiling |j| <= M_min / 8 so the
                // zero-mode filter is transparent for the whole ladder and
                // every run shares the identical profile
                let p = slow.domain_factor() as f64;
                let j_cut = (self.m_list[0] / 8) as i64;
                let mut coeffs = vec![Complex64::default(); slow.len()];
                for j in -j_cut..=j_cut {
                    let bin = slow
                        .bin_of_freq(j)
                        .ok_or_else(|| Error::Config(format!("slow grid cannot hold mode {j}")))?;
                    let mag = amplitude
                        / (2.0 * p * width)
                        / (std::f64::consts::PI * j as f64 / (2.0 * width * p)).cosh();
                    let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                    coeffs[bin] = Complex64::new(sign * mag, 0.0);
                }
                SpectralField::from_fourier(slow, &coeffs)
            }
        }
    }

    /// Fixed-seed random real perturbation, band-limited to `|kappa| <= 2`
    /// and normalized to `C^4` norm 1.
    pub fn perturbation(&self, fast: TorusGrid) -> Result<SpectralField> {
        let mut rng = ChaCha8Rng::seed_from_u64(
            self.seed ^ (fast.domain_factor() as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        let mut coeffs = vec![Complex64::default(); fast.len()];
        let band = 2 * fast.domain_factor() as i64;
        for f in 1..=band {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            coeffs[fast.bin_of_freq(f).unwrap()] = c;
            coeffs[fast.bin_of_freq(-f).unwrap()] = c.conj();
        }
        coeffs[0] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        let field = SpectralField::from_fourier(fast, &coeffs)?;
        let norm = field.c_norm(4)?;
        if norm == 0.0 {
            return Ok(field);
        }
        Ok(field.scale(1.0 / norm))
    }
}
