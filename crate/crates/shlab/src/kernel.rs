//! Finite symmetric measures on the line and their Fourier symbols.
//!
//! A kernel is a finite sum of Dirac atoms plus an optional smooth even
//! density from a named family with closed-form Fourier transform. Symmetry
//! (`Q(-dx) = Q(dx)`) makes every symbol real and even, which is what forces
//! the amplitude-equation coefficients to be real.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Matching tolerance for symmetry validation of user-supplied atom lists.
const SYMMETRY_TOL: f64 = 1e-12;

/// Smooth even density with a closed-form Fourier transform.
///
/// Each family integrates to `mass` (so `mass` is its total variation for
/// one-signed densities) and has finite first absolute moment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum SmoothFamily {
    /// `mass * (2 pi width^2)^{-1/2} exp(-x^2 / (2 width^2))`
    Gaussian { mass: f64, width: f64 },
    /// `mass * (rate/2) exp(-rate |x|)`
    Laplace { mass: f64, rate: f64 },
    /// `mass / (2 half_width)` on `[-half_width, half_width]`
    Uniform { mass: f64, half_width: f64 },
}

impl SmoothFamily {
    fn validate(&self) -> Result<()> {
        let ok = match *self {
            SmoothFamily::Gaussian { mass, width } => mass.is_finite() && width > 0.0,
            SmoothFamily::Laplace { mass, rate } => mass.is_finite() && rate > 0.0,
            SmoothFamily::Uniform { mass, half_width } => mass.is_finite() && half_width > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidKernel(format!("{self:?}")))
        }
    }

    /// Fourier transform `\int e^{ikx} rho(x) dx` (real and even).
    pub fn symbol(&self, k: f64) -> f64 {
        match *self {
            SmoothFamily::Gaussian { mass, width } => mass * (-0.5 * width * width * k * k).exp(),
            SmoothFamily::Laplace { mass, rate } => mass * rate * rate / (rate * rate + k * k),
            SmoothFamily::Uniform { mass, half_width } => {
                let u = k * half_width;
                if u.abs() < 1e-8 {
                    // sin(u)/u via series; avoids 0/0 at k = 0
                    mass * (1.0 - u * u / 6.0)
                } else {
                    mass * u.sin() / u
                }
            }
        }
    }

    fn total_variation(&self) -> f64 {
        match *self {
            SmoothFamily::Gaussian { mass, .. }
            | SmoothFamily::Laplace { mass, .. }
            | SmoothFamily::Uniform { mass, .. } => mass.abs(),
        }
    }

    fn first_moment(&self) -> f64 {
        match *self {
            SmoothFamily::Gaussian { mass, width } => {
                mass.abs() * width * (2.0 / std::f64::consts::PI).sqrt()
            }
            SmoothFamily::Laplace { mass, rate } => mass.abs() / rate,
            SmoothFamily::Uniform { mass, half_width } => mass.abs() * half_width / 2.0,
        }
    }
}

/// A finite symmetric measure: Dirac atoms plus an optional smooth density.
///
/// Immutable after construction; all constructors enforce symmetry, so every
/// Fourier symbol evaluated later is real.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMeasure {
    atoms: Vec<(f64, f64)>,
    smooth: Option<SmoothFamily>,
}

impl KernelMeasure {
    /// Build from a full atom list; rejects asymmetric input.
    ///
    /// Every atom `(x, w)` with `x != 0` must have a partner `(-x, w)` with
    /// position and weight matching to `1e-12`.
    pub fn new(atoms: Vec<(f64, f64)>, smooth: Option<SmoothFamily>) -> Result<Self> {
        for &(x, w) in &atoms {
            if !x.is_finite() || !w.is_finite() {
                return Err(Error::InvalidKernel(format!("non-finite atom ({x}, {w})")));
            }
        }
        if let Some(s) = &smooth {
            s.validate()?;
        }
        let mut unmatched: Vec<(f64, f64)> = Vec::new();
        for &(x, w) in &atoms {
            if x.abs() <= SYMMETRY_TOL {
                continue;
            }
            if let Some(i) = unmatched.iter().position(|&(px, pw)| {
                (px + x).abs() <= SYMMETRY_TOL && (pw - w).abs() <= SYMMETRY_TOL
            }) {
                unmatched.swap_remove(i);
            } else {
                unmatched.push((x, w));
            }
        }
        if let Some(&(x, w)) = unmatched.first() {
            return Err(Error::AsymmetricKernel(format!(
                "atom ({x}, {w}) has no mirror partner"
            )));
        }
        Ok(Self { atoms, smooth })
    }

    /// Build from half-line atoms (`x >= 0`); nonzero positions are mirrored
    /// automatically, with the listed weight placed on each side.
    pub fn from_half_atoms(half: &[(f64, f64)], smooth: Option<SmoothFamily>) -> Result<Self> {
        let mut atoms = Vec::with_capacity(2 * half.len());
        for &(x, w) in half {
            if x < 0.0 {
                return Err(Error::InvalidKernel(format!(
                    "half-specification must list x >= 0, got {x}"
                )));
            }
            if x.abs() <= SYMMETRY_TOL {
                atoms.push((0.0, w));
            } else {
                atoms.push((x, w));
                atoms.push((-x, w));
            }
        }
        Self::new(atoms, smooth)
    }

    /// The zero measure.
    pub fn zero() -> Self {
        Self {
            atoms: Vec::new(),
            smooth: None,
        }
    }

    /// `weight * delta_0`.
    pub fn dirac(weight: f64) -> Self {
        Self {
            atoms: vec![(0.0, weight)],
            smooth: None,
        }
    }

    pub fn gaussian(mass: f64, width: f64) -> Result<Self> {
        Self::new(Vec::new(), Some(SmoothFamily::Gaussian { mass, width }))
    }

    pub fn laplace(mass: f64, rate: f64) -> Result<Self> {
        Self::new(Vec::new(), Some(SmoothFamily::Laplace { mass, rate }))
    }

    pub fn uniform(mass: f64, half_width: f64) -> Result<Self> {
        Self::new(Vec::new(), Some(SmoothFamily::Uniform { mass, half_width }))
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn smooth_part(&self) -> Option<&SmoothFamily> {
        self.smooth.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.iter().all(|&(_, w)| w == 0.0) && self.smooth.is_none()
    }

    /// Fourier symbol `\int e^{ikx} Q(dx)`; real by symmetry, so computed as
    /// `sum_a w_a cos(k x_a)` plus the smooth family's transform.
    pub fn fourier_symbol(&self, k: f64) -> f64 {
        let atom_sum: f64 = self.atoms.iter().map(|&(x, w)| w * (k * x).cos()).sum();
        atom_sum + self.smooth.as_ref().map_or(0.0, |s| s.symbol(k))
    }

    /// Table of symbols at integer wavenumbers `|n| <= n_max`.
    pub fn coefficient_table(&self, n_max: usize) -> FourierCoefficientTable {
        let values = (0..=n_max).map(|n| self.fourier_symbol(n as f64)).collect();
        FourierCoefficientTable { values }
    }

    /// Total variation `\int |Q|(dx)`.
    pub fn total_variation(&self) -> f64 {
        let atom_sum: f64 = self.atoms.iter().map(|&(_, w)| w.abs()).sum();
        atom_sum + self.smooth.as_ref().map_or(0.0, |s| s.total_variation())
    }

    /// First absolute moment `\int |x| |Q|(dx)`.
    pub fn first_moment(&self) -> f64 {
        let atom_sum: f64 = self.atoms.iter().map(|&(x, w)| x.abs() * w.abs()).sum();
        atom_sum + self.smooth.as_ref().map_or(0.0, |s| s.first_moment())
    }
}

/// Symbols at integer wavenumbers; symmetric (`values[n] = values[-n]`) by
/// construction, so only `n >= 0` is stored.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficientTable {
    values: Vec<f64>,
}

impl FourierCoefficientTable {
    /// Value at integer wavenumber `n` (any sign).
    pub fn get(&self, n: i64) -> f64 {
        self.values[n.unsigned_abs() as usize]
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Kernel block of the run-config file: half-line atoms plus an optional
/// smooth family, e.g. `{"atoms": [[1.0, 0.5]], "smooth": {"family":
/// "gaussian", "mass": 1.0, "width": 1.0}}`.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct KernelSpec {
    #[serde(default)]
    pub atoms: Vec<(f64, f64)>,
    #[serde(default)]
    pub smooth: Option<SmoothFamily>,
}

impl KernelSpec {
    pub fn build(&self) -> Result<KernelMeasure> {
        KernelMeasure::from_half_atoms(&self.atoms, self.smooth)
    }
}
