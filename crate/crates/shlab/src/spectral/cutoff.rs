//! Smooth frequency cutoffs and the mode filters built from them.
//!
//! The critical cutoff `chi_c` equals 1 on `| |kappa| - 1 | <= 1/8` and 0 for
//! `| |kappa| - 1 | >= 1/4`; the zero-mode cutoff `chi_0` equals 1 on
//! `|kappa| <= 1/8` and 0 for `|kappa| >= 1/4`. Both transition through the
//! canonical `e^{-1/t}` smooth step, so they are `C^infty` plateaus. The
//! hull profiles `chi_c_h` / `chi_s_h` equal 1 wherever `chi_c` / `chi_s`
//! are positive, which gives the exact pointwise identities
//! `chi_c_h * chi_c = chi_c` and `chi_s_h * chi_s = chi_s` on the grid.

use serde::{Deserialize, Serialize};

use super::field::SpectralField;
use super::grid::TorusGrid;
use crate::{Error, Result};

/// Canonical smooth step: 0 for `t <= 0`, 1 for `t >= 1`, built from
/// `f(t) = e^{-1/t}` as `f(t) / (f(t) + f(1-t))`.
pub fn smooth_step(t: f64) -> f64 {
    fn f(t: f64) -> f64 {
        if t > 0.0 {
            (-1.0 / t).exp()
        } else {
            0.0
        }
    }
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let a = f(t);
        a / (a + f(1.0 - t))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutoffKind {
    /// Critical-mode cutoff around `kappa = +-1`.
    ChiC,
    /// Zero-mode cutoff around `kappa = 0`.
    Chi0,
    /// Complement `1 - chi_c`.
    ChiS,
    /// `chi_0 - 1` (symbol of the filter deviation `E_0 - Id`).
    Chi0C,
    /// Hull of `chi_c`: 1 on its support, vanishing for `| |kappa|-1 | >= 3/8`.
    ChiCH,
    /// Hull of `chi_s`: 1 wherever `chi_s > 0`, vanishing for
    /// `| |kappa|-1 | <= 1/16`.
    ChiSH,
}

impl CutoffKind {
    /// Symbol value at wavenumber `kappa`.
    pub fn eval(&self, kappa: f64) -> f64 {
        let d = (kappa.abs() - 1.0).abs();
        match self {
            CutoffKind::ChiC => 1.0 - smooth_step((d - 0.125) * 8.0),
            CutoffKind::Chi0 => 1.0 - smooth_step((kappa.abs() - 0.125) * 8.0),
            CutoffKind::ChiS => smooth_step((d - 0.125) * 8.0),
            CutoffKind::Chi0C => -smooth_step((kappa.abs() - 0.125) * 8.0),
            CutoffKind::ChiCH => 1.0 - smooth_step((d - 0.25) * 8.0),
            CutoffKind::ChiSH => smooth_step((d - 0.0625) * 16.0),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CutoffKind::ChiC => "chi_c",
            CutoffKind::Chi0 => "chi_0",
            CutoffKind::ChiS => "chi_s",
            CutoffKind::Chi0C => "chi_0c",
            CutoffKind::ChiCH => "chi_c_h",
            CutoffKind::ChiSH => "chi_s_h",
        }
    }
}

/// A cutoff sampled at a grid's wavenumbers, in FFT bin order.
#[derive(Debug, Clone, PartialEq)]
pub struct CutoffProfile {
    kind: CutoffKind,
    grid: TorusGrid,
    values: Vec<f64>,
}

impl CutoffProfile {
    pub fn kind(&self) -> CutoffKind {
        self.kind
    }

    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    /// Value at FFT bin `i`.
    pub fn value(&self, bin: usize) -> f64 {
        self.values[bin]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Sample a cutoff on the grid's wavenumbers.
pub fn make_cutoff(kind: CutoffKind, grid: TorusGrid) -> CutoffProfile {
    let values = (0..grid.len())
        .map(|bin| kind.eval(grid.wavenumber(bin)))
        .collect();
    CutoffProfile { kind, grid, values }
}

/// Mode filter: multiply the spectrum by the profile.
pub fn apply_filter(field: &SpectralField, profile: &CutoffProfile) -> Result<SpectralField> {
    if field.grid() != profile.grid {
        return Err(Error::GridMismatch {
            a: field.grid().len(),
            b: profile.grid.len(),
        });
    }
    let mut coeffs = field.to_fourier();
    for (c, &v) in coeffs.iter_mut().zip(&profile.values) {
        *c *= v;
    }
    SpectralField::from_fourier(field.grid(), &coeffs)
}

/// Linear symbol of the constant-coefficient part,
/// `lambda(kappa) = -(1 - kappa^2)^2 + eps^2`.
pub(crate) fn semigroup_symbol(kappa: f64, eps: f64) -> f64 {
    let w = 1.0 - kappa * kappa;
    -(w * w) + eps * eps
}

/// Apply `e^{L t}` composed with a hull filter: multiplier
/// `exp(lambda(kappa) t) * profile(kappa)`, `t >= 0`.
pub fn apply_semigroup(
    field: &SpectralField,
    t: f64,
    eps: f64,
    heat_profile: &CutoffProfile,
) -> Result<SpectralField> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    if field.grid() != heat_profile.grid {
        return Err(Error::GridMismatch {
            a: field.grid().len(),
            b: heat_profile.grid.len(),
        });
    }
    let mut coeffs = field.to_fourier();
    for (bin, c) in coeffs.iter_mut().enumerate() {
        let kappa = field.grid().wavenumber(bin);
        *c *= (semigroup_symbol(kappa, eps) * t).exp() * heat_profile.values[bin];
    }
    SpectralField::from_fourier(field.grid(), &coeffs)
}

/// Slowest grid decay rate of the damped branch: minimum of
/// `(1 - kappa^2)^2 - eps^2` over grid wavenumbers where `chi_s_h > 0`.
pub fn uncritical_decay_rate(grid: TorusGrid, eps: f64) -> f64 {
    let profile = make_cutoff(CutoffKind::ChiSH, grid);
    (0..grid.len())
        .filter(|&bin| profile.value(bin) > 0.0)
        .map(|bin| -semigroup_symbol(grid.wavenumber(bin), eps))
        .fold(f64::INFINITY, f64::min)
}
