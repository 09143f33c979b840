//! Pseudospectral laboratory for the nonlocal Swift-Hohenberg equation
//!
//! ```text
//! d/dt u = -(1 + dx^2)^2 u + eps^2 u - u (Q * u) - u (K * u^2)
//! ```
//!
//! with convolution kernels `Q`, `K` given as finite symmetric measures, and
//! for its Ginzburg-Landau amplitude approximation
//!
//! ```text
//! psi(x,t) = eps ( A(eps x, eps^2 t) e^{ix} + conj(A) e^{-ix} ),
//! d/dT A   = (1 + 4 dX^2) A - gamma |A|^2 A,
//! ```
//!
//! where `gamma` is computed from the Fourier coefficients of `Q` and `K`.
//!
//! The crate provides:
//!
//! * [`kernel`] — symmetric measures (Dirac atoms + smooth families) and
//!   their Fourier symbols `q_n`, `k_n`;
//! * [`spectral`] — periodic grids, FFT-backed fields, spectral derivatives,
//!   kernel convolution multipliers, smooth frequency cutoffs and mode
//!   filters, semigroup application, and discrete `C^m` norms;
//! * [`etd`] — the fourth-order exponential time differencing stepper with
//!   contour-averaged coefficient functions;
//! * [`shsolver`] / [`glsolver`] — time integration of the full equation and
//!   of the amplitude equation;
//! * [`approx`] — the refined approximation `phi`, its residual with the
//!   harmonic prefactor decomposition, the critical/uncritical error
//!   components, and the error-equation diagnostic;
//! * [`harness`] — epsilon-ladder experiments (validity scan, residual scan,
//!   filter/cancellation property suite), slope fitting, and result
//!   persistence.

pub mod approx;
pub mod etd;
pub mod glsolver;
pub mod harness;
pub mod kernel;
pub mod shsolver;
pub mod spectral;

use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

/// How a time integration ended.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum RunOutcome {
    /// Reached the requested final time.
    Completed,
    /// Sup-norm exceeded the blow-up threshold or became non-finite; the
    /// trajectory holds the snapshots collected before that step.
    BlowUp { t: f64, step: usize },
}

impl RunOutcome {
    pub fn is_completed(&self) -> bool {
        matches!(self, RunOutcome::Completed)
    }
}

/// Crate-wide error type.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("kernel is not symmetric: {0}")]
    AsymmetricKernel(String),
    #[error("invalid kernel parameter: {0}")]
    InvalidKernel(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("fields live on different grids ({a} vs {b} points)")]
    GridMismatch { a: usize, b: usize },
    #[error("derivative order {0} out of supported range")]
    OrderOutOfRange(usize),
    #[error("negative time {0} passed to semigroup")]
    NegativeTime(f64),
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
    #[error("solution blew up at t = {t} (step {step})")]
    BlowUp { t: f64, step: usize },
    #[error("no snapshot bracketing t = {0}")]
    MissingSnapshot(f64),
    #[error("slope fit needs >= 3 points with positive values")]
    SlopeFit,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
