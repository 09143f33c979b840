//! Time integration of the nonlocal pattern-forming equation
//!
//! ```text
//! d/dt u = -(1 + dx^2)^2 u + eps^2 u - u (Q * u) - u (K * u^2)
//! ```
//!
//! on a periodic grid. The diagonal linear symbol is handled exactly by the
//! exponential stepper; the quadratic and cubic convolution nonlinearities
//! are evaluated on a doubled grid so the retained modes are alias-free.

use num_complex::Complex64;

use crate::etd::Etdrk4;
use crate::kernel::KernelMeasure;
use crate::spectral::{self, SpectralField, TorusGrid};
use crate::{Error, Result, RunOutcome};

/// Sup-norm threshold treated as blow-up.
pub const BLOWUP_THRESHOLD: f64 = 1e6;

/// Linear symbol `lambda(kappa) = -(1 - kappa^2)^2 + eps^2`; touches
/// `+eps^2` at the critical wavenumbers `kappa = +-1`.
pub fn linear_symbol(kappa: f64, eps: f64) -> f64 {
    let w = 1.0 - kappa * kappa;
    -(w * w) + eps * eps
}

/// A concrete initial-value problem.
#[derive(Debug, Clone)]
pub struct SHProblem {
    pub grid: TorusGrid,
    pub eps: f64,
    pub q: KernelMeasure,
    pub k: KernelMeasure,
    pub initial: SpectralField,
    pub t_end: f64,
    pub dt: f64,
}

impl SHProblem {
    fn validate(&self) -> Result<usize> {
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::Config(format!("eps = {} outside (0, 1)", self.eps)));
        }
        if self.initial.grid() != self.grid {
            return Err(Error::GridMismatch {
                a: self.grid.len(),
                b: self.initial.grid().len(),
            });
        }
        if self
            .initial
            .samples()
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFinite("initial field"));
        }
        if self.initial.reality_defect() > 1e-10 {
            return Err(Error::Config("initial field is not real".into()));
        }
        if !(self.dt > 0.0) || !(self.t_end > 0.0) {
            return Err(Error::Config("dt and t_end must be positive".into()));
        }
        let steps = (self.t_end / self.dt).round();
        if steps < 1.0 || (steps * self.dt - self.t_end).abs() > 1e-9 * self.t_end.max(1.0) {
            return Err(Error::Config(format!(
                "dt = {} does not divide t_end = {}",
                self.dt, self.t_end
            )));
        }
        Ok(steps as usize)
    }
}

/// Snapshots plus per-snapshot diagnostics.
#[derive(Debug, Clone)]
pub struct SHTrajectory {
    pub times: Vec<f64>,
    pub fields: Vec<SpectralField>,
    pub sup_norms: Vec<f64>,
    pub c4_norms: Vec<f64>,
    pub outcome: RunOutcome,
}

impl SHTrajectory {
    /// Snapshot index whose time matches `t` (within round-off).
    pub fn index_at(&self, t: f64) -> Result<usize> {
        self.times
            .iter()
            .position(|&s| (s - t).abs() <= 1e-9 * t.abs().max(1.0))
            .ok_or(Error::MissingSnapshot(t))
    }
}

/// Nonlinearity `-u (Q*u) - u (K*u^2)`, dealiased by the doubled grid and
/// projected back to real samples.
pub fn nonlinearity(
    u: &SpectralField,
    q: &KernelMeasure,
    k: &KernelMeasure,
) -> Result<SpectralField> {
    if u.samples()
        .iter()
        .any(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        return Err(Error::NonFinite("nonlinearity input"));
    }
    let grid = u.grid();
    let q_fine = spectral::fine_multiplier(grid, q, 0);
    let k_fine = spectral::fine_multiplier(grid, k, 0);
    let hat = spectral::sh_nonlin_hat(grid, &u.to_fourier(), &q_fine, &k_fine);
    SpectralField::from_fourier(grid, &hat)
}

/// Stepper with precomputed symbol exponentials and kernel multipliers.
pub struct ShStepper {
    grid: TorusGrid,
    scheme: Etdrk4,
    q_fine: Vec<f64>,
    k_fine: Vec<f64>,
}

impl ShStepper {
    pub fn new(grid: TorusGrid, eps: f64, q: &KernelMeasure, k: &KernelMeasure, dt: f64) -> Self {
        let symbol: Vec<f64> = (0..grid.len())
            .map(|bin| linear_symbol(grid.wavenumber(bin), eps))
            .collect();
        Self {
            grid,
            scheme: Etdrk4::new(&symbol, dt),
            q_fine: spectral::fine_multiplier(grid, q, 0),
            k_fine: spectral::fine_multiplier(grid, k, 0),
        }
    }

    /// Advance Fourier coefficients by one step.
    pub fn step_hat(&self, u_hat: &[Complex64]) -> Vec<Complex64> {
        self.scheme.step(u_hat, |v| {
            spectral::sh_nonlin_hat(self.grid, v, &self.q_fine, &self.k_fine)
        })
    }
}

/// One exponential step on a field; convenience wrapper over [`ShStepper`].
pub fn etdrk4_step(
    u: &SpectralField,
    dt: f64,
    eps: f64,
    q: &KernelMeasure,
    k: &KernelMeasure,
) -> Result<SpectralField> {
    if !(dt > 0.0) {
        return Err(Error::Config(format!("dt = {dt} must be positive")));
    }
    let stepper = ShStepper::new(u.grid(), eps, q, k, dt);
    let out = stepper.step_hat(&u.to_fourier());
    if out.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::BlowUp { t: dt, step: 0 });
    }
    SpectralField::from_fourier(u.grid(), &out)
}

fn coefficients_blew_up(u_hat: &[Complex64]) -> bool {
    u_hat.iter().any(|c| {
        !c.re.is_finite() || !c.im.is_finite() || c.norm_sqr() > BLOWUP_THRESHOLD * BLOWUP_THRESHOLD
    })
}

/// Integrate up to `t_end`, keeping every `snapshot_stride`-th step (plus the
/// initial state). On blow-up the snapshots collected so far are returned
/// with the failure recorded in `outcome`.
pub fn simulate_sh(problem: &SHProblem, snapshot_stride: usize) -> Result<SHTrajectory> {
    let steps = problem.validate()?;
    let stride = snapshot_stride.max(1);
    let stepper = ShStepper::new(
        problem.grid,
        problem.eps,
        &problem.q,
        &problem.k,
        problem.dt,
    );

    let mut traj = SHTrajectory {
        times: Vec::new(),
        fields: Vec::new(),
        sup_norms: Vec::new(),
        c4_norms: Vec::new(),
        outcome: RunOutcome::Completed,
    };
    let record = |t: f64, field: SpectralField, traj: &mut SHTrajectory| -> Result<()> {
        traj.sup_norms.push(field.sup_norm());
        traj.c4_norms.push(field.c_norm(4)?);
        traj.times.push(t);
        traj.fields.push(field);
        Ok(())
    };

    record(0.0, problem.initial.clone(), &mut traj)?;
    let mut u_hat = problem.initial.to_fourier();
    for step in 1..=steps {
        u_hat = stepper.step_hat(&u_hat);
        let t = step as f64 * problem.dt;
        if coefficients_blew_up(&u_hat) {
            traj.outcome = RunOutcome::BlowUp { t, step };
            return Ok(traj);
        }
        if step % stride == 0 || step == steps {
            let field = SpectralField::from_fourier(problem.grid, &u_hat)?;
            if field.sup_norm() > BLOWUP_THRESHOLD {
                traj.outcome = RunOutcome::BlowUp { t, step };
                return Ok(traj);
            }
            record(t, field, &mut traj)?;
        }
    }
    Ok(traj)
}
