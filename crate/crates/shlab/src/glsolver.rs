//! The amplitude (Ginzburg-Landau) equation on the slow grid,
//!
//! ```text
//! d/dT A = (1 + 4 dX^2) A - gamma |A|^2 A,
//! ```
//!
//! with the cubic coefficient `gamma` computed from the kernels' integer
//! Fourier coefficients, plus the second-order corrector amplitudes `A_0`,
//! `A_2` and their time derivatives.

use num_complex::Complex64;

use crate::etd::Etdrk4;
use crate::kernel::KernelMeasure;
use crate::spectral::{self, product, SpectralField, TorusGrid};
use crate::{Error, Result, RunOutcome};

use crate::shsolver::BLOWUP_THRESHOLD;

/// Cubic coefficient `2 k_0 + k_2 - q_1 q_2 / 9 - q_1^2 / 9 - 2 q_0 q_1 -
/// 2 q_1^2`. For `Q = 0`, `K = delta_0` this is the classical local value 3.
pub fn gl_cubic_coefficient(q: &KernelMeasure, k: &KernelMeasure) -> f64 {
    let qt = q.coefficient_table(2);
    let kt = k.coefficient_table(2);
    let (q0, q1, q2) = (qt.get(0), qt.get(1), qt.get(2));
    2.0 * kt.get(0) + kt.get(2) - q1 * q2 / 9.0 - q1 * q1 / 9.0 - 2.0 * q0 * q1 - 2.0 * q1 * q1
}

/// Linear symbol of `1 + 4 dX^2`.
pub fn gl_linear_symbol(kappa_x: f64) -> f64 {
    1.0 - 4.0 * kappa_x * kappa_x
}

/// Right-hand side `(1 + 4 dX^2) A - gamma |A|^2 A` with the cubic formed on
/// the doubled grid.
pub fn gl_rhs(a: &SpectralField, gamma: f64) -> Result<SpectralField> {
    if a.samples()
        .iter()
        .any(|c| !c.re.is_finite() || !c.im.is_finite())
    {
        return Err(Error::NonFinite("gl_rhs input"));
    }
    let linear = a.map_spectrum(|kappa| Complex64::new(gl_linear_symbol(kappa), 0.0));
    let cubic = SpectralField::from_fourier(
        a.grid(),
        &spectral::gl_nonlin_hat(a.grid(), &a.to_fourier(), gamma),
    )?;
    Ok(linear.add(&cubic))
}

/// An amplitude-equation initial-value problem on the slow grid.
#[derive(Debug, Clone)]
pub struct GLSystem {
    pub gamma: f64,
    pub grid_x: TorusGrid,
    pub initial: SpectralField,
    pub t_end: f64,
    pub dt: f64,
}

impl GLSystem {
    fn validate(&self) -> Result<usize> {
        if !self.gamma.is_finite() {
            return Err(Error::Config("gamma must be finite".into()));
        }
        if self.initial.grid() != self.grid_x {
            return Err(Error::GridMismatch {
                a: self.grid_x.len(),
                b: self.initial.grid().len(),
            });
        }
        if self
            .initial
            .samples()
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFinite("initial amplitude"));
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

/// Amplitude snapshots `A(X, T_k)`.
#[derive(Debug, Clone)]
pub struct GLTrajectory {
    pub times: Vec<f64>,
    pub fields: Vec<SpectralField>,
    pub outcome: RunOutcome,
}

impl GLTrajectory {
    pub fn index_at(&self, t: f64) -> Result<usize> {
        self.times
            .iter()
            .position(|&s| (s - t).abs() <= 1e-9 * t.abs().max(1.0))
            .ok_or(Error::MissingSnapshot(t))
    }
}

/// Integrate the amplitude equation to `t_end`. Focusing configurations
/// (`gamma <= 0`) may blow up; that is reported in `outcome`, not masked.
pub fn simulate_gl(system: &GLSystem, snapshot_stride: usize) -> Result<GLTrajectory> {
    let steps = system.validate()?;
    let stride = snapshot_stride.max(1);
    let grid = system.grid_x;
    let symbol: Vec<f64> = (0..grid.len())
        .map(|bin| gl_linear_symbol(grid.wavenumber(bin)))
        .collect();
    let scheme = Etdrk4::new(&symbol, system.dt);

    let mut traj = GLTrajectory {
        times: vec![0.0],
        fields: vec![system.initial.clone()],
        outcome: RunOutcome::Completed,
    };
    let mut a_hat = system.initial.to_fourier();
    for step in 1..=steps {
        a_hat = scheme.step(&a_hat, |v| spectral::gl_nonlin_hat(grid, v, system.gamma));
        let t = step as f64 * system.dt;
        let bad = a_hat.iter().any(|c| {
            !c.re.is_finite()
                || !c.im.is_finite()
                || c.norm_sqr() > BLOWUP_THRESHOLD * BLOWUP_THRESHOLD
        });
        if bad {
            traj.outcome = RunOutcome::BlowUp { t, step };
            return Ok(traj);
        }
        if step % stride == 0 || step == steps {
            traj.times.push(t);
            traj.fields.push(SpectralField::from_fourier(grid, &a_hat)?);
        }
    }
    Ok(traj)
}

/// Corrector amplitudes `A_0 = -2 q_1 |A|^2` (real) and
/// `A_2 = -(q_1 / 9) A^2`.
#[derive(Debug, Clone)]
pub struct CorrectorPair {
    pub a0: SpectralField,
    pub a2: SpectralField,
}

pub fn correctors(a: &SpectralField, q1: f64) -> CorrectorPair {
    let a0 = product(a, &a.conj()).scale(-2.0 * q1).re();
    let a2 = product(a, a).scale(-q1 / 9.0);
    CorrectorPair { a0, a2 }
}

/// Chain-rule time derivatives `dT A_0 = -2 q_1 (dT A conj(A) + A dT conj(A))`
/// and `dT A_2 = -(2/9) q_1 A dT A`, given `dT A` (normally `gl_rhs(A)`).
pub fn corrector_time_derivatives(
    a: &SpectralField,
    dt_a: &SpectralField,
    q1: f64,
) -> (SpectralField, SpectralField) {
    let d_a0 = product(dt_a, &a.conj())
        .add(&product(a, &dt_a.conj()))
        .scale(-2.0 * q1)
        .re();
    let d_a2 = product(a, dt_a).scale(-2.0 * q1 / 9.0);
    (d_a0, d_a2)
}
