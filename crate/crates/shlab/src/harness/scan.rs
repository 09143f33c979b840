//! Epsilon-ladder experiments: the validity scan (amplitude equation vs full
//! solution) and the cheaper residual-only scan.

use rayon::prelude::*;
use serde::Serialize;

use crate::approx::Ansatz;
use crate::glsolver::{simulate_gl, GLSystem, GLTrajectory};
use crate::shsolver::{simulate_sh, SHProblem};
use crate::spectral::SpectralField;
use crate::{Error, Result, RunOutcome};

use super::config::RunConfig;
use super::slope::{fit_slope, SlopeFit};

/// Norm suprema over the snapshot set of one ladder member. Columns that
/// need the full simulation stay empty in residual-only scans.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub eps: f64,
    pub m: usize,
    /// Cubic coefficient of the amplitude equation; `gamma <= 0` marks a
    /// focusing configuration outside the defocusing theory.
    pub gamma: f64,
    /// sup_t ||E_s Res(phi)||_{C^1}
    pub es_res_c1: f64,
    /// sup_t ||E_c Res(phi)||_{C^1}
    pub ec_res_c1: f64,
    /// sup_t ||delta_s||_{C^1} = eps^{-3} ||E_s Res||
    pub delta_s_c1: f64,
    /// sup_t ||delta_c||_{C^1} = eps^{-4} ||E_c Res||
    pub delta_c_c1: f64,
    /// sup_t of the prefactor-reconstruction remainder, C^1
    pub remainder_c1: f64,
    /// sup_t ||phi - psi||_{C^4}
    pub phi_psi_c4: f64,
    /// sup_t ||u - psi||_{C^4}
    pub err_psi_c4: Option<f64>,
    /// sup_t ||u - phi||_{C^4}
    pub err_phi_c4: Option<f64>,
    /// sup_t ||R_c||_{C^4}
    pub rc_c4: Option<f64>,
    /// sup_t ||R_s||_{C^4}
    pub rs_c4: Option<f64>,
    /// sup_t (||R_c||_{C^4} + eps ||R_s||_{C^4})
    pub error_ball_c4: Option<f64>,
    pub outcome: String,
    pub seconds: f64,
}

/// Fitted ladder slopes; present only when at least three rows carry the
/// corresponding value.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanSlopes {
    pub err_psi_c4: Option<SlopeFit>,
    pub err_phi_c4: Option<SlopeFit>,
    pub es_res_c1: Option<SlopeFit>,
    pub ec_res_c1: Option<SlopeFit>,
    pub remainder_c1: Option<SlopeFit>,
    pub phi_psi_c4: Option<SlopeFit>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub slopes: ScanSlopes,
}

impl ScanResult {
    /// Max/min ratio of `select(row) / eps^power` across completed rows.
    pub fn ratio_span(&self, power: i32, select: impl Fn(&ScanRow) -> Option<f64>) -> Option<f64> {
        let ratios: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.outcome == "ok")
            .filter_map(|r| select(r).map(|v| v / r.eps.powi(power)))
            .collect();
        if ratios.len() < 2 || ratios.iter().any(|v| *v <= 0.0) {
            return None;
        }
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        Some(max / min)
    }
}

fn outcome_label(outcome: &RunOutcome) -> String {
    match outcome {
        RunOutcome::Completed => "ok".to_string(),
        RunOutcome::BlowUp { t, step } => format!("blowup at t={t} (step {step})"),
    }
}

/// Exact step size dividing `span` into `pieces` snapshots, each snapshot an
/// integer number of steps close to `target` in size.
fn grid_steps(span: f64, pieces: usize, target: f64) -> (f64, usize) {
    let stride = span / pieces as f64;
    let per = (stride / target).ceil().max(1.0) as usize;
    (stride / per as f64, per)
}

fn run_ladder_point(config: &RunConfig, m: usize, with_sh: bool) -> Result<ScanRow> {
    let start = std::time::Instant::now();
    let fast = config.fast_grid(m)?;
    let slow = config.slow_grid(fast)?;
    let (q, k) = config.build_kernels()?;
    let ansatz = Ansatz::new(slow, fast, q, k)?;
    let eps = ansatz.eps();

    let mut row = ScanRow {
        eps,
        m,
        gamma: ansatz.gamma(),
        es_res_c1: 0.0,
        ec_res_c1: 0.0,
        delta_s_c1: 0.0,
        delta_c_c1: 0.0,
        remainder_c1: 0.0,
        phi_psi_c4: 0.0,
        err_psi_c4: None,
        err_phi_c4: None,
        rc_c4: None,
        rs_c4: None,
        error_ball_c4: None,
        outcome: "ok".to_string(),
        seconds: 0.0,
    };

    // amplitude trajectory on [0, T_star]
    let a0 = config.initial_amplitude(slow, ansatz.gamma())?;
    let (dt_slow, per_slow) = grid_steps(config.t_star, config.snapshots, config.dt_slow());
    let gl_system = GLSystem {
        gamma: ansatz.gamma(),
        grid_x: slow,
        initial: a0,
        t_end: config.t_star,
        dt: dt_slow,
    };
    let gl = simulate_gl(&gl_system, per_slow)?;
    if !gl.outcome.is_completed() {
        row.outcome = outcome_label(&gl.outcome);
        row.seconds = start.elapsed().as_secs_f64();
        return Ok(row);
    }

    // residual norms along the amplitude trajectory
    for (idx, a) in gl.fields.iter().enumerate() {
        let t = gl.times[idx] / (eps * eps);
        let report = ansatz.residual(a, t)?;
        row.es_res_c1 = row.es_res_c1.max(report.norms.uncritical.c1);
        row.ec_res_c1 = row.ec_res_c1.max(report.norms.critical.c1);
        row.remainder_c1 = row.remainder_c1.max(report.norms.remainder.c1);
        let psi = ansatz.psi(a)?;
        let (phi, _, _) = ansatz.phi(a)?;
        row.phi_psi_c4 = row.phi_psi_c4.max(phi.sub(&psi).c_norm(4)?);
    }
    let e3 = eps * eps * eps;
    row.delta_s_c1 = row.es_res_c1 / e3;
    row.delta_c_c1 = row.ec_res_c1 / (e3 * eps);

    if !with_sh {
        row.seconds = start.elapsed().as_secs_f64();
        return Ok(row);
    }

    // full solution from the perturbed leading-order state
    let psi0 = ansatz.psi(&gl.fields[0])?;
    let initial = if config.d > 0.0 {
        psi0.add(&config.perturbation(fast)?.scale(config.d * eps * eps))
    } else {
        psi0
    };
    let t_end = config.t_star / (eps * eps);
    let (dt, per) = grid_steps(t_end, config.snapshots, config.dt_fast());
    let problem = SHProblem {
        grid: fast,
        eps,
        q: ansatz.kernels().0.clone(),
        k: ansatz.kernels().1.clone(),
        initial,
        t_end,
        dt,
    };
    let traj = simulate_sh(&problem, per)?;
    if !traj.outcome.is_completed() {
        row.outcome = outcome_label(&traj.outcome);
        row.seconds = start.elapsed().as_secs_f64();
        return Ok(row);
    }
    if traj.times.len() != gl.times.len() {
        return Err(Error::Config(format!(
            "snapshot mismatch: {} fast vs {} slow",
            traj.times.len(),
            gl.times.len()
        )));
    }

    let (mut err_psi, mut err_phi, mut rc, mut rs, mut ball) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (idx, u) in traj.fields.iter().enumerate() {
        let a = &gl.fields[idx];
        let psi = ansatz.psi(a)?;
        let (phi, _, _) = ansatz.phi(a)?;
        err_psi = err_psi.max(u.sub(&psi).c_norm(4)?);
        err_phi = err_phi.max(u.sub(&phi).c_norm(4)?);
        let components = ansatz.error_components(u, &phi)?;
        rc = rc.max(components.r_c_norms[4]);
        rs = rs.max(components.r_s_norms[4]);
        ball = ball.max(components.r_c_norms[4] + eps * components.r_s_norms[4]);
    }
    row.err_psi_c4 = Some(err_psi);
    row.err_phi_c4 = Some(err_phi);
    row.rc_c4 = Some(rc);
    row.rs_c4 = Some(rs);
    row.error_ball_c4 = Some(ball);
    row.seconds = start.elapsed().as_secs_f64();
    Ok(row)
}

fn fit_rows(rows: &[ScanRow]) -> ScanSlopes {
    let completed: Vec<&ScanRow> = rows.iter().filter(|r| r.outcome == "ok").collect();
    let fit_opt = |select: &dyn Fn(&ScanRow) -> Option<f64>| -> Option<SlopeFit> {
        let pts: Vec<(f64, f64)> = completed
            .iter()
            .filter_map(|r| select(r).map(|v| (r.eps, v)))
            .collect();
        if pts.len() < 3 {
            return None;
        }
        fit_slope(&pts).ok()
    };
    ScanSlopes {
        err_psi_c4: fit_opt(&|r| r.err_psi_c4),
        err_phi_c4: fit_opt(&|r| r.err_phi_c4),
        es_res_c1: fit_opt(&|r| Some(r.es_res_c1)),
        ec_res_c1: fit_opt(&|r| Some(r.ec_res_c1)),
        remainder_c1: fit_opt(&|r| Some(r.remainder_c1)),
        phi_psi_c4: fit_opt(&|r| Some(r.phi_psi_c4)),
    }
}

fn run_scan(config: &RunConfig, with_sh: bool) -> Result<ScanResult> {
    config.validate()?;
    let rows: Vec<ScanRow> = config
        .m_list
        .par_iter()
        .map(|&m| run_ladder_point(config, m, with_sh))
        .collect::<Result<_>>()?;
    let slopes = fit_rows(&rows);
    Ok(ScanResult { rows, slopes })
}

/// Theorem experiment: simulate the amplitude equation and the full
/// equation for every ladder member, record approximation-error norms, and
/// fit their epsilon-orders.
pub fn run_validity_scan(config: &RunConfig) -> Result<ScanResult> {
    run_scan(config, true)
}

/// Residual orders only; no full simulation, so it is cheap.
pub fn run_residual_scan(config: &RunConfig) -> Result<ScanResult> {
    run_scan(config, false)
}

/// Run one ladder member and return its trajectories for diagnostics
/// (e.g. the error-equation check).
pub fn run_single_member(
    config: &RunConfig,
    m: usize,
) -> Result<(Ansatz, GLTrajectory, crate::shsolver::SHTrajectory)> {
    config.validate()?;
    let fast = config.fast_grid(m)?;
    let slow = config.slow_grid(fast)?;
    let (q, k) = config.build_kernels()?;
    let ansatz = Ansatz::new(slow, fast, q, k)?;
    let eps = ansatz.eps();

    let a0 = config.initial_amplitude(slow, ansatz.gamma())?;
    let (dt_slow, per_slow) = grid_steps(config.t_star, config.snapshots, config.dt_slow());
    let gl_system = GLSystem {
        gamma: ansatz.gamma(),
        grid_x: slow,
        initial: a0,
        t_end: config.t_star,
        dt: dt_slow,
    };
    let gl = simulate_gl(&gl_system, per_slow)?;

    let psi0 = ansatz.psi(&gl.fields[0])?;
    let initial = if config.d > 0.0 {
        psi0.add(&config.perturbation(fast)?.scale(config.d * eps * eps))
    } else {
        psi0
    };
    let t_end = config.t_star / (eps * eps);
    let (dt, per) = grid_steps(t_end, config.snapshots, config.dt_fast());
    let problem = SHProblem {
        grid: fast,
        eps,
        q: ansatz.kernels().0.clone(),
        k: ansatz.kernels().1.clone(),
        initial,
        t_end,
        dt,
    };
    let traj = simulate_sh(&problem, per)?;
    Ok((ansatz, gl, traj))
}

/// Convenience: the field exported by `simulate-sh`-style commands.
pub fn snapshot_columns(field: &SpectralField) -> Vec<(f64, f64, f64)> {
    let grid = field.grid();
    field
        .samples()
        .iter()
        .enumerate()
        .map(|(j, c)| (grid.point(j), c.re, c.im))
        .collect()
}
