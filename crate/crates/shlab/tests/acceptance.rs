//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! The expensive theorem scans (criteria 2 and 10 share them) run once and
//! are cached for the whole test binary. Run with `--nocapture` to see the
//! per-criterion lines.

use std::sync::OnceLock;

use shlab::glsolver::{gl_cubic_coefficient, simulate_gl, GLSystem};
use shlab::harness::{
    fit_slope, run_lemma_suite, run_residual_scan, run_validity_scan, LemmaReport, RunConfig,
    ScanResult,
};
use shlab::kernel::KernelMeasure;
use shlab::shsolver::{simulate_sh, SHProblem};
use shlab::spectral::{SpectralField, TorusGrid};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn ladder_config(kernels: &str) -> RunConfig {
    RunConfig::from_json(&format!(
        r#"{{
            "P": 10,
            "M_list": [100, 200, 400],
            "kernels": {kernels},
            "T_star": 1.0,
            "amplitude": {{"preset": "sech", "amplitude": 0.8, "width": 0.35}},
            "d": 0.0,
            "seed": 7,
            "snapshots": 100
        }}"#
    ))
    .expect("valid ladder config")
}

fn local_kernels() -> &'static str {
    r#"{"Q": {"atoms": []}, "K": {"atoms": [[0.0, 1.0]]}}"#
}

fn gaussian_kernels() -> &'static str {
    r#"{"Q": {"atoms": []}, "K": {"smooth": {"family": "gaussian", "mass": 1.0, "width": 1.0}}}"#
}

fn mixed_kernels() -> &'static str {
    r#"{"Q": {"smooth": {"family": "gaussian", "mass": 1.0, "width": 1.0}}, "K": {"atoms": [[0.0, 1.0]]}}"#
}

struct TheoremScans {
    local: ScanResult,
    gaussian: ScanResult,
}

fn theorem_scans() -> &'static TheoremScans {
    static SCANS: OnceLock<TheoremScans> = OnceLock::new();
    SCANS.get_or_init(|| {
        let (local, gaussian) = rayon::join(
            || run_validity_scan(&ladder_config(local_kernels())).expect("local scan"),
            || run_validity_scan(&ladder_config(gaussian_kernels())).expect("gaussian scan"),
        );
        TheoremScans { local, gaussian }
    })
}

fn lemma_report() -> &'static LemmaReport {
    static REPORT: OnceLock<LemmaReport> = OnceLock::new();
    REPORT
        .get_or_init(|| run_lemma_suite(&ladder_config(local_kernels())).expect("lemma suite runs"))
}

fn check(report_data: &LemmaReport, name: &str) -> (bool, String) {
    let c = report_data
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("missing check {name}"));
    (
        c.pass,
        format!(
            "{name} measured {:.4e} ({} {:.4e})",
            c.measured, c.comparison, c.threshold
        ),
    )
}

#[test]
fn criterion_1_local_cubic_coefficient() {
    let gamma = gl_cubic_coefficient(&KernelMeasure::zero(), &KernelMeasure::dirac(1.0));
    report(
        "1 (local cubic coefficient)",
        gamma == 3.0,
        &format!("gamma = {gamma} (exact 3)"),
    );
}

#[test]
fn criterion_2_validity_scan_orders() {
    let scans = theorem_scans();
    for (name, scan) in [("local", &scans.local), ("gaussian", &scans.gaussian)] {
        let ok_rows = scan.rows.iter().all(|r| r.outcome == "ok");
        let fit = scan.slopes.err_psi_c4.expect("three completed rows");
        let span = scan
            .ratio_span(2, |r| r.err_psi_c4)
            .expect("positive errors");
        let pass = ok_rows && fit.slope >= 1.8 && span <= 3.0;
        report(
            &format!("2 (validity, {name} kernels)"),
            pass,
            &format!(
                "slope = {:.3} (need >= 1.8), eps^2-ratio span = {:.2} (need <= 3)",
                fit.slope, span
            ),
        );
    }
}

#[test]
fn criterion_3_residual_orders() {
    // the validity scans already measured the residual along the same
    // amplitude trajectories; reuse their rows
    let scans = theorem_scans();
    for (name, scan) in [("local", &scans.local), ("gaussian", &scans.gaussian)] {
        let es = scan.slopes.es_res_c1.expect("rows complete");
        let ec = scan.slopes.ec_res_c1.expect("rows complete");
        let pass = (2.7..=3.5).contains(&es.slope) && (3.6..=4.6).contains(&ec.slope);
        report(
            &format!("3 (residual orders, {name} kernels)"),
            pass,
            &format!(
                "E_s slope = {:.3} in [2.7, 3.5], E_c slope = {:.3} in [3.6, 4.6]",
                es.slope, ec.slope
            ),
        );
    }
}

#[test]
fn criterion_3b_rescaled_forcings_stable() {
    let scans = theorem_scans();
    for (name, scan) in [("local", &scans.local), ("gaussian", &scans.gaussian)] {
        let span_c = scan.ratio_span(0, |r| Some(r.delta_c_c1)).expect("rows");
        let span_s = scan.ratio_span(0, |r| Some(r.delta_s_c1)).expect("rows");
        let pass = span_c <= 3.0 && span_s <= 3.0;
        report(
            &format!("3b (delta_c/delta_s stability, {name} kernels)"),
            pass,
            &format!("delta_c span = {span_c:.2}, delta_s span = {span_s:.2} (need <= 3)"),
        );
    }
}

#[test]
fn criterion_4_refinement_gap_order() {
    // phi differs from psi through the correctors, which need q_1 != 0
    let scan = run_residual_scan(&ladder_config(mixed_kernels())).expect("mixed scan");
    let fit = scan.slopes.phi_psi_c4.expect("rows complete");
    report(
        "4 (||phi - psi||_C4 order)",
        fit.slope >= 1.8,
        &format!("slope = {:.3} (need >= 1.8)", fit.slope),
    );
}

#[test]
fn criterion_5_convolution_approximation() {
    let lemmas = lemma_report();
    let mut pass = true;
    let mut details = Vec::new();
    for name in [
        "kernel_taylor_gap_quadratic_slope",
        "kernel_taylor_gap_quadratic_slope_upper",
        "kernel_taylor_gap_cubic_slope",
        "kernel_taylor_gap_cubic_slope_upper",
        "kernel_taylor_gap_dirac_floor",
    ] {
        let (ok, detail) = check(lemmas, name);
        pass &= ok;
        details.push(detail);
    }
    report("5 (convolution approximation)", pass, &details.join("; "));
}

#[test]
fn criterion_6_cancellation_and_support() {
    let lemmas = lemma_report();
    let mut pass = true;
    let mut details = Vec::new();
    for name in [
        "critical_product_cancellation",
        "nonlocal_critical_cancellation",
        "convolution_support_propagation",
    ] {
        let (ok, detail) = check(lemmas, name);
        pass &= ok;
        details.push(detail);
    }
    report("6 (cancellation/support lemmas)", pass, &details.join("; "));
}

#[test]
fn criterion_7_zero_filter_scaling() {
    let lemmas = lemma_report();
    let (ok1, d1) = check(lemmas, "zero_filter_deviation_c1_slope");
    let (ok2, d2) = check(lemmas, "zero_filter_deviation_c2_slope");
    report(
        "7 (zero-filter scaling)",
        ok1 && ok2,
        &format!("{d1}; {d2}"),
    );
}

#[test]
fn criterion_8_semigroup_estimates() {
    let lemmas = lemma_report();
    let (ok1, d1) = check(lemmas, "semigroup_damped_decay_rate");
    let (ok2, d2) = check(lemmas, "semigroup_critical_growth_factor");
    report(
        "8 (semigroup estimates)",
        ok1 && ok2,
        &format!("{d1}; {d2}"),
    );
}

#[test]
fn criterion_9_integrator_orders() {
    // full equation: self-convergence against a 16x finer reference
    let g = TorusGrid::new(1, 64).expect("grid");
    let base = SHProblem {
        grid: g,
        eps: 0.5,
        q: KernelMeasure::gaussian(0.8, 1.0).expect("kernel"),
        k: KernelMeasure::dirac(1.0),
        initial: SpectralField::from_real_fn(g, |x| 0.8 * x.cos() + 0.3),
        t_end: 2.0,
        dt: 0.1,
    };
    let run_sh = |dt: f64| {
        let problem = SHProblem { dt, ..base.clone() };
        simulate_sh(&problem, usize::MAX)
            .expect("runs")
            .fields
            .last()
            .unwrap()
            .clone()
    };
    let reference = run_sh(0.05 / 16.0);
    let sh_points: Vec<(f64, f64)> = [0.2, 0.1, 0.05]
        .iter()
        .map(|&dt| (dt, run_sh(dt).sub(&reference).sup_norm()))
        .collect();
    let sh_fit = fit_slope(&sh_points).expect("positive errors");

    // amplitude equation: same protocol
    let gx = TorusGrid::new(10, 128).expect("grid");
    let a0 = {
        let mut coeffs = vec![num_complex::Complex64::default(); gx.len()];
        for (f, c) in [
            (0i64, (0.5, 0.0)),
            (1, (0.2, 0.1)),
            (-1, (0.1, -0.2)),
            (2, (-0.1, 0.05)),
        ] {
            coeffs[gx.bin_of_freq(f).unwrap()] = num_complex::Complex64::new(c.0, c.1);
        }
        SpectralField::from_fourier(gx, &coeffs).expect("field")
    };
    let run_gl = |dt: f64| {
        let system = GLSystem {
            gamma: 3.0,
            grid_x: gx,
            initial: a0.clone(),
            t_end: 1.0,
            dt,
        };
        simulate_gl(&system, usize::MAX)
            .expect("runs")
            .fields
            .last()
            .unwrap()
            .clone()
    };
    let reference = run_gl(0.003125 / 16.0);
    let gl_points: Vec<(f64, f64)> = [0.0125, 0.00625, 0.003125]
        .iter()
        .map(|&dt| (dt, run_gl(dt).sub(&reference).sup_norm()))
        .collect();
    let gl_fit = fit_slope(&gl_points).expect("positive errors");

    // zero kernels: exact linear propagation over t = 10
    let eps = 0.1;
    let u0 = SpectralField::from_real_fn(g, |x| x.cos() + 0.3 * (2.0 * x).cos());
    let problem = SHProblem {
        grid: g,
        eps,
        q: KernelMeasure::zero(),
        k: KernelMeasure::zero(),
        initial: u0.clone(),
        t_end: 10.0,
        dt: 0.1,
    };
    let traj = simulate_sh(&problem, usize::MAX).expect("runs");
    let exact = u0.map_spectrum(|kappa| {
        num_complex::Complex64::new(
            (shlab::shsolver::linear_symbol(kappa, eps) * 10.0).exp(),
            0.0,
        )
    });
    let linear_defect = traj.fields.last().unwrap().sub(&exact).sup_norm();

    let pass = (sh_fit.slope - 4.0).abs() <= 0.3
        && (gl_fit.slope - 4.0).abs() <= 0.3
        && linear_defect <= 1e-11;
    report(
        "9 (integrator orders)",
        pass,
        &format!(
            "full-equation slope = {:.3}, amplitude slope = {:.3} (need 4 +- 0.3), linear defect = {:.2e} (need <= 1e-11)",
            sh_fit.slope, gl_fit.slope, linear_defect
        ),
    );
}

#[test]
fn criterion_10_error_ball_stability() {
    let scans = theorem_scans();
    for (name, scan) in [("local", &scans.local), ("gaussian", &scans.gaussian)] {
        let span = scan.ratio_span(0, |r| r.error_ball_c4).expect("rows");
        report(
            &format!("10 (error-ball stability, {name} kernels)"),
            span <= 3.0,
            &format!("sup_t(||R_c||_C4 + eps ||R_s||_C4) span = {span:.2} (need <= 3)"),
        );
    }
}
