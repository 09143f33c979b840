//! The refined approximation and its residual.
//!
//! The leading-order approximation is
//! `psi = eps (A(eps x, eps^2 t) e^{ix} + cc)`. The refined ansatz adds the
//! zero-mode and second-harmonic correctors,
//!
//! ```text
//! phi = eps phi_c + eps^2 phi_s,
//! phi_c = (E_0 A) e^{ix} + cc,
//! phi_s = (E_0 A_2) e^{2ix} + cc + (E_0 A_0),
//! ```
//!
//! where `E_0` is the zero-mode filter acting on the slow-scale amplitude
//! seen as a function of `x`. Substituting `phi` into the equation gives the
//! residual `Res(phi) = -d/dt phi + L(phi) + N(phi)`, which decomposes into
//! slow-scale harmonic prefactors `sum_{l=-3}^{3} a_l e^{ilx}` up to a
//! fourth-order remainder. The critical part `E_c Res` is one order smaller
//! in `eps` than the uncritical part; the rescaled forcings
//! `delta_c = eps^{-4} E_c Res`, `delta_s = eps^{-3} E_s Res` drive the
//! error components `R_c = E_c(u - phi)/eps^2`, `R_s = E_s(u - phi)/eps^3`.
//!
//! Slow fields are carried to the fast grid by sample identity: both grids
//! hold the same number of points and the slow domain is exactly `eps` times
//! the fast one, so `A(eps x_j) = A(X_j)` bin for bin.

use num_complex::Complex64;

use crate::glsolver::{self, GLTrajectory};
use crate::kernel::KernelMeasure;
use crate::shsolver::{self, SHTrajectory};
use crate::spectral::{
    apply_filter, kernel_pair, kernel_triple, make_cutoff, product, triple_product, CutoffKind,
    CutoffProfile, SpectralField, TorusGrid,
};
use crate::{Error, Result};

/// Retag a slow-grid field as the fast-grid function `X -> A(eps x)`.
///
/// Requires equal point counts; the sample arrays coincide because
/// `X_j = eps x_j` maps the grids onto each other exactly.
pub fn slow_to_fast(slow_field: &SpectralField, fast: TorusGrid) -> Result<SpectralField> {
    if slow_field.grid().len() != fast.len() {
        return Err(Error::GridMismatch {
            a: slow_field.grid().len(),
            b: fast.len(),
        });
    }
    SpectralField::from_samples(fast, slow_field.samples().to_vec())
}

/// Leading-order approximation `psi = 2 eps Re(A(eps x) e^{ix})`.
pub fn build_psi(a_slow: &SpectralField, eps: f64, fast: TorusGrid) -> Result<SpectralField> {
    let af = slow_to_fast(a_slow, fast)?;
    Ok(af.modulate(1).twice_re().scale(eps))
}

/// Everything fixed across one experiment: the scale separation, the
/// kernels, the amplitude-equation coefficients, and the fast-grid filters.
#[derive(Debug, Clone)]
pub struct Ansatz {
    eps: f64,
    gamma: f64,
    q1: f64,
    q: KernelMeasure,
    k: KernelMeasure,
    slow: TorusGrid,
    fast: TorusGrid,
    chi_0: CutoffProfile,
    chi_c: CutoffProfile,
    chi_s: CutoffProfile,
}

impl Ansatz {
    /// The slow domain factor `P` and fast factor `M` fix `eps = P / M`;
    /// both grids must carry the same number of points.
    pub fn new(
        slow: TorusGrid,
        fast: TorusGrid,
        q: KernelMeasure,
        k: KernelMeasure,
    ) -> Result<Self> {
        if slow.len() != fast.len() {
            return Err(Error::GridMismatch {
                a: slow.len(),
                b: fast.len(),
            });
        }
        if slow.domain_factor() >= fast.domain_factor() {
            return Err(Error::Config(format!(
                "slow domain factor {} must be smaller than fast {}",
                slow.domain_factor(),
                fast.domain_factor()
            )));
        }
        let eps = slow.domain_factor() as f64 / fast.domain_factor() as f64;
        let gamma = glsolver::gl_cubic_coefficient(&q, &k);
        let q1 = q.fourier_symbol(1.0);
        Ok(Self {
            eps,
            gamma,
            q1,
            q,
            k,
            slow,
            fast,
            chi_0: make_cutoff(CutoffKind::Chi0, fast),
            chi_c: make_cutoff(CutoffKind::ChiC, fast),
            chi_s: make_cutoff(CutoffKind::ChiS, fast),
        })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn q1(&self) -> f64 {
        self.q1
    }

    pub fn kernels(&self) -> (&KernelMeasure, &KernelMeasure) {
        (&self.q, &self.k)
    }

    pub fn slow_grid(&self) -> TorusGrid {
        self.slow
    }

    pub fn fast_grid(&self) -> TorusGrid {
        self.fast
    }

    fn filtered_fast(&self, slow_field: &SpectralField) -> Result<SpectralField> {
        apply_filter(&slow_to_fast(slow_field, self.fast)?, &self.chi_0)
    }

    /// `psi` at one amplitude snapshot.
    pub fn psi(&self, a: &SpectralField) -> Result<SpectralField> {
        build_psi(a, self.eps, self.fast)
    }

    /// `(phi, phi_c, phi_s)` at one amplitude snapshot.
    pub fn phi(&self, a: &SpectralField) -> Result<(SpectralField, SpectralField, SpectralField)> {
        let pair = glsolver::correctors(a, self.q1);
        self.phi_with_correctors(a, &pair.a0, &pair.a2)
    }

    /// Same with explicitly supplied corrector amplitudes.
    pub fn phi_with_correctors(
        &self,
        a: &SpectralField,
        a0: &SpectralField,
        a2: &SpectralField,
    ) -> Result<(SpectralField, SpectralField, SpectralField)> {
        let ea = self.filtered_fast(a)?;
        let ea0 = self.filtered_fast(a0)?;
        let ea2 = self.filtered_fast(a2)?;
        let phi_c = ea.modulate(1).twice_re();
        let phi_s = ea2.modulate(2).twice_re().add(&ea0.re());
        let phi = phi_c.scale(self.eps).add(&phi_s.scale(self.eps * self.eps));
        Ok((phi, phi_c, phi_s))
    }

    /// Residual of the refined ansatz at time `t` (slow time `T = eps^2 t`),
    /// with its filtered parts and harmonic prefactor decomposition.
    pub fn residual(&self, a: &SpectralField, t: f64) -> Result<ResidualReport> {
        let eps = self.eps;
        let dta = glsolver::gl_rhs(a, self.gamma)?;
        let pair = glsolver::correctors(a, self.q1);
        let (d0, d2) = glsolver::corrector_time_derivatives(a, &dta, self.q1);

        let ea = self.filtered_fast(a)?;
        let ea0 = self.filtered_fast(&pair.a0)?;
        let ea2 = self.filtered_fast(&pair.a2)?;
        let eda = self.filtered_fast(&dta)?;
        let ed0 = self.filtered_fast(&d0)?;
        let ed2 = self.filtered_fast(&d2)?;

        let (phi, _, _) = self.phi_with_correctors(a, &pair.a0, &pair.a2)?;

        // d/dt phi by the chain rule: every amplitude is a function of
        // T = eps^2 t, so each term gains eps^2 over its power in phi.
        let e3 = eps * eps * eps;
        let dt_phi = eda
            .modulate(1)
            .twice_re()
            .scale(e3)
            .add(&ed2.modulate(2).twice_re().add(&ed0.re()).scale(e3 * eps));

        let lin =
            phi.map_spectrum(|kappa| Complex64::new(shsolver::linear_symbol(kappa, eps), 0.0));
        let nl = shsolver::nonlinearity(&phi, &self.q, &self.k)?;
        let residual = lin.add(&nl).sub(&dt_phi);

        let critical = apply_filter(&residual, &self.chi_c)?;
        let uncritical = apply_filter(&residual, &self.chi_s)?;

        let prefactors = self.prefactors(&ea, &ea0, &ea2, &eda)?;
        let mut reconstruction = prefactors[0].re();
        for (ell, pf) in prefactors.iter().enumerate().skip(1) {
            reconstruction = reconstruction.add(&pf.modulate(ell as i64).twice_re());
        }
        let remainder = residual.sub(&reconstruction);

        let norms = ResidualNorms {
            full: NormPair::of(&residual)?,
            critical: NormPair::of(&critical)?,
            uncritical: NormPair::of(&uncritical)?,
            prefactors: [
                NormPair::of(&prefactors[0])?,
                NormPair::of(&prefactors[1])?,
                NormPair::of(&prefactors[2])?,
                NormPair::of(&prefactors[3])?,
            ],
            remainder: NormPair::of(&remainder)?,
        };
        Ok(ResidualReport {
            t,
            residual,
            critical,
            uncritical,
            prefactors,
            remainder,
            norms,
        })
    }

    /// The harmonic prefactors `a_0 .. a_3` assembled term by term from the
    /// filtered amplitudes (`a_{-l} = conj(a_l)` by the reality convention).
    fn prefactors(
        &self,
        ea: &SpectralField,
        ea0: &SpectralField,
        ea2: &SpectralField,
        eda: &SpectralField,
    ) -> Result<[SpectralField; 4]> {
        let eps = self.eps;
        let e2 = eps * eps;
        let e3 = e2 * eps;
        let (q, k) = (&self.q, &self.k);
        let eac = ea.conj();

        let a0 = ea0
            .add(&kernel_pair(ea, &eac, q, 1))
            .add(&kernel_pair(&eac, ea, q, -1))
            .scale(-e2);

        // d/dX on the fast grid is (1/eps) d/dx
        let dx2 = ea.derivative(2)?.scale(1.0 / e2);
        let a1 = eda
            .scale(-1.0)
            .add(&dx2.scale(4.0))
            .add(ea)
            .sub(&kernel_pair(&eac, ea2, q, -2))
            .sub(&kernel_pair(ea2, &eac, q, 1))
            .sub(&kernel_pair(ea, ea0, q, 0))
            .sub(&kernel_pair(ea0, ea, q, -1))
            .sub(&kernel_triple(ea, ea, &eac, k, 0).scale(2.0))
            .sub(&kernel_triple(&eac, ea, ea, k, -2))
            .scale(e3);

        let da2_x = ea2.derivative(1)?;
        let a2 = ea2
            .scale(-9.0 * e2)
            .add(&da2_x.scale_c(Complex64::new(0.0, 24.0 * e2)))
            .sub(&kernel_pair(ea, ea, q, -1).scale(e2));

        let a3 = kernel_pair(ea, ea2, q, -2)
            .add(&kernel_pair(ea2, ea, q, -1))
            .add(&kernel_triple(ea, ea, ea, k, -2))
            .scale(-e3);

        Ok([a0, a1, a2, a3])
    }

    /// Decompose `u - phi` into the rescaled critical/uncritical components.
    pub fn error_components(
        &self,
        u: &SpectralField,
        phi: &SpectralField,
    ) -> Result<ErrorComponents> {
        if u.grid() != self.fast || phi.grid() != self.fast {
            return Err(Error::GridMismatch {
                a: self.fast.len(),
                b: u.grid().len(),
            });
        }
        let e2 = self.eps * self.eps;
        let r = u.sub(phi);
        let r_c = apply_filter(&r, &self.chi_c)?.scale(1.0 / e2);
        let r_s = apply_filter(&r, &self.chi_s)?.scale(1.0 / (e2 * self.eps));
        let norms = |f: &SpectralField| -> Result<[f64; 5]> {
            let mut out = [0.0; 5];
            for (m, slot) in out.iter_mut().enumerate() {
                *slot = f.c_norm(m)?;
            }
            Ok(out)
        };
        Ok(ErrorComponents {
            r_norms: norms(&r)?,
            r_c_norms: norms(&r_c)?,
            r_s_norms: norms(&r_s)?,
            r,
            r_c,
            r_s,
        })
    }

    /// Right-hand sides of the split error equations at one snapshot:
    ///
    /// ```text
    /// rhs_c = L R_c - eps^2 E_c(L_1) + eps^3 E_c(N_1) + eps^2 delta_c
    /// rhs_s = L R_s - E_s(L_2) - eps E_s(L_1 + N_2) + eps^2 E_s(N_1) + delta_s
    /// ```
    ///
    /// The critical projections of `L_2` and `N_2` drop out because products
    /// of critically supported fields carry no critical modes.
    fn error_equation_rhs(
        &self,
        r_c: &SpectralField,
        r_s: &SpectralField,
        phi_c: &SpectralField,
        phi_s: &SpectralField,
        report: &ResidualReport,
    ) -> Result<(SpectralField, SpectralField)> {
        let eps = self.eps;
        let ops = ErrorOperators::assemble(self, r_c, r_s, phi_c, phi_s);
        let (delta_c, delta_s) = split_forcings(report, eps);

        let lin = |f: &SpectralField| {
            f.map_spectrum(|kappa| Complex64::new(shsolver::linear_symbol(kappa, eps), 0.0))
        };
        let rhs_c = lin(r_c)
            .sub(&apply_filter(&ops.l1, &self.chi_c)?.scale(eps * eps))
            .add(&apply_filter(&ops.n1, &self.chi_c)?.scale(eps * eps * eps))
            .add(&delta_c.scale(eps * eps));
        let rhs_s = lin(r_s)
            .sub(&apply_filter(&ops.l2, &self.chi_s)?)
            .sub(&apply_filter(&ops.l1.add(&ops.n2), &self.chi_s)?.scale(eps))
            .add(&apply_filter(&ops.n1, &self.chi_s)?.scale(eps * eps))
            .add(&delta_s);
        Ok((rhs_c, rhs_s))
    }
}

/// `C^0` and `C^1` norms of one field.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct NormPair {
    pub c0: f64,
    pub c1: f64,
}

impl NormPair {
    fn of(field: &SpectralField) -> Result<Self> {
        Ok(Self {
            c0: field.c_norm(0)?,
            c1: field.c_norm(1)?,
        })
    }
}

/// Residual at one time, with filtered parts and prefactor decomposition.
#[derive(Debug, Clone)]
pub struct ResidualReport {
    pub t: f64,
    pub residual: SpectralField,
    pub critical: SpectralField,
    pub uncritical: SpectralField,
    /// `a_0 .. a_3`; negative indices follow by conjugation.
    pub prefactors: [SpectralField; 4],
    /// `Res(phi) - sum_l a_l e^{ilx}`, the measured fourth-order remainder.
    pub remainder: SpectralField,
    pub norms: ResidualNorms,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ResidualNorms {
    pub full: NormPair,
    pub critical: NormPair,
    pub uncritical: NormPair,
    pub prefactors: [NormPair; 4],
    pub remainder: NormPair,
}

/// Rescaled forcings `delta_c = eps^{-4} E_c Res`, `delta_s = eps^{-3} E_s Res`.
pub fn split_forcings(report: &ResidualReport, eps: f64) -> (SpectralField, SpectralField) {
    let e3 = eps * eps * eps;
    (
        report.critical.scale(1.0 / (e3 * eps)),
        report.uncritical.scale(1.0 / e3),
    )
}

/// `u - phi` split into rescaled critical/uncritical parts with their
/// `C^0..C^4` norms.
#[derive(Debug, Clone)]
pub struct ErrorComponents {
    pub r: SpectralField,
    pub r_c: SpectralField,
    pub r_s: SpectralField,
    pub r_norms: [f64; 5],
    pub r_c_norms: [f64; 5],
    pub r_s_norms: [f64; 5],
}

/// The bilinear/trilinear blocks of the error equation.
///
/// With `rho = R_c + eps R_s` and `pi = phi_c + eps phi_s`:
///
/// ```text
/// L_2 = R_c Q*phi_c + phi_c Q*R_c
/// N_2 = R_c Q*R_c
/// L_1 = R_c Q*phi_s + R_s Q*phi_c + phi_s Q*R_c + phi_c Q*R_s
///       + R_c K*phi_c^2 + 2 phi_c K*(R_c phi_c)
/// N_1 = -[R_c Q*R_s + R_s Q*R_c + eps R_s Q*R_s] - eps rho K*rho^2
///       - R_s Q*phi_s - phi_s Q*R_s - 2 rho K*(rho pi)
///       - R_c K*(2 phi_c phi_s + eps phi_s^2) - R_s K*pi^2
///       - 2 phi_c K*(R_c phi_s + R_s phi_c + eps R_s phi_s)
///       - 2 phi_s K*(rho pi) - pi K*rho^2
/// ```
///
/// chosen so that `N(phi + R) - N(phi) = -eps^3 L_2 - eps^4 (N_2 + L_1) +
/// eps^5 N_1` holds exactly, an identity the tests pin against the direct
/// evaluation.
struct ErrorOperators {
    l2: SpectralField,
    n2: SpectralField,
    l1: SpectralField,
    n1: SpectralField,
}

impl ErrorOperators {
    fn assemble(
        ansatz: &Ansatz,
        r_c: &SpectralField,
        r_s: &SpectralField,
        phi_c: &SpectralField,
        phi_s: &SpectralField,
    ) -> Self {
        let eps = ansatz.eps;
        let (q, k) = (&ansatz.q, &ansatz.k);
        let rho = r_c.add(&r_s.scale(eps));
        let pi = phi_c.add(&phi_s.scale(eps));

        let l2 = kernel_pair(r_c, phi_c, q, 0).add(&kernel_pair(phi_c, r_c, q, 0));
        let n2 = kernel_pair(r_c, r_c, q, 0);
        let l1 = kernel_pair(r_c, phi_s, q, 0)
            .add(&kernel_pair(r_s, phi_c, q, 0))
            .add(&kernel_pair(phi_s, r_c, q, 0))
            .add(&kernel_pair(phi_c, r_s, q, 0))
            .add(&kernel_triple(r_c, phi_c, phi_c, k, 0))
            .add(&kernel_triple(phi_c, r_c, phi_c, k, 0).scale(2.0));

        let n1 = kernel_pair(r_c, r_s, q, 0)
            .add(&kernel_pair(r_s, r_c, q, 0))
            .add(&kernel_pair(r_s, r_s, q, 0).scale(eps))
            .add(&kernel_triple(&rho, &rho, &rho, k, 0).scale(eps))
            .add(&kernel_pair(r_s, phi_s, q, 0))
            .add(&kernel_pair(phi_s, r_s, q, 0))
            .add(&kernel_triple(&rho, &rho, &pi, k, 0).scale(2.0))
            .add(&kernel_triple(
                r_c,
                phi_s,
                &phi_c.scale(2.0).add(&phi_s.scale(eps)),
                k,
                0,
            ))
            .add(&kernel_triple(r_s, &pi, &pi, k, 0))
            .add(&kernel_triple(phi_c, r_c, phi_s, k, 0).scale(2.0))
            .add(&kernel_triple(phi_c, r_s, phi_c, k, 0).scale(2.0))
            .add(&kernel_triple(phi_c, r_s, phi_s, k, 0).scale(2.0 * eps))
            .add(&kernel_triple(phi_s, &rho, &pi, k, 0).scale(2.0))
            .add(&kernel_triple(&pi, &rho, &rho, k, 0))
            .scale(-1.0);

        Self { l2, n2, l1, n1 }
    }

    /// `-eps^3 L_2 - eps^4 (N_2 + L_1) + eps^5 N_1`.
    #[cfg(test)]
    fn combined(&self, eps: f64) -> SpectralField {
        let e3 = eps * eps * eps;
        self.l2
            .scale(-e3)
            .sub(&self.n2.add(&self.l1).scale(e3 * eps))
            .add(&self.n1.scale(e3 * eps * eps))
    }
}

/// Compare centered time differences of `R_c`, `R_s` along a computed
/// trajectory against the assembled right-hand sides of the split error
/// equations; returns the larger `C^0` defect of the two equations.
///
/// Needs three consecutive snapshots bracketing `t` with uniform spacing, so
/// the defect scales with the snapshot spacing squared plus the spectral
/// floor.
pub fn error_equation_check(
    u_traj: &SHTrajectory,
    gl_traj: &GLTrajectory,
    ansatz: &Ansatz,
    t: f64,
) -> Result<f64> {
    let idx = u_traj.index_at(t)?;
    if idx == 0 || idx + 1 >= u_traj.times.len() {
        return Err(Error::MissingSnapshot(t));
    }
    let dt_minus = u_traj.times[idx] - u_traj.times[idx - 1];
    let dt_plus = u_traj.times[idx + 1] - u_traj.times[idx];
    if (dt_plus - dt_minus).abs() > 1e-9 * dt_plus.max(1.0) {
        return Err(Error::Config("snapshots are not uniformly spaced".into()));
    }

    let eps = ansatz.eps();
    let mut components = Vec::with_capacity(3);
    for offset in [-1i64, 0, 1] {
        let k = (idx as i64 + offset) as usize;
        let a = &gl_traj.fields[gl_traj.index_at(eps * eps * u_traj.times[k])?];
        let (phi, phi_c, phi_s) = ansatz.phi(a)?;
        let ec = ansatz.error_components(&u_traj.fields[k], &phi)?;
        components.push((ec, phi_c, phi_s, a.clone()));
    }

    let (center, phi_c, phi_s, a_center) = &components[1];
    let report = ansatz.residual(a_center, t)?;
    let (rhs_c, rhs_s) =
        ansatz.error_equation_rhs(&center.r_c, &center.r_s, phi_c, phi_s, &report)?;

    let scale = 1.0 / (2.0 * dt_plus);
    let dot_rc = components[2].0.r_c.sub(&components[0].0.r_c).scale(scale);
    let dot_rs = components[2].0.r_s.sub(&components[0].0.r_s).scale(scale);

    let defect_c = dot_rc.sub(&rhs_c).c_norm(0)?;
    let defect_s = dot_rs.sub(&rhs_s).c_norm(0)?;
    Ok(defect_c.max(defect_s))
}

/// Measured `C^1` gaps of the slow-scale convolution approximation.
///
/// Quadratic: `|| B_1(eps.) (Q e^{in.}) * B_2(eps.) - q_n (B_1 B_2)(eps.) ||`.
/// Cubic: the same with the product `B_2 B_3` and `k_n (B_1 B_2 B_3)`.
/// A Dirac kernel makes both convolutions pointwise, so the gaps sit at the
/// spectral floor; smooth kernels lose exactly one power of `eps`.
pub fn convolution_approx_gap(
    b1: &SpectralField,
    b2: &SpectralField,
    b3: &SpectralField,
    kernel: &KernelMeasure,
    n: i64,
    fast: TorusGrid,
) -> Result<(f64, f64)> {
    let x1 = slow_to_fast(b1, fast)?;
    let x2 = slow_to_fast(b2, fast)?;
    let x3 = slow_to_fast(b3, fast)?;
    let coeff = kernel.fourier_symbol(n as f64);

    let quad = kernel_pair(&x1, &x2, kernel, n).sub(&product(&x1, &x2).scale(coeff));
    let cubic =
        kernel_triple(&x1, &x2, &x3, kernel, n).sub(&triple_product(&x1, &x2, &x3).scale(coeff));
    Ok((quad.c_norm(1)?, cubic.c_norm(1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glsolver::{correctors, gl_rhs};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn grids(m: usize) -> (TorusGrid, TorusGrid) {
        let fast = TorusGrid::with_default_resolution(m).unwrap();
        let slow = TorusGrid::new(2, fast.len()).unwrap();
        (slow, fast)
    }

    fn test_ansatz(m: usize, q: KernelMeasure, k: KernelMeasure) -> Ansatz {
        let (slow, fast) = grids(m);
        Ansatz::new(slow, fast, q, k).unwrap()
    }

    /// Band-limited amplitude with modes `|j| <= 2` on the slow grid.
    fn bump_amplitude(slow: TorusGrid, scale: f64) -> SpectralField {
        let mut coeffs = vec![Complex64::default(); slow.len()];
        coeffs[slow.bin_of_freq(0).unwrap()] = Complex64::new(0.8 * scale, 0.0);
        coeffs[slow.bin_of_freq(1).unwrap()] = Complex64::new(0.25 * scale, 0.1 * scale);
        coeffs[slow.bin_of_freq(-1).unwrap()] = Complex64::new(0.2 * scale, -0.15 * scale);
        coeffs[slow.bin_of_freq(2).unwrap()] = Complex64::new(-0.1 * scale, 0.05 * scale);
        coeffs[slow.bin_of_freq(-2).unwrap()] = Complex64::new(0.12 * scale, 0.06 * scale);
        SpectralField::from_fourier(slow, &coeffs).unwrap()
    }

    #[test]
    fn psi_examples() {
        let (slow, fast) = grids(20);
        let eps = 0.1;

        let zero = SpectralField::zeros(slow);
        assert_eq!(build_psi(&zero, eps, fast).unwrap().sup_norm(), 0.0);

        let one = SpectralField::from_real_fn(slow, |_| 1.0);
        let psi = build_psi(&one, eps, fast).unwrap();
        let expected = SpectralField::from_real_fn(fast, |x| 2.0 * eps * x.cos());
        assert!(psi.sub(&expected).sup_norm() < 1e-12);

        let i_amp = SpectralField::from_fn(slow, |_| Complex64::new(0.0, 1.0));
        let psi = build_psi(&i_amp, eps, fast).unwrap();
        let expected = SpectralField::from_real_fn(fast, |x| -2.0 * eps * x.sin());
        assert!(psi.sub(&expected).sup_norm() < 1e-12);
    }

    #[test]
    fn phi_reduces_to_psi_for_band_limited_amplitude() {
        let ansatz = test_ansatz(20, KernelMeasure::zero(), KernelMeasure::dirac(1.0));
        let a = bump_amplitude(ansatz.slow_grid(), 1.0);
        let (phi, phi_c, phi_s) = ansatz.phi(&a).unwrap();
        // q_1 = 0: no correctors at all
        assert!(phi_s.sup_norm() < 1e-14);
        let psi = ansatz.psi(&a).unwrap();
        assert!(phi_c.scale(ansatz.eps()).sub(&psi).sup_norm() < 1e-10);
        assert!(phi.sub(&psi).sup_norm() < 1e-10);
    }

    #[test]
    fn phi_correctors_present_for_quadratic_kernel() {
        let ansatz = test_ansatz(
            20,
            KernelMeasure::gaussian(1.0, 1.0).unwrap(),
            KernelMeasure::dirac(1.0),
        );
        let a = bump_amplitude(ansatz.slow_grid(), 1.0);
        let (phi, phi_c, phi_s) = ansatz.phi(&a).unwrap();
        assert!(phi_s.sup_norm() > 0.1);
        let eps = ansatz.eps();
        let recomposed = phi_c.scale(eps).add(&phi_s.scale(eps * eps));
        assert!(phi.sub(&recomposed).sup_norm() < 1e-14);
        assert!(phi.reality_defect() < 1e-12);
    }

    #[test]
    fn zero_amplitude_gives_zero_residual() {
        let ansatz = test_ansatz(
            20,
            KernelMeasure::gaussian(1.0, 1.0).unwrap(),
            KernelMeasure::dirac(1.0),
        );
        let zero = SpectralField::zeros(ansatz.slow_grid());
        let report = ansatz.residual(&zero, 0.0).unwrap();
        assert_eq!(report.norms.full.c1, 0.0);
        let (dc, ds) = split_forcings(&report, ansatz.eps());
        assert_eq!(dc.sup_norm(), 0.0);
        assert_eq!(ds.sup_norm(), 0.0);
    }

    #[test]
    fn prefactor_reconstruction_improves_one_order() {
        // the remainder after subtracting the harmonic decomposition must
        // shrink like eps^4, one order beyond the eps^3 residual itself
        let mk = |m: usize| {
            let ansatz = test_ansatz(
                m,
                KernelMeasure::gaussian(0.7, 1.0).unwrap(),
                KernelMeasure::gaussian(1.0, 0.8).unwrap(),
            );
            let a = bump_amplitude(ansatz.slow_grid(), 0.8);
            let report = ansatz.residual(&a, 0.0).unwrap();
            (ansatz.eps(), report)
        };
        let (eps_a, rep_a) = mk(20);
        let (eps_b, rep_b) = mk(40);
        assert_eq!(eps_a / eps_b, 2.0);
        let order_full = (rep_a.norms.full.c1 / rep_b.norms.full.c1).log2();
        let order_rem = (rep_a.norms.remainder.c1 / rep_b.norms.remainder.c1).log2();
        assert!(
            (2.5..3.8).contains(&order_full),
            "residual order {order_full}"
        );
        assert!(order_rem >= 3.5, "remainder order {order_rem}");
        // the remainder is a shrinking fraction of the residual
        let frac_a = rep_a.norms.remainder.c1 / rep_a.norms.full.c1;
        let frac_b = rep_b.norms.remainder.c1 / rep_b.norms.full.c1;
        assert!(
            frac_b < 0.2 && frac_b < frac_a,
            "fractions {frac_a} -> {frac_b}"
        );
    }

    #[test]
    fn prefactors_have_slow_support_and_conjugate_pairing() {
        let ansatz = test_ansatz(
            20,
            KernelMeasure::gaussian(0.7, 1.0).unwrap(),
            KernelMeasure::gaussian(1.0, 0.8).unwrap(),
        );
        let a = bump_amplitude(ansatz.slow_grid(), 0.8);
        let report = ansatz.residual(&a, 0.0).unwrap();
        let eta = ansatz.fast_grid().spacing();
        for (ell, pf) in report.prefactors.iter().enumerate() {
            let outside = pf.spectral_mass_outside(0.75 + eta);
            let total = pf.energy().max(1e-300);
            assert!(
                outside / total <= 1e-12,
                "a_{ell} leaks outside the slow band"
            );
        }

        // a_{-1} assembled from the mirrored formula equals conj(a_1)
        let eps = ansatz.eps();
        let (q, k) = (ansatz.kernels().0.clone(), ansatz.kernels().1.clone());
        let dta = gl_rhs(&a, ansatz.gamma()).unwrap();
        let pair = correctors(&a, ansatz.q1());
        let fast = ansatz.fast_grid();
        let chi_0 = make_cutoff(CutoffKind::Chi0, fast);
        let e0 = |f: &SpectralField| apply_filter(&slow_to_fast(f, fast).unwrap(), &chi_0).unwrap();
        let (ea, ea0, ea2, eda) = (e0(&a), e0(&pair.a0), e0(&pair.a2), e0(&dta));
        let (eac, ea2c, edac) = (ea.conj(), ea2.conj(), eda.conj());
        let e3 = eps * eps * eps;
        let minus_one = edac
            .scale(-1.0)
            .add(&eac.derivative(2).unwrap().scale(4.0 / (eps * eps)))
            .add(&eac)
            .sub(&kernel_pair(&ea, &ea2c, &q, 2))
            .sub(&kernel_pair(&ea2c, &ea, &q, -1))
            .sub(&kernel_pair(&eac, &ea0, &q, 0))
            .sub(&kernel_pair(&ea0, &eac, &q, 1))
            .sub(&kernel_triple(&eac, &eac, &ea, &k, 0).scale(2.0))
            .sub(&kernel_triple(&ea, &eac, &eac, &k, 2))
            .scale(e3);
        // compare within the prefactors' slow band; outside it both sides
        // carry only transform round-off amplified by the derivative factors
        let band = |f: &SpectralField| {
            f.map_spectrum(|kappa| Complex64::new(if kappa.abs() <= 0.8 { 1.0 } else { 0.0 }, 0.0))
        };
        let defect = band(&minus_one.sub(&report.prefactors[1].conj())).sup_norm();
        let scale = report.prefactors[1].sup_norm().max(1e-300);
        assert!(
            defect / scale <= 1e-12,
            "conjugate pairing defect {}",
            defect / scale
        );
    }

    #[test]
    fn error_components_examples() {
        let ansatz = test_ansatz(
            20,
            KernelMeasure::gaussian(1.0, 1.0).unwrap(),
            KernelMeasure::dirac(1.0),
        );
        let a = bump_amplitude(ansatz.slow_grid(), 0.8);
        let (phi, _, _) = ansatz.phi(&a).unwrap();
        let eps = ansatz.eps();

        let ec = ansatz.error_components(&phi, &phi).unwrap();
        assert_eq!(ec.r_norms[4], 0.0);
        assert_eq!(ec.r_c_norms[4], 0.0);

        // a pure critical perturbation of size eps^2 appears in R_c alone
        let bump = SpectralField::from_real_fn(ansatz.fast_grid(), |x| 2.0 * x.cos());
        let u = phi.add(&bump.scale(eps * eps));
        let ec = ansatz.error_components(&u, &phi).unwrap();
        assert!(ec.r_c.sub(&bump).sup_norm() < 1e-10);
        assert!(ec.r_s.sup_norm() < 1e-10);

        // exact reconstruction: eps^2 R_c + eps^3 R_s = R
        let u = phi.add(&SpectralField::from_real_fn(ansatz.fast_grid(), |x| {
            0.01 * (1.3 * x).cos() + 0.02 * (0.2 * x).sin()
        }));
        let ec = ansatz.error_components(&u, &phi).unwrap();
        let rebuilt = ec.r_c.scale(eps * eps).add(&ec.r_s.scale(eps * eps * eps));
        assert!(rebuilt.sub(&ec.r).sup_norm() <= 1e-12 * ec.r.sup_norm().max(1e-300));
    }

    #[test]
    fn operator_decomposition_matches_direct_nonlinearity_difference() {
        let ansatz = test_ansatz(
            20,
            KernelMeasure::gaussian(0.8, 1.0).unwrap(),
            KernelMeasure::gaussian(1.2, 0.7).unwrap(),
        );
        let (q, k) = (ansatz.kernels().0.clone(), ansatz.kernels().1.clone());
        let fast = ansatz.fast_grid();
        let eps = ansatz.eps();
        let a = bump_amplitude(ansatz.slow_grid(), 0.8);
        let (phi, phi_c, phi_s) = ansatz.phi(&a).unwrap();

        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut noise = vec![Complex64::default(); fast.len()];
        for f in -40i64..=40 {
            let bin = fast.bin_of_freq(f).unwrap();
            noise[bin] = Complex64::new(rng.gen_range(-0.01..0.01), rng.gen_range(-0.01..0.01));
        }
        let r = {
            let raw = SpectralField::from_fourier(fast, &noise).unwrap();
            raw.add(&raw.conj()).scale(0.5)
        };
        let ec = ansatz.error_components(&phi.add(&r), &phi).unwrap();

        let ops = ErrorOperators::assemble(&ansatz, &ec.r_c, &ec.r_s, &phi_c, &phi_s);
        let combined = ops.combined(eps);
        let direct = crate::shsolver::nonlinearity(&phi.add(&r), &q, &k)
            .unwrap()
            .sub(&crate::shsolver::nonlinearity(&phi, &q, &k).unwrap());
        let defect = combined.sub(&direct).sup_norm();
        assert!(defect <= 1e-13, "decomposition defect {defect}");
    }

    #[test]
    fn convolution_gap_examples() {
        let (slow, fast) = grids(20);
        let b1 = bump_amplitude(slow, 1.0);
        let b2 = bump_amplitude(slow, 0.7).conj();
        let b3 = bump_amplitude(slow, 0.5);

        // Dirac kernel: convolution is pointwise, gaps at the floor
        let delta = KernelMeasure::dirac(1.3);
        let (quad, cubic) = convolution_approx_gap(&b1, &b2, &b3, &delta, -1, fast).unwrap();
        assert!(quad <= 1e-11, "quad gap {quad}");
        assert!(cubic <= 1e-11, "cubic gap {cubic}");

        // constant B_2: the difference under the integral vanishes
        let gauss = KernelMeasure::gaussian(1.0, 1.0).unwrap();
        let ones = SpectralField::from_real_fn(slow, |_| 1.0);
        let (quad, _) = convolution_approx_gap(&b1, &ones, &b3, &gauss, -1, fast).unwrap();
        assert!(quad <= 1e-11, "quad gap for constant factor {quad}");

        // smooth kernel: gap shrinks by one order per eps halving
        let (slow2, fast2) = grids(40);
        let g1 = bump_amplitude(slow2, 1.0);
        let g2 = bump_amplitude(slow2, 0.7).conj();
        let g3 = bump_amplitude(slow2, 0.5);
        let (qa, ca) = convolution_approx_gap(&b1, &b2, &b3, &gauss, -1, fast).unwrap();
        let (qb, cb) = convolution_approx_gap(&g1, &g2, &g3, &gauss, -1, fast2).unwrap();
        let quad_order = (qa / qb).log2();
        let cubic_order = (ca / cb).log2();
        assert!((0.7..1.5).contains(&quad_order), "quad order {quad_order}");
        assert!(
            (0.7..1.5).contains(&cubic_order),
            "cubic order {cubic_order}"
        );
    }
}
