//! Fields on a periodic grid with FFT-backed spectral operations.

use num_complex::Complex64;

use super::fft;
use super::grid::TorusGrid;
use crate::kernel::KernelMeasure;
use crate::{Error, Result};

/// A field sampled on a [`TorusGrid`]; real-valued fields simply carry zero
/// imaginary parts. Value-semantic and immutable through the public API.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    grid: TorusGrid,
    samples: Vec<Complex64>,
}

impl SpectralField {
    pub fn zeros(grid: TorusGrid) -> Self {
        Self {
            grid,
            samples: vec![Complex64::default(); grid.len()],
        }
    }

    pub fn from_samples(grid: TorusGrid, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::GridMismatch {
                a: grid.len(),
                b: samples.len(),
            });
        }
        Ok(Self { grid, samples })
    }

    pub fn from_real_samples(grid: TorusGrid, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::GridMismatch {
                a: grid.len(),
                b: samples.len(),
            });
        }
        let samples = samples
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();
        Ok(Self { grid, samples })
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let samples = (0..grid.len()).map(|j| f(grid.point(j))).collect();
        Self { grid, samples }
    }

    pub fn from_real_fn(grid: TorusGrid, f: impl Fn(f64) -> f64) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    /// The pure mode `e^{i ell x}` (integer `ell`).
    pub fn harmonic(grid: TorusGrid, ell: i64) -> Self {
        Self::from_fn(grid, |x| Complex64::from_polar(1.0, ell as f64 * x))
    }

    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Forward transform; coefficients in FFT bin order.
    pub fn to_fourier(&self) -> Vec<Complex64> {
        fft::forward(&self.samples)
    }

    /// Inverse of [`to_fourier`](Self::to_fourier).
    pub fn from_fourier(grid: TorusGrid, coeffs: &[Complex64]) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::GridMismatch {
                a: grid.len(),
                b: coeffs.len(),
            });
        }
        Ok(Self {
            grid,
            samples: fft::inverse(coeffs),
        })
    }

    /// Apply a Fourier multiplier `mult(kappa)`.
    pub fn map_spectrum(&self, mult: impl Fn(f64) -> Complex64) -> Self {
        let mut coeffs = self.to_fourier();
        for (bin, c) in coeffs.iter_mut().enumerate() {
            *c *= mult(self.grid.wavenumber(bin));
        }
        Self {
            grid: self.grid,
            samples: fft::inverse(&coeffs),
        }
    }

    /// Spectral derivative of the given order (multiplier `(i kappa)^order`).
    ///
    /// The unpaired Nyquist bin is zeroed for odd orders so that real fields
    /// stay real.
    pub fn derivative(&self, order: usize) -> Result<Self> {
        if order > 8 {
            return Err(Error::OrderOutOfRange(order));
        }
        if order == 0 {
            return Ok(self.clone());
        }
        let mut coeffs = self.to_fourier();
        let nyquist = self.grid.len() / 2;
        for (bin, c) in coeffs.iter_mut().enumerate() {
            if bin == nyquist && order % 2 == 1 {
                *c = Complex64::default();
                continue;
            }
            let ik = Complex64::new(0.0, self.grid.wavenumber(bin));
            *c *= ik.powu(order as u32);
        }
        Ok(Self {
            grid: self.grid,
            samples: fft::inverse(&coeffs),
        })
    }

    /// Multiply by `e^{i ell x}`: shifts every frequency by `ell * M` bins.
    /// Content pushed past the resolved band is dropped.
    pub fn modulate(&self, ell: i64) -> Self {
        let coeffs = self.to_fourier();
        let mut shifted = vec![Complex64::default(); coeffs.len()];
        let df = ell * self.grid.domain_factor() as i64;
        for (bin, &c) in coeffs.iter().enumerate() {
            if let Some(tgt) = self.grid.bin_of_freq(self.grid.freq(bin) + df) {
                shifted[tgt] = c;
            }
        }
        Self {
            grid: self.grid,
            samples: fft::inverse(&shifted),
        }
    }

    /// Complex conjugate field.
    pub fn conj(&self) -> Self {
        Self {
            grid: self.grid,
            samples: self.samples.iter().map(|c| c.conj()).collect(),
        }
    }

    /// Drop imaginary parts (reality projection after round-off).
    pub fn re(&self) -> Self {
        Self {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .map(|c| Complex64::new(c.re, 0.0))
                .collect(),
        }
    }

    /// `2 Re(self)`, i.e. `self + conj(self)`.
    pub fn twice_re(&self) -> Self {
        Self {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .map(|c| Complex64::new(2.0 * c.re, 0.0))
                .collect(),
        }
    }

    pub fn scale(&self, a: f64) -> Self {
        Self {
            grid: self.grid,
            samples: self.samples.iter().map(|c| c * a).collect(),
        }
    }

    pub fn scale_c(&self, a: Complex64) -> Self {
        Self {
            grid: self.grid,
            samples: self.samples.iter().map(|c| c * a).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.grid, other.grid, "field arithmetic across grids");
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            grid: self.grid,
            samples,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.grid, other.grid, "field arithmetic across grids");
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            grid: self.grid,
            samples,
        }
    }

    /// Pointwise product of the sample values (exact only when the combined
    /// bandwidth is resolved; use [`product`] when it is not).
    pub fn mul_pointwise(&self, other: &Self) -> Self {
        assert_eq!(self.grid, other.grid, "field arithmetic across grids");
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b)
            .collect();
        Self {
            grid: self.grid,
            samples,
        }
    }

    pub fn sup_norm(&self) -> f64 {
        self.samples.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Discrete `C^m` norm: max over derivative orders `0..=m` of the grid
    /// sup-norm, computed by spectral differentiation.
    pub fn c_norm(&self, m: usize) -> Result<f64> {
        if m > 4 {
            return Err(Error::OrderOutOfRange(m));
        }
        let mut best = 0.0f64;
        for order in 0..=m {
            best = best.max(self.derivative(order)?.sup_norm());
        }
        Ok(best)
    }

    /// Total spectral energy `sum_f |c_f|^2`.
    pub fn energy(&self) -> f64 {
        self.to_fourier().iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest coefficient modulus outside `|kappa| <= cut`.
    pub fn spectral_mass_outside(&self, cut: f64) -> f64 {
        self.to_fourier()
            .iter()
            .enumerate()
            .filter(|(bin, _)| self.grid.wavenumber(*bin).abs() > cut)
            .map(|(_, c)| c.norm_sqr())
            .sum()
    }

    /// Max deviation from conjugate symmetry of the coefficients, relative to
    /// the largest coefficient.
    pub fn reality_defect(&self) -> f64 {
        let coeffs = self.to_fourier();
        let peak = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if peak == 0.0 {
            return 0.0;
        }
        let mut worst = 0.0f64;
        for bin in 0..coeffs.len() {
            let f = self.grid.freq(bin);
            if let Some(mirror) = self.grid.bin_of_freq(-f) {
                worst = worst.max((coeffs[bin] - coeffs[mirror].conj()).norm());
            }
        }
        worst / peak
    }
}

/// Zero-pad coefficients (bin order) from `n` to `factor * n` bins.
fn pad_coeffs(grid: TorusGrid, coeffs: &[Complex64], factor: usize) -> Vec<Complex64> {
    let n = coeffs.len();
    let fine = factor * n;
    let mut out = vec![Complex64::default(); fine];
    for (bin, &c) in coeffs.iter().enumerate() {
        let f = grid.freq(bin);
        let tgt = if f >= 0 {
            f as usize
        } else {
            (f + fine as i64) as usize
        };
        out[tgt] = c;
    }
    out
}

/// Keep only the frequencies resolved by the coarse grid.
fn truncate_coeffs(fine: &[Complex64], n: usize) -> Vec<Complex64> {
    let fine_n = fine.len();
    let half = n / 2;
    let mut out = vec![Complex64::default(); n];
    for f in -(half as i64)..(half as i64) {
        let src = if f >= 0 {
            f as usize
        } else {
            (f + fine_n as i64) as usize
        };
        let dst = if f >= 0 {
            f as usize
        } else {
            (f + n as i64) as usize
        };
        out[dst] = fine[src];
    }
    out
}

/// Samples of the field on the doubled (dealiasing) grid.
fn fine_samples(field: &SpectralField) -> Vec<Complex64> {
    fft::inverse(&pad_coeffs(field.grid(), &field.to_fourier(), 2))
}

/// Back from fine-grid samples to a coarse field, discarding unresolved modes.
fn project_fine(grid: TorusGrid, fine: &[Complex64]) -> SpectralField {
    let coeffs = truncate_coeffs(&fft::forward(fine), grid.len());
    SpectralField::from_fourier(grid, &coeffs).expect("sizes are consistent")
}

/// Galerkin product `P_N[x y]`: formed on the doubled grid, so the retained
/// modes are alias-free.
pub fn product(x: &SpectralField, y: &SpectralField) -> SpectralField {
    assert_eq!(x.grid(), y.grid(), "product across grids");
    let (fx, fy) = (fine_samples(x), fine_samples(y));
    let fine: Vec<Complex64> = fx.iter().zip(&fy).map(|(a, b)| a * b).collect();
    project_fine(x.grid(), &fine)
}

/// Galerkin triple product `P_N[x y z]`; the doubled grid keeps all retained
/// modes alias-free even for the cubic.
pub fn triple_product(x: &SpectralField, y: &SpectralField, z: &SpectralField) -> SpectralField {
    assert_eq!(x.grid(), y.grid(), "product across grids");
    assert_eq!(x.grid(), z.grid(), "product across grids");
    let (fx, fy, fz) = (fine_samples(x), fine_samples(y), fine_samples(z));
    let fine: Vec<Complex64> = fx
        .iter()
        .zip(&fy)
        .zip(&fz)
        .map(|((a, b), c)| a * b * c)
        .collect();
    project_fine(x.grid(), &fine)
}

fn apply_kernel_multiplier(
    grid_m: usize,
    fine_coeffs: &mut [Complex64],
    kernel: &KernelMeasure,
    n: i64,
) {
    let fine_n = fine_coeffs.len();
    let half = (fine_n / 2) as i64;
    for (bin, c) in fine_coeffs.iter_mut().enumerate() {
        let f = if (bin as i64) < half {
            bin as i64
        } else {
            bin as i64 - fine_n as i64
        };
        let kappa = f as f64 / grid_m as f64;
        *c *= kernel.fourier_symbol(kappa - n as f64);
    }
}

/// Convolution `Q * u` as the Fourier multiplier `qhat(kappa)`.
pub fn kernel_convolve(field: &SpectralField, kernel: &KernelMeasure) -> SpectralField {
    modulated_kernel_convolve(field, kernel, 0)
}

/// Modulated convolution `(Q e^{i n .}) * u`, i.e. multiplier
/// `qhat(kappa - n)`.
pub fn modulated_kernel_convolve(
    field: &SpectralField,
    kernel: &KernelMeasure,
    n: i64,
) -> SpectralField {
    field.map_spectrum(|kappa| Complex64::new(kernel.fourier_symbol(kappa - n as f64), 0.0))
}

/// Dealiased `P_N[ x * ((Q e^{i n .}) * y) ]`.
pub fn kernel_pair(
    x: &SpectralField,
    y: &SpectralField,
    kernel: &KernelMeasure,
    n: i64,
) -> SpectralField {
    assert_eq!(x.grid(), y.grid(), "product across grids");
    let grid = x.grid();
    let fx = fine_samples(x);
    let mut cy = pad_coeffs(grid, &y.to_fourier(), 2);
    apply_kernel_multiplier(grid.domain_factor(), &mut cy, kernel, n);
    let fy = fft::inverse(&cy);
    let fine: Vec<Complex64> = fx.iter().zip(&fy).map(|(a, b)| a * b).collect();
    project_fine(grid, &fine)
}

/// Dealiased `P_N[ x * ((K e^{i n .}) * (y z)) ]`; the inner product is kept
/// at full bandwidth on the doubled grid before the multiplier is applied.
pub fn kernel_triple(
    x: &SpectralField,
    y: &SpectralField,
    z: &SpectralField,
    kernel: &KernelMeasure,
    n: i64,
) -> SpectralField {
    assert_eq!(x.grid(), y.grid(), "product across grids");
    assert_eq!(x.grid(), z.grid(), "product across grids");
    let grid = x.grid();
    let fx = fine_samples(x);
    let fy = fine_samples(y);
    let fz = fine_samples(z);
    let inner: Vec<Complex64> = fy.iter().zip(&fz).map(|(a, b)| a * b).collect();
    let mut ci = fft::forward(&inner);
    apply_kernel_multiplier(grid.domain_factor(), &mut ci, kernel, n);
    let conv = fft::inverse(&ci);
    let fine: Vec<Complex64> = fx.iter().zip(&conv).map(|(a, b)| a * b).collect();
    project_fine(grid, &fine)
}

/// Kernel symbol sampled on the doubled grid's wavenumbers (bin order).
pub(crate) fn fine_multiplier(grid: TorusGrid, kernel: &KernelMeasure, n: i64) -> Vec<f64> {
    let fine_n = 2 * grid.len();
    let half = (fine_n / 2) as i64;
    (0..fine_n)
        .map(|bin| {
            let f = if (bin as i64) < half {
                bin as i64
            } else {
                bin as i64 - fine_n as i64
            };
            kernel.fourier_symbol(f as f64 / grid.domain_factor() as f64 - n as f64)
        })
        .collect()
}

/// Fused dealiased evaluation of `-u (Q*u) - u (K*u^2)` on Fourier
/// coefficients of a real field; the result is projected back to real before
/// transforming, so conjugate symmetry is preserved exactly.
pub(crate) fn sh_nonlin_hat(
    grid: TorusGrid,
    u_hat: &[Complex64],
    q_fine: &[f64],
    k_fine: &[f64],
) -> Vec<Complex64> {
    let cu = pad_coeffs(grid, u_hat, 2);
    let u = fft::inverse(&cu);
    let qv = {
        let scaled: Vec<Complex64> = cu.iter().zip(q_fine).map(|(c, &m)| c * m).collect();
        fft::inverse(&scaled)
    };
    let squares: Vec<Complex64> = u.iter().map(|a| a * a).collect();
    let mut sq_hat = fft::forward(&squares);
    for (c, &m) in sq_hat.iter_mut().zip(k_fine) {
        *c *= m;
    }
    let kw = fft::inverse(&sq_hat);
    let fine: Vec<Complex64> = (0..u.len())
        .map(|j| Complex64::new(-(u[j] * qv[j] + u[j] * kw[j]).re, 0.0))
        .collect();
    truncate_coeffs(&fft::forward(&fine), grid.len())
}

/// Dealiased evaluation of `-gamma |a|^2 a` on Fourier coefficients of a
/// complex field.
pub(crate) fn gl_nonlin_hat(grid: TorusGrid, a_hat: &[Complex64], gamma: f64) -> Vec<Complex64> {
    let ca = pad_coeffs(grid, a_hat, 2);
    let a = fft::inverse(&ca);
    let fine: Vec<Complex64> = a.iter().map(|v| -gamma * v * v.norm_sqr()).collect();
    truncate_coeffs(&fft::forward(&fine), grid.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn grid() -> TorusGrid {
        TorusGrid::new(16, 256).unwrap()
    }

    #[test]
    fn pure_mode_has_single_coefficient() {
        let f = SpectralField::harmonic(grid(), 1);
        let coeffs = f.to_fourier();
        let bin = grid().bin_of_freq(16).unwrap();
        assert!((coeffs[bin] - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        let stray: f64 = coeffs
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != bin)
            .map(|(_, c)| c.norm())
            .sum();
        assert!(stray < 1e-12);
    }

    #[test]
    fn constant_field_is_zero_mode() {
        let f = SpectralField::from_real_fn(grid(), |_| 1.0);
        let coeffs = f.to_fourier();
        assert!((coeffs[0] - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        assert!(coeffs[1..].iter().map(|c| c.norm()).fold(0.0, f64::max) < 1e-13);
    }

    #[test]
    fn derivative_examples() {
        let g = grid();
        let e1 = SpectralField::harmonic(g, 1);
        let d2 = e1.derivative(2).unwrap();
        let diff = d2.add(&e1).sup_norm();
        assert!(
            diff < 1e-12,
            "d^2 e^{{ix}} should be -e^{{ix}}, defect {diff}"
        );

        let c = SpectralField::from_real_fn(g, |_| 3.5);
        assert!(c.derivative(3).unwrap().sup_norm() < 1e-12);

        // sin(3x/M) differentiates to (3/M) cos(3x/M)
        let m = g.domain_factor() as f64;
        let s = SpectralField::from_real_fn(g, |x| (3.0 * x / m).sin());
        let ds = s.derivative(1).unwrap();
        let expected = SpectralField::from_real_fn(g, |x| 3.0 / m * (3.0 * x / m).cos());
        assert!(ds.sub(&expected).sup_norm() < 1e-10);

        assert!(s.derivative(9).is_err());
    }

    #[test]
    fn kernel_convolve_examples() {
        let g = grid();
        let e1 = SpectralField::harmonic(g, 1);
        let delta = KernelMeasure::dirac(1.0);
        assert!(kernel_convolve(&e1, &delta).sub(&e1).sup_norm() < 1e-12);

        let gauss = KernelMeasure::gaussian(1.0, 1.0).unwrap();
        let out = kernel_convolve(&e1, &gauss);
        let expected = e1.scale(0.6065306597126334);
        assert!(out.sub(&expected).sup_norm() < 1e-12);

        let c = SpectralField::from_real_fn(g, |_| 2.5);
        let out = kernel_convolve(&c, &gauss);
        assert!((out.sup_norm() - 2.5).abs() < 1e-12); // qhat(0) = 1
        assert!(out.reality_defect() < 1e-13);
    }

    #[test]
    fn modulated_convolve_shifts_symbol() {
        let g = grid();
        let gauss = KernelMeasure::gaussian(1.0, 1.0).unwrap();
        let e1 = SpectralField::harmonic(g, 1);
        // multiplier at kappa = 1 with n = 1 is qhat(0) = 1
        let out = modulated_kernel_convolve(&e1, &gauss, 1);
        assert!(out.sub(&e1).sup_norm() < 1e-12);
        // with n = -1 it is qhat(2)
        let out = modulated_kernel_convolve(&e1, &gauss, -1);
        assert!(out.sub(&e1.scale(0.1353352832366127)).sup_norm() < 1e-11);
    }

    #[test]
    fn modulated_convolve_matches_translation_oracle() {
        // for atoms at grid-commensurate positions the twisted convolution
        // has the exact physical-space form
        //   ((Q e^{in.}) * u)(x_j) = sum_a w_a e^{i n x_a} u(x_j - x_a),
        // an independent route through sample translations
        let g = grid();
        let spacing = g.length() / g.len() as f64;
        let shifts: [(i64, f64); 3] = [(8, 0.4), (-8, 0.4), (0, 0.3)];
        let atoms: Vec<(f64, f64)> = shifts
            .iter()
            .map(|&(s, w)| (s as f64 * spacing, w))
            .collect();
        let kernel = KernelMeasure::new(atoms, None).unwrap();

        let u = random_field(g, 21);
        for n in [-2i64, 0, 1] {
            let via_multiplier = modulated_kernel_convolve(&u, &kernel, n);
            let mut oracle = vec![Complex64::default(); g.len()];
            for &(shift, w) in &shifts {
                let phase = Complex64::from_polar(w, n as f64 * shift as f64 * spacing);
                for (j, slot) in oracle.iter_mut().enumerate() {
                    let src = (j as i64 - shift).rem_euclid(g.len() as i64) as usize;
                    *slot += phase * u.samples()[src];
                }
            }
            let oracle = SpectralField::from_samples(g, oracle).unwrap();
            let defect = via_multiplier.sub(&oracle).sup_norm();
            assert!(defect < 1e-12, "n = {n}: defect {defect}");
        }
    }

    #[test]
    fn c_norm_examples() {
        let g = grid();
        assert_eq!(SpectralField::zeros(g).c_norm(4).unwrap(), 0.0);
        let e1 = SpectralField::harmonic(g, 1);
        assert!((e1.c_norm(4).unwrap() - 1.0).abs() < 1e-10);
        let s2 = SpectralField::from_real_fn(g, |x| (2.0 * x).sin());
        assert!((s2.c_norm(2).unwrap() - 4.0).abs() < 1e-10);
        assert!(s2.c_norm(5).is_err());
    }

    #[test]
    fn dealiased_product_matches_pointwise_for_low_bands() {
        let g = grid();
        let a = SpectralField::from_real_fn(g, |x| (x / 16.0).cos() + 0.3 * (2.0 * x / 16.0).sin());
        let b = SpectralField::from_real_fn(g, |x| 0.7 + (3.0 * x / 16.0).cos());
        let p = product(&a, &b);
        let q = a.mul_pointwise(&b);
        assert!(p.sub(&q).sup_norm() < 1e-12);

        let t = triple_product(&a, &a, &b);
        let u = a.mul_pointwise(&a).mul_pointwise(&b);
        assert!(t.sub(&u).sup_norm() < 1e-12);
    }

    #[test]
    fn modulate_shifts_bins() {
        let g = grid();
        let a = SpectralField::from_real_fn(g, |x| (x / 16.0).cos());
        let shifted = a.modulate(2);
        let direct = a.mul_pointwise(&SpectralField::harmonic(g, 2));
        assert!(shifted.sub(&direct).sup_norm() < 1e-12);
    }

    fn random_field(g: TorusGrid, seed: u64) -> SpectralField {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        SpectralField::from_real_samples(
            g,
            (0..g.len()).map(|_| rng.gen_range(-1.0..1.0)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn round_trip_and_parseval_on_random_field() {
        let g = grid();
        let f = random_field(g, 7);
        let coeffs = f.to_fourier();
        let back = SpectralField::from_fourier(g, &coeffs).unwrap();
        let scale = f.sup_norm();
        assert!(back.sub(&f).sup_norm() <= 1e-12 * scale);

        let phys: f64 = f.samples().iter().map(|c| c.norm_sqr()).sum::<f64>() / g.len() as f64;
        let spec: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
        assert!((phys - spec).abs() <= 1e-12 * phys.max(1e-300));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn round_trip_is_identity(seed in 0u64..1000) {
            let g = TorusGrid::new(2, 32).unwrap();
            let f = random_field(g, seed);
            let back = SpectralField::from_fourier(g, &f.to_fourier()).unwrap();
            prop_assert!(back.sub(&f).sup_norm() <= 1e-12 * (1.0 + f.sup_norm()));
        }
    }
}
