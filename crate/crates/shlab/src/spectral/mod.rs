//! Periodic grids, spectral fields, mode filters, and the discrete norms.

mod cutoff;
mod fft;
mod field;
mod grid;

pub use cutoff::{
    apply_filter, apply_semigroup, make_cutoff, smooth_step, uncritical_decay_rate, CutoffKind,
    CutoffProfile,
};
pub(crate) use field::{fine_multiplier, gl_nonlin_hat, sh_nonlin_hat};
pub use field::{
    kernel_convolve, kernel_pair, kernel_triple, modulated_kernel_convolve, product,
    triple_product, SpectralField,
};
pub use grid::TorusGrid;
