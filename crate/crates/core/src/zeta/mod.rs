//! Spectral zeta functions ζ_G(s) = ∫ x^{−s} dμ_root(x).
//!
//! Exact values at the non-positive integers are spectral moments. Elsewhere
//! ζ is evaluated through the closed form for ℤ, the Mellin transform of the
//! heat function, or the meromorphic continuation built from the small-t
//! moment series and the small-x expansion of the lattice density.

mod closed;
mod continuation;
mod finite;
mod lattice;
mod mellin;

pub use closed::zeta_z_closed;
pub use continuation::{continuation_terms_needed, zeta_lattice_continuation};
pub use finite::{zeta_finite_transitive, FiniteZeta};
pub use lattice::{
    check_functional_z2, lattice_rho_coeff, residue_lattice, zeta_lattice_negint,
    FunctionalCheck, ResidueExact, RhoCoefficient,
};
pub use mellin::{zeta_mellin, DEFAULT_NODES, DEFAULT_T_MAX};

use num_complex::Complex64;

/// λ^e = exp(e·ln λ) for real λ > 0 and complex e.
pub(crate) fn real_power(lambda: f64, exponent: Complex64) -> Complex64 {
    (exponent * num_traits::Float::ln(lambda)).exp()
}

/// `Some(m)` when `s` is the non-positive integer −m.
pub(crate) fn as_nonpositive_integer(s: Complex64) -> Option<usize> {
    let m = -s.re;
    if s.im == 0.0 && m >= 0.0 && num_traits::Float::fract(m) == 0.0 {
        Some(m as usize)
    } else {
        None
    }
}
