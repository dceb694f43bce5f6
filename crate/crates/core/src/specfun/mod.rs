//! Special functions used by the closed forms: complex log-gamma, beta,
//! the modified Bessel function I₀ and exact combinatorial numbers.

mod bessel;
mod combinatorics;
mod gamma;

pub use bessel::{bessel_i0, bessel_i0_scaled};
pub use combinatorics::{
    binomial, catalan, central_binomial, factorial, for_each_composition, multinomial,
};
pub use gamma::{gamma, log_beta, log_gamma, rgamma};
