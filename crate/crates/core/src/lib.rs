//! Spectral invariants of rooted graphs: spectral zeta functions, heat
//! functions, regularized determinants and Ihara zeta functions.
//!
//! Finite graphs are handled through their Laplacian matrices. The integer
//! lattices ℤᵈ are never materialized: lattice quantities come from closed
//! forms and exact combinatorial sums.
//!
//! Float math goes through `num_traits::Float` backed by `libm`. When a
//! dependent crate links `std`, the inherent `f64` methods take over and the
//! trait import is unused, hence the `allow(unused_imports)` markers.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod determinant;
pub mod error;
pub mod graph;
pub mod ihara;
pub mod linalg;
pub mod quadrature;
pub mod specfun;
pub mod spectral;
pub mod zeta;

pub use error::{Error, ErrorKind, Result};
pub use graph::{GraphModel, HalfEdgeGraph, LaplacianMatrix};

/// Complex scalar used for the zeta variable `s` and the Ihara variable `u`.
pub type ComplexValue = num_complex::Complex64;
