//! Regularized determinants det*(x+Δ), their Laurent expansions at x = ∞,
//! characteristic polynomials and rooted spanning forest counts.

mod charpoly;
mod forests;
mod series;

pub use charpoly::{charpoly_cycle, charpoly_exact, IntPolynomial, CHARPOLY_VERTEX_LIMIT};
pub use forests::{
    forest_count_bruteforce, forest_count_cycle, BRUTEFORCE_EDGE_LIMIT, BRUTEFORCE_VERTEX_LIMIT,
};
pub use series::{regdet_series, LaurentSeries};

use alloc::format;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::graph::GraphModel;
use crate::spectral::{spectral_measure, CLUSTER_TOLERANCE};

/// det*(x+Δ_ℤ) = x/2 + 1 + √(x(4+x))/2.
pub(crate) fn regdet_z_closed(x: f64) -> f64 {
    x / 2.0 + 1.0 + (x * (4.0 + x)).sqrt() / 2.0
}

/// Regularized determinant exp(∫ log(x+y) dμ_root(y)) for real x > 0.
///
/// On a finite model this is exp(Σ wᵢ log(x+λᵢ)) over the atoms of the
/// rooted measure, which is det(xI+Δ)^{1/n} when the model is transitive.
/// ℤ uses its closed form. Higher-dimensional lattices are not supported.
pub fn regdet(model: &GraphModel, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("regdet needs real x > 0, got {x}")));
    }
    match model {
        GraphModel::Lattice(1) => Ok(regdet_z_closed(x)),
        GraphModel::Lattice(d) => Err(Error::unsupported(format!(
            "regularized determinant of Z^{d} for d >= 2"
        ))),
        _ => {
            let mu = spectral_measure(model)?;
            let log_det: f64 = mu
                .atoms
                .iter()
                .map(|a| {
                    let lambda = if a.eigenvalue.abs() < CLUSTER_TOLERANCE { 0.0 } else { a.eigenvalue };
                    a.weight * (x + lambda).ln()
                })
                .sum();
            Ok(log_det.exp())
        }
    }
}
