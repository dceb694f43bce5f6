use num_complex::Complex64;

use super::real_power;
use crate::error::{Error, Result};
use crate::graph::{laplacian, GraphModel};
use crate::linalg::jacobi_eigen;
use crate::spectral::{spectral_measure, CLUSTER_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteZeta {
    pub value: Complex64,
    /// False when the model is not known to be vertex-transitive; the value
    /// is then the rooted-measure zeta Σ w_λ λ^{−s}, not (1/n) Σ λ^{−s}.
    pub transitive: bool,
}

/// ζ_G(s) of a finite graph, an entire function of `s`.
///
/// Transitive models use (1/n) Σ_{λ≠0} λ^{−s} over all Laplacian
/// eigenvalues; other finite models fall back to the rooted spectral measure.
pub fn zeta_finite_transitive(model: &GraphModel, s: Complex64) -> Result<FiniteZeta> {
    if let GraphModel::Lattice(d) = model {
        return Err(Error::InfiniteGraph(*d));
    }
    let minus_s = -s;
    if model.is_transitive() {
        let lap = laplacian(model)?;
        let n = lap.dim();
        let eigen = jacobi_eigen(&lap.to_f64(), n);
        let sum: Complex64 = eigen
            .values
            .iter()
            .filter(|&&l| l > CLUSTER_TOLERANCE)
            .map(|&l| real_power(l, minus_s))
            .sum();
        Ok(FiniteZeta {
            value: sum / n as f64,
            transitive: true,
        })
    } else {
        let mu = spectral_measure(model)?;
        let value = mu
            .atoms
            .iter()
            .filter(|a| a.eigenvalue > CLUSTER_TOLERANCE)
            .map(|a| real_power(a.eigenvalue, minus_s) * a.weight)
            .sum();
        Ok(FiniteZeta {
            value,
            transitive: false,
        })
    }
}
