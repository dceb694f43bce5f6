use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::spectral_measure;
use crate::error::{Error, Result};
use crate::graph::GraphModel;
use crate::specfun::bessel_i0_scaled;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatSample {
    pub t: f64,
    pub value: f64,
}

/// Return probability H_t = ⟨δ_root, e^{−tΔ} δ_root⟩.
///
/// For ℤᵈ this is (e^{−2t} I₀(2t))ᵈ.
pub fn heat_function(model: &GraphModel, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::domain("heat function needs t >= 0"));
    }
    match model {
        GraphModel::Lattice(d) => Ok(bessel_i0_scaled(2.0 * t)?.powi(*d as i32)),
        _ => {
            let mu = spectral_measure(model)?;
            Ok(mu.integrate(|x| (-t * x).exp()))
        }
    }
}

/// Heat function on a grid of times; the spectral measure is computed once.
pub fn heat_samples(model: &GraphModel, times: &[f64]) -> Result<Vec<HeatSample>> {
    if let Some(&t) = times.iter().find(|t| !(**t >= 0.0)) {
        return Err(Error::domain(alloc::format!("heat function needs t >= 0, got {t}")));
    }
    match model {
        GraphModel::Lattice(_) => times
            .iter()
            .map(|&t| Ok(HeatSample { t, value: heat_function(model, t)? }))
            .collect(),
        _ => {
            let mu = spectral_measure(model)?;
            Ok(times
                .iter()
                .map(|&t| HeatSample {
                    t,
                    value: mu.integrate(|x| (-t * x).exp()),
                })
                .collect())
        }
    }
}
