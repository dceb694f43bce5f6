use alloc::format;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::ToPrimitive;

use super::lattice::{lattice_rho_coeff, zeta_lattice_negint};
use super::real_power;
use crate::error::{Error, Result};
use crate::graph::GraphModel;
use crate::quadrature::simpson_log;
use crate::specfun::{log_gamma, rgamma};
use crate::spectral::heat_function;

pub const DEFAULT_T_MAX: f64 = 200.0;
pub const DEFAULT_NODES: usize = 4000;

/// Below this time H_t is replaced by its first three Taylor terms.
const T_MIN: f64 = 1e-8;
/// Large-t expansion terms used past `t_max`.
const TAIL_TERMS: usize = 6;

/// ∫_T^∞ of the large-t expansion Σ ρ_α Γ(1+α) t^{−α−1} against t^{s−1},
/// over the coefficients k in `range`.
pub(crate) fn asymptotic_tail(
    d: usize,
    s: Complex64,
    t: f64,
    range: core::ops::Range<usize>,
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in range {
        let rho = lattice_rho_coeff(d, k);
        let alpha = rho.exponent;
        let gamma = log_gamma(Complex64::new(1.0 + alpha, 0.0))?.re.exp();
        let denom = Complex64::new(alpha + 1.0, 0.0) - s;
        acc += real_power(t, s - alpha - 1.0) * (rho.value * gamma) / denom;
    }
    Ok(acc)
}

/// ζ_G(s) = (1/Γ(s)) ∫₀^∞ H_t t^{s−1} dt for ℤᵈ on 0 < Re s < d/2.
///
/// Simpson's rule in log t on [1e-8, t_max], a Taylor head below 1e-8 and
/// the analytic integral of the large-t expansion past t_max.
pub fn zeta_mellin(model: &GraphModel, s: Complex64, t_max: f64, n_nodes: usize) -> Result<Complex64> {
    let d = match model {
        GraphModel::Lattice(d) => *d,
        _ => {
            return Err(Error::Divergent(
                "heat function of a finite graph tends to 1/n; the Mellin integral diverges".into(),
            ))
        }
    };
    if !(s.re > 0.0 && s.re < d as f64 / 2.0) {
        return Err(Error::Divergent(format!(
            "Mellin integral for Z^{d} needs 0 < Re s < {}, got {s}",
            d as f64 / 2.0
        )));
    }
    if !(t_max > 1.0) || n_nodes < 2 {
        return Err(Error::domain("need t_max > 1 and at least two nodes"));
    }

    let mut head = Complex64::new(0.0, 0.0);
    let mut factorial = 1.0;
    for n in 0..3usize {
        if n > 0 {
            factorial *= n as f64;
        }
        let moment = zeta_lattice_negint(d, n).to_f64().unwrap_or(f64::NAN);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        head += real_power(T_MIN, s + n as f64) * (sign * moment / factorial) / (s + n as f64);
    }

    let mut failure = None;
    let body = simpson_log(T_MIN, t_max, n_nodes, |t| match heat_function(model, t) {
        Ok(h) => real_power(t, s - 1.0) * h,
        Err(e) => {
            failure = Some(e);
            Complex64::new(0.0, 0.0)
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let tail = asymptotic_tail(d, s, t_max, 0..TAIL_TERMS)?;
    Ok((head + body + tail) * rgamma(s))
}
