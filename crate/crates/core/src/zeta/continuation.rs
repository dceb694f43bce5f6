use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::ToPrimitive;

use super::lattice::{lattice_rho_coeff, zeta_lattice_negint};
use super::mellin::{asymptotic_tail, DEFAULT_NODES, DEFAULT_T_MAX};
use super::{as_nonpositive_integer, real_power};
use crate::error::{Error, Result};
use crate::graph::GraphModel;
use crate::quadrature::simpson_log;
use crate::specfun::{central_binomial, log_gamma, rgamma};
use crate::spectral::heat_function;

const SERIES_TOLERANCE: f64 = 1e-10;
/// Expansion terms past the strip, integrated analytically beyond t_max.
const EXTRA_TAIL_TERMS: usize = 3;

/// Upper bound ζ(−N−1) / ((N+1)! |N+1+s|) on the first omitted term of the
/// small-t series, using ζ_{ℤᵈ}(−n) ≤ (4d)ⁿ.
fn truncation_bound(d: usize, s: Complex64, n: usize) -> f64 {
    let m = (n + 1) as f64;
    let ln_term = m * ((4 * d) as f64).ln()
        - log_gamma(Complex64::new(m + 1.0, 0.0)).map(|z| z.re).unwrap_or(0.0);
    ln_term.exp() / (s + m).norm()
}

/// Smallest N whose truncation bound is below 1e-10.
pub fn continuation_terms_needed(d: usize, s: Complex64) -> usize {
    (1..).find(|&n| truncation_bound(d, s, n) < SERIES_TOLERANCE).unwrap()
}

/// ζ_{ℤᵈ}(−n)/n! for n ≤ N as the d-fold Cauchy product of
/// binom(2k, k)/k!.
fn moment_series(d: usize, n_max: usize) -> Vec<f64> {
    let mut base = Vec::with_capacity(n_max + 1);
    let mut fact = 1.0f64;
    for k in 0..=n_max {
        if k > 0 {
            fact *= k as f64;
        }
        base.push(central_binomial(k).to_f64().unwrap_or(f64::INFINITY) / fact);
    }
    let mut acc = vec![0.0; n_max + 1];
    acc[0] = 1.0;
    for _ in 0..d {
        let mut next = vec![0.0; n_max + 1];
        for i in 0..=n_max {
            for j in 0..=n_max - i {
                next[i + j] += acc[i] * base[j];
            }
        }
        acc = next;
    }
    acc
}

/// Meromorphic continuation of ζ_{ℤᵈ} to Re s < M.
///
/// ζ(s) Γ(s) = Σ_{n≤N} (−1)ⁿ ζ(−n) / (n! (n+s))
///           + Σ_{α<M} ρ_α Γ(1+α) / (α+1−s)
///           + ∫₁^∞ (H_t − Σ_{α<M} ρ_α Γ(1+α) t^{−α−1}) t^{s−1} dt,
/// with α = k − 1 + d/2 running over the exponents of the small-x density
/// expansion.
pub fn zeta_lattice_continuation(d: usize, s: Complex64, m: usize, n: usize) -> Result<Complex64> {
    if d == 0 {
        return Err(Error::domain("lattice dimension must be >= 1"));
    }
    let half_d = d as f64 / 2.0;
    if s.im == 0.0 {
        let shifted = s.re - half_d;
        if shifted >= 0.0 && num_traits::Float::fract(shifted) == 0.0 {
            return Err(Error::Pole { location: s.re });
        }
    }
    if s.re >= m as f64 {
        return Err(Error::domain(alloc::format!(
            "Re s = {} is outside the continuation strip Re s < M = {m}",
            s.re
        )));
    }
    if let Some(k) = as_nonpositive_integer(s) {
        return Ok(Complex64::new(
            zeta_lattice_negint(d, k).to_f64().unwrap_or(f64::INFINITY),
            0.0,
        ));
    }
    let bound = truncation_bound(d, s, n);
    if !(bound < SERIES_TOLERANCE) {
        return Err(Error::TruncationTooShort { n, bound });
    }

    let series: Complex64 = moment_series(d, n)
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(sign * a, 0.0) / (s + k as f64)
        })
        .sum();

    // exponents α = k − 1 + d/2 < M
    let pole_terms = (0..).take_while(|&k| k as f64 - 1.0 + half_d < m as f64).count();
    let coefficients: Vec<(f64, f64)> = (0..pole_terms)
        .map(|k| {
            let rho = lattice_rho_coeff(d, k);
            let gamma = log_gamma(Complex64::new(1.0 + rho.exponent, 0.0))
                .map(|z| z.re.exp())
                .unwrap_or(f64::NAN);
            (rho.exponent, rho.value * gamma)
        })
        .collect();
    let poles: Complex64 = coefficients
        .iter()
        .map(|&(alpha, c)| Complex64::new(c, 0.0) / (Complex64::new(alpha + 1.0, 0.0) - s))
        .sum();

    let model = GraphModel::Lattice(d);
    let mut failure = None;
    let body = simpson_log(1.0, DEFAULT_T_MAX, DEFAULT_NODES, |t| {
        let h = match heat_function(&model, t) {
            Ok(h) => h,
            Err(e) => {
                failure = Some(e);
                0.0
            }
        };
        let expansion: f64 = coefficients
            .iter()
            .map(|&(alpha, c)| c * t.powf(-alpha - 1.0))
            .sum();
        real_power(t, s - 1.0) * (h - expansion)
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let tail = asymptotic_tail(d, s, DEFAULT_T_MAX, pole_terms..pole_terms + EXTRA_TAIL_TERMS)?;
    Ok((series + poles + body + tail) * rgamma(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{residue_lattice, zeta_mellin, zeta_z_closed};

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn moment_series_matches_exact_values() {
        let a = moment_series(3, 10);
        let mut fact = 1.0;
        for (k, &v) in a.iter().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            let want = zeta_lattice_negint(3, k).to_f64().unwrap() / fact;
            assert!((v - want).abs() < 1e-12 * want);
        }
    }

    #[test]
    fn z_continuation_matches_closed_form() {
        for s in [-2.5, -0.5, 0.3, 1.2, -3.7] {
            let got = zeta_lattice_continuation(1, c(s), 2, 60).unwrap();
            let want = zeta_z_closed(c(s)).unwrap();
            assert!((got - want).norm() < 1e-6, "s = {s}: {got} vs {want}");
        }
        let s = Complex64::new(0.2, 1.5);
        let got = zeta_lattice_continuation(1, s, 2, 60).unwrap();
        assert!((got - zeta_z_closed(s).unwrap()).norm() < 1e-6);
    }

    #[test]
    fn z2_continuation_matches_mellin() {
        for s in [0.5, 0.6] {
            let cont = zeta_lattice_continuation(2, c(s), 3, 60).unwrap();
            let mel = zeta_mellin(&GraphModel::Lattice(2), c(s), 200.0, 4000).unwrap();
            assert!((cont - mel).norm() < 1e-5, "s = {s}: {cont} vs {mel}");
        }
    }

    #[test]
    fn zeta_at_zero_is_one() {
        for d in 1..=3 {
            assert_eq!(zeta_lattice_continuation(d, c(0.0), 2, 60).unwrap(), c(1.0));
            let near = zeta_lattice_continuation(d, c(1e-7), 2, 60).unwrap();
            assert!((near - c(1.0)).norm() < 1e-5);
        }
    }

    #[test]
    fn pole_limit_in_two_dimensions() {
        let eps = 1e-6;
        let v = zeta_lattice_continuation(2, c(1.0 + eps), 2, 60).unwrap() * eps;
        assert!((v.re - residue_lattice(2, 0).value).abs() < 1e-5);
        assert_eq!(
            zeta_lattice_continuation(2, c(1.0), 2, 60),
            Err(Error::Pole { location: 1.0 })
        );
    }

    #[test]
    fn argument_checks() {
        assert!(zeta_lattice_continuation(1, c(2.2), 2, 60).is_err());
        assert!(matches!(
            zeta_lattice_continuation(3, c(0.3), 2, 5),
            Err(Error::TruncationTooShort { .. })
        ));
        assert!(continuation_terms_needed(1, c(0.3)) < 60);
        assert!(continuation_terms_needed(3, c(0.3)) < 60);
    }
}
