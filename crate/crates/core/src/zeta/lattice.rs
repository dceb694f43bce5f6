use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::specfun::{
    central_binomial, factorial, for_each_composition, log_beta, log_gamma, multinomial,
};

/// ζ_{ℤᵈ}(−k) = Σ_{k₁+…+k_d=k} binom(k; k₁,…,k_d) Π binom(2kᵢ, kᵢ).
pub fn zeta_lattice_negint(d: usize, k: usize) -> BigUint {
    let mut total = BigUint::zero();
    for_each_composition(k, d, |parts| {
        let mut term = multinomial(parts);
        for &p in parts {
            term *= central_binomial(p);
        }
        total += term;
    });
    total
}

/// Coefficient of x^{k−1+d/2} in the small-x expansion of the ℤᵈ density.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoCoefficient {
    pub d: usize,
    pub k: usize,
    /// Exponent α = k − 1 + d/2.
    pub exponent: f64,
    /// Value computed through the multivariate beta function.
    pub value: f64,
    /// Exact form: value = rational · π^{−pi_power}.
    pub rational: BigRational,
    pub pi_power: u32,
}

impl RhoCoefficient {
    pub fn exact_value(&self) -> f64 {
        self.rational.to_f64().unwrap_or(f64::NAN) / PI.powi(self.pi_power as i32)
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn lattice_rho_coeff(d: usize, k: usize) -> RhoCoefficient {
    // floating route: Σ B(l + 1/2) Π binom(2l, l) / (π^d 2^{4k+d})
    let mut value = 0.0;
    // exact route: Σ Π binom(2l, l) (2l)! / l!
    let mut exact_sum = BigUint::zero();
    for_each_composition(k, d, |l| {
        let args: Vec<Complex64> = l
            .iter()
            .map(|&li| Complex64::new(li as f64 + 0.5, 0.0))
            .collect();
        let beta = log_beta(&args).map(|b| b.re.exp()).unwrap_or(f64::NAN);
        let binoms: f64 = l
            .iter()
            .map(|&li| central_binomial(li).to_f64().unwrap_or(f64::INFINITY))
            .product();
        value += beta * binoms;
        let mut term = BigUint::one();
        for &li in l {
            term = term * central_binomial(li) * factorial(2 * li) / factorial(li);
        }
        exact_sum += term;
    });
    value /= PI.powi(d as i32) * 2f64.powi((4 * k + d) as i32);

    // Γ(k + d/2) is an integer for even d and (2m)! √π / (4^m m!) for odd d
    let denominator = pow2(6 * k + d);
    let (rational, pi_power) = if d.is_multiple_of(2) {
        let gamma = factorial(k + d / 2 - 1);
        (
            BigRational::new(BigInt::from(exact_sum), BigInt::from(denominator * gamma)),
            (d / 2) as u32,
        )
    } else {
        let m = k + (d - 1) / 2;
        (
            BigRational::new(
                BigInt::from(exact_sum * pow2(2 * m) * factorial(m)),
                BigInt::from(denominator * factorial(2 * m)),
            ),
            d.div_ceil(2) as u32,
        )
    };
    RhoCoefficient {
        d,
        k,
        exponent: k as f64 - 1.0 + d as f64 / 2.0,
        value,
        rational,
        pi_power,
    }
}

/// Residue of ζ_{ℤᵈ} at its simple pole s = k + d/2.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueExact {
    pub d: usize,
    pub k: usize,
    /// S(d,k) = Σ_{‖l‖₁=k} binom(k; l) Π binom(2l_m, l_m) (2l_m)!.
    pub core: BigUint,
    pub pole: f64,
    /// −S / ((4π)^{d/2} 2^{6k} k! Γ(k + d/2)).
    pub value: f64,
}

fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * core::f64::consts::LN_2
}

pub fn residue_lattice(d: usize, k: usize) -> ResidueExact {
    let mut core = BigUint::zero();
    for_each_composition(k, d, |l| {
        let mut term = multinomial(l);
        for &li in l {
            term = term * central_binomial(li) * factorial(2 * li);
        }
        core += term;
    });
    let half_d = d as f64 / 2.0;
    let ln_denominator = half_d * (4.0 * PI).ln()
        + (6 * k) as f64 * core::f64::consts::LN_2
        + log_gamma(Complex64::new(k as f64 + 1.0, 0.0)).map(|z| z.re).unwrap_or(f64::NAN)
        + log_gamma(Complex64::new(k as f64 + half_d, 0.0)).map(|z| z.re).unwrap_or(f64::NAN);
    let value = -(big_ln(&core) - ln_denominator).exp();
    ResidueExact {
        d,
        k,
        core,
        pole: k as f64 + half_d,
        value,
    }
}

/// Exact comparison behind Res(ζ_{ℤ²}, k+1) = −ζ_{ℤ²}(−k) / (π 2^{2+5k}).
///
/// Both sides are −(rational)/π; the rationals are compared exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalCheck {
    pub k: usize,
    /// S(2,k) / (4 · 2^{6k} (k!)²), from the residue.
    pub residue_side: BigRational,
    /// ζ_{ℤ²}(−k) / (4 · 2^{5k}), from the zeta value.
    pub zeta_side: BigRational,
    pub holds: bool,
}

pub fn check_functional_z2(k: usize) -> FunctionalCheck {
    let residue = residue_lattice(2, k);
    let kf = factorial(k);
    let residue_side = BigRational::new(
        BigInt::from(residue.core),
        BigInt::from(pow2(6 * k + 2) * &kf * &kf),
    );
    let zeta_side = BigRational::new(
        BigInt::from(zeta_lattice_negint(2, k)),
        BigInt::from(pow2(5 * k + 2)),
    );
    let holds = residue_side == zeta_side;
    FunctionalCheck {
        k,
        residue_side,
        zeta_side,
        holds,
    }
}
