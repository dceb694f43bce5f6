use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::graph::{spectral_moment, GraphModel};

/// Truncated Laurent expansion Σ cᵢ x^{1−i} of det*(x+Δ) at x = ∞.
///
/// The leading term is always x. With `K` moments the expansion runs down
/// to degree −(K−1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    /// `coefficients[i]` multiplies x^{1−i}.
    coefficients: Vec<BigRational>,
}

impl LaurentSeries {
    /// Coefficient of xᵈᵉᵍʳᵉᵉ, or `None` outside the stored range.
    pub fn coefficient(&self, degree: i64) -> Option<&BigRational> {
        let index = 1 - degree;
        usize::try_from(index).ok().and_then(|i| self.coefficients.get(i))
    }

    pub fn max_degree(&self) -> i64 {
        1
    }

    pub fn min_degree(&self) -> i64 {
        2 - self.coefficients.len() as i64
    }

    /// (degree, coefficient) pairs from x¹ downward.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coefficients.iter().enumerate().map(|(i, c)| (1 - i as i64, c))
    }

    /// Sum of the stored terms at a real point.
    pub fn evaluate(&self, x: f64) -> f64 {
        // Horner in 1/x, then multiply by x
        let y = 1.0 / x;
        let inner = self
            .coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * y + c.to_f64().unwrap_or(f64::NAN));
        inner * x
    }
}

/// Laurent coefficients of x·exp(Σ_{k=1}^{K} ζ(−k)(−1)^{k+1}/(k xᵏ)).
///
/// ζ(−k) is the exact k-th rooted moment. The exponential is formed with
/// the recurrence n·Eₙ = Σ_{j=1}^{n} j·aⱼ·E_{n−j}, all in exact rationals.
pub fn regdet_series(model: &GraphModel, k_max: usize) -> Result<LaurentSeries> {
    let mut a: Vec<BigRational> = Vec::with_capacity(k_max + 1);
    a.push(BigRational::zero());
    for k in 1..=k_max {
        let moment = spectral_moment(model, k)?;
        let signed = if k % 2 == 1 { moment } else { -moment };
        a.push(BigRational::new(signed, BigInt::from(k)));
    }
    let mut e: Vec<BigRational> = Vec::with_capacity(k_max + 1);
    e.push(BigRational::one());
    for n in 1..=k_max {
        let mut acc = BigRational::zero();
        for j in 1..=n {
            acc += &a[j] * &e[n - j] * BigInt::from(j);
        }
        e.push(acc / BigInt::from(n));
    }
    Ok(LaurentSeries { coefficients: e })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinant::regdet;
    use crate::graph::build_cycle;
    use crate::specfun::catalan;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn z_six_terms() {
        let s = regdet_series(&GraphModel::Lattice(1), 6).unwrap();
        let got: Vec<_> = s.terms().map(|(_, c)| c.clone()).collect();
        let want: Vec<_> = [1, 2, -1, 2, -5, 14, -42].iter().map(|&v| int(v)).collect();
        assert_eq!(got, want);
        assert_eq!(s.min_degree(), -5);
    }

    #[test]
    fn catalan_coefficients() {
        let s = regdet_series(&GraphModel::Lattice(1), 15).unwrap();
        for n in 1..=14usize {
            let c = BigRational::from_integer(BigInt::from(catalan(n)));
            let want = if n % 2 == 0 { c } else { -c };
            assert_eq!(s.coefficient(-(n as i64)), Some(&want));
        }
    }

    #[test]
    fn constant_term_is_root_degree() {
        for d in 1..=3 {
            let s = regdet_series(&GraphModel::Lattice(d), 3).unwrap();
            assert_eq!(s.coefficient(0), Some(&int(2 * d as i64)));
        }
        let s = regdet_series(&build_cycle(7).unwrap(), 3).unwrap();
        assert_eq!(s.coefficient(0), Some(&int(2)));
    }

    #[test]
    fn series_matches_closed_form_far_out() {
        let s = regdet_series(&GraphModel::Lattice(1), 16).unwrap();
        for x in [8.0, 16.0, 32.0] {
            let exact = regdet(&GraphModel::Lattice(1), x).unwrap();
            let rel = (s.evaluate(x) - exact).abs() / exact;
            assert!(rel <= 10.0 * (4.0f64 / x).powi(15), "x = {x}: {rel}");
        }
    }

    #[test]
    fn cycles_agree_with_z_until_they_wrap() {
        for n in 3..=8usize {
            let k = n + 2;
            let c = regdet_series(&build_cycle(n).unwrap(), k).unwrap();
            let z = regdet_series(&GraphModel::Lattice(1), k).unwrap();
            for deg in -(n as i64 - 2)..=1 {
                assert_eq!(c.coefficient(deg), z.coefficient(deg), "n = {n}, degree {deg}");
            }
            assert_ne!(c.coefficient(1 - n as i64), z.coefficient(1 - n as i64));
        }
    }

    #[test]
    fn triangle_series_matches_cube_root() {
        let s = regdet_series(&build_cycle(3).unwrap(), 30).unwrap();
        let x = 40.0;
        let exact = regdet(&build_cycle(3).unwrap(), x).unwrap();
        assert!((s.evaluate(x) - exact).abs() < 1e-12 * exact);
    }
}
