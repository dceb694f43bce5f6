use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{laplacian, GraphModel};
use crate::specfun::binomial;

/// Largest vertex count accepted by [`charpoly_exact`].
pub const CHARPOLY_VERTEX_LIMIT: usize = 64;

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    pub coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Coefficient of xⁱ, zero past the degree.
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let magnitude = c.abs();
            if !magnitude.is_one() || i == 0 {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// det(xI + Δ) for the n-cycle from its closed form: the coefficient of
/// x^{n−l} is binom(2n−l, l)·2n/(2n−l) for 0 ≤ l < n, and the constant term
/// is 0.
pub fn charpoly_cycle(n: usize) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    let mut coefficients = vec![BigInt::zero(); n + 1];
    for l in 0..n {
        let numerator = BigInt::from(binomial(2 * n - l, l)) * BigInt::from(2 * n);
        let (q, r) = numerator.div_rem(&BigInt::from(2 * n - l));
        debug_assert!(r.is_zero());
        coefficients[n - l] = q;
    }
    Ok(IntPolynomial { coefficients })
}

/// det(xI + Δ) of a finite model by the Faddeev–LeVerrier recurrence.
///
/// With A = −Δ: M₁ = I, cₖ = −tr(A Mₖ)/k, Mₖ₊₁ = A Mₖ + cₖ I. The division
/// by k is exact at every step; a non-zero remainder would mean an
/// arithmetic bug and panics.
pub fn charpoly_exact(model: &GraphModel) -> Result<IntPolynomial> {
    let lap = laplacian(model)?;
    let n = lap.dim();
    if n > CHARPOLY_VERTEX_LIMIT {
        return Err(Error::Resource {
            what: "vertices",
            actual: n,
            limit: CHARPOLY_VERTEX_LIMIT,
        });
    }
    let a: Vec<BigInt> = lap.entries().iter().map(|&v| BigInt::from(-v)).collect();
    // c[k] multiplies x^{n-k}
    let mut c = vec![BigInt::one()];
    let mut m: Vec<BigInt> = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        let am = mat_mul(&a, &m, n);
        let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
        let (ck, rem) = (-trace).div_rem(&BigInt::from(k));
        assert!(rem.is_zero(), "Faddeev-LeVerrier division by {k} left a remainder");
        m = am;
        for i in 0..n {
            m[i * n + i] += &ck;
        }
        c.push(ck);
    }
    c.reverse();
    Ok(IntPolynomial { coefficients: c })
}

fn mat_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * &b[k * n + j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, HalfEdgeGraph};
    use alloc::string::ToString;
    use core::f64::consts::PI;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cycles() {
        assert_eq!(charpoly_cycle(3).unwrap().coefficients, ints(&[0, 9, 6, 1]));
        assert_eq!(charpoly_cycle(4).unwrap().coefficients, ints(&[0, 16, 20, 8, 1]));
        assert_eq!(charpoly_cycle(4).unwrap().to_string(), "x^4 + 8x^3 + 20x^2 + 16x");
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for n in 3..=12 {
            let model = build_cycle(n).unwrap();
            assert_eq!(charpoly_cycle(n).unwrap(), charpoly_exact(&model).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn trace_coefficient() {
        for n in 3..=40 {
            assert_eq!(charpoly_cycle(n).unwrap().coefficient(n - 1), BigInt::from(2 * n));
        }
    }

    #[test]
    fn single_edge() {
        let g = HalfEdgeGraph::from_edges(2, &[(0, 1)]).unwrap();
        let p = charpoly_exact(&GraphModel::finite(g, 0).unwrap()).unwrap();
        assert_eq!(p.coefficients, ints(&[0, 2, 1]));
    }

    #[test]
    fn sine_product() {
        for n in 3..=12usize {
            let p = charpoly_cycle(n).unwrap();
            let prod: f64 = (0..n)
                .map(|k| 1.0 + 4.0 * (k as f64 * PI / n as f64).sin().powi(2))
                .product();
            assert!((p.evaluate_f64(1.0) - prod).abs() < 1e-6 * prod);
        }
    }

    #[test]
    fn size_cap() {
        let big = build_cycle(CHARPOLY_VERTEX_LIMIT + 1).unwrap();
        assert!(matches!(charpoly_exact(&big), Err(Error::Resource { .. })));
        assert!(charpoly_exact(&GraphModel::Lattice(1)).is_err());
    }
}
