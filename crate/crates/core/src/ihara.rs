//! Ihara zeta functions of regular graphs.
//!
//! Finite graphs go through the Ihara–Bass determinant. The regularized
//! version Z*(u) = (y_u · det*(x_u+Δ))^{−1} also covers ℤ through the
//! closed form of its regularized determinant.

use alloc::format;
use alloc::vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Zero};

use crate::determinant::regdet;
use crate::error::{Error, Result};
use crate::graph::{laplacian, GraphModel};
use crate::linalg::complex_determinant;

/// Relative tolerance of [`check_ihara_functional`].
pub const FUNCTIONAL_TOLERANCE: f64 = 1e-9;

/// Determinants below this fraction of the Hadamard bound count as zero.
const SINGULAR_RATIO: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IharaPoint {
    pub u: Complex64,
    pub value: Complex64,
    pub regular_degree: usize,
}

/// Z_G(u) = ((1−u²)^{(d−2)n/2} det((1+(d−1)u²)I − uA))^{−1} for a finite
/// d-regular graph with adjacency matrix A = dI − Δ.
pub fn ihara_zeta_finite(model: &GraphModel, u: Complex64) -> Result<IharaPoint> {
    if let GraphModel::Lattice(d) = model {
        return Err(Error::InfiniteGraph(*d));
    }
    let d = model.regular_degree()?;
    let lap = laplacian(model)?;
    let n = lap.dim();
    let one = Complex64::new(1.0, 0.0);
    let diagonal = one + u * u * (d as f64 - 1.0);
    let mut m = vec![Complex64::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            let adjacency = if i == j { d as f64 } else { 0.0 } - lap.get(i, j) as f64;
            m[i * n + j] = -u * adjacency;
        }
        m[i * n + i] += diagonal;
    }
    let det = complex_determinant(&m, n);
    let hadamard: f64 = (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j].norm_sqr()).sum::<f64>().sqrt())
        .product();
    if det.norm() <= SINGULAR_RATIO * hadamard {
        return Err(Error::Pole { location: u.re });
    }
    // (d-2)n is even for any d-regular graph
    let exponent = (d as i32 - 2) * n as i32 / 2;
    let base = one - u * u;
    if exponent != 0 && base.norm() == 0.0 {
        return Err(Error::Pole { location: u.re });
    }
    let value = (base.powi(exponent) * det).inv();
    Ok(IharaPoint {
        u,
        value,
        regular_degree: d,
    })
}

/// x_u = (1 − 1/u)(u(d−1) − 1).
pub fn x_of_u(d: usize, u: f64) -> f64 {
    (1.0 - 1.0 / u) * (u * (d as f64 - 1.0) - 1.0)
}

/// x_u in exact rational arithmetic.
pub fn x_of_u_exact(d: usize, u: &BigRational) -> BigRational {
    let one = BigRational::one();
    let dm1 = BigRational::from_integer(BigInt::from(d) - 1);
    (&one - &one / u) * (u * dm1 - &one)
}

/// y_u = u(1−u²)^{d/2−1}, for |u| < 1 when d is odd.
pub fn y_of_u(d: usize, u: f64) -> Result<f64> {
    Ok(u * signed_power(1.0 - u * u, d as f64 / 2.0 - 1.0)?)
}

/// base^e, allowing a negative base only for integer exponents.
fn signed_power(base: f64, e: f64) -> Result<f64> {
    if e.fract() == 0.0 {
        Ok(base.powi(e as i32))
    } else if base > 0.0 {
        Ok(base.powf(e))
    } else {
        Err(Error::unsupported(format!(
            "real power {base}^{e} has no real value"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularizedIhara {
    pub u: f64,
    pub x_u: f64,
    pub y_u: f64,
    pub value: f64,
    pub regular_degree: usize,
}

/// Z*(u) = (y_u · det*(x_u+Δ))^{−1} for real u > 0, u ≠ 1.
///
/// Needs a model with a supported regularized determinant (finite or ℤ)
/// and x_u > 0. For a finite transitive graph Z* is Z_G^{1/n}.
pub fn regularized_ihara(model: &GraphModel, u: f64) -> Result<RegularizedIhara> {
    if !(u > 0.0) || u == 1.0 || !u.is_finite() {
        return Err(Error::domain(format!(
            "regularized Ihara zeta needs real u > 0, u != 1, got {u}"
        )));
    }
    let d = model.regular_degree()?;
    let x_u = x_of_u(d, u);
    if !(x_u > 0.0) {
        return Err(Error::unsupported(format!(
            "x_u = {x_u} at u = {u} lies off the positive axis"
        )));
    }
    let y_u = y_of_u(d, u)?;
    let det = regdet(model, x_u)?;
    Ok(RegularizedIhara {
        u,
        x_u,
        y_u,
        value: 1.0 / (y_u * det),
        regular_degree: d,
    })
}

/// Outcome of comparing both sides of the functional equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalComparison {
    pub u: f64,
    pub reflected_u: f64,
    /// Z*(1/((d−1)u))
    pub lhs: f64,
    /// the prefactor times Z*(u)
    pub rhs: f64,
    pub holds: bool,
}

/// Compares Z*(1/((d−1)u)) with
/// (d−1)u²(1−((d−1)u)^{−2})^{1−d/2} / (1−u²)^{1−d/2} · Z*(u).
///
/// x_u is invariant under u ↦ 1/((d−1)u), so the prefactor is y_u/y_{1/((d−1)u)}.
pub fn compare_ihara_functional(model: &GraphModel, u: f64) -> Result<FunctionalComparison> {
    let d = model.regular_degree()?;
    if d < 2 {
        return Err(Error::domain("functional equation needs degree >= 2"));
    }
    let dm1 = d as f64 - 1.0;
    let reflected_u = 1.0 / (dm1 * u);
    let e = 1.0 - d as f64 / 2.0;
    let factor = dm1 * u * u * signed_power(1.0 - (dm1 * u).powi(-2), e)?
        / signed_power(1.0 - u * u, e)?;
    let lhs = regularized_ihara(model, reflected_u)?.value;
    let rhs = factor * regularized_ihara(model, u)?.value;
    let holds = (lhs - rhs).abs() <= FUNCTIONAL_TOLERANCE * lhs.abs().max(rhs.abs());
    Ok(FunctionalComparison {
        u,
        reflected_u,
        lhs,
        rhs,
        holds,
    })
}

/// True when the functional equation holds at `u` to relative 1e-9.
pub fn check_ihara_functional(model: &GraphModel, u: f64) -> Result<bool> {
    compare_ihara_functional(model, u).map(|c| c.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, HalfEdgeGraph};
    use crate::linalg::jacobi_eigen;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn triangle() {
        let z = ihara_zeta_finite(&build_cycle(3).unwrap(), c(0.3)).unwrap();
        assert!((z.value - c((1.0f64 - 0.027).powi(-2))).norm() < 1e-12);
        assert!((z.value.re - 1.056268).abs() < 1e-6);
        assert_eq!(z.regular_degree, 2);
    }

    #[test]
    fn origin_is_one() {
        for n in 3..10 {
            let z = ihara_zeta_finite(&build_cycle(n).unwrap(), c(0.0)).unwrap();
            assert!((z.value - c(1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn cycle_closed_form() {
        for n in 3..=8 {
            let model = build_cycle(n).unwrap();
            for u in [c(0.2), c(0.4), Complex64::new(0.3, 0.1), Complex64::new(-0.1, 0.45)] {
                let z = ihara_zeta_finite(&model, u).unwrap().value;
                let one_minus = c(1.0) - u.powi(n as i32);
                assert!((z * one_minus * one_minus - c(1.0)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn complete_graph_eigen_product() {
        let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let k4 = GraphModel::finite(HalfEdgeGraph::from_edges(4, &edges).unwrap(), 0).unwrap();
        let u = 0.1;
        let adjacency: [f64; 16] = core::array::from_fn(|k| if k / 4 == k % 4 { 0.0 } else { 1.0 });
        let eig = jacobi_eigen(&adjacency, 4);
        let prod: f64 = eig.values.iter().map(|l| 1.0 + 2.0 * u * u - l * u).product();
        let want = 1.0 / (prod * (1.0 - u * u).powi(2));
        let got = ihara_zeta_finite(&k4, c(u)).unwrap().value;
        assert!((got - c(want)).norm() < 1e-12);
    }

    #[test]
    fn finite_errors() {
        let path = HalfEdgeGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let path = GraphModel::finite(path, 0).unwrap();
        assert!(matches!(ihara_zeta_finite(&path, c(0.2)), Err(Error::NotRegular { .. })));
        // u = 1 is a pole of every cycle
        assert!(matches!(
            ihara_zeta_finite(&build_cycle(5).unwrap(), c(1.0)),
            Err(Error::Pole { .. })
        ));
        assert!(ihara_zeta_finite(&GraphModel::Lattice(1), c(0.2)).is_err());
    }

    #[test]
    fn regularized_is_nth_root() {
        for n in 3..=8 {
            let model = build_cycle(n).unwrap();
            for u in [0.2, 0.3, 0.7, 2.5] {
                let star = regularized_ihara(&model, u).unwrap().value;
                let z = ihara_zeta_finite(&model, c(u)).unwrap().value;
                assert!((star.powi(n as i32) - z.re).abs() < 1e-9 * z.re.abs());
            }
        }
    }

    #[test]
    fn z_piecewise() {
        for i in 1..=20 {
            let u = i as f64 / 21.0;
            let r = regularized_ihara(&GraphModel::Lattice(1), u).unwrap();
            assert!((r.value - 1.0).abs() < 1e-12, "u = {u}");
        }
        for u in [1.5, 2.0, 3.0, 10.0] {
            let r = regularized_ihara(&GraphModel::Lattice(1), u).unwrap();
            assert!((r.value - 1.0 / (u * u)).abs() < 1e-12, "u = {u}");
        }
    }

    #[test]
    fn functional_equation() {
        assert!(check_ihara_functional(&GraphModel::Lattice(1), 0.5).unwrap());
        assert!(check_ihara_functional(&GraphModel::Lattice(1), 3.0).unwrap());
        assert!(check_ihara_functional(&build_cycle(6).unwrap(), 0.4).unwrap());
        for n in 3..=8 {
            for u in [0.15, 0.6, 1.7] {
                assert!(check_ihara_functional(&build_cycle(n).unwrap(), u).unwrap());
            }
        }
        // C3 x C3 is 4-regular: reflection u -> 1/(3u)
        let torus = crate::graph::build_product(&[build_cycle(3).unwrap(), build_cycle(3).unwrap()]).unwrap();
        for u in [0.2, 0.1, 2.0] {
            let cmp = compare_ihara_functional(&torus, u).unwrap();
            assert!(cmp.holds, "{cmp:?}");
        }
    }

    #[test]
    fn regularized_domain() {
        let z = GraphModel::Lattice(1);
        assert!(matches!(regularized_ihara(&z, 0.0), Err(Error::Domain(_))));
        assert!(matches!(regularized_ihara(&z, 1.0), Err(Error::Domain(_))));
        assert!(matches!(regularized_ihara(&z, -0.5), Err(Error::Domain(_))));
        assert!(matches!(
            regularized_ihara(&GraphModel::Lattice(2), 0.2),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn x_u_is_reflection_invariant() {
        for d in 2..=4usize {
            for (p, q) in [(1i64, 3i64), (2, 7), (5, 3), (11, 4)] {
                let u = BigRational::new(BigInt::from(p), BigInt::from(q));
                let reflected = BigRational::one() / (&u * BigInt::from(d - 1));
                assert_eq!(x_of_u_exact(d, &u), x_of_u_exact(d, &reflected));
            }
        }
    }
}
