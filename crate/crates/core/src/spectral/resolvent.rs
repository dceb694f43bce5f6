use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Arcsine density 1/(π√(x(4−x))) of the rooted measure of ℤ; zero off (0, 4).
pub fn arcsine_density(x: f64) -> f64 {
    if x <= 0.0 || x >= 4.0 {
        0.0
    } else {
        1.0 / (PI * (x * (4.0 - x)).sqrt())
    }
}

/// Green's function ⟨δ_i, (x − Δ_ℤ)⁻¹ δ_j⟩ of ℤ.
///
/// With q = x√(1 − 4/x) (the branch of √(x(x−4)) that behaves like x at
/// infinity), the value is r^{|i−j|}/q where r = (2 − x + q)/2 is the root of
/// r² + (x−2)r + 1 = 0 inside the unit disc.
pub fn resolvent_z(x: Complex64, i: i64, j: i64) -> Result<Complex64> {
    if x.im == 0.0 && (0.0..=4.0).contains(&x.re) {
        return Err(Error::Pole { location: x.re });
    }
    let q = x * (Complex64::new(1.0, 0.0) - 4.0 / x).sqrt();
    let r = (Complex64::new(2.0, 0.0) - x + q) / 2.0;
    let distance = i.abs_diff(j);
    Ok(r.powi(distance.min(i32::MAX as u64) as i32) / q)
}

/// −Im R(x + iε)/π on the diagonal; tends to the arcsine density as ε → 0.
pub fn stieltjes_density_check(x: f64, epsilon: f64) -> Result<f64> {
    if !(x > 0.0 && x < 4.0) {
        return Err(Error::domain("Stieltjes inversion needs 0 < x < 4"));
    }
    if !(epsilon > 0.0) {
        return Err(Error::domain("epsilon must be positive"));
    }
    let r = resolvent_z(Complex64::new(x, epsilon), 0, 0)?;
    Ok(-r.im / PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn diagonal_values() {
        let r = resolvent_z(c(5.0), 3, 3).unwrap();
        assert!((r.re - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        let far = resolvent_z(c(100.0), 0, 0).unwrap();
        assert!((far.re * 100.0 - 1.0).abs() < 0.05);
        assert!(resolvent_z(c(2.0), 0, 0).is_err());
    }

    #[test]
    fn off_diagonal_decays() {
        let d0 = resolvent_z(c(5.0), 0, 0).unwrap();
        let d1 = resolvent_z(c(5.0), 0, 1).unwrap();
        let ratio = (d1 / d0).re;
        assert!((ratio - (-3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(ratio.abs() < 1.0);
    }

    #[test]
    fn resolvent_inverts_shifted_laplacian() {
        // (x − Δ) G = δ₀ row by row: x G(n) − 2G(n) + G(n−1) + G(n+1) = [n = 0]
        for x in [c(5.0), c(-1.5), Complex64::new(2.0, 0.7), Complex64::new(-3.0, -2.0)] {
            let g = |n: i64| resolvent_z(x, n, 0).unwrap();
            for n in -4..=4 {
                let lhs = x * g(n) - 2.0 * g(n) + g(n - 1) + g(n + 1);
                let want = if n == 0 { c(1.0) } else { c(0.0) };
                assert!((lhs - want).norm() < 1e-12, "x = {x}, n = {n}");
            }
        }
    }

    #[test]
    fn stieltjes_recovers_density() {
        for x in [1.0, 2.0, 3.0, 0.5] {
            let got = stieltjes_density_check(x, 1e-6).unwrap();
            assert!((got - arcsine_density(x)).abs() < 1e-4);
        }
        let a = stieltjes_density_check(0.7, 1e-6).unwrap();
        let b = stieltjes_density_check(3.3, 1e-6).unwrap();
        assert!((a - b).abs() < 1e-8);
        assert!(stieltjes_density_check(4.5, 1e-6).is_err());
    }
}
