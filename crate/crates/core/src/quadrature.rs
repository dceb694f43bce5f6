//! Composite Simpson rule, optionally on a logarithmic grid.

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

/// Simpson's rule for `f` on `[a, b]` with `n` subintervals (`n` rounded up
/// to even).
pub fn simpson<F>(a: f64, b: f64, n: usize, mut f: F) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    let n = (n.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += f(a + h * i as f64) * w;
    }
    acc * (h / 3.0)
}

/// ∫_{t_lo}^{t_hi} g(t) dt with t = e^u, i.e. ∫ g(e^u) e^u du.
pub fn simpson_log<F>(t_lo: f64, t_hi: f64, n: usize, mut g: F) -> Complex64
where
    F: FnMut(f64) -> Complex64,
{
    simpson(t_lo.ln(), t_hi.ln(), n, |u| {
        let t = u.exp();
        g(t) * t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_is_exact() {
        let v = simpson(0.0, 2.0, 2, |x| Complex64::new(x * x * x, 0.0));
        assert!((v.re - 4.0).abs() < 1e-14);
    }

    #[test]
    fn log_grid_power_law() {
        // ∫_1^100 t^{-1.5} dt = 2 (1 - 1/10)
        let v = simpson_log(1.0, 100.0, 400, |t| Complex64::new(t.powf(-1.5), 0.0));
        assert!((v.re - 1.8).abs() < 1e-9);
    }
}
