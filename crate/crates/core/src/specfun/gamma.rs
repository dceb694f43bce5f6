use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn lanczos_ln(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln()
}

/// Logarithm of the gamma function.
///
/// Lanczos approximation (g = 7, nine terms) on `Re z >= 1/2`, reflection
/// below. On the reflected half-plane the imaginary part is only defined
/// modulo 2π; `exp(log_gamma(z))` is unaffected.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole { location: z.re });
    }
    if z.re < 0.5 {
        let sin = (z * PI).sin();
        let reflected = lanczos_ln(Complex64::new(1.0, 0.0) - z);
        Ok(Complex64::new(PI.ln(), 0.0) - sin.ln() - reflected)
    } else {
        Ok(lanczos_ln(z))
    }
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    log_gamma(z).map(|l| l.exp())
}

/// 1/Γ(z), entire: zero at the non-positive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Logarithm of the multivariate beta function Πᵢ Γ(aᵢ) / Γ(Σ aᵢ).
pub fn log_beta(args: &[Complex64]) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for &a in args {
        acc += log_gamma(a)?;
        total += a;
    }
    Ok(acc - log_gamma(total)?)
}
