use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::log_gamma;

/// ζ_ℤ(s) = Γ(1−2s)/Γ(1−s)², the continuation of binom(−2s, −s).
///
/// Simple poles at s = 1/2, 3/2, …; zeros at s = 1, 2, ….
pub fn zeta_z_closed(s: Complex64) -> Result<Complex64> {
    if s.im == 0.0 {
        let shifted = s.re - 0.5;
        if shifted >= 0.0 && num_traits::Float::fract(shifted) == 0.0 {
            return Err(Error::Pole { location: s.re });
        }
        if s.re >= 1.0 && num_traits::Float::fract(s.re) == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let log = log_gamma(one - 2.0 * s)? - 2.0 * log_gamma(one - s)?;
    Ok(log.exp())
}
