use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Series/asymptotic crossover.
const CROSSOVER: f64 = 15.0;

fn check(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain("I0 is only evaluated on x >= 0"));
    }
    Ok(())
}

fn series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut m = 1.0;
    while term > 1e-17 * sum {
        term *= q / (m * m);
        sum += term;
        m += 1.0;
    }
    sum
}

// Σ ((2k-1)!!)² / (k! (8x)^k), stopped at the smallest term.
fn asymptotic_sum(x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        let next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if next.abs() >= term.abs() || next.abs() < 1e-17 * sum {
            break;
        }
        sum += next;
        term = next;
        k += 1.0;
    }
    sum
}

/// Modified Bessel function of the first kind, order zero.
pub fn bessel_i0(x: f64) -> Result<f64> {
    check(x)?;
    if x <= CROSSOVER {
        Ok(series(x))
    } else {
        Ok(x.exp() * asymptotic_sum(x) / (2.0 * PI * x).sqrt())
    }
}

/// `e^{-x} I₀(x)`, finite for all `x >= 0`.
pub fn bessel_i0_scaled(x: f64) -> Result<f64> {
    check(x)?;
    if x <= CROSSOVER {
        Ok(series(x) * (-x).exp())
    } else {
        Ok(asymptotic_sum(x) / (2.0 * PI * x).sqrt())
    }
}
