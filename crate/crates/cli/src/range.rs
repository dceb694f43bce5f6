//! `start:stop:step` ranges with an inclusive stop, or a single value.

use crate::{CliError, CliResult};

/// Slack for deciding whether the stop value is reached.
const STOP_SLACK: f64 = 1e-12;

pub fn parse_real_range(text: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |s: &str| -> CliResult<f64> {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| CliError::usage(format!("'{s}' in '{text}' is not a finite number")))
    };
    match parts.as_slice() {
        [single] => Ok(vec![num(single)?]),
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if stop < start {
                return Err(CliError::usage(format!("range '{text}' has stop < start")));
            }
            if start == stop {
                return Ok(vec![start]);
            }
            if step <= 0.0 {
                return Err(CliError::usage(format!("range '{text}' needs a positive step")));
            }
            let count = ((stop - start) / step + STOP_SLACK).floor() as usize + 1;
            Ok((0..count).map(|i| start + i as f64 * step).collect())
        }
        _ => Err(CliError::usage(format!(
            "'{text}' is neither a number nor start:stop:step"
        ))),
    }
}

/// Integer ranges `a` or `a:b` (inclusive).
pub fn parse_int_range(text: &str) -> CliResult<Vec<usize>> {
    let num = |s: &str| -> CliResult<usize> {
        s.trim()
            .parse()
            .map_err(|_| CliError::usage(format!("'{s}' in '{text}' is not a non-negative integer")))
    };
    match text.split_once(':') {
        None => Ok(vec![num(text)?]),
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if b < a {
                return Err(CliError::usage(format!("range '{text}' has stop < start")));
            }
            Ok((a..=b).collect())
        }
    }
}
