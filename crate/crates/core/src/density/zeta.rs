use crate::error::{Error, Result};

/// Tightest tolerance accepted; below this `f64` rounding dominates.
pub const MIN_TOLERANCE: f64 = 1e-15;

/// Number of terms `N` of `sum n^-3` needed so that the tail bound
/// `int_N^inf x^-3 dx = 1 / (2 N^2)` is at most `tolerance / 2`.
pub fn zeta3_terms(tolerance: f64) -> u64 {
    (1.0 / tolerance).sqrt().ceil() as u64
}

/// `1 / zeta(3)` to within `tolerance`.
///
/// With `S_N` the partial sum, `0 < zeta(3) - S_N <= 1 / (2 N^2)` and
/// `|1/S_N - 1/zeta(3)| <= zeta(3) - S_N` because both sums exceed one.
/// Half the tolerance is left for floating-point rounding.
pub fn zeta3_inverse(tolerance: f64) -> Result<f64> {
    if tolerance.is_nan() || tolerance <= 0.0 || tolerance.is_infinite() {
        return Err(Error::invalid(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if tolerance < MIN_TOLERANCE {
        return Err(Error::invalid(format!(
            "tolerance {tolerance:e} is below the f64 floor {MIN_TOLERANCE:e}"
        )));
    }
    let terms = zeta3_terms(tolerance);
    // Smallest terms first.
    let sum: f64 = (1..=terms)
        .rev()
        .map(|n| {
            let n = n as f64;
            1.0 / (n * n * n)
        })
        .sum();
    Ok(1.0 / sum)
}
