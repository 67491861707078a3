//! Alternating-series acceleration by iterated averaging of partial sums
//! (the Euler transformation in its triangle form).
//!
//! For a series whose terms alternate in sign with smoothly decaying
//! magnitude — exactly the shape of per-period sums of sin(πα)·R(α) over
//! unit panels — each averaging pass roughly halves the oscillating error,
//! so N terms buy close to 2^-N of the leading truncation error.

/// Accelerated limit of Σ terms[k], with an error estimate.
///
/// Returns (value, err): `value` is the apex of the averaging triangle
/// built over the partial sums, `err` the magnitude of the final
/// correction plus a rounding floor. With fewer than two terms the
/// estimate is the raw sum and the error is unknown (infinite).
pub(crate) fn euler_accelerate(terms: &[f64]) -> (f64, f64) {
    if terms.is_empty() {
        return (0.0, f64::INFINITY);
    }
    if terms.len() == 1 {
        return (terms[0], f64::INFINITY);
    }
    let mut row: Vec<f64> = Vec::with_capacity(terms.len());
    let mut s = 0.0;
    for &t in terms {
        s += t;
        row.push(s);
    }
    let mut last = row[0];
    let mut prev = f64::INFINITY;
    while row.len() > 1 {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
        prev = last;
        last = row[0];
    }
    let rounding_floor = f64::EPSILON * last.abs() * terms.len() as f64;
    ((last), (last - prev).abs() + rounding_floor)
}
