//! Composite trapezoid quadrature for smooth, Gaussian-decaying integrands.
//!
//! The trapezoid rule converges geometrically for such integrands, so the
//! adaptive loop only ever doubles the point count and stops once two
//! successive estimates agree.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Initial number of subintervals.
pub const INITIAL_INTERVALS: usize = 4096;

/// Agreement required between two successive refinements.
pub const AGREEMENT_TOL: f64 = 1e-11;

const MAX_INTERVALS: usize = 1 << 22;

/// Half-width of the integration window in the oscillator coordinate for
/// integrands built from oscillator functions up to degree `order_hint`.
pub fn support_half_width<T: Real>(order_hint: usize) -> T {
    (T::from_usize(4 * order_hint + 8)).sqrt() + T::lit(8.0)
}

fn agreement_tol<T: Real>() -> T {
    T::lit(AGREEMENT_TOL).max(T::epsilon() * T::lit(100.0))
}

/// Integrates a vector-valued function over `[lo, hi]`.
///
/// `f(z, out)` must write `dim` values into `out`. Each component is refined
/// until successive estimates agree within the absolute tolerance `tol`
/// (scaled by the magnitude when that exceeds one).
pub fn integrate_many<T, F>(mut f: F, dim: usize, lo: T, hi: T, tol: T) -> Result<Vec<T>>
where
    T: Real,
    F: FnMut(T, &mut [T]),
{
    if !(hi > lo) {
        return Err(Error::Domain(format!(
            "empty integration interval [{lo}, {hi}]"
        )));
    }
    let mut buf = vec![T::zero(); dim];
    let mut eval = |z: T, acc: &mut [T], weight: T| -> Result<()> {
        f(z, &mut buf);
        for (a, &v) in acc.iter_mut().zip(&buf) {
            if !v.is_finite() {
                return Err(Error::NonFinite(format!("integrand is {v} at {z}")));
            }
            *a += weight * v;
        }
        Ok(())
    };

    let mut intervals = INITIAL_INTERVALS;
    let mut h = (hi - lo) / T::from_usize(intervals);
    // sums[i] = sum of f over all nodes with trapezoid end weights
    let mut sums = vec![T::zero(); dim];
    eval(lo, &mut sums, T::lit(0.5))?;
    eval(hi, &mut sums, T::lit(0.5))?;
    for j in 1..intervals {
        eval(lo + h * T::from_usize(j), &mut sums, T::one())?;
    }
    let mut estimate: Vec<T> = sums.iter().map(|&s| s * h).collect();

    while intervals < MAX_INTERVALS {
        let h_new = h / T::lit(2.0);
        for j in 0..intervals {
            eval(lo + h_new * T::from_usize(2 * j + 1), &mut sums, T::one())?;
        }
        intervals *= 2;
        h = h_new;
        let refined: Vec<T> = sums.iter().map(|&s| s * h).collect();
        let converged = refined
            .iter()
            .zip(&estimate)
            .all(|(&new, &old)| (new - old).abs() <= tol * new.abs().max(T::one()));
        estimate = refined;
        if converged {
            return Ok(estimate);
        }
    }
    Err(Error::SeriesNonConvergence {
        what: "trapezoid quadrature".into(),
        terms: MAX_INTERVALS,
    })
}

/// Integrates a scalar function over `[lo, hi]`.
pub fn integrate_interval<T, F>(mut f: F, lo: T, hi: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    integrate_many(|z, out| out[0] = f(z), 1, lo, hi, agreement_tol()).map(|v| v[0])
}

/// Integrates `integrand(z)` over the effective support of oscillator
/// functions up to degree `order_hint`.
pub fn quadrature<T, F>(integrand: F, order_hint: usize) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let half = support_half_width::<T>(order_hint);
    integrate_interval(integrand, -half, half)
}

/// Vector-valued counterpart of [`quadrature`].
pub fn quadrature_many<T, F>(integrand: F, dim: usize, order_hint: usize) -> Result<Vec<T>>
where
    T: Real,
    F: FnMut(T, &mut [T]),
{
    let half = support_half_width::<T>(order_hint);
    integrate_many(integrand, dim, -half, half, agreement_tol())
}
