//! Family-specific series for the mean values, mean energies and densities
//! of the three built-in families.
//!
//! Two variants are kept side by side. [`SeriesForm::Literal`] transcribes
//! the series in their originally stated form. [`SeriesForm::Corrected`]
//! carries the fixes that an independent index-space derivation requires:
//!
//! * `f(n) = 1`, `<z>`, `<p>`: the sum over `r^{2n} / (Gamma(n) Gamma(n+2))`
//!   needs the square root of the gamma product.
//! * `f(n) = 1`, `<z^2>`, `<p^2>`: likewise `Gamma(n) Gamma(n+3)` under a square root.
//! * cubic family, `<z^2>`, `<p^2>`: the lower-component `theta^-^2` series
//!   carries `sqrt(n+4)`, not `sqrt(n+3)`.
//!
//! All other series agree between the two variants.

use num_complex::Complex;
use serde::Serialize;

use super::Observable;
use crate::basis::{ho_table, rho_from_table, PhysicsConfig};
use crate::coherent::{FamilyKind, LadderFamily};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::specfun::{hyper_0f2, log_factorial, sum_series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesForm {
    Literal,
    Corrected,
}

/// `ln Gamma(k)` for integer `k >= 1`.
fn lgi<T: Real>(k: usize) -> T {
    log_factorial(k - 1)
}

/// `r^{2n} exp(-log_den)` with `0^0 = 1`.
fn power_term<T: Real>(ln_r2: T, n: usize, log_den: T) -> T {
    let log_pow = if n == 0 {
        T::zero()
    } else {
        T::from_usize(n) * ln_r2
    };
    (log_pow - log_den).exp()
}

fn unsupported<T: Real>(family: &LadderFamily<T>) -> Error {
    Error::Unsupported(format!(
        "no closed-form series for family {}; use the index-space path",
        family.kind()
    ))
}

/// Closed-form series value of `<obs>` for a built-in family.
pub fn expectation_closed_form<T: Real>(
    family: &LadderFamily<T>,
    alpha: Complex<T>,
    cfg: &PhysicsConfig<T>,
    obs: Observable,
    form: SeriesForm,
) -> Result<T> {
    if obs == Observable::H {
        cfg.validate()?;
    }
    match family.kind() {
        FamilyKind::One => one(alpha, cfg, obs, form),
        FamilyKind::Shifted => shifted(alpha, cfg, obs),
        FamilyKind::Cubic => cubic(alpha, cfg, obs, form),
        FamilyKind::Custom => Err(unsupported(family)),
    }
}

fn one<T: Real>(
    alpha: Complex<T>,
    cfg: &PhysicsConfig<T>,
    obs: Observable,
    form: SeriesForm,
) -> Result<T> {
    let two = T::lit(2.0);
    let r2 = alpha.norm_sqr();
    let ln_r2 = r2.ln();
    let er2 = r2.exp();
    let denom = two * er2 - T::one();
    // literal form drops the square root on the gamma products
    let root = match form {
        SeriesForm::Literal => T::one(),
        SeriesForm::Corrected => T::lit(0.5),
    };
    let re2_minus_im2 = alpha.re * alpha.re - alpha.im * alpha.im;
    match obs {
        Observable::Z | Observable::P => {
            let s1 = sum_series("mean position series", 1, |n| {
                power_term(ln_r2, n, root * (lgi::<T>(n) + lgi::<T>(n + 2)))
            })?;
            let component = if obs == Observable::Z {
                alpha.re
            } else {
                alpha.im
            };
            Ok(T::SQRT_2() * component / denom * (er2 + s1))
        }
        Observable::Z2 | Observable::P2 => {
            let s2 = sum_series("mean square series", 1, |n| {
                T::from_usize(n + 1).sqrt()
                    * power_term(ln_r2, n, root * (lgi::<T>(n) + lgi::<T>(n + 3)))
            })?;
            let sign = if obs == Observable::Z2 {
                T::one()
            } else {
                -T::one()
            };
            Ok(
                (T::one() + T::lit(4.0) * r2 * er2 + sign * two * re2_minus_im2 * (er2 + s2))
                    / (T::lit(4.0) * er2 - two),
            )
        }
        Observable::H => {
            let s = sum_series("mean energy series", 0, |n| {
                (T::from_usize(n) * cfg.omega()).sqrt() * power_term(ln_r2, n, lgi::<T>(n + 1))
            })?;
            Ok(two / denom * s)
        }
    }
}

fn shifted<T: Real>(alpha: Complex<T>, cfg: &PhysicsConfig<T>, obs: Observable) -> Result<T> {
    let r2 = alpha.norm_sqr();
    let ln_r2 = r2.ln();
    let emr2 = (-r2).exp();
    let re2_minus_im2 = alpha.re * alpha.re - alpha.im * alpha.im;
    let half_gamma_pair = |n: usize| (lgi::<T>(n + 1) + lgi::<T>(n + 2)) / T::lit(2.0);
    match obs {
        Observable::Z | Observable::P => {
            let t1 = sum_series("mean position series", 0, |n| {
                T::from_usize(n + 2).sqrt() * power_term(ln_r2, n, half_gamma_pair(n))
            })?;
            let component = if obs == Observable::Z {
                alpha.re
            } else {
                alpha.im
            };
            Ok(component / T::SQRT_2() * (T::one() + emr2 * t1))
        }
        Observable::Z2 | Observable::P2 => {
            let diag = sum_series("number series", 0, |n| {
                T::from_usize(n + 1) * power_term(ln_r2, n, lgi::<T>(n + 1))
            })?;
            let t2 = sum_series("mean square series", 0, |n| {
                T::from_usize(n + 3).sqrt() * power_term(ln_r2, n, half_gamma_pair(n))
            })?;
            let sign = if obs == Observable::Z2 {
                T::one()
            } else {
                -T::one()
            };
            Ok(emr2 * diag + sign * re2_minus_im2 / T::lit(2.0) * (T::one() + emr2 * t2))
        }
        Observable::H => {
            let s = sum_series("mean energy series", 0, |n| {
                (T::from_usize(n + 1) * cfg.omega()).sqrt() * power_term(ln_r2, n, lgi::<T>(n + 1))
            })?;
            Ok(emr2 * s)
        }
    }
}

fn cubic<T: Real>(
    alpha: Complex<T>,
    cfg: &PhysicsConfig<T>,
    obs: Observable,
    form: SeriesForm,
) -> Result<T> {
    let two = T::lit(2.0);
    let r2 = alpha.norm_sqr();
    let ln_r2 = r2.ln();
    let norm = hyper_0f2(T::one(), two, r2)?;
    let re2_minus_im2 = alpha.re * alpha.re - alpha.im * alpha.im;
    match obs {
        Observable::Z | Observable::P => {
            let f22 = hyper_0f2(two, two, r2)?;
            let s = sum_series("mean position series", 0, |n| {
                let log_den =
                    lgi::<T>(n + 1) + (T::lit(3.0) * lgi::<T>(n + 2) + lgi::<T>(n + 3)) / two;
                T::from_usize(n + 3).sqrt() * power_term(ln_r2, n, log_den)
            })?;
            let component = if obs == Observable::Z {
                alpha.re
            } else {
                alpha.im
            };
            Ok(component / (T::SQRT_2() * norm) * (f22 + s))
        }
        Observable::Z2 | Observable::P2 => {
            let diag = sum_series("number series", 0, |n| {
                T::from_usize(n + 2) * power_term(ln_r2, n, lgi::<T>(n + 2) + two * lgi::<T>(n + 1))
            })?;
            let f23 = hyper_0f2(two, T::lit(3.0), r2)?;
            let shift = match form {
                SeriesForm::Literal => 3,
                SeriesForm::Corrected => 4,
            };
            let s = sum_series("mean square series", 0, |n| {
                let log_den =
                    lgi::<T>(n + 1) + (lgi::<T>(n + 2) + T::lit(3.0) * lgi::<T>(n + 3)) / two;
                T::from_usize(n + shift).sqrt() * power_term(ln_r2, n, log_den)
            })?;
            let sign = if obs == Observable::Z2 {
                T::one()
            } else {
                -T::one()
            };
            Ok((two * diag + sign * re2_minus_im2 * (f23 / two + s)) / (two * norm))
        }
        Observable::H => {
            let s = sum_series("mean energy series", 0, |n| {
                (T::from_usize(n + 2) * cfg.omega()).sqrt()
                    * power_term(ln_r2, n, lgi::<T>(n + 2) + two * lgi::<T>(n + 1))
            })?;
            Ok(s / norm)
        }
    }
}

/// Probability density at `x` from the family's double-sum formula over
/// `rho_{n,m}`, truncated at Landau index `max_index`.
pub fn density_closed_form<T: Real>(
    family: &LadderFamily<T>,
    alpha: Complex<T>,
    cfg: &PhysicsConfig<T>,
    x: T,
    max_index: usize,
) -> Result<T> {
    let (r, theta) = alpha.to_polar();
    let ln_r = r.ln();
    let two = T::lit(2.0);
    let phi = ho_table(max_index, cfg.z_of_x(x))?;
    let rho = |n: usize, m: usize| rho_from_table(cfg, &phi, n, m);
    let rpow = |n: usize| {
        if n == 0 {
            T::zero()
        } else {
            T::from_usize(n) * ln_r
        }
    };
    let cos = |d: isize| (T::from(d).unwrap() * theta).cos();

    // Weight magnitudes w_n with the normalization folded in (log space) and
    // the Landau offset of the family.
    let (offset, log_norm, log_weight): (usize, T, Box<dyn Fn(usize) -> T>) = match family.kind() {
        FamilyKind::One => {
            let r2 = r * r;
            let denom = two * r2.exp() - T::one();
            // ψ_0 and cross terms are handled below; w_n for n >= 1.
            (
                1,
                denom.ln(),
                Box::new(move |n| rpow(n) - log_factorial::<T>(n) / two),
            )
        }
        FamilyKind::Shifted => (
            1,
            r * r + two.ln(),
            Box::new(move |n| rpow(n) - log_factorial::<T>(n) / two),
        ),
        FamilyKind::Cubic => {
            let f = hyper_0f2(T::one(), two, r * r)?;
            (
                2,
                (two * f).ln(),
                Box::new(move |n| {
                    rpow(n) - log_factorial::<T>(n) - log_factorial::<T>(n + 1) / two
                }),
            )
        }
        FamilyKind::Custom => return Err(unsupported(family)),
    };

    let (first, count) = match family.kind() {
        FamilyKind::One => (1, max_index),
        _ => (0, max_index + 1 - offset),
    };
    let w: Vec<T> = (first..first + count)
        .map(|n| (log_weight(n) - log_norm / two).exp())
        .collect();
    let index = |n: usize| match family.kind() {
        FamilyKind::One => n,
        _ => n + offset,
    };

    let mut sum = T::zero();
    for (i, &wm) in w.iter().enumerate() {
        let m = first + i;
        for (j, &wn) in w.iter().enumerate() {
            let n = first + j;
            sum += wm * wn * cos(n as isize - m as isize) * rho(index(n), index(m));
        }
    }
    if family.kind() == FamilyKind::One {
        let w0 = (-log_norm / two).exp();
        // 2 sum_n r^n cos(n theta) / sqrt(n!) psi_n psi_0 + psi_0^2, psi_n psi_0 = rho_{n,0}
        for (j, &wn) in w.iter().enumerate() {
            let n = first + j;
            sum += two * w0 * wn * cos(n as isize) * rho(n, 0);
        }
        sum += w0 * w0 * rho(0, 0);
    }
    Ok(sum)
}
