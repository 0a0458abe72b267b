//! The adjustable annihilation operator `A^-` and its eigenstates.
//!
//! `A^-` lowers the Landau index, `A^- Psi_n = c_n Psi_{n-1}`, with
//! `c_0 = 0`, `c_1 = f(1)/sqrt 2` and `c_n = sqrt(n) f(n)` otherwise. The
//! zeros of `f` at `n = 1, 2` decide where the eigenstates start: `Psi_0`,
//! `Psi_1` or `Psi_2`.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use serde::Serialize;

use crate::basis::{spinor_weight, PhysicsConfig, N_MAX};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::specfun::{log_factorial, SignedLogValue};

/// Extra terms kept beyond the point where the tail estimate drops below tolerance.
pub const GUARD_TERMS: usize = 10;

/// Loosest truncation tolerance accepted by [`build_coefficients`].
pub const MAX_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    One,
    Shifted,
    Cubic,
    Custom,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::One => "one",
            FamilyKind::Shifted => "shifted",
            FamilyKind::Cubic => "cubic",
            FamilyKind::Custom => "custom",
        })
    }
}

/// A user-supplied ladder function, validated on construction.
#[derive(Clone)]
pub struct CustomLadder<T> {
    name: String,
    f: Arc<dyn Fn(usize) -> T + Send + Sync>,
    first_nonzero: usize,
}

impl<T> fmt::Debug for CustomLadder<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomLadder")
            .field("name", &self.name)
            .field("first_nonzero", &self.first_nonzero)
            .finish()
    }
}

/// The real function `f(n)` that parameterizes `A^-`.
#[derive(Debug, Clone)]
pub enum LadderFamily<T> {
    /// `f(n) = 1`
    One,
    /// `f(n) = sqrt(n-1) / sqrt(n)`; vanishes at `n = 1`.
    Shifted,
    /// `f(n) = (n-2) sqrt(n-1) / sqrt(n)`; vanishes at `n = 1, 2`.
    Cubic,
    Custom(CustomLadder<T>),
}

impl<T: Real> LadderFamily<T> {
    /// Wraps a custom ladder function.
    ///
    /// Zeros are allowed only at `n = 1` or at both `n = 1, 2`; `f` must be
    /// finite everywhere and nonzero for `3 <= n <= N_MAX + 2`.
    pub fn custom<F>(name: impl Into<String>, f: F) -> Result<Self>
    where
        F: Fn(usize) -> T + Send + Sync + 'static,
    {
        let name = name.into();
        let (f1, f2) = (f(1), f(2));
        for n in 1..=N_MAX + 2 {
            let v = f(n);
            if !v.is_finite() {
                return Err(Error::InvalidFamily(format!(
                    "{name}: f({n}) = {v} is not finite"
                )));
            }
            if n >= 3 && v == T::zero() {
                return Err(Error::InvalidFamily(format!(
                    "{name}: f({n}) = 0; zeros are only supported at n = 1, 2"
                )));
            }
        }
        let first_nonzero = match (f1 == T::zero(), f2 == T::zero()) {
            (false, false) => 1,
            (true, false) => 2,
            (true, true) => 3,
            (false, true) => {
                return Err(Error::InvalidFamily(format!(
                    "{name}: f(2) = 0 requires f(1) = 0 as well"
                )))
            }
        };
        Ok(LadderFamily::Custom(CustomLadder {
            name,
            f: Arc::new(f),
            first_nonzero,
        }))
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            LadderFamily::One => FamilyKind::One,
            LadderFamily::Shifted => FamilyKind::Shifted,
            LadderFamily::Cubic => FamilyKind::Cubic,
            LadderFamily::Custom(_) => FamilyKind::Custom,
        }
    }

    pub fn name(&self) -> String {
        match self {
            LadderFamily::Custom(c) => c.name.clone(),
            other => other.kind().to_string(),
        }
    }

    /// `f(n)` for `n >= 1`; `f(0)` is never used and reported as zero.
    pub fn f(&self, n: usize) -> T {
        if n == 0 {
            return T::zero();
        }
        let nf = T::from_usize(n);
        match self {
            LadderFamily::One => T::one(),
            LadderFamily::Shifted => ((nf - T::one()) / nf).sqrt(),
            LadderFamily::Cubic => (nf - T::lit(2.0)) * ((nf - T::one()) / nf).sqrt(),
            LadderFamily::Custom(c) => (c.f)(n),
        }
    }

    /// Smallest `n` with `f(n) != 0` (1, 2 or 3).
    pub fn first_nonzero(&self) -> usize {
        match self {
            LadderFamily::One => 1,
            LadderFamily::Shifted => 2,
            LadderFamily::Cubic => 3,
            LadderFamily::Custom(c) => c.first_nonzero,
        }
    }

    /// Lowest Landau index populated by the eigenstates.
    pub fn support_start(&self) -> usize {
        self.first_nonzero() - 1
    }
}

/// Lowering coefficient `c_n` in `A^- Psi_n = c_n Psi_{n-1}`.
pub fn c_n<T: Real>(family: &LadderFamily<T>, n: usize) -> T {
    match n {
        0 => T::zero(),
        1 => family.f(1) * T::FRAC_1_SQRT_2(),
        _ => T::from_usize(n).sqrt() * family.f(n),
    }
}

/// The upper-block function forced by consistency of the two blocks:
/// returns `f1(n - 2) = sqrt(n) f(n) / sqrt(n - 1)`.
pub fn f1_consistency<T: Real>(family: &LadderFamily<T>, n: usize) -> Result<T> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "f1 consistency needs n >= 2, got {n}"
        )));
    }
    Ok(upper_block_factor(family, n))
}

fn upper_block_factor<T: Real>(family: &LadderFamily<T>, n: usize) -> T {
    T::from_usize(n).sqrt() * family.f(n) / T::from_usize(n - 1).sqrt()
}

/// Pseudospinor components of a Landau expansion in the oscillator basis.
///
/// `upper[j]` multiplies `phi_j` in the upper component, `lower[j]` multiplies
/// `i phi_j` in the lower one. The spinor weights are folded in.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorComponents<T> {
    pub upper: Vec<Complex<T>>,
    pub lower: Vec<Complex<T>>,
}

impl<T: Real> SpinorComponents<T> {
    pub fn from_landau(coeffs: &[Complex<T>]) -> Self {
        let lower = coeffs
            .iter()
            .enumerate()
            .map(|(n, &a)| a * spinor_weight::<T>(n))
            .collect();
        let upper = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &a)| a * spinor_weight::<T>(n))
            .collect();
        Self { upper, lower }
    }
}

/// A normalized, truncated eigenstate of `A^-`.
#[derive(Debug, Clone)]
pub struct CoherentState<T> {
    family: LadderFamily<T>,
    alpha: Complex<T>,
    cfg: PhysicsConfig<T>,
    coeffs: Vec<Complex<T>>,
    tail_bound: T,
}

impl<T: Real> CoherentState<T> {
    pub fn new(
        family: LadderFamily<T>,
        alpha: Complex<T>,
        cfg: PhysicsConfig<T>,
        tol: T,
    ) -> Result<Self> {
        build_coefficients(family, alpha, cfg, tol)
    }

    pub fn family(&self) -> &LadderFamily<T> {
        &self.family
    }

    pub fn alpha(&self) -> Complex<T> {
        self.alpha
    }

    pub fn cfg(&self) -> &PhysicsConfig<T> {
        &self.cfg
    }

    /// Landau coefficients `a_0, ..., a_N`.
    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Highest Landau index kept.
    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Geometric estimate of the discarded probability.
    pub fn tail_bound(&self) -> T {
        self.tail_bound
    }

    pub fn norm_sqr(&self) -> T {
        self.coeffs.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Same coefficients under another field configuration (they do not depend on it).
    pub fn with_config(&self, cfg: PhysicsConfig<T>) -> Self {
        Self {
            cfg,
            ..self.clone()
        }
    }

    pub fn components(&self) -> SpinorComponents<T> {
        SpinorComponents::from_landau(&self.coeffs)
    }

    /// `|| A^- Psi - alpha Psi ||_2` on the truncated vector.
    pub fn eigen_residual(&self) -> T {
        let lowered = apply_annihilation(&self.family, &self.coeffs);
        lowered
            .iter()
            .zip(&self.coeffs)
            .map(|(&b, &a)| (b - a * self.alpha).norm_sqr())
            .sum::<T>()
            .sqrt()
    }
}

// Running sum of exp(2 (lw - max)) that rescales whenever the max moves.
struct ScaledSum<T> {
    max: T,
    sum: T,
}

impl<T: Real> ScaledSum<T> {
    fn push(&mut self, lw: T) {
        if lw > self.max {
            self.sum = self.sum * (T::lit(2.0) * (self.max - lw)).exp() + T::one();
            self.max = lw;
        } else {
            self.sum += (T::lit(2.0) * (lw - self.max)).exp();
        }
    }

    /// Relative tail after a term `lw` whose squared ratio to its predecessor is `q < 1`.
    fn geometric_tail(&self, lw: T, q: T) -> T {
        (T::lit(2.0) * (lw - self.max)).exp() * q / (T::one() - q) / self.sum
    }
}

/// Builds the normalized eigenstate of `A^-` with eigenvalue `alpha`.
///
/// Unnormalized weights, by support start `s`:
/// * `s = 0`: `1` at `n = 0`, `sqrt 2 alpha^n / (sqrt(n!) [f(n)]!)` at `n >= 1`;
/// * `s = 1`: `alpha^n / (sqrt((n+1)!) [g(n)]!)` at index `n + 1`, `g(n) = f(n+1)`;
/// * `s = 2`: `alpha^n / (sqrt((n+2)!) [h(n)]!)` at index `n + 2`, `h(n) = f(n+2)`.
///
/// Magnitudes are accumulated as logarithms and exponentiated relative to
/// the largest one.
pub fn build_coefficients<T: Real>(
    family: LadderFamily<T>,
    alpha: Complex<T>,
    cfg: PhysicsConfig<T>,
    tol: T,
) -> Result<CoherentState<T>> {
    if !(tol > T::zero() && tol <= T::lit(MAX_TOL)) {
        return Err(Error::Domain(format!(
            "tolerance must lie in (0, 1e-8], got {tol}"
        )));
    }
    if !alpha.re.is_finite() || !alpha.im.is_finite() {
        return Err(Error::Domain(format!("alpha must be finite, got {alpha}")));
    }
    let start = family.support_start();
    let r = alpha.norm();

    if r == T::zero() {
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); start + 1];
        coeffs[start] = Complex::new(T::one(), T::zero());
        return Ok(CoherentState {
            family,
            alpha,
            cfg,
            coeffs,
            tail_bound: T::zero(),
        });
    }

    let ln_r = r.ln();
    let half_ln2 = T::LN_2() / T::lit(2.0);
    let mut log_w: Vec<T> = Vec::new();
    let mut signs: Vec<i8> = Vec::new();
    let mut product = SignedLogValue::<T>::one();
    let mut scaled = ScaledSum {
        max: T::neg_infinity(),
        sum: T::zero(),
    };
    let mut stop_at: Option<usize> = None;
    let mut tail = T::infinity();

    for k in 0.. {
        let index = start + k;
        if k > 0 {
            product = product * SignedLogValue::from_value(family.f(k + start));
        }
        if product.is_zero() {
            return Err(Error::InvalidFamily(format!(
                "{}: ladder product vanishes at n = {}",
                family.name(),
                k + start
            )));
        }
        let mut lw = T::from_usize(k) * ln_r
            - log_factorial::<T>(index) / T::lit(2.0)
            - product.log_magnitude;
        if start == 0 && k > 0 {
            lw += half_ln2;
        }
        scaled.push(lw);
        if let Some(&prev) = log_w.last() {
            if lw < prev {
                let q = (T::lit(2.0) * (lw - prev)).exp();
                tail = scaled.geometric_tail(lw, q);
                if stop_at.is_none() && tail < tol {
                    stop_at = Some(k + GUARD_TERMS);
                }
            }
        }
        log_w.push(lw);
        signs.push(product.sign);

        if stop_at == Some(k) || (index == N_MAX && stop_at.is_some()) {
            break;
        }
        if index == N_MAX {
            return Err(Error::TruncationNonConvergence {
                family: family.name(),
                abs_alpha: r.to_f64_lossy(),
                cap: N_MAX,
                tail: tail.to_f64_lossy(),
            });
        }
    }

    // alpha / |alpha| keeps axis-aligned eigenvalues exactly real or imaginary.
    let unit = alpha / r;
    let mut phase = Complex::new(T::one(), T::zero());
    let mut coeffs = vec![Complex::new(T::zero(), T::zero()); start];
    for (k, (&lw, &sign)) in log_w.iter().zip(&signs).enumerate() {
        if k > 0 {
            phase = phase * unit;
        }
        let mag = T::from(sign).unwrap() * (lw - scaled.max).exp();
        coeffs.push(phase * mag);
    }
    let norm = coeffs.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt();
    for a in &mut coeffs {
        *a = *a / norm;
    }

    Ok(CoherentState {
        family,
        alpha,
        cfg,
        coeffs,
        tail_bound: tail,
    })
}

/// `A^-` on a Landau coefficient vector: `b_{n-1} = c_n a_n`.
pub fn apply_annihilation<T: Real>(
    family: &LadderFamily<T>,
    coeffs: &[Complex<T>],
) -> Vec<Complex<T>> {
    let mut out = vec![Complex::new(T::zero(), T::zero()); coeffs.len()];
    for n in 1..coeffs.len() {
        out[n - 1] = coeffs[n] * c_n(family, n);
    }
    out
}

/// `A^-` in its 2x2 block form acting on the pseudospinor components:
/// the upper block is `f1(N) theta^-`, the lower block `f(N + 1) theta^-`.
pub fn apply_block_annihilation<T: Real>(
    family: &LadderFamily<T>,
    comps: &SpinorComponents<T>,
) -> SpinorComponents<T> {
    let lower_op = |v: &[Complex<T>], factor: &dyn Fn(usize) -> T| -> Vec<Complex<T>> {
        let mut out = vec![Complex::new(T::zero(), T::zero()); v.len()];
        for m in 0..v.len().saturating_sub(1) {
            // theta^- phi_{m+1} = sqrt(m+1) phi_m, then the diagonal factor at N = m
            out[m] = v[m + 1] * (T::from_usize(m + 1).sqrt() * factor(m));
        }
        out
    };
    let upper = lower_op(&comps.upper, &|m| upper_block_factor(family, m + 2));
    let lower = lower_op(&comps.lower, &|m| family.f(m + 1));
    SpinorComponents { upper, lower }
}
