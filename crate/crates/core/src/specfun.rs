//! Scalar special-function kernels: log-gamma, the hypergeometric series
//! `0F2(;b1,b2;x)`, and sign-aware log-space products of ladder-function values.

use std::ops::Mul;

use crate::coherent::LadderFamily;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Hard cap on the number of terms summed by any series in the crate.
pub const MAX_SERIES_TERMS: usize = 10_000;

/// Relative size below which a series term is considered negligible.
pub const SERIES_REL_THRESHOLD: f64 = 1e-17;

/// A real number stored as `sign * exp(log_magnitude)`.
///
/// `sign == 0` marks an exact zero; `log_magnitude` is then meaningless and
/// kept at negative infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue<T> {
    pub log_magnitude: T,
    pub sign: i8,
}

impl<T: Real> SignedLogValue<T> {
    pub fn one() -> Self {
        Self {
            log_magnitude: T::zero(),
            sign: 1,
        }
    }

    pub fn zero() -> Self {
        Self {
            log_magnitude: T::neg_infinity(),
            sign: 0,
        }
    }

    pub fn from_value(v: T) -> Self {
        if v == T::zero() {
            Self::zero()
        } else {
            Self {
                log_magnitude: v.abs().ln(),
                sign: if v > T::zero() { 1 } else { -1 },
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Exponentiates back to a plain scalar (may overflow to infinity).
    pub fn value(&self) -> T {
        match self.sign {
            0 => T::zero(),
            s => T::from(s).unwrap() * self.log_magnitude.exp(),
        }
    }

    /// Quotient `self / other`, or `None` when `other` is exactly zero.
    pub fn checked_div(self, other: Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        Some(Self {
            log_magnitude: self.log_magnitude - other.log_magnitude,
            sign: self.sign * other.sign,
        })
    }
}

impl<T: Real> Mul for SignedLogValue<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self {
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
            sign: self.sign * rhs.sign,
        }
    }
}

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_5;

// zeta(k) for k = 2..=29
const ZETA: [f64; 28] = [
    1.644_934_066_848_226_436_472_415,
    1.202_056_903_159_594_285_399_738,
    1.082_323_233_711_138_191_516_004,
    1.036_927_755_143_369_926_331_365,
    1.017_343_061_984_449_139_714_518,
    1.008_349_277_381_922_826_839_798,
    1.004_077_356_197_944_339_378_685,
    1.002_008_392_826_082_214_417_853,
    1.000_994_575_127_818_085_337_146,
    1.000_494_188_604_119_464_558_702,
    1.000_246_086_553_308_048_298_638,
    1.000_122_713_347_578_489_146_752,
    1.000_061_248_135_058_704_829_259,
    1.000_030_588_236_307_020_493_552,
    1.000_015_282_259_408_651_871_733,
    1.000_007_637_197_637_899_762_274,
    1.000_003_817_293_264_999_839_856,
    1.000_001_908_212_716_553_938_926,
    1.000_000_953_962_033_872_796_113,
    1.000_000_476_932_986_787_806_463,
    1.000_000_238_450_502_727_732_990,
    1.000_000_119_219_925_965_311_073,
    1.000_000_059_608_189_051_259_480,
    1.000_000_029_803_503_514_652_280,
    1.000_000_014_901_554_828_365_041,
    1.000_000_007_450_711_789_835_429,
    1.000_000_003_725_334_024_788_457,
    1.000_000_001_862_659_723_513_049,
];

// Taylor window around the zeros of ln Gamma at 1 and 2.
const ROOT_WINDOW: f64 = 0.2;

/// `ln Gamma(1 + eps)` for `|eps| <= 0.2` from its Maclaurin series.
fn log_gamma_1p_series<T: Real>(eps: T) -> T {
    let mut sum = -T::lit(EULER_GAMMA) * eps;
    let mut pow = -eps;
    for (i, &z) in ZETA.iter().enumerate() {
        let k = i + 2;
        pow *= -eps;
        sum += T::lit(z) * pow / T::from_usize(k);
    }
    sum
}

fn log_gamma_lanczos<T: Real>(x: T) -> T {
    let xm1 = x - T::one();
    let mut a = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += T::lit(c) / (xm1 + T::from_usize(i));
    }
    let t = xm1 + T::lit(LANCZOS_G) + T::lit(0.5);
    T::lit(0.5) * (T::TAU()).ln() + (xm1 + T::lit(0.5)) * t.ln() - t + a.ln()
}

/// Natural logarithm of the gamma function for positive arguments.
pub fn log_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "log_gamma requires a finite positive argument, got {x}"
        )));
    }
    if x == T::one() || x == T::lit(2.0) {
        return Ok(T::zero());
    }
    let window = T::lit(ROOT_WINDOW);
    let near_one = x - T::one();
    if near_one.abs() <= window {
        return Ok(log_gamma_1p_series(near_one));
    }
    let near_two = x - T::lit(2.0);
    if near_two.abs() <= window {
        return Ok(near_two.ln_1p() + log_gamma_1p_series(near_two));
    }
    if x < T::lit(0.5) {
        // Gamma(x) = Gamma(x + 1) / x
        return Ok(log_gamma_lanczos(x + T::one()) - x.ln());
    }
    Ok(log_gamma_lanczos(x))
}

/// `ln n!` for a nonnegative integer.
pub fn log_factorial<T: Real>(n: usize) -> T {
    // n + 1 >= 1 always lies in the domain.
    log_gamma(T::from_usize(n + 1)).expect("n + 1 is positive")
}

fn is_nonpositive_integer<T: Real>(b: T) -> bool {
    b <= T::zero() && b == b.round()
}

/// Sums `term(start), term(start + 1), ...` until two consecutive terms are
/// both below `SERIES_REL_THRESHOLD` times the running sum.
pub fn sum_series<T, F>(what: &str, start: usize, mut term: F) -> Result<T>
where
    T: Real,
    F: FnMut(usize) -> T,
{
    let threshold = T::lit(SERIES_REL_THRESHOLD);
    let mut sum = T::zero();
    let mut small_run = 0;
    for n in start..start + MAX_SERIES_TERMS {
        let t = term(n);
        if !t.is_finite() {
            return Err(Error::NonFinite(format!("{what}: term {n} is {t}")));
        }
        sum += t;
        if t.abs() <= threshold * sum.abs() {
            small_run += 1;
            if small_run == 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::SeriesNonConvergence {
        what: what.to_string(),
        terms: MAX_SERIES_TERMS,
    })
}

/// The generalized hypergeometric function `0F2(;b1,b2;x)` for `x >= 0`.
pub fn hyper_0f2<T: Real>(b1: T, b2: T, x: T) -> Result<T> {
    if is_nonpositive_integer(b1) || is_nonpositive_integer(b2) {
        return Err(Error::Domain(format!(
            "0F2 parameters must not be zero or negative integers (b1 = {b1}, b2 = {b2})"
        )));
    }
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "0F2 is evaluated only for finite nonnegative arguments, got {x}"
        )));
    }
    let mut t = T::one();
    sum_series("0F2", 0, |n| {
        if n > 0 {
            let k = T::from_usize(n - 1);
            t = t * x / ((b1 + k) * (b2 + k) * (k + T::one()));
        }
        t
    })
}

/// The product `f(1 + shift) * ... * f(n + shift)` in log space; `1` for `n = 0`.
///
/// `shift = 1` and `shift = 2` give the products of the shifted functions
/// `g(n) = f(n + 1)` and `h(n) = f(n + 2)`.
pub fn shifted_f_factorial<T: Real>(
    family: &LadderFamily<T>,
    shift: usize,
    n: usize,
) -> SignedLogValue<T> {
    (1..=n).fold(SignedLogValue::one(), |acc, j| {
        acc * SignedLogValue::from_value(family.f(j + shift))
    })
}

/// `[f(n)]! = f(1) * ... * f(n)`, with `[f(0)]! = 1`.
pub fn f_factorial<T: Real>(family: &LadderFamily<T>, n: usize) -> SignedLogValue<T> {
    shifted_f_factorial(family, 0, n)
}
