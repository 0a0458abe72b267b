//! Physical observables of coherent states.
//!
//! The index-space contractions in this module are the reference values.
//! [`closed_form`] re-derives the same quantities from family-specific
//! series and is used as a regression check against them.

pub mod closed_form;

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{
    ho_table_into, ladder_matrix_element, momentum_squared_element, position_squared_element,
    quadrature, spinor_weight, OscillatorOperator, PhysicsConfig, N_MAX,
};
use crate::coherent::{CoherentState, SpinorComponents};
use crate::error::{Error, Result};
use crate::scalar::Real;

pub use closed_form::{density_closed_form, expectation_closed_form, SeriesForm};

/// Observables with a direct index-space representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Observable {
    #[serde(rename = "z")]
    Z,
    #[serde(rename = "z2")]
    Z2,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "p2")]
    P2,
    #[serde(rename = "H")]
    H,
}

impl Observable {
    pub const ALL: [Observable; 5] = [
        Observable::Z,
        Observable::Z2,
        Observable::P,
        Observable::P2,
        Observable::H,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Z => "z",
            Observable::Z2 => "z2",
            Observable::P => "p",
            Observable::P2 => "p2",
            Observable::H => "H",
        }
    }

    // largest |m - n| with a nonzero oscillator matrix element
    fn bandwidth(self) -> usize {
        match self {
            Observable::Z | Observable::P => 1,
            Observable::Z2 | Observable::P2 => 2,
            Observable::H => 0,
        }
    }
}

/// Means, variances and the uncertainty product `var_z * var_p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanValues<T> {
    pub z_mean: T,
    pub z2_mean: T,
    pub p_mean: T,
    pub p2_mean: T,
    pub var_z: T,
    pub var_p: T,
    pub product: T,
}

fn oscillator_element<T: Real>(obs: Observable, m: usize, n: usize) -> Complex<T> {
    let zero = T::zero();
    match obs {
        Observable::Z => Complex::new(
            ladder_matrix_element(OscillatorOperator::Position, m, n),
            zero,
        ),
        Observable::P => Complex::new(
            zero,
            ladder_matrix_element(OscillatorOperator::MomentumImag, m, n),
        ),
        Observable::Z2 => Complex::new(position_squared_element(m, n), zero),
        Observable::P2 => Complex::new(momentum_squared_element(m, n), zero),
        Observable::H => Complex::new(zero, zero),
    }
}

/// `<Psi_m| S |Psi_n>` for a component-wise single-mode operator `S`:
/// `w_m w_n (<phi_{m-1}|S|phi_{n-1}> + <phi_m|S|phi_n>)`, the upper term
/// dropped when either index is zero. For `H` the diagonal `sqrt(n omega)`.
pub fn spinor_matrix_element<T: Real>(
    obs: Observable,
    cfg: &PhysicsConfig<T>,
    m: usize,
    n: usize,
) -> Complex<T> {
    if obs == Observable::H {
        let e = if m == n {
            (T::from_usize(n) * cfg.omega()).sqrt()
        } else {
            T::zero()
        };
        return Complex::new(e, T::zero());
    }
    let mut s = oscillator_element::<T>(obs, m, n);
    if m > 0 && n > 0 {
        s = s + oscillator_element::<T>(obs, m - 1, n - 1);
    }
    s * (spinor_weight::<T>(m) * spinor_weight::<T>(n))
}

/// `<Psi_alpha| S |Psi_alpha>` contracted over the truncated coefficient vector.
pub fn expectation_generic<T: Real>(state: &CoherentState<T>, obs: Observable) -> Result<T> {
    if obs == Observable::H {
        state.cfg().validate()?;
    }
    let a = state.coeffs();
    let band = obs.bandwidth();
    let mut acc = T::zero();
    for (m, am) in a.iter().enumerate() {
        let lo = m.saturating_sub(band);
        let hi = (m + band).min(a.len() - 1);
        for (n, an) in a.iter().enumerate().take(hi + 1).skip(lo) {
            let s = spinor_matrix_element(obs, state.cfg(), m, n);
            acc += (am.conj() * an * s).re;
        }
    }
    Ok(acc)
}

pub fn uncertainty_product<T: Real>(state: &CoherentState<T>) -> Result<MeanValues<T>> {
    let z_mean = expectation_generic(state, Observable::Z)?;
    let z2_mean = expectation_generic(state, Observable::Z2)?;
    let p_mean = expectation_generic(state, Observable::P)?;
    let p2_mean = expectation_generic(state, Observable::P2)?;
    let var_z = z2_mean - z_mean * z_mean;
    let var_p = p2_mean - p_mean * p_mean;
    Ok(MeanValues {
        z_mean,
        z2_mean,
        p_mean,
        p2_mean,
        var_z,
        var_p,
        product: var_z * var_p,
    })
}

/// `sum_n sqrt(n omega) |a_n|^2` in units of `hbar v_F`.
pub fn mean_energy<T: Real>(state: &CoherentState<T>) -> Result<T> {
    expectation_generic(state, Observable::H)
}

// z-space density |U|^2 + |L|^2 from a phi table covering the state.
fn density_from_table<T: Real>(comps: &SpinorComponents<T>, phi: &[T]) -> T {
    let amp = |v: &[Complex<T>]| {
        v.iter()
            .zip(phi)
            .fold(Complex::new(T::zero(), T::zero()), |acc, (&c, &p)| {
                acc + c * p
            })
    };
    amp(&comps.upper).norm_sqr() + amp(&comps.lower).norm_sqr()
}

/// Probability density `Psi^dagger Psi` at `x`.
///
/// Equivalent to the double sum `sum_{m,n} conj(a_m) a_n w_m w_n rho_{m,n}(x)`
/// but evaluated as the squared norm of the two component amplitudes.
pub fn probability_density<T: Real>(state: &CoherentState<T>, x: T) -> Result<T> {
    let mut phi = vec![T::zero(); state.trunc_order() + 1];
    ho_table_into(state.cfg().z_of_x(x), &mut phi)?;
    Ok(state.cfg().density_scale() * density_from_table(&state.components(), &phi))
}

/// `integral rho dx` over the whole support of the state.
pub fn density_integral<T: Real>(state: &CoherentState<T>) -> Result<T> {
    let comps = state.components();
    let mut phi = vec![T::zero(); state.trunc_order() + 1];
    // dx = sqrt(2/omega) dz cancels the density scale, so integrate in z.
    quadrature(
        |z| {
            ho_table_into(z, &mut phi).expect("table size checked at construction");
            density_from_table(&comps, &phi)
        },
        state.trunc_order(),
    )
}

/// Oscillator functions tabulated on a fixed x-grid, shared by every state
/// evaluated on that grid under the same configuration.
#[derive(Debug, Clone)]
pub struct OscillatorGrid<T> {
    cfg: PhysicsConfig<T>,
    xs: Vec<T>,
    n_max: usize,
    // row j holds phi_0..phi_{n_max} at xs[j]
    table: Vec<Vec<T>>,
}

impl<T: Real> OscillatorGrid<T> {
    pub fn new(cfg: PhysicsConfig<T>, xs: Vec<T>, n_max: usize) -> Result<Self> {
        if n_max > N_MAX {
            return Err(Error::Capacity {
                requested: n_max,
                cap: N_MAX,
            });
        }
        let table = xs
            .par_iter()
            .map(|&x| {
                let mut row = vec![T::zero(); n_max + 1];
                ho_table_into(cfg.z_of_x(x), &mut row).map(|_| row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cfg,
            xs,
            n_max,
            table,
        })
    }

    pub fn xs(&self) -> &[T] {
        &self.xs
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Density of `state` at every grid point, in grid order.
    pub fn density(&self, state: &CoherentState<T>) -> Result<Vec<T>> {
        if state.trunc_order() > self.n_max {
            return Err(Error::Capacity {
                requested: state.trunc_order(),
                cap: self.n_max,
            });
        }
        if state.cfg() != &self.cfg {
            return Err(Error::Config(
                "state and grid use different configurations".into(),
            ));
        }
        let comps = state.components();
        let scale = self.cfg.density_scale();
        Ok(self
            .table
            .par_iter()
            .map(|row| scale * density_from_table(&comps, row))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::landau_component;
    use crate::coherent::{build_coefficients, LadderFamily};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    type C = Complex<f64>;

    fn state(family: LadderFamily<f64>, alpha: C, b0: f64) -> CoherentState<f64> {
        let cfg = PhysicsConfig::new(b0, 1.0).unwrap();
        build_coefficients(family, alpha, cfg, 1e-15).unwrap()
    }

    #[test]
    fn vacuum_limits() {
        let zero = C::new(0.0, 0.0);
        let one = state(LadderFamily::One, zero, 2.0);
        assert_eq!(expectation_generic(&one, Observable::Z).unwrap(), 0.0);
        assert_relative_eq!(
            uncertainty_product(&one).unwrap().product,
            0.25,
            max_relative = 1e-15
        );

        let sh = state(LadderFamily::Shifted, zero, 2.0);
        let mv = uncertainty_product(&sh).unwrap();
        assert_relative_eq!(mv.z2_mean, 1.0, max_relative = 1e-15);
        assert_relative_eq!(mv.p2_mean, 1.0, max_relative = 1e-15);
        assert_relative_eq!(mv.product, 1.0, max_relative = 1e-15);

        let cu = state(LadderFamily::Cubic, zero, 2.0);
        let mv = uncertainty_product(&cu).unwrap();
        assert_relative_eq!(mv.z2_mean, 2.0, max_relative = 1e-15);
        assert_relative_eq!(mv.product, 4.0, max_relative = 1e-12);
    }

    // mpmath index-space evaluation at 40 digits, alpha = 1.2 exp(i pi/5), omega = 4
    #[test]
    fn extended_precision_reference() {
        let alpha = C::from_polar(1.2, PI / 5.0);
        let cases = [
            (
                LadderFamily::One,
                [
                    1.2432021658862030808,
                    2.0818627208536488186,
                    0.90323924442470201161,
                    1.3195451274143724379,
                    2.3009454511335776632,
                    0.27014204127474975995,
                ],
            ),
            (
                LadderFamily::Shifted,
                [
                    1.5322177262419489097,
                    2.9790742640124248268,
                    1.1132213402784515449,
                    1.9009257359875751732,
                    3.0308760416269172806,
                    0.41776345933467982279,
                ],
            ),
            (
                LadderFamily::Cubic,
                [
                    1.1618511761547080373,
                    2.683349988891263967,
                    0.84413429068944344807,
                    2.3149487571560120303,
                    3.1404413820074233185,
                    2.1367046247067694725,
                ],
            ),
        ];
        for (family, want) in cases {
            let st = state(family, alpha, 2.0);
            let mv = uncertainty_product(&st).unwrap();
            let got = [
                mv.z_mean,
                mv.z2_mean,
                mv.p_mean,
                mv.p2_mean,
                mean_energy(&st).unwrap(),
                mv.product,
            ];
            for (g, w) in got.iter().zip(want) {
                assert_relative_eq!(*g, w, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn axis_aligned_alpha_gives_exact_zeros() {
        for family in [
            LadderFamily::One,
            LadderFamily::Shifted,
            LadderFamily::Cubic,
        ] {
            for r in [0.5, 2.0, 3.0] {
                let real = state(family.clone(), C::new(r, 0.0), 2.0);
                assert_eq!(expectation_generic(&real, Observable::P).unwrap(), 0.0);
                let imag = state(family.clone(), C::new(0.0, -r), 2.0);
                assert_eq!(expectation_generic(&imag, Observable::Z).unwrap(), 0.0);
            }
        }
    }

    #[test]
    fn energy_examples() {
        let zero = C::new(0.0, 0.0);
        assert_eq!(
            mean_energy(&state(LadderFamily::One, zero, 2.0)).unwrap(),
            0.0
        );
        assert_eq!(
            mean_energy(&state(LadderFamily::Shifted, zero, 2.0)).unwrap(),
            2.0
        );
        let a = state(LadderFamily::One, C::new(1.0, 0.0), 2.0);
        let b = a.with_config(PhysicsConfig::new(0.5, 1.0).unwrap());
        assert_eq!(mean_energy(&a).unwrap(), 2.0 * mean_energy(&b).unwrap());
    }

    #[test]
    fn density_of_ground_state() {
        let st = state(LadderFamily::One, C::new(0.0, 0.0), 0.125);
        for x in [-12.0, -8.0, -3.3, 0.0, 2.5] {
            let psi0 = landau_component(st.cfg(), 0, x).unwrap();
            assert_relative_eq!(
                probability_density(&st, x).unwrap(),
                psi0 * psi0,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn density_matches_double_sum() {
        let st = state(LadderFamily::Shifted, C::from_polar(1.7, 0.4), 2.0);
        let a = st.coeffs();
        for x in [-1.3, -0.5, 0.2, 1.1] {
            let mut sum = 0.0;
            for m in 0..a.len() {
                for n in 0..a.len() {
                    let w = spinor_weight::<f64>(m) * spinor_weight::<f64>(n);
                    let rho = crate::basis::rho_matrix_element(st.cfg(), n, m, x).unwrap();
                    sum += (a[m].conj() * a[n]).re * w * rho;
                }
            }
            assert_relative_eq!(
                probability_density(&st, x).unwrap(),
                sum,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn density_normalizes() {
        for (family, r) in [
            (LadderFamily::One, 4.0),
            (LadderFamily::Shifted, 5.0),
            (LadderFamily::Cubic, 50.0),
        ] {
            for b0 in [0.125, 2.0] {
                let st = state(family.clone(), C::from_polar(r, FRAC_PI_4), b0);
                assert_abs_diff_eq!(density_integral(&st).unwrap(), 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn grid_density_matches_pointwise() {
        let st = state(LadderFamily::One, C::from_polar(2.0, FRAC_PI_2), 2.0);
        let xs: Vec<f64> = (0..41).map(|j| -4.0 + 0.2 * j as f64).collect();
        let grid = OscillatorGrid::new(*st.cfg(), xs.clone(), st.trunc_order()).unwrap();
        let rho = grid.density(&st).unwrap();
        for (x, r) in xs.iter().zip(&rho) {
            assert_relative_eq!(
                *r,
                probability_density(&st, *x).unwrap(),
                max_relative = 1e-14
            );
        }
        let other = st.with_config(PhysicsConfig::new(1.0, 1.0).unwrap());
        assert!(grid.density(&other).is_err());
    }

    #[test]
    fn spinor_elements_are_hermitian() {
        let cfg = PhysicsConfig::new(1.0, 0.0).unwrap();
        for obs in Observable::ALL {
            for m in 0..8 {
                for n in 0..8 {
                    let a = spinor_matrix_element::<f64>(obs, &cfg, m, n);
                    let b = spinor_matrix_element::<f64>(obs, &cfg, n, m);
                    assert!((a - b.conj()).norm() <= 1e-15);
                }
            }
        }
    }
}
