//! Landau-level basis: oscillator eigenfunctions in the shifted coordinate,
//! spinor bookkeeping, ladder matrix elements and the `rho_{n,m}` products.
//!
//! Units: `hbar = c = e = v_F = 1`, so `omega = 2 * b0` and energies are
//! `sqrt(n * omega)`. Every evaluation happens in the dimensionless
//! coordinate `z = sqrt(omega / 2) * (x + 2k / omega)`; x-space functions
//! carry the extra factor `(omega / 2)^(1/4)`.

pub mod quadrature;

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use quadrature::{integrate_interval, quadrature, quadrature_many};

/// Largest number of basis states any state or table may use.
pub const N_MAX: usize = 500;

/// Magnetic field, transverse wavenumber and the derived `omega = 2 * b0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicsConfig<T> {
    b0: T,
    k: T,
    omega: T,
}

impl<T: Real> PhysicsConfig<T> {
    pub fn new(b0: T, k: T) -> Result<Self> {
        if !(b0 > T::zero()) || !b0.is_finite() {
            return Err(Error::Config(format!(
                "b0 must be finite and positive, got {b0}"
            )));
        }
        if !k.is_finite() {
            return Err(Error::Config(format!("k must be finite, got {k}")));
        }
        Ok(Self {
            b0,
            k,
            omega: T::lit(2.0) * b0,
        })
    }

    pub fn b0(&self) -> T {
        self.b0
    }

    pub fn k(&self) -> T {
        self.k
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    /// Centre of the shifted oscillators, `x0 = -2k / omega`.
    pub fn center(&self) -> T {
        -T::lit(2.0) * self.k / self.omega
    }

    pub fn z_of_x(&self, x: T) -> T {
        (self.omega / T::lit(2.0)).sqrt() * (x - self.center())
    }

    pub fn x_of_z(&self, z: T) -> T {
        (T::lit(2.0) / self.omega).sqrt() * z + self.center()
    }

    /// Amplitude factor `(omega / 2)^(1/4)` between z-space and x-space functions.
    pub fn amplitude_scale(&self) -> T {
        (self.omega / T::lit(2.0)).sqrt().sqrt()
    }

    /// Density factor `sqrt(omega / 2)`, the square of [`Self::amplitude_scale`].
    pub fn density_scale(&self) -> T {
        (self.omega / T::lit(2.0)).sqrt()
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.omega > T::zero() && self.omega.is_finite() {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "omega must be finite and positive, got {}",
                self.omega
            )))
        }
    }
}

/// One Landau spinor `Psi_n`: upper component `psi_{n-1}` (absent for
/// `n = 0`), lower component `i psi_n`, common weight `1` or `1/sqrt 2`.
///
/// The plane-wave factor `exp(iky)` is common to every state and drops out
/// of all observables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorBasisState<T> {
    pub n: usize,
    pub upper_index: Option<usize>,
    pub lower_index: usize,
    pub component_weight: T,
    pub energy: T,
}

impl<T: Real> SpinorBasisState<T> {
    pub fn new(n: usize, cfg: &PhysicsConfig<T>) -> Self {
        Self {
            n,
            upper_index: n.checked_sub(1),
            lower_index: n,
            component_weight: spinor_weight(n),
            energy: landau_energy(n, cfg),
        }
    }
}

/// Component weight of `Psi_n`: `1` for `n = 0`, `1/sqrt 2` otherwise.
#[inline]
pub fn spinor_weight<T: Real>(n: usize) -> T {
    if n == 0 {
        T::one()
    } else {
        T::FRAC_1_SQRT_2()
    }
}

/// Electron-branch Landau energy `sqrt(n * omega)` in units of `hbar v_F`.
pub fn landau_energy<T: Real>(n: usize, cfg: &PhysicsConfig<T>) -> T {
    (T::from_usize(n) * cfg.omega()).sqrt()
}

/// Eigenvalue of the lower-component Schrödinger operator `H^-`: `n * omega`.
pub fn lower_partner_eigenvalue<T: Real>(n: usize, cfg: &PhysicsConfig<T>) -> T {
    T::from_usize(n) * cfg.omega()
}

/// Eigenvalue of the upper-component Schrödinger operator `H^+`: `(n + 1) * omega`.
pub fn upper_partner_eigenvalue<T: Real>(n: usize, cfg: &PhysicsConfig<T>) -> T {
    T::from_usize(n + 1) * cfg.omega()
}

fn check_capacity(n: usize) -> Result<()> {
    if n > N_MAX {
        Err(Error::Capacity {
            requested: n,
            cap: N_MAX,
        })
    } else {
        Ok(())
    }
}

/// Fills `out` with `phi_0(z), ..., phi_{out.len()-1}(z)` using the
/// normalized three-term recurrence.
pub fn ho_table_into<T: Real>(z: T, out: &mut [T]) -> Result<()> {
    let Some(last) = out.len().checked_sub(1) else {
        return Ok(());
    };
    check_capacity(last)?;
    // pi^(-1/4)
    let norm = T::PI().sqrt().sqrt().recip();
    out[0] = norm * (-z * z / T::lit(2.0)).exp();
    if last == 0 {
        return Ok(());
    }
    out[1] = T::SQRT_2() * z * out[0];
    for n in 1..last {
        let np1 = T::from_usize(n + 1);
        out[n + 1] =
            z * (T::lit(2.0) / np1).sqrt() * out[n] - (T::from_usize(n) / np1).sqrt() * out[n - 1];
    }
    Ok(())
}

/// `phi_0(z), ..., phi_{n_max}(z)`.
pub fn ho_table<T: Real>(n_max: usize, z: T) -> Result<Vec<T>> {
    check_capacity(n_max)?;
    let mut out = vec![T::zero(); n_max + 1];
    ho_table_into(z, &mut out)?;
    Ok(out)
}

/// L²-normalized oscillator eigenfunction `phi_n(z)`.
pub fn ho_eigenfunction<T: Real>(n: usize, z: T) -> Result<T> {
    Ok(ho_table(n, z)?[n])
}

/// x-space eigenfunction `psi_n(x) = (omega/2)^(1/4) phi_n(z(x))`.
pub fn landau_component<T: Real>(cfg: &PhysicsConfig<T>, n: usize, x: T) -> Result<T> {
    Ok(cfg.amplitude_scale() * ho_eigenfunction(n, cfg.z_of_x(x))?)
}

/// Single-mode operators with real (or purely imaginary) matrix elements in
/// the oscillator basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OscillatorOperator {
    /// `theta^- = (z + d/dz) / sqrt 2`
    Lower,
    /// `theta^+ = (z - d/dz) / sqrt 2`
    Raise,
    /// `z = (theta^+ + theta^-) / sqrt 2`
    Position,
    /// Real coefficient `c` of `<m|p|n> = i c` with `p = i (theta^+ - theta^-) / sqrt 2`.
    MomentumImag,
}

/// `<phi_m| op |phi_n>` (for [`OscillatorOperator::MomentumImag`], the
/// imaginary part).
pub fn ladder_matrix_element<T: Real>(op: OscillatorOperator, m: usize, n: usize) -> T {
    let down = if m + 1 == n {
        T::from_usize(n).sqrt()
    } else {
        T::zero()
    };
    let up = if m == n + 1 {
        T::from_usize(n + 1).sqrt()
    } else {
        T::zero()
    };
    match op {
        OscillatorOperator::Lower => down,
        OscillatorOperator::Raise => up,
        OscillatorOperator::Position => (up + down) * T::FRAC_1_SQRT_2(),
        OscillatorOperator::MomentumImag => (up - down) * T::FRAC_1_SQRT_2(),
    }
}

/// `<phi_m|z^2|phi_n>` composed from the tridiagonal position elements.
pub fn position_squared_element<T: Real>(m: usize, n: usize) -> T {
    composed_element(OscillatorOperator::Position, m, n)
}

/// `<phi_m|p^2|phi_n>` composed from the momentum elements (`(i c)(i c') = -c c'`).
pub fn momentum_squared_element<T: Real>(m: usize, n: usize) -> T {
    -composed_element::<T>(OscillatorOperator::MomentumImag, m, n)
}

fn composed_element<T: Real>(op: OscillatorOperator, m: usize, n: usize) -> T {
    let mut acc = T::zero();
    for k in [n.checked_sub(1), Some(n + 1)].into_iter().flatten() {
        acc += ladder_matrix_element::<T>(op, m, k) * ladder_matrix_element::<T>(op, k, n);
    }
    acc
}

/// `rho_{n,m}(x) = psi^+_{n-1} psi^+_{m-1} + psi^-_n psi^-_m`, with
/// `psi^+_{-1} = 0`.
pub fn rho_matrix_element<T: Real>(cfg: &PhysicsConfig<T>, n: usize, m: usize, x: T) -> Result<T> {
    let table = ho_table(n.max(m), cfg.z_of_x(x))?;
    Ok(rho_from_table(cfg, &table, n, m))
}

/// `rho_{n,m}` from a precomputed `phi` table at the point of interest.
pub fn rho_from_table<T: Real>(cfg: &PhysicsConfig<T>, phi: &[T], n: usize, m: usize) -> T {
    let upper = match (n.checked_sub(1), m.checked_sub(1)) {
        (Some(a), Some(b)) => phi[a] * phi[b],
        _ => T::zero(),
    };
    cfg.density_scale() * (upper + phi[n] * phi[m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn cfg(b0: f64, k: f64) -> PhysicsConfig<f64> {
        PhysicsConfig::new(b0, k).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(PhysicsConfig::new(0.0_f64, 1.0).is_err());
        assert!(PhysicsConfig::new(-1.0_f64, 1.0).is_err());
        assert!(PhysicsConfig::new(1.0_f64, f64::NAN).is_err());
        let c = cfg(2.0, 1.0);
        assert_eq!(c.omega(), 4.0);
        assert_eq!(c.center(), -0.5);
        assert_abs_diff_eq!(c.x_of_z(c.z_of_x(0.37)), 0.37, epsilon = 1e-15);
    }

    #[test]
    fn spinor_structure() {
        let c = cfg(2.0, 1.0);
        let s0 = SpinorBasisState::new(0, &c);
        assert_eq!(s0.upper_index, None);
        assert_eq!(s0.component_weight, 1.0);
        assert_eq!(s0.energy, 0.0);
        let s3 = SpinorBasisState::new(3, &c);
        assert_eq!(s3.upper_index, Some(2));
        assert_eq!(s3.lower_index, 3);
        assert_eq!(s3.component_weight, std::f64::consts::FRAC_1_SQRT_2);
        assert_eq!(s3.energy, 12.0_f64.sqrt());
    }

    #[test]
    fn partner_spectra_line_up() {
        let c = cfg(0.125, 1.0);
        assert_eq!(lower_partner_eigenvalue(0, &c), 0.0);
        for n in 1..=N_MAX {
            let e = lower_partner_eigenvalue(n, &c);
            assert_eq!(e, upper_partner_eigenvalue(n - 1, &c));
            assert_eq!(e, n as f64 * c.omega());
            assert_relative_eq!(landau_energy(n, &c).powi(2), e, max_relative = 1e-15);
        }
    }

    #[test]
    fn eigenfunction_values() {
        assert_relative_eq!(
            ho_eigenfunction(0, 0.0_f64).unwrap(),
            0.751_125_544_464_942_5,
            max_relative = 1e-15
        );
        assert_eq!(ho_eigenfunction(1, 0.0_f64).unwrap(), 0.0);
        // mpmath: H_n(z) exp(-z^2/2) / sqrt(2^n n! sqrt(pi)) at 50 digits
        let cases = [
            (7, 1.3, 0.40609866425190537779),
            (20, -2.1, 0.26067965669573665729),
            (50, 3.3, -0.10729348594001690556),
        ];
        for (n, z, want) in cases {
            assert_relative_eq!(ho_eigenfunction(n, z).unwrap(), want, max_relative = 1e-12);
        }
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            ho_eigenfunction(N_MAX + 1, 0.0_f64),
            Err(Error::Capacity { .. })
        ));
        assert!(ho_eigenfunction(N_MAX, 0.0_f64).is_ok());
    }

    #[test]
    fn ladder_elements() {
        use OscillatorOperator::*;
        assert_eq!(ladder_matrix_element::<f64>(Lower, 0, 1), 1.0);
        assert_eq!(ladder_matrix_element::<f64>(Lower, 2, 1), 0.0);
        assert_eq!(ladder_matrix_element::<f64>(Raise, 3, 2), 3.0_f64.sqrt());
        assert_relative_eq!(ladder_matrix_element::<f64>(Position, 3, 2), 1.5_f64.sqrt());
        assert_relative_eq!(ladder_matrix_element::<f64>(Position, 1, 2), 1.0);
        assert_relative_eq!(
            ladder_matrix_element::<f64>(MomentumImag, 3, 2),
            1.5_f64.sqrt()
        );
        assert_relative_eq!(ladder_matrix_element::<f64>(MomentumImag, 1, 2), -1.0);
    }

    #[test]
    fn pentadiagonal_compositions() {
        for n in 0..30usize {
            let nf = n as f64;
            assert_relative_eq!(
                position_squared_element::<f64>(n, n),
                nf + 0.5,
                max_relative = 1e-14
            );
            assert_relative_eq!(
                momentum_squared_element::<f64>(n, n),
                nf + 0.5,
                max_relative = 1e-14
            );
            let off = 0.5 * ((nf + 1.0) * (nf + 2.0)).sqrt();
            assert_relative_eq!(
                position_squared_element::<f64>(n + 2, n),
                off,
                max_relative = 1e-14
            );
            assert_relative_eq!(
                momentum_squared_element::<f64>(n + 2, n),
                -off,
                max_relative = 1e-14
            );
            assert_eq!(position_squared_element::<f64>(n + 1, n), 0.0);
            assert_eq!(position_squared_element::<f64>(n + 3, n), 0.0);
        }
    }

    #[test]
    fn quadrature_examples() {
        let norm: f64 = quadrature(|z: f64| ho_eigenfunction(0, z).unwrap().powi(2), 0).unwrap();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-10);
        let orth: f64 = quadrature(
            |z: f64| {
                let t = ho_table(5, z).unwrap();
                t[3] * t[5]
            },
            5,
        )
        .unwrap();
        assert_abs_diff_eq!(orth, 0.0, epsilon = 1e-10);
        let z2: f64 =
            quadrature(|z: f64| z * z * ho_eigenfunction(2, z).unwrap().powi(2), 2).unwrap();
        assert_abs_diff_eq!(z2, 2.5, epsilon = 1e-10);
    }

    #[test]
    fn rho_elements() {
        let c = cfg(2.0, 1.0);
        let x = 0.3;
        let p0 = landau_component(&c, 0, x).unwrap();
        assert_relative_eq!(
            rho_matrix_element(&c, 0, 0, x).unwrap(),
            p0 * p0,
            max_relative = 1e-15
        );
        // omega = 4, k = 1, x = -1/2 puts z at the origin; psi_1 vanishes there and
        // psi_0(x)^2 = (omega / (2 pi))^(1/2) from the x-space normalization
        let r11 = rho_matrix_element(&c, 1, 1, -0.5).unwrap();
        assert_relative_eq!(
            r11,
            (4.0 / (2.0 * std::f64::consts::PI)).sqrt(),
            max_relative = 1e-14
        );
        assert_eq!(
            rho_matrix_element(&c, 2, 5, 0.7).unwrap(),
            rho_matrix_element(&c, 5, 2, 0.7).unwrap()
        );
    }

    #[test]
    fn x_space_normalization() {
        for (b0, k) in [(0.125, 1.0), (2.0, 1.0), (0.7, -2.0)] {
            let c = cfg(b0, k);
            let half = (2.0 / c.omega()).sqrt() * quadrature::support_half_width::<f64>(12);
            for n in [0usize, 3, 12] {
                let norm = integrate_interval(
                    |x: f64| landau_component(&c, n, x).unwrap().powi(2),
                    c.center() - half,
                    c.center() + half,
                )
                .unwrap();
                assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn single_precision_recurrence() {
        let v = ho_eigenfunction(7, 1.3_f32).unwrap();
        assert_relative_eq!(v, 0.406_098_66_f32, max_relative = 1e-4);
    }
}
