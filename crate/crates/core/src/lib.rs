//! Coherent states of a Dirac electron in graphene under a constant
//! magnetic field perpendicular to the sheet.
//!
//! The crate builds the eigenstates of a family of deformed annihilation
//! operators on the Landau-level spinor basis and evaluates their mean
//! values, uncertainty products, probability densities and mean energies.
//!
//! All numerical code is generic over [`Real`] (`f32` or `f64`); the
//! `*64` aliases below fix the scalar to `f64`, which is what the tolerances
//! in the test-suite are quoted for.
//!
//! ```
//! use graphene_cs::{CoherentState64, LadderFamily64, PhysicsConfig64};
//! use graphene_cs::observables::uncertainty_product;
//! use num_complex::Complex64;
//!
//! let cfg = PhysicsConfig64::new(2.0, 1.0).unwrap();
//! let state = CoherentState64::new(LadderFamily64::One, Complex64::new(0.0, 0.0), cfg, 1e-15).unwrap();
//! let mv = uncertainty_product(&state).unwrap();
//! assert!((mv.product - 0.25).abs() < 1e-12);
//! ```

pub mod basis;
pub mod coherent;
mod error;
pub mod observables;
mod scalar;
pub mod specfun;
pub mod verify;

pub use basis::{PhysicsConfig, SpinorBasisState, N_MAX};
pub use coherent::{build_coefficients, CoherentState, FamilyKind, LadderFamily};
pub use error::{Error, Result};
pub use observables::{MeanValues, Observable, SeriesForm};
pub use scalar::Real;
pub use specfun::SignedLogValue;

pub type PhysicsConfig64 = PhysicsConfig<f64>;
pub type LadderFamily64 = LadderFamily<f64>;
pub type CoherentState64 = CoherentState<f64>;
pub type MeanValues64 = MeanValues<f64>;

pub type PhysicsConfig32 = PhysicsConfig<f32>;
pub type LadderFamily32 = LadderFamily<f32>;
pub type CoherentState32 = CoherentState<f32>;
