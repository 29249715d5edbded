//! Bound states of nonrelativistic particles on the Minkowski plane.
//!
//! The crate is generic over the real scalar (`f32` or `f64`); the aliases
//! below fix it to `f64` for the common case.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod model;
pub mod oracle;
pub mod scalar;
pub mod specfun;
pub mod spectra;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type PhysicalParams64 = model::PhysicalParams<f64>;
pub type SystemKind64 = model::SystemKind<f64>;
pub type AngularEigenvalue64 = model::AngularEigenvalue<f64>;
pub type KummerParams64 = specfun::KummerParams<f64>;
pub type PolarPoint64 = geometry::PolarPoint<f64>;
pub type CartesianPoint64 = geometry::CartesianPoint<f64>;
pub type SpectrumEntry64 = spectra::SpectrumEntry<f64>;
pub type ReflectionPhase64 = spectra::ReflectionPhase<f64>;
pub type DualityMap64 = spectra::DualityMap<f64>;
pub type SolverConfig64 = spectra::SolverConfig<f64>;
pub type PhysicalParams32 = model::PhysicalParams<f32>;
pub type KummerParams32 = specfun::KummerParams<f32>;
pub type RadialSolution64 = oracle::RadialSolution<f64>;
pub type ShootingConfig64 = oracle::ShootingConfig<f64>;
