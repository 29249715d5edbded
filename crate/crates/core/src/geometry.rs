//! Coordinate charts on the Minkowski plane `s² = x₁² − x₂²`.
//!
//! The isotropic lines `x₁ = ±x₂` split the plane into four regions. Regions
//! I and II (positive interval) use `(r, φ)` with `x = ±r(cosh φ, sinh φ)`;
//! regions III and IV (negative interval) use `(ρ, χ)` with
//! `x = ±ρ(sinh χ, cosh χ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

/// Default relative width of the isotropic band used by [`to_polar`].
pub const DEFAULT_ISOTROPIC_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartesianPoint<T> {
    pub x1: T,
    pub x2: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    I,
    II,
    III,
    IV,
    Isotropic,
}

impl Region {
    /// True for the positive-interval regions I and II.
    pub fn is_spacelike(self) -> bool {
        matches!(self, Region::I | Region::II)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::I => "I",
            Region::II => "II",
            Region::III => "III",
            Region::IV => "IV",
            Region::Isotropic => "isotropic",
        };
        f.write_str(s)
    }
}

/// Polar chart coordinates. `radius` is `r` in I/II and `ρ` in III/IV,
/// `angle` is the hyperbolic angle `φ` or `χ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolarPoint<T> {
    region: Region,
    radius: T,
    angle: T,
}

impl<T: Real> PolarPoint<T> {
    pub fn new(region: Region, radius: T, angle: T) -> Result<Self> {
        if region == Region::Isotropic {
            return Err(Error::domain("PolarPoint", "no polar chart on the isotropic lines"));
        }
        if !(radius >= T::zero()) || !radius.is_finite() || !angle.is_finite() {
            return Err(Error::domain("PolarPoint", "radius must be finite and >= 0"));
        }
        Ok(Self {
            region,
            radius,
            angle,
        })
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn angle(&self) -> T {
        self.angle
    }
}

impl<T: Real> CartesianPoint<T> {
    pub fn new(x1: T, x2: T) -> Self {
        Self { x1, x2 }
    }
}

/// The quadratic form `x₁² − x₂²`.
pub fn interval<T: Real>(p: CartesianPoint<T>) -> T {
    p.x1 * p.x1 - p.x2 * p.x2
}

/// Region containing `p`. Points with `|x₁² − x₂²| <= tol·(x₁² + x₂²)`,
/// including the origin, are isotropic.
pub fn classify<T: Real>(p: CartesianPoint<T>, tol: T) -> Region {
    let s = interval(p);
    let scale = p.x1 * p.x1 + p.x2 * p.x2;
    if s.abs() <= tol * scale || scale == T::zero() {
        Region::Isotropic
    } else if s > T::zero() {
        if p.x1 > T::zero() {
            Region::I
        } else {
            Region::II
        }
    } else if p.x2 > T::zero() {
        Region::III
    } else {
        Region::IV
    }
}

/// Polar coordinates of a non-isotropic point.
pub fn to_polar<T: Real>(p: CartesianPoint<T>) -> Result<PolarPoint<T>> {
    to_polar_with_tol(p, lit(DEFAULT_ISOTROPIC_TOL))
}

pub fn to_polar_with_tol<T: Real>(p: CartesianPoint<T>, tol: T) -> Result<PolarPoint<T>> {
    let region = classify(p, tol);
    let s = interval(p);
    let (radius, angle) = match region {
        Region::Isotropic => return Err(Error::IsotropicCone { interval: to_f64(s) }),
        Region::I | Region::II => (s.sqrt(), (p.x2 / p.x1).atanh()),
        Region::III | Region::IV => ((-s).sqrt(), (p.x1 / p.x2).atanh()),
    };
    PolarPoint::new(region, radius, angle)
}

pub fn to_cartesian<T: Real>(q: PolarPoint<T>) -> CartesianPoint<T> {
    let (r, a) = (q.radius, q.angle);
    match q.region {
        Region::I => CartesianPoint::new(r * a.cosh(), r * a.sinh()),
        Region::II => CartesianPoint::new(-r * a.cosh(), -r * a.sinh()),
        Region::III => CartesianPoint::new(r * a.sinh(), r * a.cosh()),
        Region::IV => CartesianPoint::new(-r * a.sinh(), -r * a.cosh()),
        Region::Isotropic => unreachable!("PolarPoint never holds the isotropic tag"),
    }
}
