//! Physical parameters, potentials and the radial equation `u'' + Q(r) u = 0`.

use std::fmt;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Region;
use crate::scalar::{lit, Real};

/// Mass and reduced Planck constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams<T> {
    mass: T,
    hbar: T,
}

impl<T: Real> PhysicalParams<T> {
    pub fn new(mass: T, hbar: T) -> Result<Self> {
        if !(mass > T::zero()) || !(hbar > T::zero()) || !mass.is_finite() || !hbar.is_finite() {
            return Err(Error::domain("PhysicalParams", "mass and hbar must be positive and finite"));
        }
        Ok(Self { mass, hbar })
    }

    /// `ħ = m = 1`.
    pub fn natural() -> Self {
        Self {
            mass: T::one(),
            hbar: T::one(),
        }
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    /// `2m/ħ²`, the factor converting energies into `Q(r)` units.
    pub fn two_m_over_hbar2(&self) -> T {
        (self.mass + self.mass) / (self.hbar * self.hbar)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SystemKind<T> {
    Free,
    Oscillator { omega: T },
    Coulomb { alpha: T },
}

impl<T: Real> SystemKind<T> {
    pub fn oscillator(omega: T) -> Result<Self> {
        if !(omega > T::zero()) || !omega.is_finite() {
            return Err(Error::domain("SystemKind", "omega must be positive"));
        }
        Ok(SystemKind::Oscillator { omega })
    }

    /// Attractive Coulomb coupling, `alpha > 0`.
    pub fn coulomb(alpha: T) -> Result<Self> {
        if !(alpha > T::zero()) || !alpha.is_finite() {
            return Err(Error::domain("SystemKind", "alpha must be positive"));
        }
        Ok(SystemKind::Coulomb { alpha })
    }

    pub fn name(&self) -> &'static str {
        match self {
            SystemKind::Free => "free",
            SystemKind::Oscillator { .. } => "oscillator",
            SystemKind::Coulomb { .. } => "coulomb",
        }
    }

    /// Coulomb coupling, zero for the other systems.
    pub fn alpha(&self) -> T {
        match *self {
            SystemKind::Coulomb { alpha } => alpha,
            _ => T::zero(),
        }
    }
}

impl<T: Real> fmt::Display for SystemKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Real eigenvalue `M` of `L = −i ∂/∂φ`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngularEigenvalue<T>(T);

impl<T: Real> AngularEigenvalue<T> {
    pub fn new(m: T) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::domain("AngularEigenvalue", "M must be a finite real number"));
        }
        Ok(Self(m))
    }

    pub fn value(self) -> T {
        self.0
    }

    /// `M² + 1/4`, the strength of the attractive inverse-square term.
    pub fn centrifugal(self) -> T {
        self.0 * self.0 + lit(0.25)
    }
}

fn require_positive_r<T: Real>(function: &'static str, r: T) -> Result<()> {
    if r > T::zero() && r.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(function, "requires r > 0"))
    }
}

/// `U(r)`: `0`, `½ m ω² r²` or `−α/r`.
pub fn potential<T: Real>(kind: SystemKind<T>, pp: PhysicalParams<T>, r: T) -> Result<T> {
    match kind {
        SystemKind::Free => Ok(T::zero()),
        SystemKind::Oscillator { omega } => {
            if !(r >= T::zero()) {
                return Err(Error::domain("potential", "requires r >= 0"));
            }
            Ok(lit::<T>(0.5) * pp.mass * omega * omega * r * r)
        }
        SystemKind::Coulomb { alpha } => {
            require_positive_r("potential", r)?;
            Ok(-alpha / r)
        }
    }
}

/// `U_eff(r) = −(ħ²/2m)(M² + ¼)/r² + U(r)` on the Minkowski plane.
pub fn effective_potential<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: AngularEigenvalue<T>,
    r: T,
) -> Result<T> {
    require_positive_r("effective_potential", r)?;
    Ok(-m.centrifugal() / (pp.two_m_over_hbar2() * r * r) + potential(kind, pp, r)?)
}

/// Euclidean-plane Coulomb effective potential `−(ħ²/2m)(¼ − M²)/r² − α/r`.
pub fn euclidean_effective_potential<T: Real>(
    pp: PhysicalParams<T>,
    m: AngularEigenvalue<T>,
    alpha: T,
    r: T,
) -> Result<T> {
    require_positive_r("euclidean_effective_potential", r)?;
    let mm = m.value() * m.value();
    Ok(-(lit::<T>(0.25) - mm) / (pp.two_m_over_hbar2() * r * r) - alpha / r)
}

/// Euclidean effective potential for any of the three systems.
pub fn euclidean_effective_potential_for<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: AngularEigenvalue<T>,
    r: T,
) -> Result<T> {
    require_positive_r("euclidean_effective_potential", r)?;
    let mm = m.value() * m.value();
    Ok(-(lit::<T>(0.25) - mm) / (pp.two_m_over_hbar2() * r * r) + potential(kind, pp, r)?)
}

/// `Φ(φ) = e^{iMφ}/√(2π)`.
pub fn angular_mode<T: Real>(m: AngularEigenvalue<T>, phi: T) -> Complex<T> {
    let norm = (T::PI() + T::PI()).sqrt().recip();
    Complex::from_polar(norm, m.value() * phi)
}

/// `Q(r) = 2mE/ħ² + (M² + ¼)/r² − (2m/ħ²) U(r)`.
pub fn radial_coefficient<T: Real>(
    kind: SystemKind<T>,
    pp: PhysicalParams<T>,
    m: AngularEigenvalue<T>,
    e: T,
    r: T,
) -> Result<T> {
    require_positive_r("radial_coefficient", r)?;
    let k = pp.two_m_over_hbar2();
    Ok(k * e + m.centrifugal() / (r * r) - k * potential(kind, pp, r)?)
}

/// Overall sign of the Hamiltonian's polar form: `+1` in I/II, `−1` in III/IV.
pub fn hamiltonian_sign(region: Region) -> Result<i8> {
    match region {
        Region::I | Region::II => Ok(1),
        Region::III | Region::IV => Ok(-1),
        Region::Isotropic => Err(Error::domain(
            "hamiltonian_sign",
            "no polar Hamiltonian on the isotropic lines",
        )),
    }
}
