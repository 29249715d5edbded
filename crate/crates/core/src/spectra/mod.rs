//! Analytic spectral machinery for the Coulomb problem, its free-particle
//! limit and the dual oscillator.
//!
//! Bound states come in two families. The terminating-series solutions carry
//! complex energies (decay through the isotropic cone) and are tagged
//! [`Branch::ClosedFormU1`]. The superposition of both Kummer solutions with a
//! reflection phase fixed by decay at infinity gives real levels through the
//! quantization condition `β(E_n) = β(E₀) + πn`, tagged
//! [`Branch::QuantizedThird`].

mod coulomb;
mod ladders;
mod oscillator;
mod phase;
mod solver;

pub use coulomb::{
    coulomb_closed_spectrum, coulomb_scaling, coulomb_third, coulomb_u1, coulomb_u1_asymptotic,
    coulomb_u2, energy_from_g, scale_length, ScaledCoulomb,
};
pub use ladders::{deep_ladder, free_spectrum, shallow_spectrum};
pub use oscillator::{
    duality_for_frequency, duality_forward, duality_inverse, oscillator_closed_spectrum,
    oscillator_radial, oscillator_wavefunction, DualityMap,
};
pub use phase::{
    gamma_continuous, gamma_phase, quantization_f, reflection_beta, reflection_phase,
    ReflectionPhase,
};
pub use solver::{oscillator_quantized_spectrum, solve_quantized_spectrum, SolverConfig};

use std::fmt;

use num_complex::Complex;
use serde::Serialize;

/// Which construction produced a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    ClosedFormU1,
    QuantizedThird,
    DeepAsymptotic,
    ShallowAsymptotic,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::ClosedFormU1 => "closed_form_u1",
            Branch::QuantizedThird => "quantized_third",
            Branch::DeepAsymptotic => "deep_asymptotic",
            Branch::ShallowAsymptotic => "shallow_asymptotic",
        };
        f.write_str(s)
    }
}

/// One spectral level. `n` keeps the sign convention of the formula that
/// produced it (the oscillator ladder descends through `n = 0, −1, −2, …`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry<T> {
    pub n: i64,
    pub m: T,
    pub energy: Complex<T>,
    pub branch: Branch,
}
