//! Independent numerical path: direct integration of the radial equation,
//! near-origin phase extraction and eigenvalue shooting.

mod numerov;
mod shoot;

pub use numerov::{
    integrate_radial, numerov_step, numerov_uniform, ode_residual, Direction, RadialSolution,
    ShootingConfig, RENORM_THRESHOLD, STEP_LIMIT,
};
pub use shoot::{inward_phase, shoot_eigenvalues, PhaseTracker, FIT_LIMIT};
