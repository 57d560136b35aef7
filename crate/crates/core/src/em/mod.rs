//! Rest-frame 3+1 electromagnetic quantities and force densities, SI units.

mod average;
mod fields;
mod medium;

pub use average::time_average;
pub use fields::{
    abraham_force_density, abraham_minkowski_force, abraham_term, energy_density, interface_pressure,
    mechanical_momentum_density, minkowski_force_density, momentum_density, poynting, stress_tensor, EmQuantities,
};
pub use medium::{FieldPoint, Medium, MomentumTag, PlaneWave, SourceDensities};
