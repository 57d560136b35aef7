//! Predictions for each optical experiment, tagged by momentum formalism where
//! the formalisms disagree.

mod mirror;
mod photon;
mod sphere;
mod wgm;

pub use mirror::{
    metal_fields, mirror_pressure_all, mirror_pressure_divergence, mirror_pressure_flux, mirror_pressure_lorentz,
    radiation_pressure_from_flux, MetalFieldSample, MirrorComparison, MirrorConfig, MirrorDivergence, MirrorPressure,
    DEFAULT_MAX_K_OVER_ALPHA,
};
pub use photon::{
    bec_recoil, fiber_exit_impulse, omega_from_vacuum_wavelength, photon_drag_field, photon_momentum, DragConfig,
};
pub use sphere::{
    correction_magnitude, displacement_ratio, pulse_momentum, sphere_kick_trajectory, sphere_kick_vmax,
    SphereKickConfig, StokesTrajectory, AIR_VISCOSITY,
};
pub use wgm::{wgm_torque, wgm_torque_volume_integral, TorqueConfig, WgmTorque, DEFAULT_INDEX as DEFAULT_WGM_INDEX};
