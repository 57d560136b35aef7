//! Abraham and Minkowski energy-momentum bookkeeping for light in isotropic media.
//!
//! * [`em`]: rest-frame fields, momentum densities, stress and force densities (SI).
//! * [`covariant`]: four-tensors, the moving-medium constitutive relation, and
//!   conservation checks.
//! * [`scenarios`]: predictions for the mirror, photon-drag, condensate-recoil,
//!   fiber, whispering-gallery torque and microsphere-kick experiments.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases below fix
//! the scalar to `f64`.

pub mod constants;
pub mod covariant;
pub mod em;
pub mod error;
pub mod quadrature;
pub mod scalar;
pub mod scenarios;
pub mod vector;

pub use constants::PhysicalConstants;
pub use em::MomentumTag;
pub use error::EmError;
pub use scalar::Real;
pub use vector::{Mat3, Vec3};

pub type Vec3d = Vec3<f64>;
pub type Mat3d = Mat3<f64>;
pub type Constants = PhysicalConstants<f64>;
pub type Medium = em::Medium<f64>;
pub type FieldPoint = em::FieldPoint<f64>;
pub type PlaneWave = em::PlaneWave<f64>;
pub type EmQuantities = em::EmQuantities<f64>;
pub type FieldTensor4 = covariant::FieldTensor4<f64>;
pub type ExcitationTensor4 = covariant::ExcitationTensor4<f64>;
pub type EmTensor4 = covariant::EmTensor4<f64>;
pub type FourVelocity = covariant::FourVelocity<f64>;
pub type FourMomentum = covariant::FourMomentum<f64>;
pub type MirrorConfig = scenarios::MirrorConfig<f64>;
pub type DragConfig = scenarios::DragConfig<f64>;
pub type TorqueConfig = scenarios::TorqueConfig<f64>;
pub type SphereKickConfig = scenarios::SphereKickConfig<f64>;

/// Single-precision aliases.
pub mod f32 {
    pub type Vec3 = crate::Vec3<f32>;
    pub type Constants = crate::PhysicalConstants<f32>;
    pub type Medium = crate::em::Medium<f32>;
    pub type FieldPoint = crate::em::FieldPoint<f32>;
    pub type PlaneWave = crate::em::PlaneWave<f32>;
}
