//! Four-tensor formalism: field and excitation tensors, the moving-medium
//! constitutive relation, the Minkowski energy-momentum tensor and its
//! conservation and causal properties.

mod constitutive;
mod divergence;
mod momentum;
mod tensor;

pub use constitutive::{excitation_from_constitutive, FourVelocity};
pub use divergence::{divergence_residual, plane_wave_sampler, DivergenceResidual};
pub use momentum::{classify_four_momentum, Causality, FourMomentum, NULL_TOLERANCE};
pub use tensor::{
    minkowski_tensor4, tensors_from_field_point, EmTensor4, ExcitationTensor4, FieldTensor4, NormalizedFields,
    SiTensorQuantities, TIME,
};
