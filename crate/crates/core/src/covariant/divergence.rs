//! Finite-difference divergence of the Minkowski four-tensor.

use crate::constants::PhysicalConstants;
use crate::em::PlaneWave;
use crate::error::{EmError, Result};
use crate::scalar::Real;
use crate::vector::Vec3;

use super::tensor::{minkowski_tensor4, tensors_from_field_point, ExcitationTensor4, FieldTensor4, TIME};

/// `div S` at one spacetime point, converted to SI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergenceResidual<T> {
    /// `d_j S_ij + d_t g_i` [N/m^3].
    pub momentum: Vec3<T>,
    /// `d_j S_j + d_t w` [W/m^3].
    pub energy: T,
    c: T,
}

impl<T: Real> DivergenceResidual<T> {
    /// Euclidean norm with the energy row divided by `c` so both rows are force densities.
    pub fn magnitude(&self) -> T {
        let e = self.energy / self.c;
        (self.momentum.norm_squared() + e * e).sqrt()
    }
}

/// Central-difference estimate of `d_nu S_mu nu` at `point = (x, y, z, t)`.
///
/// Space is stepped by `step` [m] and time by `step / c`, i.e. the same step
/// in the imaginary time coordinate. The sampler must describe a source-free
/// field in a homogeneous medium for the residual to vanish.
pub fn divergence_residual<T, S>(
    sampler: S,
    point: [T; 4],
    step: T,
    consts: &PhysicalConstants<T>,
) -> Result<DivergenceResidual<T>>
where
    T: Real,
    S: Fn([T; 4]) -> (FieldTensor4<T>, ExcitationTensor4<T>),
{
    if !(step > T::zero() && step.is_finite()) {
        return Err(EmError::NonPositive { name: "grid_step", value: step.as_f64() });
    }
    let tensor_at = |p: [T; 4]| {
        let (f, h) = sampler(p);
        minkowski_tensor4(&f, &h, consts)
    };
    let mut acc = [T::zero(); 4];
    for nu in 0..4 {
        let delta = if nu == TIME { step / consts.c } else { step };
        let mut plus = point;
        let mut minus = point;
        plus[nu] = plus[nu] + delta;
        minus[nu] = minus[nu] - delta;
        let sp = tensor_at(plus);
        let sm = tensor_at(minus);
        // The stored time column carries c^2 relative to the time derivative.
        let weight = if nu == TIME { consts.c2().recip() } else { T::one() };
        let denom = (delta + delta).recip() * weight;
        for (mu, a) in acc.iter_mut().enumerate() {
            *a = *a + (sp.a[mu][nu] - sm.a[mu][nu]) * denom;
        }
    }
    let s = consts.mu0;
    Ok(DivergenceResidual { momentum: Vec3::new(acc[0], acc[1], acc[2]) * s, energy: acc[TIME] * s, c: consts.c })
}

/// Sampler for a monochromatic plane wave in its homogeneous medium.
pub fn plane_wave_sampler<'a, T: Real>(
    wave: &'a PlaneWave<T>,
    consts: &'a PhysicalConstants<T>,
) -> impl Fn([T; 4]) -> (FieldTensor4<T>, ExcitationTensor4<T>) + 'a {
    move |p: [T; 4]| {
        let fp = wave.field_at(consts, Vec3::new(p[0], p[1], p[2]), p[3]);
        tensors_from_field_point(&fp, consts)
    }
}
