//! Covariant constitutive relation for a uniformly moving isotropic medium.

use crate::constants::PhysicalConstants;
use crate::error::{EmError, Result};
use crate::scalar::Real;
use crate::vector::Vec3;

use super::tensor::{metric, ExcitationTensor4, FieldTensor4, TIME};

/// Four-velocity of the medium, stored as `(gamma v, gamma c^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVelocity<T> {
    v: [T; 4],
}

impl<T: Real> FourVelocity<T> {
    pub fn at_rest(consts: &PhysicalConstants<T>) -> Self {
        let z = T::zero();
        Self { v: [z, z, z, consts.c2()] }
    }

    /// Four-velocity of a medium moving with velocity `v` [m/s].
    pub fn from_velocity(v: Vec3<T>, consts: &PhysicalConstants<T>) -> Result<Self> {
        let beta2 = v.norm_squared() / consts.c2();
        if !(beta2 < T::one()) {
            return Err(EmError::Superluminal { speed: v.norm().as_f64() });
        }
        let gamma = (T::one() - beta2).sqrt().recip();
        Ok(Self { v: [gamma * v.x, gamma * v.y, gamma * v.z, gamma * consts.c2()] })
    }

    /// Raw stored components; must satisfy `V.V = -c^2` to relative 1e-12.
    pub fn from_components(v: [T; 4], consts: &PhysicalConstants<T>) -> Result<Self> {
        let out = Self { v };
        let norm = out.square(consts);
        let expected = -consts.c2();
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(16.0));
        if !(T::rel_diff(norm, expected) <= tol) {
            return Err(EmError::UnnormalizedVelocity { norm: norm.as_f64(), expected: expected.as_f64() });
        }
        Ok(out)
    }

    /// `V.V` with the stored metric; `-c^2` for a valid four-velocity.
    pub fn square(&self, consts: &PhysicalConstants<T>) -> T {
        (0..4).map(|a| metric(consts.c, a) * self.v[a] * self.v[a]).sum()
    }

    pub fn components(&self) -> [T; 4] {
        self.v
    }

    /// Ordinary velocity `v` [m/s].
    pub fn velocity(&self, consts: &PhysicalConstants<T>) -> Vec3<T> {
        let gamma = self.v[TIME] / consts.c2();
        Vec3::new(self.v[0], self.v[1], self.v[2]) * gamma.recip()
    }
}

/// Solves `mu H_mn = F_mn - ((n^2 - 1)/c^2)(F_ma V_n - F_na V_m) V_a` for `H`.
///
/// `n` and `mu_r` are the rest-frame index and relative permeability. In the
/// rest frame this reduces to `D = eps E`, `B = mu H`.
pub fn excitation_from_constitutive<T: Real>(
    f: &FieldTensor4<T>,
    velocity: &FourVelocity<T>,
    n: T,
    mu_r: T,
    consts: &PhysicalConstants<T>,
) -> Result<ExcitationTensor4<T>> {
    // Re-validate: the components are public through `components()` round trips.
    let velocity = FourVelocity::from_components(velocity.v, consts)?;
    if !(mu_r > T::zero() && mu_r.is_finite()) {
        return Err(EmError::NonPositive { name: "mu_r", value: mu_r.as_f64() });
    }
    let c = consts.c;
    let kappa = (n * n - T::one()) / consts.c2();
    let v = velocity.v;
    // F_ma V_a for each m.
    let fv: [T; 4] = std::array::from_fn(|m| (0..4).map(|a| f.a[m][a] * metric(c, a) * v[a]).sum());
    let inv_mu = mu_r.recip();
    let mut a = [[T::zero(); 4]; 4];
    for m in 0..4 {
        for nn in 0..4 {
            if m == nn {
                continue;
            }
            a[m][nn] = (f.a[m][nn] - kappa * (fv[m] * v[nn] - fv[nn] * v[m])) * inv_mu;
        }
    }
    Ok(ExcitationTensor4 { a })
}
