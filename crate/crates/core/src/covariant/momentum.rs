//! Four-momentum of a field configuration and its causal character.

use crate::constants::PhysicalConstants;
use crate::em::{EmQuantities, MomentumTag};
use crate::scalar::Real;
use crate::vector::Vec3;

/// Default relative band around the light cone treated as null.
pub const NULL_TOLERANCE: f64 = 1e-9;

/// Spatial momentum and energy of a field, per unit volume or integrated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum<T> {
    /// Momentum [kg m/s] (or density).
    pub momentum: Vec3<T>,
    /// Energy [J] (or density).
    pub energy: T,
}

impl<T: Real> FourMomentum<T> {
    pub fn new(momentum: Vec3<T>, energy: T) -> Self {
        Self { momentum, energy }
    }

    /// Uniform pulse of the given volume [m^3] with the momentum density selected by `tag`.
    pub fn of_uniform_pulse(q: &EmQuantities<T>, volume: T, tag: MomentumTag) -> Self {
        Self { momentum: q.momentum(tag) * volume, energy: q.energy * volume }
    }

    /// `c^2 |G|^2 - W^2`: positive spacelike, negative timelike.
    pub fn interval(&self, consts: &PhysicalConstants<T>) -> T {
        consts.c2() * self.momentum.norm_squared() - self.energy * self.energy
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Causality {
    Timelike,
    Spacelike,
    Null,
}

impl Causality {
    pub fn name(self) -> &'static str {
        match self {
            Causality::Timelike => "timelike",
            Causality::Spacelike => "spacelike",
            Causality::Null => "null",
        }
    }
}

/// Classifies by the sign of `c^2 |G|^2 - W^2`; within `rel_tol` of the larger
/// of the two terms counts as null.
pub fn classify_four_momentum<T: Real>(p: &FourMomentum<T>, consts: &PhysicalConstants<T>, rel_tol: T) -> Causality {
    let g2 = consts.c2() * p.momentum.norm_squared();
    let w2 = p.energy * p.energy;
    let diff = g2 - w2;
    if diff.abs() <= rel_tol * g2.max(w2) {
        Causality::Null
    } else if diff > T::zero() {
        Causality::Spacelike
    } else {
        Causality::Timelike
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rest_energy_is_timelike() {
        let k = PhysicalConstants::<f64>::codata();
        let p = FourMomentum::new(Vec3::zero(), 1.0);
        assert_eq!(classify_four_momentum(&p, &k, NULL_TOLERANCE), Causality::Timelike);
        let p = FourMomentum::new(Vec3::new(1.0 / k.c, 0.0, 0.0), 1.0);
        assert_eq!(classify_four_momentum(&p, &k, NULL_TOLERANCE), Causality::Null);
        let p = FourMomentum::new(Vec3::new(2.0 / k.c, 0.0, 0.0), 1.0);
        assert_eq!(classify_four_momentum(&p, &k, NULL_TOLERANCE), Causality::Spacelike);
        let zero = FourMomentum::new(Vec3::zero(), 0.0);
        assert_eq!(classify_four_momentum(&zero, &k, NULL_TOLERANCE), Causality::Null);
    }
}
