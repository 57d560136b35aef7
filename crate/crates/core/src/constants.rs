//! Physical constants in SI units.

use crate::error::EmError;
use crate::scalar::Real;

/// CODATA 2018 exact speed of light [m/s].
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// CODATA 2018 vacuum permeability [H/m].
pub const VACUUM_PERMEABILITY: f64 = 1.256_637_062_12e-6;
/// CODATA 2018 reduced Planck constant [J s].
pub const REDUCED_PLANCK: f64 = 1.054_571_817e-34;
/// CODATA 2018 exact elementary charge [C].
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// The constants every formula in the toolkit draws from.
///
/// `eps0` is derived from `c` and `mu0` at construction so that
/// `c^2 eps0 mu0 = 1` holds to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants<T> {
    /// Speed of light [m/s].
    pub c: T,
    /// Vacuum permittivity [F/m].
    pub eps0: T,
    /// Vacuum permeability [H/m].
    pub mu0: T,
    /// Reduced Planck constant [J s].
    pub hbar: T,
    /// Elementary charge [C].
    pub e_charge: T,
}

impl<T: Real> PhysicalConstants<T> {
    /// CODATA 2018 values.
    pub fn codata() -> Self {
        let c = T::lit(SPEED_OF_LIGHT);
        let mu0 = T::lit(VACUUM_PERMEABILITY);
        Self {
            c,
            eps0: (mu0 * c * c).recip(),
            mu0,
            hbar: T::lit(REDUCED_PLANCK),
            e_charge: T::lit(ELEMENTARY_CHARGE),
        }
    }

    /// Custom constant set, validated for positivity and `c^2 eps0 mu0 = 1`.
    pub fn new(c: T, eps0: T, mu0: T, hbar: T, e_charge: T) -> Result<Self, EmError> {
        for (name, v) in [("c", c), ("eps0", eps0), ("mu0", mu0), ("hbar", hbar), ("e_charge", e_charge)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(EmError::NonPositive { name, value: v.as_f64() });
            }
        }
        let residual = (c * c * eps0 * mu0 - T::one()).abs();
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(8.0));
        if residual > tol {
            return Err(EmError::InconsistentConstants {
                residual: residual.as_f64(),
            });
        }
        Ok(Self { c, eps0, mu0, hbar, e_charge })
    }

    #[inline]
    pub fn c2(&self) -> T {
        self.c * self.c
    }
}

impl<T: Real> Default for PhysicalConstants<T> {
    fn default() -> Self {
        Self::codata()
    }
}
