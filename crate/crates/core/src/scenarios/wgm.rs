//! Abraham torque on a cylinder carrying an intensity-modulated circulating mode.

use crate::constants::PhysicalConstants;
use crate::em::{abraham_term, Medium, MomentumTag};
use crate::error::{EmError, Result};
use crate::quadrature::{integrate, QuadratureOptions};
use crate::scalar::Real;
use crate::vector::Vec3;

/// Fused silica; used when no index is given.
pub const DEFAULT_INDEX: f64 = 1.45;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorqueConfig<T> {
    /// Refractive index of the (nonmagnetic) cylinder.
    pub n: T,
    /// Cylinder radius [m].
    pub radius: T,
    /// Peak circulating power [W].
    pub power: T,
    /// Modulation angular frequency [rad/s].
    pub omega0: T,
}

impl<T: Real> TorqueConfig<T> {
    pub fn new(n: T, radius: T, power: T, omega0: T) -> Result<Self> {
        if !(n >= T::one() && n.is_finite()) {
            return Err(EmError::OutOfRange { name: "n", value: n.as_f64(), bound: "[1, inf)".into() });
        }
        if !(radius > T::zero() && radius.is_finite()) {
            return Err(EmError::NonPositive { name: "a", value: radius.as_f64() });
        }
        if !(power >= T::zero() && power.is_finite()) {
            return Err(EmError::Negative { name: "P0", value: power.as_f64() });
        }
        if !(omega0 > T::zero() && omega0.is_finite()) {
            return Err(EmError::NonPositive { name: "omega0", value: omega0.as_f64() });
        }
        Ok(Self { n, radius, power, omega0 })
    }

    fn medium(&self) -> Result<Medium<T>> {
        Medium::nonmagnetic(self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WgmTorque<T> {
    /// Axial torque at the requested time [N m].
    pub torque: T,
    /// Magnitude of the sinusoidal torque [N m].
    pub amplitude: T,
}

/// Torque `N_z = -((n^2 - 1)/c^2) 2 pi a^2 omega0 P0 sin(omega0 t)`.
///
/// Under the Minkowski tag there is no azimuthal force and the torque vanishes.
pub fn wgm_torque<T: Real>(cfg: &TorqueConfig<T>, t: T, tag: MomentumTag, consts: &PhysicalConstants<T>) -> WgmTorque<T> {
    match tag {
        MomentumTag::Minkowski => WgmTorque { torque: T::zero(), amplitude: T::zero() },
        MomentumTag::Abraham => {
            let amplitude = (cfg.n * cfg.n - T::one()) / consts.c2()
                * T::TAU()
                * cfg.radius
                * cfg.radius
                * cfg.omega0
                * cfg.power;
            WgmTorque { torque: -amplitude * (cfg.omega0 * t).sin(), amplitude }
        }
    }
}

/// Abraham torque from integrating `r f_phi` over the cylinder volume.
///
/// The modulated flux `S_phi = S0 cos(omega0 t)` is spread uniformly over a
/// rim shell `[a - rim_width, a]`, normalized so that the flux through a
/// meridional cross-section equals `P0 cos(omega0 t)`. The azimuthal force
/// density is the Abraham term of `dS_phi/dt`. Converges to
/// [`wgm_torque`] as `rim_width / a -> 0` with relative error about `rim_width / a`.
pub fn wgm_torque_volume_integral<T: Real>(
    cfg: &TorqueConfig<T>,
    t: T,
    rim_width: T,
    quad_tol: T,
    consts: &PhysicalConstants<T>,
) -> Result<T> {
    if !(rim_width > T::zero() && rim_width <= cfg.radius) {
        return Err(EmError::OutOfRange {
            name: "rim_width",
            value: rim_width.as_f64(),
            bound: format!("(0, {}]", cfg.radius.as_f64()),
        });
    }
    let medium = cfg.medium()?;
    // Per unit cylinder height: S0 = P0 / rim_width.
    let s0 = cfg.power / rim_width;
    let ds_dt = Vec3::new(T::zero(), -cfg.omega0 * s0 * (cfg.omega0 * t).sin(), T::zero());
    let f_phi = abraham_term(&medium, ds_dt, consts)?.y;
    let inner = cfg.radius - rim_width;
    // torque per unit height = int r f_phi 2 pi r dr
    let radial = integrate(|r: T| r * r, inner, cfg.radius, QuadratureOptions::relative(quad_tol))?;
    Ok(T::TAU() * f_phi * radial.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PhysicalConstants<f64> {
        PhysicalConstants::codata()
    }

    fn proposal() -> TorqueConfig<f64> {
        TorqueConfig::new(1.45, 100e-6, 100.0, 1000.0).unwrap()
    }

    #[test]
    fn amplitude_for_proposed_parameters() {
        let w = wgm_torque(&proposal(), 0.0, MomentumTag::Abraham, &k());
        // 1.1025 / c^2 * 2 pi * 1e-8 * 1e3 * 1e2
        assert!(f64::rel_diff(w.amplitude, 7.707_562_598_862_074e-20) < 1e-13, "{}", w.amplitude);
        assert_eq!(w.torque, 0.0);
    }

    #[test]
    fn vacuum_index_and_minkowski_give_no_torque() {
        let k = k();
        let cfg = TorqueConfig::new(1.0, 1e-4, 100.0, 1e3).unwrap();
        for t in [0.0, 1e-4, 3.3e-3] {
            assert_eq!(wgm_torque(&cfg, t, MomentumTag::Abraham, &k).torque, 0.0);
            assert_eq!(wgm_torque(&proposal(), t, MomentumTag::Minkowski, &k).torque, 0.0);
        }
    }

    #[test]
    fn torque_follows_negative_sine() {
        let k = k();
        let cfg = proposal();
        let quarter = std::f64::consts::FRAC_PI_2 / cfg.omega0;
        let w = wgm_torque(&cfg, quarter, MomentumTag::Abraham, &k);
        assert!(f64::rel_diff(w.torque, -w.amplitude) < 1e-15);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(TorqueConfig::new(0.9, 1e-4, 1.0, 1.0).is_err());
        assert!(TorqueConfig::new(1.5, 0.0, 1.0, 1.0).is_err());
        assert!(TorqueConfig::new(1.5, 1e-4, -1.0, 1.0).is_err());
        assert!(TorqueConfig::new(1.5, 1e-4, 1.0, 0.0).is_err());
        assert!(wgm_torque_volume_integral(&proposal(), 0.0, 2e-4, 1e-10, &k()).is_err());
    }
}
