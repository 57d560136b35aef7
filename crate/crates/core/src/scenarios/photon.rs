//! Single-photon momentum bookkeeping: photon drag, condensate recoil, and the
//! impulse at a fiber exit face.

use crate::constants::PhysicalConstants;
use crate::em::MomentumTag;
use crate::error::{EmError, Result};
use crate::scalar::Real;

/// Momentum of one photon of angular frequency `omega` in a medium of index `n`:
/// `hbar n omega / c` (Minkowski) or `hbar omega / (n c)` (Abraham).
pub fn photon_momentum<T: Real>(n: T, omega: T, tag: MomentumTag, consts: &PhysicalConstants<T>) -> T {
    let vacuum = consts.hbar * omega / consts.c;
    match tag {
        MomentumTag::Minkowski => vacuum * n,
        MomentumTag::Abraham => vacuum / n,
    }
}

/// Angular frequency of light with vacuum wavelength `lambda` [m].
pub fn omega_from_vacuum_wavelength<T: Real>(lambda: T, consts: &PhysicalConstants<T>) -> T {
    T::TAU() * consts.c / lambda
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DragConfig<T> {
    /// Incident intensity [W/m^2].
    pub intensity: T,
    /// Carrier absorption cross section [m^2].
    pub sigma_a: T,
    /// Angular frequency [rad/s].
    pub omega: T,
    /// Refractive index of the semiconductor.
    pub n: T,
}

impl<T: Real> DragConfig<T> {
    pub fn new(intensity: T, sigma_a: T, omega: T, n: T) -> Result<Self> {
        for (name, v) in [("intensity", intensity), ("sigma_a", sigma_a), ("omega", omega), ("n", n)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(EmError::NonPositive { name, value: v.as_f64() });
            }
        }
        Ok(Self { intensity, sigma_a, omega, n })
    }
}

/// Longitudinal photon-drag field `E = I sigma_a p / (hbar omega e)` [V/m].
///
/// Valid in the long-wavelength regime where band structure drops out.
pub fn photon_drag_field<T: Real>(cfg: &DragConfig<T>, tag: MomentumTag, consts: &PhysicalConstants<T>) -> T {
    let p = photon_momentum(cfg.n, cfg.omega, tag, consts);
    cfg.intensity * cfg.sigma_a * p / (consts.hbar * cfg.omega * consts.e_charge)
}

/// Recoil momentum `hbar n omega / c` of an atom absorbing one photon [kg m/s].
pub fn bec_recoil<T: Real>(n: T, omega: T, consts: &PhysicalConstants<T>) -> T {
    photon_momentum(n, omega, MomentumTag::Minkowski, consts)
}

/// Impulse `(n - 1) H / c` [N s] on a fiber when a pulse of energy `pulse_energy`
/// leaves its end face into vacuum, along the propagation direction.
pub fn fiber_exit_impulse<T: Real>(pulse_energy: T, n: T, consts: &PhysicalConstants<T>) -> T {
    (n - T::one()) * pulse_energy / consts.c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PhysicalConstants<f64> {
        PhysicalConstants::codata()
    }

    #[test]
    fn drag_tags_differ_by_n_squared() {
        let k = k();
        let cfg = DragConfig::new(1.0e7, 3.0e-20, 1.6e12, 3.42).unwrap();
        let em = photon_drag_field(&cfg, MomentumTag::Minkowski, &k);
        let ea = photon_drag_field(&cfg, MomentumTag::Abraham, &k);
        assert!(f64::rel_diff(em / ea, 3.42 * 3.42) < 1e-14);
        // E e c / (I sigma_a) recovers the index.
        assert!(f64::rel_diff(em * k.e_charge * k.c / (cfg.intensity * cfg.sigma_a), 3.42) < 1e-14);
        let vac = DragConfig::new(1.0e7, 3.0e-20, 1.6e12, 1.0).unwrap();
        assert_eq!(
            photon_drag_field(&vac, MomentumTag::Minkowski, &k),
            photon_drag_field(&vac, MomentumTag::Abraham, &k)
        );
        assert!(DragConfig::new(0.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn recoil_at_780_nm() {
        let k = k();
        let omega = omega_from_vacuum_wavelength(780e-9, &k);
        // h / lambda = 6.62607015e-34 / 780e-9
        let p = bec_recoil(1.0, omega, &k);
        assert!(f64::rel_diff(p, 8.494_961_725_564_205e-28) < 1e-9);
        assert!(f64::rel_diff(bec_recoil(1.0001, omega, &k), 1.0001 * p) < 1e-15);
        assert!(f64::rel_diff(bec_recoil(2.0, omega, &k), 2.0 * p) < 1e-15);
    }

    #[test]
    fn fiber_impulse() {
        let k = k();
        assert_eq!(fiber_exit_impulse(2.7e-3, 1.0, &k), 0.0);
        let j = fiber_exit_impulse(2.7e-3, 1.5, &k);
        assert!(f64::rel_diff(j, 4.503_115_285_175_053e-12) < 1e-14);
        assert!(f64::rel_diff(fiber_exit_impulse(5.4e-3, 1.5, &k), 2.0 * j) < 1e-15);
    }
}
