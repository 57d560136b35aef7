//! Radiation pressure on a metal mirror immersed in a dielectric liquid.
//!
//! Three independent routes to the normal stress on the mirror:
//! the momentum flux of the incident plus reflected waves, the Lorentz force
//! integrated through the skin layer of the metal, and the divergence-free
//! incident tensor whose momentum travels at `c/n`.

use num_complex::Complex;

use crate::constants::PhysicalConstants;
use crate::em::{momentum_density, poynting, Medium, MomentumTag, PlaneWave};
use crate::error::{EmError, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureOptions};
use crate::scalar::Real;

/// Largest `k / alpha` for which the good-conductor expansion is accepted.
pub const DEFAULT_MAX_K_OVER_ALPHA: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorConfig<T> {
    /// The liquid in front of the mirror.
    pub medium: Medium<T>,
    /// Incident field amplitude in the liquid [V/m].
    pub e0: T,
    /// Angular frequency [rad/s].
    pub omega: T,
    /// Conductivity of the metal [S/m].
    pub conductivity: T,
    /// Regime guard on `k / alpha`.
    pub max_k_over_alpha: T,
}

impl<T: Real> MirrorConfig<T> {
    pub fn new(medium: Medium<T>, e0: T, omega: T, conductivity: T) -> Result<Self> {
        if !(e0 >= T::zero() && e0.is_finite()) {
            return Err(EmError::Negative { name: "E0", value: e0.as_f64() });
        }
        if !(omega > T::zero() && omega.is_finite()) {
            return Err(EmError::NonPositive { name: "omega", value: omega.as_f64() });
        }
        if !(conductivity > T::zero() && conductivity.is_finite()) {
            return Err(EmError::NonPositive { name: "conductivity", value: conductivity.as_f64() });
        }
        Ok(Self { medium, e0, omega, conductivity, max_k_over_alpha: T::lit(DEFAULT_MAX_K_OVER_ALPHA) })
    }

    pub fn with_max_k_over_alpha(mut self, bound: T) -> Result<Self> {
        if !(bound > T::zero() && bound < T::lit(0.5)) {
            return Err(EmError::OutOfRange {
                name: "max_k_over_alpha",
                value: bound.as_f64(),
                bound: "(0, 0.5)".into(),
            });
        }
        self.max_k_over_alpha = bound;
        Ok(self)
    }

    /// Skin-layer attenuation constant `alpha = sqrt(mu0 sigma omega / 2)` [1/m].
    pub fn alpha(&self, consts: &PhysicalConstants<T>) -> T {
        (consts.mu0 * self.conductivity * self.omega * T::lit(0.5)).sqrt()
    }

    /// Wavenumber in the liquid, `k = n omega / c` [1/m].
    pub fn k(&self, consts: &PhysicalConstants<T>) -> T {
        self.medium.n() * self.omega / consts.c
    }

    pub fn k_over_alpha(&self, consts: &PhysicalConstants<T>) -> T {
        self.k(consts) / self.alpha(consts)
    }

    /// Reflectance `R = 1 - 2k/alpha`.
    pub fn reflectance(&self, consts: &PhysicalConstants<T>) -> T {
        T::one() - T::lit(2.0) * self.k_over_alpha(consts)
    }

    /// Reflection phase with `tan(delta) = -k/alpha` [rad].
    pub fn phase(&self, consts: &PhysicalConstants<T>) -> T {
        (-self.k_over_alpha(consts)).atan()
    }

    /// Cycle-averaged incident Poynting flux in the liquid [W/m^2].
    pub fn incident_intensity(&self, consts: &PhysicalConstants<T>) -> T {
        T::lit(0.5) * self.medium.n() * self.e0 * self.e0 / (consts.mu0 * self.medium.mu_r() * consts.c)
    }

    pub fn check_regime(&self, consts: &PhysicalConstants<T>) -> Result<()> {
        let ratio = self.k_over_alpha(consts);
        if ratio < self.max_k_over_alpha {
            Ok(())
        } else {
            Err(EmError::ConductorRegime { ratio: ratio.as_f64(), bound: self.max_k_over_alpha.as_f64() })
        }
    }

    /// Incident plane wave travelling toward the mirror along +x.
    pub fn incident_wave(&self) -> Result<PlaneWave<T>> {
        PlaneWave::along_x(self.e0, self.omega, self.medium)
    }
}

/// Flux-route pressure together with the reflection data it used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorPressure<T> {
    /// Normal stress on the mirror [Pa].
    pub pressure: T,
    pub reflectance: T,
    /// Reflection phase [rad].
    pub phase: T,
}

/// `(n/c)(1 + R) S_i` for given reflectance and incident flux [Pa].
pub fn radiation_pressure_from_flux<T: Real>(n: T, reflectance: T, incident: T, consts: &PhysicalConstants<T>) -> T {
    n / consts.c * (T::one() + reflectance) * incident
}

/// Pressure as the momentum flux of incident plus reflected waves.
pub fn mirror_pressure_flux<T: Real>(cfg: &MirrorConfig<T>, consts: &PhysicalConstants<T>) -> Result<MirrorPressure<T>> {
    cfg.check_regime(consts)?;
    let reflectance = cfg.reflectance(consts);
    Ok(MirrorPressure {
        pressure: radiation_pressure_from_flux(cfg.medium.n(), reflectance, cfg.incident_intensity(consts), consts),
        reflectance,
        phase: cfg.phase(consts),
    })
}

/// Complex field amplitudes inside the metal at depth `x`, at `t = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetalFieldSample<T> {
    /// Depth below the surface [m].
    pub x: T,
    /// Tangential electric field [V/m].
    pub e_y: Complex<T>,
    /// Tangential magnetic field [A/m].
    pub h_z: Complex<T>,
}

pub fn metal_fields<T: Real>(cfg: &MirrorConfig<T>, x: T, consts: &PhysicalConstants<T>) -> Result<MetalFieldSample<T>> {
    if !(x >= T::zero()) {
        return Err(EmError::Negative { name: "x", value: x.as_f64() });
    }
    let alpha = cfg.alpha(consts);
    let k = cfg.k(consts);
    let ratio = k / alpha;
    let one = T::one();
    // exp(-alpha x) exp(i alpha x)
    let propagator = Complex::from_polar((-alpha * x).exp(), alpha * x);
    let e_y = Complex::new(one, -one) * (k * cfg.e0 / alpha) * propagator;
    let h_bracket = Complex::new(T::lit(2.0) - ratio, ratio);
    let h_z = h_bracket * (k * cfg.e0 / (consts.mu0 * cfg.omega)) * propagator;
    Ok(MetalFieldSample { x, e_y, h_z })
}

/// Pressure from the Lorentz force `(mu0 sigma / 2) Re int_0^inf E_y H_z^* dx`
/// evaluated by adaptive quadrature to relative tolerance `quad_tol`.
pub fn mirror_pressure_lorentz<T: Real>(cfg: &MirrorConfig<T>, quad_tol: T, consts: &PhysicalConstants<T>) -> Result<T> {
    cfg.check_regime(consts)?;
    let alpha = cfg.alpha(consts);
    let integrand = |x: T| match metal_fields(cfg, x, consts) {
        Ok(s) => (s.e_y * s.h_z.conj()).re,
        Err(_) => T::zero(),
    };
    let integral = integrate_semi_infinite(integrand, T::zero(), alpha.recip(), QuadratureOptions::relative(quad_tol))?;
    Ok(T::lit(0.5) * consts.mu0 * cfg.conductivity * integral.value)
}

/// Pressure split into incident and reflected momentum-flux contributions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorDivergence<T> {
    /// `S_xx` of the incident wave, `c g_x / n` [Pa].
    pub incident: T,
    /// `n R S_i / c` [Pa].
    pub reflected: T,
    pub total: T,
}

/// Pressure from the Minkowski momentum density of the incident wave carried at `c/n`.
pub fn mirror_pressure_divergence<T: Real>(
    cfg: &MirrorConfig<T>,
    consts: &PhysicalConstants<T>,
) -> Result<MirrorDivergence<T>> {
    cfg.check_regime(consts)?;
    let n = cfg.medium.n();
    let half = T::lit(0.5);
    let peak = cfg.incident_wave()?.peak_field(consts);
    let g_mean = momentum_density(&peak, MomentumTag::Minkowski, consts) * half;
    let s_mean = poynting(&peak) * half;
    let incident = consts.c * g_mean.x / n;
    let reflected = n * cfg.reflectance(consts) * s_mean.x / consts.c;
    Ok(MirrorDivergence { incident, reflected, total: incident + reflected })
}

/// The three pressures side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorComparison<T> {
    pub flux: MirrorPressure<T>,
    pub lorentz: T,
    pub divergence: MirrorDivergence<T>,
}

impl<T: Real> MirrorComparison<T> {
    /// Largest pairwise relative disagreement among the three routes.
    pub fn max_disagreement(&self) -> T {
        let (a, b, c) = (self.flux.pressure, self.lorentz, self.divergence.total);
        T::rel_diff(a, b).max(T::rel_diff(a, c)).max(T::rel_diff(b, c))
    }
}

pub fn mirror_pressure_all<T: Real>(
    cfg: &MirrorConfig<T>,
    quad_tol: T,
    consts: &PhysicalConstants<T>,
) -> Result<MirrorComparison<T>> {
    Ok(MirrorComparison {
        flux: mirror_pressure_flux(cfg, consts)?,
        lorentz: mirror_pressure_lorentz(cfg, quad_tol, consts)?,
        divergence: mirror_pressure_divergence(cfg, consts)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PhysicalConstants<f64> {
        PhysicalConstants::codata()
    }

    fn water_silver() -> MirrorConfig<f64> {
        MirrorConfig::new(Medium::nonmagnetic(1.33).unwrap(), 1.0e3, 3.5e15, 6.3e7).unwrap()
    }

    #[test]
    fn hand_evaluated_flux_pressure() {
        // 1.33 * 1.95 * 1e4 / 299792458
        let p = radiation_pressure_from_flux(1.33, 0.95, 1.0e4, &k());
        assert!((p - 8.650_984_808_964_073e-5).abs() < 1e-18);
    }

    #[test]
    fn regime_guard() {
        let cfg = MirrorConfig::new(Medium::nonmagnetic(1.5).unwrap(), 1.0, 3.5e15, 1.0e3).unwrap();
        let err = mirror_pressure_flux(&cfg, &k()).unwrap_err();
        assert!(matches!(err, EmError::ConductorRegime { bound, .. } if bound == 0.2));
        assert!(water_silver().check_regime(&k()).is_ok());
        assert!(water_silver().with_max_k_over_alpha(0.7).is_err());
    }

    #[test]
    fn perfect_conductor_limit() {
        let k = k();
        let cfg = MirrorConfig::new(Medium::nonmagnetic(1.33).unwrap(), 1.0e3, 3.5e15, 1.0e16).unwrap();
        let p = mirror_pressure_flux(&cfg, &k).unwrap();
        let limit = 2.0 * 1.33 * cfg.incident_intensity(&k) / k.c;
        assert!(f64::rel_diff(p.pressure, limit) < 1e-3);
        let lor = mirror_pressure_lorentz(&cfg, 1e-10, &k).unwrap();
        assert!(f64::rel_diff(lor, limit) < 1e-3);
    }

    #[test]
    fn metal_fields_surface_and_decay() {
        let k = k();
        let cfg = water_silver();
        let s0 = metal_fields(&cfg, 0.0, &k).unwrap();
        let ratio = cfg.k_over_alpha(&k);
        assert!(f64::rel_diff(s0.e_y.norm(), 2f64.sqrt() * ratio * cfg.e0) < 1e-14);
        let deep = metal_fields(&cfg, 40.0 / cfg.alpha(&k), &k).unwrap();
        assert!(deep.e_y.norm() <= 1e-15 * s0.e_y.norm());
        assert!(deep.h_z.norm() <= 1e-15 * s0.h_z.norm());
        assert!(metal_fields(&cfg, -1e-9, &k).is_err());
    }

    #[test]
    fn magnetic_surface_field_tends_to_twice_incident() {
        let k = k();
        let cfg = MirrorConfig::new(Medium::nonmagnetic(1.2).unwrap(), 10.0, 3.0e15, 1.0e14).unwrap();
        let s0 = metal_fields(&cfg, 0.0, &k).unwrap();
        let limit = 2.0 * cfg.k(&k) * cfg.e0 / (k.mu0 * cfg.omega);
        assert!(f64::rel_diff(s0.h_z.norm(), limit) < 2.0 * cfg.k_over_alpha(&k));
    }

    #[test]
    fn zero_amplitude_gives_zero_pressure() {
        let k = k();
        let cfg = MirrorConfig::new(Medium::nonmagnetic(1.33).unwrap(), 0.0, 3.5e15, 6.3e7).unwrap();
        assert_eq!(mirror_pressure_lorentz(&cfg, 1e-8, &k).unwrap(), 0.0);
        assert_eq!(mirror_pressure_flux(&cfg, &k).unwrap().pressure, 0.0);
    }

    #[test]
    fn divergence_route_parts() {
        let k = k();
        let cfg = water_silver();
        let d = mirror_pressure_divergence(&cfg, &k).unwrap();
        let si = cfg.incident_intensity(&k);
        assert!(f64::rel_diff(d.incident, 1.33 * si / k.c) < 1e-12);
        let flux = mirror_pressure_flux(&cfg, &k).unwrap().pressure;
        assert!(f64::rel_diff(d.total, flux) < 1e-12);
        // Without the reflected wave only the incident flux remains.
        assert!(f64::rel_diff(radiation_pressure_from_flux(1.33, 0.0, si, &k), d.incident) < 1e-12);
    }

    #[test]
    fn three_routes_agree() {
        let cmp = mirror_pressure_all(&water_silver(), 1e-8, &k()).unwrap();
        assert!(cmp.max_disagreement() < 1e-6, "{cmp:?}");
    }

    #[test]
    fn reflectance_and_phase() {
        let k = k();
        let cfg = water_silver();
        let r = cfg.k_over_alpha(&k);
        assert_eq!(cfg.reflectance(&k), 1.0 - 2.0 * r);
        assert!((cfg.phase(&k).tan() + r).abs() < 1e-15);
    }
}
