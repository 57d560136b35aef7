//! Microsphere driven by an absorbed light pulse plus ablation recoil, then
//! slowed by Stokes drag.

use crate::constants::PhysicalConstants;
use crate::em::{Medium, MomentumTag};
use crate::error::{EmError, Result};
use crate::scalar::Real;

/// Dynamic viscosity of air [Pa s], the reference fluid.
pub const AIR_VISCOSITY: f64 = 1.8e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereKickConfig<T> {
    /// Sphere mass [kg].
    pub mass: T,
    /// Sphere radius [m].
    pub radius: T,
    /// Ablation recoil momentum [kg m/s], treated as a measured input.
    pub delta_g: T,
    /// Absorbed pulse energy [J].
    pub pulse_energy: T,
    /// Fluid of the experiment (index and viscosity).
    pub fluid: Medium<T>,
    /// Reference fluid (index and viscosity).
    pub reference_fluid: Medium<T>,
    /// Total displacement measured in the reference fluid [m].
    pub reference_displacement: T,
}

impl<T: Real> SphereKickConfig<T> {
    pub fn new(
        mass: T,
        radius: T,
        delta_g: T,
        pulse_energy: T,
        fluid: Medium<T>,
        reference_fluid: Medium<T>,
        reference_displacement: T,
    ) -> Result<Self> {
        for (name, v) in [("M", mass), ("a", radius), ("L0", reference_displacement)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(EmError::NonPositive { name, value: v.as_f64() });
            }
        }
        if !(pulse_energy >= T::zero() && pulse_energy.is_finite()) {
            return Err(EmError::Negative { name: "pulse_energy", value: pulse_energy.as_f64() });
        }
        if !delta_g.is_finite() {
            return Err(EmError::OutOfRange { name: "deltaG", value: delta_g.as_f64(), bound: "finite".into() });
        }
        if fluid.viscosity().is_none() {
            return Err(EmError::NonPositive { name: "viscosity", value: f64::NAN });
        }
        if reference_fluid.viscosity().is_none() {
            return Err(EmError::NonPositive { name: "reference viscosity", value: f64::NAN });
        }
        Ok(Self { mass, radius, delta_g, pulse_energy, fluid, reference_fluid, reference_displacement })
    }

    fn viscosity(&self) -> T {
        self.fluid.viscosity().unwrap_or_else(T::nan)
    }

    fn reference_viscosity(&self) -> T {
        self.reference_fluid.viscosity().unwrap_or_else(T::nan)
    }

    /// Stokes drag coefficient `6 pi mu a` [kg/s] in the experiment fluid.
    pub fn drag_coefficient(&self) -> T {
        T::lit(6.0) * T::PI() * self.viscosity() * self.radius
    }
}

/// Momentum `n H / c` (Minkowski) or `H / (n c)` (Abraham) deposited by a fully
/// absorbed pulse [kg m/s].
pub fn pulse_momentum<T: Real>(pulse_energy: T, n: T, tag: MomentumTag, consts: &PhysicalConstants<T>) -> T {
    match tag {
        MomentumTag::Minkowski => n * pulse_energy / consts.c,
        MomentumTag::Abraham => pulse_energy / (n * consts.c),
    }
}

/// Peak speed `(deltaG + p_pulse) / M` [m/s].
pub fn sphere_kick_vmax<T: Real>(cfg: &SphereKickConfig<T>, tag: MomentumTag, consts: &PhysicalConstants<T>) -> T {
    (cfg.delta_g + pulse_momentum(cfg.pulse_energy, cfg.fluid.n(), tag, consts)) / cfg.mass
}

/// Exponentially decaying Stokes motion from the peak speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesTrajectory<T> {
    pub v_max: T,
    /// `6 pi mu a / M` [1/s].
    pub decay_rate: T,
}

impl<T: Real> StokesTrajectory<T> {
    /// `(v(t), x(t))` with `v = v_max exp(-rate t)` and `x = L (1 - exp(-rate t))`.
    pub fn at(&self, t: T) -> Result<(T, T)> {
        if !(t >= T::zero()) {
            return Err(EmError::Negative { name: "t", value: t.as_f64() });
        }
        let decay = (-self.decay_rate * t).exp();
        // 1 - exp(-x) without cancellation at small x.
        let travelled = -(-self.decay_rate * t).exp_m1();
        Ok((self.v_max * decay, self.total_displacement() * travelled))
    }

    /// `L = v_max / rate = M v_max / (6 pi mu a)` [m].
    pub fn total_displacement(&self) -> T {
        self.v_max / self.decay_rate
    }
}

pub fn sphere_kick_trajectory<T: Real>(
    cfg: &SphereKickConfig<T>,
    tag: MomentumTag,
    consts: &PhysicalConstants<T>,
) -> StokesTrajectory<T> {
    StokesTrajectory { v_max: sphere_kick_vmax(cfg, tag, consts), decay_rate: cfg.drag_coefficient() / cfg.mass }
}

/// `H / (6 pi a c L0 mu0)`, the size of the photon-momentum correction to `L / L0`.
pub fn correction_magnitude<T: Real>(cfg: &SphereKickConfig<T>, consts: &PhysicalConstants<T>) -> T {
    cfg.pulse_energy
        / (T::lit(6.0) * T::PI() * cfg.radius * consts.c * cfg.reference_displacement * cfg.reference_viscosity())
}

/// Predicted displacement ratio `L / L0` between the experiment and reference fluids.
///
/// `(mu0/mu) [1 + (p(n) - p(n0)) / (6 pi a L0 mu0)]`, with `p` the pulse
/// momentum for `tag`. For an air reference (`n0 = 1`) this is
/// `(mu0/mu)[1 + H(n-1)/(6 pi a c L0 mu0)]` (Minkowski) and
/// `(mu0/mu)[1 + H(1/n-1)/(6 pi a c L0 mu0)]` (Abraham).
pub fn displacement_ratio<T: Real>(cfg: &SphereKickConfig<T>, tag: MomentumTag, consts: &PhysicalConstants<T>) -> T {
    let mu = cfg.viscosity();
    let mu0 = cfg.reference_viscosity();
    let dp = pulse_momentum(cfg.pulse_energy, cfg.fluid.n(), tag, consts)
        - pulse_momentum(cfg.pulse_energy, cfg.reference_fluid.n(), tag, consts);
    let reference_momentum = T::lit(6.0) * T::PI() * cfg.radius * cfg.reference_displacement * mu0;
    mu0 / mu * (T::one() + dp / reference_momentum)
}
