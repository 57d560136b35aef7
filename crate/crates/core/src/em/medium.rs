//! Material description, field samples and the monochromatic plane wave.

use std::fmt;
use std::str::FromStr;

use crate::constants::PhysicalConstants;
use crate::error::{EmError, Result};
use crate::scalar::Real;
use crate::vector::Vec3;

/// Which momentum density a momentum-dependent quantity is computed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MomentumTag {
    /// `g = E x H / c^2`.
    Abraham,
    /// `g = D x B`.
    Minkowski,
}

impl MomentumTag {
    pub const ALL: [MomentumTag; 2] = [MomentumTag::Abraham, MomentumTag::Minkowski];

    pub fn name(self) -> &'static str {
        match self {
            MomentumTag::Abraham => "abraham",
            MomentumTag::Minkowski => "minkowski",
        }
    }
}

impl fmt::Display for MomentumTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MomentumTag {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "abraham" | "a" => Ok(MomentumTag::Abraham),
            "minkowski" | "m" => Ok(MomentumTag::Minkowski),
            other => Err(format!("unknown momentum tag '{other}' (expected abraham or minkowski)")),
        }
    }
}

/// Isotropic, non-dispersive medium in its rest frame.
///
/// `mu_r` is the relative magnetic permeability. The dynamic viscosity of a
/// fluid medium is a separate, optional field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Medium<T> {
    eps_r: T,
    mu_r: T,
    n: T,
    conductivity: T,
    viscosity: Option<T>,
}

impl<T: Real> Medium<T> {
    /// Medium with the given relative permittivity and permeability; the index
    /// is `sqrt(eps_r mu_r)`.
    pub fn new(eps_r: T, mu_r: T) -> Result<Self> {
        Self::validate(eps_r, mu_r)?;
        Ok(Self { eps_r, mu_r, n: (eps_r * mu_r).sqrt(), conductivity: T::zero(), viscosity: None })
    }

    /// Nonmagnetic medium with refractive index `n` (so `eps_r = n^2`).
    pub fn nonmagnetic(n: T) -> Result<Self> {
        if !(n >= T::one() && n.is_finite()) {
            return Err(EmError::OutOfRange { name: "n", value: n.as_f64(), bound: "[1, inf)".into() });
        }
        Ok(Self { eps_r: n * n, mu_r: T::one(), n, conductivity: T::zero(), viscosity: None })
    }

    /// Fully specified medium; `n` must match `sqrt(eps_r mu_r)` to relative 1e-12.
    pub fn from_parts(eps_r: T, mu_r: T, n: T) -> Result<Self> {
        Self::validate(eps_r, mu_r)?;
        let expected = (eps_r * mu_r).sqrt();
        let tol = T::lit(1e-12).max(T::epsilon() * T::lit(4.0));
        if T::rel_diff(n, expected) > tol {
            return Err(EmError::InconsistentIndex { n: n.as_f64(), expected: expected.as_f64() });
        }
        Ok(Self { eps_r, mu_r, n, conductivity: T::zero(), viscosity: None })
    }

    pub fn vacuum() -> Self {
        Self { eps_r: T::one(), mu_r: T::one(), n: T::one(), conductivity: T::zero(), viscosity: None }
    }

    fn validate(eps_r: T, mu_r: T) -> Result<()> {
        if !(eps_r >= T::one() && eps_r.is_finite()) {
            return Err(EmError::OutOfRange { name: "eps_r", value: eps_r.as_f64(), bound: "[1, inf)".into() });
        }
        if !(mu_r > T::zero() && mu_r.is_finite()) {
            return Err(EmError::NonPositive { name: "mu_r", value: mu_r.as_f64() });
        }
        Ok(())
    }

    pub fn with_conductivity(mut self, sigma: T) -> Result<Self> {
        if !(sigma >= T::zero() && sigma.is_finite()) {
            return Err(EmError::Negative { name: "conductivity", value: sigma.as_f64() });
        }
        self.conductivity = sigma;
        Ok(self)
    }

    pub fn with_viscosity(mut self, viscosity: T) -> Result<Self> {
        if !(viscosity > T::zero() && viscosity.is_finite()) {
            return Err(EmError::NonPositive { name: "viscosity", value: viscosity.as_f64() });
        }
        self.viscosity = Some(viscosity);
        Ok(self)
    }

    #[inline]
    pub fn eps_r(&self) -> T {
        self.eps_r
    }

    #[inline]
    pub fn mu_r(&self) -> T {
        self.mu_r
    }

    #[inline]
    pub fn n(&self) -> T {
        self.n
    }

    #[inline]
    pub fn n2(&self) -> T {
        self.n * self.n
    }

    pub fn conductivity(&self) -> T {
        self.conductivity
    }

    pub fn viscosity(&self) -> Option<T> {
        self.viscosity
    }

    pub fn is_nonmagnetic(&self) -> bool {
        self.mu_r == T::one()
    }

    pub(crate) fn require_nonmagnetic(&self) -> Result<()> {
        if self.is_nonmagnetic() {
            Ok(())
        } else {
            Err(EmError::Magnetic { mu_r: self.mu_r.as_f64() })
        }
    }
}

/// The four field vectors at one spacetime point, SI units.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldPoint<T> {
    /// Electric field [V/m].
    pub e: Vec3<T>,
    /// Electric displacement [C/m^2].
    pub d: Vec3<T>,
    /// Magnetic field [A/m].
    pub h: Vec3<T>,
    /// Magnetic induction [T].
    pub b: Vec3<T>,
}

impl<T: Real> FieldPoint<T> {
    pub fn new(e: Vec3<T>, d: Vec3<T>, h: Vec3<T>, b: Vec3<T>) -> Self {
        Self { e, d, h, b }
    }

    /// Applies the rest-frame constitutive relations `D = eps0 eps_r E`, `B = mu0 mu_r H`.
    pub fn in_medium(medium: &Medium<T>, consts: &PhysicalConstants<T>, e: Vec3<T>, h: Vec3<T>) -> Self {
        Self {
            e,
            d: e * (consts.eps0 * medium.eps_r()),
            h,
            b: h * (consts.mu0 * medium.mu_r()),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }
}

/// Free charge and current densities.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SourceDensities<T> {
    /// Charge density [C/m^3].
    pub rho: T,
    /// Current density [A/m^2].
    pub j: Vec3<T>,
}

impl<T: Real> SourceDensities<T> {
    pub fn new(rho: T, j: Vec3<T>) -> Result<Self> {
        if !(rho.is_finite() && j.is_finite()) {
            return Err(EmError::OutOfRange { name: "sources", value: rho.as_f64(), bound: "finite".into() });
        }
        Ok(Self { rho, j })
    }

    pub fn none() -> Self {
        Self { rho: T::zero(), j: Vec3::zero() }
    }
}

/// Linearly polarized monochromatic plane wave `E = E0 p cos(k d.x - w t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave<T> {
    amplitude: T,
    omega: T,
    direction: Vec3<T>,
    polarization: Vec3<T>,
    medium: Medium<T>,
}

impl<T: Real> PlaneWave<T> {
    /// Direction and polarization are normalized here and must be orthogonal.
    pub fn new(amplitude: T, omega: T, direction: Vec3<T>, polarization: Vec3<T>, medium: Medium<T>) -> Result<Self> {
        if !amplitude.is_finite() {
            return Err(EmError::OutOfRange { name: "E0", value: amplitude.as_f64(), bound: "finite".into() });
        }
        if !(omega > T::zero() && omega.is_finite()) {
            return Err(EmError::NonPositive { name: "omega", value: omega.as_f64() });
        }
        let direction = direction.normalized().ok_or(EmError::DegenerateVector { name: "direction" })?;
        let polarization = polarization.normalized().ok_or(EmError::DegenerateVector { name: "polarization" })?;
        let dot = direction.dot(polarization);
        if dot.abs() > T::lit(1e-12).max(T::epsilon() * T::lit(4.0)) {
            return Err(EmError::NotTransverse { dot: dot.as_f64() });
        }
        Ok(Self { amplitude, omega, direction, polarization, medium })
    }

    /// Wave along +x polarized along y.
    pub fn along_x(amplitude: T, omega: T, medium: Medium<T>) -> Result<Self> {
        Self::new(amplitude, omega, Vec3::unit_x(), Vec3::unit_y(), medium)
    }

    pub fn amplitude(&self) -> T {
        self.amplitude
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    pub fn direction(&self) -> Vec3<T> {
        self.direction
    }

    pub fn polarization(&self) -> Vec3<T> {
        self.polarization
    }

    pub fn medium(&self) -> &Medium<T> {
        &self.medium
    }

    /// `k = n w / c`.
    pub fn wavenumber(&self, consts: &PhysicalConstants<T>) -> T {
        self.medium.n() * self.omega / consts.c
    }

    pub fn period(&self) -> T {
        T::TAU() / self.omega
    }

    pub fn phase(&self, consts: &PhysicalConstants<T>, x: Vec3<T>, t: T) -> T {
        self.wavenumber(consts) * self.direction.dot(x) - self.omega * t
    }

    /// Ratio `|H| / |E| = n / (mu0 mu_r c)`.
    pub fn admittance(&self, consts: &PhysicalConstants<T>) -> T {
        self.medium.n() / (consts.mu0 * self.medium.mu_r() * consts.c)
    }

    /// Instantaneous fields at position `x` [m] and time `t` [s].
    pub fn field_at(&self, consts: &PhysicalConstants<T>, x: Vec3<T>, t: T) -> FieldPoint<T> {
        let e = self.polarization * (self.amplitude * self.phase(consts, x, t).cos());
        let h = self.direction.cross(e) * self.admittance(consts);
        FieldPoint::in_medium(&self.medium, consts, e, h)
    }

    /// Fields at the crest (phase zero); time averages of quadratic quantities are half
    /// of their crest values.
    pub fn peak_field(&self, consts: &PhysicalConstants<T>) -> FieldPoint<T> {
        self.field_at(consts, Vec3::zero(), T::zero())
    }

    /// Analytic time derivative of `E x H` at `(x, t)` [W/(m^2 s)].
    pub fn poynting_rate_at(&self, consts: &PhysicalConstants<T>, x: Vec3<T>, t: T) -> Vec3<T> {
        let phase = self.phase(consts, x, t);
        let scale = self.admittance(consts) * self.amplitude * self.amplitude * self.omega;
        self.direction * (scale * (phase + phase).sin())
    }

    /// Cycle-averaged Poynting flux magnitude `n E0^2 / (2 mu0 mu_r c)` [W/m^2].
    pub fn mean_intensity(&self, consts: &PhysicalConstants<T>) -> T {
        T::lit(0.5) * self.admittance(consts) * self.amplitude * self.amplitude
    }
}
