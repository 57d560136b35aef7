//! Rest-frame energy, momentum, stress and force densities.
//!
//! Stress, Poynting vector and energy density are shared by both formalisms;
//! only the momentum density depends on the [`MomentumTag`].

use crate::constants::PhysicalConstants;
use crate::error::Result;
use crate::scalar::Real;
use crate::vector::{Mat3, Vec3};

use super::medium::{FieldPoint, Medium, MomentumTag, SourceDensities};

/// Energy flux `S = E x H` [W/m^2].
#[inline]
pub fn poynting<T: Real>(fp: &FieldPoint<T>) -> Vec3<T> {
    fp.e.cross(fp.h)
}

/// Momentum density [kg m^-2 s^-1]: `D x B` for Minkowski, `E x H / c^2` for Abraham.
pub fn momentum_density<T: Real>(fp: &FieldPoint<T>, tag: MomentumTag, consts: &PhysicalConstants<T>) -> Vec3<T> {
    match tag {
        MomentumTag::Minkowski => fp.d.cross(fp.b),
        MomentumTag::Abraham => poynting(fp) * consts.c2().recip(),
    }
}

/// `w = (E.D + H.B) / 2` [J/m^3].
#[inline]
pub fn energy_density<T: Real>(fp: &FieldPoint<T>) -> T {
    T::lit(0.5) * (fp.e.dot(fp.d) + fp.h.dot(fp.b))
}

/// Stress tensor `S_ik = -E_i D_k - H_i B_k + delta_ik w` [Pa].
///
/// This is the negative of the Maxwell stress; the force on a volume is
/// `-div S`.
pub fn stress_tensor<T: Real>(fp: &FieldPoint<T>) -> Mat3<T> {
    let w = energy_density(fp);
    Mat3::from_fn(|i, k| {
        let diag = if i == k { w } else { T::zero() };
        diag - fp.e[i] * fp.d[k] - fp.h[i] * fp.b[k]
    })
}

/// All rest-frame quantities derived from one field sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmQuantities<T> {
    /// Poynting vector [W/m^2].
    pub poynting: Vec3<T>,
    /// Energy density [J/m^3].
    pub energy: T,
    /// Abraham momentum density.
    pub g_abraham: Vec3<T>,
    /// Minkowski momentum density.
    pub g_minkowski: Vec3<T>,
    /// Stress tensor [Pa].
    pub stress: Mat3<T>,
}

impl<T: Real> EmQuantities<T> {
    pub fn evaluate(fp: &FieldPoint<T>, consts: &PhysicalConstants<T>) -> Self {
        Self {
            poynting: poynting(fp),
            energy: energy_density(fp),
            g_abraham: momentum_density(fp, MomentumTag::Abraham, consts),
            g_minkowski: momentum_density(fp, MomentumTag::Minkowski, consts),
            stress: stress_tensor(fp),
        }
    }

    pub fn momentum(&self, tag: MomentumTag) -> Vec3<T> {
        match tag {
            MomentumTag::Abraham => self.g_abraham,
            MomentumTag::Minkowski => self.g_minkowski,
        }
    }
}

/// Rest-frame Minkowski force density [N/m^3]:
/// `rho E + J x B - (eps0/2) E^2 grad eps_r - (mu0/2) H^2 grad mu_r`.
pub fn minkowski_force_density<T: Real>(
    src: &SourceDensities<T>,
    fp: &FieldPoint<T>,
    grad_eps: Vec3<T>,
    grad_mu: Vec3<T>,
    consts: &PhysicalConstants<T>,
) -> Vec3<T> {
    let half = T::lit(0.5);
    fp.e * src.rho + src.j.cross(fp.b)
        - grad_eps * (half * consts.eps0 * fp.e.norm_squared())
        - grad_mu * (half * consts.mu0 * fp.h.norm_squared())
}

/// Gradient-index force common to both formalisms, `-(eps0/2) E^2 grad n^2` [N/m^3].
pub fn abraham_minkowski_force<T: Real>(fp: &FieldPoint<T>, grad_n2: Vec3<T>, consts: &PhysicalConstants<T>) -> Vec3<T> {
    grad_n2 * -(T::lit(0.5) * consts.eps0 * fp.e.norm_squared())
}

/// Abraham term `((n^2 - 1) / c^2) d(E x H)/dt` [N/m^3]. Nonmagnetic media only.
pub fn abraham_term<T: Real>(medium: &Medium<T>, ds_dt: Vec3<T>, consts: &PhysicalConstants<T>) -> Result<Vec3<T>> {
    medium.require_nonmagnetic()?;
    Ok(ds_dt * ((medium.n2() - T::one()) / consts.c2()))
}

/// Source-free Abraham force density in a nonmagnetic medium:
/// the gradient-index force plus the Abraham term.
pub fn abraham_force_density<T: Real>(
    medium: &Medium<T>,
    fp: &FieldPoint<T>,
    grad_n2: Vec3<T>,
    ds_dt: Vec3<T>,
    consts: &PhysicalConstants<T>,
) -> Result<Vec3<T>> {
    let term = abraham_term(medium, ds_dt, consts)?;
    Ok(abraham_minkowski_force(fp, grad_n2, consts) + term)
}

/// Mechanical momentum density `((n^2 - 1) / c^2) E x H` carried by the medium
/// along with an Abraham field momentum. Nonmagnetic media only.
pub fn mechanical_momentum_density<T: Real>(
    medium: &Medium<T>,
    fp: &FieldPoint<T>,
    consts: &PhysicalConstants<T>,
) -> Result<Vec3<T>> {
    medium.require_nonmagnetic()?;
    Ok(poynting(fp) * ((medium.n2() - T::one()) / consts.c2()))
}

/// Surface force per unit area on a thin index step at normal incidence [Pa].
///
/// Integral of `-(eps0/2) E^2 dn^2/dx` across the transition with the
/// tangential field `e_t` continuous. Positive values point from the
/// `n_from` side towards the `n_to` side.
pub fn interface_pressure<T: Real>(e_t: T, n_from: T, n_to: T, consts: &PhysicalConstants<T>) -> T {
    T::lit(0.5) * consts.eps0 * e_t * e_t * (n_from * n_from - n_to * n_to)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::em::PlaneWave;

    fn k() -> PhysicalConstants<f64> {
        PhysicalConstants::codata()
    }

    fn raw(e: [f64; 3], h: [f64; 3]) -> FieldPoint<f64> {
        FieldPoint::in_medium(&Medium::vacuum(), &k(), Vec3::from_array(e), Vec3::from_array(h))
    }

    #[test]
    fn poynting_cross_products() {
        assert_eq!(poynting(&raw([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])), Vec3::new(0.0, 0.0, 1.0));
        assert_eq!(poynting(&raw([0.0; 3], [0.0, 1.0, 0.0])), Vec3::zero());
        assert_eq!(poynting(&raw([2.0, 0.0, 0.0], [0.0, 3.0, 0.0])), Vec3::new(0.0, 0.0, 6.0));
    }

    #[test]
    fn vacuum_momentum_densities_coincide() {
        let fp = raw([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]);
        let ga = momentum_density(&fp, MomentumTag::Abraham, &k());
        let gm = momentum_density(&fp, MomentumTag::Minkowski, &k());
        assert!(ga.rel_diff(gm) < 1e-15);
        // 1 / c^2 = 1.112650056e-17
        assert!((ga.z - 1.112_650_056_053_618_4e-17).abs() < 1e-26);
    }

    #[test]
    fn minkowski_exceeds_abraham_by_n_squared() {
        let k = k();
        let wave = PlaneWave::along_x(100.0, 3.0e15, Medium::nonmagnetic(1.5).unwrap()).unwrap();
        let fp = wave.peak_field(&k);
        let ga = momentum_density(&fp, MomentumTag::Abraham, &k);
        let gm = momentum_density(&fp, MomentumTag::Minkowski, &k);
        assert!(gm.rel_diff(ga * 2.25) < 1e-12);
    }

    #[test]
    fn energy_density_values() {
        assert_eq!(energy_density(&FieldPoint::<f64>::zero()), 0.0);
        let w = energy_density(&raw([1.0, 0.0, 0.0], [0.0; 3]));
        assert!((w - 4.427_093_906_4e-12).abs() < 1e-21);
    }

    #[test]
    fn plane_wave_electric_and_magnetic_halves_balance() {
        let k = k();
        let wave = PlaneWave::along_x(50.0, 2.0e15, Medium::nonmagnetic(1.33).unwrap()).unwrap();
        let n = 256;
        let (mut we, mut wm) = (0.0, 0.0);
        for i in 0..n {
            let t = wave.period() * i as f64 / n as f64;
            let fp = wave.field_at(&k, Vec3::new(1e-7, 0.0, 0.0), t);
            we += 0.5 * fp.e.dot(fp.d);
            wm += 0.5 * fp.h.dot(fp.b);
        }
        assert!(f64::rel_diff(we, wm) < 1e-12);
    }

    #[test]
    fn stress_tensor_single_component_field() {
        let k = k();
        assert_eq!(stress_tensor(&FieldPoint::<f64>::zero()), Mat3::zero());
        let e0 = 7.0;
        let s = stress_tensor(&raw([e0, 0.0, 0.0], [0.0; 3]));
        let expected = Mat3::diag(-1.0, 1.0, 1.0) * (k.eps0 * e0 * e0 / 2.0);
        assert!(s.rel_diff(&expected) < 1e-15);
    }

    #[test]
    fn minkowski_force_terms() {
        let k = k();
        let z = Vec3::zero();
        let none = SourceDensities::none();
        let fp = raw([0.3, 0.2, 0.1], [0.5, 0.0, 0.0]);
        assert_eq!(minkowski_force_density(&none, &fp, z, z, &k), z);
        let src = SourceDensities::new(1.0, z).unwrap();
        let f = minkowski_force_density(&src, &raw([1.0, 0.0, 0.0], [0.0; 3]), z, z, &k);
        assert_eq!(f, Vec3::new(1.0, 0.0, 0.0));
        let f = minkowski_force_density(&none, &raw([1.0, 0.0, 0.0], [0.0; 3]), Vec3::new(2.0, 0.0, 0.0), z, &k);
        assert!((f.x + k.eps0).abs() < 1e-27 && f.y == 0.0 && f.z == 0.0);
    }

    #[test]
    fn abraham_term_values() {
        let k = k();
        let vac = Medium::vacuum();
        assert_eq!(abraham_term(&vac, Vec3::new(1e9, 2.0, 3.0), &k).unwrap(), Vec3::zero());
        let glass = Medium::nonmagnetic(1.5).unwrap();
        assert_eq!(abraham_term(&glass, Vec3::zero(), &k).unwrap(), Vec3::zero());
        let f = abraham_term(&glass, Vec3::new(9e16, 0.0, 0.0), &k).unwrap();
        // 1.25 * 9e16 / c^2
        assert!((f.x - 1.251_731_313_060_320_7).abs() < 1e-12);
        let magnetic = Medium::new(2.0, 1.1).unwrap();
        assert!(abraham_term(&magnetic, Vec3::zero(), &k).is_err());
        assert!(mechanical_momentum_density(&magnetic, &FieldPoint::zero(), &k).is_err());
    }

    #[test]
    fn abraham_force_is_sum_of_parts() {
        let k = k();
        let glass = Medium::nonmagnetic(1.5).unwrap();
        let fp = FieldPoint::in_medium(&glass, &k, Vec3::new(3.0, -1.0, 2.0), Vec3::new(0.01, 0.02, -0.005));
        let grad = Vec3::new(4.0, 0.5, -1.0);
        let ds = Vec3::new(1e17, -3e16, 5e15);
        let total = abraham_force_density(&glass, &fp, grad, ds, &k).unwrap();
        let parts = abraham_minkowski_force(&fp, grad, &k) + abraham_term(&glass, ds, &k).unwrap();
        assert_eq!(total, parts);
        let static_only = abraham_force_density(&glass, &fp, grad, Vec3::zero(), &k).unwrap();
        assert_eq!(static_only, abraham_minkowski_force(&fp, grad, &k));
        let homogeneous = abraham_force_density(&glass, &fp, Vec3::zero(), Vec3::zero(), &k).unwrap();
        assert_eq!(homogeneous.max_abs(), 0.0);
    }

    #[test]
    fn mechanical_momentum_values() {
        let k = k();
        let vac = Medium::vacuum();
        assert_eq!(mechanical_momentum_density(&vac, &raw([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]), &k).unwrap(), Vec3::zero());
        let glass = Medium::nonmagnetic(1.5).unwrap();
        let fp = FieldPoint::in_medium(&glass, &k, Vec3::unit_x(), Vec3::unit_y());
        let g = mechanical_momentum_density(&glass, &fp, &k).unwrap();
        assert!(f64::rel_diff(g.z, 1.25 / (k.c * k.c)) < 1e-15);
    }

    #[test]
    fn interface_pressure_sign_and_magnitude() {
        let k = k();
        assert_eq!(interface_pressure(5.0, 1.4, 1.4, &k), 0.0);
        assert!(interface_pressure(10.0, 1.0, 1.33, &k) < 0.0);
        let p = interface_pressure(1.0, 2f64.sqrt(), 1.0, &k);
        assert!((p - 4.427_093_906_4e-12).abs() < 1e-21);
    }
}
