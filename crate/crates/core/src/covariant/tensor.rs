//! Real storage of the imaginary-time four-tensors.
//!
//! With `x4 = i c t` every component carrying `m` time indices holds a factor
//! `(i/c)^m`. That factor is stripped on storage, so index 3 of a stored tensor
//! holds `E`, `D`, the Poynting vector and so on directly. Contracting over the
//! time index then picks up `(i/c)^2 = -1/c^2`, i.e. the stored tensors are
//! contracted with the metric `diag(1, 1, 1, -1/c^2)`, and `delta_44` becomes
//! `-c^2`.
//!
//! Units are the formal `eps0 = mu0 = 1` system with `c` kept explicit:
//! `D = eps E`, `B = mu H`, energy density `(E.D / c^2 + B.H) / 2`. See
//! [`NormalizedFields`] for the bridge to SI.

use crate::constants::PhysicalConstants;
use crate::em::FieldPoint;
use crate::scalar::Real;
use crate::vector::{Mat3, Vec3};

/// Index of the time component in stored tensors.
pub const TIME: usize = 3;

pub(crate) type Array4<T> = [[T; 4]; 4];

/// Diagonal of the contraction metric.
#[inline]
pub(crate) fn metric<T: Real>(c: T, alpha: usize) -> T {
    if alpha == TIME {
        -(c * c).recip()
    } else {
        T::one()
    }
}

/// Diagonal of the stored Kronecker delta.
#[inline]
pub(crate) fn delta<T: Real>(c: T, alpha: usize) -> T {
    if alpha == TIME {
        -(c * c)
    } else {
        T::one()
    }
}

/// Antisymmetric array with `a[3][k] = t[k]` and spatial block built from `s`
/// by the cyclic rule `a_12 = s_3`, `a_23 = s_1`, `a_31 = s_2`.
fn antisymmetric<T: Real>(t: Vec3<T>, s: Vec3<T>) -> Array4<T> {
    let z = T::zero();
    [
        [z, s.z, -s.y, -t.x],
        [-s.z, z, s.x, -t.y],
        [s.y, -s.x, z, -t.z],
        [t.x, t.y, t.z, z],
    ]
}

fn time_part<T: Real>(a: &Array4<T>) -> Vec3<T> {
    Vec3::new(a[TIME][0], a[TIME][1], a[TIME][2])
}

fn space_part<T: Real>(a: &Array4<T>) -> Vec3<T> {
    Vec3::new(a[1][2], a[2][0], a[0][1])
}

fn antisymmetric_exact<T: Real>(a: &Array4<T>) -> bool {
    (0..4).all(|m| (0..4).all(|n| a[m][n] == -a[n][m]))
}

/// Field tensor `F`: `F_4k = (i/c) E_k`, `F_ik = B_l` (cyclic).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldTensor4<T> {
    pub(crate) a: Array4<T>,
}

impl<T: Real> FieldTensor4<T> {
    pub fn from_e_b(e: Vec3<T>, b: Vec3<T>) -> Self {
        Self { a: antisymmetric(e, b) }
    }

    pub fn zero() -> Self {
        Self::from_e_b(Vec3::zero(), Vec3::zero())
    }

    pub fn e(&self) -> Vec3<T> {
        time_part(&self.a)
    }

    pub fn b(&self) -> Vec3<T> {
        space_part(&self.a)
    }

    /// Stored component `(mu, nu)`, indices `0..4` with 3 the time index.
    pub fn get(&self, mu: usize, nu: usize) -> T {
        self.a[mu][nu]
    }

    pub fn is_antisymmetric(&self) -> bool {
        antisymmetric_exact(&self.a)
    }
}

/// Excitation tensor `H`: `H_4k = (i/c) D_k`, `H_ik = H_l` (cyclic).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcitationTensor4<T> {
    pub(crate) a: Array4<T>,
}

impl<T: Real> ExcitationTensor4<T> {
    pub fn from_d_h(d: Vec3<T>, h: Vec3<T>) -> Self {
        Self { a: antisymmetric(d, h) }
    }

    pub fn d(&self) -> Vec3<T> {
        time_part(&self.a)
    }

    pub fn h(&self) -> Vec3<T> {
        space_part(&self.a)
    }

    pub fn get(&self, mu: usize, nu: usize) -> T {
        self.a[mu][nu]
    }

    pub fn is_antisymmetric(&self) -> bool {
        antisymmetric_exact(&self.a)
    }
}

/// Energy-momentum tensor in stored form.
///
/// Row 3 holds the Poynting vector, column 3 holds `c^2 g`, and the `(3, 3)`
/// entry holds `c^2 w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmTensor4<T> {
    pub(crate) a: Array4<T>,
    pub(crate) c: T,
}

impl<T: Real> EmTensor4<T> {
    pub fn get(&self, mu: usize, nu: usize) -> T {
        self.a[mu][nu]
    }

    pub fn stress(&self) -> Mat3<T> {
        Mat3::from_fn(|i, k| self.a[i][k])
    }

    pub fn poynting(&self) -> Vec3<T> {
        time_part(&self.a)
    }

    pub fn momentum_density(&self) -> Vec3<T> {
        Vec3::new(self.a[0][TIME], self.a[1][TIME], self.a[2][TIME]) * (self.c * self.c).recip()
    }

    pub fn energy_density(&self) -> T {
        self.a[TIME][TIME] / (self.c * self.c)
    }

    /// Rest-frame quantities converted back to SI.
    pub fn to_si(&self, consts: &PhysicalConstants<T>) -> SiTensorQuantities<T> {
        let s = consts.mu0;
        SiTensorQuantities {
            stress: self.stress() * s,
            poynting: self.poynting() * s,
            momentum: self.momentum_density() * s,
            energy: self.energy_density() * s,
        }
    }
}

/// Stress, flux, momentum and energy densities recovered from an [`EmTensor4`], SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiTensorQuantities<T> {
    pub stress: Mat3<T>,
    pub poynting: Vec3<T>,
    pub momentum: Vec3<T>,
    pub energy: T,
}

/// Fields expressed in the normalized (`eps0 = mu0 = 1`, explicit `c`) units.
///
/// The map from SI is `E -> E / mu0`, `D -> c^2 D`, `H -> H`, `B -> B / mu0`.
/// It preserves `D = eps E` and `B = mu H`, and scales every quadratic
/// quantity (stress, energy, flux, momentum density) by the common factor `1 / mu0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedFields<T> {
    pub e: Vec3<T>,
    pub d: Vec3<T>,
    pub h: Vec3<T>,
    pub b: Vec3<T>,
}

impl<T: Real> NormalizedFields<T> {
    pub fn from_si(fp: &FieldPoint<T>, consts: &PhysicalConstants<T>) -> Self {
        let inv_mu0 = consts.mu0.recip();
        Self { e: fp.e * inv_mu0, d: fp.d * consts.c2(), h: fp.h, b: fp.b * inv_mu0 }
    }

    pub fn to_si(&self, consts: &PhysicalConstants<T>) -> FieldPoint<T> {
        FieldPoint::new(self.e * consts.mu0, self.d * consts.c2().recip(), self.h, self.b * consts.mu0)
    }

    pub fn tensors(&self) -> (FieldTensor4<T>, ExcitationTensor4<T>) {
        (FieldTensor4::from_e_b(self.e, self.b), ExcitationTensor4::from_d_h(self.d, self.h))
    }
}

/// Builds both four-tensors from an SI field sample.
pub fn tensors_from_field_point<T: Real>(
    fp: &FieldPoint<T>,
    consts: &PhysicalConstants<T>,
) -> (FieldTensor4<T>, ExcitationTensor4<T>) {
    NormalizedFields::from_si(fp, consts).tensors()
}

/// `S_mu nu = F_mu a H_nu a - (1/4) delta_mu nu F_ab H_ab` with the stored metric.
///
/// The quarter (equivalently one half with each index pair counted once)
/// reproduces the rest-frame stress, flux, momentum and energy densities.
pub fn minkowski_tensor4<T: Real>(
    f: &FieldTensor4<T>,
    h: &ExcitationTensor4<T>,
    consts: &PhysicalConstants<T>,
) -> EmTensor4<T> {
    let c = consts.c;
    let g: [T; 4] = std::array::from_fn(|a| metric(c, a));
    let mut invariant = T::zero();
    for a in 0..4 {
        for b in 0..4 {
            invariant = invariant + f.a[a][b] * h.a[a][b] * g[a] * g[b];
        }
    }
    let quarter = T::lit(0.25);
    let mut out = [[T::zero(); 4]; 4];
    for (mu, row) in out.iter_mut().enumerate() {
        for (nu, v) in row.iter_mut().enumerate() {
            let mut acc = T::zero();
            for a in 0..4 {
                acc = acc + f.a[mu][a] * h.a[nu][a] * g[a];
            }
            if mu == nu {
                acc = acc - quarter * delta(c, mu) * invariant;
            }
            *v = acc;
        }
    }
    EmTensor4 { a: out, c }
}
