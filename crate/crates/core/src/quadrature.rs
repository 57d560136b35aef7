//! Globally adaptive Gauss-Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate drops below `max(abs_tol, rel_tol * |I|)`. Semi-infinite ranges are
//! mapped onto `[0, 1)` with `x = a + L t / (1 - t)`.

use crate::error::{EmError, Result};
use crate::scalar::Real;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    pub max_intervals: usize,
}

impl<T: Real> QuadratureOptions<T> {
    pub fn relative(rel_tol: T) -> Self {
        Self { rel_tol, abs_tol: T::zero(), max_intervals: 500 }
    }
}

impl<T: Real> Default for QuadratureOptions<T> {
    fn default() -> Self {
        Self::relative(T::lit(1e-10))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error: T,
    pub intervals: usize,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn kronrod15<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> Segment<T> {
    let half = T::lit(0.5);
    let center = half * (a + b);
    let half_len = half * (b - a);
    let fc = f(center);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half_len * T::lit(XGK[j]);
        let pair = f(center - dx) + f(center + dx);
        kronrod = kronrod + T::lit(WGK[j]) * pair;
        if j % 2 == 1 {
            gauss = gauss + T::lit(WG[j / 2]) * pair;
        }
    }
    Segment {
        a,
        b,
        value: kronrod * half_len,
        error: ((kronrod - gauss) * half_len).abs(),
    }
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate<T, F>(mut f: F, a: T, b: T, opts: QuadratureOptions<T>) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    if a == b {
        return Ok(QuadratureResult { value: T::zero(), error: T::zero(), intervals: 0, evaluations: 0 });
    }
    let mut segments = vec![kronrod15(&mut f, a, b)];
    let mut evaluations = 15;
    loop {
        let value: T = segments.iter().map(|s| s.value).sum();
        let error: T = segments.iter().map(|s| s.error).sum();
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= target {
            return Ok(QuadratureResult { value, error, intervals: segments.len(), evaluations });
        }
        if segments.len() >= opts.max_intervals {
            return Err(EmError::QuadratureNotConverged {
                error: error.as_f64(),
                intervals: segments.len(),
                tolerance: target.as_f64(),
            });
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .fold((0, T::neg_infinity()), |(bi, be), (i, s)| if s.error > be { (i, s.error) } else { (bi, be) });
        let seg = segments.swap_remove(worst);
        let mid = T::lit(0.5) * (seg.a + seg.b);
        if mid <= seg.a || mid >= seg.b {
            // Interval collapsed below the scalar's resolution.
            return Err(EmError::QuadratureNotConverged {
                error: error.as_f64(),
                intervals: segments.len() + 1,
                tolerance: target.as_f64(),
            });
        }
        segments.push(kronrod15(&mut f, seg.a, mid));
        segments.push(kronrod15(&mut f, mid, seg.b));
        evaluations += 30;
    }
}

/// Integrates `f` over `[a, inf)`.
///
/// `length_scale` should be comparable to the decay length of `f`; it sets where
/// the mapped variable spends its resolution.
pub fn integrate_semi_infinite<T, F>(
    mut f: F,
    a: T,
    length_scale: T,
    opts: QuadratureOptions<T>,
) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    if !(length_scale > T::zero() && length_scale.is_finite()) {
        return Err(EmError::NonPositive { name: "length_scale", value: length_scale.as_f64() });
    }
    let mapped = |t: T| {
        let one_minus = T::one() - t;
        let x = a + length_scale * t / one_minus;
        let jac = length_scale / (one_minus * one_minus);
        let v = f(x);
        if v == T::zero() {
            T::zero()
        } else {
            v * jac
        }
    };
    integrate(mapped, T::zero(), T::one(), opts)
}
