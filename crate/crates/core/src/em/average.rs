//! Cycle averaging of uniformly sampled signals.

use std::ops::{Add, Mul};

use crate::error::{EmError, Result};
use crate::scalar::Real;

/// Mean of a uniformly sampled periodic signal over the largest whole number
/// of periods the samples span.
///
/// Samples are `(t, value)` pairs in increasing time. When the period is an
/// integer multiple of the sample step the mean is a plain rectangle sum over
/// one sample per step, which annihilates every harmonic below the Nyquist
/// limit. Otherwise the trapezoidal rule is used with the final partial step
/// linearly interpolated.
pub fn time_average<T, V>(samples: &[(T, V)], period: T) -> Result<V>
where
    T: Real,
    V: Copy + Default + Add<Output = V> + Mul<T, Output = V>,
{
    if !(period > T::zero() && period.is_finite()) {
        return Err(EmError::NonPositive { name: "period", value: period.as_f64() });
    }
    if samples.len() < 2 {
        return Err(EmError::SpanTooShort { span: 0.0, period: period.as_f64() });
    }
    let t0 = samples[0].0;
    let span = samples[samples.len() - 1].0 - t0;
    let step = span / T::from_usize(samples.len() - 1);
    let step_tol = step * T::epsilon().sqrt();
    for (i, w) in samples.windows(2).enumerate() {
        let dt = w[1].0 - w[0].0;
        if (dt - step).abs() > step_tol || !(dt > T::zero()) {
            return Err(EmError::NonUniformSampling { index: i, step: dt.as_f64(), expected: step.as_f64() });
        }
    }
    let periods = (span / period * (T::one() + T::epsilon().sqrt())).floor();
    if periods < T::one() {
        return Err(EmError::SpanTooShort { span: span.as_f64(), period: period.as_f64() });
    }
    let window = periods * period;
    let steps_exact = window / step;
    let steps = steps_exact.round();
    if (steps_exact - steps).abs() <= T::lit(1e-6) * steps {
        let m = steps.to_usize().unwrap_or(0).min(samples.len());
        let sum = samples[..m].iter().fold(V::default(), |acc, s| acc + s.1);
        return Ok(sum * T::from_usize(m).recip());
    }

    // Trapezoid over whole steps, then a partial step to close the window.
    let full = steps_exact.floor().to_usize().unwrap_or(0).min(samples.len() - 1);
    let half = T::lit(0.5);
    let mut acc = V::default();
    for w in samples[..=full].windows(2) {
        acc = acc + (w[0].1 + w[1].1) * (half * step);
    }
    let frac = steps_exact - T::from_usize(full);
    if frac > T::zero() && full + 1 < samples.len() {
        let a = samples[full].1;
        let b = samples[full + 1].1;
        let end = a * (T::one() - frac) + b * frac;
        acc = acc + (a + end) * (half * frac * step);
    }
    Ok(acc * window.recip())
}
