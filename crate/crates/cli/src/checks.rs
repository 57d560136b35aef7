//! Built-in cross-check suite behind `abmink check`.

use abmink_core::covariant::{divergence_residual, plane_wave_sampler};
use abmink_core::em::{mechanical_momentum_density, momentum_density};
use abmink_core::scenarios::mirror_pressure_all;
use abmink_core::{Constants, EmError, FieldPoint, Medium, MirrorConfig, MomentumTag, PlaneWave, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const TOLERANCE_ENV: &str = "ABMINK_TOL";
pub const LEDGER_SEED: u64 = 0x00ab_1c0d;

/// Second-order convergence band for the divergence residual ratio.
pub const CONVERGENCE_TARGET: f64 = 4.0;
pub const CONVERGENCE_BAND: f64 = 0.2;

/// Cross-check tolerance, overridden by `ABMINK_TOL` when set.
pub fn tolerance_from_env() -> Result<f64, String> {
    match std::env::var(TOLERANCE_ENV) {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(format!("{TOLERANCE_ENV}: expected a positive number, got `{s}`")),
        },
    }
}

fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| if i + 1 == count { hi } else { lo + (hi - lo) * i as f64 / (count - 1) as f64 }).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorGrid {
    pub max_disagreement: f64,
    pub evaluated: usize,
    /// Grid points rejected by the good-conductor guard.
    pub rejected: usize,
}

/// Three-way mirror comparison on a 5 x 5 x 5 grid.
///
/// `n` in [1.0, 1.6], `sigma` at half-decade steps over [1e6, 1e8] S/m,
/// `omega` across 700 nm to 400 nm. Points outside `k/alpha < 0.2` must be
/// refused by the guard and are counted, not compared.
pub fn mirror_grid(quad_tol: f64) -> Result<MirrorGrid, EmError> {
    let k = Constants::codata();
    let omega = |lambda: f64| std::f64::consts::TAU * k.c / lambda;
    let mut grid = MirrorGrid { max_disagreement: 0.0, evaluated: 0, rejected: 0 };
    for n in linspace(1.0, 1.6, 5) {
        for exponent in linspace(6.0, 8.0, 5) {
            let sigma = 10f64.powf(exponent);
            for w in linspace(omega(700e-9), omega(400e-9), 5) {
                let cfg = MirrorConfig::new(Medium::nonmagnetic(n)?, 1e3, w, sigma)?;
                match mirror_pressure_all(&cfg, quad_tol, &k) {
                    Ok(all) => {
                        grid.evaluated += 1;
                        grid.max_disagreement = grid.max_disagreement.max(all.max_disagreement());
                    }
                    Err(EmError::ConductorRegime { .. }) => grid.rejected += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(grid)
}

/// Residual ratios `r(h) / r(h/2)` for three successive halvings from `lambda/20`.
pub fn divergence_ratios() -> Result<Vec<f64>, EmError> {
    let k = Constants::codata();
    let wave = PlaneWave::new(
        1e3,
        3.0e15,
        Vec3::new(1.0, 0.5, 0.0),
        Vec3::new(0.0, 0.0, 1.0),
        Medium::nonmagnetic(1.5)?,
    )?;
    let sampler = plane_wave_sampler(&wave, &k);
    let lambda = std::f64::consts::TAU / wave.wavenumber(&k);
    let point = [0.13 * lambda, 0.07 * lambda, 0.0, 0.21 * wave.period()];
    let mut h = lambda / 20.0;
    let mut previous = divergence_residual(&sampler, point, h, &k)?.magnitude();
    let mut ratios = Vec::new();
    for _ in 0..3 {
        h /= 2.0;
        let r = divergence_residual(&sampler, point, h, &k)?.magnitude();
        ratios.push(previous / r);
        previous = r;
    }
    Ok(ratios)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LedgerCheck {
    /// Max relative gap between `g_A + g_mech` and `g_M`.
    pub ledger: f64,
    /// Max relative gap between `g_M` and `n^2 g_A`.
    pub ladder: f64,
    pub samples: usize,
}

/// Momentum bookkeeping over random nonmagnetic field points.
pub fn momentum_ledger(samples: usize, seed: u64) -> Result<LedgerCheck, EmError> {
    let k = Constants::codata();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let unit = |rng: &mut ChaCha8Rng| {
        Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    };
    let mut out = LedgerCheck { ledger: 0.0, ladder: 0.0, samples };
    for _ in 0..samples {
        let n: f64 = rng.gen_range(1.0..3.0);
        let e0 = 10f64.powf(rng.gen_range(0.0..6.0));
        let medium = Medium::nonmagnetic(n)?;
        let e = unit(&mut rng) * e0;
        let h = unit(&mut rng) * (e0 * n / (k.mu0 * k.c));
        let fp = FieldPoint::in_medium(&medium, &k, e, h);
        let ga = momentum_density(&fp, MomentumTag::Abraham, &k);
        let gm = momentum_density(&fp, MomentumTag::Minkowski, &k);
        let mech = mechanical_momentum_density(&medium, &fp, &k)?;
        out.ledger = out.ledger.max((ga + mech).rel_diff(gm));
        out.ladder = out.ladder.max(gm.rel_diff(ga * medium.n2()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CheckItem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

fn failed(name: &'static str, e: EmError) -> CheckItem {
    CheckItem { name, passed: false, detail: format!("error: {e}") }
}

pub fn run_checks(tol: f64) -> Vec<CheckItem> {
    let mut items = Vec::new();

    items.push(match mirror_grid(1e-8) {
        Ok(g) => CheckItem {
            name: "three-way mirror",
            passed: g.evaluated > 0 && g.max_disagreement <= tol,
            detail: format!(
                "max pairwise disagreement {:.3e} (tol {tol:.1e}) over {} points, {} refused by k/alpha guard",
                g.max_disagreement, g.evaluated, g.rejected
            ),
        },
        Err(e) => failed("three-way mirror", e),
    });

    items.push(match divergence_ratios() {
        Ok(r) => {
            let band = CONVERGENCE_TARGET * CONVERGENCE_BAND;
            CheckItem {
                name: "divergence convergence",
                passed: r.iter().all(|x| (x - CONVERGENCE_TARGET).abs() <= band),
                detail: format!(
                    "halving ratios {} (want {CONVERGENCE_TARGET} +/- {band})",
                    r.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(", ")
                ),
            }
        }
        Err(e) => failed("divergence convergence", e),
    });

    items.push(match momentum_ledger(1000, LEDGER_SEED) {
        Ok(l) => CheckItem {
            name: "momentum ledger",
            passed: l.ledger <= tol && l.ladder <= tol,
            detail: format!(
                "g_A + g_mech vs g_M {:.3e}, g_M vs n^2 g_A {:.3e} (tol {tol:.1e}) over {} points",
                l.ledger, l.ladder, l.samples
            ),
        },
        Err(e) => failed("momentum ledger", e),
    });

    items
}
