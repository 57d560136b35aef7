//! Flat, unit-annotated TOML scenario configs.
//!
//! ```toml
//! scenario = "mirror"
//! tag = "both"            # optional: abraham | minkowski | both
//! n = 1.33
//! E0_V_per_m = 1.0e3
//! omega_rad_per_s = 3.5e15
//! sigma_S_per_m = 6.3e7
//!
//! [sweep]
//! n = [1.0, 1.6, 13]      # min, max, count (linear)
//! ```

use std::fmt;
use std::str::FromStr;

use abmink_core::scenarios::{AIR_VISCOSITY, DEFAULT_MAX_K_OVER_ALPHA, DEFAULT_WGM_INDEX};
use abmink_core::MomentumTag;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    Mirror,
    Drag,
    Wgm,
    SphereKick,
    Fiber,
    Bec,
    Interface,
    CovariantChecks,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 8] = [
        ScenarioKind::Mirror,
        ScenarioKind::Drag,
        ScenarioKind::Wgm,
        ScenarioKind::SphereKick,
        ScenarioKind::Fiber,
        ScenarioKind::Bec,
        ScenarioKind::Interface,
        ScenarioKind::CovariantChecks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Mirror => "mirror",
            ScenarioKind::Drag => "drag",
            ScenarioKind::Wgm => "wgm",
            ScenarioKind::SphereKick => "sphere-kick",
            ScenarioKind::Fiber => "fiber",
            ScenarioKind::Bec => "bec",
            ScenarioKind::Interface => "interface",
            ScenarioKind::CovariantChecks => "covariant-checks",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            ScenarioKind::Mirror => "radiation pressure on a metal mirror immersed in a dielectric, three routes",
            ScenarioKind::Drag => "longitudinal photon-drag field in a semiconductor",
            ScenarioKind::Wgm => "Abraham torque from an intensity-modulated whispering-gallery mode",
            ScenarioKind::SphereKick => "laser-kicked microsphere displacement in a viscous fluid",
            ScenarioKind::Fiber => "recoil impulse of a pulse leaving a fiber end face",
            ScenarioKind::Bec => "atomic recoil momentum in a dilute condensate",
            ScenarioKind::Interface => "surface pressure on a dielectric interface",
            ScenarioKind::CovariantChecks => "four-tensor consistency checks on a plane wave",
        }
    }

    /// Parameters accepted by this scenario, in report order.
    pub fn schema(self) -> &'static [ParamSpec] {
        match self {
            ScenarioKind::Mirror => MIRROR,
            ScenarioKind::Drag => DRAG,
            ScenarioKind::Wgm => WGM,
            ScenarioKind::SphereKick => SPHERE_KICK,
            ScenarioKind::Fiber => FIBER,
            ScenarioKind::Bec => BEC,
            ScenarioKind::Interface => INTERFACE,
            ScenarioKind::CovariantChecks => COVARIANT,
        }
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioKind {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ConfigError::UnknownScenario { value: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Requirement {
    Required,
    Default(f64),
    Optional,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub base: &'static str,
    /// Unit spelled in the key, empty for dimensionless inputs.
    pub suffix: &'static str,
    /// Unit as printed in reports.
    pub unit: &'static str,
    pub requirement: Requirement,
}

impl ParamSpec {
    const fn new(base: &'static str, suffix: &'static str, unit: &'static str, requirement: Requirement) -> Self {
        Self { base, suffix, unit, requirement }
    }

    pub fn key(&self) -> String {
        if self.suffix.is_empty() {
            self.base.to_string()
        } else {
            format!("{}_{}", self.base, self.suffix)
        }
    }
}

use Requirement::{Default as Def, Optional, Required};

const MIRROR: &[ParamSpec] = &[
    ParamSpec::new("n", "", "1", Required),
    ParamSpec::new("E0", "V_per_m", "V/m", Required),
    ParamSpec::new("omega", "rad_per_s", "rad/s", Required),
    ParamSpec::new("sigma", "S_per_m", "S/m", Required),
    ParamSpec::new("max_k_over_alpha", "", "1", Def(DEFAULT_MAX_K_OVER_ALPHA)),
    ParamSpec::new("quad_tol", "", "1", Def(1e-8)),
];

const DRAG: &[ParamSpec] = &[
    ParamSpec::new("intensity", "W_per_m2", "W/m^2", Required),
    ParamSpec::new("sigma_a", "m2", "m^2", Required),
    ParamSpec::new("omega", "rad_per_s", "rad/s", Required),
    ParamSpec::new("n", "", "1", Required),
];

const WGM: &[ParamSpec] = &[
    ParamSpec::new("n", "", "1", Def(DEFAULT_WGM_INDEX)),
    ParamSpec::new("a", "m", "m", Required),
    ParamSpec::new("P0", "W", "W", Required),
    ParamSpec::new("omega0", "rad_per_s", "rad/s", Required),
    ParamSpec::new("t", "s", "s", Def(0.0)),
];

const SPHERE_KICK: &[ParamSpec] = &[
    ParamSpec::new("M", "kg", "kg", Required),
    ParamSpec::new("a", "m", "m", Required),
    ParamSpec::new("pulse_energy", "J", "J", Required),
    ParamSpec::new("n", "", "1", Required),
    ParamSpec::new("viscosity", "Pa_s", "Pa s", Required),
    ParamSpec::new("n0", "", "1", Def(1.0)),
    ParamSpec::new("viscosity0", "Pa_s", "Pa s", Def(AIR_VISCOSITY)),
    ParamSpec::new("L0", "m", "m", Required),
    ParamSpec::new("deltaG", "kg_m_per_s", "kg m/s", Optional),
];

const FIBER: &[ParamSpec] = &[
    ParamSpec::new("pulse_energy", "J", "J", Required),
    ParamSpec::new("n", "", "1", Required),
];

const BEC: &[ParamSpec] = &[
    ParamSpec::new("n", "", "1", Required),
    ParamSpec::new("omega", "rad_per_s", "rad/s", Optional),
    ParamSpec::new("vacuum_wavelength", "m", "m", Optional),
];

const INTERFACE: &[ParamSpec] = &[
    ParamSpec::new("E_t", "V_per_m", "V/m", Required),
    ParamSpec::new("n_from", "", "1", Required),
    ParamSpec::new("n_to", "", "1", Required),
];

const COVARIANT: &[ParamSpec] = &[
    ParamSpec::new("n", "", "1", Def(1.5)),
    ParamSpec::new("E0", "V_per_m", "V/m", Def(1.0e3)),
    ParamSpec::new("omega", "rad_per_s", "rad/s", Def(3.0e15)),
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("config is not valid TOML: {0}")]
    Syntax(String),
    #[error("scenario: unknown scenario `{value}` (expected one of: {})", scenario_names())]
    UnknownScenario { value: String },
    #[error("{key}: missing required parameter")]
    Missing { key: String },
    #[error("{key}: expected {expected}, found {found}")]
    Mistyped { key: String, expected: &'static str, found: String },
    #[error("{key}: unit mismatch, this scenario expects `{expected}`")]
    UnitMismatch { key: String, expected: String },
    #[error("{key}: not a parameter of scenario {scenario}")]
    UnknownKey { key: String, scenario: ScenarioKind },
    #[error("{key}: {reason}")]
    InvalidSweep { key: String, reason: String },
    #[error("{key}: given both as a fixed value and in [sweep]")]
    Conflict { key: String },
    #[error("{keys}: give exactly one of these")]
    ExactlyOne { keys: String },
}

fn scenario_names() -> String {
    ScenarioKind::ALL.map(|k| k.name()).join(", ")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub key: String,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Sweep {
    /// Linearly spaced points; the last one is exactly `max`.
    pub fn points(&self) -> Vec<f64> {
        let span = self.max - self.min;
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.max } else { self.min + span * (i as f64 / last) })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioRequest {
    pub scenario: ScenarioKind,
    /// `(key, value)` in schema order; the swept key holds the sweep minimum.
    pub params: Vec<(String, f64)>,
    pub tags: Vec<MomentumTag>,
    pub sweep: Option<Sweep>,
}

impl ScenarioRequest {
    pub fn get(&self, key: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn unit_of(&self, key: &str) -> &'static str {
        self.scenario.schema().iter().find(|p| p.key() == key).map_or("1", |p| p.unit)
    }

    /// Parameter sets for every point, in request order.
    pub fn points(&self) -> Vec<Vec<(String, f64)>> {
        match &self.sweep {
            None => vec![self.params.clone()],
            Some(s) => s
                .points()
                .into_iter()
                .map(|v| {
                    let mut p = self.params.clone();
                    for entry in p.iter_mut().filter(|(k, _)| *k == s.key) {
                        entry.1 = v;
                    }
                    p
                })
                .collect(),
        }
    }
}

fn type_name(v: &toml::Value) -> String {
    v.type_str().to_string()
}

fn number(key: &str, v: &toml::Value) -> Result<f64, ConfigError> {
    match v {
        toml::Value::Float(x) => Ok(*x),
        toml::Value::Integer(i) => Ok(*i as f64),
        other => Err(ConfigError::Mistyped { key: key.to_string(), expected: "a number", found: type_name(other) }),
    }
}

/// Maps a key onto the schema, diagnosing unit mismatches such as `E0_kV_per_m`.
fn resolve_key<'a>(scenario: ScenarioKind, key: &str, path: &str) -> Result<&'a ParamSpec, ConfigError> {
    let schema = scenario.schema();
    if let Some(p) = schema.iter().find(|p| p.key() == key) {
        return Ok(p);
    }
    let known_elsewhere = ScenarioKind::ALL.iter().any(|k| k.schema().iter().any(|p| p.key() == key));
    if !known_elsewhere {
        let base = schema
            .iter()
            .filter(|p| key == p.base || key.starts_with(&format!("{}_", p.base)))
            .max_by_key(|p| p.base.len());
        if let Some(p) = base {
            return Err(ConfigError::UnitMismatch { key: path.to_string(), expected: p.key() });
        }
    }
    Err(ConfigError::UnknownKey { key: path.to_string(), scenario })
}

fn parse_tags(v: &toml::Value) -> Result<Vec<MomentumTag>, ConfigError> {
    let s = v
        .as_str()
        .ok_or_else(|| ConfigError::Mistyped { key: "tag".into(), expected: "a string", found: type_name(v) })?;
    if s.eq_ignore_ascii_case("both") {
        return Ok(MomentumTag::ALL.to_vec());
    }
    s.parse::<MomentumTag>().map(|t| vec![t]).map_err(|_| ConfigError::Mistyped {
        key: "tag".into(),
        expected: "one of abraham, minkowski, both",
        found: format!("\"{s}\""),
    })
}

fn parse_sweep(scenario: ScenarioKind, table: &toml::Table) -> Result<Sweep, ConfigError> {
    let mut entries = table.iter();
    let (name, value) = match (entries.next(), entries.next()) {
        (Some(e), None) => e,
        _ => {
            return Err(ConfigError::InvalidSweep {
                key: "sweep".into(),
                reason: format!("expected exactly one swept parameter, found {}", table.len()),
            })
        }
    };
    let path = format!("sweep.{name}");
    // The swept parameter may be named by its base or its full key.
    let spec = scenario
        .schema()
        .iter()
        .find(|p| p.base == name.as_str())
        .map(Ok)
        .unwrap_or_else(|| resolve_key(scenario, name, &path))?;
    let arr = value
        .as_array()
        .ok_or_else(|| ConfigError::Mistyped { key: path.clone(), expected: "[min, max, count]", found: type_name(value) })?;
    if arr.len() != 3 {
        return Err(ConfigError::InvalidSweep {
            key: path,
            reason: format!("expected [min, max, count], found {} entries", arr.len()),
        });
    }
    let min = number(&format!("{path}[0]"), &arr[0])?;
    let max = number(&format!("{path}[1]"), &arr[1])?;
    let count = match &arr[2] {
        toml::Value::Integer(c) => *c,
        other => {
            return Err(ConfigError::Mistyped {
                key: format!("{path}[2]"),
                expected: "an integer count",
                found: type_name(other),
            })
        }
    };
    if count < 2 {
        return Err(ConfigError::InvalidSweep { key: path, reason: format!("count must be >= 2, got {count}") });
    }
    if !(min.is_finite() && max.is_finite()) {
        return Err(ConfigError::InvalidSweep { key: path, reason: "bounds must be finite".into() });
    }
    Ok(Sweep { key: spec.key(), min, max, count: count as usize })
}

pub fn parse_config(text: &str) -> Result<ScenarioRequest, ConfigError> {
    let doc: toml::Table = text.parse().map_err(|e: toml::de::Error| ConfigError::Syntax(e.message().to_string()))?;
    let scenario: ScenarioKind = match doc.get("scenario") {
        None => return Err(ConfigError::Missing { key: "scenario".into() }),
        Some(toml::Value::String(s)) => s.parse()?,
        Some(other) => {
            return Err(ConfigError::Mistyped { key: "scenario".into(), expected: "a string", found: type_name(other) })
        }
    };
    let tags = doc.get("tag").map(parse_tags).transpose()?.unwrap_or_else(|| MomentumTag::ALL.to_vec());
    let sweep = match doc.get("sweep") {
        None => None,
        Some(toml::Value::Table(t)) => Some(parse_sweep(scenario, t)?),
        Some(other) => {
            return Err(ConfigError::Mistyped { key: "sweep".into(), expected: "a table", found: type_name(other) })
        }
    };

    let mut given: Vec<(&ParamSpec, f64)> = Vec::new();
    for (key, value) in &doc {
        if matches!(key.as_str(), "scenario" | "tag" | "sweep") {
            continue;
        }
        let spec = resolve_key(scenario, key, key)?;
        given.push((spec, number(key, value)?));
    }

    let mut params = Vec::new();
    for spec in scenario.schema() {
        let key = spec.key();
        let fixed = given.iter().find(|(p, _)| p.key() == key).map(|(_, v)| *v);
        let swept = sweep.as_ref().filter(|s| s.key == key).map(|s| s.min);
        let value = match (fixed, swept, spec.requirement) {
            (Some(_), Some(_), _) => return Err(ConfigError::Conflict { key }),
            (Some(v), None, _) | (None, Some(v), _) => Some(v),
            (None, None, Requirement::Default(v)) => Some(v),
            (None, None, Requirement::Optional) => None,
            (None, None, Requirement::Required) => return Err(ConfigError::Missing { key }),
        };
        if let Some(v) = value {
            params.push((key, v));
        }
    }

    if scenario == ScenarioKind::Bec {
        let present = ["omega_rad_per_s", "vacuum_wavelength_m"]
            .iter()
            .filter(|k| params.iter().any(|(p, _)| p == *k))
            .count();
        if present != 1 {
            return Err(ConfigError::ExactlyOne { keys: "omega_rad_per_s, vacuum_wavelength_m".into() });
        }
    }

    Ok(ScenarioRequest { scenario, params, tags, sweep })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MIRROR_CFG: &str = r#"
scenario = "mirror"
n = 1.33
E0_V_per_m = 1.0e3
omega_rad_per_s = 3.5e15
sigma_S_per_m = 6.3e7
"#;

    #[test]
    fn minimal_mirror_gets_both_tags_and_defaults() {
        let req = parse_config(MIRROR_CFG).unwrap();
        assert_eq!(req.scenario, ScenarioKind::Mirror);
        assert_eq!(req.tags, MomentumTag::ALL.to_vec());
        assert_eq!(req.get("max_k_over_alpha"), Some(0.2));
        assert_eq!(req.get("quad_tol"), Some(1e-8));
        assert_eq!(req.points().len(), 1);
    }

    #[test]
    fn sweep_expands_linearly_in_order() {
        let err = parse_config(&MIRROR_CFG.replace("n = 1.33\n", "")).unwrap_err();
        assert!(matches!(err, ConfigError::Missing { ref key } if key == "n"));

        let text = format!("{}\n[sweep]\nn = [1.0, 1.6, 13]\n", MIRROR_CFG.replace("n = 1.33\n", ""));
        let req = parse_config(&text).unwrap();
        let pts = req.sweep.as_ref().unwrap().points();
        assert_eq!(pts.len(), 13);
        assert_eq!(pts[0], 1.0);
        assert_eq!(pts[12], 1.6);
        assert!(pts.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(req.points()[6][0], ("n".to_string(), pts[6]));
    }

    #[test]
    fn wgm_defaults_index_and_names_missing_power() {
        let err = parse_config("scenario = \"wgm\"\na_m = 1e-4\nomega0_rad_per_s = 1000\n").unwrap_err();
        assert!(err.to_string().contains("P0"), "{err}");
        let req = parse_config("scenario = \"wgm\"\na_m = 1e-4\nP0_W = 100\nomega0_rad_per_s = 1000\n").unwrap();
        assert_eq!(req.get("n"), Some(1.45));
    }

    #[test]
    fn unit_mismatch_names_key() {
        let err = parse_config(&MIRROR_CFG.replace("E0_V_per_m", "E0_kV_per_m")).unwrap_err();
        assert_eq!(err, ConfigError::UnitMismatch { key: "E0_kV_per_m".into(), expected: "E0_V_per_m".into() });
        let err = parse_config("scenario = \"drag\"\nintensity_W_per_m2 = 1\nsigma_a_cm2 = 1\nomega_rad_per_s = 1\nn = 1")
            .unwrap_err();
        assert_eq!(err, ConfigError::UnitMismatch { key: "sigma_a_cm2".into(), expected: "sigma_a_m2".into() });
    }

    #[test]
    fn mistyped_and_unknown() {
        let err = parse_config(&MIRROR_CFG.replace("n = 1.33", "n = \"water\"")).unwrap_err();
        assert!(matches!(err, ConfigError::Mistyped { ref key, .. } if key == "n"));
        let err = parse_config(&MIRROR_CFG.replace("mirror", "mirrror")).unwrap_err();
        assert!(err.to_string().starts_with("scenario: unknown scenario `mirrror`"));
        let err = parse_config(&format!("{MIRROR_CFG}\nP0_W = 3\n")).unwrap_err();
        assert!(matches!(err, ConfigError::UnknownKey { ref key, .. } if key == "P0_W"));
    }

    #[test]
    fn sweep_validation() {
        let base = MIRROR_CFG.replace("n = 1.33\n", "");
        for (sweep, key) in
            [("n = [1.0, 1.6, 1]", "sweep.n"), ("n = [1.0, 1.6]", "sweep.n"), ("n = [1.0, 1.6, 2.5]", "sweep.n[2]")]
        {
            let err = parse_config(&format!("{base}\n[sweep]\n{sweep}\n")).unwrap_err();
            assert!(err.to_string().starts_with(key), "{err}");
        }
        let err = parse_config(&format!("{MIRROR_CFG}\n[sweep]\nn = [1.0, 1.6, 3]\n")).unwrap_err();
        assert_eq!(err, ConfigError::Conflict { key: "n".into() });
    }

    #[test]
    fn bec_needs_exactly_one_frequency_input() {
        assert!(parse_config("scenario = \"bec\"\nn = 1.0000001\nvacuum_wavelength_m = 589e-9").is_ok());
        assert!(matches!(parse_config("scenario = \"bec\"\nn = 1.0"), Err(ConfigError::ExactlyOne { .. })));
    }

    #[test]
    fn tag_selection() {
        let req = parse_config(&format!("tag = \"minkowski\"\n{MIRROR_CFG}")).unwrap();
        assert_eq!(req.tags, vec![MomentumTag::Minkowski]);
        assert!(parse_config(&format!("tag = \"x\"\n{MIRROR_CFG}")).is_err());
    }

    #[test]
    fn eight_scenarios_round_trip_names() {
        for k in ScenarioKind::ALL {
            assert_eq!(k.name().parse::<ScenarioKind>().unwrap(), k);
        }
    }
}
