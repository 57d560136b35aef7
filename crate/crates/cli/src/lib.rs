//! Config parsing, scenario dispatch and report emission for `abmink`.

pub mod checks;
pub mod config;
pub mod emit;
pub mod report;
pub mod run;

pub use config::{parse_config, ConfigError, ScenarioKind, ScenarioRequest, Sweep};
pub use emit::{emit, Format};
pub use report::ScenarioReport;
pub use run::{run, RunError};
