//! Scenario files, study execution and result files for `ript-core`.

pub mod cli;
pub mod config;
pub mod output;
pub mod run;
pub mod table;
pub mod units;
pub mod validate;

pub use config::{parse, to_text, ScenarioConfig};
pub use run::{run_study, RunError, StudyOutput};
