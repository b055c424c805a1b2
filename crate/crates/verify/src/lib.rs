//! Scenario runner for the queerhom workbench: loads or builds coordinate
//! algebras, runs named verification scenarios and writes JSON reports.

pub mod description;
pub mod report;
pub mod scenarios;

pub use description::{load_algebra, AlgebraDescription, LoadError};
pub use report::{Report, Row, Status};
pub use scenarios::{run_scenario, AlgebraSource, Options, Scenario, VerifyError};
