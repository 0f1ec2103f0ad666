//! Command-line front end: subcommands, report output, the golden file and
//! the acceptance runner.

pub mod app;
pub mod error;
pub mod golden;
pub mod oracle;
pub mod output;
pub mod verify;

pub use app::run;
pub use error::CliError;
