//! File formats, JSON reports, experiment runner and command-line front end
//! for [`mexlab_core`].

pub mod cli;
pub mod edgelist;
pub mod error;
pub mod experiment;
pub mod literal;
pub mod report;

pub use cli::run;
pub use error::CliError;
