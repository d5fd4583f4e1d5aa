//! Expression language, JSON file formats and command line front end for `hilbert-core`.

pub mod cli;
pub mod dsl;
pub mod format;
pub mod json;

pub use cli::run;
pub use format::format_value;
