//! Text formats, command-line surface and reports for `dpf-core`.

pub mod app;
pub mod formats;
pub mod report;
