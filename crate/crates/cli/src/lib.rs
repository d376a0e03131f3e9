//! Command-line front end: flag parsing, JSON-lines records and tables.

pub mod app;
pub mod records;
pub mod text;

pub use app::{run, Outcome};
