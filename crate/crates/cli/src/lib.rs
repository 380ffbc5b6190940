//! Command-line front end for `gyre-core`.

pub mod app;
pub mod render;
