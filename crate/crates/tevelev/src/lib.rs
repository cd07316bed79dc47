//! Std-side front end: profile syntax, records, grids and output formats.

pub mod grid;
pub mod profile_spec;
pub mod record;
pub mod render;

pub use grid::{evaluate_all, multisets, threads_from_env, verify_grid, GridBounds, VerifyReport};
pub use profile_spec::{format_profiles, parse_profiles, parse_sizes, ParseError};
pub use record::{compute, EngineChoice, EngineTimings, EngineValues, Evaluator, Record};
pub use render::{render, Format};

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 2;
    pub const DISAGREEMENT: u8 = 3;
    pub const ORACLE_FAILURE: u8 = 4;
}
