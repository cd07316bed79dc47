//! Exact computation of generalized Tevelev degrees of the projective line.
//!
//! A Tevelev degree counts degree-`d` covers `C -> P^1` from a general pointed
//! genus-`g` curve that send marked points to prescribed general targets,
//! optionally with several marked points sharing a target and prescribed
//! ramification there. This crate evaluates those counts three independent
//! ways, which must agree exactly:
//!
//! - [`closed_form`]: binomial closed formulas,
//! - [`recursion`]: the genus recursion down to the genus-0 base case,
//! - [`schubert_engine`]: inclusion-exclusion over Schubert integrals on
//!   `Gr(2, N)`, built on the intersection kernel in [`schubert`].
//!
//! [`genus0`] is an exact linear-algebra oracle that constructs the unique
//! genus-0 cover for random point configurations.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_form;
mod error;
pub mod genus0;
mod linalg;
mod poly;
pub mod problem;
pub mod recursion;
pub mod schubert;
pub mod schubert_engine;

pub use closed_form::{tev_closed, tev_cps_single, tev_ell_nonneg, EngineTag, TevValue};
pub use error::{Error, Result};
pub use genus0::{build_system, certify, run_trials, CoverCertificate, PointConfig, TrialSummary};
pub use problem::{Condition, DerivedParams, Profile, TevelevProblem};
pub use recursion::{tev_recursive, RecursionEngine, RecursionKey, SplitRule};
pub use schubert::{Partition2, SchubertClass};
pub use schubert_engine::{tev_farkas_lian_single, tev_m_genus0, tev_schubert, IeTerm};
