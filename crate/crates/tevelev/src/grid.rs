//! Grid enumeration and cross-engine verification.

use std::time::Instant;

use rayon::prelude::*;
use rayon::ThreadPool;
use serde::{Deserialize, Serialize};
use tevelev_core::TevelevProblem;

use crate::record::{EngineChoice, Evaluator, Record};

pub const THREADS_VAR: &str = "TEVELEV_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridBounds {
    pub g_max: u32,
    pub ell_min: i64,
    pub ell_max: i64,
    pub k_max: u32,
    pub size_max: u32,
}

/// Non-increasing size lists of length `k` with entries in `1..=max`.
pub fn multisets(k: u32, max: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in (1..=cap).rev() {
            cur.push(s);
            go(left - 1, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 || max > 0 {
        go(k, max, &mut Vec::new(), &mut out);
    }
    out
}

impl GridBounds {
    /// Every problem in the box, one all-ones profile per size, in a fixed order:
    /// genus, then ell, then k, then sizes in decreasing lexicographic order.
    pub fn problems(&self) -> Vec<TevelevProblem> {
        let shapes: Vec<Vec<u32>> = (0..=self.k_max)
            .flat_map(|k| multisets(k, self.size_max))
            .collect();
        let mut out = Vec::new();
        for g in 0..=self.g_max {
            for ell in self.ell_min..=self.ell_max {
                for sizes in &shapes {
                    out.push(TevelevProblem::from_sizes(g, ell, sizes));
                }
            }
        }
        out
    }
}

/// Thread count from `TEVELEV_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

fn pool(threads: Option<usize>) -> ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n);
    }
    builder.build().expect("failed to start worker pool")
}

/// Evaluates each problem; output order matches input order.
pub fn evaluate_all(
    problems: &[TevelevProblem],
    engine: EngineChoice,
    timings: bool,
    threads: Option<usize>,
) -> Vec<Record> {
    pool(threads).install(|| {
        problems
            .par_iter()
            .map_init(|| Evaluator::new(timings), |ev, p| ev.evaluate(p, engine))
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    /// Valid problems run through all engines.
    pub checked: usize,
    /// Invalid problems confirmed to evaluate to zero everywhere.
    pub invalid_checked: usize,
    pub mismatches: Vec<Record>,
    pub wall_ms: u128,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn is_mismatch(r: &Record) -> bool {
    !r.agree || (!r.valid && r.value != "0")
}

pub fn verify_grid(bounds: &GridBounds, threads: Option<usize>) -> VerifyReport {
    let start = Instant::now();
    let records = evaluate_all(&bounds.problems(), EngineChoice::All, false, threads);
    let checked = records.iter().filter(|r| r.valid).count();
    let invalid_checked = records.len() - checked;
    let mismatches = records.into_iter().filter(is_mismatch).collect();
    VerifyReport {
        checked,
        invalid_checked,
        mismatches,
        wall_ms: start.elapsed().as_millis(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(0, 4), vec![Vec::<u32>::new()]);
        assert_eq!(multisets(2, 2), vec![vec![2, 2], vec![2, 1], vec![1, 1]]);
        // C(4 + 3 - 1, 3)
        assert_eq!(multisets(3, 4).len(), 20);
        assert!(multisets(1, 0).is_empty());
    }

    #[test]
    fn empty_bounds_check_nothing() {
        let b = GridBounds {
            g_max: 3,
            ell_min: 1,
            ell_max: 0,
            k_max: 2,
            size_max: 2,
        };
        let report = verify_grid(&b, Some(1));
        assert_eq!((report.checked, report.invalid_checked), (0, 0));
        assert!(report.ok());
    }

    #[test]
    fn genus_zero_grid_is_all_ones() {
        let b = GridBounds {
            g_max: 0,
            ell_min: 0,
            ell_max: 2,
            k_max: 2,
            size_max: 2,
        };
        let records = evaluate_all(&b.problems(), EngineChoice::All, false, Some(2));
        let valid: Vec<_> = records.iter().filter(|r| r.valid).collect();
        assert!(!valid.is_empty());
        assert!(valid.iter().all(|r| r.value == "1" && r.agree));
    }

    #[test]
    fn order_does_not_depend_on_threads() {
        let b = GridBounds {
            g_max: 3,
            ell_min: -2,
            ell_max: 2,
            k_max: 2,
            size_max: 3,
        };
        let problems = b.problems();
        let one = evaluate_all(&problems, EngineChoice::All, false, Some(1));
        let four = evaluate_all(&problems, EngineChoice::All, false, Some(4));
        assert_eq!(one, four);
        assert!(verify_grid(&b, Some(3)).ok());
    }
}
