//! Genus recursion with the genus-0 base case, memoized on canonical keys.
//!
//! For all-ones sizes `r_1, ..., r_k` and `g >= 1`:
//!
//! ```text
//! Tev[g, ell, .., r] = Tev[g-1, ell, .., r-1] + Tev[g-1, ell+1, .., r+1]
//! ```
//!
//! A size that drops to zero is removed from the list. With no profiles a
//! unit profile is inserted first, which does not change the value. Invalid
//! states contribute 0 and valid genus-0 states contribute 1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closed_form::{EngineTag, TevValue};
use crate::problem::TevelevProblem;

/// Memo key: genus, `ell`, and the all-ones sizes sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RecursionKey {
    pub g: u32,
    pub ell: i64,
    sizes: Vec<u32>,
}

impl RecursionKey {
    pub fn new(g: u32, ell: i64, mut sizes: Vec<u32>) -> Self {
        sizes.retain(|&r| r > 0);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        RecursionKey { g, ell, sizes }
    }

    pub fn from_problem(problem: &TevelevProblem) -> Self {
        Self::new(problem.g, problem.ell, problem.sizes())
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    fn is_valid(&self) -> bool {
        let g = i64::from(self.g);
        let d = g + 1 + self.ell;
        let n = g + 3 + 2 * self.ell;
        let k = self.sizes.len() as i64;
        let r_tot: i64 = self.sizes.iter().map(|&r| i64::from(r)).sum();
        self.sizes.iter().all(|&r| i64::from(r) <= d) && r_tot <= n && n - r_tot + k >= 3
    }
}

/// Which size the recursion peels off at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRule {
    #[default]
    Largest,
    Smallest,
}

/// Recursion evaluator with an unbounded memo table.
#[derive(Debug, Clone, Default)]
pub struct RecursionEngine {
    rule: SplitRule,
    memo: BTreeMap<RecursionKey, BigInt>,
}

impl RecursionEngine {
    pub fn new(rule: SplitRule) -> Self {
        RecursionEngine {
            rule,
            memo: BTreeMap::new(),
        }
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn tev(&mut self, problem: &TevelevProblem) -> TevValue {
        let value = self.value(&RecursionKey::from_problem(problem));
        TevValue::new(value, EngineTag::Recursion, problem)
    }

    pub fn value(&mut self, key: &RecursionKey) -> BigInt {
        if let Some(v) = self.memo.get(key) {
            return v.clone();
        }
        let v = self.compute(key);
        self.memo.insert(key.clone(), v.clone());
        v
    }

    fn compute(&mut self, key: &RecursionKey) -> BigInt {
        if !key.is_valid() {
            return BigInt::zero();
        }
        if key.g == 0 {
            return BigInt::one();
        }
        let mut sizes = key.sizes.clone();
        if sizes.is_empty() {
            sizes.push(1);
        }
        let idx = match self.rule {
            SplitRule::Largest => 0,
            SplitRule::Smallest => sizes.len() - 1,
        };
        let r = sizes[idx];

        let mut lower = sizes.clone();
        lower[idx] = r - 1;
        let mut upper = sizes;
        upper[idx] = r + 1;

        let a = self.value(&RecursionKey::new(key.g - 1, key.ell, lower));
        let b = self.value(&RecursionKey::new(key.g - 1, key.ell + 1, upper));
        a + b
    }
}

/// Tevelev degree by recursion, with a fresh memo table.
pub fn tev_recursive(problem: &TevelevProblem) -> TevValue {
    RecursionEngine::default().tev(problem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::tev_closed;
    use alloc::vec;

    fn rec(g: u32, ell: i64, sizes: &[u32]) -> BigInt {
        tev_recursive(&TevelevProblem::from_sizes(g, ell, sizes)).value
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(rec(2, 0, &[2]), BigInt::from(3));
        assert_eq!(rec(1, 0, &[1]), BigInt::from(2));
        assert_eq!(rec(1, 1, &[3]), BigInt::from(1));
        assert_eq!(rec(0, 5, &[2, 1]), BigInt::from(1));
        assert_eq!(rec(1, -1, &[]), BigInt::zero());
        assert_eq!(rec(3, -1, &[]), BigInt::from(4));
        // |mu| > d
        assert_eq!(rec(1, -1, &[3]), BigInt::zero());
    }

    #[test]
    fn general_profiles_use_sizes() {
        let p = TevelevProblem::new(2, 0, vec![vec![2]]).unwrap();
        assert_eq!(tev_recursive(&p).value, BigInt::from(3));
    }

    #[test]
    fn key_is_canonical() {
        assert_eq!(
            RecursionKey::new(1, 0, vec![1, 3, 0, 2]).sizes(),
            &[3, 2, 1]
        );
    }

    #[test]
    fn split_rules_agree_with_closed_form() {
        let mut largest = RecursionEngine::new(SplitRule::Largest);
        let mut smallest = RecursionEngine::new(SplitRule::Smallest);
        for g in 0..=6u32 {
            for ell in -3..=3i64 {
                for sizes in [
                    vec![],
                    vec![1],
                    vec![2],
                    vec![3, 1],
                    vec![2, 2],
                    vec![4, 2, 1],
                ] {
                    let p = TevelevProblem::from_sizes(g, ell, &sizes);
                    let want = tev_closed(&p).value;
                    assert_eq!(largest.tev(&p).value, want, "{p:?}");
                    assert_eq!(smallest.tev(&p).value, want, "{p:?}");
                }
            }
        }
    }

    #[test]
    fn memo_matches_fresh_computation() {
        let mut shared = RecursionEngine::default();
        for g in 0..=7u32 {
            for ell in -2..=2i64 {
                let p = TevelevProblem::from_sizes(g, ell, &[3, 2]);
                assert_eq!(shared.tev(&p).value, tev_recursive(&p).value);
            }
        }
        assert!(shared.cache_len() > 0);
    }
}
