//! Closed binomial formulas.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::problem::{expand_to_unit_profiles, TevelevProblem};

/// Which engine produced a [`TevValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EngineTag {
    Closed,
    Recursion,
    Schubert,
    Oracle,
}

impl EngineTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EngineTag::Closed => "closed",
            EngineTag::Recursion => "recursion",
            EngineTag::Schubert => "schubert",
            EngineTag::Oracle => "oracle",
        }
    }
}

impl fmt::Display for EngineTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed Tevelev degree together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TevValue {
    pub value: BigInt,
    pub engine: EngineTag,
    pub problem: TevelevProblem,
}

impl TevValue {
    pub(crate) fn new(value: BigInt, engine: EngineTag, problem: &TevelevProblem) -> Self {
        TevValue {
            value,
            engine,
            problem: problem.clone(),
        }
    }
}

/// `C(g, i)`, zero outside `0 <= i <= g`.
pub fn binomial(g: u32, i: i64) -> BigInt {
    if i < 0 || i > i64::from(g) {
        return BigInt::zero();
    }
    let i = (i as u32).min(g - i as u32);
    let mut acc = BigInt::one();
    for j in 0..i {
        acc *= g - j;
        acc /= j + 1;
    }
    acc
}

/// `sum_{i=lo}^{hi} C(g, i)`; empty when `lo > hi`.
fn binomial_sum(g: u32, lo: i64, hi: i64) -> BigInt {
    let lo = lo.max(0);
    let hi = hi.min(i64::from(g));
    (lo..=hi).map(|i| binomial(g, i)).sum()
}

fn pow2(g: u32) -> BigInt {
    BigInt::one() << g as usize
}

/// The master formula in terms of the sizes `|mu_h|`; no validity check.
pub(crate) fn master_formula(g: u32, ell: i64, sizes: &[u32]) -> BigInt {
    let k = sizes.len() as i64;
    let mu_tot: i64 = sizes.iter().map(|&m| i64::from(m)).sum();
    let units = sizes.iter().filter(|&&m| m == 1).count() as i64;

    let mut value = pow2(g);
    value -= binomial_sum(g, 0, -ell - 2) * 2;
    value += binomial(g, -ell - 1) * (-ell - k - 2 + mu_tot);
    value += binomial(g, -ell) * (ell - k + units);
    for &m in sizes {
        value -= binomial_sum(g, -ell + 1, i64::from(m) - ell - 2);
    }
    value
}

/// Closed-form Tevelev degree; 0 for invalid problems.
pub fn tev_closed(problem: &TevelevProblem) -> TevValue {
    let value = if problem.is_valid() {
        master_formula(problem.g, problem.ell, &problem.sizes())
    } else {
        BigInt::zero()
    };
    TevValue::new(value, EngineTag::Closed, problem)
}

/// Three-case formula valid for `ell >= 0`.
///
/// Profiles are expanded to all-ones first, so `r_h = |mu_h|`.
pub fn tev_ell_nonneg(problem: &TevelevProblem) -> Result<TevValue> {
    if problem.ell < 0 {
        return Err(Error::NegativeEll(problem.ell));
    }
    let expanded = expand_to_unit_profiles(problem);
    let value = if expanded.is_valid() {
        ell_nonneg_value(problem.g, problem.ell, &expanded.sizes())
    } else {
        BigInt::zero()
    };
    Ok(TevValue::new(value, EngineTag::Closed, problem))
}

fn ell_nonneg_value(g: u32, ell: i64, sizes: &[u32]) -> BigInt {
    let max = sizes.iter().copied().max().unwrap_or(0);
    if ell == 0 {
        let mut value = pow2(g);
        for &r in sizes {
            value -= binomial_sum(g, 0, i64::from(r) - 2);
        }
        value
    } else if ell < i64::from(max) {
        let shifted: Vec<u32> = sizes
            .iter()
            .filter(|&&r| i64::from(r) > ell)
            .map(|&r| r - ell as u32)
            .collect();
        ell_nonneg_value(g, 0, &shifted)
    } else {
        pow2(g)
    }
}

/// Single-target formula with `r` marked points over one target.
///
/// Returns 0 unless `r <= d` and `n - r + 1 >= 3` with `n = g + 3 + 2 ell`.
pub fn tev_cps_single(g: u32, ell: i64, r: u32) -> TevValue {
    let problem = TevelevProblem::from_sizes(g, ell, &[r.max(1)]);
    let gi = i64::from(g);
    let (d, n, ri) = (gi + 1 + ell, gi + 3 + 2 * ell, i64::from(r));
    if r == 0 || ri > d || n - ri + 1 < 3 {
        return TevValue::new(BigInt::zero(), EngineTag::Closed, &problem);
    }

    let mut value = pow2(g) - binomial_sum(g, 0, -ell - 2) * 2;
    if r == 1 {
        value += binomial(g, -ell - 1) * (-ell - 2);
        value += binomial(g, -ell) * ell;
    } else {
        value += binomial(g, -ell - 1) * (-ell + ri - 3);
        value += binomial(g, -ell) * (ell - 1);
        value -= binomial_sum(g, -ell + 1, ri - ell - 2);
    }
    TevValue::new(value, EngineTag::Closed, &problem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn closed(g: u32, ell: i64, profiles: &[&[u32]]) -> BigInt {
        let p = TevelevProblem::new(g, ell, profiles.iter().map(|x| x.to_vec()).collect()).unwrap();
        tev_closed(&p).value
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial_sum(4, 3, 1), BigInt::zero());
        assert_eq!(binomial_sum(4, -3, 10), BigInt::from(16));
    }

    #[test]
    fn closed_examples() {
        // 8 + (1 - 0 - 2) C(3,0) + (-1) C(3,1)
        assert_eq!(closed(3, -1, &[]), BigInt::from(4));
        assert_eq!(closed(2, 0, &[&[1, 1]]), BigInt::from(3));
        assert_eq!(closed(5, 4, &[&[2], &[3]]), BigInt::from(32));
        assert_eq!(closed(0, 2, &[&[1, 1]]), BigInt::from(1));
        // n = 2 < 3
        assert_eq!(closed(1, -1, &[]), BigInt::zero());
    }

    #[test]
    fn ell_nonneg_examples() {
        let p = TevelevProblem::from_sizes(2, 0, &[2]);
        assert_eq!(tev_ell_nonneg(&p).unwrap().value, BigInt::from(3));
        let p = TevelevProblem::from_sizes(4, 7, &[2]);
        assert_eq!(tev_ell_nonneg(&p).unwrap().value, BigInt::from(16));
        let p = TevelevProblem::from_sizes(3, 1, &[2, 3]);
        assert_eq!(tev_ell_nonneg(&p).unwrap().value, BigInt::from(7));
        let p = TevelevProblem::from_sizes(3, -1, &[2]);
        assert_eq!(tev_ell_nonneg(&p), Err(Error::NegativeEll(-1)));
    }

    #[test]
    fn cps_examples() {
        assert_eq!(tev_cps_single(2, 0, 2).value, BigInt::from(3));
        assert_eq!(tev_cps_single(1, 0, 1).value, BigInt::from(2));
        assert_eq!(tev_cps_single(0, 0, 1).value, BigInt::from(1));
        assert_eq!(tev_cps_single(1, -1, 1).value, BigInt::zero());
    }

    #[test]
    fn plateau_small() {
        for g in 0..=12u32 {
            for sizes in [vec![], vec![1], vec![3, 2], vec![4, 4, 1]] {
                let max = sizes.iter().copied().max().unwrap_or(1) as i64;
                for ell in (max - 1)..(max + 4) {
                    let p = TevelevProblem::from_sizes(g, ell, &sizes);
                    if p.is_valid() {
                        assert_eq!(tev_closed(&p).value, pow2(g), "g={g} ell={ell} {sizes:?}");
                    }
                }
            }
        }
    }
}
