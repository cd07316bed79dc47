//! Tevelev degrees as signed sums of Schubert integrals on `Gr(2, N)`.
//!
//! For sizes `m_h = |mu_h| > 1` the degree is
//!
//! ```text
//! sum_{J subset of 1..k} (-1)^{#J} int_{Gr(2, d+1-#J)}
//!     prod_{h not in J} sigma_{m_h-1} prod_{h in J} sigma_{m_h-2}
//!     sigma_1^g sum_{i+j=E_J} sigma_i sigma_j
//! ```
//!
//! with `E_J = g + 2 ell - sum m_h + k - #J`, the exponent that makes the
//! integrand top-dimensional. Contexts with `d + 1 - #J < 2` contribute 0.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::closed_form::{EngineTag, TevValue};
use crate::error::{Error, Result};
use crate::problem::TevelevProblem;
use crate::schubert::product_of_sigmas;

/// One inclusion-exclusion summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IeTerm {
    /// Indices (into the non-unit sizes) placed in `J`.
    pub subset: Vec<usize>,
    /// The `N` of `Gr(2, N)`, equal to `d + 1 - #J`.
    pub context_n: i64,
    /// `(-1)^{#J}`.
    pub sign: i8,
    /// Degrees of the single-row factors, including `g` copies of 1.
    pub factor_degrees: Vec<i64>,
    /// Total degree of the diagonal factor `sum_{i+j=E} sigma_i sigma_j`.
    pub diag_degree: i64,
    /// Only pairs with `i >= diag_min` enter the diagonal factor.
    pub diag_min: i64,
}

impl IeTerm {
    /// Sum of all factor degrees, including the diagonal factor.
    pub fn total_degree(&self) -> i64 {
        self.factor_degrees.iter().sum::<i64>() + self.diag_degree
    }

    pub fn dimension(&self) -> i64 {
        2 * (self.context_n - 2)
    }

    /// Unsigned integral of this term.
    pub fn integral(&self) -> BigInt {
        if self.diag_degree < 0 {
            return BigInt::zero();
        }
        let Some(base) = product_of_sigmas(&self.factor_degrees, self.context_n) else {
            return BigInt::zero();
        };
        if base.is_zero() {
            return BigInt::zero();
        }
        let mut total = BigInt::zero();
        for i in self.diag_min.max(0)..=self.diag_degree {
            let j = self.diag_degree - i;
            let term = base.pieri(i as u32).pieri(j as u32);
            total += term.integrate();
        }
        total
    }

    pub fn signed_integral(&self) -> BigInt {
        let v = self.integral();
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }
}

/// Builds the summands for genus `g`, degree parameter `ell` and sizes
/// (`|mu_h|`), restricting the diagonal sum to `i >= diag_min`.
fn terms_for(g: u32, ell: i64, sizes: &[u32], diag_min: i64) -> Vec<IeTerm> {
    let gi = i64::from(g);
    let d = gi + 1 + ell;
    let k = sizes.len();
    let mu_tot: i64 = sizes.iter().map(|&m| i64::from(m)).sum();
    let base_exponent = gi + 2 * ell - mu_tot + k as i64;

    (0u64..1 << k)
        .map(|mask| {
            let subset: Vec<usize> = (0..k).filter(|&h| mask >> h & 1 == 1).collect();
            let j = subset.len() as i64;
            let mut factor_degrees: Vec<i64> = sizes
                .iter()
                .enumerate()
                .map(|(h, &m)| i64::from(m) - if mask >> h & 1 == 1 { 2 } else { 1 })
                .collect();
            factor_degrees.extend(core::iter::repeat_n(1, g as usize));
            IeTerm {
                subset,
                context_n: d + 1 - j,
                sign: if j % 2 == 0 { 1 } else { -1 },
                factor_degrees,
                diag_degree: base_exponent - j,
                diag_min,
            }
        })
        .collect()
}

/// Summands used by [`tev_schubert`] for a valid problem. Sizes equal to
/// 1 are dropped first.
pub fn ie_terms(problem: &TevelevProblem) -> Vec<IeTerm> {
    let sizes: Vec<u32> = problem.sizes().into_iter().filter(|&m| m > 1).collect();
    terms_for(problem.g, problem.ell, &sizes, 0)
}

fn sum_terms(terms: &[IeTerm]) -> BigInt {
    terms.iter().map(IeTerm::signed_integral).sum()
}

/// Tevelev degree by Schubert inclusion-exclusion; 0 for invalid problems.
pub fn tev_schubert(problem: &TevelevProblem) -> TevValue {
    let value = if problem.is_valid() {
        sum_terms(&ie_terms(problem))
    } else {
        BigInt::zero()
    };
    TevValue::new(value, EngineTag::Schubert, problem)
}

fn diagonal_integral(g: u32, lead: i64, diag: i64, n: i64) -> BigInt {
    if diag < 0 {
        return BigInt::zero();
    }
    let mut factors = Vec::with_capacity(g as usize + 1);
    factors.push(lead);
    factors.extend(core::iter::repeat_n(1, g as usize));
    let Some(base) = product_of_sigmas(&factors, n) else {
        return BigInt::zero();
    };
    (0..=diag)
        .map(|i| base.pieri(i as u32).pieri((diag - i) as u32).integrate())
        .sum()
}

/// Two-integral formula for `r` points over a single target:
///
/// ```text
/// int_{Gr(2,d+1)} sigma_1^g sigma_{r-1} sum_{i+j=n-2-r} sigma_i sigma_j
///   - int_{Gr(2,d)} sigma_1^g sigma_{r-2} sum_{i+j=n-3-r} sigma_i sigma_j
/// ```
///
/// with `n = g + 3 + 2 ell`; the second integral is absent for `r = 1`.
pub fn tev_farkas_lian_single(g: u32, ell: i64, r: u32) -> TevValue {
    let problem = TevelevProblem::from_sizes(g, ell, &[r.max(1)]);
    let gi = i64::from(g);
    let (d, n, ri) = (gi + 1 + ell, gi + 3 + 2 * ell, i64::from(r));
    if r == 0 || ri > d || n - ri + 1 < 3 {
        return TevValue::new(BigInt::zero(), EngineTag::Schubert, &problem);
    }
    let mut value = diagonal_integral(g, ri - 1, n - 2 - ri, d + 1);
    if r > 1 {
        value -= diagonal_integral(g, ri - 2, n - 3 - ri, d);
    }
    TevValue::new(value, EngineTag::Schubert, &problem)
}

/// Genus-0 inclusion-exclusion sum with the diagonal restricted to `i >= m`.
///
/// `sizes` are all-ones sizes `r_h`; the problem `(0, ell, sizes)` must be
/// valid with `ell >= 0`.
pub fn tev_m_genus0(m: u32, ell: i64, sizes: &[u32]) -> Result<TevValue> {
    if ell < 0 {
        return Err(Error::NegativeEll(ell));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidProblem("sizes must be positive"));
    }
    let problem = TevelevProblem::from_sizes(0, ell, sizes);
    if !problem.is_valid() {
        return Err(Error::InvalidProblem("validity conditions fail"));
    }
    let value = sum_terms(&terms_for(0, ell, sizes, i64::from(m)));
    Ok(TevValue::new(value, EngineTag::Schubert, &problem))
}
