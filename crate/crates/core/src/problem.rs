//! Problem data, derived numeric parameters and validity.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{Error, Result};

/// A ramification profile `(e_1, ..., e_r)` over one shared target point.
///
/// Non-empty, every entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(Vec<u32>);

impl Profile {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        Self::checked(entries, 0)
    }

    fn checked(entries: Vec<u32>, index: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyProfile { index });
        }
        if entries.contains(&0) {
            return Err(Error::NonPositiveEntry { index });
        }
        Ok(Profile(entries))
    }

    /// The all-ones profile `(1, ..., 1)` of length `r`. Panics if `r == 0`.
    pub fn ones(r: u32) -> Self {
        assert!(r >= 1, "profile length must be positive");
        Profile(vec![1; r as usize])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Number of marked points `r_h` sharing this target.
    pub fn len(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Total incidence order `|mu_h|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0 == [1]
    }

    fn sort_key(&self) -> Reverse<(u32, u32, &[u32])> {
        Reverse((self.size(), self.len(), &self.0))
    }
}

/// Input triple `(g, ell, [mu_1, ..., mu_k])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TevelevProblem {
    pub g: u32,
    pub ell: i64,
    profiles: Vec<Profile>,
}

/// Validity conditions a problem may violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `|mu_h| <= d` for every `h`.
    Deg,
    /// `r_tot <= n`.
    SumR,
    /// `n - r_tot + k >= 3`.
    Target3,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Deg => "DEG",
            Condition::SumR => "SUMR",
            Condition::Target3 => "TARGET3",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Numeric parameters derived from a [`TevelevProblem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedParams {
    pub d: i64,
    pub n: i64,
    pub b: i64,
    pub k: i64,
    pub r_tot: i64,
    pub mu_tot: i64,
    pub dim: i64,
    pub valid: bool,
    pub violated: Vec<Condition>,
}

impl TevelevProblem {
    pub fn new(g: u32, ell: i64, profiles: Vec<Vec<u32>>) -> Result<Self> {
        let profiles = profiles
            .into_iter()
            .enumerate()
            .map(|(i, p)| Profile::checked(p, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(TevelevProblem { g, ell, profiles })
    }

    pub fn from_profiles(g: u32, ell: i64, profiles: Vec<Profile>) -> Self {
        TevelevProblem { g, ell, profiles }
    }

    /// All-ones problem with `r_h = sizes[h]`. Panics on a zero size.
    pub fn from_sizes(g: u32, ell: i64, sizes: &[u32]) -> Self {
        let profiles = sizes.iter().map(|&r| Profile::ones(r)).collect();
        TevelevProblem { g, ell, profiles }
    }

    pub fn profiles(&self) -> &[Profile] {
        &self.profiles
    }

    pub fn k(&self) -> usize {
        self.profiles.len()
    }

    /// The multiset `{|mu_h|}` as a list in profile order.
    pub fn sizes(&self) -> Vec<u32> {
        self.profiles.iter().map(Profile::size).collect()
    }

    pub fn derive(&self) -> DerivedParams {
        derive_params(self)
    }

    pub fn is_valid(&self) -> bool {
        self.derive().valid
    }

    /// Profiles sorted by `(|mu_h|, r_h, entries)` descending.
    pub fn canonical(&self) -> Self {
        let mut profiles = self.profiles.clone();
        profiles.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        TevelevProblem {
            g: self.g,
            ell: self.ell,
            profiles,
        }
    }

    /// Appends the unit profile `(1)`.
    pub fn with_unit(&self) -> Self {
        let mut out = self.clone();
        out.profiles.push(Profile(vec![1]));
        out
    }
}

pub fn derive_params(problem: &TevelevProblem) -> DerivedParams {
    let g = i64::from(problem.g);
    let ell = problem.ell;
    let k = problem.profiles.len() as i64;
    let r_tot: i64 = problem.profiles.iter().map(|p| i64::from(p.len())).sum();
    let mu_tot: i64 = problem.profiles.iter().map(|p| i64::from(p.size())).sum();

    let d = g + 1 + ell;
    let n = g + 3 + 2 * ell - mu_tot + r_tot;
    let b = 2 * g + 2 * d - 2 - mu_tot + r_tot;
    let dim = 4 * g + 2 * ell + (k - 3) - mu_tot + n;

    let mut violated = Vec::new();
    if problem.profiles.iter().any(|p| i64::from(p.size()) > d) {
        violated.push(Condition::Deg);
    }
    if r_tot > n {
        violated.push(Condition::SumR);
    }
    if n - r_tot + k < 3 {
        violated.push(Condition::Target3);
    }

    DerivedParams {
        d,
        n,
        b,
        k,
        r_tot,
        mu_tot,
        dim,
        valid: violated.is_empty(),
        violated,
    }
}

/// Replaces every profile by the length-one profile `(|mu_h|)`.
pub fn reduce_profiles(problem: &TevelevProblem) -> TevelevProblem {
    let profiles = problem
        .profiles
        .iter()
        .map(|p| Profile(vec![p.size()]))
        .collect();
    TevelevProblem {
        g: problem.g,
        ell: problem.ell,
        profiles,
    }
}

/// Replaces every profile by `|mu_h|` copies of 1.
pub fn expand_to_unit_profiles(problem: &TevelevProblem) -> TevelevProblem {
    let profiles = problem
        .profiles
        .iter()
        .map(|p| Profile::ones(p.size()))
        .collect();
    TevelevProblem {
        g: problem.g,
        ell: problem.ell,
        profiles,
    }
}
