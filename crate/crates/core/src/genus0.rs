//! Genus-0 oracle: build the exact linear system for a pencil `[s0 : s1]`
//! of degree `d` through prescribed incidences and certify the solution.
//!
//! Row `i` encodes `q1 * s0(p_i) - q0 * s1(p_i) = 0`, where `[q0 : q1]` is
//! the target assigned to source point `p_i`. Unknowns are the `2d + 2`
//! monomial coefficients `(s0_0, .., s0_d, s1_0, .., s1_d)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::ZPoly;
use crate::problem::TevelevProblem;

/// Default half-width of the integer box points are drawn from.
pub const DEFAULT_BOX: i64 = 1_000_000;

/// Source points, target points and the source-to-target assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    d: u32,
    p: Vec<BigRational>,
    q: Vec<(BigRational, BigRational)>,
    grouping: Vec<usize>,
}

fn same_projective(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> bool {
    &a.0 * &b.1 == &a.1 * &b.0
}

/// Target index of every source point: the first `n - r_tot` points get
/// their own target, then consecutive blocks of sizes `r_1, .., r_k` share
/// one target each.
pub fn standard_grouping(n: usize, sizes: &[u32]) -> Result<Vec<usize>> {
    let r_tot: usize = sizes.iter().map(|&r| r as usize).sum();
    if r_tot > n {
        return Err(Error::MalformedConfig("grouped points exceed n"));
    }
    let singles = n - r_tot;
    let mut grouping: Vec<usize> = (0..singles).collect();
    for (h, &r) in sizes.iter().enumerate() {
        grouping.extend(core::iter::repeat_n(singles + h, r as usize));
    }
    Ok(grouping)
}

impl PointConfig {
    pub fn new(
        d: u32,
        p: Vec<BigRational>,
        q: Vec<(BigRational, BigRational)>,
        grouping: Vec<usize>,
    ) -> Result<Self> {
        if grouping.len() != p.len() {
            return Err(Error::MalformedConfig(
                "grouping length differs from point count",
            ));
        }
        if grouping.iter().any(|&t| t >= q.len()) {
            return Err(Error::MalformedConfig(
                "grouping refers to a missing target",
            ));
        }
        for (i, a) in p.iter().enumerate() {
            if let Some(j) = p[..i].iter().position(|b| b == a) {
                return Err(Error::RepeatedSourcePoint(j, i));
            }
        }
        for (i, a) in q.iter().enumerate() {
            if a.0.is_zero() && a.1.is_zero() {
                return Err(Error::DegenerateTarget(i));
            }
            if let Some(j) = q[..i].iter().position(|b| same_projective(a, b)) {
                return Err(Error::RepeatedTargetPoint(j, i));
            }
        }
        Ok(PointConfig { d, p, q, grouping })
    }

    /// Config for all-ones sizes with the standard index scheme.
    pub fn from_sizes(
        d: u32,
        sizes: &[u32],
        p: Vec<BigRational>,
        q: Vec<(BigRational, BigRational)>,
    ) -> Result<Self> {
        let grouping = standard_grouping(p.len(), sizes)?;
        Self::new(d, p, q, grouping)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn sources(&self) -> &[BigRational] {
        &self.p
    }

    pub fn targets(&self) -> &[(BigRational, BigRational)] {
        &self.q
    }

    pub fn grouping(&self) -> &[usize] {
        &self.grouping
    }

    /// Same configuration with target `index` multiplied by `factor`.
    pub fn with_scaled_target(&self, index: usize, factor: &BigRational) -> Self {
        let mut out = self.clone();
        let t = &mut out.q[index];
        t.0 = &t.0 * factor;
        t.1 = &t.1 * factor;
        out
    }
}

/// `n x (2d + 2)` incidence matrix.
pub fn build_system(config: &PointConfig) -> Result<Vec<Vec<BigRational>>> {
    // re-check in case the config was assembled by hand
    let checked = PointConfig::new(
        config.d,
        config.p.clone(),
        config.q.clone(),
        config.grouping.clone(),
    )?;
    let width = checked.d as usize + 1;
    Ok(checked
        .p
        .iter()
        .zip(&checked.grouping)
        .map(|(x, &t)| {
            let (q0, q1) = &checked.q[t];
            let mut row = Vec::with_capacity(2 * width);
            let mut power = BigRational::one();
            let mut powers = Vec::with_capacity(width);
            for _ in 0..width {
                powers.push(power.clone());
                power *= x;
            }
            row.extend(powers.iter().map(|m| q1 * m));
            row.extend(powers.iter().map(|m| -(q0 * m)));
            row
        })
        .collect())
}

/// Outcome of solving one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub kernel_dim: usize,
    /// Coefficients of `s0`, ascending, present when `kernel_dim == 1`.
    pub s0: Option<Vec<BigRational>>,
    pub s1: Option<Vec<BigRational>>,
    pub coprime: bool,
    pub exact_degree: bool,
    pub simple_branching: bool,
}

impl CoverCertificate {
    /// A unique, base-point-free, degree-`d`, simply branched cover.
    pub fn is_full(&self) -> bool {
        self.kernel_dim == 1 && self.coprime && self.exact_degree && self.simple_branching
    }
}

/// Rescales so the first nonzero coefficient is 1.
fn normalize(v: &[BigInt]) -> Vec<BigRational> {
    let lead = v
        .iter()
        .find(|x| !x.is_zero())
        .cloned()
        .unwrap_or_else(BigInt::one);
    v.iter()
        .map(|x| BigRational::new(x.clone(), lead.clone()))
        .collect()
}

pub fn certify(config: &PointConfig) -> Result<CoverCertificate> {
    let rows = build_system(config)?;
    let width = config.d as usize + 1;
    let kernel = nullspace(&rows, 2 * width);
    let kernel_dim = kernel.len();
    if kernel_dim != 1 {
        return Ok(CoverCertificate {
            kernel_dim,
            s0: None,
            s1: None,
            coprime: false,
            exact_degree: false,
            simple_branching: false,
        });
    }
    let v = kernel.into_iter().next().expect("one kernel vector");
    let f0 = ZPoly::new(v[..width].to_vec());
    let f1 = ZPoly::new(v[width..].to_vec());
    let mut s0 = normalize(&v);
    let s1 = s0.split_off(width);

    let coprime = f0.is_coprime_to(&f1);
    let degree = f0.degree().max(f1.degree());
    let exact_degree = degree == Some(config.d as usize);
    let wronskian = f0.mul(&f1.derivative()).sub(&f1.mul(&f0.derivative()));
    let simple_branching = !wronskian.is_zero() && wronskian.is_coprime_to(&wronskian.derivative());

    Ok(CoverCertificate {
        kernel_dim,
        s0: Some(s0),
        s1: Some(s1),
        coprime,
        exact_degree,
        simple_branching,
    })
}

/// Evaluates every incidence condition on `(s0, s1)`.
pub fn residuals(config: &PointConfig, s0: &[BigRational], s1: &[BigRational]) -> Vec<BigRational> {
    let eval = |f: &[BigRational], x: &BigRational| {
        f.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    };
    config
        .p
        .iter()
        .zip(&config.grouping)
        .map(|(x, &t)| {
            let (q0, q1) = &config.q[t];
            q1 * eval(s0, x) - q0 * eval(s1, x)
        })
        .collect()
}

/// Counts over a batch of random configurations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrialSummary {
    pub trials: u32,
    pub full: u32,
    pub kernel_one: u32,
    pub coprime: u32,
    pub exact_degree: u32,
    pub simple_branching: u32,
}

impl TrialSummary {
    pub fn all_full(&self) -> bool {
        self.full == self.trials
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Draws a configuration for degree `d`, `n = 2d + 1` sources and the
/// given all-ones sizes, with coordinates in `[-half_width, half_width]`.
pub fn random_config<R: Rng>(
    d: u32,
    sizes: &[u32],
    half_width: i64,
    rng: &mut R,
) -> Result<PointConfig> {
    let n = 2 * d as usize + 1;
    let targets = n - sizes.iter().map(|&r| r as usize).sum::<usize>() + sizes.len();
    if half_width < 1 || (half_width as u128) < n as u128 {
        return Err(Error::MalformedConfig("coordinate box too small"));
    }

    let mut p: Vec<i64> = Vec::with_capacity(n);
    while p.len() < n {
        let x = rng.gen_range(-half_width..=half_width);
        if !p.contains(&x) {
            p.push(x);
        }
    }
    let mut q: Vec<(BigRational, BigRational)> = Vec::with_capacity(targets);
    while q.len() < targets {
        let t = (
            rat(rng.gen_range(-half_width..=half_width)),
            rat(rng.gen_range(-half_width..=half_width)),
        );
        if t.0.is_zero() && t.1.is_zero() {
            continue;
        }
        if !q.iter().any(|u| same_projective(u, &t)) {
            q.push(t);
        }
    }
    PointConfig::from_sizes(d, sizes, p.into_iter().map(rat).collect(), q)
}

/// Runs `trials` random genus-0 configurations for degree `d` (so
/// `ell = d - 1`) and all-ones sizes. Trial `t` draws from stream `t` of a
/// ChaCha generator seeded with `seed`, so results do not depend on order.
pub fn run_trials(
    d: u32,
    sizes: &[u32],
    trials: u32,
    seed: u64,
    half_width: i64,
) -> Result<TrialSummary> {
    if d == 0 {
        return Err(Error::InvalidProblem("degree must be positive"));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidProblem("sizes must be positive"));
    }
    let problem = TevelevProblem::from_sizes(0, i64::from(d) - 1, sizes);
    if !problem.is_valid() {
        return Err(Error::InvalidProblem("validity conditions fail"));
    }

    let mut summary = TrialSummary {
        trials,
        ..TrialSummary::default()
    };
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from(t));
        let config = random_config(d, sizes, half_width, &mut rng)?;
        let cert = certify(&config)?;
        summary.kernel_one += u32::from(cert.kernel_dim == 1);
        summary.coprime += u32::from(cert.coprime);
        summary.exact_degree += u32::from(cert.exact_degree);
        summary.simple_branching += u32::from(cert.simple_branching);
        summary.full += u32::from(cert.is_full());
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn tgt(xs: &[(i64, i64)]) -> Vec<(BigRational, BigRational)> {
        xs.iter().map(|&(a, b)| (rat(a), rat(b))).collect()
    }

    fn identity_config() -> PointConfig {
        PointConfig::from_sizes(1, &[], pts(&[0, 1, 2]), tgt(&[(0, 1), (1, 1), (2, 1)])).unwrap()
    }

    #[test]
    fn identity_cover() {
        let cfg = identity_config();
        let rows = build_system(&cfg).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.len() == 4));
        let cert = certify(&cfg).unwrap();
        assert_eq!(cert.kernel_dim, 1);
        // s0 = x, s1 = 1 normalized so the first nonzero coefficient is 1
        assert_eq!(cert.s0, Some(pts(&[0, 1])));
        assert_eq!(cert.s1, Some(pts(&[1, 0])));
        assert!(cert.is_full());
    }

    #[test]
    fn rejects_repeated_points() {
        let err = PointConfig::from_sizes(1, &[], pts(&[0, 1, 0]), tgt(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(err, Err(Error::RepeatedSourcePoint(0, 2)));
        let err = PointConfig::from_sizes(1, &[], pts(&[0, 1, 2]), tgt(&[(0, 1), (1, 1), (2, 2)]));
        assert_eq!(err, Err(Error::RepeatedTargetPoint(1, 2)));
        let err = PointConfig::from_sizes(1, &[], pts(&[0, 1, 2]), tgt(&[(0, 0), (2, 2), (2, 1)]));
        assert_eq!(err, Err(Error::DegenerateTarget(0)));
    }

    #[test]
    fn grouped_system_shape() {
        // d = 2, n = 5, one group of size 2: targets 3 singles + 1 group
        let cfg = PointConfig::from_sizes(
            2,
            &[2],
            pts(&[1, -3, 7, 2, 11]),
            tgt(&[(1, 4), (-2, 3), (5, 1), (3, -7)]),
        )
        .unwrap();
        assert_eq!(cfg.grouping(), &[0, 1, 2, 3, 3]);
        let rows = build_system(&cfg).unwrap();
        assert_eq!((rows.len(), rows[0].len()), (5, 6));
        let cert = certify(&cfg).unwrap();
        assert_eq!(cert.kernel_dim, 1);
        let (s0, s1) = (cert.s0.clone().unwrap(), cert.s1.clone().unwrap());
        assert!(residuals(&cfg, &s0, &s1).iter().all(Zero::is_zero));
    }

    #[test]
    fn collapsed_targets_give_degenerate_pencils() {
        // every source point over one target: b s0 = a s1 on d+1 or more
        // points forces b s0 = a s1, a (d+1)-dimensional family
        let cfg = PointConfig::from_sizes(2, &[5], pts(&[0, 1, 2, 3, 4]), tgt(&[(2, 3)])).unwrap();
        let cert = certify(&cfg).unwrap();
        assert_eq!(cert.kernel_dim, 3);
        assert!(!cert.is_full());
    }

    #[test]
    fn trials_small() {
        let s = run_trials(1, &[], 10, 1, DEFAULT_BOX).unwrap();
        assert_eq!((s.trials, s.full), (10, 10));
        let s = run_trials(3, &[2], 20, 7, DEFAULT_BOX).unwrap();
        assert!(s.all_full(), "{s:?}");
        assert!(run_trials(2, &[4], 5, 0, DEFAULT_BOX).is_err());
        assert_eq!(
            run_trials(3, &[2], 5, 9, DEFAULT_BOX),
            run_trials(3, &[2], 5, 9, DEFAULT_BOX)
        );
    }

    #[test]
    fn scaling_a_target_changes_nothing() {
        let cfg = PointConfig::from_sizes(
            2,
            &[2],
            pts(&[1, -3, 7, 2, 11]),
            tgt(&[(1, 4), (-2, 3), (5, 1), (3, -7)]),
        )
        .unwrap();
        let scaled =
            cfg.with_scaled_target(3, &BigRational::new(BigInt::from(-5), BigInt::from(3)));
        assert_eq!(certify(&cfg).unwrap(), certify(&scaled).unwrap());
    }
}
