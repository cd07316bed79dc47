//! Intersection ring of `Gr(2, N)`.
//!
//! Classes are sparse integer combinations of two-row Schubert classes
//! `sigma_{a,b}` with `N - 2 >= a >= b >= 0`. Anything outside the
//! `2 x (N - 2)` rectangle is zero and is dropped as soon as it appears.

use alloc::collections::BTreeMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Two-row partition `(a, b)` with `a >= b`, indexing `sigma_{a,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition2 {
    a: u32,
    b: u32,
}

impl Partition2 {
    /// Returns `None` unless `a >= b`.
    pub fn new(a: u32, b: u32) -> Option<Self> {
        (a >= b).then_some(Partition2 { a, b })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn degree(self) -> u32 {
        self.a + self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    n: u32,
    terms: BTreeMap<Partition2, BigInt>,
}

impl SchubertClass {
    pub fn zero(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::ContextTooSmall(i64::from(n)));
        }
        Ok(SchubertClass {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn unit(n: u32) -> Result<Self> {
        let mut c = Self::zero(n)?;
        c.terms.insert(Partition2 { a: 0, b: 0 }, BigInt::one());
        Ok(c)
    }

    /// `sigma_i` in `Gr(2, n)`; zero when `i > n - 2`.
    pub fn sigma(i: i64, n: u32) -> Result<Self> {
        if i < 0 {
            return Err(Error::NegativeIndex(i));
        }
        Self::sigma_or_zero(i, n)
    }

    /// Like [`SchubertClass::sigma`], but negative indices give the zero class.
    pub fn sigma_or_zero(i: i64, n: u32) -> Result<Self> {
        let mut c = Self::zero(n)?;
        if i >= 0 {
            c.add_term(i as u32, 0, BigInt::one());
        }
        Ok(c)
    }

    /// `sigma_{a,b}` itself (zero outside the rectangle).
    pub fn basis(p: Partition2, n: u32) -> Result<Self> {
        let mut c = Self::zero(n)?;
        c.add_term(p.a, p.b, BigInt::one());
        Ok(c)
    }

    /// Builds a class from raw terms, truncating and dropping zeros.
    pub fn from_terms<I>(n: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition2, BigInt)>,
    {
        let mut c = Self::zero(n)?;
        for (p, coeff) in terms {
            c.add_term(p.a, p.b, coeff);
        }
        Ok(c)
    }

    pub fn context(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition2, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        Partition2::new(a, b)
            .and_then(|p| self.terms.get(&p).cloned())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn max_row(&self) -> u32 {
        self.n - 2
    }

    fn add_term(&mut self, a: u32, b: u32, coeff: BigInt) {
        debug_assert!(a >= b);
        if a > self.max_row() || coeff.is_zero() {
            return;
        }
        let key = Partition2 { a, b };
        let slot = self.terms.entry(key).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.a, p.b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = SchubertClass {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (p, c) in &self.terms {
            out.add_term(p.a, p.b, c * factor);
        }
        out
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ContextMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `sigma_k * self` by the two-row Pieri rule.
    pub fn pieri(&self, k: u32) -> Self {
        let mut out = SchubertClass {
            n: self.n,
            terms: BTreeMap::new(),
        };
        let top = self.max_row();
        for (p, coeff) in &self.terms {
            let total = p.a + p.b + k;
            // e + f = total with e >= a >= f >= b
            for e in p.a..=top.min(p.a + k) {
                let f = total - e;
                if f >= p.b && f <= p.a {
                    out.add_term(e, f, coeff.clone());
                }
            }
        }
        out
    }

    /// `sigma_{1,1}^times * self`: shifts every `(a, b)` to `(a + times, b + times)`.
    pub fn shift11(&self, times: u32) -> Self {
        let mut out = SchubertClass {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (p, coeff) in &self.terms {
            out.add_term(p.a + times, p.b + times, coeff.clone());
        }
        out
    }

    /// Product via `sigma_{a,b} = sigma_{1,1}^b * sigma_{a-b}` and Pieri.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = SchubertClass {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (p, coeff) in &self.terms {
            let partial = other.pieri(p.a - p.b).shift11(p.b);
            for (q, c) in partial.terms {
                out.add_term(q.a, q.b, c * coeff);
            }
        }
        Ok(out)
    }

    /// Product computed without truncation in the stable ring, using
    /// `sigma_p * sigma_q = sum_{j=0}^{min(p,q)} sigma_{p+q-j, j}` and the
    /// `sigma_{1,1}` shift, then cut down to the rectangle at the end.
    pub fn multiply_two_row(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut stable: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (p, cp) in &self.terms {
            for (q, cq) in &other.terms {
                let (x, y) = (p.a - p.b, q.a - q.b);
                let shift = p.b + q.b;
                let coeff = cp * cq;
                for j in 0..=x.min(y) {
                    *stable.entry((x + y - j + shift, j + shift)).or_default() += &coeff;
                }
            }
        }
        let mut out = SchubertClass {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for ((a, b), c) in stable {
            out.add_term(a, b, c);
        }
        Ok(out)
    }

    pub fn power(&self, e: u32) -> Self {
        let mut acc = SchubertClass::unit(self.n).expect("context already checked");
        for _ in 0..e {
            acc = acc.multiply(self).expect("same context");
        }
        acc
    }

    /// Coefficient of the point class `sigma_{N-2,N-2}`.
    pub fn integrate(&self) -> BigInt {
        let top = self.max_row();
        self.coefficient(top, top)
    }
}

/// `integral over Gr(2, n) of prod_t sigma_{factors[t]}`.
///
/// Negative degrees are zero classes. Contexts with `n < 2` are empty
/// Grassmannians and integrate to zero.
pub fn integrate_product(factors: &[i64], n: i64) -> BigInt {
    match product_of_sigmas(factors, n) {
        Some(c) => c.integrate(),
        None => BigInt::zero(),
    }
}

/// `prod_t sigma_{factors[t]}` in `Gr(2, n)`, or `None` if `n < 2`.
pub fn product_of_sigmas(factors: &[i64], n: i64) -> Option<SchubertClass> {
    if n < 2 || n > i64::from(u32::MAX) {
        return None;
    }
    let n = n as u32;
    let mut acc = SchubertClass::unit(n).ok()?;
    for &i in factors {
        if i < 0 {
            return Some(SchubertClass {
                n,
                terms: BTreeMap::new(),
            });
        }
        acc = acc.pieri(i as u32);
        if acc.is_zero() {
            break;
        }
    }
    Some(acc)
}
