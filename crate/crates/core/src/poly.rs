//! Dense integer polynomials, just enough for the genus-0 certificate
//! checks. Every check there is invariant under rescaling, so the pencil
//! is handled as a primitive integer vector and rationals never appear.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ZPoly(Vec<BigInt>);

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        ZPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        ZPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ZPoly(Vec::new());
        }
        let mut out = alloc::vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = BigInt::zero();
        ZPoly::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let mut g = self.0.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.0.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        ZPoly(self.0.iter().map(|c| c / &g).collect())
    }

    /// `lc(b)^k * self mod b` for nonzero `b`, computed without division.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let lead = &b.0[db];
        let mut r = self.0.clone();
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top].clone();
            for x in r.iter_mut() {
                *x *= lead;
            }
            for (i, y) in b.0.iter().enumerate() {
                r[top - db + i] -= &c * y;
            }
            r.pop();
            trim(&mut r);
        }
        ZPoly(r)
    }

    /// Primitive gcd, computed by a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.0.len() < b.0.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Whether the gcd with `other` is a nonzero constant.
    ///
    /// Tries a few word-sized primes first: a constant gcd modulo a prime
    /// that divides neither leading coefficient forces a constant gcd over
    /// the rationals. Falls back to the exact sequence otherwise.
    pub fn is_coprime_to(&self, other: &Self) -> bool {
        let fast = !self.is_zero()
            && !other.is_zero()
            && PRIMES.iter().any(|&p| coprime_mod(&self.0, &other.0, p));
        fast || self.gcd(other).degree() == Some(0)
    }
}

const PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

fn reduce_mod(v: &[BigInt], p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| u64::try_from(c.mod_floor(&m)).expect("residue fits in a word"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn inv_mod(x: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `true` only when both leading coefficients survive reduction and the
/// gcd over the prime field is constant.
fn coprime_mod(a: &[BigInt], b: &[BigInt], p: u64) -> bool {
    let (mut x, mut y) = (reduce_mod(a, p), reduce_mod(b, p));
    if x.len() != a.len() || y.len() != b.len() {
        return false;
    }
    while !y.is_empty() {
        let dy = y.len() - 1;
        let inv = inv_mod(y[dy], p);
        while x.len() > dy {
            let top = x.len() - 1;
            let f = x[top] * inv % p;
            for (i, c) in y.iter().enumerate() {
                let j = top - dy + i;
                x[j] = (x[j] + p - f * c % p) % p;
            }
            while x.last() == Some(&0) {
                x.pop();
            }
        }
        core::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}
