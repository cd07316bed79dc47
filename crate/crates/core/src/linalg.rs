//! Exact nullspace by fraction-free (Bareiss) elimination.
//!
//! Every intermediate entry is a minor of the input, so the divisions are
//! exact and no gcds are needed until the kernel vectors are made primitive.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Scales a rational row to an integer row.
fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if row
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative)
    {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Fraction-free row echelon form; returns the pivot columns.
fn echelon(mat: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row == mat.len() {
            break;
        }
        let Some(found) = (row..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(row, found);
        let (top, rest) = mat.split_at_mut(row + 1);
        let pivot_row = &top[row];
        let p = &pivot_row[col];
        for other in rest.iter_mut() {
            let c = core::mem::take(&mut other[col]);
            for j in col + 1..cols {
                let v = p * &other[j] - &c * &pivot_row[j];
                other[j] = v / &prev;
            }
        }
        prev = p.clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// A basis of `{ x : rows * x = 0 }` over the rationals, one primitive
/// integer vector per free column.
pub(crate) fn nullspace(rows: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut mat: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let pivots = echelon(&mut mat, cols);
    // the last pivot is the determinant of the pivot minor up to sign, so
    // by Cramer the solution with x[free] = den is integral
    let den = pivots
        .last()
        .map_or_else(BigInt::one, |&c| mat[pivots.len() - 1][c].clone());

    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![BigInt::zero(); cols];
            v[free] = den.clone();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = &mat[r][free] * &den;
                for &pj in &pivots[r + 1..] {
                    acc += &mat[r][pj] * &v[pj];
                }
                v[pc] = -acc / &mat[r][pc];
            }
            make_primitive(&mut v);
            v
        })
        .collect()
}
