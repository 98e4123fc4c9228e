use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExactMatrix;
use crate::error::{Error, Result};

/// Orders at or below this use Laplace expansion instead of elimination.
const EXPANSION_ORDER: usize = 2;

/// Exact determinant by Bareiss fraction-free elimination. The pivot is the
/// first nonzero entry of the column, scanning rows top to bottom.
pub fn determinant(a: &ExactMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n <= EXPANSION_ORDER {
        return determinant_by_expansion(a);
    }
    let mut m = a.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Inexact(format!("Bareiss step {k} at ({i}, {j})")));
                }
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Division-free Laplace expansion along the first row. Exponential; meant
/// for tiny matrices.
pub fn determinant_by_expansion(a: &ExactMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let rows = a.to_rows();
    let cols: Vec<usize> = (0..a.cols()).collect();
    Ok(expand(&rows, 0, &cols))
}

fn expand(rows: &[Vec<BigInt>], r: usize, cols: &[usize]) -> BigInt {
    if cols.is_empty() {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &rows[r][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * expand(rows, r + 1, &rest);
        if pos % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
