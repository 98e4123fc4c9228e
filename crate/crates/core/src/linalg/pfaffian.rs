use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactMatrix;
use crate::error::{Error, Result};

/// Largest order accepted by the matching expansion (10395 matchings).
pub const MATCHING_ORDER_LIMIT: usize = 12;

/// A perfect matching of `{0, .., 2n-1}` stored as pairs `(i, j)` with `i < j`,
/// sorted by first element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that every index `0..order` appears exactly once.
    pub fn new(mut pairs: Vec<(usize, usize)>, order: usize) -> Result<Self> {
        let mut seen = vec![false; order];
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
            for x in [p.0, p.1] {
                if x >= order || seen[x] {
                    return Err(Error::Invalid(format!(
                        "index {x} is not matched exactly once"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Invalid("matching does not cover every index".into()));
        }
        pairs.sort_unstable();
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Quadruples `i < j < k < l` with `i-k` and `j-l` matched.
    pub fn crossings(&self) -> usize {
        let mut count = 0;
        for (a, &(i, k)) in self.pairs.iter().enumerate() {
            for &(j, l) in &self.pairs[a + 1..] {
                if i < j && j < k && k < l {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(-1)^crossings`.
    pub fn sign(&self) -> i32 {
        if self.crossings().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// All perfect matchings of `{0, .., order-1}`, each pairing the smallest
/// free index first.
pub fn perfect_matchings(order: usize) -> Vec<Matching> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            let mut pairs = cur.clone();
            pairs.sort_unstable();
            out.push(Matching { pairs });
            return;
        }
        let first = free.remove(0);
        for idx in 0..free.len() {
            let partner = free.remove(idx);
            cur.push((first, partner));
            rec(free, cur, out);
            cur.pop();
            free.insert(idx, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    if order.is_multiple_of(2) {
        rec(&mut (0..order).collect(), &mut Vec::new(), &mut out);
    }
    out
}

fn check_skew(a: &ExactMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() % 2 == 1 {
        return Err(Error::OddOrder(a.rows()));
    }
    if let Some((i, j)) = a.skew_violation() {
        return Err(Error::NotSkew(i, j));
    }
    Ok(())
}

/// Pfaffian as the signed sum over perfect matchings of the product of
/// matched entries `a[i][j]`, `i < j`.
pub fn pfaffian_by_matchings(a: &ExactMatrix) -> Result<BigInt> {
    check_skew(a)?;
    if a.rows() > MATCHING_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: a.rows(),
            limit: MATCHING_ORDER_LIMIT,
        });
    }
    let mut total = BigInt::zero();
    for m in perfect_matchings(a.rows()) {
        let mut prod = BigInt::one();
        for &(i, j) in m.pairs() {
            prod *= a.get(i, j);
            if prod.is_zero() {
                break;
            }
        }
        if m.sign() > 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total)
}

/// Pfaffian by skew elimination over the rationals. Each step pivots on the
/// first nonzero entry of the leading row, eliminates two rows and columns,
/// and the result is checked to be an integer.
pub fn pfaffian_elimination(a: &ExactMatrix) -> Result<BigInt> {
    check_skew(a)?;
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> = a
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut acc = BigRational::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if p != k + 1 {
            m.swap(p, k + 1);
            for row in m.iter_mut() {
                row.swap(p, k + 1);
            }
            acc = -acc;
        }
        let pivot = m[k][k + 1].clone();
        acc *= &pivot;
        for i in k + 2..n {
            for j in k + 2..n {
                let corr = (&m[i][k] * &m[k + 1][j] - &m[i][k + 1] * &m[k][j]) / &pivot;
                m[i][j] += corr;
            }
        }
        k += 2;
    }
    if !acc.is_integer() {
        return Err(Error::Inexact(format!("Pfaffian ended at {acc}")));
    }
    Ok(acc.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four() -> ExactMatrix {
        ExactMatrix::from_rows(&[
            vec![0, 1, 2, 3],
            vec![-1, 0, 4, 5],
            vec![-2, -4, 0, 6],
            vec![-3, -5, -6, 0],
        ])
    }

    #[test]
    fn two_by_two() {
        let a = ExactMatrix::from_rows(&[vec![0, 5], vec![-5, 0]]);
        assert_eq!(pfaffian_by_matchings(&a).unwrap(), BigInt::from(5));
        assert_eq!(pfaffian_elimination(&a).unwrap(), BigInt::from(5));
    }

    #[test]
    fn four_by_four_three_matchings() {
        assert_eq!(pfaffian_by_matchings(&four()).unwrap(), BigInt::from(8));
        assert_eq!(pfaffian_elimination(&four()).unwrap(), BigInt::from(8));
    }

    #[test]
    fn pivot_swap_needed() {
        let a = ExactMatrix::from_rows(&[
            vec![0, 0, 2, 3],
            vec![0, 0, 4, 5],
            vec![-2, -4, 0, 6],
            vec![-3, -5, -6, 0],
        ]);
        // 0*6 - 2*5 + 3*4
        assert_eq!(pfaffian_by_matchings(&a).unwrap(), BigInt::from(2));
        assert_eq!(pfaffian_elimination(&a).unwrap(), BigInt::from(2));
    }

    #[test]
    fn matching_counts_and_signs() {
        assert_eq!(perfect_matchings(6).len(), 15);
        assert_eq!(perfect_matchings(8).len(), 105);
        let crossed = Matching::new(vec![(0, 2), (1, 3)], 4).unwrap();
        assert_eq!(crossed.crossings(), 1);
        assert_eq!(crossed.sign(), -1);
        let nested = Matching::new(vec![(0, 3), (1, 2)], 4).unwrap();
        assert_eq!(nested.sign(), 1);
        assert!(Matching::new(vec![(0, 1), (1, 2)], 4).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        let odd = ExactMatrix::from_rows(&[vec![0, 1, 2], vec![-1, 0, 3], vec![-2, -3, 0]]);
        assert_eq!(pfaffian_elimination(&odd), Err(Error::OddOrder(3)));
        assert_eq!(pfaffian_by_matchings(&odd), Err(Error::OddOrder(3)));
        let not_skew = ExactMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(pfaffian_by_matchings(&not_skew), Err(Error::NotSkew(0, 1)));
    }

    #[test]
    fn empty_pfaffian_is_one() {
        let a = ExactMatrix::square_zeros(vec![]);
        assert_eq!(pfaffian_elimination(&a).unwrap(), BigInt::one());
        assert_eq!(pfaffian_by_matchings(&a).unwrap(), BigInt::one());
    }
}
