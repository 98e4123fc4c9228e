//! Exact integer arithmetic: binomials, the signed range-sum convention,
//! labelled dense matrices, determinants and Pfaffians.

mod binomial;
pub mod decimal;
mod determinant;
mod matrix;
mod pfaffian;

pub use binomial::{binomial, try_binomial};
pub use determinant::{determinant, determinant_by_expansion};
pub use matrix::{ExactMatrix, Label};
pub use pfaffian::{
    perfect_matchings, pfaffian_by_matchings, pfaffian_elimination, Matching, MATCHING_ORDER_LIMIT,
};

use num_bigint::BigInt;
use num_traits::Zero;

/// Arbitrary-precision signed integer used for every count and matrix entry.
pub type ExactInt = BigInt;

/// Sums `f(r)` for `r = lo..=hi`, reading reversed bounds with the usual
/// sign convention: an empty range (`hi = lo - 1`) is zero and a reversed
/// range (`hi < lo - 1`) gives `-(f(hi+1) + ... + f(lo-1))`.
pub fn signed_range_sum<F>(mut f: F, lo: i64, hi: i64) -> ExactInt
where
    F: FnMut(i64) -> ExactInt,
{
    if hi >= lo {
        (lo..=hi).map(&mut f).sum()
    } else if hi == lo - 1 {
        ExactInt::zero()
    } else {
        -(hi + 1..=lo - 1).map(&mut f).sum::<ExactInt>()
    }
}

/// `(-1)^C(l,2)` as an integer sign.
pub fn sign_binom2(l: usize) -> i32 {
    if (l * l.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
