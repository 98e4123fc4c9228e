//! Product formulas for plane partitions in a box, and their link to the
//! hexagon counts: a hexagon of side `b` with horizontal sides `2a` has
//! `N1(2a, b, b)` tilings, `N6` of them fixed by the hole-axis mirror and
//! `N2` fixed by the middle-line mirror.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::region::build_hexagon;
use crate::tiler::{count_hsym, count_plain, count_vsym};

fn product<I: IntoIterator<Item = (i64, i64)>>(what: &str, factors: I) -> Result<BigInt> {
    let mut acc = BigRational::one();
    for (num, den) in factors {
        acc *= BigRational::new(num.into(), den.into());
    }
    if !acc.is_integer() {
        return Err(Error::Inexact(format!("{what} evaluated to {acc}")));
    }
    Ok(acc.to_integer())
}

/// Plane partitions in an `a x b x c` box:
/// `prod_{i<=a, j<=b, k<=c} (i+j+k-1)/(i+j+k-2)`.
pub fn macmahon_n1(a: u32, b: u32, c: u32) -> Result<BigInt> {
    let (a, b, c) = (i64::from(a), i64::from(b), i64::from(c));
    let factors = (1..=a).flat_map(move |i| {
        (1..=b).flat_map(move |j| (1..=c).map(move |k| (i + j + k - 1, i + j + k - 2)))
    });
    product("N1", factors)
}

/// Symmetric plane partitions in an `r x r x c` box:
/// `prod_{i<=r} (2i+c-1)/(2i-1) * prod_{i<j<=r} (i+j+c-1)/(i+j-1)`.
pub fn andrews_n2(r: u32, c: u32) -> Result<BigInt> {
    let (r, c) = (i64::from(r), i64::from(c));
    let diagonal = (1..=r).map(move |i| (2 * i + c - 1, 2 * i - 1));
    let off = (1..=r).flat_map(move |i| (i + 1..=r).map(move |j| (i + j + c - 1, i + j - 1)));
    product("N2", diagonal.chain(off))
}

/// Transpose-complementary plane partitions in a `b x b x 2a` box:
/// `C(a+b-1, b-1) * prod_{1<=i<=j<=b-2} (2a+i+j+1)/(i+j+1)`.
pub fn proctor_n6(a: u32, b: u32) -> Result<BigInt> {
    if b == 0 {
        return Ok(BigInt::one());
    }
    let (a, b) = (i64::from(a), i64::from(b));
    let binom = (1..b).map(move |i| (a + i, i));
    let rest =
        (1..=b - 2).flat_map(move |i| (i..=b - 2).map(move |j| (2 * a + i + j + 1, i + j + 1)));
    product("N6", binom.chain(rest))
}

/// Both sides of `N1(2a,b,b) = N6 * N2`, and optionally the tiler counts
/// of the hexagon of side `b` with horizontal sides `2a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxFactorizationReport {
    pub a: u32,
    pub b: u32,
    #[serde(with = "crate::linalg::decimal")]
    pub n1: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub n2: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub n6: BigInt,
    /// `(plain, hsym, vsym)` from the tiler when requested.
    pub tiler: Option<(String, String, String)>,
    pub pass: bool,
}

pub fn verify_box_factorization(
    a: u32,
    b: u32,
    with_tiler: bool,
    caps: &Caps,
) -> Result<BoxFactorizationReport> {
    let n1 = macmahon_n1(2 * a, b, b)?;
    let n2 = andrews_n2(b, 2 * a)?;
    let n6 = proctor_n6(a, b)?;
    let mut pass = n1 == &n6 * &n2;
    let mut tiler = None;
    if with_tiler {
        let h = build_hexagon(b, a)?;
        let (plain, hsym, vsym) = (
            count_plain(&h, caps)?,
            count_hsym(&h, caps)?,
            count_vsym(&h, caps)?,
        );
        pass &= plain == n1 && hsym == n6 && vsym == n2;
        tiler = Some((plain.to_string(), hsym.to_string(), vsym.to_string()));
    }
    Ok(BoxFactorizationReport {
        a,
        b,
        n1,
        n2,
        n6,
        tiler,
        pass,
    })
}
