//! Counting lozenge tilings: exhaustive enumeration for tiny regions,
//! a broken-profile DP for plain, free-boundary and weighted counts, and
//! row transfers for the two symmetry classes.

mod board;
mod dp;
mod enumerate;
mod split;
mod transfer;

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::region::{self, Lozenge, Region, RegionSpec, UnitTriangle};

pub use dp::{count_profile_dp, DpOptions};
pub use enumerate::{enumerate_tilings, TilingIter};
pub use split::{split_by_axis, vsym_crossing_line, AxisSplit, SplitEntry};
pub use transfer::{count_hsym_transfer, count_vsym_transfer};

/// One tile: a lozenge, or a half-lozenge covering a single triangle next
/// to a free edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tile {
    Lozenge(Lozenge),
    Half(UnitTriangle),
}

impl Tile {
    fn map<F: Fn(UnitTriangle) -> UnitTriangle>(&self, f: F) -> Tile {
        match *self {
            Tile::Lozenge(l) => Tile::Lozenge(Lozenge::new(f(l.first), f(l.second))),
            Tile::Half(t) => Tile::Half(f(t)),
        }
    }
}

/// A tiling as a sorted list of tiles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn new(mut tiles: Vec<Tile>) -> Self {
        tiles.sort_unstable();
        Tiling { tiles }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn lozenges(&self) -> impl Iterator<Item = &Lozenge> {
        self.tiles.iter().filter_map(|t| match t {
            Tile::Lozenge(l) => Some(l),
            Tile::Half(_) => None,
        })
    }

    /// Image under a map of triangles.
    pub fn map<F: Fn(UnitTriangle) -> UnitTriangle>(&self, f: F) -> Tiling {
        Tiling::new(self.tiles.iter().map(|t| t.map(&f)).collect())
    }

    pub fn is_fixed_by<F: Fn(UnitTriangle) -> UnitTriangle>(&self, f: F) -> bool {
        self.map(f) == *self
    }

    /// Number of the given positions that carry a lozenge of the tiling.
    pub fn occupied(&self, positions: &BTreeSet<Lozenge>) -> usize {
        self.lozenges().filter(|l| positions.contains(l)).count()
    }

    /// Columns `c` of the lozenges `U(line-1, c) + D(line, c)` crossing a lattice line.
    pub fn crossings(&self, line: i32) -> Vec<i32> {
        self.lozenges()
            .filter(|l| l.is_vertical() && l.first.row == line - 1)
            .map(|l| l.first.col)
            .collect()
    }

    /// Every triangle of `region` covered exactly once, only by region
    /// triangles, and half tiles only on free edges.
    pub fn covers(&self, region: &Region) -> bool {
        let mut seen = BTreeSet::new();
        for tile in &self.tiles {
            let tris: Vec<UnitTriangle> = match *tile {
                Tile::Lozenge(l) => {
                    if !l.first.neighbors().contains(&l.second) {
                        return false;
                    }
                    vec![l.first, l.second]
                }
                Tile::Half(t) => {
                    if !region.has_free_edge(&t) {
                        return false;
                    }
                    vec![t]
                }
            };
            for t in tris {
                if !region.contains(&t) || !seen.insert(t) {
                    return false;
                }
            }
        }
        seen.len() == region.len()
    }
}

/// The five counts attached to a region spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    #[serde(with = "crate::linalg::decimal")]
    pub plain: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub hsym: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub vsym: BigInt,
    #[serde(with = "crate::linalg::decimal")]
    pub free: BigInt,
    /// `2^(open axis positions)` times the weighted count of the lower half.
    #[serde(with = "crate::linalg::decimal")]
    pub weighted2: BigInt,
}

fn signed(v: BigUint) -> BigInt {
    BigInt::from(v)
}

/// Tilings of a region, ignoring any free edges and weights.
pub fn count_plain(region: &Region, caps: &Caps) -> Result<BigInt> {
    count_profile_dp(region, DpOptions::default(), caps).map(signed)
}

/// Tilings in which half-lozenges may protrude across the free edges.
pub fn count_free(region: &Region, caps: &Caps) -> Result<BigInt> {
    count_profile_dp(
        region,
        DpOptions {
            half_lozenges: true,
            weighted: false,
        },
        caps,
    )
    .map(signed)
}

/// Sum over tilings of `2^(half-weight positions not covered by a lozenge)`.
pub fn count_weighted2(region: &Region, caps: &Caps) -> Result<BigInt> {
    count_profile_dp(
        region,
        DpOptions {
            half_lozenges: false,
            weighted: true,
        },
        caps,
    )
    .map(signed)
}

/// Tilings fixed by the mirror across the hole axis.
pub fn count_hsym(region: &Region, caps: &Caps) -> Result<BigInt> {
    count_hsym_transfer(region, caps).map(signed)
}

/// Tilings fixed by the mirror across the middle line.
pub fn count_vsym(region: &Region, caps: &Caps) -> Result<BigInt> {
    count_vsym_transfer(region, caps).map(signed)
}

/// Runs `f` over every tiling, failing on the enumeration caps.
pub fn for_each_tiling<F: FnMut(&Tiling)>(region: &Region, caps: &Caps, mut f: F) -> Result<()> {
    for tiling in enumerate_tilings(region, caps)? {
        f(&tiling?);
    }
    Ok(())
}

/// Number of tilings by enumeration (half tiles allowed on free edges).
pub fn enumerate_count(region: &Region, caps: &Caps) -> Result<BigInt> {
    let mut n = 0u64;
    for_each_tiling(region, caps, |_| n += 1)?;
    Ok(BigInt::from(n))
}

/// Enumerated tilings fixed by the hole-axis mirror.
pub fn enumerate_hsym(region: &Region, caps: &Caps) -> Result<BigInt> {
    if !region.has_horizontal_symmetry() {
        return Err(Error::NotSymmetric("horizontal"));
    }
    let frame = region.frame();
    let mut n = 0u64;
    for_each_tiling(region, caps, |t| {
        n += u64::from(t.is_fixed_by(|x| frame.reflect_axis(x)))
    })?;
    Ok(BigInt::from(n))
}

/// Enumerated tilings fixed by the middle-line mirror.
pub fn enumerate_vsym(region: &Region, caps: &Caps) -> Result<BigInt> {
    if !region.has_vertical_symmetry() {
        return Err(Error::NotSymmetric("vertical"));
    }
    let frame = region.frame();
    let mut n = 0u64;
    for_each_tiling(region, caps, |t| {
        n += u64::from(t.is_fixed_by(|x| frame.reflect_middle(x)))
    })?;
    Ok(BigInt::from(n))
}

/// Weighted count by enumeration.
pub fn enumerate_weighted2(region: &Region, caps: &Caps) -> Result<BigInt> {
    let positions = region.half_weight_positions();
    let mut total = BigInt::from(0);
    for_each_tiling(region, caps, |t| {
        total += BigInt::from(1) << (positions.len() - t.occupied(positions))
    })?;
    Ok(total)
}

/// All five counts of a spec. Plain, free and weighted counts come from the
/// profile DP; the symmetric counts from the row transfers.
pub fn count_report(spec: &RegionSpec, caps: &Caps) -> Result<CountReport> {
    let h = region::build_region(spec)?;
    Ok(CountReport {
        plain: count_plain(&h, caps)?,
        hsym: count_hsym(&h, caps)?,
        vsym: count_vsym(&h, caps)?,
        free: count_free(&region::left_half_free(&h)?, caps)?,
        weighted2: count_weighted2(&region::lower_half_weighted(&h)?, caps)?,
    })
}

/// The region of `spec` with holes `k_t` and `k_t + 1` (which must be
/// adjacent) replaced by one hole of side four.
pub fn merged_hole_region(spec: &RegionSpec, t: usize) -> Result<Region> {
    spec.validate()?;
    let (Some(&a), Some(&b)) = (spec.holes.get(t), spec.holes.get(t + 1)) else {
        return Err(Error::InvalidSpec(format!(
            "no hole pair at index {t} in {spec}"
        )));
    };
    if b != a + 1 {
        return Err(Error::InvalidSpec(format!(
            "holes {a} and {b} are not adjacent"
        )));
    }
    let mut rest = spec.clone();
    rest.holes.retain(|&k| k != a && k != b);
    region::build_region(&rest)?.punch_axis_triangle(2 * a - 2, 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{
        build_hexagon, build_region, left_half_free, lower_half_weighted, upper_half,
    };

    fn caps() -> Caps {
        Caps::default()
    }

    fn spec(n: u32, m: u32, k: &[u32], x: u32) -> RegionSpec {
        RegionSpec::new(n, m, k, x).unwrap()
    }

    #[test]
    fn smallest_hexagon() {
        let h = build_hexagon(1, 1).unwrap();
        assert_eq!(enumerate_count(&h, &caps()).unwrap(), BigInt::from(3));
        assert_eq!(count_plain(&h, &caps()).unwrap(), BigInt::from(3));
    }

    #[test]
    fn enumerated_tilings_are_valid_and_distinct() {
        let h = build_region(&spec(4, 1, &[1], 0)).unwrap();
        let mut seen = BTreeSet::new();
        for_each_tiling(&h, &caps(), |t| {
            assert!(t.covers(&h));
            assert!(seen.insert(t.tiles().to_vec()));
        })
        .unwrap();
        assert_eq!(BigInt::from(seen.len()), count_plain(&h, &caps()).unwrap());
    }

    #[test]
    fn single_triangle_has_no_tiling() {
        let h = build_hexagon(1, 1).unwrap();
        let one = Region::from_triangles(h.frame(), [UnitTriangle::up(0, 0)]);
        assert_eq!(enumerate_count(&one, &caps()).unwrap(), BigInt::from(0));
        assert_eq!(count_plain(&one, &caps()).unwrap(), BigInt::from(0));
    }

    #[test]
    fn hexagon_counts() {
        let expected = [
            (1, 1, 3u64),
            (1, 2, 5),
            (2, 1, 20),
            (2, 2, 105),
            (3, 1, 175),
            (3, 2, 4116),
            (4, 2, 232848),
        ];
        for (n, m, want) in expected {
            let h = build_hexagon(n, m).unwrap();
            assert_eq!(
                count_plain(&h, &caps()).unwrap(),
                BigInt::from(want),
                "({n},{m})"
            );
        }
    }

    #[test]
    fn dp_matches_enumeration() {
        for s in [
            "n=2 m=1",
            "n=2 m=1 k=1",
            "n=3 m=1 k=1",
            "n=4 m=1 k=1,2",
            "n=2 m=1 x=1",
            "n=2 m=2 k=1 x=2",
        ] {
            let h = build_region(&s.parse().unwrap()).unwrap();
            assert_eq!(
                count_plain(&h, &caps()).unwrap(),
                enumerate_count(&h, &caps()).unwrap(),
                "{s}"
            );
            let f = left_half_free(&h).unwrap();
            assert_eq!(
                count_free(&f, &caps()).unwrap(),
                enumerate_count(&f, &caps()).unwrap(),
                "{s}"
            );
            let w = lower_half_weighted(&h).unwrap();
            assert_eq!(
                count_weighted2(&w, &caps()).unwrap(),
                enumerate_weighted2(&w, &caps()).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn transfers_match_enumeration() {
        for s in [
            "n=1 m=1",
            "n=2 m=1",
            "n=3 m=1",
            "n=2 m=2 k=1",
            "n=4 m=1 k=1",
            "n=3 m=2 k=1",
            "n=2 m=1 x=1",
        ] {
            let h = build_region(&s.parse().unwrap()).unwrap();
            assert_eq!(
                count_hsym(&h, &caps()).unwrap(),
                enumerate_hsym(&h, &caps()).unwrap(),
                "{s}"
            );
            assert_eq!(
                count_vsym(&h, &caps()).unwrap(),
                enumerate_vsym(&h, &caps()).unwrap(),
                "{s}"
            );
        }
    }

    #[test]
    fn half_region_equivalences() {
        let h = build_region(&spec(4, 1, &[1], 0)).unwrap();
        let hsym = enumerate_hsym(&h, &caps()).unwrap();
        assert_eq!(
            hsym,
            enumerate_count(&upper_half(&h).unwrap(), &caps()).unwrap()
        );
        let vsym = enumerate_vsym(&h, &caps()).unwrap();
        assert_eq!(
            vsym,
            enumerate_count(&left_half_free(&h).unwrap(), &caps()).unwrap()
        );
    }

    #[test]
    fn seed_instance_halves() {
        let h = build_region(&spec(2, 1, &[1], 0)).unwrap();
        assert_eq!(
            count_weighted2(&lower_half_weighted(&h).unwrap(), &caps()).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            count_free(&left_half_free(&h).unwrap(), &caps()).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn symmetric_tilings_fill_axis_positions() {
        let h = build_region(&spec(5, 1, &[1], 0)).unwrap();
        let frame = h.frame();
        let axis: BTreeSet<Lozenge> = h.axis_positions().into_iter().collect();
        assert_eq!(axis.len(), 3);
        for_each_tiling(&h, &caps(), |t| {
            if t.is_fixed_by(|x| frame.reflect_axis(x)) {
                assert_eq!(t.occupied(&axis), axis.len());
            }
        })
        .unwrap();
    }

    #[test]
    fn symmetry_required() {
        let h = build_hexagon(2, 1).unwrap();
        let lopsided = Region::from_triangles(
            h.frame(),
            h.triangles().iter().copied().filter(|t| t.col > 0),
        );
        assert!(matches!(
            count_hsym(&lopsided, &caps()),
            Err(Error::NotSymmetric(_))
        ));
        assert!(matches!(
            count_vsym(&lopsided, &caps()),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn caps_are_enforced() {
        let h = build_hexagon(3, 2).unwrap();
        let tight = Caps {
            max_tilings: 10,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_count(&h, &tight),
            Err(Error::CapExceeded(_))
        ));
        let small = Caps {
            max_triangles: 10,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_tilings(&h, &small),
            Err(Error::CapExceeded(_))
        ));
        let narrow = Caps {
            dp_width: 4,
            ..Caps::default()
        };
        assert!(matches!(
            count_plain(&h, &narrow),
            Err(Error::WidthExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_order_is_stable() {
        let h = build_hexagon(2, 1).unwrap();
        let a: Vec<Tiling> = enumerate_tilings(&h, &caps())
            .unwrap()
            .map(|t| t.unwrap())
            .collect();
        let b: Vec<Tiling> = enumerate_tilings(&h, &caps())
            .unwrap()
            .map(|t| t.unwrap())
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn contiguous_holes_merge() {
        for s in [
            "n=4 m=1 k=1,2",
            "n=4 m=2 k=1,2",
            "n=5 m=1 k=1,2",
            "n=6 m=1 k=2,3",
        ] {
            let spec: RegionSpec = s.parse().unwrap();
            let h = build_region(&spec).unwrap();
            let merged = merged_hole_region(&spec, 0).unwrap();
            assert_eq!(
                count_plain(&h, &caps()).unwrap(),
                count_plain(&merged, &caps()).unwrap(),
                "{s}"
            );
            assert_eq!(
                enumerate_count(&merged, &caps()).unwrap(),
                count_plain(&merged, &caps()).unwrap(),
                "{s}"
            );
        }
    }
}
