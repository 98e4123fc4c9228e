use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::region::{self, Region, RegionSpec, UnitTriangle};

use super::count_plain;

/// The middle lattice line, which the second mirror fixes.
pub fn vsym_crossing_line(region: &Region) -> i32 {
    region.frame().side as i32
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitEntry {
    /// Columns of the lozenges crossing the middle line.
    pub crossing: Vec<i32>,
    /// Tilings of the upper part once those lozenges are placed.
    #[serde(with = "crate::linalg::decimal")]
    pub count: BigInt,
}

/// Decomposition of a region's tilings by the lozenges that cross its
/// middle line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisSplit {
    /// Columns of the unit edges on the middle line inside the region.
    pub slots: Vec<i32>,
    /// Number of crossing lozenges in every tiling.
    pub crossings: usize,
    pub entries: Vec<SplitEntry>,
}

impl AxisSplit {
    /// Both halves are congruent, so each crossing set contributes a square.
    pub fn sum_of_squares(&self) -> BigInt {
        self.entries.iter().map(|e| &e.count * &e.count).sum()
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().map(|e| &e.count).sum()
    }

    pub fn nonzero(&self) -> usize {
        self.entries.iter().filter(|e| !e.count.is_zero()).count()
    }
}

fn subsets(items: &[i32], k: usize) -> Vec<Vec<i32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<i32>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0]);
            rest
        })
        .collect();
    out.extend(subsets(&items[1..], k));
    out
}

/// Every choice of crossing lozenges on the middle line of the spec's
/// region (`n - 2l` of them; the other edges are crossed by paths), with
/// the tiling count of the part above the line once they are placed.
pub fn split_by_axis(spec: &RegionSpec, caps: &Caps) -> Result<AxisSplit> {
    spec.validate()?;
    let h = region::build_region(spec)?;
    let line = vsym_crossing_line(&h);
    let top: Vec<UnitTriangle> = h
        .triangles()
        .iter()
        .copied()
        .filter(|t| t.row < line)
        .collect();
    let slots: Vec<i32> = top
        .iter()
        .filter(|t| t.is_up() && t.row == line - 1 && h.contains(&UnitTriangle::down(line, t.col)))
        .map(|t| t.col)
        .collect();
    if slots.len() != spec.n as usize + 2 * spec.m as usize {
        return Err(Error::Placement(format!(
            "{spec}: expected {} edges on the middle line, found {}",
            spec.n + 2 * spec.m,
            slots.len()
        )));
    }
    // Each crossing lozenge leaves one surplus up triangle above the line.
    let ups = top.iter().filter(|t| t.is_up()).count();
    let crossings = ups - (top.len() - ups);
    let mut entries = Vec::new();
    for crossing in subsets(&slots, crossings) {
        let part = Region::from_triangles(
            h.frame(),
            top.iter()
                .copied()
                .filter(|t| !(t.is_up() && t.row == line - 1 && crossing.contains(&t.col))),
        );
        let count = count_plain(&part, caps)?;
        entries.push(SplitEntry { crossing, count });
    }
    Ok(AxisSplit {
        slots,
        crossings,
        entries,
    })
}
