//! Holey hexagons on the triangular lattice and the half-regions cut from them.
//!
//! Internally the lattice is drawn with horizontal lattice lines, so unit
//! triangles point up or down. Lattice points sit on lines `r = 0, 1, ...`
//! (top to bottom); point `(r, c)` has horizontal coordinate `c - r/2`.
//!
//! * `U(r, c)` has apex `(r, c)` and base `(r+1, c)..(r+1, c+1)`.
//! * `D(r, c)` has top edge `(r, c)..(r, c+1)` and apex `(r+1, c+1)`.
//!
//! A hexagon of side `n` and half-height `m` has horizontal top and bottom
//! sides of length `2m` and four slanted sides of length `n`. Its mirror
//! line `x = m` is the hole axis; its middle lattice line `r = n` is the
//! second mirror. Tilings of the hexagon are plane partitions in a
//! `2m x n x n` box.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    Up,
    Down,
}

/// One unit triangle, `U(row, col)` or `D(row, col)` in the lattice frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitTriangle {
    pub row: i32,
    pub col: i32,
    pub orient: Orientation,
}

impl UnitTriangle {
    pub const fn up(row: i32, col: i32) -> Self {
        UnitTriangle {
            row,
            col,
            orient: Orientation::Up,
        }
    }

    pub const fn down(row: i32, col: i32) -> Self {
        UnitTriangle {
            row,
            col,
            orient: Orientation::Down,
        }
    }

    /// Horizontal position within the row in half units; up and down
    /// triangles alternate along a row.
    pub fn pos(&self) -> i32 {
        2 * self.col + i32::from(self.orient == Orientation::Down)
    }

    /// Twice the horizontal coordinate of the triangle's centre line.
    pub fn twice_x(&self) -> i32 {
        self.pos() - self.row
    }

    pub fn is_up(&self) -> bool {
        self.orient == Orientation::Up
    }

    /// The three edge-adjacent triangles.
    pub fn neighbors(&self) -> [UnitTriangle; 3] {
        let (r, c) = (self.row, self.col);
        match self.orient {
            Orientation::Up => [
                UnitTriangle::down(r, c - 1),
                UnitTriangle::down(r, c),
                UnitTriangle::down(r + 1, c),
            ],
            Orientation::Down => [
                UnitTriangle::up(r - 1, c),
                UnitTriangle::up(r, c),
                UnitTriangle::up(r, c + 1),
            ],
        }
    }
}

impl Ord for UnitTriangle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.row, self.pos()).cmp(&(other.row, other.pos()))
    }
}

impl PartialOrd for UnitTriangle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UnitTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = if self.is_up() { 'U' } else { 'D' };
        write!(f, "{o}({},{})", self.row, self.col)
    }
}

/// Two edge-adjacent triangles, stored in lattice order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lozenge {
    pub first: UnitTriangle,
    pub second: UnitTriangle,
}

impl Lozenge {
    pub fn new(a: UnitTriangle, b: UnitTriangle) -> Self {
        if a <= b {
            Lozenge {
                first: a,
                second: b,
            }
        } else {
            Lozenge {
                first: b,
                second: a,
            }
        }
    }

    /// The lozenge `U(r, c) + D(r+1, c)` that crosses lattice line `r + 1`.
    pub fn vertical(r: i32, c: i32) -> Self {
        Lozenge::new(UnitTriangle::up(r, c), UnitTriangle::down(r + 1, c))
    }

    pub fn is_vertical(&self) -> bool {
        self.first.row != self.second.row
    }
}

/// Horizontal unit edge from point `(line, col)` to `(line, col + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HEdge {
    pub line: i32,
    pub col: i32,
}

impl HEdge {
    pub fn above(&self) -> UnitTriangle {
        UnitTriangle::up(self.line - 1, self.col)
    }

    pub fn below(&self) -> UnitTriangle {
        UnitTriangle::down(self.line, self.col)
    }
}

/// The outer hexagon a region was cut from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frame {
    /// Length of the slanted sides.
    pub side: u32,
    /// Half the length of the horizontal sides.
    pub m: u32,
}

impl Frame {
    /// Mirror across the hole axis `x = m`. Keeps rows and orientation.
    pub fn reflect_axis(&self, t: UnitTriangle) -> UnitTriangle {
        let m = self.m as i32;
        match t.orient {
            Orientation::Up => UnitTriangle::up(t.row, 2 * m + t.row - t.col),
            Orientation::Down => UnitTriangle::down(t.row, 2 * m + t.row - t.col - 1),
        }
    }

    /// Mirror across the middle lattice line `r = side`. Swaps orientation.
    pub fn reflect_middle(&self, t: UnitTriangle) -> UnitTriangle {
        let n = self.side as i32;
        match t.orient {
            Orientation::Up => UnitTriangle::down(2 * n - 1 - t.row, t.col + n - t.row - 1),
            Orientation::Down => UnitTriangle::up(2 * n - 1 - t.row, t.col + n - t.row),
        }
    }

    /// The two triangles of the axis position whose top apex lies on line
    /// `r` (even), as a vertical lozenge.
    pub fn axis_position(&self, r: i32) -> Lozenge {
        Lozenge::vertical(r, self.m as i32 + r / 2)
    }

    /// All `side` lozenge positions bisected lengthwise by the hole axis.
    pub fn axis_positions(&self) -> Vec<Lozenge> {
        (0..self.side as i32)
            .map(|i| self.axis_position(2 * i))
            .collect()
    }

    /// Triangles of an up-pointing triangle of side `s` whose apex is the
    /// lattice point `(r0, c0)`.
    pub fn up_triangle(r0: i32, c0: i32, s: i32) -> Vec<UnitTriangle> {
        let mut out = Vec::new();
        for i in 0..s {
            for j in 0..=i {
                out.push(UnitTriangle::up(r0 + i, c0 + j));
            }
            for j in 0..i {
                out.push(UnitTriangle::down(r0 + i, c0 + j));
            }
        }
        out
    }
}

/// Parameters of a holey hexagon: side `n`, vertical sides `2m`, hole
/// indices `k_1 < ... < k_l <= n/2`, and an optional central rhombus of
/// side `x` (which requires even `n` and enlarges the hexagon to side
/// `n + x`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RegionSpec {
    pub n: u32,
    pub m: u32,
    pub holes: Vec<u32>,
    pub central_x: u32,
}

impl RegionSpec {
    pub fn new(n: u32, m: u32, holes: &[u32], central_x: u32) -> Result<Self> {
        let spec = RegionSpec {
            n,
            m,
            holes: holes.to_vec(),
            central_x,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Hexagon with holes and no rhombus.
    pub fn holey(n: u32, m: u32, holes: &[u32]) -> Result<Self> {
        Self::new(n, m, holes, 0)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.m == 0 {
            return Err(Error::InvalidSpec(format!(
                "n and m must be positive (n={}, m={})",
                self.n, self.m
            )));
        }
        let mut prev = 0;
        for &k in &self.holes {
            if k <= prev {
                return Err(Error::InvalidSpec(format!(
                    "hole indices must be positive and strictly increasing: {:?}",
                    self.holes
                )));
            }
            if 2 * k > self.n {
                return Err(Error::InvalidSpec(format!(
                    "hole index {k} exceeds n/2 = {}/2",
                    self.n
                )));
            }
            prev = k;
        }
        if self.central_x > 0 && self.n % 2 == 1 {
            return Err(Error::InvalidSpec(format!(
                "central rhombus needs even n, got n={}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn l(&self) -> usize {
        self.holes.len()
    }

    /// Slanted side of the outer hexagon.
    pub fn outer_side(&self) -> u32 {
        self.n + self.central_x
    }

    pub fn frame(&self) -> Frame {
        Frame {
            side: self.outer_side(),
            m: self.m,
        }
    }

    /// Number of axis lozenge positions left open, `n - 2l`.
    pub fn open_axis_positions(&self) -> u32 {
        self.n - 2 * self.l() as u32
    }

    /// Every valid hole list for side `n` with exactly `l` holes, in
    /// lexicographic order.
    pub fn hole_lists(n: u32, l: usize) -> Vec<Vec<u32>> {
        fn rec(start: u32, max: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for k in start..=max {
                cur.push(k);
                rec(k + 1, max, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n / 2, l, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for RegionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.holes.iter().map(u32::to_string).collect();
        write!(f, "n={} m={} k={}", self.n, self.m, ks.join(","))?;
        if self.central_x > 0 {
            write!(f, " x={}", self.central_x)?;
        }
        Ok(())
    }
}

impl FromStr for RegionSpec {
    type Err = Error;

    /// Parses `n=15 m=5 k=2,5,7 x=0`; `k` may be empty or absent, `x` is optional.
    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut m, mut holes, mut x) = (None, None, Vec::new(), 0);
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got `{tok}`")))?;
            let num = |v: &str| {
                v.parse::<u32>()
                    .map_err(|_| Error::InvalidSpec(format!("bad number `{v}` for {key}")))
            };
            match key {
                "n" => n = Some(num(val)?),
                "m" => m = Some(num(val)?),
                "x" => x = num(val)?,
                "k" => {
                    holes = val
                        .split(',')
                        .filter(|p| !p.is_empty())
                        .map(num)
                        .collect::<Result<Vec<_>>>()?
                }
                _ => return Err(Error::InvalidSpec(format!("unknown key `{key}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::InvalidSpec("missing n".into()))?;
        let m = m.ok_or_else(|| Error::InvalidSpec("missing m".into()))?;
        RegionSpec::new(n, m, &holes, x)
    }
}

/// A finite set of unit triangles with optional half-weight lozenge
/// positions and free boundary edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    frame: Frame,
    triangles: BTreeSet<UnitTriangle>,
    half_weight: BTreeSet<Lozenge>,
    free_edges: BTreeSet<HEdge>,
}

impl Region {
    /// Region from an explicit triangle set; the frame is only used for the
    /// reflections and the axis.
    pub fn from_triangles(frame: Frame, triangles: impl IntoIterator<Item = UnitTriangle>) -> Self {
        Region {
            frame,
            triangles: triangles.into_iter().collect(),
            half_weight: BTreeSet::new(),
            free_edges: BTreeSet::new(),
        }
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn triangles(&self) -> &BTreeSet<UnitTriangle> {
        &self.triangles
    }

    pub fn half_weight_positions(&self) -> &BTreeSet<Lozenge> {
        &self.half_weight
    }

    pub fn free_edges(&self) -> &BTreeSet<HEdge> {
        &self.free_edges
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn contains(&self, t: &UnitTriangle) -> bool {
        self.triangles.contains(t)
    }

    pub fn up_count(&self) -> usize {
        self.triangles.iter().filter(|t| t.is_up()).count()
    }

    pub fn down_count(&self) -> usize {
        self.len() - self.up_count()
    }

    /// Whether triangle `t` may be covered by a half-lozenge across a free edge.
    pub fn has_free_edge(&self, t: &UnitTriangle) -> bool {
        let edge = match t.orient {
            Orientation::Up => HEdge {
                line: t.row + 1,
                col: t.col,
            },
            Orientation::Down => HEdge {
                line: t.row,
                col: t.col,
            },
        };
        self.free_edges.contains(&edge)
    }

    pub fn reflect_horizontal(&self) -> Region {
        self.map(|t| self.frame.reflect_axis(t))
    }

    pub fn reflect_vertical(&self) -> Region {
        self.map(|t| self.frame.reflect_middle(t))
    }

    fn map<F: Fn(UnitTriangle) -> UnitTriangle>(&self, f: F) -> Region {
        let edge = |e: &HEdge| {
            let img = f(e.above());
            match img.orient {
                Orientation::Up => HEdge {
                    line: img.row + 1,
                    col: img.col,
                },
                Orientation::Down => HEdge {
                    line: img.row,
                    col: img.col,
                },
            }
        };
        Region {
            frame: self.frame,
            triangles: self.triangles.iter().map(|&t| f(t)).collect(),
            half_weight: self
                .half_weight
                .iter()
                .map(|l| Lozenge::new(f(l.first), f(l.second)))
                .collect(),
            free_edges: self.free_edges.iter().map(edge).collect(),
        }
    }

    /// Symmetric under the mirror that fixes the hole axis.
    pub fn has_horizontal_symmetry(&self) -> bool {
        self.triangles
            .iter()
            .all(|&t| self.triangles.contains(&self.frame.reflect_axis(t)))
    }

    /// Symmetric under the mirror that swaps top and bottom halves.
    pub fn has_vertical_symmetry(&self) -> bool {
        self.triangles
            .iter()
            .all(|&t| self.triangles.contains(&self.frame.reflect_middle(t)))
    }

    /// Axis lozenge positions with both triangles present.
    pub fn axis_positions(&self) -> Vec<Lozenge> {
        self.frame
            .axis_positions()
            .into_iter()
            .filter(|l| self.contains(&l.first) && self.contains(&l.second))
            .collect()
    }

    fn remove_all(&mut self, tris: &[UnitTriangle], what: &str) -> Result<()> {
        if let Some(t) = tris.iter().find(|t| !self.triangles.contains(t)) {
            return Err(Error::Placement(format!(
                "{what}: triangle {t} is outside the region or already removed"
            )));
        }
        for t in tris {
            self.triangles.remove(t);
        }
        Ok(())
    }

    /// Removes an up-pointing triangle of side `side` with apex on the hole
    /// axis at (even) lattice line `apex_line`, together with its mirror
    /// image across the middle line.
    pub fn punch_axis_triangle(&self, apex_line: u32, side: u32) -> Result<Region> {
        if apex_line % 2 == 1 {
            return Err(Error::Placement(format!(
                "axis apex needs an even line, got {apex_line}"
            )));
        }
        let r0 = apex_line as i32;
        let c0 = self.frame.m as i32 + r0 / 2;
        let upper = Frame::up_triangle(r0, c0, side as i32);
        let lower: Vec<UnitTriangle> = upper
            .iter()
            .map(|&t| self.frame.reflect_middle(t))
            .collect();
        let mut out = self.clone();
        let what = format!("triangle of side {side} at line {apex_line}");
        out.remove_all(&upper, &what)?;
        out.remove_all(&lower, &what)?;
        Ok(out)
    }
}

/// Full hexagon of side `n` and vertical sides `2m`: `2n^2 + 8mn` triangles.
pub fn build_hexagon(n: u32, m: u32) -> Result<Region> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidSpec(format!(
            "hexagon needs n, m >= 1 (n={n}, m={m})"
        )));
    }
    let (ni, w) = (n as i32, 2 * m as i32);
    let mut tris = Vec::new();
    for r in 0..ni {
        for c in 0..=w + r {
            tris.push(UnitTriangle::up(r, c));
        }
        for c in 0..w + r {
            tris.push(UnitTriangle::down(r, c));
        }
    }
    for s in 0..ni {
        let r = ni + s;
        for c in s + 1..w + ni {
            tris.push(UnitTriangle::up(r, c));
        }
        for c in s..w + ni {
            tris.push(UnitTriangle::down(r, c));
        }
    }
    Ok(Region::from_triangles(Frame { side: n, m }, tris))
}

/// Removes the `2l` side-two holes of `spec` from a hexagon of side
/// `spec.n + spec.central_x`. Hole `k` is the up triangle with apex on the
/// axis at line `2k - 2`, so its base lies on line `2k`; its partner is the
/// mirror image across the middle line.
pub fn punch_holes(region: &Region, spec: &RegionSpec) -> Result<Region> {
    spec.validate()?;
    if region.frame() != spec.frame() {
        return Err(Error::Placement(format!(
            "region frame {:?} does not match spec frame {:?}",
            region.frame(),
            spec.frame()
        )));
    }
    let mut out = region.clone();
    for &k in &spec.holes {
        out = out.punch_axis_triangle(2 * k - 2, 2)?;
    }
    Ok(out)
}

/// Builds the full region named by `spec`: the hexagon of side `n + x`,
/// the side-two holes, and the central rhombus of side `x` when `x > 0`.
pub fn punch_central_rhombus(spec: &RegionSpec) -> Result<Region> {
    spec.validate()?;
    let base = build_hexagon(spec.outer_side(), spec.m)?;
    let holed = punch_holes(&base, spec)?;
    if spec.central_x == 0 {
        return Ok(holed);
    }
    holed.punch_axis_triangle(spec.n, spec.central_x)
}

/// Region named by a spec (alias of [`punch_central_rhombus`], which also
/// covers `x = 0`).
pub fn build_region(spec: &RegionSpec) -> Result<Region> {
    punch_central_rhombus(spec)
}

/// Portion strictly on one side of the hole axis; tilings of it are the
/// tilings symmetric about that axis.
pub fn upper_half(region: &Region) -> Result<Region> {
    if !region.has_horizontal_symmetry() {
        return Err(Error::NotSymmetric("horizontal"));
    }
    let twice_m = 2 * region.frame.m as i32;
    Ok(Region::from_triangles(
        region.frame,
        region
            .triangles
            .iter()
            .copied()
            .filter(|t| t.twice_x() < twice_m),
    ))
}

/// The complementary side together with the open axis positions, which are
/// marked half-weight.
pub fn lower_half_weighted(region: &Region) -> Result<Region> {
    if !region.has_horizontal_symmetry() {
        return Err(Error::NotSymmetric("horizontal"));
    }
    let twice_m = 2 * region.frame.m as i32;
    let mut out = Region::from_triangles(
        region.frame,
        region
            .triangles
            .iter()
            .copied()
            .filter(|t| t.twice_x() >= twice_m),
    );
    out.half_weight = region.axis_positions().into_iter().collect();
    Ok(out)
}

/// Rows above the middle line, with every edge on that line free.
pub fn left_half_free(region: &Region) -> Result<Region> {
    if !region.has_vertical_symmetry() {
        return Err(Error::NotSymmetric("vertical"));
    }
    let n = region.frame.side as i32;
    let mut out = Region::from_triangles(
        region.frame,
        region.triangles.iter().copied().filter(|t| t.row < n),
    );
    out.free_edges = out
        .triangles
        .iter()
        .filter(|t| t.is_up() && t.row == n - 1)
        .map(|t| HEdge {
            line: n,
            col: t.col,
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_sizes() {
        assert_eq!(build_hexagon(1, 1).unwrap().len(), 10);
        assert_eq!(build_hexagon(2, 1).unwrap().len(), 24);
        assert_eq!(build_hexagon(15, 5).unwrap().len(), 1050);
    }

    #[test]
    fn row_lengths_follow_frame() {
        let h = build_hexagon(3, 2).unwrap();
        for r in 0..3 {
            let len = h.triangles().iter().filter(|t| t.row == r).count();
            assert_eq!(len as i32, 4 * 2 + 2 * r + 1);
        }
        assert_eq!(h.up_count(), h.down_count());
    }

    #[test]
    fn hexagon_is_doubly_symmetric() {
        for (n, m) in [(1, 1), (2, 1), (3, 2), (5, 3)] {
            let h = build_hexagon(n, m).unwrap();
            assert_eq!(h.reflect_horizontal(), h);
            assert_eq!(h.reflect_vertical(), h);
        }
    }

    #[test]
    fn reflections_are_involutions() {
        let f = Frame { side: 4, m: 2 };
        for t in build_hexagon(4, 2).unwrap().triangles() {
            assert_eq!(f.reflect_axis(f.reflect_axis(*t)), *t);
            assert_eq!(f.reflect_middle(f.reflect_middle(*t)), *t);
        }
    }

    #[test]
    fn figure_region_count() {
        let spec = RegionSpec::holey(15, 5, &[2, 5, 7]).unwrap();
        let r = build_region(&spec).unwrap();
        assert_eq!(r.len(), 1050 - 24);
        assert_eq!(r.axis_positions().len(), 9);
        assert!(r.has_horizontal_symmetry() && r.has_vertical_symmetry());
    }

    #[test]
    fn no_holes_is_unchanged() {
        let spec = RegionSpec::holey(4, 2, &[]).unwrap();
        let h = build_hexagon(4, 2).unwrap();
        assert_eq!(punch_holes(&h, &spec).unwrap(), h);
    }

    #[test]
    fn smallest_holey_hexagon() {
        let r = build_region(&RegionSpec::holey(2, 1, &[1]).unwrap()).unwrap();
        assert_eq!(r.len(), 16);
        assert_eq!(r.axis_positions().len(), 0);
        assert_eq!(r.up_count(), r.down_count());
    }

    #[test]
    fn axis_positions_are_n_minus_2l() {
        for n in 1..=7u32 {
            for l in 0..=n as usize / 2 {
                for ks in RegionSpec::hole_lists(n, l) {
                    let spec = RegionSpec::holey(n, 2, &ks).unwrap();
                    let r = build_region(&spec).unwrap();
                    assert_eq!(r.axis_positions().len() as u32, n - 2 * l as u32, "{spec}");
                    assert_eq!(r.len() as u32, 2 * n * n + 16 * n - 8 * l as u32);
                    assert_eq!(r.reflect_horizontal(), r);
                    assert_eq!(r.reflect_vertical(), r);
                }
            }
        }
    }

    #[test]
    fn central_rhombus() {
        let r = build_region(&RegionSpec::new(2, 1, &[], 2).unwrap()).unwrap();
        assert_eq!(r.len(), 56);
        let fig = build_region(&RegionSpec::new(8, 5, &[], 7).unwrap()).unwrap();
        assert_eq!(fig.len(), 2 * 225 + 8 * 5 * 15 - 2 * 49);
        assert!(fig.has_horizontal_symmetry() && fig.has_vertical_symmetry());
        assert_eq!(fig.axis_positions().len(), 8);
        assert_eq!(
            RegionSpec::new(3, 1, &[], 1).unwrap_err(),
            Error::InvalidSpec("central rhombus needs even n, got n=3".into())
        );
    }

    #[test]
    fn zero_rhombus_matches_holes_only() {
        let spec = RegionSpec::new(4, 1, &[1, 2], 0).unwrap();
        let h = build_hexagon(4, 1).unwrap();
        assert_eq!(
            punch_central_rhombus(&spec).unwrap(),
            punch_holes(&h, &spec).unwrap()
        );
    }

    #[test]
    fn rhombus_with_holes_stays_symmetric() {
        for x in 1..=3 {
            let spec = RegionSpec::new(4, 2, &[1, 2], x).unwrap();
            let r = build_region(&spec).unwrap();
            assert_eq!(r.len() as u32, {
                let s = 4 + x;
                2 * s * s + 16 * s - 16 - 2 * x * x
            });
            assert!(r.has_horizontal_symmetry() && r.has_vertical_symmetry());
            assert_eq!(r.axis_positions().len(), 0);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(RegionSpec::holey(4, 1, &[2, 1]).is_err());
        assert!(RegionSpec::holey(4, 1, &[3]).is_err());
        assert!(RegionSpec::holey(4, 1, &[0]).is_err());
        assert!(RegionSpec::holey(0, 1, &[]).is_err());
        assert!(RegionSpec::holey(5, 1, &[1, 2]).is_ok());
    }

    #[test]
    fn spec_text_round_trip() {
        let s: RegionSpec = "n=15 m=5 k=2,5,7 x=0".parse().unwrap();
        assert_eq!(s, RegionSpec::holey(15, 5, &[2, 5, 7]).unwrap());
        let t: RegionSpec = "n=4 m=1 k=".parse().unwrap();
        assert!(t.holes.is_empty());
        let u: RegionSpec = "m=2 n=8 x=7".parse().unwrap();
        assert_eq!(u.central_x, 7);
        assert_eq!(u.to_string().parse::<RegionSpec>().unwrap(), u);
        assert!("n=4".parse::<RegionSpec>().is_err());
        assert!("n=4 m=1 q=3".parse::<RegionSpec>().is_err());
    }

    #[test]
    fn halves_partition_region() {
        let spec = RegionSpec::holey(15, 5, &[2, 5, 7]).unwrap();
        let r = build_region(&spec).unwrap();
        let up = upper_half(&r).unwrap();
        let low = lower_half_weighted(&r).unwrap();
        assert_eq!(low.half_weight_positions().len(), 9);
        assert!(up.triangles().is_disjoint(low.triangles()));
        let union: BTreeSet<_> = up.triangles().union(low.triangles()).copied().collect();
        assert_eq!(&union, r.triangles());
        for pos in low.half_weight_positions() {
            assert!(low.contains(&pos.first) && low.contains(&pos.second));
            assert!(!up.contains(&pos.first));
        }
    }

    #[test]
    fn free_half_has_cut_edges() {
        let spec = RegionSpec::holey(15, 5, &[2, 5, 7]).unwrap();
        let r = build_region(&spec).unwrap();
        let f = left_half_free(&r).unwrap();
        assert_eq!(f.len(), r.len() / 2);
        // bottom line of the upper half has 2m + n unit edges
        assert_eq!(f.free_edges().len(), 2 * 5 + 15);
        for e in f.free_edges() {
            assert!(f.contains(&e.above()) && !f.contains(&e.below()));
        }
    }

    #[test]
    fn asymmetric_region_rejected() {
        let h = build_hexagon(3, 1).unwrap();
        let mut tris: Vec<_> = h.triangles().iter().copied().collect();
        tris.remove(0);
        let r = Region::from_triangles(h.frame(), tris);
        assert_eq!(
            upper_half(&r).unwrap_err(),
            Error::NotSymmetric("horizontal")
        );
        assert_eq!(
            left_half_free(&r).unwrap_err(),
            Error::NotSymmetric("vertical")
        );
    }

    #[test]
    fn overlapping_holes_rejected() {
        let spec = RegionSpec::holey(4, 1, &[1]).unwrap();
        let r = build_region(&spec).unwrap();
        assert!(matches!(
            r.punch_axis_triangle(0, 2),
            Err(Error::Placement(_))
        ));
        assert!(matches!(
            r.punch_axis_triangle(1, 2),
            Err(Error::Placement(_))
        ));
    }
}
