//! Row-by-row transfer counts of symmetric tilings over the whole region.
//!
//! Each tile is charged to the row of its first triangle: a lozenge inside
//! the row, or a vertical lozenge reaching into the next row. The mirror
//! about the hole axis maps every row to itself, so a tiling is fixed by it
//! exactly when every row's tile set is. The mirror about the middle line
//! swaps row `r` with row `2N-1-r` and fixes the lozenges crossing the
//! middle line, so a fixed tiling is determined by its rows above that line.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::region::{Frame, Region, UnitTriangle};

const MASK_BITS: usize = 128;

struct Rows {
    /// Triangles of each row in lattice order.
    rows: Vec<Vec<UnitTriangle>>,
    first_row: i32,
}

impl Rows {
    fn new(region: &Region) -> Self {
        let first_row = region.triangles().iter().next().map_or(0, |t| t.row);
        let mut rows: Vec<Vec<UnitTriangle>> = Vec::new();
        for &t in region.triangles() {
            let r = (t.row - first_row) as usize;
            if rows.len() <= r {
                rows.resize(r + 1, Vec::new());
            }
            rows[r].push(t);
        }
        Rows { rows, first_row }
    }

    fn row(&self, r: i32) -> &[UnitTriangle] {
        let idx = r - self.first_row;
        if idx < 0 {
            return &[];
        }
        self.rows.get(idx as usize).map_or(&[], Vec::as_slice)
    }
}

/// One way to fill a row: the mask it hands down to the next row and the
/// tiles it placed, as `(position, partner)` with the partner either in the
/// same row or, for vertical lozenges, a position in the next row.
struct RowFill {
    out_mask: u128,
    tiles: Vec<(usize, Partner)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Partner {
    Same(usize),
    Below(usize),
}

fn fills(row: &[UnitTriangle], next: &[UnitTriangle], in_mask: u128) -> Vec<RowFill> {
    let pos_next: HashMap<UnitTriangle, usize> =
        next.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut out = Vec::new();
    let mut tiles = Vec::new();
    rec(row, &pos_next, 0, in_mask, 0, &mut tiles, &mut out);
    out
}

fn rec(
    row: &[UnitTriangle],
    pos_next: &HashMap<UnitTriangle, usize>,
    p: usize,
    covered: u128,
    out_mask: u128,
    tiles: &mut Vec<(usize, Partner)>,
    out: &mut Vec<RowFill>,
) {
    if p == row.len() {
        out.push(RowFill {
            out_mask,
            tiles: tiles.clone(),
        });
        return;
    }
    if covered >> p & 1 == 1 {
        rec(row, pos_next, p + 1, covered, out_mask, tiles, out);
        return;
    }
    let t = row[p];
    for nb in t.neighbors() {
        if nb.row == t.row {
            if p + 1 < row.len() && row[p + 1] == nb && nb > t && covered >> (p + 1) & 1 == 0 {
                tiles.push((p, Partner::Same(p + 1)));
                rec(
                    row,
                    pos_next,
                    p + 2,
                    covered | 1 << (p + 1),
                    out_mask,
                    tiles,
                    out,
                );
                tiles.pop();
            }
        } else if nb.row == t.row + 1 {
            if let Some(&q) = pos_next.get(&nb) {
                tiles.push((p, Partner::Below(q)));
                rec(row, pos_next, p + 1, covered, out_mask | 1 << q, tiles, out);
                tiles.pop();
            }
        }
    }
}

fn check_width(rows: &Rows) -> Result<()> {
    let width = rows.rows.iter().map(Vec::len).max().unwrap_or(0);
    if width > MASK_BITS {
        return Err(Error::WidthExceeded {
            width,
            cap: MASK_BITS,
        });
    }
    Ok(())
}

fn accumulate(map: &mut HashMap<u128, BigUint>, key: u128, v: &BigUint) {
    *map.entry(key).or_insert_with(BigUint::zero) += v;
}

/// Tilings fixed by the mirror about the hole axis, counted over the full
/// region by keeping only mirror-invariant row fills.
pub fn count_hsym_transfer(region: &Region, _caps: &Caps) -> Result<BigUint> {
    if !region.has_horizontal_symmetry() {
        return Err(Error::NotSymmetric("horizontal"));
    }
    let frame: Frame = region.frame();
    let rows = Rows::new(region);
    check_width(&rows)?;
    let mut states: HashMap<u128, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());
    for (ri, row) in rows.rows.iter().enumerate() {
        let r = rows.first_row + ri as i32;
        let next = rows.row(r + 1);
        let pos: HashMap<UnitTriangle, usize> =
            row.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let pos_next: HashMap<UnitTriangle, usize> =
            next.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mirror: Vec<usize> = row.iter().map(|&t| pos[&frame.reflect_axis(t)]).collect();
        let mirror_next: Vec<usize> = next
            .iter()
            .map(|&t| pos_next[&frame.reflect_axis(t)])
            .collect();
        let mut new_states = HashMap::new();
        for (&mask, count) in &states {
            for fill in fills(row, next, mask) {
                let mut own: Vec<(usize, Partner)> =
                    fill.tiles.iter().copied().map(normalize).collect();
                let mut img: Vec<(usize, Partner)> = fill
                    .tiles
                    .iter()
                    .map(|&(p, q)| match q {
                        Partner::Same(s) => normalize((mirror[p], Partner::Same(mirror[s]))),
                        Partner::Below(b) => (mirror[p], Partner::Below(mirror_next[b])),
                    })
                    .collect();
                own.sort_unstable();
                img.sort_unstable();
                if own == img {
                    accumulate(&mut new_states, fill.out_mask, count);
                }
            }
        }
        states = new_states;
    }
    Ok(states.remove(&0).unwrap_or_default())
}

fn normalize((p, q): (usize, Partner)) -> (usize, Partner) {
    match q {
        Partner::Same(s) if s < p => (s, Partner::Same(p)),
        other => (p, other),
    }
}

/// Tilings fixed by the mirror about the middle line: fills of the rows
/// above the line, with any set of lozenges crossing it.
pub fn count_vsym_transfer(region: &Region, _caps: &Caps) -> Result<BigUint> {
    if !region.has_vertical_symmetry() {
        return Err(Error::NotSymmetric("vertical"));
    }
    let n = region.frame().side as i32;
    let rows = Rows::new(region);
    check_width(&rows)?;
    let mut states: HashMap<u128, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());
    for (ri, row) in rows.rows.iter().enumerate() {
        let r = rows.first_row + ri as i32;
        if r >= n {
            break;
        }
        let next = rows.row(r + 1);
        let mut new_states = HashMap::new();
        for (&mask, count) in &states {
            for fill in fills(row, next, mask) {
                accumulate(&mut new_states, fill.out_mask, count);
            }
        }
        states = new_states;
    }
    Ok(states.values().sum())
}
