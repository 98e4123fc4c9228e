use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::region::{Lozenge, Region};

use super::board::Board;
use super::{Tile, Tiling};

/// Streams every tiling of a region exactly once. The search always covers
/// the least uncovered triangle next, trying its partners in lattice order
/// and a half-lozenge (when its free edge allows one) last, so the order of
/// the stream is fixed by the region alone.
pub struct TilingIter {
    board: Board,
    covered: Vec<bool>,
    stack: Vec<Choice>,
    max_tilings: u64,
    emitted: u64,
    started: bool,
    done: bool,
}

struct Choice {
    tri: usize,
    options: Vec<Option<usize>>,
    cur: Option<usize>,
}

/// Tilings of `region`, honouring its free edges; fails up front if the
/// region exceeds `caps.max_triangles`, and yields an error once more than
/// `caps.max_tilings` tilings have been produced.
pub fn enumerate_tilings(region: &Region, caps: &Caps) -> Result<TilingIter> {
    if region.len() > caps.max_triangles {
        return Err(Error::CapExceeded(format!(
            "region has {} triangles, enumeration limit is {}",
            region.len(),
            caps.max_triangles
        )));
    }
    let board = Board::new(region);
    let n = board.len();
    Ok(TilingIter {
        board,
        covered: vec![false; n],
        stack: Vec::new(),
        max_tilings: caps.max_tilings,
        emitted: 0,
        started: false,
        done: false,
    })
}

impl TilingIter {
    fn first_uncovered(&self) -> Option<usize> {
        let from = self.stack.last().map_or(0, |c| c.tri + 1);
        (from..self.covered.len()).find(|&i| !self.covered[i])
    }

    fn options(&self, tri: usize) -> Vec<Option<usize>> {
        let mut out: Vec<Option<usize>> = self.board.forward[tri]
            .iter()
            .copied()
            .filter(|&j| !self.covered[j])
            .map(Some)
            .collect();
        if self.board.free[tri] {
            out.push(None);
        }
        out
    }

    fn set(&mut self, tri: usize, opt: Option<usize>, value: bool) {
        self.covered[tri] = value;
        if let Some(j) = opt {
            self.covered[j] = value;
        }
    }

    /// Moves the deepest choice to its next option, popping exhausted ones.
    fn step(&mut self) -> bool {
        while let Some(top) = self.stack.last_mut() {
            let tri = top.tri;
            if let Some(k) = top.cur {
                let opt = top.options[k];
                self.set(tri, opt, false);
            }
            let top = self.stack.last_mut().expect("non-empty");
            let next = top.cur.map_or(0, |k| k + 1);
            if next < top.options.len() {
                top.cur = Some(next);
                let opt = top.options[next];
                self.set(tri, opt, true);
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn current(&self) -> Tiling {
        let tiles = self
            .stack
            .iter()
            .map(|c| {
                let a = self.board.tris[c.tri];
                match c.options[c.cur.expect("applied")] {
                    Some(j) => Tile::Lozenge(Lozenge::new(a, self.board.tris[j])),
                    None => Tile::Half(a),
                }
            })
            .collect();
        Tiling::new(tiles)
    }
}

impl Iterator for TilingIter {
    type Item = Result<Tiling>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.started && !self.step() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            match self.first_uncovered() {
                None => {
                    self.emitted += 1;
                    if self.emitted > self.max_tilings {
                        self.done = true;
                        return Some(Err(Error::CapExceeded(format!(
                            "more than {} tilings",
                            self.max_tilings
                        ))));
                    }
                    return Some(Ok(self.current()));
                }
                Some(tri) => {
                    let options = self.options(tri);
                    self.stack.push(Choice {
                        tri,
                        options,
                        cur: None,
                    });
                    if !self.step() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}
