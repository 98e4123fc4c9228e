use std::collections::HashMap;

use crate::region::{Region, UnitTriangle};

/// A region flattened to indices in lattice order, with the adjacency the
/// counting routines need.
pub(crate) struct Board {
    pub tris: Vec<UnitTriangle>,
    /// Neighbours with a larger index.
    pub forward: Vec<Vec<usize>>,
    /// Triangles that may take a half-lozenge.
    pub free: Vec<bool>,
    /// For the first triangle of a half-weight position, the index of the second.
    pub special: Vec<Option<usize>>,
}

impl Board {
    pub fn new(region: &Region) -> Self {
        let tris: Vec<UnitTriangle> = region.triangles().iter().copied().collect();
        let index: HashMap<UnitTriangle, usize> =
            tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let forward = tris
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut f: Vec<usize> = t
                    .neighbors()
                    .iter()
                    .filter_map(|n| index.get(n).copied())
                    .filter(|&j| j > i)
                    .collect();
                f.sort_unstable();
                f
            })
            .collect();
        let free = tris.iter().map(|t| region.has_free_edge(t)).collect();
        let mut special = vec![None; tris.len()];
        for pos in region.half_weight_positions() {
            if let (Some(&a), Some(&b)) = (index.get(&pos.first), index.get(&pos.second)) {
                special[a.min(b)] = Some(a.max(b));
            }
        }
        Board {
            tris,
            forward,
            free,
            special,
        }
    }

    pub fn len(&self) -> usize {
        self.tris.len()
    }

    /// Largest index gap spanned by a single lozenge.
    pub fn width(&self) -> usize {
        self.forward
            .iter()
            .enumerate()
            .flat_map(|(i, f)| f.iter().map(move |&j| j - i))
            .max()
            .unwrap_or(0)
    }
}
