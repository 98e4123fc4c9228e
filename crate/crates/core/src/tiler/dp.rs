use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::region::Region;

use super::board::Board;

/// Hard limit of the profile bitmask.
const MASK_BITS: usize = 127;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpOptions {
    /// Allow half-lozenges on the region's free edges.
    pub half_lozenges: bool,
    /// Weight each tiling by 2 per half-weight position it leaves unoccupied.
    pub weighted: bool,
}

/// Broken-profile transfer count. Triangles are swept in lattice order; the
/// state is the set of upcoming triangles already covered, stored as a
/// bitmask relative to the current triangle.
pub fn count_profile_dp(region: &Region, opts: DpOptions, caps: &Caps) -> Result<BigUint> {
    let board = Board::new(region);
    let width = board.width();
    let cap = caps.dp_width.min(MASK_BITS);
    if width > cap {
        return Err(Error::WidthExceeded { width, cap });
    }
    let mut states: HashMap<u128, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());
    for i in 0..board.len() {
        let special = if opts.weighted {
            board.special[i]
        } else {
            None
        };
        let mut next: HashMap<u128, BigUint> = HashMap::with_capacity(states.len() * 2);
        let mut push = |key: u128, count: &BigUint, double: bool| {
            let slot = next.entry(key).or_insert_with(BigUint::zero);
            if double {
                *slot += count << 1u32;
            } else {
                *slot += count;
            }
        };
        for (&s, count) in &states {
            if s & 1 == 1 {
                push(s >> 1, count, special.is_some());
                continue;
            }
            for &j in &board.forward[i] {
                let bit = 1u128 << (j - i);
                if s & bit == 0 {
                    push((s | bit) >> 1, count, special.is_some_and(|p| p != j));
                }
            }
            if opts.half_lozenges && board.free[i] {
                push(s >> 1, count, special.is_some());
            }
        }
        states = next;
        if states.is_empty() {
            break;
        }
    }
    Ok(states.remove(&0).unwrap_or_default())
}
