use serde::{Deserialize, Serialize};

/// Work limits shared by the counting and enumeration routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of tilings an enumeration may emit.
    pub max_tilings: u64,
    /// Maximum region size accepted for enumeration.
    pub max_triangles: usize,
    /// Maximum look-ahead of the profile DP, in triangles.
    pub dp_width: usize,
    /// Maximum number of path families a brute-force enumeration may visit.
    pub max_families: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_tilings: 1_000_000,
            max_triangles: 200,
            dp_width: 64,
            max_families: 100_000,
        }
    }
}

impl Caps {
    /// Defaults overridden by `LOZENGE_MAX_TILINGS`, `LOZENGE_MAX_TRIANGLES`,
    /// `LOZENGE_DP_WIDTH` and `LOZENGE_MAX_FAMILIES` when set.
    pub fn from_env() -> Self {
        fn var<T: std::str::FromStr>(name: &str, default: T) -> T {
            std::env::var(name)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        }
        let d = Caps::default();
        Caps {
            max_tilings: var("LOZENGE_MAX_TILINGS", d.max_tilings),
            max_triangles: var("LOZENGE_MAX_TRIANGLES", d.max_triangles),
            dp_width: var("LOZENGE_DP_WIDTH", d.dp_width),
            max_families: var("LOZENGE_MAX_FAMILIES", d.max_families),
        }
    }
}
