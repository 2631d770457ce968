//! Size limits for brute-force enumeration.

use crate::error::Error;

/// Environment variable overriding [`DEFAULT_MAX_EDGES`].
pub const MAX_EDGES_VAR: &str = "COMBPFAFF_MAX_EDGES";
pub const DEFAULT_MAX_EDGES: usize = 20;

/// Largest edge count the grove and flow enumerations accept.
pub fn max_edges() -> usize {
    std::env::var(MAX_EDGES_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_EDGES)
}

pub fn check_edge_limit(edges: usize) -> Result<(), Error> {
    let max = max_edges();
    if edges > max {
        Err(Error::TooManyEdges { edges, max })
    } else {
        Ok(())
    }
}
