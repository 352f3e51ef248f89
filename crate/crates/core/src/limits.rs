//! Enumeration capacities.
//!
//! Every exhaustive search checks its instance size against the process-wide
//! [`Limits`]. The defaults are conservative; front ends may raise them once at
//! start-up with [`Limits::install`].

use std::sync::RwLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for full subset scans (rank tables, λ tables).
    pub subset_scan: usize,
    /// Largest ground set for base and circuit enumeration.
    pub enumeration: usize,
    /// Largest ground set for exact branch-depth.
    pub branch_depth: usize,
    /// Largest ground set for exact (matroid or graph) branch-width.
    pub branch_width: usize,
    /// Largest ground set for isomorphism search.
    pub isomorphism: usize,
    /// Largest internal-node degree accepted by `node_width`.
    pub node_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subset_scan: 16,
            enumeration: 12,
            branch_depth: 10,
            branch_width: 10,
            isomorphism: 10,
            node_degree: 20,
        }
    }
}

static CURRENT: RwLock<Option<Limits>> = RwLock::new(None);

impl Limits {
    /// The limits currently in force.
    pub fn get() -> Limits {
        CURRENT
            .read()
            .map(|g| g.unwrap_or_default())
            .unwrap_or_default()
    }

    /// Replace the process-wide limits.
    pub fn install(limits: Limits) {
        if let Ok(mut g) = CURRENT.write() {
            *g = Some(limits);
        }
    }

    /// Every search capacity raised or lowered to `n`; the subset scan limit
    /// never drops below the search limits.
    pub fn uniform(n: usize) -> Limits {
        let d = Limits::default();
        Limits {
            subset_scan: d.subset_scan.max(n).min(30),
            enumeration: n,
            branch_depth: n,
            branch_width: n,
            isomorphism: n,
            node_degree: d.node_degree.max(n),
        }
    }
}

pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::Capacity { what, size, limit })
    } else {
        Ok(())
    }
}
