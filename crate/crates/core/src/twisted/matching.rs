use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Subset;

use super::TwistedMatroid;

/// Number of perfect matchings of the subgraph induced on `x`, capped at
/// `limit`.
pub fn perfect_matchings_upto(adj: &[Subset], x: Subset, limit: usize) -> usize {
    fn go(adj: &[Subset], x: Subset, limit: usize) -> usize {
        let Some(v) = x.first() else {
            return 1;
        };
        let mut total = 0;
        for u in adj[v] & x.without(v) {
            total += go(adj, x.without(v).without(u), limit - total);
            if total >= limit {
                return limit;
            }
        }
        total
    }
    if limit == 0 || x.len() % 2 == 1 {
        return 0;
    }
    go(adj, x, limit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchingReport {
    pub has_perfect_matching: bool,
    pub unique_perfect_matching: bool,
    pub feasible: bool,
}

impl MatchingReport {
    /// Feasible sets are matchable; uniquely matchable sets are feasible.
    pub fn implications_hold(&self) -> bool {
        (!self.feasible || self.has_perfect_matching) && (!self.unique_perfect_matching || self.feasible)
    }
}

pub fn matching_feasibility(w: &TwistedMatroid, x: Subset) -> Result<MatchingReport> {
    if !x.is_subset_of(w.ground()) {
        return Err(Error::domain("set leaves the ground set"));
    }
    let g = w.graph();
    let adj: Vec<Subset> = (0..w.universe().len()).map(|v| g.neighbours(v)).collect();
    let count = perfect_matchings_upto(&adj, x, 2);
    Ok(MatchingReport {
        has_perfect_matching: count >= 1,
        unique_perfect_matching: count == 1,
        feasible: w.is_feasible(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::twisted::twist_of;

    #[test]
    fn examples() {
        let w = twist_of(&Matroid::triangle(), Subset::full(2)).unwrap();
        let r = matching_feasibility(&w, Subset::from_indices([0, 2])).unwrap();
        assert!(r.has_perfect_matching && r.unique_perfect_matching && r.feasible);
        let r = matching_feasibility(&w, Subset::EMPTY).unwrap();
        assert!(r.has_perfect_matching && r.unique_perfect_matching && r.feasible);
        let u = twist_of(&Matroid::uniform(2, 4).unwrap(), Subset::full(2)).unwrap();
        let r = matching_feasibility(&u, Subset::full(4)).unwrap();
        assert!(r.has_perfect_matching && !r.unique_perfect_matching);
        assert!(r.feasible);
        assert!(r.implications_hold());
    }
}
