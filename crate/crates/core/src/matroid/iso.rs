use crate::error::Result;
use crate::limits::{self, Limits};
use crate::subset::Subset;

use super::{Matroid, RankTable};

/// `map[i]` is the image in the second matroid of element `i` of the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

impl Isomorphism {
    pub fn apply(&self, x: Subset) -> Subset {
        x.iter().map(|i| self.map[i]).collect()
    }
}

/// Per-element histogram of `(|X|, r(X))` over subsets `X` containing it.
fn signatures(t: &RankTable) -> Vec<Vec<u32>> {
    let n = t.len();
    let width = n + 1;
    let mut sig = vec![vec![0u32; width * width]; n];
    for x in Subset::full(n).submasks() {
        let slot = x.len() * width + t.rank(x);
        for e in x {
            sig[e][slot] += 1;
        }
    }
    sig
}

/// Search for a rank-preserving bijection. Elements are matched by rank
/// signature, then extended one at a time while every subset of the
/// assigned prefix keeps its rank.
pub fn is_isomorphic(m1: &Matroid, m2: &Matroid) -> Result<Option<Isomorphism>> {
    let cap = Limits::get().isomorphism;
    limits::check("isomorphism ground set", m1.len(), cap)?;
    limits::check("isomorphism ground set", m2.len(), cap)?;
    if m1.len() != m2.len() || m1.rank_of_matroid() != m2.rank_of_matroid() {
        return Ok(None);
    }
    let n = m1.len();
    let t1 = RankTable::new(m1)?;
    let t2 = RankTable::new(m2)?;
    let s1 = signatures(&t1);
    let s2 = signatures(&t2);
    let mut sorted1 = s1.clone();
    let mut sorted2 = s2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return Ok(None);
    }
    // Assign the rarest signature classes first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (s1.iter().filter(|s| **s == s1[e]).count(), e));
    let candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&e| (0..n).filter(|&f| s2[f] == s1[e]).collect())
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = Subset::EMPTY;
    if extend(&t1, &t2, &order, &candidates, 0, &mut map, &mut used) {
        Ok(Some(Isomorphism { map }))
    } else {
        Ok(None)
    }
}

fn extend(
    t1: &RankTable,
    t2: &RankTable,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut Subset,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let e = order[depth];
    let prefix: Subset = order[..depth].iter().copied().collect();
    for &f in &candidates[depth] {
        if used.contains(f) {
            continue;
        }
        map[e] = f;
        let consistent = prefix.submasks().all(|x| {
            let x = x.with(e);
            let image: Subset = x.iter().map(|i| map[i]).collect();
            t1.rank(x) == t2.rank(image)
        });
        if consistent {
            *used = used.with(f);
            if extend(t1, t2, order, candidates, depth + 1, map, used) {
                return true;
            }
            *used = used.without(f);
        }
    }
    map[e] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_u23() {
        let k3 = Matroid::triangle();
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert!(is_isomorphic(&k3, &u23).unwrap().is_some());
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert!(is_isomorphic(&k3, &u13).unwrap().is_none());
        let f2 = Matroid::fan(2).unwrap();
        assert!(is_isomorphic(&f2, &k3).unwrap().is_some());
    }

    #[test]
    fn map_preserves_bases() {
        let f = Matroid::fan(3).unwrap();
        let perm = [3usize, 0, 4, 1, 2];
        let d = Matroid::from_bases_unchecked(
            f.ground().clone(),
            f.bases().unwrap().into_iter().map(|b| b.iter().map(|i| perm[i]).collect()),
        );
        let iso = is_isomorphic(&f, &d).unwrap().expect("relabelled copy");
        let b2: std::collections::BTreeSet<_> = d.bases().unwrap().into_iter().collect();
        for b in f.bases().unwrap() {
            assert!(b2.contains(&iso.apply(b)));
        }
    }

    #[test]
    fn capacity_error() {
        let u = Matroid::uniform(3, 11).unwrap();
        assert!(is_isomorphic(&u, &u).is_err());
    }
}
