use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::matroid::{Matroid, RankTable};
use crate::subset::Subset;

use super::tree::{Decomposition, Tree};
use super::{TraceRound, WidthCertificate, Witness};

/// Largest `λ` over unions of sub-collections of `P_v`.
pub fn node_width(m: &Matroid, dec: &Decomposition, v: usize) -> Result<usize> {
    dec.check_len(m.len())?;
    if !dec.is_internal(v) {
        return Err(Error::pre(format!("node {v} is not an internal node")));
    }
    let parts = dec.partition_at(v);
    limits::check("internal node degree", parts.len(), Limits::get().node_degree)?;
    // Gray-code walk over the 2^deg unions.
    let mut union = Subset::EMPTY;
    let mut best = 0;
    for i in 1u64..(1u64 << parts.len()) {
        let flip = i.trailing_zeros() as usize;
        union = union ^ parts[flip];
        best = best.max(m.lam(union));
    }
    Ok(best)
}

pub fn decomposition_width(m: &Matroid, dec: &Decomposition) -> Result<usize> {
    dec.check_len(m.len())?;
    let mut w = 0;
    for v in dec.internal_nodes() {
        w = w.max(node_width(m, dec, v)?);
    }
    Ok(w)
}

pub fn decomposition_radius(dec: &Decomposition) -> usize {
    dec.radius()
}

pub fn is_kr_decomposition(m: &Matroid, dec: &Decomposition, k: usize, r: usize) -> Result<bool> {
    Ok(decomposition_radius(dec) <= r && decomposition_width(m, dec)? <= k)
}

/// Decides whether a block can hang below a node of bounded height with
/// every internal node of width at most `k`.
///
/// Rooting a `(k, r)`-decomposition at a centre, the width of a node equals
/// the largest `λ` of a union of its child blocks, and nodes with a single
/// child can be suppressed. So a block `S` fits under height `h` iff `|S| = 1`
/// or `h >= 1` and `S` splits into at least two blocks that each fit under
/// `h - 1` and whose unions all have `λ <= k`.
struct DepthSearch<'a> {
    lam: &'a [u8],
    k: u8,
    memo: HashMap<(u32, usize), Option<Vec<Subset>>>,
    states: usize,
}

impl DepthSearch<'_> {
    fn fits(&mut self, s: Subset, h: usize) -> bool {
        if s.len() == 1 {
            return true;
        }
        if h == 0 || s.is_empty() {
            return false;
        }
        if let Some(r) = self.memo.get(&(s.0, h)) {
            return r.is_some();
        }
        self.states += 1;
        let mut blocks = Vec::new();
        let mut unions = vec![Subset::EMPTY];
        let found = self.split(s, s, h, &mut blocks, &mut unions);
        self.memo.insert((s.0, h), found.then_some(blocks));
        found
    }

    fn split(
        &mut self,
        whole: Subset,
        rest: Subset,
        h: usize,
        blocks: &mut Vec<Subset>,
        unions: &mut Vec<Subset>,
    ) -> bool {
        let Some(low) = rest.first() else {
            return blocks.len() >= 2;
        };
        let others = rest.without(low);
        for sub in others.submasks() {
            let b = sub.with(low);
            if b == whole {
                continue;
            }
            if unions.iter().any(|&u| self.lam[(u | b).0 as usize] > self.k) {
                continue;
            }
            if !self.fits(b, h - 1) {
                continue;
            }
            let before = unions.len();
            for i in 0..before {
                let u = unions[i] | b;
                unions.push(u);
            }
            blocks.push(b);
            if self.split(whole, rest - b, h, blocks, unions) {
                return true;
            }
            blocks.pop();
            unions.truncate(before);
        }
        false
    }

    fn build(&self, s: Subset, h: usize, edges: &mut Vec<(usize, usize)>, leaf_of: &mut [usize], next: &mut usize) -> usize {
        let me = *next;
        *next += 1;
        if s.len() == 1 {
            leaf_of[s.first().unwrap()] = me;
            return me;
        }
        let blocks = self.memo[&(s.0, h)].as_ref().expect("feasible block").clone();
        for b in blocks {
            let child = self.build(b, h - 1, edges, leaf_of, next);
            edges.push((me, child));
        }
        me
    }
}

fn lambda_table(m: &Matroid) -> Result<Vec<u8>> {
    Ok(RankTable::new(m)?.lambdas())
}

fn search_kr(lam: &[u8], n: usize, k: usize, r: usize) -> (bool, DepthSearch<'_>) {
    let mut s = DepthSearch {
        lam,
        k: k.min(u8::MAX as usize) as u8,
        memo: HashMap::new(),
        states: 0,
    };
    let ok = n >= 2 && s.fits(Subset::full(n), r);
    (ok, s)
}

/// Whether `M` has a `(k, r)`-decomposition. Matroids with at most one
/// element have none.
pub fn has_kr_decomposition(m: &Matroid, k: usize, r: usize) -> Result<bool> {
    limits::check("branch-depth ground set", m.len(), Limits::get().branch_depth)?;
    if m.len() < 2 {
        return Ok(false);
    }
    let lam = lambda_table(m)?;
    Ok(search_kr(&lam, m.len(), k, r).0)
}

/// `bd(M) >= t`, decided by refuting a `(t-1, t-1)`-decomposition.
pub fn branch_depth_at_least(m: &Matroid, t: usize) -> Result<bool> {
    if t == 0 {
        return Ok(true);
    }
    if m.len() < 2 {
        return Ok(false);
    }
    Ok(!has_kr_decomposition(m, t - 1, t - 1)?)
}

/// Exact branch-depth with a `(k, k)`-decomposition witness.
pub fn branch_depth(m: &Matroid) -> Result<WidthCertificate> {
    let n = m.len();
    limits::check("branch-depth ground set", n, Limits::get().branch_depth)?;
    if n <= 1 {
        return Ok(WidthCertificate {
            value: 0,
            witness: None,
            lower_bound_trace: vec![],
        });
    }
    let lam = lambda_table(m)?;
    let mut trace = Vec::new();
    // the star is a (max λ, 1)-decomposition
    let upper = lam.iter().copied().max().unwrap_or(0).max(1) as usize;
    for k in 1..=upper {
        let (ok, search) = search_kr(&lam, n, k, k);
        trace.push(TraceRound {
            bound: k,
            feasible: ok,
            states: search.states,
        });
        if ok {
            let mut edges = Vec::new();
            let mut leaf_of = vec![0; n];
            let mut next = 0;
            search.build(Subset::full(n), k, &mut edges, &mut leaf_of, &mut next);
            let dec = Decomposition::new(Tree::from_edges(next, &edges)?, leaf_of)?;
            return Ok(WidthCertificate {
                value: k,
                witness: Some(Witness::Depth(dec)),
                lower_bound_trace: trace,
            });
        }
    }
    Err(Error::internal("star decomposition bound was not attained"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_widths() {
        let k3 = Matroid::triangle();
        let star = Decomposition::star(3).unwrap();
        assert_eq!(node_width(&k3, &star, 0).unwrap(), 1);
        assert!(is_kr_decomposition(&k3, &star, 1, 1).unwrap());
        assert!(node_width(&k3, &star, 1).is_err());
        let u = Matroid::uniform(2, 4).unwrap();
        let star4 = Decomposition::star(4).unwrap();
        assert_eq!(node_width(&u, &star4, 0).unwrap(), 2);
        assert!(!is_kr_decomposition(&u, &star4, 1, 1).unwrap());
        assert!(decomposition_width(&k3, &star4).is_err());
    }

    #[test]
    fn small_depths() {
        assert_eq!(branch_depth(&Matroid::free(["a"]).unwrap()).unwrap().value, 0);
        let k3 = branch_depth(&Matroid::triangle()).unwrap();
        assert_eq!(k3.value, 1);
        let u = Matroid::uniform(2, 4).unwrap();
        let c = branch_depth(&u).unwrap();
        assert_eq!(c.value, 2);
        assert!(is_kr_decomposition(&u, c.decomposition().unwrap(), 2, 2).unwrap());
        assert!(!c.lower_bound_trace[0].feasible);
        assert!(branch_depth_at_least(&u, 2).unwrap());
        assert!(!branch_depth_at_least(&u, 3).unwrap());
    }

    #[test]
    fn witnesses_validate() {
        for n in 2..=5 {
            let f = Matroid::fan(n).unwrap();
            let c = branch_depth(&f).unwrap();
            let d = c.decomposition().unwrap();
            assert!(is_kr_decomposition(&f, d, c.value, c.value).unwrap());
            assert!(!has_kr_decomposition(&f, c.value - 1, c.value - 1).unwrap());
        }
    }
}
