use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::limits::{self, Limits};
use crate::matroid::{Matroid, RankTable};
use crate::subset::Subset;

use super::tree::{BranchDecomposition, Tree};
use super::{TraceRound, WidthCertificate, Witness};

/// Optimal subcubic tree for a symmetric edge-width function.
///
/// `best[X]` is the least possible maximum width over rooted binary trees on
/// leaf set `X`, counting the edge above the root. A branch-decomposition is
/// two such trees joined at their roots.
struct Dp {
    best: Vec<usize>,
    split: Vec<u32>,
    states: usize,
}

fn solve(n: usize, width: impl Fn(Subset) -> usize) -> Dp {
    let size = 1usize << n;
    let mut best = vec![0usize; size];
    let mut split = vec![0u32; size];
    let mut states = 0;
    for x in 1..size as u32 {
        let xs = Subset(x);
        let own = width(xs);
        if xs.len() == 1 {
            best[x as usize] = own;
            continue;
        }
        let low = xs.first().unwrap();
        let rest = xs.without(low);
        let mut choice = (usize::MAX, 0u32);
        for sub in rest.submasks() {
            let a = sub.with(low);
            if a == xs {
                continue;
            }
            states += 1;
            let v = best[a.0 as usize].max(best[(xs - a).0 as usize]);
            if v < choice.0 {
                choice = (v, a.0);
            }
        }
        best[x as usize] = own.max(choice.0);
        split[x as usize] = choice.1;
    }
    Dp { best, split, states }
}

fn root_split(dp: &Dp, n: usize) -> (usize, Subset) {
    let full = Subset::full(n);
    let rest = full.without(0);
    let mut choice = (usize::MAX, Subset::EMPTY);
    for sub in rest.submasks() {
        let a = sub.with(0);
        if a == full {
            continue;
        }
        let v = dp.best[a.0 as usize].max(dp.best[(full - a).0 as usize]);
        if v < choice.0 {
            choice = (v, a);
        }
    }
    choice
}

fn build(dp: &Dp, x: Subset, edges: &mut Vec<(usize, usize)>, leaf_of: &mut [usize], next: &mut usize) -> usize {
    let me = *next;
    *next += 1;
    if x.len() == 1 {
        leaf_of[x.first().unwrap()] = me;
        return me;
    }
    let a = Subset(dp.split[x.0 as usize]);
    for part in [a, x - a] {
        let c = build(dp, part, edges, leaf_of, next);
        edges.push((me, c));
    }
    me
}

fn certificate(n: usize, width: impl Fn(Subset) -> usize, floor: usize) -> Result<WidthCertificate> {
    let dp = solve(n, width);
    let (value, a) = root_split(&dp, n);
    let mut edges = Vec::new();
    let mut leaf_of = vec![0; n];
    let mut next = 0;
    let ra = build(&dp, a, &mut edges, &mut leaf_of, &mut next);
    let rb = build(&dp, Subset::full(n) - a, &mut edges, &mut leaf_of, &mut next);
    edges.push((ra, rb));
    let dec = BranchDecomposition::new(Tree::from_edges(next, &edges)?, leaf_of)?;
    let lower_bound_trace = (floor..value)
        .map(|k| TraceRound {
            bound: k,
            feasible: false,
            states: dp.states,
        })
        .collect();
    Ok(WidthCertificate {
        value,
        witness: Some(Witness::Branch(dec)),
        lower_bound_trace,
    })
}

/// Exact matroid branch-width; `1` when there are at most one element.
pub fn branch_width(m: &Matroid) -> Result<WidthCertificate> {
    let n = m.len();
    limits::check("branch-width ground set", n, Limits::get().branch_width)?;
    if n <= 1 {
        return Ok(WidthCertificate {
            value: 1,
            witness: None,
            lower_bound_trace: vec![],
        });
    }
    let t = RankTable::new(m)?;
    certificate(n, |x| t.lambda(x) + 1, 1)
}

/// Exact graph branch-width; `0` with at most one edge.
pub fn graph_branch_width(g: &MultiGraph) -> Result<WidthCertificate> {
    let n = g.edge_count();
    limits::check("graph branch-width edge set", n, Limits::get().branch_width)?;
    if n <= 1 {
        return Ok(WidthCertificate {
            value: 0,
            witness: None,
            lower_bound_trace: vec![],
        });
    }
    let full = g.all_edges();
    certificate(
        n,
        |x| (g.vertices_of(x) & g.vertices_of(full - x)).count_ones() as usize,
        0,
    )
}

/// `bw(N) <= bw(M)` for a minor view `N` of `M`.
pub fn branch_width_minor_monotone_check(m: &Matroid, n: &Matroid) -> Result<bool> {
    let flat = n.flatten();
    if flat.as_minor().is_none() && !flat.same_rank_function(m) {
        return Err(Error::pre("N is neither a minor view nor M itself"));
    }
    if let Some(v) = flat.as_minor() {
        if !v.parent().same_rank_function(m) {
            return Err(Error::pre("N is not a minor of M"));
        }
    }
    Ok(branch_width(n)?.value <= branch_width(m)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matroid_examples() {
        let k3 = Matroid::triangle();
        let c = branch_width(&k3).unwrap();
        assert_eq!(c.value, 2);
        let t = RankTable::new(&k3).unwrap();
        assert_eq!(c.branch_decomposition().unwrap().width_by(|x| t.lambda(x) + 1), 2);
        assert_eq!(branch_width(&Matroid::uniform(2, 4).unwrap()).unwrap().value, 3);
        assert_eq!(branch_width(&Matroid::free(["a"]).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn graph_examples() {
        assert_eq!(graph_branch_width(&MultiGraph::complete(3)).unwrap().value, 2);
        assert_eq!(graph_branch_width(&MultiGraph::path(2)).unwrap().value, 0);
        // a 2-edge path is a star; the 3-edge path is not
        assert_eq!(graph_branch_width(&MultiGraph::path(3)).unwrap().value, 1);
        assert_eq!(graph_branch_width(&MultiGraph::path(4)).unwrap().value, 2);
        assert_eq!(graph_branch_width(&MultiGraph::complete(4)).unwrap().value, 3);
    }

    #[test]
    fn monotone_examples() {
        let u = Matroid::uniform(2, 4).unwrap();
        let n = u.delete(Subset::singleton(3)).unwrap();
        assert!(branch_width_minor_monotone_check(&u, &n).unwrap());
        assert!(branch_width_minor_monotone_check(&u, &u).unwrap());
        let k3 = Matroid::triangle();
        let c = k3.contract(Subset::singleton(0)).unwrap();
        assert!(branch_width_minor_monotone_check(&k3, &c).unwrap());
        assert_eq!(branch_width(&c).unwrap().value, 2);
    }
}
