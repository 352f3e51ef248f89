use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

use super::depth::decomposition_width;
use super::tree::{Decomposition, Tree};

/// A block of elements of `M` with a decomposition of the matroid on that
/// block (local indices in increasing order). Single-element blocks carry
/// no decomposition.
#[derive(Debug, Clone)]
pub struct Piece {
    pub block: Subset,
    pub decomposition: Option<Decomposition>,
}

#[derive(Debug, Clone)]
pub struct GraftResult {
    pub decomposition: Decomposition,
    pub width: usize,
    pub radius: usize,
}

/// A new root joined to a centre of every piece, plus one leaf per element
/// of `extra`.
pub fn graft_decompositions(m: &Matroid, pieces: &[Piece], extra: Subset) -> Result<GraftResult> {
    m.ground().check(extra)?;
    let mut covered = extra;
    for p in pieces {
        m.ground().check(p.block)?;
        if p.block.is_empty() {
            return Err(Error::pre("empty piece"));
        }
        if !covered.is_disjoint(p.block) {
            return Err(Error::pre(format!("piece {:?} overlaps another block", p.block)));
        }
        covered = covered | p.block;
        match (&p.decomposition, p.block.len()) {
            (None, 1) => {}
            (Some(d), n) if n >= 2 => d.check_len(n)?,
            _ => {
                return Err(Error::pre(format!(
                    "piece {:?} needs a decomposition exactly when it has two or more elements",
                    p.block
                )))
            }
        }
    }
    if covered != m.full() {
        return Err(Error::pre("pieces and extra do not cover the ground set"));
    }
    if pieces.len() + extra.len() < 2 {
        return Err(Error::pre("grafting needs at least two pieces or extra elements"));
    }
    let mut edges = Vec::new();
    let mut leaf_of = vec![usize::MAX; m.len()];
    let root = 0;
    let mut next = 1;
    for p in pieces {
        match &p.decomposition {
            None => {
                leaf_of[p.block.first().unwrap()] = next;
                edges.push((root, next));
                next += 1;
            }
            Some(d) => {
                let offset = next;
                let t = d.tree();
                for (u, v) in t.edges() {
                    edges.push((u + offset, v + offset));
                }
                for (local, e) in p.block.iter().enumerate() {
                    leaf_of[e] = d.leaf_of()[local] + offset;
                }
                let (c, _) = t.center();
                edges.push((root, c + offset));
                next += t.len();
            }
        }
    }
    for e in extra {
        leaf_of[e] = next;
        edges.push((root, next));
        next += 1;
    }
    let decomposition = Decomposition::new(Tree::from_edges(next, &edges)?, leaf_of)?;
    let width = decomposition_width(m, &decomposition)?;
    let radius = decomposition.radius();
    Ok(GraftResult {
        decomposition,
        width,
        radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::branch_depth;
    use crate::graph::MultiGraph;

    fn piece(m: &Matroid, block: Subset) -> Piece {
        let decomposition = if block.len() >= 2 {
            let r = m.restrict(block).unwrap();
            let c = branch_depth(&r).unwrap();
            Some(c.decomposition().unwrap().clone())
        } else {
            None
        };
        Piece { block, decomposition }
    }

    #[test]
    fn two_singletons() {
        let m = Matroid::free(["a", "b"]).unwrap();
        let ps = [piece(&m, Subset::singleton(0)), piece(&m, Subset::singleton(1))];
        let g = graft_decompositions(&m, &ps, Subset::EMPTY).unwrap();
        assert_eq!(g.radius, 1);
        assert_eq!(g.decomposition.tree().len(), 3);
    }

    #[test]
    fn triangle_with_extra() {
        let k3 = Matroid::triangle();
        let n = k3.delete(Subset::singleton(2)).unwrap();
        let ps: Vec<Piece> = n
            .components()
            .into_iter()
            .map(|c| piece(&k3, c.expand(Subset::full(2))))
            .collect();
        let g = graft_decompositions(&k3, &ps, Subset::singleton(2)).unwrap();
        assert!(g.radius <= 2);
        assert!(g.width <= 1 + 1);
    }

    #[test]
    fn direct_sum_of_triangles() {
        let g = MultiGraph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let m = Matroid::graphic_numbered(g);
        let ps: Vec<Piece> = m.components().into_iter().map(|c| piece(&m, c)).collect();
        let r = graft_decompositions(&m, &ps, Subset::EMPTY).unwrap();
        assert_eq!(r.width, 1);
        assert_eq!(r.radius, 2);
    }

    #[test]
    fn coverage_errors() {
        let m = Matroid::free(["a", "b"]).unwrap();
        let ps = [piece(&m, Subset::singleton(0))];
        assert!(graft_decompositions(&m, &ps, Subset::EMPTY).is_err());
        assert!(graft_decompositions(&m, &ps, Subset::full(2)).is_err());
    }
}
