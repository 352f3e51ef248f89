use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{FundamentalGraphView, Matroid};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeState {
    Present,
    Absent,
    Undetermined,
}

/// What the graph alone says about `G(M, B △ {u, v})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGraph {
    /// The new base `B △ {u, v}`.
    pub base: Subset,
    states: Vec<Vec<EdgeState>>,
}

impl PartialGraph {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn state(&self, x: usize, y: usize) -> EdgeState {
        self.states[x][y]
    }

    /// Unordered pairs `x < y` left open.
    pub fn undetermined(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if self.states[x][y] == EdgeState::Undetermined {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn set(&mut self, x: usize, y: usize, s: EdgeState) {
        self.states[x][y] = s;
        self.states[y][x] = s;
    }
}

fn presence(b: bool) -> EdgeState {
    if b {
        EdgeState::Present
    } else {
        EdgeState::Absent
    }
}

/// Apply the pivot rules:
/// (i) `N'(u) = N(v) △ {u, v}` and `N'(v) = N(u) △ {u, v}`;
/// (ii) vertices outside `N(u) ∪ N(v)` keep their neighbourhoods;
/// (iii) `x ∈ N(u)`, `y ∈ N(v) \ N(x)` gives an edge `xy`;
/// (iv) pairs closing a 4-cycle with `u, v` stay undetermined.
/// Remaining pairs lie in one colour class of the new base and are absent.
pub fn pivot_predict(g: &FundamentalGraphView, u: usize, v: usize) -> Result<PartialGraph> {
    let n = g.len();
    if u >= n || v >= n || !g.has_edge(u, v) {
        return Err(Error::pre(format!("({u},{v}) is not an edge of the fundamental graph")));
    }
    let base = g.base() ^ Subset::singleton(u).with(v);
    let same_class = |x: usize, y: usize| base.contains(x) == base.contains(y);
    let mut p = PartialGraph {
        base,
        states: vec![vec![EdgeState::Undetermined; n]; n],
    };
    for x in 0..n {
        p.states[x][x] = EdgeState::Absent;
    }
    let uv = Subset::singleton(u).with(v);
    let nu = g.neighbours(u);
    let nv = g.neighbours(v);
    let new_u = nv ^ uv;
    let new_v = nu ^ uv;
    for x in 0..n {
        if x != u {
            p.set(u, x, presence(new_u.contains(x)));
        }
        if x != v {
            p.set(v, x, presence(new_v.contains(x)));
        }
    }
    let touched = nu | nv;
    for x in (0..n).filter(|&x| x != u && x != v && !touched.contains(x)) {
        for y in 0..n {
            if y != x && y != u && y != v {
                p.set(x, y, presence(g.has_edge(x, y)));
            }
        }
    }
    for x in nu.without(v) {
        for y in nv.without(u) {
            if !g.has_edge(x, y) {
                p.set(x, y, EdgeState::Present);
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if p.states[x][y] == EdgeState::Undetermined {
                let four_cycle = x != u
                    && x != v
                    && y != u
                    && y != v
                    && g.has_edge(x, y)
                    && ((nu.contains(x) && nv.contains(y)) || (nu.contains(y) && nv.contains(x)));
                if !four_cycle && same_class(x, y) {
                    p.set(x, y, EdgeState::Absent);
                }
            }
        }
    }
    Ok(p)
}

/// `G(M, B △ {u, v})` from the rank oracle.
pub fn pivot_exact(m: &Matroid, b: Subset, u: usize, v: usize) -> Result<FundamentalGraphView> {
    let g = m.fundamental_graph(b)?;
    if u >= m.len() || v >= m.len() || !g.has_edge(u, v) {
        return Err(Error::pre(format!("({u},{v}) is not an edge of the fundamental graph")));
    }
    m.fundamental_graph(b ^ Subset::singleton(u).with(v))
}

/// Every determined entry of the prediction matches the exact graph.
pub fn pivot_agrees(p: &PartialGraph, exact: &FundamentalGraphView) -> bool {
    p.base == exact.base()
        && (0..p.len()).all(|x| {
            (0..p.len()).all(|y| match p.state(x, y) {
                EdgeState::Present => exact.has_edge(x, y),
                EdgeState::Absent => !exact.has_edge(x, y),
                EdgeState::Undetermined => true,
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    #[test]
    fn triangle_pivot() {
        let k3 = Matroid::triangle();
        let b = s(&[0, 1]);
        let g = k3.fundamental_graph(b).unwrap();
        let p = pivot_predict(&g, 0, 2).unwrap();
        assert_eq!(p.state(0, 1), EdgeState::Present);
        assert_eq!(p.state(0, 2), EdgeState::Present);
        let e = pivot_exact(&k3, b, 2, 0).unwrap();
        assert!(pivot_agrees(&p, &e));
        assert!(p.undetermined().is_empty());
        let back = pivot_exact(&k3, e.base(), 0, 2).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn four_cycle_is_open() {
        let u = Matroid::uniform(2, 4).unwrap();
        let b = s(&[0, 1]);
        let g = u.fundamental_graph(b).unwrap();
        let p = pivot_predict(&g, 0, 2).unwrap();
        assert_eq!(p.undetermined(), vec![(1, 3)]);
        let e = pivot_exact(&u, b, 0, 2).unwrap();
        assert!(pivot_agrees(&p, &e));
        assert_eq!(e.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(pivot_predict(&g, 0, 1).is_err());
    }
}
