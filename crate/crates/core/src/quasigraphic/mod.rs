//! Quasi-graphic matroids given by a graph and a proper tripartition
//! `(B, L, F)` of its cycles.

mod cycles;

use std::collections::BTreeMap;

pub use cycles::{all_cycles, is_cycle, Cycle};

use crate::decomposition::{branch_width, graph_branch_width};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::limits::{self, Limits};
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleClass {
    Balanced,
    Lift,
    Frame,
}

/// A tripartition of the cycles of a graph; edges are labelled by `ground`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tripartition {
    pub graph: MultiGraph,
    pub ground: GroundSet,
    pub balanced: Vec<Subset>,
    pub lift: Vec<Subset>,
    pub frame: Vec<Subset>,
}

/// Outcome of [`validate_tripartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartitionReport {
    pub proper: bool,
    pub diagnostic: Option<String>,
}

impl Tripartition {
    /// Every cycle balanced: the cycle matroid of `graph`.
    pub fn graphic(graph: MultiGraph, ground: GroundSet) -> Result<Tripartition> {
        let balanced = all_cycles(&graph)?.into_iter().map(|c| c.edges).collect();
        Ok(Tripartition {
            graph,
            ground,
            balanced,
            lift: vec![],
            frame: vec![],
        })
    }

    /// Every cycle in `F`.
    pub fn bicircular(graph: MultiGraph, ground: GroundSet) -> Result<Tripartition> {
        let frame = all_cycles(&graph)?.into_iter().map(|c| c.edges).collect();
        Ok(Tripartition {
            graph,
            ground,
            balanced: vec![],
            lift: vec![],
            frame,
        })
    }

    /// Classify cycles with a labelling function.
    pub fn classify(
        graph: MultiGraph,
        ground: GroundSet,
        mut class: impl FnMut(&Cycle) -> CycleClass,
    ) -> Result<Tripartition> {
        let mut t = Tripartition {
            graph,
            ground,
            balanced: vec![],
            lift: vec![],
            frame: vec![],
        };
        for c in all_cycles(&t.graph)? {
            match class(&c) {
                CycleClass::Balanced => t.balanced.push(c.edges),
                CycleClass::Lift => t.lift.push(c.edges),
                CycleClass::Frame => t.frame.push(c.edges),
            }
        }
        Ok(t)
    }
}

/// Check that the three classes partition the cycles, that `B` has the theta
/// property and that every `L`-cycle meets every `F`-cycle.
pub fn validate_tripartition(t: &Tripartition) -> Result<TripartitionReport> {
    let bad = |msg: String| {
        Ok(TripartitionReport {
            proper: false,
            diagnostic: Some(msg),
        })
    };
    if t.graph.edge_count() != t.ground.len() {
        return bad(format!(
            "graph has {} edges but {} labels",
            t.graph.edge_count(),
            t.ground.len()
        ));
    }
    let cycles = all_cycles(&t.graph)?;
    let mut class: BTreeMap<Subset, CycleClass> = BTreeMap::new();
    for (list, k) in [
        (&t.balanced, CycleClass::Balanced),
        (&t.lift, CycleClass::Lift),
        (&t.frame, CycleClass::Frame),
    ] {
        for &c in list {
            if !is_cycle(&t.graph, c) {
                return bad(format!("{:?} is not a cycle", t.ground.names(c)));
            }
            if class.insert(c, k).is_some() {
                return bad(format!("cycle {:?} listed twice", t.ground.names(c)));
            }
        }
    }
    if let Some(c) = cycles.iter().find(|c| !class.contains_key(&c.edges)) {
        return bad(format!("cycle {:?} is not classified", t.ground.names(c.edges)));
    }
    for (i, &c1) in t.balanced.iter().enumerate() {
        for &c2 in &t.balanced[i + 1..] {
            let d = c1 ^ c2;
            if is_cycle(&t.graph, d) && class.get(&d) != Some(&CycleClass::Balanced) {
                return bad(format!(
                    "theta property fails: {:?} and {:?} are balanced but {:?} is not",
                    t.ground.names(c1),
                    t.ground.names(c2),
                    t.ground.names(d)
                ));
            }
        }
    }
    for &l in &t.lift {
        for &f in &t.frame {
            if t.graph.vertices_of(l) & t.graph.vertices_of(f) == 0 {
                return bad(format!(
                    "L-cycle {:?} and F-cycle {:?} are vertex-disjoint",
                    t.ground.names(l),
                    t.ground.names(f)
                ));
            }
        }
    }
    Ok(TripartitionReport {
        proper: true,
        diagnostic: None,
    })
}

/// `M(G, B, L, F)`.
#[derive(Debug, Clone)]
pub struct QuasiGraphicMatroid {
    partition: Tripartition,
    cycles: Vec<(Cycle, CycleClass)>,
    circuits: Vec<Subset>,
}

impl QuasiGraphicMatroid {
    /// Improper tripartitions are rejected.
    pub fn new(partition: Tripartition) -> Result<QuasiGraphicMatroid> {
        let report = validate_tripartition(&partition)?;
        if !report.proper {
            return Err(Error::pre(format!(
                "improper tripartition: {}",
                report.diagnostic.unwrap_or_default()
            )));
        }
        let class: BTreeMap<Subset, CycleClass> = partition
            .balanced
            .iter()
            .map(|&c| (c, CycleClass::Balanced))
            .chain(partition.lift.iter().map(|&c| (c, CycleClass::Lift)))
            .chain(partition.frame.iter().map(|&c| (c, CycleClass::Frame)))
            .collect();
        let cycles = all_cycles(&partition.graph)?
            .into_iter()
            .map(|c| (c, class[&c.edges]))
            .collect();
        let mut q = QuasiGraphicMatroid {
            partition,
            cycles,
            circuits: vec![],
        };
        q.circuits = q.classify_circuits()?;
        Ok(q)
    }

    pub fn partition(&self) -> &Tripartition {
        &self.partition
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.partition.graph
    }

    pub fn ground(&self) -> &GroundSet {
        &self.partition.ground
    }

    /// The circuits given by the five rules, by bitmask.
    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    fn cycles_in(&self, x: Subset) -> impl Iterator<Item = &(Cycle, CycleClass)> {
        self.cycles.iter().filter(move |(c, _)| c.edges.is_subset_of(x))
    }

    fn has_class(&self, x: Subset, k: CycleClass) -> bool {
        self.cycles_in(x).any(|(_, c)| *c == k)
    }

    /// Rank through the vertex/component formula.
    pub fn rank_formula(&self, x: Subset) -> usize {
        let g = &self.partition.graph;
        let v = g.vertices_of(x).count_ones() as usize;
        let comps = g.edge_components(x);
        if self.has_class(x, CycleClass::Frame) {
            let balanced = comps
                .iter()
                .filter(|&&c| self.cycles_in(c).all(|(_, k)| *k == CycleClass::Balanced))
                .count();
            v - balanced
        } else {
            v - comps.len() + usize::from(self.has_class(x, CycleClass::Lift))
        }
    }

    /// Rank as the size of a largest subset containing no circuit.
    pub fn rank_from_circuits(&self) -> Result<Vec<usize>> {
        let m = self.partition.graph.edge_count();
        limits::check("circuit rank table edge set", m, Limits::get().subset_scan)?;
        let mut rank = vec![0usize; 1 << m];
        for x in 1u32..(1 << m) {
            let xs = Subset(x);
            let dependent = self.circuits.iter().any(|c| c.is_subset_of(xs));
            rank[x as usize] = if dependent {
                xs.iter().map(|e| rank[xs.without(e).0 as usize]).max().unwrap_or(0)
            } else {
                xs.len()
            };
        }
        Ok(rank)
    }

    fn classify_circuits(&self) -> Result<Vec<Subset>> {
        let g = &self.partition.graph;
        limits::check("circuit classification edge set", g.edge_count(), Limits::get().subset_scan)?;
        let mut out = Vec::new();
        for x in g.all_edges().submasks() {
            if x.is_empty() {
                continue;
            }
            let inside: Vec<&(Cycle, CycleClass)> = self.cycles_in(x).collect();
            if inside.is_empty() {
                continue;
            }
            let comps = g.edge_components(x);
            let v = g.vertices_of(x).count_ones() as usize;
            let circuit = match comps.len() {
                1 => {
                    let no_pendant = g.degrees(x).iter().all(|&d| d != 1);
                    if inside.len() == 1 && inside[0].0.edges == x {
                        inside[0].1 == CycleClass::Balanced
                    } else if no_pendant && x.len() == v + 1 {
                        let unbalanced = |c: &&(Cycle, CycleClass)| c.1 != CycleClass::Balanced;
                        match inside.len() {
                            // theta
                            3 => inside.iter().all(unbalanced),
                            2 => {
                                let (a, b) = (inside[0], inside[1]);
                                if cycles::share_vertex(&a.0, &b.0) {
                                    unbalanced(&a) && unbalanced(&b)
                                } else {
                                    a.1 == CycleClass::Frame && b.1 == CycleClass::Frame
                                }
                            }
                            _ => false,
                        }
                    } else {
                        false
                    }
                }
                2 => {
                    inside.len() == 2
                        && inside.iter().all(|c| c.1 == CycleClass::Lift)
                        && inside[0].0.edges | inside[1].0.edges == x
                }
                _ => false,
            };
            if circuit {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// As a [`Matroid`] with the quasi-graphic backend.
    pub fn to_matroid(&self) -> Matroid {
        Matroid::quasigraphic(self.clone())
    }
}

/// Check the circuit axioms: non-empty, pairwise incomparable, and weak
/// elimination. Returns the first violation.
pub fn check_circuit_axioms(circuits: &[Subset]) -> Option<String> {
    if circuits.iter().any(|c| c.is_empty()) {
        return Some("the empty set is listed as a circuit".into());
    }
    for (i, &c1) in circuits.iter().enumerate() {
        for (j, &c2) in circuits.iter().enumerate() {
            if i == j {
                continue;
            }
            if c1.is_subset_of(c2) {
                return Some(format!("circuit {c1:?} is contained in {c2:?}"));
            }
            for e in c1 & c2 {
                let u = (c1 | c2).without(e);
                if !circuits.iter().any(|c| c.is_subset_of(u)) {
                    return Some(format!("elimination fails for {c1:?}, {c2:?} at {e}"));
                }
            }
        }
    }
    None
}

/// The bicircular matroid of the path on `n` vertices with a loop at every
/// vertex. Labels are `l1..ln` for loops and `e1..e(n-1)` for path edges.
pub fn bicircular_fan(n: usize) -> Result<QuasiGraphicMatroid> {
    if n == 0 {
        return Err(Error::domain("bicircular fan needs n >= 1"));
    }
    let g = MultiGraph::looped_path(n);
    let mut labels = Vec::with_capacity(2 * n - 1);
    for v in 1..=n {
        labels.push(format!("l{v}"));
        if v < n {
            labels.push(format!("e{v}"));
        }
    }
    let ground = GroundSet::new(labels)?;
    QuasiGraphicMatroid::new(Tripartition::bicircular(g, ground)?)
}

/// Graph branch-width, matroid branch-width, and whether `bw(M) <= bw(G) + 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WidthBound {
    pub graph_width: usize,
    pub matroid_width: usize,
    pub holds: bool,
}

pub fn branch_width_bound_check(q: &QuasiGraphicMatroid) -> Result<WidthBound> {
    let graph_width = graph_branch_width(q.graph())?.value;
    let matroid_width = branch_width(&q.to_matroid())?.value;
    Ok(WidthBound {
        graph_width,
        matroid_width,
        holds: matroid_width <= graph_width + 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::is_isomorphic;

    fn k3() -> (MultiGraph, GroundSet) {
        (MultiGraph::complete(3), GroundSet::new(["a", "b", "c"]).unwrap())
    }

    #[test]
    fn graphic_case() {
        let (g, e) = k3();
        let t = Tripartition::graphic(g.clone(), e).unwrap();
        assert!(validate_tripartition(&t).unwrap().proper);
        let q = QuasiGraphicMatroid::new(t).unwrap();
        assert_eq!(q.circuits(), &[Subset::full(3)]);
        assert_eq!(q.rank_formula(Subset::full(3)), 2);
        assert_eq!(q.rank_formula(Subset::EMPTY), 0);
    }

    #[test]
    fn triangle_in_lift_is_proper() {
        let (g, e) = k3();
        let t = Tripartition::classify(g, e, |_| CycleClass::Lift).unwrap();
        assert!(validate_tripartition(&t).unwrap().proper);
        let q = QuasiGraphicMatroid::new(t).unwrap();
        assert!(q.circuits().is_empty());
    }

    #[test]
    fn disjoint_lift_and_frame_is_improper() {
        let g = MultiGraph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let e = GroundSet::numbered(6);
        let t = Tripartition::classify(g, e, |c| {
            if c.vertices & 1 != 0 {
                CycleClass::Lift
            } else {
                CycleClass::Frame
            }
        })
        .unwrap();
        let r = validate_tripartition(&t).unwrap();
        assert!(!r.proper);
        assert!(r.diagnostic.unwrap().contains("vertex-disjoint"));
        assert!(QuasiGraphicMatroid::new(t).is_err());
    }

    #[test]
    fn loose_handcuff_of_two_loops() {
        let q = bicircular_fan(2).unwrap();
        assert_eq!(q.circuits(), &[Subset::full(3)]);
        assert_eq!(q.rank_formula(Subset::full(3)), 2);
        let single = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        let t = Tripartition::classify(single, GroundSet::numbered(1), |_| CycleClass::Lift).unwrap();
        assert!(QuasiGraphicMatroid::new(t).unwrap().circuits().is_empty());
    }

    #[test]
    fn rank_formula_matches_circuits_on_bicircular_paths() {
        for n in 1..=4 {
            let q = bicircular_fan(n).unwrap();
            assert!(check_circuit_axioms(q.circuits()).is_none());
            let r = q.rank_from_circuits().unwrap();
            for x in q.ground().full().submasks() {
                assert_eq!(q.rank_formula(x), r[x.0 as usize]);
            }
            assert_eq!(q.rank_formula(q.ground().full()), n);
        }
    }

    #[test]
    fn bicircular_fan_is_a_fan() {
        for n in 1..=5 {
            let q = bicircular_fan(n).unwrap().to_matroid();
            let f = Matroid::fan(n).unwrap();
            assert!(is_isomorphic(&q, &f).unwrap().is_some(), "n = {n}");
        }
    }

    #[test]
    fn width_bound_examples() {
        let (g, e) = k3();
        let q = QuasiGraphicMatroid::new(Tripartition::graphic(g, e).unwrap()).unwrap();
        let b = branch_width_bound_check(&q).unwrap();
        assert_eq!((b.graph_width, b.matroid_width, b.holds), (2, 2, true));
        assert!(branch_width_bound_check(&bicircular_fan(3).unwrap()).unwrap().holds);
    }
}
