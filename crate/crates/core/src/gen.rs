//! Seeded instance generators for property campaigns.
//!
//! All randomness flows from one [`ChaCha8Rng`], so a seed fixes every
//! instance.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::MultiGraph;
use crate::matroid::{LinearRep, Matroid, SUPPORTED_FIELDS};
use crate::quasigraphic::{all_cycles, validate_tripartition, CycleClass, QuasiGraphicMatroid, Tripartition};
use crate::subset::{GroundSet, Subset};

/// Backends a random matroid can be drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Bases,
    Uniform,
    Graphic,
    Linear,
    QuasiGraphic,
    Minor,
    Dual,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Bases,
        Kind::Uniform,
        Kind::Graphic,
        Kind::Linear,
        Kind::QuasiGraphic,
        Kind::Minor,
        Kind::Dual,
    ];
}

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A uniformly random subset of `ground`.
    pub fn subset(&mut self, ground: Subset) -> Subset {
        ground.iter().filter(|_| self.rng.gen_bool(0.5)).collect()
    }

    /// A random multigraph; loops and parallel edges allowed when `loops`.
    pub fn graph(&mut self, vertices: usize, edges: usize, loops: bool) -> MultiGraph {
        let vertices = vertices.max(1);
        let es = (0..edges)
            .map(|_| loop {
                let u = self.rng.gen_range(0..vertices);
                let v = self.rng.gen_range(0..vertices);
                if loops || u != v || vertices == 1 {
                    break (u.min(v), u.max(v));
                }
            })
            .collect();
        MultiGraph::new(vertices, es).expect("endpoints in range")
    }

    /// A random connected multigraph with `edges >= vertices - 1` edges.
    pub fn connected_graph(&mut self, vertices: usize, edges: usize) -> MultiGraph {
        let vertices = vertices.clamp(1, edges + 1);
        let mut es = Vec::with_capacity(edges);
        for v in 1..vertices {
            let u = self.rng.gen_range(0..v);
            es.push((u, v));
        }
        while es.len() < edges {
            let u = self.rng.gen_range(0..vertices);
            let v = self.rng.gen_range(0..vertices);
            es.push((u.min(v), u.max(v)));
        }
        es.shuffle(&mut self.rng);
        MultiGraph::new(vertices, es).expect("endpoints in range")
    }

    /// A proper tripartition of `g`'s cycles: graphic, bicircular, or a
    /// signed graph whose unbalanced cycles go to `L`, to `F`, or (when the
    /// split stays proper) to a random mix of both.
    pub fn tripartition(&mut self, g: &MultiGraph) -> Tripartition {
        let ground = GroundSet::numbered(g.edge_count());
        let mode = self.rng.gen_range(0..5);
        let signs: Vec<bool> = (0..g.edge_count()).map(|_| self.rng.gen_bool(0.5)).collect();
        let balanced = |c: Subset| c.iter().filter(|&e| signs[e]).count() % 2 == 0;
        let build = |class: &mut dyn FnMut(Subset) -> CycleClass| {
            Tripartition::classify(g.clone(), ground.clone(), |c| class(c.edges)).expect("small graph")
        };
        match mode {
            0 => Tripartition::graphic(g.clone(), ground).expect("small graph"),
            1 => Tripartition::bicircular(g.clone(), ground).expect("small graph"),
            2 => build(&mut |c| if balanced(c) { CycleClass::Balanced } else { CycleClass::Lift }),
            3 => build(&mut |c| if balanced(c) { CycleClass::Balanced } else { CycleClass::Frame }),
            _ => {
                for _ in 0..8 {
                    let rng = &mut self.rng;
                    let t = build(&mut |c| {
                        if balanced(c) {
                            CycleClass::Balanced
                        } else if rng.gen_bool(0.5) {
                            CycleClass::Lift
                        } else {
                            CycleClass::Frame
                        }
                    });
                    if validate_tripartition(&t).map(|r| r.proper).unwrap_or(false) {
                        return t;
                    }
                }
                build(&mut |c| if balanced(c) { CycleClass::Balanced } else { CycleClass::Frame })
            }
        }
    }

    /// A random matroid of the given kind on at most `max_n` elements.
    pub fn matroid(&mut self, kind: Kind, max_n: usize) -> Matroid {
        let n = self.rng.gen_range(0..=max_n);
        match kind {
            Kind::Uniform => {
                let r = self.rng.gen_range(0..=n);
                Matroid::uniform(r, n).expect("r <= n")
            }
            Kind::Graphic => {
                let v = self.rng.gen_range(1..=5);
                Matroid::graphic_numbered(self.graph(v, n, true))
            }
            Kind::Linear => {
                let q = *SUPPORTED_FIELDS.choose(&mut self.rng).expect("non-empty");
                let rows = self.rng.gen_range(1..=4);
                let cols = (0..n).map(|_| (0..rows).map(|_| self.rng.gen_range(0..q)).collect()).collect();
                Matroid::linear(LinearRep::new(q, cols).expect("valid field"), GroundSet::numbered(n)).expect("sizes agree")
            }
            Kind::QuasiGraphic => {
                let v = self.rng.gen_range(1..=5);
                let g = self.graph(v, n, true);
                let t = self.tripartition(&g);
                Matroid::quasigraphic(QuasiGraphicMatroid::new(t).expect("generated tripartitions are proper"))
            }
            Kind::Bases => {
                let inner = *[Kind::Uniform, Kind::Graphic, Kind::Linear].choose(&mut self.rng).expect("non-empty");
                let m = self.matroid(inner, max_n);
                let mut perm: Vec<usize> = (0..m.len()).collect();
                perm.shuffle(&mut self.rng);
                let bases = m
                    .bases()
                    .expect("small matroid")
                    .into_iter()
                    .map(|b| b.iter().map(|e| perm[e]).collect::<Subset>());
                Matroid::from_bases_unchecked(GroundSet::numbered(m.len()), bases)
            }
            Kind::Minor => {
                let inner = *[Kind::Uniform, Kind::Graphic, Kind::Linear, Kind::QuasiGraphic]
                    .choose(&mut self.rng)
                    .expect("non-empty");
                let m = self.matroid(inner, max_n + 2);
                let full = m.full();
                let mut del = Subset::EMPTY;
                let mut con = Subset::EMPTY;
                for e in full {
                    match self.rng.gen_range(0..4) {
                        0 => del = del.with(e),
                        1 => con = con.with(e),
                        _ => {}
                    }
                }
                while full.len() - del.len() - con.len() > max_n {
                    let e = (full - del - con).first().expect("non-empty");
                    del = del.with(e);
                }
                m.minor(del, con).expect("disjoint")
            }
            Kind::Dual => {
                let inner = *[Kind::Uniform, Kind::Graphic, Kind::Linear, Kind::Bases]
                    .choose(&mut self.rng)
                    .expect("non-empty");
                self.matroid(inner, max_n).dual()
            }
        }
    }

    /// A random matroid, kind chosen uniformly.
    pub fn any_matroid(&mut self, max_n: usize) -> Matroid {
        let kind = *Kind::ALL.choose(&mut self.rng).expect("non-empty");
        self.matroid(kind, max_n)
    }
}

/// A canonical form of a multigraph: the lexicographically least sorted
/// edge list over vertex orderings that respect colour refinement classes.
pub fn canonical_form(g: &MultiGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut mult = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        mult[u][v] += 1;
        if u != v {
            mult[v][u] += 1;
        }
    }
    // colour refinement
    let mut colour: Vec<usize> = vec![0; n];
    loop {
        let sigs: Vec<(usize, usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, usize)> = (0..n).filter(|&u| u != v && mult[v][u] > 0).map(|u| (colour[u], mult[v][u])).collect();
                nb.sort();
                (colour[v], mult[v][v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).expect("present")).collect();
        let classes_before = colour.iter().collect::<HashSet<_>>().len();
        colour = next;
        if distinct.len() == classes_before {
            break;
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![vec![]; n];
    for v in 0..n {
        classes[colour[v]].push(v);
    }
    classes.retain(|c| !c.is_empty());
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut order = Vec::with_capacity(n);
    permute_classes(&classes, 0, &mut order, &mut |order: &[usize]| {
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut es: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        es.sort();
        if best.as_ref().is_none_or(|b| es < *b) {
            best = Some(es);
        }
    });
    best.unwrap_or_default()
}

fn permute_classes(classes: &[Vec<usize>], k: usize, order: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if k == classes.len() {
        visit(order);
        return;
    }
    let mut items = classes[k].clone();
    heap_permutations(&mut items, classes[k].len(), &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_classes(classes, k + 1, order, visit);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, visit);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Every connected multigraph (loops and parallel edges allowed, no
/// isolated vertices) with exactly `edges` edges, one per isomorphism class.
///
/// Built edge by edge: a connected graph minus a non-bridge edge, or minus a
/// leaf with its edge, is still connected, so adding one edge (between old
/// vertices or to a new leaf) reaches every class.
pub fn connected_multigraphs(edges: usize) -> Vec<MultiGraph> {
    let mut level: Vec<MultiGraph> = vec![MultiGraph::new(1, vec![]).expect("single vertex")];
    for _ in 0..edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let n = g.vertex_count();
            let mut candidates = Vec::new();
            for u in 0..n {
                for v in u..n {
                    candidates.push((n, (u, v)));
                }
                candidates.push((n + 1, (u, n)));
            }
            for (vc, e) in candidates {
                let mut es = g.edges().to_vec();
                es.push(e);
                let h = MultiGraph::new(vc, es).expect("endpoints in range");
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|g| {
            let form = canonical_form(&g);
            MultiGraph::new(g.vertex_count(), form).expect("relabelled edges")
        })
        .collect()
}

/// Cycles of `g` (edge sets), for callers that build tripartitions by hand.
pub fn cycles_of(g: &MultiGraph) -> Vec<Subset> {
    all_cycles(g).map(|cs| cs.into_iter().map(|c| c.edges).collect()).unwrap_or_default()
}
