//! Twisted matroids: set systems `M * B` for a matroid `M` and a base `B`,
//! with twists, restrictions, minors and the fundamental graph calculus.
//!
//! Subsets of a twisted matroid are always expressed in the indices of its
//! universe, so twisting and restricting never renumber elements.

mod fan;
mod graph;
mod matching;
mod pivot;

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

pub use fan::{fan_minor_sets, find_fan_certificate, validate_fan_certificate, FanCertificate};
pub use graph::TwistGraph;
pub use matching::{matching_feasibility, perfect_matchings_upto, MatchingReport};
pub use pivot::{pivot_agrees, pivot_exact, pivot_predict, EdgeState, PartialGraph};

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::matroid::{FundamentalGraphView, Matroid};
use crate::subset::{GroundSet, Subset};

/// A twisted matroid with an explicit feasible family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedMatroid {
    universe: Arc<GroundSet>,
    ground: Subset,
    feasible: BTreeSet<Subset>,
}

/// Answers membership through the base test `B △ X ∈ B(M)`.
#[derive(Debug, Clone)]
pub struct LazyTwisted {
    pub matroid: Matroid,
    pub base: Subset,
}

impl LazyTwisted {
    pub fn new(matroid: Matroid, base: Subset) -> Result<LazyTwisted> {
        matroid.ground().check(base)?;
        if !matroid.is_base(base) {
            return Err(Error::pre(format!("{base:?} is not a base")));
        }
        Ok(LazyTwisted { matroid, base })
    }

    pub fn is_feasible(&self, x: Subset) -> bool {
        x.is_subset_of(self.matroid.full()) && self.matroid.is_base(self.base ^ x)
    }

    pub fn to_explicit(&self) -> Result<TwistedMatroid> {
        twist_of(&self.matroid, self.base)
    }
}

/// Results of the axiom checks; `base` is a balancing set when `t3` holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub even: bool,
    pub base: Option<Subset>,
    pub failure: Option<String>,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.t1 && self.t2 && self.t3
    }
}

/// A matroid on the ground set of `W` (elements in increasing universe
/// order) with one of its bases, such that `M * B = W`.
#[derive(Debug, Clone)]
pub struct AssociatedPair {
    pub matroid: Matroid,
    /// In universe indices.
    pub base: Subset,
}

/// `M * B`.
pub fn twist_of(m: &Matroid, b: Subset) -> Result<TwistedMatroid> {
    m.ground().check(b)?;
    if !m.is_base(b) {
        return Err(Error::pre(format!("{b:?} is not a base")));
    }
    limits::check("twisted matroid ground set", m.len(), Limits::get().subset_scan)?;
    let feasible = m.bases_unlimited().into_iter().map(|x| x ^ b).collect();
    Ok(TwistedMatroid {
        universe: Arc::new(m.ground().clone()),
        ground: m.full(),
        feasible,
    })
}

impl TwistedMatroid {
    /// A set system on `ground` (a subset of `universe`), checked against
    /// T1, T2 and T3.
    pub fn from_family(
        universe: GroundSet,
        ground: Subset,
        family: impl IntoIterator<Item = Subset>,
    ) -> Result<TwistedMatroid> {
        let w = TwistedMatroid::from_family_unchecked(universe, ground, family)?;
        let r = verify_twisted_axioms(&w);
        if !r.all() {
            return Err(Error::Validation(format!(
                "not a twisted matroid: {}",
                r.failure.unwrap_or_default()
            )));
        }
        Ok(w)
    }

    /// A raw set system; members must lie inside `ground`.
    pub fn from_family_unchecked(
        universe: GroundSet,
        ground: Subset,
        family: impl IntoIterator<Item = Subset>,
    ) -> Result<TwistedMatroid> {
        universe.check(ground)?;
        let feasible: BTreeSet<Subset> = family.into_iter().collect();
        if let Some(x) = feasible.iter().find(|x| !x.is_subset_of(ground)) {
            return Err(Error::domain(format!("family member {x:?} leaves the ground set")));
        }
        Ok(TwistedMatroid {
            universe: Arc::new(universe),
            ground,
            feasible,
        })
    }

    pub fn universe(&self) -> &GroundSet {
        &self.universe
    }

    /// `E(W)` in universe indices.
    pub fn ground(&self) -> Subset {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn feasible(&self) -> &BTreeSet<Subset> {
        &self.feasible
    }

    pub fn is_feasible(&self, x: Subset) -> bool {
        self.feasible.contains(&x)
    }

    pub fn names(&self, x: Subset) -> Vec<String> {
        self.universe.names(x)
    }

    fn check_inside(&self, x: Subset) -> Result<()> {
        if !x.is_subset_of(self.ground) {
            return Err(Error::domain(format!(
                "{:?} is not inside the ground set {:?}",
                x, self.ground
            )));
        }
        Ok(())
    }

    /// `W * F`; only feasible `F` give a twisted matroid.
    pub fn twist(&self, f: Subset) -> Result<TwistedMatroid> {
        self.check_inside(f)?;
        if !self.is_feasible(f) {
            return Err(Error::pre(format!("{:?} is not feasible", self.names(f))));
        }
        Ok(self.twist_unchecked(f))
    }

    /// The set system `F(W) △ F`, twisted matroid or not.
    pub fn twist_unchecked(&self, f: Subset) -> TwistedMatroid {
        TwistedMatroid {
            universe: self.universe.clone(),
            ground: self.ground,
            feasible: self.feasible.iter().map(|&x| x ^ f).collect(),
        }
    }

    /// `W[X]`.
    pub fn restrict(&self, x: Subset) -> Result<TwistedMatroid> {
        self.check_inside(x)?;
        Ok(TwistedMatroid {
            universe: self.universe.clone(),
            ground: x,
            feasible: self.feasible.iter().copied().filter(|f| f.is_subset_of(x)).collect(),
        })
    }

    /// `(W * F)[X]`.
    pub fn t_minor(&self, f: Subset, x: Subset) -> Result<TwistedMatroid> {
        self.twist(f)?.restrict(x)
    }

    /// `G(W)`: `xy` is an edge iff `{x, y}` is feasible.
    pub fn graph(&self) -> TwistGraph {
        let mut adj = vec![Subset::EMPTY; self.universe.len()];
        for f in self.feasible.iter().filter(|f| f.len() == 2) {
            let v = f.to_vec();
            adj[v[0]] = adj[v[0]].with(v[1]);
            adj[v[1]] = adj[v[1]].with(v[0]);
        }
        TwistGraph::new(adj, self.ground)
    }

    /// The bases of `W`: colour classes of proper 2-colourings of `G(W)`,
    /// in increasing bitmask order. Empty when `G(W)` is not bipartite or a
    /// singleton is feasible.
    pub fn bases(&self) -> Vec<Subset> {
        if self.feasible.iter().any(|f| f.len() == 1) {
            return vec![];
        }
        let g = self.graph();
        let Some(sides) = g.colour_classes() else {
            return vec![];
        };
        let mut out = Vec::with_capacity(1 << sides.len());
        for pick in 0u64..(1u64 << sides.len()) {
            let mut b = Subset::EMPTY;
            for (i, (a, c)) in sides.iter().enumerate() {
                b = b | if pick >> i & 1 == 0 { *a } else { *c };
            }
            out.push(b);
        }
        out.sort();
        out
    }

    /// The base that, on each component of `G(W)`, takes the colour class
    /// of the component's least element.
    pub fn canonical_base(&self) -> Option<Subset> {
        if self.feasible.iter().any(|f| f.len() == 1) {
            return None;
        }
        let sides = self.graph().colour_classes()?;
        Some(sides.iter().fold(Subset::EMPTY, |b, (a, _)| b | *a))
    }

    /// `W * B` as a matroid on `E(W)`; `B` must balance `W`.
    pub fn matroid_for(&self, b: Subset) -> Result<Matroid> {
        self.check_inside(b)?;
        let balanced = self.feasible.iter().all(|f| (*f & b).len() * 2 == f.len());
        if !balanced {
            return Err(Error::pre(format!("{:?} is not a base of the twisted matroid", self.names(b))));
        }
        let ground = self.universe.restrict(self.ground);
        let bases = self.feasible.iter().map(|&f| (f ^ b).compress(self.ground));
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// The matroid of the canonical base.
    pub fn associated(&self) -> Result<Matroid> {
        let b = self
            .canonical_base()
            .ok_or_else(|| Error::pre("set system has no balancing base"))?;
        self.matroid_for(b)
    }

    /// `λ_W(X)` for `X ⊆ E(W)`.
    pub fn lambda(&self, x: Subset) -> Result<usize> {
        self.check_inside(x)?;
        Ok(self.associated()?.lam(x.compress(self.ground)))
    }

    /// Components of `W` (components of `G(W)`), by least element.
    pub fn components(&self) -> Vec<Subset> {
        self.graph().components_within(self.ground)
    }

    pub fn is_connected(&self) -> bool {
        self.graph().is_connected_within(self.ground)
    }

    /// Branch-depth of any associated matroid.
    pub fn branch_depth(&self) -> Result<usize> {
        Ok(crate::decomposition::branch_depth(&self.associated()?)?.value)
    }

    pub fn branch_depth_at_least(&self, t: usize) -> Result<bool> {
        crate::decomposition::branch_depth_at_least(&self.associated()?, t)
    }

    pub fn branch_width(&self) -> Result<usize> {
        Ok(crate::decomposition::branch_width(&self.associated()?)?.value)
    }

    /// `G(W)` as a fundamental graph over `E(W)` (local indices) with base
    /// class `b`.
    pub fn fundamental_view(&self, b: Subset) -> FundamentalGraphView {
        self.graph().view(&self.universe, b)
    }
}

/// T1, T2 by exhaustion, T3 through T3′ (a 2-colouring of the graph of
/// feasible pairs with no feasible singleton).
pub fn verify_twisted_axioms(w: &TwistedMatroid) -> AxiomReport {
    let mut failure = None;
    let t1 = w.is_feasible(Subset::EMPTY);
    if !t1 {
        failure = Some("the empty set is not feasible (T1)".to_string());
    }
    let even = w.feasible.iter().all(|f| f.len() % 2 == 0);
    let mut t2 = true;
    'outer: for &f1 in &w.feasible {
        for &f2 in &w.feasible {
            let d = f1 ^ f2;
            for e in d {
                if !d.iter().any(|f| w.is_feasible(f1 ^ Subset::singleton(e).with(f))) {
                    t2 = false;
                    failure.get_or_insert_with(|| {
                        format!(
                            "exchange (T2) fails for {:?}, {:?} at {}",
                            w.names(f1),
                            w.names(f2),
                            w.universe.label(e)
                        )
                    });
                    break 'outer;
                }
            }
        }
    }
    let base = w.canonical_base();
    let t3 = base.is_some();
    if !t3 {
        failure.get_or_insert_with(|| "no set balances every feasible set of size at most 2 (T3')".to_string());
    }
    AxiomReport {
        t1,
        t2,
        t3,
        even,
        base,
        failure,
    }
}

/// All `(W * B, B)` over the bases `B` of `W`.
pub fn associated_matroids(w: &TwistedMatroid) -> Result<Vec<AssociatedPair>> {
    w.bases()
        .into_iter()
        .map(|b| {
            Ok(AssociatedPair {
                matroid: w.matroid_for(b)?,
                base: b,
            })
        })
        .collect()
}

/// Whether `{e, x} ∈ F ⟺ {e, x} ∈ F △ F` for every `x`, under the premise
/// that `F` is feasible, `e ∉ F`, and no `{e, f}` with `f ∈ F` is feasible.
pub fn outside_twist_adjacency_check(w: &TwistedMatroid, f: Subset, e: usize) -> Result<bool> {
    w.check_inside(f)?;
    if !w.ground.contains(e) {
        return Err(Error::domain(format!("element {e} is not in the ground set")));
    }
    if !w.is_feasible(f) {
        return Err(Error::pre("F is not feasible"));
    }
    if f.contains(e) {
        return Err(Error::pre("e lies in F"));
    }
    if f.iter().any(|x| w.is_feasible(Subset::singleton(e).with(x))) {
        return Err(Error::pre("e has a feasible pair with an element of F"));
    }
    Ok(w.ground.without(e).iter().all(|x| {
        let pair = Subset::singleton(e).with(x);
        w.is_feasible(pair) == w.is_feasible(pair ^ f)
    }))
}

/// The unique matroid with base `B` whose fundamental graph is the forest
/// `G`: its twist has exactly the sets `X` with `G[X]` perfectly matchable.
pub fn unique_fundamental_reconstruction(g: &FundamentalGraphView, b: Subset) -> Result<Matroid> {
    if b != g.base() {
        return Err(Error::pre("B is not the colour class of the view"));
    }
    if !g.is_forest() {
        return Err(Error::pre("fundamental graph has a cycle"));
    }
    limits::check("reconstruction ground set", g.len(), Limits::get().subset_scan)?;
    let family: Vec<Subset> = g
        .vertices()
        .submasks()
        .filter(|&x| perfect_matchings_upto(g.adjacency(), x, 1) == 1)
        .collect();
    let w = TwistedMatroid::from_family(g.ground().clone(), g.vertices(), family.iter().copied())?;
    let m = Matroid::from_bases(g.ground().clone(), family.into_iter().map(|x| x ^ b))?;
    debug_assert_eq!(w.matroid_for(b)?.bases()?, m.bases()?);
    Ok(m)
}
