use std::collections::BTreeSet;

use serde::Serialize;

use crate::decomposition::find_balanced_separation;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::twisted::{twist_of, TwistedMatroid};

use super::chain::NestedLollipopChain;
use super::check::{is_connected_set, neighbourhood, pair_graph};
use super::{pick_component, Rigor};

/// `X ⊆ Z` with `|X| >= k + 1` and a connected `Y ⊆ C` of branch-depth at
/// least `b` with `λ_{W[X ∪ Y]}(X) < w`.
///
/// A balanced separation `(X', Y')` of `W[Z ∪ C]` is found first; `Y` is a
/// component of `W[X' ∩ C]` or `W[Y' ∩ C]`, and `X` is the part of `Z` on
/// the other side.
pub fn bridge(
    w_mat: &TwistedMatroid,
    z: Subset,
    c: Subset,
    k: usize,
    b: usize,
    w: usize,
    rigor: Rigor,
) -> Result<(Subset, Subset)> {
    let e = w_mat.ground();
    if !z.is_subset_of(e) || !c.is_subset_of(e) {
        return Err(Error::domain("Z and C must lie in E(W)"));
    }
    if !z.is_disjoint(c) {
        return Err(Error::pre("Z and C must be disjoint"));
    }
    if k == 0 || w <= 2 {
        return Err(Error::pre("need k > 0 and w > 2"));
    }
    if z.len() < 3 * k + 1 {
        return Err(Error::pre(format!("|Z| = {} is below 3k + 1 = {}", z.len(), 3 * k + 1)));
    }
    if rigor == Rigor::Certified && !w_mat.restrict(c)?.branch_depth_at_least(b + w - 1)? {
        return Err(Error::pre(format!("W[C] has branch-depth below b + w - 1 = {}", b + w - 1)));
    }
    let zc = z | c;
    let sub = w_mat.restrict(zc)?;
    let m = sub.associated()?;
    let (xl, yl) = find_balanced_separation(&m, z.compress(zc), k, w)?;
    let (x1, y1) = (xl.expand(zc), yl.expand(zc));
    let mut comps: Vec<Subset> = sub.graph().components_within(y1 & c);
    comps.extend(sub.graph().components_within(x1 & c));
    comps.sort();
    let y = pick_component(&sub, &comps, b, rigor)?
        .ok_or_else(|| Error::internal(format!("neither side of the separation has a component of depth {b}")))?;
    let x = if y.is_subset_of(y1) { z & x1 } else { z & y1 };
    Ok((x, y))
}

/// Independent check of the three bridge postconditions.
#[allow(clippy::too_many_arguments)]
pub fn validate_bridge(
    w_mat: &TwistedMatroid,
    z: Subset,
    c: Subset,
    k: usize,
    b: usize,
    w: usize,
    x: Subset,
    y: Subset,
) -> Result<std::result::Result<(), String>> {
    if !x.is_subset_of(z) || !y.is_subset_of(c) {
        return Ok(Err("X ⊄ Z or Y ⊄ C".into()));
    }
    if x.len() < k + 1 {
        return Ok(Err(format!("|X| = {} is below k + 1 = {}", x.len(), k + 1)));
    }
    let adj = pair_graph(w_mat);
    if y.is_empty() || !is_connected_set(&adj, y) {
        return Ok(Err("W[Y] is not connected".into()));
    }
    if b > 0 && !w_mat.restrict(y)?.branch_depth_at_least(b)? {
        return Ok(Err(format!("W[Y] has branch-depth below {b}")));
    }
    let lam = w_mat.restrict(x | y)?.lambda(x)?;
    if lam >= w {
        return Ok(Err(format!("λ(X) = {lam} is not below {w}")));
    }
    Ok(Ok(()))
}

/// A base `B` of `W″` and a circuit `O ⊆ X \ B`, `|O| <= w`, of
/// `(W″ * B) / (B ∩ X)`. `complement` records whether `B` is the
/// complement of the canonical base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallCircuit {
    pub base: Subset,
    pub circuit: Subset,
    pub complement: bool,
}

/// Rank of `t` in `m / c`.
fn contracted_rank(m: &Matroid, c: Subset, t: Subset) -> usize {
    m.r(t | c) - m.r(c)
}

/// For each candidate base `B ∈ {B_1, E \ B_1}` test whether `X \ B` is
/// dependent in `(W″ * B) / (B ∩ X)`; the two ranks sum to `λ(X) < w` and
/// `|X| >= w`, so one of them is. A fundamental circuit with respect to a
/// basis of `X \ B` then has at most `w` elements.
pub fn find_small_circuit(w2: &TwistedMatroid, x: Subset, w: usize) -> Result<SmallCircuit> {
    let e = w2.ground();
    if !x.is_subset_of(e) {
        return Err(Error::domain("X must lie in E(W)"));
    }
    if x.len() < w {
        return Err(Error::pre(format!("|X| = {} is below w = {w}", x.len())));
    }
    let lam = w2.lambda(x)?;
    if lam >= w {
        return Err(Error::pre(format!("λ(X) = {lam} is not below w = {w}")));
    }
    let b1 = w2
        .canonical_base()
        .ok_or_else(|| Error::internal("twisted matroid without a base"))?;
    for (complement, b) in [(false, b1), (true, e - b1)] {
        let m = w2.matroid_for(b)?;
        let cl = (b & x).compress(e);
        let rest = (x - b).compress(e);
        if contracted_rank(&m, cl, rest) == rest.len() {
            continue;
        }
        let mut basis = Subset::EMPTY;
        for v in rest {
            if contracted_rank(&m, cl, basis.with(v)) == basis.len() + 1 {
                basis = basis.with(v);
            }
        }
        let f = (rest - basis).first().ok_or_else(|| Error::internal("dependent set with full basis"))?;
        let mut o = Subset::singleton(f);
        for v in basis {
            if contracted_rank(&m, cl, basis.without(v).with(f)) == basis.len() {
                o = o.with(v);
            }
        }
        let circuit = o.expand(e);
        if circuit.len() > w {
            return Err(Error::internal(format!("circuit of size {} exceeds w = {w}", circuit.len())));
        }
        return Ok(SmallCircuit { base: b, circuit, complement });
    }
    Err(Error::internal("X \\ B independent on both sides despite λ(X) < w <= |X|"))
}

/// Independent check: `B` is a base (its twist is a matroid base family),
/// `O ⊆ X \ B`, `|O| <= w`, and `O` is a circuit of `(W″ * B) / (B ∩ X)`.
pub fn validate_small_circuit(
    w2: &TwistedMatroid,
    x: Subset,
    w: usize,
    sc: &SmallCircuit,
) -> Result<std::result::Result<(), String>> {
    let e = w2.ground();
    let ground = w2.universe().restrict(e);
    let family = w2.feasible().iter().map(|&f| (f ^ sc.base).compress(e));
    let m = match Matroid::from_bases(ground, family) {
        Ok(m) => m,
        Err(err) => return Ok(Err(format!("B is not a base: {err}"))),
    };
    let o = sc.circuit;
    if !o.is_subset_of(x - sc.base) {
        return Ok(Err("O ⊄ X \\ B".into()));
    }
    if o.len() > w || o.is_empty() {
        return Ok(Err(format!("|O| = {} is not in 1..={w}", o.len())));
    }
    let cl = (sc.base & x).compress(e);
    let ol = o.compress(e);
    if contracted_rank(&m, cl, ol) == ol.len() {
        return Ok(Err("O is independent".into()));
    }
    for v in ol {
        let t = ol.without(v);
        if contracted_rank(&m, cl, t) != t.len() {
            return Ok(Err("O is not minimally dependent".into()));
        }
    }
    Ok(Ok(()))
}

/// Data that meets the step condition `(∗)`: level `i`, a set `C ⊆ C_ℓ` and
/// `F̂` feasible in `L_i` inside `C_i` with `(L_i * F̂)[C]` connected of
/// branch-depth at least `b` and no neighbour of `z_i` in `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepOutcome {
    pub level: usize,
    pub c: Subset,
    pub f_hat: Subset,
    pub x: Subset,
    pub y: Subset,
    pub circuit: SmallCircuit,
    pub base_hat: Subset,
}

/// Bridge over `Z = {z_i}` and `C_ℓ`, a small circuit `O` through the
/// spokes, a base `B̂` of `M = ((W″ * B) / (B ∩ X)) | (O ∪ Y)` whose
/// fundamental circuit at the first `z_i ∈ O` is `O`, and a component of
/// `(M * B̂)[E(M) \ O]`.
pub fn induction_step(
    w_mat: &TwistedMatroid,
    chain: &NestedLollipopChain,
    b: usize,
    w: usize,
    rigor: Rigor,
) -> Result<StepOutcome> {
    if w <= 2 {
        return Err(Error::pre(format!("w = {w} must exceed 2")));
    }
    let ell = 3 * w - 2;
    if chain.len() != ell {
        return Err(Error::pre(format!("chain has {} levels, expected 3w - 2 = {ell}", chain.len())));
    }
    if rigor == Rigor::Certified {
        let last = chain.entries[ell - 1].bound;
        if last < b + 2 * w - 1 {
            return Err(Error::pre(format!("g_ℓ = {last} is below b + 2w - 1 = {}", b + 2 * w - 1)));
        }
        let bw = w_mat.branch_width()?;
        if bw > w {
            return Err(Error::pre(format!("branch-width is {bw}, above w = {w}")));
        }
    }
    let w1 = w_mat.twist(chain.twist)?;
    let zs: Subset = chain.entries.iter().map(|e| e.z).collect();
    let c_last = chain.entries[ell - 1].c;
    let (x, y) = bridge(&w1, zs, c_last, w - 1, b + w, w, rigor).map_err(|e| e.context("bridge"))?;
    let w2 = w1.restrict(x | y)?;
    let sc = find_small_circuit(&w2, x, w).map_err(|e| e.context("small circuit"))?;
    let o = sc.circuit;
    let e2 = x | y;
    let em = o | y;
    let mm = w2.matroid_for(sc.base)?;
    let m = mm.minor(((x - sc.base) - o).compress(e2), (x & sc.base).compress(e2))?;
    let level = chain
        .entries
        .iter()
        .position(|e| o.contains(e.z))
        .ok_or_else(|| Error::internal("circuit avoids every spoke"))?
        + 1;
    let zi = chain.entries[level - 1].z;
    let zl = Subset::singleton(zi).compress(em).first().unwrap_or(0);
    let mut bh = o.without(zi).compress(em);
    for v in m.full().without(zl) {
        if m.r(bh.with(v)) == bh.len() + 1 {
            bh = bh.with(v);
        }
    }
    let tw = twist_of(&m, bh)?;
    let outside = (em - o).compress(em);
    let comps = tw.graph().components_within(outside);
    let cl = pick_component(&tw, &comps, b, rigor)?
        .ok_or_else(|| Error::internal(format!("no component of depth {b} off the circuit")))?;
    let base_hat = bh.expand(em);
    let f_hat = (sc.base & em) ^ base_hat;
    if !f_hat.is_subset_of(chain.entries[level - 1].c) || !w1.is_feasible(f_hat) {
        return Err(Error::internal("F̂ is not a feasible set of the lollipop's candy"));
    }
    Ok(StepOutcome { level, c: cl.expand(em), f_hat, x, y, circuit: sc, base_hat })
}

/// Independent check of `(∗)` for a step outcome.
pub fn check_step_condition(
    w_mat: &TwistedMatroid,
    chain: &NestedLollipopChain,
    out: &StepOutcome,
    b: usize,
) -> Result<std::result::Result<(), String>> {
    let Some(entry) = out.level.checked_sub(1).and_then(|i| chain.entries.get(i)) else {
        return Ok(Err(format!("level {} is out of range", out.level)));
    };
    let Some(last) = chain.entries.last() else {
        return Ok(Err("empty chain".into()));
    };
    if !out.c.is_subset_of(last.c) {
        return Ok(Err("C ⊄ C_ℓ".into()));
    }
    if !out.f_hat.is_subset_of(entry.c) {
        return Ok(Err("F̂ ⊄ C_i".into()));
    }
    let li: BTreeSet<Subset> = w_mat
        .feasible()
        .iter()
        .map(|&f| f ^ chain.twist)
        .filter(|f| f.is_subset_of(entry.e))
        .collect();
    if !li.contains(&out.f_hat) {
        return Ok(Err("F̂ is not feasible in L_i".into()));
    }
    let t = TwistedMatroid::from_family_unchecked(
        w_mat.universe().clone(),
        entry.e,
        li.iter().map(|&f| f ^ out.f_hat),
    )?;
    let adj = pair_graph(&t);
    if out.c.is_empty() || !is_connected_set(&adj, out.c) {
        return Ok(Err("(L_i * F̂)[C] is not connected".into()));
    }
    if !(neighbourhood(&adj, entry.z) & out.c).is_empty() {
        return Ok(Err("z_i has a neighbour in C".into()));
    }
    if b > 0 && !t.restrict(out.c)?.branch_depth_at_least(b)? {
        return Ok(Err(format!("(L_i * F̂)[C] has branch-depth below {b}")));
    }
    Ok(Ok(()))
}
