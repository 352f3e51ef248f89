use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::twisted::TwistedMatroid;

use super::check::validate_lollipop;
use super::{Lollipop, LollipopMinor, Rigor};

/// One level `(E_i, S_i, z_i, C_i)` of a nested chain with its declared
/// candy bound `g_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainEntry {
    pub e: Subset,
    pub s: Subset,
    pub z: usize,
    pub c: Subset,
    pub bound: usize,
}

/// A single feasible `F` of `W` such that every `(W * F)[E_i]` is an
/// `(a, g_i)`-lollipop and `E_{i+1} ⊆ C_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedLollipopChain {
    pub a: usize,
    pub twist: Subset,
    pub entries: Vec<ChainEntry>,
}

impl NestedLollipopChain {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `L_i = (W * F)[E_i]` for `i` in `1..=len`.
    pub fn lollipop(&self, w: &TwistedMatroid, i: usize) -> Result<Lollipop> {
        let e = self
            .entries
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::domain(format!("chain has no level {i}")))?;
        Ok(Lollipop {
            twisted: w.twist(self.twist)?.restrict(e.e)?,
            s: e.s,
            z: e.z,
            c: e.c,
        })
    }
}

/// Finds lollipops level by level, each inside the previous candy, and
/// composes the per-level twists as `F'_i = F'_{i-1} △ F_{i-1}`.
///
/// `gs` is `g_0, ..., g_ℓ`. `finder(m, g)` must return an `(a, g)`-lollipop
/// minor of `m`; it is called on the candy of the previous level with
/// `g = g_i`.
pub fn nest_lollipops(
    w: &TwistedMatroid,
    a: usize,
    gs: &[usize],
    finder: &dyn Fn(&TwistedMatroid, usize) -> Result<LollipopMinor>,
    rigor: Rigor,
) -> Result<NestedLollipopChain> {
    if gs.len() < 2 {
        return Err(Error::pre("need bounds g_0, ..., g_ℓ with ℓ >= 1"));
    }
    if rigor == Rigor::Certified && !w.branch_depth_at_least(gs[0])? {
        return Err(Error::pre(format!("branch-depth is below g_0 = {}", gs[0])));
    }
    let mut current = w.clone();
    let mut composed = Subset::EMPTY;
    let mut entries = Vec::with_capacity(gs.len() - 1);
    for (i, &g) in gs.iter().enumerate().skip(1) {
        let found = finder(&current, g).map_err(|e| e.context(&format!("level {i}")))?;
        composed = composed ^ found.twist;
        let l = &found.lollipop;
        entries.push(ChainEntry { e: l.elements(), s: l.s, z: l.z, c: l.c, bound: match rigor {
            Rigor::Certified => g,
            Rigor::Opportunistic => 0,
        } });
        current = l.candy()?;
    }
    if !w.is_feasible(composed) {
        return Err(Error::internal("composed twist is not feasible"));
    }
    Ok(NestedLollipopChain { a, twist: composed, entries })
}

/// Independent check of a chain against `W`: the twist is feasible, each
/// level is an `(a, bound)`-lollipop with its witness, and levels nest.
pub fn validate_chain(w: &TwistedMatroid, chain: &NestedLollipopChain) -> Result<std::result::Result<(), String>> {
    if !w.feasible().contains(&chain.twist) {
        return Ok(Err("chain twist is not feasible".into()));
    }
    let wf: std::collections::BTreeSet<Subset> = w.feasible().iter().map(|&x| x ^ chain.twist).collect();
    for (i, e) in chain.entries.iter().enumerate() {
        let l = Lollipop {
            twisted: TwistedMatroid::from_family_unchecked(
                w.universe().clone(),
                e.e,
                wf.iter().copied().filter(|x| x.is_subset_of(e.e)),
            )?,
            s: e.s,
            z: e.z,
            c: e.c,
        };
        let r = validate_lollipop(&l, chain.a, e.bound)?;
        if !r.ok {
            return Ok(Err(format!("level {}: {}", i + 1, r.diagnostic)));
        }
        if let Some(next) = chain.entries.get(i + 1) {
            if !next.e.is_subset_of(e.c) {
                return Ok(Err(format!("E_{} is not inside C_{}", i + 2, i + 1)));
            }
        }
    }
    Ok(Ok(()))
}
