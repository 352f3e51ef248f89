//! Lollipops: twisted matroids split into a stick (an induced path ending at
//! `z`) and a candy (a component of `G - z` of prescribed branch-depth), and
//! the procedures that grow a lollipop's stick until it yields a fan minor.
//!
//! Every producer returns a witness that the validators in this module
//! re-check without using producer code.
//!
//! The depth premises of the induction are far beyond any enumerable
//! matroid once `a >= 1` (`f_3(1, 0) = 19`). [`Rigor::Certified`] checks each
//! premise exactly and fails when it does not hold; [`Rigor::Opportunistic`]
//! runs the same constructions without checking depth premises, choosing the
//! largest component wherever the proofs choose a deep one. Outputs of both
//! modes go through the same validators.

mod bounds;
mod chain;
mod check;
mod step;

use serde::Serialize;

pub use bounds::{
    check_recursion_identities, f_value, g_rational, g_value, theorem_bound, to_usize, BoundParams,
    IdentityViolation,
};
pub use chain::{nest_lollipops, validate_chain, ChainEntry, NestedLollipopChain};
pub use check::{validate_lollipop, validate_lollipop_minor, LollipopCheck};
pub use step::{
    bridge, check_step_condition, find_small_circuit, induction_step, validate_bridge,
    validate_small_circuit, SmallCircuit, StepOutcome,
};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::twisted::{find_fan_certificate, twist_of, validate_fan_certificate, FanCertificate, TwistedMatroid};

/// How depth premises are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rigor {
    /// Every branch-depth premise is computed and enforced.
    Certified,
    /// Depth premises are not computed; components are chosen by size.
    Opportunistic,
}

/// A twisted matroid with a witness `(S, z, C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lollipop {
    pub twisted: TwistedMatroid,
    pub s: Subset,
    pub z: usize,
    pub c: Subset,
}

/// A lollipop found inside a twisted matroid `W`: `lollipop.twisted` equals
/// `(W * twist)[E(lollipop)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LollipopMinor {
    pub lollipop: Lollipop,
    pub twist: Subset,
}

/// Labels of a lollipop witness, for reports and certificate files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessNames {
    pub stick: Vec<String>,
    pub z: String,
    pub candy: Vec<String>,
}

impl Lollipop {
    pub fn new(twisted: TwistedMatroid, s: Subset, z: usize, c: Subset) -> Lollipop {
        Lollipop { twisted, s, z, c }
    }

    /// The candy `L[C]`.
    pub fn candy(&self) -> Result<TwistedMatroid> {
        self.twisted.restrict(self.c)
    }

    pub fn elements(&self) -> Subset {
        self.s.with(self.z) | self.c
    }

    /// The stick's vertices from its far end to `z`.
    pub fn stick_order(&self) -> Vec<usize> {
        let g = self.twisted.graph();
        let stick = self.s.with(self.z);
        let mut order = vec![self.z];
        let mut seen = Subset::singleton(self.z);
        let mut cur = self.z;
        while let Some(next) = ((g.neighbours(cur) & stick) - seen).first() {
            order.push(next);
            seen = seen.with(next);
            cur = next;
        }
        order.reverse();
        order
    }

    pub fn names(&self) -> WitnessNames {
        let u = self.twisted.universe();
        WitnessNames {
            stick: self.stick_order().into_iter().filter(|&v| v != self.z).map(|v| u.label(v).to_string()).collect(),
            z: u.label(self.z).to_string(),
            candy: u.names(self.c),
        }
    }
}

/// Components of `w[x]` by least element.
fn components_of(w: &TwistedMatroid, x: Subset) -> Vec<Subset> {
    w.graph().components_within(x)
}

/// The component the proofs would pick: under [`Rigor::Certified`] the
/// first one (by least element) whose restriction has branch-depth at least
/// `min_depth`; under [`Rigor::Opportunistic`] the largest, ties to the
/// least element.
pub(crate) fn pick_component(
    w: &TwistedMatroid,
    comps: &[Subset],
    min_depth: usize,
    rigor: Rigor,
) -> Result<Option<Subset>> {
    match rigor {
        Rigor::Certified => {
            for &c in comps {
                if w.restrict(c)?.branch_depth_at_least(min_depth)? {
                    return Ok(Some(c));
                }
            }
            Ok(None)
        }
        Rigor::Opportunistic => Ok(comps
            .iter()
            .copied()
            .filter(|c| !c.is_empty())
            .fold(None, |best: Option<Subset>, c| match best {
                Some(b) if b.len() >= c.len() => Some(b),
                _ => Some(c),
            })),
    }
}

/// `L * F` for feasible `F ⊆ C`; the witness is unchanged.
pub fn lollipop_twist_invariance(l: &Lollipop, f: Subset) -> Result<Lollipop> {
    if !f.is_subset_of(l.c) {
        return Err(Error::pre(format!(
            "twist {:?} is not inside the candy",
            l.twisted.names(f)
        )));
    }
    let twisted = l.twisted.twist(f)?;
    Ok(Lollipop { twisted, ..l.clone() })
}

/// A `(0, b)`-lollipop `W[C' + z]` with witness `(∅, z, C')`: `C` is a
/// component of depth at least `b + 1`, `z` its least element, and `C'` a
/// component of `W[C - z]` of depth at least `b`.
pub fn find_base_lollipop(w: &TwistedMatroid, b: usize, rigor: Rigor) -> Result<LollipopMinor> {
    if rigor == Rigor::Certified {
        let d = w.branch_depth()?;
        if d < b + 2 {
            return Err(Error::pre(format!("branch-depth is {d}, below b + 2 = {}", b + 2)));
        }
    }
    let comps = components_of(w, w.ground());
    let c = pick_component(w, &comps, b + 1, rigor)?
        .ok_or_else(|| Error::internal(format!("no component of branch-depth at least {}", b + 1)))?;
    let z = c.first().ok_or_else(|| Error::pre("empty twisted matroid"))?;
    let rest = c.without(z);
    if rest.is_empty() {
        return Err(Error::pre("every component is a single element"));
    }
    let inner = components_of(w, rest);
    let c2 = pick_component(w, &inner, b, rigor)?
        .ok_or_else(|| Error::internal(format!("no component of W[C - z] of branch-depth at least {b}")))?;
    let twisted = w.restrict(c2.with(z))?;
    Ok(LollipopMinor {
        lollipop: Lollipop { twisted, s: Subset::EMPTY, z, c: c2 },
        twist: Subset::EMPTY,
    })
}

/// Moves the stick along a shortest path from `z` into `C'`: with `x` the
/// path's vertex in `C'` and `z'` its predecessor, the result is
/// `L[S' + z' + C']` with `S' = S ∪ (V(P) \ {x, z'})`.
pub fn extend_lollipop(l: &Lollipop, c_prime: Subset, b_prime: usize, rigor: Rigor) -> Result<Lollipop> {
    if c_prime.is_empty() || !c_prime.is_subset_of(l.c) {
        return Err(Error::pre("C' must be a non-empty subset of the candy"));
    }
    let g = l.twisted.graph();
    if !g.is_connected_within(c_prime) {
        return Err(Error::pre("L[C'] is disconnected"));
    }
    if !(g.neighbours(l.z) & c_prime).is_empty() {
        return Err(Error::pre("z has a neighbour in C'"));
    }
    if rigor == Rigor::Certified && !l.twisted.restrict(c_prime)?.branch_depth_at_least(b_prime)? {
        return Err(Error::pre(format!("L[C'] has branch-depth below {b_prime}")));
    }
    let path = g
        .shortest_path(l.z, c_prime, l.c.with(l.z))
        .ok_or_else(|| Error::pre("no path from z to C' through the candy"))?;
    let n = path.len();
    debug_assert!(n >= 3);
    let z2 = path[n - 2];
    let s2 = l.s | Subset::from_indices(path[..n - 2].iter().copied());
    let twisted = l.twisted.restrict(s2.with(z2) | c_prime)?;
    Ok(Lollipop { twisted, s: s2, z: z2, c: c_prime })
}

/// An `(a, b)`-lollipop minor of `W`, following the induction on `a`.
/// `w` is clamped to at least 3.
pub fn find_lollipop(w_mat: &TwistedMatroid, a: usize, b: usize, w: usize, rigor: Rigor) -> Result<LollipopMinor> {
    let w = w.max(3);
    if rigor == Rigor::Certified {
        let bw = w_mat.branch_width()?;
        if bw > w {
            return Err(Error::pre(format!("branch-width is {bw}, above w = {w}")));
        }
        let need = f_value(w, a, b)?;
        let d = w_mat.branch_depth()?;
        if num::BigInt::from(d) < need {
            return Err(Error::pre(format!("branch-depth is {d}, below f_{w}({a}, {b}) = {need}")));
        }
    }
    find_lollipop_inner(w_mat, a, b, w, rigor)
}

fn find_lollipop_inner(w_mat: &TwistedMatroid, a: usize, b: usize, w: usize, rigor: Rigor) -> Result<LollipopMinor> {
    if a == 0 {
        return find_base_lollipop(w_mat, b, rigor);
    }
    let ell = 3 * w - 2;
    let gs: Vec<usize> = match rigor {
        Rigor::Certified => (0..=ell)
            .map(|i| to_usize(&g_value(a, b, w, i)?))
            .collect::<Result<_>>()?,
        Rigor::Opportunistic => vec![0; ell + 1],
    };
    let finder = |m: &TwistedMatroid, target: usize| find_lollipop_inner(m, a - 1, target, w, rigor);
    let chain = nest_lollipops(w_mat, a - 1, &gs, &finder, rigor)?;
    let out = induction_step(w_mat, &chain, b, w, rigor)?;
    let li = chain.lollipop(w_mat, out.level)?;
    let twisted_li = lollipop_twist_invariance(&li, out.f_hat)?;
    let lollipop = extend_lollipop(&twisted_li, out.c, b, rigor)?;
    Ok(LollipopMinor { lollipop, twist: chain.twist ^ out.f_hat })
}

/// How [`find_fan_minor`] searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Exhaustive induced-path search in fundamental graphs.
    Direct,
    /// The lollipop induction on `twist_of(M, B)` with `a = 2n`, `b = 0`.
    Constructive(Rigor),
}

/// A certificate that `M` has an `M(F_n)` minor, or `None` when the direct
/// search proves there is none.
pub fn find_fan_minor(m: &Matroid, n: usize, strategy: Strategy) -> Result<Option<FanCertificate>> {
    match strategy {
        Strategy::Direct => find_fan_certificate(m, n),
        Strategy::Constructive(rigor) => {
            if n == 0 {
                return Err(Error::pre("n must be positive"));
            }
            let base = m.some_base();
            let w_mat = twist_of(m, base)?;
            let bw = crate::decomposition::branch_width(m)?.value;
            let found = find_lollipop(&w_mat, 2 * n, 0, bw, rigor)?;
            let cert = lollipop_fan_certificate(base, &found, n)?;
            validate_fan_certificate(m, &cert).map_err(Error::Internal)?;
            Ok(Some(cert))
        }
    }
}

/// The stick of a `(2n, 0)`-lollipop found in `M * B` as a fan certificate
/// for `M`: the stick is an induced path of `G(M, B △ F)`.
pub fn lollipop_fan_certificate(base: Subset, found: &LollipopMinor, n: usize) -> Result<FanCertificate> {
    let b = base ^ found.twist;
    let order = found.lollipop.stick_order();
    let need = 2 * n - 1;
    let start = if b.contains(order[0]) { 0 } else { 1 };
    if order.len() < start + need {
        return Err(Error::pre(format!("stick of {} vertices is too short for n = {n}", order.len())));
    }
    Ok(FanCertificate { n, base: b, path: order[start..start + need].to_vec() })
}

#[cfg(test)]
mod tests;
