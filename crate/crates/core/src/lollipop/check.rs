//! Validators for lollipop witnesses. They read the feasible family directly
//! and use their own graph searches, so a bug in the producers' graph code
//! cannot hide from them.

use serde::Serialize;

use crate::error::Result;
use crate::subset::Subset;
use crate::twisted::TwistedMatroid;

use super::{Lollipop, LollipopMinor};

/// Adjacency of the graph of feasible pairs, by universe index.
pub(crate) fn pair_graph(w: &TwistedMatroid) -> Vec<Subset> {
    let mut adj = vec![Subset::EMPTY; w.universe().len()];
    for f in w.feasible() {
        if f.len() == 2 {
            let v = f.to_vec();
            adj[v[0]] = adj[v[0]].with(v[1]);
            adj[v[1]] = adj[v[1]].with(v[0]);
        }
    }
    adj
}

fn connected(adj: &[Subset], x: Subset) -> bool {
    let Some(start) = x.first() else {
        return true;
    };
    let mut seen = Subset::singleton(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in (adj[v] & x).iter() {
            if !seen.contains(u) {
                seen = seen.with(u);
                stack.push(u);
            }
        }
    }
    seen == x
}

/// Result of [`validate_lollipop`]: `failed` names the first failing
/// condition, `"(1)"` to `"(5)"`, or `"partition"` for a malformed witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LollipopCheck {
    pub ok: bool,
    pub failed: Option<String>,
    pub diagnostic: String,
}

impl LollipopCheck {
    fn pass() -> Self {
        LollipopCheck { ok: true, failed: None, diagnostic: "all five conditions hold".into() }
    }

    fn fail(cond: &str, msg: String) -> Self {
        LollipopCheck { ok: false, failed: Some(cond.into()), diagnostic: format!("{cond} {msg}") }
    }
}

/// Checks that `L` is an `(a, b)`-lollipop with its stored witness.
/// The branch-depth of the candy is computed only when `b > 0`.
pub fn validate_lollipop(l: &Lollipop, a: usize, b: usize) -> Result<LollipopCheck> {
    let w = &l.twisted;
    let (s, z, c) = (l.s, l.z, l.c);
    let e = w.ground();
    let zs = Subset::singleton(z);
    if !e.contains(z) || s.contains(z) || c.contains(z) || !s.is_disjoint(c) || (s | c | zs) != e {
        return Ok(LollipopCheck::fail("partition", "(S, {z}, C) does not partition E(L)".into()));
    }
    if s.len() < a {
        return Ok(LollipopCheck::fail("(1)", format!("|S| = {} is below a = {a}", s.len())));
    }
    let adj = pair_graph(w);
    if !connected(&adj, e) {
        return Ok(LollipopCheck::fail("(2)", "G(L) is disconnected".into()));
    }
    let stick = s | zs;
    let degree = |v: usize| (adj[v] & stick).len();
    let edges: usize = stick.iter().map(degree).sum::<usize>() / 2;
    let is_path = connected(&adj, stick)
        && edges + 1 == stick.len()
        && stick.iter().all(|v| degree(v) <= 2)
        && degree(z) <= 1;
    if !is_path {
        return Ok(LollipopCheck::fail("(3)", "G[S + z] is not a path ending at z".into()));
    }
    if c.is_empty() || !connected(&adj, c) {
        return Ok(LollipopCheck::fail("(4)", "G[C] is not connected".into()));
    }
    if c.iter().any(|v| !(adj[v] & s).is_empty()) {
        return Ok(LollipopCheck::fail("(4)", "C has a neighbour in S, so it is not a component of G - z".into()));
    }
    if b > 0 && !w.restrict(c)?.branch_depth_at_least(b)? {
        return Ok(LollipopCheck::fail("(5)", format!("L[C] has branch-depth below {b}")));
    }
    Ok(LollipopCheck::pass())
}

/// Checks that `found.lollipop.twisted` is `(W * F)[E]` for the recorded
/// twist `F` and `E = S + z + C`.
pub fn validate_lollipop_minor(source: &TwistedMatroid, found: &LollipopMinor) -> std::result::Result<(), String> {
    let f = found.twist;
    let l = &found.lollipop;
    if source.universe() != l.twisted.universe() {
        return Err("lollipop lives on a different universe".into());
    }
    if !source.feasible().contains(&f) {
        return Err(format!("twist {:?} is not feasible in the source", source.names(f)));
    }
    let e = l.twisted.ground();
    if !e.is_subset_of(source.ground()) {
        return Err("lollipop elements leave the source".into());
    }
    let expect: Vec<Subset> = source
        .feasible()
        .iter()
        .map(|&x| x ^ f)
        .filter(|x| x.is_subset_of(e))
        .collect();
    let mut expect = expect;
    expect.sort();
    let got: Vec<Subset> = l.twisted.feasible().iter().copied().collect();
    if expect != got {
        return Err("feasible family differs from (W * F)[E]".into());
    }
    Ok(())
}

pub(crate) fn neighbourhood(adj: &[Subset], v: usize) -> Subset {
    adj[v]
}

pub(crate) fn is_connected_set(adj: &[Subset], x: Subset) -> bool {
    connected(adj, x)
}
