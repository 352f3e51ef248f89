//! Seeded property campaigns over every module, with machine-readable
//! reports. Each check draws its instances from its own generator derived
//! from the campaign seed, so a report depends only on `(suite, seed,
//! cases, mutant)`.

use std::fmt;
use std::str::FromStr;

use rand::seq::IteratorRandom;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::decomposition::{
    branch_depth, branch_width, decomposition_radius, decomposition_width, find_balanced_separation,
    graft_decompositions, Decomposition, Piece,
};
use crate::error::{Error, Result};
use crate::gen::{cycles_of, Generator};
use crate::io::{MatroidFile, TwistedFile};
use crate::lollipop::{
    bridge, check_recursion_identities, check_step_condition, extend_lollipop, find_base_lollipop,
    find_lollipop, find_small_circuit, induction_step, nest_lollipops, validate_bridge, validate_chain,
    validate_lollipop, validate_lollipop_minor, validate_small_circuit, LollipopMinor, Rigor,
};
use crate::matroid::{connfunction_minor_bounds, is_isomorphic, Matroid};
use crate::quasigraphic::{
    bicircular_fan, branch_width_bound_check, check_circuit_axioms, validate_tripartition, QuasiGraphicMatroid,
    Tripartition,
};
use crate::subset::Subset;
use crate::twisted::{
    associated_matroids, matching_feasibility, pivot_agrees, pivot_exact, pivot_predict, twist_of,
    verify_twisted_axioms, TwistedMatroid,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Connectivity,
    Twisted,
    Lollipop,
    Quasigraphic,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Axioms,
        Suite::Connectivity,
        Suite::Twisted,
        Suite::Lollipop,
        Suite::Quasigraphic,
        Suite::Bounds,
    ];

    /// Instances per check when no count is given.
    pub fn default_cases(self) -> usize {
        match self {
            Suite::Axioms | Suite::Twisted => 1000,
            Suite::Connectivity => 500,
            Suite::Lollipop => 3,
            Suite::Quasigraphic => 300,
            Suite::Bounds => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Connectivity => "connectivity",
            Suite::Twisted => "twisted",
            Suite::Lollipop => "lollipop",
            Suite::Quasigraphic => "quasigraphic",
            Suite::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// A deliberate corruption applied to the first instance of a check, to
/// confirm the suite can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutant {
    /// Adds an odd set to the feasible family of the first twisted matroid.
    Family,
    /// Raises one rank value of the first matroid's rank table.
    Rank,
}

impl FromStr for Mutant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mutant> {
        match s {
            "family" => Ok(Mutant::Family),
            "rank" => Ok(Mutant::Rank),
            _ => Err(Error::Parse(format!("unknown mutant {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    pub cases: Option<usize>,
    pub mutant: Option<Mutant>,
}

impl SuiteConfig {
    pub fn new(suite: Suite, seed: u64) -> SuiteConfig {
        SuiteConfig { suite, seed, cases: None, mutant: None }
    }

    pub fn cases(self, n: usize) -> SuiteConfig {
        SuiteConfig { cases: Some(n), ..self }
    }

    pub fn mutant(self, m: Mutant) -> SuiteConfig {
        SuiteConfig { mutant: Some(m), ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub instances: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub check: String,
    pub instance: usize,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutant: Option<Mutant>,
    pub passed: bool,
    pub checks: Vec<CheckSummary>,
    /// At most [`MAX_RECORDED`] per check.
    pub violations: Vec<Violation>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn total_violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }
}

pub const MAX_RECORDED: usize = 5;

struct Campaign {
    seed: u64,
    checks: Vec<CheckSummary>,
    violations: Vec<Violation>,
}

/// One check in progress.
struct Check<'a> {
    campaign: &'a mut Campaign,
    index: usize,
    gen: Generator,
}

impl Campaign {
    fn check(&mut self, name: &str) -> Check<'_> {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in name.bytes() {
            h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
        }
        let gen = Generator::new(self.seed ^ h);
        self.checks.push(CheckSummary { name: name.to_string(), instances: 0, violations: 0 });
        let index = self.checks.len() - 1;
        Check { campaign: self, index, gen }
    }
}

impl Check<'_> {
    fn pass(&mut self) {
        self.campaign.checks[self.index].instances += 1;
    }

    fn fail(&mut self, detail: impl Into<String>, witness: Option<Value>) {
        let summary = &mut self.campaign.checks[self.index];
        summary.instances += 1;
        summary.violations += 1;
        if summary.violations <= MAX_RECORDED {
            let check = summary.name.clone();
            let instance = summary.instances - 1;
            self.campaign.violations.push(Violation { check, instance, detail: detail.into(), witness });
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>, witness: impl FnOnce() -> Option<Value>) {
        match outcome {
            Ok(()) => self.pass(),
            Err(d) => self.fail(d, witness()),
        }
    }

    fn instance(&self) -> usize {
        self.campaign.checks[self.index].instances
    }
}

fn matroid_witness(m: &Matroid) -> Option<Value> {
    MatroidFile::from_matroid(m).ok().and_then(|f| serde_json::to_value(f).ok())
}

fn twisted_witness(w: &TwistedMatroid) -> Option<Value> {
    serde_json::to_value(TwistedFile::from_twisted(w)).ok()
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let cases = cfg.cases.unwrap_or_else(|| cfg.suite.default_cases());
    let mut c = Campaign { seed: cfg.seed, checks: Vec::new(), violations: Vec::new() };
    match cfg.suite {
        Suite::Axioms => axioms(&mut c, cases, cfg.mutant)?,
        Suite::Connectivity => connectivity(&mut c, cases)?,
        Suite::Twisted => twisted(&mut c, cases, cfg.mutant)?,
        Suite::Lollipop => lollipop(&mut c, cases)?,
        Suite::Quasigraphic => quasigraphic(&mut c, cases)?,
        Suite::Bounds => bounds(&mut c)?,
    }
    let passed = c.checks.iter().all(|k| k.violations == 0);
    Ok(SuiteReport {
        suite: cfg.suite,
        seed: cfg.seed,
        cases,
        mutant: cfg.mutant,
        passed,
        checks: c.checks,
        violations: c.violations,
    })
}

fn rank_table(m: &Matroid) -> Vec<usize> {
    (0..1u32 << m.len()).map(|x| m.r(Subset(x))).collect()
}

fn first_failure(n: usize, mut bad: impl FnMut(u32) -> Option<String>) -> std::result::Result<(), String> {
    match (0..1u32 << n).find_map(&mut bad) {
        Some(d) => Err(d),
        None => Ok(()),
    }
}

// ---------------------------------------------------------------- axioms

fn axioms(c: &mut Campaign, cases: usize, mutant: Option<Mutant>) -> Result<()> {
    let mut ck = c.check("rank-and-connectivity-axioms");
    let mut pending = mutant == Some(Mutant::Rank);
    for _ in 0..cases {
        let m = ck.gen.any_matroid(8);
        let n = m.len();
        let full = (1u32 << n) - 1;
        let mut t = rank_table(&m);
        if pending && n > 0 {
            pending = false;
            let x = ck.gen.rng().gen_range(1..=full) as usize;
            t[x] += 1;
        }
        let lam = |x: u32| t[x as usize] as i64 + t[(full ^ x) as usize] as i64 - t[full as usize] as i64;
        let bases = m.bases()?;
        let dual = m.dual();
        let double = dual.dual();
        let outcome = (|| {
            if t[0] != 0 {
                return Err("r(∅) ≠ 0".to_string());
            }
            first_failure(n, |x| {
                for e in (0..n).filter(|&e| x >> e & 1 == 0) {
                    let (a, b) = (t[x as usize], t[(x | 1 << e) as usize]);
                    if b < a || b > a + 1 {
                        return Some(format!("r jumps from {a} to {b} adding {e} to {:?}", Subset(x)));
                    }
                }
                let from_bases = bases.iter().map(|b| (*b & Subset(x)).len()).max().unwrap_or(0);
                if from_bases != t[x as usize] {
                    return Some(format!("r({:?}) = {} but bases give {from_bases}", Subset(x), t[x as usize]));
                }
                for y in x + 1..=full {
                    if t[x as usize] + t[y as usize] < t[(x | y) as usize] + t[(x & y) as usize] {
                        return Some(format!("submodularity fails at {:?}, {:?}", Subset(x), Subset(y)));
                    }
                    if lam(x) + lam(y) < lam(x | y) + lam(x & y) {
                        return Some(format!("F3 fails at {:?}, {:?}", Subset(x), Subset(y)));
                    }
                }
                let l = lam(x);
                if l < 0 || l > x.count_ones() as i64 {
                    return Some(format!("F1 fails: λ({:?}) = {l}", Subset(x)));
                }
                if l != lam(full ^ x) {
                    return Some(format!("F2 fails at {:?}", Subset(x)));
                }
                if m.lambda(Subset(x)).ok()? as i64 != l {
                    return Some(format!("lambda disagrees with the rank table at {:?}", Subset(x)));
                }
                let dl = dual.lambda(Subset(x)).ok()? as i64;
                if dl != l {
                    return Some(format!("λ* = {dl} but λ = {l} at {:?}", Subset(x)));
                }
                let star = x.count_ones() as usize + t[(full ^ x) as usize] - t[full as usize];
                if dual.r(Subset(x)) != star {
                    return Some(format!("dual rank wrong at {:?}", Subset(x)));
                }
                if double.r(Subset(x)) != t[x as usize] {
                    return Some(format!("dual of dual differs at {:?}", Subset(x)));
                }
                None
            })
        })();
        ck.record(outcome, || matroid_witness(&m));
    }

    let mut ck = c.check("minor-rank");
    for _ in 0..cases {
        let m = ck.gen.any_matroid(8);
        let full = m.full();
        let del = ck.gen.subset(full);
        let con = ck.gen.subset(full - del);
        let minor = m.minor(del, con)?;
        let kept = minor.as_minor().expect("minor view").kept();
        let t = rank_table(&m);
        let indep = |s: Subset| t[s.bits() as usize] == s.len();
        let mut j = Subset::EMPTY;
        for e in con {
            if indep(j.with(e)) {
                j = j.with(e);
            }
        }
        let outcome = first_failure(kept.len(), |local| {
            let y = Subset(local).expand(kept);
            let brute = y.submasks().filter(|&i| indep(i | j)).map(Subset::len).max().unwrap_or(0);
            let got = minor.r(Subset(local));
            (got != brute).then(|| format!("minor rank of {y:?} is {got}, brute force gives {brute}"))
        });
        ck.record(outcome, || Some(json!({ "matroid": matroid_witness(&m), "deleted": del, "contracted": con })));
    }
    Ok(())
}

// ---------------------------------------------------------- connectivity

fn connectivity(c: &mut Campaign, cases: usize) -> Result<()> {
    let mut ck = c.check("minor-connectivity-bounds");
    for _ in 0..cases {
        let m = ck.gen.any_matroid(8);
        let full = m.full();
        let del = ck.gen.subset(full);
        let con = ck.gen.subset(full - del);
        let x = ck.gen.subset(full);
        let n = m.minor(del, con)?;
        let kept = full - del - con;
        let b = connfunction_minor_bounds(&m, &n, x)?;
        let lam_n = n.lambda((x & kept).compress(kept))?;
        let outcome = (|| {
            let first = m.lambda(x & kept)? <= m.lambda(kept)? + lam_n;
            let second = m.lambda(x)? <= lam_n + (del | con).len();
            Ok::<_, Error>(match (first, second, b.holds()) {
                (true, true, (true, true)) => Ok(()),
                (f, s, h) => Err(format!("first {f}, second {s}, reported {h:?} for X = {x:?}")),
            })
        })()?;
        ck.record(outcome, || Some(json!({ "matroid": matroid_witness(&m), "deleted": del, "contracted": con, "x": x })));
    }

    let mut ck = c.check("balanced-separation");
    while ck.instance() < cases {
        let m = ck.gen.any_matroid(8);
        if m.len() < 4 {
            continue;
        }
        let full = m.full();
        let k = ck.gen.rng().gen_range(1..=(m.len() - 1) / 3);
        let mut z = ck.gen.subset(full);
        while z.len() < 3 * k + 1 {
            let e = (full - z).iter().choose(ck.gen.rng()).expect("room left");
            z = z.with(e);
        }
        let w = branch_width(&m)?.value;
        let (x, y) = find_balanced_separation(&m, z, k, w)?;
        let outcome = if x | y != full || !x.is_disjoint(y) {
            Err(format!("{x:?}, {y:?} is not a partition"))
        } else if m.lambda(x)? >= w {
            Err(format!("λ({x:?}) = {} is not below {w}", m.lambda(x)?))
        } else if (z & x).len() <= k || (z & y).len() <= k {
            Err(format!("Z = {z:?} is not split with more than {k} on each side"))
        } else {
            Ok(())
        };
        ck.record(outcome, || Some(json!({ "matroid": matroid_witness(&m), "z": z, "k": k, "w": w })));
    }

    let mut ck = c.check("component-depth-dichotomy");
    for _ in 0..cases {
        let parts = ck.gen.rng().gen_range(1..=3);
        let mut m = Matroid::free(Vec::<String>::new())?;
        for _ in 0..parts {
            let room = 8 - m.len();
            if room == 0 {
                break;
            }
            let p = ck.gen.any_matroid(room.min(5));
            m = relabel_sum(&m, &p)?;
        }
        let k = m
            .components()
            .into_iter()
            .map(|b| Ok(branch_depth(&m.restrict(b)?)?.value))
            .collect::<Result<Vec<usize>>>()?
            .into_iter()
            .max()
            .unwrap_or(0);
        let d = branch_depth(&m)?.value;
        let outcome = if d == k || d == k + 1 {
            Ok(())
        } else {
            Err(format!("branch-depth {d} with component maximum {k}"))
        };
        ck.record(outcome, || matroid_witness(&m));
    }

    let mut ck = c.check("graft-bounds");
    while ck.instance() < cases {
        let m = ck.gen.any_matroid(8);
        if m.len() < 2 {
            continue;
        }
        let outcome = if ck.instance() % 2 == 0 {
            graft_one_side(&mut ck.gen, &m)?
        } else {
            graft_two_minors(&mut ck.gen, &m)?
        };
        let Some(outcome) = outcome else { continue };
        ck.record(outcome, || matroid_witness(&m));
    }
    Ok(())
}

fn relabel_sum(a: &Matroid, b: &Matroid) -> Result<Matroid> {
    let n = a.len();
    let labels: Vec<String> = (0..b.len()).map(|i| (n + i + 1).to_string()).collect();
    a.direct_sum(&b.relabel(crate::subset::GroundSet::new(labels)?)?)
}

/// A decomposition of `N` of width at most the largest component
/// branch-depth `m` and radius at most `m + 1`, grafted from optimal
/// component decompositions. `None` for a single element.
fn component_graft(n: &Matroid) -> Result<(Option<Decomposition>, usize)> {
    let comps = n.components();
    let mut pieces = Vec::with_capacity(comps.len());
    let mut depth = 0;
    for b in comps {
        let cert = branch_depth(&n.restrict(b)?)?;
        depth = depth.max(cert.value);
        pieces.push(Piece { block: b, decomposition: cert.decomposition().cloned() });
    }
    match pieces.len() {
        0 => Ok((None, 0)),
        1 => Ok((pieces.pop().expect("one piece").decomposition, depth)),
        _ => Ok((Some(graft_decompositions(n, &pieces, Subset::EMPTY)?.decomposition), depth)),
    }
}

/// Components of `M \ X / Y` joined to a root carrying `X ∪ Y`: width at
/// most `d + |X ∪ Y|`, radius at most `d + 1`.
fn graft_one_side(gen: &mut Generator, m: &Matroid) -> Result<Option<std::result::Result<(), String>>> {
    let full = m.full();
    let x = gen.subset(full);
    let y = gen.subset(full - x);
    let extra = x | y;
    if extra.is_empty() || extra == full {
        return Ok(None);
    }
    let n = m.minor(x, y)?;
    let kept = full - extra;
    let mut pieces = Vec::new();
    let (mut width, mut radius) = (0, 0);
    for b in n.components() {
        let cert = branch_depth(&n.restrict(b)?)?;
        if let Some(d) = cert.decomposition() {
            width = width.max(decomposition_width(&n.restrict(b)?, d)?);
            radius = radius.max(decomposition_radius(d));
        }
        pieces.push(Piece { block: b.expand(kept), decomposition: cert.decomposition().cloned() });
    }
    let g = graft_decompositions(m, &pieces, extra)?;
    let real_width = decomposition_width(m, &g.decomposition)?;
    let real_radius = decomposition_radius(&g.decomposition);
    Ok(Some(if (real_width, real_radius) != (g.width, g.radius) {
        Err(format!("graft reports ({}, {}) but measures ({real_width}, {real_radius})", g.width, g.radius))
    } else if real_width > width + extra.len() || real_radius > radius + 1 {
        Err(format!(
            "X ∪ Y = {extra:?}: width {real_width}, radius {real_radius} from pieces of width {width}, radius {radius}"
        ))
    } else {
        Ok(())
    }))
}

/// Minors `N_1`, `N_2` on a partition `(A, B)` of `E(M)`: the two-piece
/// graft has width at most `m + λ(A)` and radius at most `m + 2`, and
/// `bd(M) <= max(m + λ(A), m + 2)`.
fn graft_two_minors(gen: &mut Generator, m: &Matroid) -> Result<Option<std::result::Result<(), String>>> {
    let full = m.full();
    let a = gen.subset(full);
    let b = full - a;
    if a.is_empty() || b.is_empty() {
        return Ok(None);
    }
    let side = |gen: &mut Generator, keep: Subset| -> Result<Matroid> {
        if gen.rng().gen_bool(0.5) {
            m.delete(full - keep)
        } else {
            m.contract(full - keep)
        }
    };
    let n1 = side(gen, a)?;
    let n2 = side(gen, b)?;
    let (d1, m1) = component_graft(&n1)?;
    let (d2, m2) = component_graft(&n2)?;
    let depth = m1.max(m2);
    let k = m.lambda(a)?;
    let pieces = [Piece { block: a, decomposition: d1 }, Piece { block: b, decomposition: d2 }];
    let g = graft_decompositions(m, &pieces, Subset::EMPTY)?;
    let width = decomposition_width(m, &g.decomposition)?;
    let radius = decomposition_radius(&g.decomposition);
    let bd = branch_depth(m)?.value;
    Ok(Some(if width > depth + k || radius > depth + 2 {
        Err(format!("A = {a:?}: width {width}, radius {radius} with m = {depth}, λ(A) = {k}"))
    } else if bd > (depth + k).max(depth + 2) {
        Err(format!("branch-depth {bd} exceeds max(m + k, m + 2) with m = {depth}, k = {k}"))
    } else {
        Ok(())
    }))
}

// --------------------------------------------------------------- twisted

fn random_base(gen: &mut Generator, m: &Matroid) -> Result<Subset> {
    Ok(m.bases()?.into_iter().choose(gen.rng()).expect("every matroid has a base"))
}

fn random_feasible(gen: &mut Generator, w: &TwistedMatroid) -> Subset {
    *w.feasible().iter().choose(gen.rng()).expect("∅ is feasible")
}

fn random_twisted(gen: &mut Generator, max_n: usize) -> Result<(Matroid, Subset, TwistedMatroid)> {
    let m = gen.any_matroid(max_n);
    let b = random_base(gen, &m)?;
    let w = twist_of(&m, b)?;
    Ok((m, b, w))
}

fn twisted(c: &mut Campaign, cases: usize, mutant: Option<Mutant>) -> Result<()> {
    let mut ck = c.check("twisted-axioms");
    let mut pending = mutant == Some(Mutant::Family);
    for _ in 0..cases {
        let (m, b, mut w) = random_twisted(&mut ck.gen, 8)?;
        if pending && !w.is_empty() {
            pending = false;
            let e = w.ground().first().expect("non-empty");
            let universe = w.universe().clone();
            let ground = w.ground();
            let family = w.feasible().iter().copied().chain([Subset::singleton(e)]);
            w = TwistedMatroid::from_family_unchecked(universe, ground, family.collect::<Vec<_>>())?;
        }
        let r = verify_twisted_axioms(&w);
        let base_set: std::collections::BTreeSet<Subset> = m.bases()?.into_iter().collect();
        let outcome = if !r.all() {
            Err(format!("axioms fail: {}", r.failure.clone().unwrap_or_default()))
        } else if let Some(x) = w.ground().submasks().find(|&x| w.is_feasible(x) != base_set.contains(&(x ^ b))) {
            Err(format!("membership of {x:?} disagrees with the base test"))
        } else {
            Ok(())
        };
        ck.record(outcome, || twisted_witness(&w));
    }

    let mut ck = c.check("twist-restriction-transitivity");
    for _ in 0..cases {
        let (_, _, w) = random_twisted(&mut ck.gen, 7)?;
        let f = random_feasible(&mut ck.gen, &w);
        let f2 = random_feasible(&mut ck.gen, &w);
        let x = ck.gen.subset(w.ground());
        let wf = w.twist(f)?;
        let inner = wf.restrict(x)?;
        let f3 = random_feasible(&mut ck.gen, &inner);
        let x2 = ck.gen.subset(x);
        let expected_wf: std::collections::BTreeSet<Subset> = w.feasible().iter().map(|&s| s ^ f).collect();
        let expected_r: std::collections::BTreeSet<Subset> =
            wf.feasible().iter().copied().filter(|s| s.is_subset_of(x)).collect();
        let lhs = w.twist(f ^ f3)?.restrict(x2)?;
        let rhs = inner.twist(f3)?.restrict(x2)?;
        let outcome = if *wf.feasible() != expected_wf {
            Err(format!("W * {f:?} is not F △ {f:?}"))
        } else if wf.twist(f)? != w {
            Err(format!("twisting twice by {f:?} is not the identity"))
        } else if wf.twist(f ^ f2)? != w.twist(f2)? {
            Err(format!("(W * {f:?}) * ({f:?} △ {f2:?}) ≠ W * {f2:?}"))
        } else if *inner.feasible() != expected_r || inner.ground() != x {
            Err(format!("restriction to {x:?} is wrong"))
        } else if lhs != rhs {
            Err(format!("transitivity fails for F = {f:?}, X = {x:?}, F' = {f3:?}, X' = {x2:?}"))
        } else {
            Ok(())
        };
        ck.record(outcome, || twisted_witness(&w));
    }

    let mut ck = c.check("minor-correspondence");
    for _ in 0..cases.div_ceil(10) {
        let (_, _, w) = random_twisted(&mut ck.gen, 6)?;
        let f = random_feasible(&mut ck.gen, &w);
        let x = ck.gen.subset(w.ground());
        let u = w.t_minor(f, x)?;
        let outer = associated_matroids(&w)?;
        let inner = associated_matroids(&u)?;
        let local = x.compress(w.ground());
        let rest = Subset::full(w.len()) - local;
        let is_minor_on = |big: &Matroid, small: &Matroid| {
            rest.submasks().any(|del| {
                big.minor(del, rest - del)
                    .map(|n| n.same_rank_function(small))
                    .unwrap_or(false)
            })
        };
        let missing = outer
            .iter()
            .find(|q| !inner.iter().any(|p| is_minor_on(&q.matroid, &p.matroid)));
        let outcome = match missing {
            None => Ok(()),
            Some(q) => Err(format!(
                "the matroid of W with base {:?} has no minor associated with (W * {f:?})[{x:?}]",
                q.base
            )),
        };
        ck.record(outcome, || twisted_witness(&w));
    }

    let mut ck = c.check("pivot-prediction");
    while ck.instance() < cases {
        let m = ck.gen.any_matroid(8);
        let b = random_base(&mut ck.gen, &m)?;
        let g = m.fundamental_graph(b)?;
        let Some(&(u, v)) = g.edges().iter().choose(ck.gen.rng()) else { continue };
        let p = pivot_predict(&g, u, v)?;
        let exact = pivot_exact(&m, b, u, v)?;
        let outcome = if pivot_agrees(&p, &exact) {
            Ok(())
        } else {
            Err(format!("pivot on ({u}, {v}) from base {b:?} disagrees with the exact graph"))
        };
        ck.record(outcome, || Some(json!({ "matroid": matroid_witness(&m), "base": b, "pivot": [u, v] })));
    }

    let mut ck = c.check("matching-implications");
    for _ in 0..cases {
        let (_, _, w) = random_twisted(&mut ck.gen, 8)?;
        let outcome = match matching_check(&w)? {
            None => Ok(()),
            Some(x) => Err(format!("matching implications fail at {x:?}")),
        };
        ck.record(outcome, || twisted_witness(&w));
    }
    Ok(())
}

/// The first `X` where a feasible set lacks a perfect matching in `G(W)[X]`
/// or a uniquely matchable set is infeasible.
pub fn matching_check(w: &TwistedMatroid) -> Result<Option<Subset>> {
    for x in w.ground().submasks() {
        if !matching_feasibility(w, x)?.implications_hold() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

// -------------------------------------------------------------- lollipop

/// Fans twisted by their spokes, `U_{r,2r}` twisted by a base, and
/// `U_{2,4}` plus coloops.
pub fn crafted_lollipop_instances() -> Result<Vec<(String, TwistedMatroid)>> {
    let mut out = Vec::new();
    for n in 3..=8 {
        let m = Matroid::fan(n)?;
        out.push((format!("fan-{n}"), twist_of(&m, Subset::full(n))?));
    }
    for r in 2..=5 {
        let m = Matroid::uniform(r, 2 * r)?;
        out.push((format!("uniform-{r}-{}", 2 * r), twist_of(&m, Subset::full(r))?));
    }
    let m = Matroid::uniform(2, 4)?.direct_sum(&Matroid::free(["c1", "c2", "c3", "c4"])?)?;
    out.push(("u24-plus-coloops".into(), twist_of(&m, m.some_base())?));
    Ok(out)
}

fn lollipop(c: &mut Campaign, cases: usize) -> Result<()> {
    let mut instances = Vec::new();
    {
        let mut ck = c.check("crafted-instances");
        for (name, w) in crafted_lollipop_instances()? {
            for copy in 0..cases.max(1) {
                let f = if copy == 0 { Subset::EMPTY } else { random_feasible(&mut ck.gen, &w) };
                let tw = w.twist(f)?;
                let r = verify_twisted_axioms(&tw);
                let outcome = if r.all() { Ok(()) } else { Err(format!("{name} * {f:?} is not twisted")) };
                ck.record(outcome, || twisted_witness(&tw));
                instances.push((name.clone(), tw));
            }
        }
    }

    let check_minor = |w: &TwistedMatroid, found: &LollipopMinor, a: usize, b: usize| -> Result<std::result::Result<(), String>> {
        let v = validate_lollipop(&found.lollipop, a, b)?;
        if !v.ok {
            return Ok(Err(format!("({a}, {b})-lollipop check {:?}: {}", v.failed, v.diagnostic)));
        }
        Ok(validate_lollipop_minor(w, found))
    };

    let mut base_outputs = Vec::new();
    {
        let mut ck = c.check("find-base-lollipop");
        for (_, w) in &instances {
            for (b, rigor) in [(0, Rigor::Certified), (1, Rigor::Certified), (0, Rigor::Opportunistic)] {
                let Ok(found) = find_base_lollipop(w, b, rigor) else { continue };
                let outcome = check_minor(w, &found, 0, if rigor == Rigor::Certified { b } else { 0 })?;
                ck.record(outcome, || twisted_witness(w));
                base_outputs.push((w.clone(), found));
            }
        }
    }

    {
        let mut ck = c.check("extend-lollipop");
        for (_, found) in &base_outputs {
            let l = &found.lollipop;
            let g = l.twisted.graph();
            let room = l.c - g.neighbours(l.z);
            for cp in g.components_within(room) {
                for (bp, rigor) in [(0, Rigor::Certified), (1, Rigor::Certified)] {
                    let Ok(out) = extend_lollipop(l, cp, bp, rigor) else { continue };
                    let v = validate_lollipop(&out, 1, bp)?;
                    let outcome = if !v.ok {
                        Err(format!("extension fails {:?}: {}", v.failed, v.diagnostic))
                    } else if out.s.len() < l.s.len() + 1 {
                        Err("stick did not grow".into())
                    } else {
                        Ok(())
                    };
                    ck.record(outcome, || twisted_witness(&l.twisted));
                }
            }
        }
    }

    let mut chains = Vec::new();
    {
        let mut ck = c.check("nest-lollipops");
        for (_, w) in &instances {
            let certified = |m: &TwistedMatroid, g: usize| find_base_lollipop(m, g, Rigor::Certified);
            let opportunistic = |m: &TwistedMatroid, g: usize| find_base_lollipop(m, g, Rigor::Opportunistic);
            let attempts: [(&[usize], Rigor); 4] = [
                (&[2, 0], Rigor::Certified),
                (&[4, 2, 0], Rigor::Certified),
                (&[0; 3], Rigor::Opportunistic),
                (&[0; 8], Rigor::Opportunistic),
            ];
            for (gs, rigor) in attempts {
                let finder: &dyn Fn(&TwistedMatroid, usize) -> Result<LollipopMinor> =
                    if rigor == Rigor::Certified { &certified } else { &opportunistic };
                let Ok(chain) = nest_lollipops(w, 0, gs, finder, rigor) else { continue };
                let outcome = if chain.len() + 1 != gs.len() {
                    Err(format!("chain has {} levels for {} bounds", chain.len(), gs.len()))
                } else {
                    validate_chain(w, &chain)?
                };
                ck.record(outcome, || twisted_witness(w));
                if chain.len() == 7 {
                    chains.push((w.clone(), chain));
                }
            }
        }
    }

    {
        let mut ck = c.check("bridge");
        for (w, found) in &base_outputs {
            let cc = found.lollipop.c;
            let z = w.ground() - cc;
            if z.len() < 4 {
                continue;
            }
            let k = (z.len() - 1) / 3;
            let Ok((x, y)) = bridge(w, z, cc, k, 0, 3, Rigor::Opportunistic) else { continue };
            let outcome = validate_bridge(w, z, cc, k, 0, 3, x, y)?;
            ck.record(outcome, || twisted_witness(w));
        }
    }

    {
        let mut ck = c.check("find-small-circuit");
        for (_, w) in &instances {
            let candidates: Vec<Subset> = std::iter::once(w.ground())
                .chain((0..4).map(|_| ck.gen.subset(w.ground())))
                .collect();
            for x in candidates {
                let Ok(sc) = find_small_circuit(w, x, 3) else { continue };
                let outcome = validate_small_circuit(w, x, 3, &sc)?;
                ck.record(outcome, || twisted_witness(w));
            }
        }
    }

    {
        let mut ck = c.check("induction-step");
        for (w, chain) in &chains {
            let Ok(out) = induction_step(w, chain, 0, 3, Rigor::Opportunistic) else { continue };
            let outcome = check_step_condition(w, chain, &out, 0)?;
            ck.record(outcome, || twisted_witness(w));
        }
    }

    {
        let mut ck = c.check("find-lollipop");
        for (_, w) in &instances {
            for (a, rigor) in [(0, Rigor::Certified), (0, Rigor::Opportunistic), (1, Rigor::Opportunistic)] {
                let Ok(found) = find_lollipop(w, a, 0, 3, rigor) else { continue };
                let outcome = check_minor(w, &found, a, 0)?;
                ck.record(outcome, || twisted_witness(w));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------- quasigraphic

fn quasigraphic(c: &mut Campaign, cases: usize) -> Result<()> {
    let mut ck = c.check("quasigraphic-instances");
    for _ in 0..cases {
        let v = ck.gen.rng().gen_range(1..=5);
        let e = ck.gen.rng().gen_range(1..=8);
        let g = ck.gen.graph(v, e, true);
        let t = ck.gen.tripartition(&g);
        let witness = || serde_json::to_value(tripartition_witness(&t)).ok();
        let report = validate_tripartition(&t)?;
        if !report.proper {
            ck.fail(format!("generated tripartition is not proper: {:?}", report.diagnostic), witness());
            continue;
        }
        let q = QuasiGraphicMatroid::new(t.clone())?;
        let outcome = quasi_checks(&q)?;
        ck.record(outcome, witness);
    }

    let mut ck = c.check("graphic-specialization");
    for _ in 0..cases {
        let v = ck.gen.rng().gen_range(1..=5);
        let e = ck.gen.rng().gen_range(0..=8);
        let g = ck.gen.graph(v, e, true);
        let t = Tripartition::graphic(g.clone(), crate::subset::GroundSet::numbered(e))?;
        let q = QuasiGraphicMatroid::new(t)?;
        let mut expected = cycles_of(&g);
        expected.sort();
        let mut got = q.circuits().to_vec();
        got.sort();
        let outcome = if got != expected {
            Err("circuits are not the cycles".into())
        } else {
            first_failure(e, |x| {
                (q.rank_formula(Subset(x)) != g.forest_rank(Subset(x)))
                    .then(|| format!("rank differs from the cycle matroid at {:?}", Subset(x)))
            })
        };
        ck.record(outcome, || Some(json!({ "vertices": v, "edges": g.edges() })));
    }

    let mut ck = c.check("bicircular-fan");
    for n in 1..=5 {
        let q = bicircular_fan(n)?;
        let outcome = match is_isomorphic(&q.to_matroid(), &Matroid::fan(n)?)? {
            Some(_) => Ok(()),
            None => Err(format!("bicircular fan {n} is not FAN({n})")),
        };
        ck.record(outcome, || None);
    }
    Ok(())
}

fn tripartition_witness(t: &Tripartition) -> Value {
    json!({
        "vertices": t.graph.vertex_count(),
        "edges": t.graph.edges(),
        "balanced": t.balanced,
        "L": t.lift,
        "F": t.frame,
    })
}

/// Circuit axioms, formula rank against circuit rank on every subset, and
/// `bw(M) <= bw(G) + 3`.
pub fn quasi_checks(q: &QuasiGraphicMatroid) -> Result<std::result::Result<(), String>> {
    if let Some(d) = check_circuit_axioms(q.circuits()) {
        return Ok(Err(format!("circuit axioms: {d}")));
    }
    let table = q.rank_from_circuits()?;
    let n = q.graph().edge_count();
    if let Err(d) = first_failure(n, |x| {
        let f = q.rank_formula(Subset(x));
        (f != table[x as usize])
            .then(|| format!("rank formula {f} vs circuit rank {} at {:?}", table[x as usize], Subset(x)))
    }) {
        return Ok(Err(d));
    }
    let bound = branch_width_bound_check(q)?;
    if !bound.holds {
        return Ok(Err(format!(
            "bw(M) = {} exceeds bw(G) + 3 = {}",
            bound.matroid_width,
            bound.graph_width + 3
        )));
    }
    Ok(Ok(()))
}

// ---------------------------------------------------------------- bounds

fn bounds(c: &mut Campaign) -> Result<()> {
    let mut ck = c.check("recursion-identities");
    let violations = check_recursion_identities(2..=6, 0..=4, 0..=10)?;
    if violations.is_empty() {
        ck.pass();
    }
    for v in violations {
        let d = format!("{} at w={}, a={}, b={}, i={}: {}", v.identity, v.w, v.a, v.b, v.i, v.detail);
        ck.fail(d, serde_json::to_value(&v).ok());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_suite_passes() {
        let r = run_suite(&SuiteConfig::new(Suite::Bounds, 0)).unwrap();
        assert!(r.passed, "{}", r.to_json());
    }

    #[test]
    fn small_campaigns_pass_and_repeat() {
        for suite in [Suite::Axioms, Suite::Twisted, Suite::Connectivity, Suite::Quasigraphic] {
            let cfg = SuiteConfig::new(suite, 3).cases(6);
            let r = run_suite(&cfg).unwrap();
            assert!(r.passed, "{}", r.to_json());
            assert_eq!(r.to_json(), run_suite(&cfg).unwrap().to_json());
        }
    }

    #[test]
    fn mutants_are_caught() {
        let r = run_suite(&SuiteConfig::new(Suite::Twisted, 1).cases(3).mutant(Mutant::Family)).unwrap();
        assert!(!r.passed);
        assert_eq!(r.violations[0].check, "twisted-axioms");
        assert!(r.violations[0].witness.is_some());
        let r = run_suite(&SuiteConfig::new(Suite::Axioms, 1).cases(3).mutant(Mutant::Rank)).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
