use super::*;
use crate::graph::MultiGraph;
use crate::twisted::twist_of;

fn fan_by_spokes(n: usize) -> TwistedMatroid {
    let m = Matroid::fan(n).unwrap();
    let spokes = Subset::full(n);
    twist_of(&m, spokes).unwrap()
}

fn idx(w: &TwistedMatroid, names: &[&str]) -> Subset {
    w.universe().subset(names).unwrap()
}

fn one(w: &TwistedMatroid, name: &str) -> usize {
    w.universe().index_of(name).unwrap()
}

#[test]
fn fan3_lollipop_checks() {
    let w = fan_by_spokes(3);
    let l = Lollipop::new(w.clone(), idx(&w, &["s1", "p1"]), one(&w, "s2"), idx(&w, &["p2", "s3"]));
    assert!(validate_lollipop(&l, 2, 0).unwrap().ok);
    let r = validate_lollipop(&l, 3, 0).unwrap();
    assert_eq!(r.failed.as_deref(), Some("(1)"));
    assert_eq!(l.stick_order(), vec![one(&w, "s1"), one(&w, "p1"), one(&w, "s2")]);

    let f = idx(&w, &["p2", "s3"]);
    let t = lollipop_twist_invariance(&l, f).unwrap();
    assert_eq!((t.s, t.z, t.c), (l.s, l.z, l.c));
    assert!(validate_lollipop(&t, 2, 0).unwrap().ok);
    assert_eq!(lollipop_twist_invariance(&l, Subset::EMPTY).unwrap(), l);
    assert!(lollipop_twist_invariance(&l, idx(&w, &["s1", "p1"])).is_err());
}

#[test]
fn empty_stick_lollipops() {
    let w = fan_by_spokes(3);
    let z = one(&w, "s1");
    let c = w.ground().without(z);
    let l = Lollipop::new(w.clone(), Subset::EMPTY, z, c);
    assert!(validate_lollipop(&l, 0, 0).unwrap().ok);
    let d = w.restrict(c).unwrap().branch_depth().unwrap();
    assert!(validate_lollipop(&l, 0, d).unwrap().ok);
    assert_eq!(validate_lollipop(&l, 0, d + 1).unwrap().failed.as_deref(), Some("(5)"));
}

#[test]
fn malformed_witnesses() {
    let w = fan_by_spokes(3);
    let cut = Lollipop::new(w.clone(), idx(&w, &["s1"]), one(&w, "s2"), idx(&w, &["p2", "s3"]));
    assert_eq!(validate_lollipop(&cut, 0, 0).unwrap().failed.as_deref(), Some("partition"));
    let bent = Lollipop::new(w.clone(), idx(&w, &["s1", "p2"]), one(&w, "p1"), idx(&w, &["s2", "s3"]));
    assert!(!validate_lollipop(&bent, 0, 0).unwrap().ok);
}

#[test]
fn base_lollipop_examples() {
    let u = Matroid::uniform(2, 4).unwrap();
    let w = twist_of(&u, Subset::from_indices([0, 1])).unwrap();
    let found = find_base_lollipop(&w, 0, Rigor::Certified).unwrap();
    assert!(found.lollipop.c.len() >= 1);
    assert!(validate_lollipop(&found.lollipop, 0, 0).unwrap().ok);
    validate_lollipop_minor(&w, &found).unwrap();
    let chosen = find_lollipop(&w, 0, 0, 3, Rigor::Certified).unwrap();
    assert!(validate_lollipop(&chosen.lollipop, 0, 0).unwrap().ok);

    let coloop = Matroid::free(["x"]).unwrap();
    let w = twist_of(&coloop, Subset::singleton(0)).unwrap();
    assert!(matches!(find_base_lollipop(&w, 0, Rigor::Certified), Err(Error::Precondition(_))));

    let k3 = Matroid::triangle();
    let w = twist_of(&k3, Subset::from_indices([0, 1])).unwrap();
    let err = find_base_lollipop(&w, 0, Rigor::Certified).unwrap_err();
    assert!(err.to_string().contains("branch-depth is 1"), "{err}");
    assert!(find_lollipop(&w, 0, 0, 3, Rigor::Certified).is_err());
}

#[test]
fn extension_on_fan4() {
    let w = fan_by_spokes(4);
    let l = Lollipop::new(
        w.clone(),
        idx(&w, &["s1", "p1"]),
        one(&w, "s2"),
        idx(&w, &["p2", "s3", "p3", "s4"]),
    );
    assert!(validate_lollipop(&l, 2, 0).unwrap().ok);
    let cp = idx(&w, &["p3", "s4"]);
    let out = extend_lollipop(&l, cp, 0, Rigor::Certified).unwrap();
    assert_eq!(out.s, idx(&w, &["s1", "p1", "s2", "p2"]));
    assert_eq!(out.z, one(&w, "s3"));
    assert_eq!(out.c, cp);
    assert!(out.s.len() >= l.s.len() + 1);
    assert!(validate_lollipop(&out, 3, 0).unwrap().ok);

    assert!(extend_lollipop(&l, idx(&w, &["p2", "s3"]), 0, Rigor::Certified).is_err());
    assert!(extend_lollipop(&l, l.c, 0, Rigor::Certified).is_err());
}

#[test]
fn bridge_on_uniform_plus_coloops() {
    let m = Matroid::uniform(2, 4).unwrap().direct_sum(&Matroid::free(["c1", "c2", "c3", "c4"]).unwrap()).unwrap();
    let w = twist_of(&m, m.some_base()).unwrap();
    let c = Subset::full(4);
    let z = Subset::full(8) - c;
    let (x, y) = bridge(&w, z, c, 1, 0, 3, Rigor::Certified).unwrap();
    validate_bridge(&w, z, c, 1, 0, 3, x, y).unwrap().unwrap();
    let small = Subset::from_indices([4, 5, 6]);
    assert!(bridge(&w, small, c, 1, 0, 3, Rigor::Certified).is_err());
}

#[test]
fn small_circuit_on_uniform() {
    let u = Matroid::uniform(2, 4).unwrap();
    let w = twist_of(&u, Subset::from_indices([0, 1])).unwrap();
    let x = w.ground();
    let sc = find_small_circuit(&w, x, 3).unwrap();
    assert!(sc.circuit.len() <= 3);
    validate_small_circuit(&w, x, 3, &sc).unwrap().unwrap();
    assert!(find_small_circuit(&w, Subset::from_indices([0, 1]), 3).is_err());
    let w4 = fan_by_spokes(4);
    let half = idx(&w4, &["s1", "p1", "s2", "p2"]);
    assert!(w4.lambda(half).unwrap() < 3);
    let sc = find_small_circuit(&w4, half, 3).unwrap();
    validate_small_circuit(&w4, half, 3, &sc).unwrap().unwrap();
    assert!(find_small_circuit(&w4, half, 1).is_err());
}

#[test]
fn chain_on_uniform() {
    let u = Matroid::uniform(5, 10).unwrap();
    let w = twist_of(&u, Subset::full(5)).unwrap();
    let finder = |m: &TwistedMatroid, g: usize| find_base_lollipop(m, g, Rigor::Certified);
    let d = w.branch_depth().unwrap();
    assert!(d >= 4, "bd(U_5,10) = {d}");
    let chain = nest_lollipops(&w, 0, &[4, 2, 0], &finder, Rigor::Certified).unwrap();
    assert_eq!(chain.len(), 2);
    validate_chain(&w, &chain).unwrap().unwrap();
    assert!(chain.entries[1].e.is_subset_of(chain.entries[0].c));

    let single = nest_lollipops(&w, 0, &[4, 2], &finder, Rigor::Certified).unwrap();
    assert_eq!(single.len(), 1);
    assert_eq!(single.twist, Subset::EMPTY);

    assert!(nest_lollipops(&w, 0, &[d + 1, 0], &finder, Rigor::Certified).is_err());
}

#[test]
fn opportunistic_step_on_long_fan() {
    let w = fan_by_spokes(8);
    let found = find_lollipop(&w, 1, 0, 3, Rigor::Opportunistic).unwrap();
    assert!(validate_lollipop(&found.lollipop, 1, 0).unwrap().ok);
    validate_lollipop_minor(&w, &found).unwrap();
    assert!(found.lollipop.s.len() >= 1);
}

#[test]
fn opportunistic_chain_and_step_validate() {
    let w = fan_by_spokes(8);
    let finder = |m: &TwistedMatroid, g: usize| find_base_lollipop(m, g, Rigor::Opportunistic);
    let chain = nest_lollipops(&w, 0, &[0; 8], &finder, Rigor::Opportunistic).unwrap();
    assert_eq!(chain.len(), 7);
    validate_chain(&w, &chain).unwrap().unwrap();
    let out = induction_step(&w, &chain, 0, 3, Rigor::Opportunistic).unwrap();
    check_step_condition(&w, &chain, &out, 0).unwrap().unwrap();
    assert!(induction_step(&w, &chain, 0, 2, Rigor::Opportunistic).is_err());
    let short = NestedLollipopChain { entries: chain.entries[..6].to_vec(), ..chain.clone() };
    assert!(induction_step(&w, &short, 0, 3, Rigor::Opportunistic).is_err());
}

#[test]
fn fan_minor_strategies() {
    let f4 = Matroid::fan(4).unwrap();
    let c = find_fan_minor(&f4, 3, Strategy::Direct).unwrap().unwrap();
    crate::twisted::validate_fan_certificate(&f4, &c).unwrap();
    let k3 = Matroid::graphic_numbered(MultiGraph::complete(3));
    assert!(find_fan_minor(&k3, 2, Strategy::Direct).unwrap().is_some());
    let u13 = Matroid::uniform(1, 3).unwrap();
    assert!(find_fan_minor(&u13, 2, Strategy::Direct).unwrap().is_none());
    let err = find_fan_minor(&f4, 1, Strategy::Constructive(Rigor::Certified)).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{err}");
}
