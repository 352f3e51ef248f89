use fanforge::decomposition::{branch_depth, branch_width};
use fanforge::gen::Generator;
use fanforge::twisted::{find_fan_certificate, fan_minor_sets, twist_of, verify_twisted_axioms};
use fanforge::{Matroid, Subset};
use proptest::prelude::*;

fn matroid(seed: u64, max_n: usize) -> Matroid {
    Generator::new(seed).any_matroid(max_n)
}

fn within(m: &Matroid, bits: u32) -> Subset {
    Subset(bits) & m.full()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_is_submodular_and_bounded(seed in any::<u64>(), a in any::<u32>(), b in any::<u32>()) {
        let m = matroid(seed, 8);
        let (x, y) = (within(&m, a), within(&m, b));
        prop_assert!(m.r(x) <= x.len());
        prop_assert!(m.r(x & y) <= m.r(x));
        prop_assert!(m.r(x | y) + m.r(x & y) <= m.r(x) + m.r(y));
    }

    #[test]
    fn lambda_is_symmetric_and_preserved_by_duality(seed in any::<u64>(), a in any::<u32>()) {
        let m = matroid(seed, 8);
        let x = within(&m, a);
        let lam = m.lambda(x).unwrap();
        prop_assert_eq!(lam, m.lambda(m.full() - x).unwrap());
        prop_assert_eq!(lam, m.dual().lambda(x).unwrap());
        prop_assert!(lam <= m.r(x));
    }

    #[test]
    fn minor_rank_formula(seed in any::<u64>(), d in any::<u32>(), c in any::<u32>(), a in any::<u32>()) {
        let m = matroid(seed, 8);
        let del = within(&m, d);
        let con = within(&m, c) - del;
        let n = m.minor(del, con).unwrap();
        let y = within(&n, a);
        let lifted = n.as_minor().map_or(y, |v| v.lift(y));
        prop_assert_eq!(n.r(y), m.r(lifted | con) - m.r(con));
    }

    #[test]
    fn widths_are_minor_monotone_and_dual_invariant(seed in any::<u64>(), d in any::<u32>(), c in any::<u32>()) {
        let m = matroid(seed, 7);
        let del = within(&m, d);
        let con = within(&m, c) - del;
        let n = m.minor(del, con).unwrap().flatten();
        let (bw, bd) = (branch_width(&m).unwrap().value, branch_depth(&m).unwrap().value);
        prop_assert!(branch_width(&n).unwrap().value <= bw);
        prop_assert!(branch_depth(&n).unwrap().value <= bd);
        let dual = m.dual();
        prop_assert_eq!(branch_width(&dual).unwrap().value, bw);
        prop_assert_eq!(branch_depth(&dual).unwrap().value, bd);
    }

    #[test]
    fn twisting_by_a_base_gives_a_twisted_matroid(seed in any::<u64>(), pick in any::<usize>()) {
        let m = matroid(seed, 7);
        let bases = m.bases().unwrap();
        let b = bases[pick % bases.len()];
        let w = twist_of(&m, b).unwrap();
        prop_assert!(verify_twisted_axioms(&w).all());
        prop_assert!(w.is_feasible(Subset::EMPTY));
        for f in w.feasible() {
            prop_assert!(m.is_base(b ^ *f));
        }
    }

    #[test]
    fn fan_certificates_yield_fan_minors(seed in any::<u64>(), n in 1usize..4) {
        let m = matroid(seed, 8);
        if let Some(c) = find_fan_certificate(&m, n).unwrap() {
            let (d, k) = fan_minor_sets(&m, &c);
            let minor = m.minor(d, k).unwrap();
            prop_assert!(fanforge::matroid::is_isomorphic(&minor, &Matroid::fan(n).unwrap()).unwrap().is_some());
        }
    }
}
