mod common;

use fanforge::catalog::matroid_catalog;
use fanforge::decomposition::{branch_depth, branch_width, graph_branch_width, is_kr_decomposition};
use fanforge::gen::connected_multigraphs;
use fanforge::twisted::{find_fan_certificate, validate_fan_certificate};
use fanforge::{Matroid, Subset};

#[test]
fn lambda_matches_rank_table() {
    for level in matroid_catalog(5).unwrap() {
        for m in &level {
            let lam = common::lambda_table(m);
            for x in m.full().submasks() {
                assert_eq!(m.lambda(x).unwrap(), lam[x.bits() as usize]);
            }
        }
    }
}

#[test]
fn branch_width_matches_every_cubic_tree() {
    for level in matroid_catalog(6).unwrap() {
        for m in &level {
            assert_eq!(branch_width(m).unwrap().value, common::branch_width_oracle(m), "{:?}", m.bases().unwrap());
        }
    }
}

#[test]
fn branch_depth_matches_every_tree() {
    for level in matroid_catalog(6).unwrap() {
        for m in &level {
            let got = branch_depth(m).unwrap();
            assert_eq!(got.value, common::branch_depth_oracle(m), "{:?}", m.bases().unwrap());
            if let Some(d) = got.decomposition() {
                assert!(is_kr_decomposition(m, d, got.value, got.value).unwrap());
            }
        }
    }
}

#[test]
fn graph_branch_width_matches_every_cubic_tree() {
    for edges in 1..=7 {
        for g in connected_multigraphs(edges) {
            assert_eq!(graph_branch_width(&g).unwrap().value, common::graph_branch_width_oracle(&g), "{:?}", g.edges());
        }
    }
}

#[test]
fn fan_certificates_match_minor_search() {
    let fans: Vec<Matroid> = (1..=3).map(|n| Matroid::fan(n).unwrap()).collect();
    for level in matroid_catalog(6).unwrap() {
        for m in &level {
            for (i, fan) in fans.iter().enumerate() {
                let cert = find_fan_certificate(m, i + 1).unwrap();
                if let Some(c) = &cert {
                    validate_fan_certificate(m, c).unwrap();
                }
                assert_eq!(cert.is_some(), common::has_minor_isomorphic_to(m, fan), "n={} {:?}", i + 1, m.bases().unwrap());
            }
        }
    }
}

#[test]
fn minor_oracle_sanity() {
    let k4 = Matroid::graphic_numbered(fanforge::MultiGraph::complete(4));
    assert!(common::has_minor_isomorphic_to(&k4, &Matroid::uniform(1, 2).unwrap()));
    assert!(!common::has_minor_isomorphic_to(&k4, &Matroid::uniform(2, 4).unwrap()));
    assert!(common::has_minor_isomorphic_to(&Matroid::uniform(2, 4).unwrap(), &Matroid::triangle()));
    assert_eq!(common::rank_table(&k4)[Subset::from_indices([0, 1, 3]).bits() as usize], 2);
}
