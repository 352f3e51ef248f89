use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

use super::branch_width;

/// A partition `(X, Y)` with `λ(X) < w` and more than `k` elements of `Z` on
/// each side.
///
/// Every edge of a width-`w` branch-decomposition is oriented towards the side
/// holding more than `k` elements of `Z` when only one side does; following
/// the orientation must stop at an edge with both sides heavy, since a sink
/// node would split `Z` into at most three parts of size `<= k`.
pub fn find_balanced_separation(m: &Matroid, z: Subset, k: usize, w: usize) -> Result<(Subset, Subset)> {
    m.ground().check(z)?;
    if k == 0 || w == 0 {
        return Err(Error::pre("k and w must be positive"));
    }
    if z.len() < 3 * k + 1 {
        return Err(Error::pre(format!(
            "|Z| = {} is below 3k + 1 = {}",
            z.len(),
            3 * k + 1
        )));
    }
    let cert = branch_width(m)?;
    if cert.value > w {
        return Err(Error::pre(format!(
            "branch-width is {}, above w = {w}",
            cert.value
        )));
    }
    let dec = cert
        .branch_decomposition()
        .ok_or_else(|| Error::internal("branch-width certificate without a tree"))?;
    let tree = dec.tree();
    let mut elem_at = vec![None; tree.len()];
    for (e, &l) in dec.leaf_of().iter().enumerate() {
        elem_at[l] = Some(e);
    }
    let side = |u: usize, v: usize| -> Subset {
        tree.side(u, v).into_iter().filter_map(|x| elem_at[x]).collect()
    };
    let full = m.full();
    // walk: at node u coming from `from`, move along the unique heavy branch
    let mut from = usize::MAX;
    let mut u = dec.leaf_of()[0];
    for _ in 0..=tree.len() {
        let mut moved = false;
        for &v in tree.neighbours(u) {
            if v == from {
                continue;
            }
            let x = side(u, v);
            let heavy_far = (x & z).len() > k;
            let heavy_near = ((full - x) & z).len() > k;
            if heavy_far && heavy_near {
                let y = full - x;
                debug_assert!(m.lam(x) < w);
                return Ok((y, x));
            }
            if heavy_far {
                from = u;
                u = v;
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    Err(Error::internal("orientation walk ended at a sink"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &Matroid, z: Subset, k: usize, w: usize) {
        let (x, y) = find_balanced_separation(m, z, k, w).unwrap();
        assert_eq!(x | y, m.full());
        assert!(x.is_disjoint(y));
        assert!(m.lam(x) < w);
        assert!((x & z).len() > k && (y & z).len() > k);
    }

    #[test]
    fn examples() {
        let free = Matroid::free(["a", "b", "c", "d"]).unwrap();
        check(&free, free.full(), 1, 1);
        check(&free, free.full(), 1, 2);
        let k3 = Matroid::triangle();
        assert!(matches!(
            find_balanced_separation(&k3, k3.full(), 1, 2),
            Err(Error::Precondition(_))
        ));
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(find_balanced_separation(&u, u.full(), 1, 2).is_err());
        check(&u, u.full(), 1, 3);
        let f = Matroid::fan(5).unwrap();
        check(&f, f.full(), 2, 3);
    }
}
