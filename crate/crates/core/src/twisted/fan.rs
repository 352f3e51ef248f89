use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::matroid::{FundamentalGraphView, Matroid};
use crate::subset::Subset;

/// A base and an induced path on `2n - 1` vertices of the fundamental graph
/// that starts and ends in the base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanCertificate {
    pub n: usize,
    pub base: Subset,
    pub path: Vec<usize>,
}

/// Independent check of a certificate against `M`.
pub fn validate_fan_certificate(m: &Matroid, c: &FanCertificate) -> std::result::Result<(), String> {
    if c.n == 0 {
        return Err("n must be positive".into());
    }
    if !c.base.is_subset_of(m.full()) || !m.is_base(c.base) {
        return Err(format!("{:?} is not a base", c.base));
    }
    if c.path.len() != 2 * c.n - 1 {
        return Err(format!("path has {} vertices, expected {}", c.path.len(), 2 * c.n - 1));
    }
    let set: Subset = c.path.iter().copied().collect();
    if set.len() != c.path.len() || !set.is_subset_of(m.full()) {
        return Err("path vertices are not distinct elements".into());
    }
    for (i, &v) in c.path.iter().enumerate() {
        if c.base.contains(v) != (i % 2 == 0) {
            return Err(format!("vertex {i} of the path is on the wrong side of the base"));
        }
    }
    // adjacency straight from fundamental circuits
    let adjacent = |x: usize, y: usize| -> bool {
        let (b, e) = if c.base.contains(x) { (x, y) } else { (y, x) };
        if !c.base.contains(b) || c.base.contains(e) {
            return false;
        }
        m.rank(c.base.without(b).with(e)).map(|r| r == c.base.len()).unwrap_or(false)
    };
    for i in 0..c.path.len() {
        for j in i + 1..c.path.len() {
            let want = j == i + 1;
            if adjacent(c.path[i], c.path[j]) != want {
                return Err(format!(
                    "path vertices {i} and {j} are {}adjacent",
                    if want { "not " } else { "" }
                ));
            }
        }
    }
    Ok(())
}

/// `(deleted, contracted)` such that `M \ deleted / contracted` on the path
/// elements is isomorphic to the fan: contract the base outside the path,
/// delete the rest.
pub fn fan_minor_sets(m: &Matroid, c: &FanCertificate) -> (Subset, Subset) {
    let x: Subset = c.path.iter().copied().collect();
    let contracted = c.base - x;
    let deleted = m.full() - x - contracted;
    (deleted, contracted)
}

fn diameter(g: &FundamentalGraphView) -> usize {
    (0..g.len())
        .map(|v| {
            g.distances(v, g.vertices())
                .into_iter()
                .filter(|&d| d != usize::MAX)
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

fn induced_path(g: &FundamentalGraphView, want: usize, path: &mut Vec<usize>, used: Subset) -> bool {
    if path.len() == want {
        return true;
    }
    let last = *path.last().unwrap();
    let earlier = used.without(last);
    for v in g.neighbours(last) - used {
        if !(g.neighbours(v) & earlier).is_empty() {
            continue;
        }
        path.push(v);
        if induced_path(g, want, path, used.with(v)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Search every base, longest fundamental graphs first, for an induced path
/// on `2n - 1` vertices starting in the base.
pub fn find_fan_certificate(m: &Matroid, n: usize) -> Result<Option<FanCertificate>> {
    if n == 0 {
        return Err(Error::domain("fan order must be positive"));
    }
    limits::check("fan certificate ground set", m.len(), Limits::get().enumeration)?;
    let want = 2 * n - 1;
    if want > m.len() {
        return Ok(None);
    }
    let mut graphs: Vec<(usize, Subset, FundamentalGraphView)> = m
        .bases()?
        .into_iter()
        .map(|b| {
            let g = m.fgraph(b);
            (diameter(&g), b, g)
        })
        .collect();
    graphs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    // induced paths need not be geodesic, so diameter only orders the search
    for (_, b, g) in graphs {
        for start in b {
            let mut path = vec![start];
            if induced_path(&g, want, &mut path, Subset::singleton(start)) {
                return Ok(Some(FanCertificate { n, base: b, path }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::is_isomorphic;

    #[test]
    fn examples() {
        let k3 = Matroid::triangle();
        let c = find_fan_certificate(&k3, 2).unwrap().unwrap();
        assert!(validate_fan_certificate(&k3, &c).is_ok());
        assert_eq!(c.path.len(), 3);
        let f4 = Matroid::fan(4).unwrap();
        let c = find_fan_certificate(&f4, 4).unwrap().unwrap();
        assert_eq!(c.base, Subset::full(4));
        assert!(validate_fan_certificate(&f4, &c).is_ok());
        let u13 = Matroid::uniform(1, 3).unwrap();
        assert!(find_fan_certificate(&u13, 2).unwrap().is_none());
    }

    #[test]
    fn certificate_gives_a_fan_minor() {
        let f5 = Matroid::fan(5).unwrap();
        for n in 1..=5 {
            let c = find_fan_certificate(&f5, n).unwrap().unwrap();
            let (d, k) = fan_minor_sets(&f5, &c);
            let minor = f5.minor(d, k).unwrap();
            assert!(is_isomorphic(&minor, &Matroid::fan(n).unwrap()).unwrap().is_some());
        }
    }

    #[test]
    fn validator_rejects_bad_paths() {
        let f3 = Matroid::fan(3).unwrap();
        let good = FanCertificate {
            n: 3,
            base: Subset::full(3),
            path: vec![0, 3, 1, 4, 2],
        };
        assert!(validate_fan_certificate(&f3, &good).is_ok());
        let mut bad = good.clone();
        bad.path.swap(0, 2);
        assert!(validate_fan_certificate(&f3, &bad).is_err());
        let short = FanCertificate { path: vec![0, 3, 1], ..good };
        assert!(validate_fan_certificate(&f3, &short).is_err());
    }
}
