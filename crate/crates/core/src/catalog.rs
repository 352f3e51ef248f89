//! Every matroid on a small ground set, one per isomorphism class.
//!
//! Each matroid on `n + 1` elements is a single-element extension of a
//! matroid on `n` elements, and single-element extensions correspond to
//! modular cuts of the lattice of flats: the extension adds `e` with
//! `r(X + e) = r(X)` exactly when `cl(X)` lies in the cut.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::matroid::{is_isomorphic, Matroid};
use crate::subset::{GroundSet, Subset};

/// Rank table of a matroid on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Table {
    n: usize,
    rank: Vec<u8>,
}

impl Table {
    fn empty() -> Table {
        Table { n: 0, rank: vec![0] }
    }

    fn r(&self, x: u32) -> u8 {
        self.rank[x as usize]
    }

    fn closure(&self, x: u32) -> u32 {
        let rx = self.r(x);
        (0..self.n).filter(|&e| self.r(x | 1 << e) == rx).fold(x, |acc, e| acc | 1 << e)
    }

    fn flats(&self) -> Vec<u32> {
        (0..1u32 << self.n).filter(|&x| self.closure(x) == x).collect()
    }

    fn to_matroid(&self) -> Matroid {
        let full = (1u32 << self.n) - 1;
        let r = self.r(full);
        let bases = (0..=full).filter(|&x| x.count_ones() as u8 == r && self.r(x) == r).map(Subset);
        Matroid::from_bases_unchecked(GroundSet::numbered(self.n), bases)
    }

    /// Histogram of `(|X|, r(X))` and the sorted per-element histograms.
    fn invariant(&self) -> Vec<u32> {
        let n = self.n;
        let w = n + 1;
        let mut global = vec![0u32; w * w];
        let mut per = vec![vec![0u32; w * w]; n];
        for x in 0..1u32 << n {
            let k = x.count_ones() as usize * w + self.r(x) as usize;
            global[k] += 1;
            for (e, p) in per.iter_mut().enumerate() {
                if x >> e & 1 == 1 {
                    p[k] += 1;
                }
            }
        }
        per.sort();
        global.into_iter().chain(per.into_iter().flatten()).collect()
    }
}

/// All modular cuts of the flats of `t`, as bitsets over `flats`.
fn modular_cuts(t: &Table, flats: &[u32]) -> Vec<u128> {
    let k = flats.len();
    let index: HashMap<u32, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let up: Vec<u128> = flats
        .iter()
        .map(|&f| {
            flats
                .iter()
                .enumerate()
                .filter(|(_, &g)| g & f == f)
                .fold(0u128, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    let mut modular_meet = vec![vec![None; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (flats[i], flats[j]);
            let ra = t.r(a) as i32 + t.r(b) as i32;
            if ra == t.r(a | b) as i32 + t.r(a & b) as i32 {
                modular_meet[i][j] = Some(index[&(a & b)]);
                modular_meet[j][i] = Some(index[&(a & b)]);
            }
        }
    }
    let close = |mut cut: u128| -> u128 {
        loop {
            let mut next = cut;
            for i in (0..k).filter(|&i| cut >> i & 1 == 1) {
                next |= up[i];
                for j in (i + 1..k).filter(|&j| cut >> j & 1 == 1) {
                    if let Some(m) = modular_meet[i][j] {
                        next |= up[m];
                    }
                }
            }
            if next == cut {
                return cut;
            }
            cut = next;
        }
    };
    let mut seen: HashSet<u128> = HashSet::from([0]);
    let mut stack = vec![0u128];
    while let Some(cut) = stack.pop() {
        for i in (0..k).filter(|&i| cut >> i & 1 == 0) {
            let next = close(cut | 1 << i);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    let mut out: Vec<u128> = seen.into_iter().collect();
    out.sort();
    out
}

fn extensions(t: &Table) -> Vec<Table> {
    let flats = t.flats();
    let index: HashMap<u32, usize> = flats.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let n = t.n;
    let cl: Vec<usize> = (0..1u32 << n).map(|x| index[&t.closure(x)]).collect();
    modular_cuts(t, &flats)
        .into_iter()
        .map(|cut| {
            let mut rank = t.rank.clone();
            rank.extend((0..1u32 << n).map(|x| t.r(x) + u8::from(cut >> cl[x as usize] & 1 == 0)));
            Table { n: n + 1, rank }
        })
        .collect()
}

/// Levels `0..=n`: level `k` lists one matroid per isomorphism class on
/// `k` elements (labels `1..k`), in a deterministic order.
pub fn matroid_catalog(n: usize) -> Result<Vec<Vec<Matroid>>> {
    limits::check("matroid catalog ground set", n, Limits::get().isomorphism.min(8))?;
    let mut levels: Vec<Vec<Table>> = vec![vec![Table::empty()]];
    for _ in 0..n {
        let prev = levels.last().expect("non-empty");
        let mut buckets: HashMap<Vec<u32>, Vec<(Table, Matroid)>> = HashMap::new();
        let mut order: Vec<Table> = Vec::new();
        for t in prev {
            for ext in extensions(t) {
                let inv = ext.invariant();
                let bucket = buckets.entry(inv).or_default();
                let m = ext.to_matroid();
                let mut fresh = true;
                for (_, other) in bucket.iter() {
                    if is_isomorphic(&m, other)?.is_some() {
                        fresh = false;
                        break;
                    }
                }
                if fresh {
                    bucket.push((ext.clone(), m));
                    order.push(ext);
                }
            }
        }
        levels.push(order);
    }
    Ok(levels.into_iter().map(|l| l.iter().map(Table::to_matroid).collect()).collect())
}

/// The catalog level for exactly `n` elements.
pub fn matroids_up_to_iso(n: usize) -> Result<Vec<Matroid>> {
    matroid_catalog(n)?
        .pop()
        .ok_or_else(|| Error::internal("catalog without levels"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_through_six() {
        let counts: Vec<usize> = matroid_catalog(6).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 17, 38, 98]);
    }

    #[test]
    fn seven_elements() {
        assert_eq!(matroids_up_to_iso(7).unwrap().len(), 306);
    }

    #[test]
    #[ignore]
    fn eight_elements() {
        assert_eq!(matroids_up_to_iso(8).unwrap().len(), 1724);
    }

    #[test]
    fn catalog_entries_are_matroids() {
        for m in matroids_up_to_iso(4).unwrap() {
            let checked = Matroid::from_bases(m.ground().clone(), m.bases().unwrap());
            assert!(checked.is_ok());
        }
    }
}
