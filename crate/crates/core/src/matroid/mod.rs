//! Matroids behind a uniform rank oracle.
//!
//! A [`Matroid`] pairs a [`GroundSet`] with a [`Backend`]. All subset
//! arithmetic is done on canonical indices; labels only matter at the edges
//! (parsing, printing, certificates).

mod iso;
mod linear;
mod ops;
mod table;

use std::collections::HashSet;
use std::sync::Arc;

pub use iso::{is_isomorphic, Isomorphism};
pub use linear::{LinearRep, SUPPORTED_FIELDS};
pub use ops::{connfunction_minor_bounds, FundamentalGraphView, MinorBounds};
pub use table::RankTable;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::limits::{self, Limits};
use crate::quasigraphic::QuasiGraphicMatroid;
use crate::subset::{GroundSet, Subset};

#[derive(Debug, Clone)]
pub enum Backend {
    /// Explicit list of bases, sorted by bitmask.
    BaseList { bases: Vec<Subset>, rank: usize },
    Uniform { rank: usize },
    /// Cycle matroid; edge `i` is element `i`.
    Graphic(MultiGraph),
    Linear(LinearRep),
    QuasiGraphic(Arc<QuasiGraphicMatroid>),
    Minor(MinorView),
    Dual(Arc<Matroid>),
}

/// `parent \ deleted / contracted`, with the kept elements renumbered in
/// increasing parent index.
#[derive(Debug, Clone)]
pub struct MinorView {
    parent: Arc<Matroid>,
    deleted: Subset,
    contracted: Subset,
    kept: Subset,
    contracted_rank: usize,
}

impl MinorView {
    pub fn parent(&self) -> &Matroid {
        &self.parent
    }

    pub fn deleted(&self) -> Subset {
        self.deleted
    }

    pub fn contracted(&self) -> Subset {
        self.contracted
    }

    /// The parent elements that survive, in parent indices.
    pub fn kept(&self) -> Subset {
        self.kept
    }

    /// Map a subset of the minor to parent indices.
    pub fn lift(&self, x: Subset) -> Subset {
        x.expand(self.kept)
    }
}

#[derive(Debug, Clone)]
pub struct Matroid {
    ground: GroundSet,
    backend: Backend,
}

impl Matroid {
    /// A matroid from its bases. B1, B2 and equicardinality are checked.
    pub fn from_bases(ground: GroundSet, bases: impl IntoIterator<Item = Subset>) -> Result<Matroid> {
        let bases: Vec<Subset> = {
            let mut v: Vec<Subset> = bases.into_iter().collect();
            v.sort();
            v.dedup();
            v
        };
        let full = ground.full();
        if bases.is_empty() {
            return Err(Error::domain("a matroid needs at least one base (B1)"));
        }
        if let Some(b) = bases.iter().find(|b| !b.is_subset_of(full)) {
            return Err(Error::domain(format!("base {b:?} leaves the ground set")));
        }
        let rank = bases[0].len();
        if let Some(b) = bases.iter().find(|b| b.len() != rank) {
            return Err(Error::domain(format!(
                "bases have different sizes ({} and {})",
                rank,
                b.len()
            )));
        }
        let set: HashSet<Subset> = bases.iter().copied().collect();
        for &b1 in &bases {
            for &b2 in &bases {
                for x in (b1 - b2).iter() {
                    let ok = (b2 - b1).iter().any(|y| set.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Err(Error::domain(format!(
                            "exchange axiom (B2) fails for {b1:?}, {b2:?} at element {x}"
                        )));
                    }
                }
            }
        }
        Ok(Matroid {
            ground,
            backend: Backend::BaseList { bases, rank },
        })
    }

    /// Trusted constructor for internally generated base families.
    pub fn from_bases_unchecked(ground: GroundSet, bases: impl IntoIterator<Item = Subset>) -> Matroid {
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort();
        bases.dedup();
        let rank = bases.first().map_or(0, |b| b.len());
        Matroid {
            ground,
            backend: Backend::BaseList { bases, rank },
        }
    }

    /// `U_{r,n}` on labels `1..=n`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return Err(Error::domain(format!("U_{{{r},{n}}} needs r <= n")));
        }
        let ground = GroundSet::new((1..=n).map(|i| i.to_string()))?;
        Ok(Matroid {
            ground,
            backend: Backend::Uniform { rank: r },
        })
    }

    pub fn uniform_on(r: usize, ground: GroundSet) -> Result<Matroid> {
        if r > ground.len() {
            return Err(Error::domain("uniform rank exceeds ground set size"));
        }
        Ok(Matroid {
            ground,
            backend: Backend::Uniform { rank: r },
        })
    }

    /// Every element a coloop.
    pub fn free<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Matroid> {
        let ground = GroundSet::new(labels)?;
        let r = ground.len();
        Matroid::uniform_on(r, ground)
    }

    pub fn graphic(graph: MultiGraph, ground: GroundSet) -> Result<Matroid> {
        if graph.edge_count() != ground.len() {
            return Err(Error::domain(format!(
                "graph has {} edges but the ground set has {} labels",
                graph.edge_count(),
                ground.len()
            )));
        }
        Ok(Matroid {
            ground,
            backend: Backend::Graphic(graph),
        })
    }

    /// Cycle matroid with edges labelled `0..m-1`.
    pub fn graphic_numbered(graph: MultiGraph) -> Matroid {
        let ground = GroundSet::numbered(graph.edge_count());
        Matroid {
            ground,
            backend: Backend::Graphic(graph),
        }
    }

    pub fn linear(rep: LinearRep, ground: GroundSet) -> Result<Matroid> {
        if rep.len() != ground.len() {
            return Err(Error::domain("column count differs from ground set size"));
        }
        Ok(Matroid {
            ground,
            backend: Backend::Linear(rep),
        })
    }

    pub fn quasigraphic(q: QuasiGraphicMatroid) -> Matroid {
        let ground = q.ground().clone();
        Matroid {
            ground,
            backend: Backend::QuasiGraphic(Arc::new(q)),
        }
    }

    /// The cycle matroid of the fan `F_n`; labels `s1..sn, p1..p(n-1)`.
    pub fn fan(n: usize) -> Result<Matroid> {
        if n == 0 {
            return Err(Error::domain("fan order must be positive"));
        }
        let labels = (1..=n)
            .map(|i| format!("s{i}"))
            .chain((1..n).map(|i| format!("p{i}")));
        let ground = GroundSet::new(labels)?;
        Matroid::graphic(MultiGraph::fan(n), ground)
    }

    /// `M(K_3)` with edges `a = 01`, `b = 12`, `c = 02`.
    pub fn triangle() -> Matroid {
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).expect("valid triangle");
        Matroid::graphic(g, GroundSet::new(["a", "b", "c"]).expect("labels")).expect("3 edges")
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn full(&self) -> Subset {
        self.ground.full()
    }

    /// Rank of `x`; elements outside the ground set are a domain error.
    pub fn rank(&self, x: Subset) -> Result<usize> {
        self.ground.check(x)?;
        Ok(self.r(x))
    }

    /// Rank without the membership check.
    pub fn r(&self, x: Subset) -> usize {
        match &self.backend {
            Backend::BaseList { bases, .. } => bases.iter().map(|b| (*b & x).len()).max().unwrap_or(0),
            Backend::Uniform { rank } => x.len().min(*rank),
            Backend::Graphic(g) => g.forest_rank(x),
            Backend::Linear(rep) => rep.rank(x),
            Backend::QuasiGraphic(q) => q.rank_formula(x),
            Backend::Minor(v) => v.parent.r(v.lift(x) | v.contracted) - v.contracted_rank,
            Backend::Dual(m) => m.r(m.full() - x) + x.len() - m.r(m.full()),
        }
    }

    /// `r(M)`.
    pub fn rank_of_matroid(&self) -> usize {
        self.r(self.full())
    }

    pub fn is_independent(&self, x: Subset) -> Result<bool> {
        Ok(self.rank(x)? == x.len())
    }

    pub fn is_base(&self, x: Subset) -> bool {
        x.is_subset_of(self.full()) && x.len() == self.rank_of_matroid() && self.r(x) == x.len()
    }

    /// `λ_M(X) = r(X) + r(E \ X) - r(M)`.
    pub fn lambda(&self, x: Subset) -> Result<usize> {
        self.ground.check(x)?;
        Ok(self.lam(x))
    }

    pub(crate) fn lam(&self, x: Subset) -> usize {
        let full = self.full();
        self.r(x) + self.r(full - x) - self.r(full)
    }

    /// All bases, in increasing bitmask order.
    pub fn bases(&self) -> Result<Vec<Subset>> {
        if let Backend::BaseList { bases, .. } = &self.backend {
            return Ok(bases.clone());
        }
        limits::check("base enumeration ground set", self.len(), Limits::get().enumeration)?;
        let r = self.rank_of_matroid();
        Ok(self
            .full()
            .submasks()
            .filter(|x| x.len() == r && self.r(*x) == r)
            .collect())
    }

    /// All bases, bounded by the subset-scan limit of the caller rather than
    /// the enumeration limit; for internal whole-family constructions.
    pub(crate) fn bases_unlimited(&self) -> Vec<Subset> {
        if let Backend::BaseList { bases, .. } = &self.backend {
            return bases.clone();
        }
        let r = self.rank_of_matroid();
        self.full()
            .submasks()
            .filter(|x| x.len() == r && self.r(*x) == r)
            .collect()
    }

    /// All circuits, in increasing bitmask order.
    pub fn circuits(&self) -> Result<Vec<Subset>> {
        limits::check("circuit enumeration ground set", self.len(), Limits::get().enumeration)?;
        let t = RankTable::new(self)?;
        Ok(self
            .full()
            .submasks()
            .filter(|&x| {
                let k = x.len();
                k > 0 && t.rank(x) == k - 1 && x.iter().all(|e| t.rank(x.without(e)) == k - 1)
            })
            .collect())
    }

    /// Lowest base in bitmask order, found greedily.
    pub fn some_base(&self) -> Subset {
        greedy_base(self, self.full())
    }

    /// Greedy maximal independent subset of `within`, scanning low indices first.
    pub fn basis_of(&self, within: Subset) -> Subset {
        greedy_base(self, within)
    }

    pub fn dual(&self) -> Matroid {
        match &self.backend {
            Backend::Dual(m) => (**m).clone(),
            Backend::Uniform { rank } => Matroid {
                ground: self.ground.clone(),
                backend: Backend::Uniform {
                    rank: self.len() - rank,
                },
            },
            _ => Matroid {
                ground: self.ground.clone(),
                backend: Backend::Dual(Arc::new(self.clone())),
            },
        }
    }

    /// `M \ deleted / contracted` as a lazy view.
    pub fn minor(&self, deleted: Subset, contracted: Subset) -> Result<Matroid> {
        self.ground.check(deleted)?;
        self.ground.check(contracted)?;
        if !deleted.is_disjoint(contracted) {
            return Err(Error::pre(format!(
                "deleted {deleted:?} and contracted {contracted:?} overlap"
            )));
        }
        let kept = self.full() - deleted - contracted;
        Ok(Matroid {
            ground: self.ground.restrict(kept),
            backend: Backend::Minor(MinorView {
                parent: Arc::new(self.clone()),
                deleted,
                contracted,
                kept,
                contracted_rank: self.r(contracted),
            }),
        })
    }

    pub fn delete(&self, x: Subset) -> Result<Matroid> {
        self.minor(x, Subset::EMPTY)
    }

    pub fn contract(&self, x: Subset) -> Result<Matroid> {
        self.minor(Subset::EMPTY, x)
    }

    /// `M | X`, the deletion of the complement.
    pub fn restrict(&self, x: Subset) -> Result<Matroid> {
        self.ground.check(x)?;
        self.minor(self.full() - x, Subset::EMPTY)
    }

    pub fn as_minor(&self) -> Option<&MinorView> {
        match &self.backend {
            Backend::Minor(v) => Some(v),
            _ => None,
        }
    }

    /// Collapse a chain of minor views into one view over the first
    /// non-minor ancestor.
    pub fn flatten(&self) -> Matroid {
        let Backend::Minor(v) = &self.backend else {
            return self.clone();
        };
        let inner = v.parent.flatten();
        let Backend::Minor(pv) = &inner.backend else {
            return self.clone();
        };
        let deleted = pv.deleted | v.deleted.expand(pv.kept);
        let contracted = pv.contracted | v.contracted.expand(pv.kept);
        pv.parent
            .minor(deleted, contracted)
            .expect("composed minor sets are disjoint")
    }

    /// Snapshot into an explicit base list.
    pub fn to_base_list(&self) -> Result<Matroid> {
        let bases = self.bases()?;
        Ok(Matroid::from_bases_unchecked(self.ground.clone(), bases))
    }

    /// Same ground set size and the same rank on every subset.
    pub fn same_rank_function(&self, other: &Matroid) -> bool {
        self.len() == other.len() && self.full().submasks().all(|x| self.r(x) == other.r(x))
    }

    /// Direct sum; the labels of `other` are used as given and must not clash.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.len();
        let labels = self
            .ground
            .labels()
            .iter()
            .chain(other.ground.labels())
            .cloned();
        let ground = GroundSet::new(labels)?;
        let left = self.bases()?;
        let right = other.bases()?;
        let mut bases = Vec::with_capacity(left.len() * right.len());
        for &a in &left {
            for &b in &right {
                bases.push(Subset(a.0 | (b.0 << n)));
            }
        }
        Ok(Matroid::from_bases_unchecked(ground, bases))
    }

    /// Copy with new labels (same length).
    pub fn relabel(&self, ground: GroundSet) -> Result<Matroid> {
        if ground.len() != self.len() {
            return Err(Error::domain("relabel needs the same number of labels"));
        }
        Ok(Matroid {
            ground,
            backend: self.backend.clone(),
        })
    }
}

fn greedy_base(m: &Matroid, within: Subset) -> Subset {
    let mut b = Subset::EMPTY;
    let mut r = 0;
    for e in within {
        let nb = b.with(e);
        if m.r(nb) > r {
            b = nb;
            r += 1;
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    #[test]
    fn uniform_ranks() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.rank(Subset::EMPTY).unwrap(), 0);
        assert_eq!(u.rank(s(&[0, 1, 2])).unwrap(), 2);
        assert!(matches!(u.rank(s(&[5])), Err(Error::Domain(_))));
    }

    #[test]
    fn triangle_rank_and_bases() {
        let k3 = Matroid::triangle();
        assert_eq!(k3.rank(k3.full()).unwrap(), 2);
        assert_eq!(k3.bases().unwrap(), vec![s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]);
        assert_eq!(k3.circuits().unwrap(), vec![s(&[0, 1, 2])]);
    }

    #[test]
    fn uniform_circuits_are_three_sets() {
        let u = Matroid::uniform(2, 4).unwrap();
        let c = u.circuits().unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|x| x.len() == 3));
    }

    #[test]
    fn base_list_axioms_checked() {
        let g = GroundSet::numbered(4);
        // {01, 23} fails exchange
        let err = Matroid::from_bases(g.clone(), [s(&[0, 1]), s(&[2, 3])]).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(Matroid::from_bases(g.clone(), []).is_err());
        assert!(Matroid::from_bases(g.clone(), [s(&[0]), s(&[1, 2])]).is_err());
        let ok = Matroid::from_bases(g, [s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]).unwrap();
        assert_eq!(ok.rank(s(&[3])).unwrap(), 0);
    }

    #[test]
    fn dual_rank_formula() {
        let k3 = Matroid::triangle();
        let d = k3.dual();
        assert_eq!(d.rank(s(&[0])).unwrap(), 1);
        assert_eq!(d.rank_of_matroid(), 1);
        assert!(d.dual().same_rank_function(&k3));
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(u.dual().same_rank_function(&u));
        let free = Matroid::free(["a"]).unwrap();
        assert_eq!(free.dual().bases().unwrap(), vec![Subset::EMPTY]);
    }

    #[test]
    fn minors() {
        let u = Matroid::uniform(2, 4).unwrap();
        let c = u.minor(Subset::EMPTY, s(&[0])).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.rank_of_matroid(), 1);
        assert!(c.same_rank_function(&Matroid::uniform(1, 3).unwrap()));
        assert_eq!(c.ground().labels(), &["2", "3", "4"]);
        let k3 = Matroid::triangle();
        let d = k3.delete(s(&[2])).unwrap();
        assert!(d.same_rank_function(&Matroid::free(["a", "b"]).unwrap()));
        assert!(k3.minor(Subset::EMPTY, Subset::EMPTY).unwrap().same_rank_function(&k3));
        assert!(matches!(k3.minor(s(&[0]), s(&[0])), Err(Error::Precondition(_))));
    }

    #[test]
    fn flatten_composes_views() {
        let f = Matroid::fan(4).unwrap();
        let a = f.minor(s(&[0]), s(&[6])).unwrap();
        let b = a.minor(s(&[1]), s(&[0])).unwrap();
        let flat = b.flatten();
        let v = flat.as_minor().unwrap();
        assert!(matches!(v.parent().backend(), Backend::Graphic(_)));
        assert!(flat.same_rank_function(&b));
        assert_eq!(flat.ground(), b.ground());
    }

    #[test]
    fn fan_basics() {
        let f1 = Matroid::fan(1).unwrap();
        assert!(f1.same_rank_function(&Matroid::free(["x"]).unwrap()));
        let f7 = Matroid::fan(7).unwrap();
        assert_eq!(f7.len(), 13);
        assert_eq!(f7.rank_of_matroid(), 7);
    }

    #[test]
    fn direct_sum_of_triangles() {
        let k3 = Matroid::triangle();
        let other = k3
            .relabel(GroundSet::new(["d", "e", "f"]).unwrap())
            .unwrap();
        let sum = k3.direct_sum(&other).unwrap();
        assert_eq!(sum.rank_of_matroid(), 4);
        assert_eq!(sum.lambda(s(&[0, 1, 2])).unwrap(), 0);
    }
}
