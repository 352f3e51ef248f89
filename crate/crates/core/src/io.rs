//! JSON formats: matroid files, explicit twisted matroids, and certificate
//! bundles that embed their input so a validator can replay them alone.
//!
//! ```json
//! {"ground": ["a", "b", "c"],
//!  "backend": {"type": "graphic", "vertices": 3, "edges": [[0, 1, "a"], [1, 2, "b"], [0, 2, "c"]]}}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::lollipop::{validate_chain, validate_lollipop, validate_lollipop_minor, Lollipop, LollipopMinor, NestedLollipopChain};
use crate::matroid::{Backend, LinearRep, Matroid};
use crate::quasigraphic::{QuasiGraphicMatroid, Tripartition};
use crate::subset::{GroundSet, Subset};
use crate::twisted::{twist_of, validate_fan_certificate, FanCertificate, TwistedMatroid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: usize,
    /// `[u, v, label]`; `u = v` is a loop.
    pub edges: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BackendFile {
    Bases {
        bases: Vec<Vec<String>>,
    },
    Uniform {
        rank: usize,
    },
    Graphic(GraphFile),
    Linear {
        q: u32,
        columns: BTreeMap<String, Vec<u32>>,
    },
    Quasigraphic {
        graph: GraphFile,
        balanced: Vec<Vec<String>>,
        #[serde(rename = "L")]
        lift: Vec<Vec<String>>,
        #[serde(rename = "F")]
        frame: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidFile {
    pub ground: Vec<String>,
    pub backend: BackendFile,
}

fn labels_to_subset(g: &GroundSet, labels: &[String]) -> Result<Subset> {
    g.subset(labels)
}

fn build_graph(g: &GroundSet, file: &GraphFile) -> Result<MultiGraph> {
    let mut edges = vec![None; g.len()];
    for (u, v, label) in &file.edges {
        let i = g
            .index_of(label)
            .ok_or_else(|| Error::domain(format!("edge label {label:?} is not in the ground set")))?;
        if edges[i].replace((*u, *v)).is_some() {
            return Err(Error::domain(format!("edge label {label:?} used twice")));
        }
    }
    let edges: Vec<(usize, usize)> = edges
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or_else(|| Error::domain(format!("element {:?} has no edge", g.label(i)))))
        .collect::<Result<_>>()?;
    MultiGraph::new(file.vertices, edges)
}

fn graph_file(g: &GroundSet, graph: &MultiGraph) -> GraphFile {
    GraphFile {
        vertices: graph.vertex_count(),
        edges: graph
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, g.label(i).to_string()))
            .collect(),
    }
}

impl MatroidFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        let g = GroundSet::new(self.ground.iter().cloned())?;
        match &self.backend {
            BackendFile::Bases { bases } => {
                let bs = bases.iter().map(|b| labels_to_subset(&g, b)).collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(g, bs)
            }
            BackendFile::Uniform { rank } => Matroid::uniform_on(*rank, g),
            BackendFile::Graphic(file) => {
                let graph = build_graph(&g, file)?;
                Matroid::graphic(graph, g)
            }
            BackendFile::Linear { q, columns } => {
                if columns.len() != g.len() {
                    return Err(Error::domain("need exactly one column per element"));
                }
                let cols = g
                    .labels()
                    .iter()
                    .map(|l| {
                        columns
                            .get(l)
                            .cloned()
                            .ok_or_else(|| Error::domain(format!("no column for {l:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Matroid::linear(LinearRep::new(*q, cols)?, g)
            }
            BackendFile::Quasigraphic { graph, balanced, lift, frame } => {
                let mg = build_graph(&g, graph)?;
                let conv = |cs: &[Vec<String>]| cs.iter().map(|c| labels_to_subset(&g, c)).collect::<Result<Vec<_>>>();
                let t = Tripartition {
                    balanced: conv(balanced)?,
                    lift: conv(lift)?,
                    frame: conv(frame)?,
                    graph: mg,
                    ground: g.clone(),
                };
                Ok(Matroid::quasigraphic(QuasiGraphicMatroid::new(t)?))
            }
        }
    }

    /// Graphic, uniform, linear and quasi-graphic matroids keep their
    /// backend; everything else is written as a base list.
    pub fn from_matroid(m: &Matroid) -> Result<MatroidFile> {
        let g = m.ground();
        let names = |x: Subset| g.names(x);
        let backend = match m.backend() {
            Backend::Uniform { rank } => BackendFile::Uniform { rank: *rank },
            Backend::Graphic(graph) => BackendFile::Graphic(graph_file(g, graph)),
            Backend::Linear(rep) => BackendFile::Linear {
                q: rep.field(),
                columns: g.labels().iter().cloned().zip(rep.columns().iter().cloned()).collect(),
            },
            Backend::QuasiGraphic(q) => {
                let t = q.partition();
                let conv = |cs: &[Subset]| {
                    let mut v: Vec<Vec<String>> = cs.iter().map(|&c| names(c)).collect();
                    v.sort();
                    v
                };
                BackendFile::Quasigraphic {
                    graph: graph_file(g, &t.graph),
                    balanced: conv(&t.balanced),
                    lift: conv(&t.lift),
                    frame: conv(&t.frame),
                }
            }
            _ => BackendFile::Bases {
                bases: m.bases()?.into_iter().map(names).collect(),
            },
        };
        Ok(MatroidFile { ground: g.labels().to_vec(), backend })
    }
}

pub(crate) fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialisable value")
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    parse_json::<MatroidFile>(text)?.to_matroid()
}

pub fn matroid_to_json(m: &Matroid) -> Result<String> {
    Ok(to_json(&MatroidFile::from_matroid(m)?))
}

/// An explicit feasible family, members as label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedFile {
    pub universe: Vec<String>,
    pub ground: Vec<String>,
    pub feasible: Vec<Vec<String>>,
}

impl TwistedFile {
    pub fn from_twisted(w: &TwistedMatroid) -> TwistedFile {
        TwistedFile {
            universe: w.universe().labels().to_vec(),
            ground: w.names(w.ground()),
            feasible: w.feasible().iter().map(|&f| w.names(f)).collect(),
        }
    }

    /// Rebuilds and checks the twisted-matroid axioms.
    pub fn to_twisted(&self) -> Result<TwistedMatroid> {
        let u = GroundSet::new(self.universe.iter().cloned())?;
        let ground = u.subset(&self.ground)?;
        let fam = self.feasible.iter().map(|f| u.subset(f)).collect::<Result<Vec<_>>>()?;
        TwistedMatroid::from_family(u, ground, fam)
    }
}

/// A lollipop witness in labels. `stick` runs from the far end towards `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LollipopFile {
    pub a: usize,
    pub b: usize,
    pub twist: Vec<String>,
    pub stick: Vec<String>,
    pub z: String,
    pub candy: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntryFile {
    pub stick: Vec<String>,
    pub z: String,
    pub candy: Vec<String>,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFile {
    pub a: usize,
    pub twist: Vec<String>,
    pub entries: Vec<ChainEntryFile>,
}

/// Inputs plus witnesses; replayable with [`replay_bundle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Bundle {
    /// `M` has an `M(F_n)` minor: `path` is an induced path of `G(M, base)`.
    FanCertificate {
        matroid: MatroidFile,
        n: usize,
        base: Vec<String>,
        path: Vec<String>,
    },
    /// A lollipop minor of `twist_of(matroid, base)`, with the nested chain
    /// that produced it when there was one.
    Lollipop {
        matroid: MatroidFile,
        base: Vec<String>,
        lollipop: LollipopFile,
        chain: Option<ChainFile>,
    },
}

impl Bundle {
    pub fn fan(m: &Matroid, c: &FanCertificate) -> Result<Bundle> {
        let g = m.ground();
        Ok(Bundle::FanCertificate {
            matroid: MatroidFile::from_matroid(m)?,
            n: c.n,
            base: g.names(c.base),
            path: c.path.iter().map(|&v| g.label(v).to_string()).collect(),
        })
    }

    pub fn lollipop(
        m: &Matroid,
        base: Subset,
        found: &LollipopMinor,
        a: usize,
        b: usize,
        chain: Option<&NestedLollipopChain>,
    ) -> Result<Bundle> {
        let g = m.ground();
        let l = &found.lollipop;
        let order = l.stick_order();
        let label = |v: usize| g.label(v).to_string();
        let chain = chain.map(|c| ChainFile {
            a: c.a,
            twist: g.names(c.twist),
            entries: c
                .entries
                .iter()
                .map(|e| ChainEntryFile { stick: g.names(e.s), z: label(e.z), candy: g.names(e.c), bound: e.bound })
                .collect(),
        });
        Ok(Bundle::Lollipop {
            matroid: MatroidFile::from_matroid(m)?,
            base: g.names(base),
            lollipop: LollipopFile {
                a,
                b,
                twist: g.names(found.twist),
                stick: order[..order.len() - 1].iter().map(|&v| label(v)).collect(),
                z: label(l.z),
                candy: g.names(l.c),
            },
            chain,
        })
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn parse_bundle(text: &str) -> Result<Bundle> {
    parse_json(text)
}

/// Re-checks every witness in a bundle against its embedded input.
/// Outer errors are malformed input; the inner result is the verdict.
pub fn replay_bundle(bundle: &Bundle) -> Result<std::result::Result<(), String>> {
    match bundle {
        Bundle::FanCertificate { matroid, n, base, path } => {
            let m = matroid.to_matroid()?;
            let g = m.ground();
            let path = path
                .iter()
                .map(|l| g.index_of(l).ok_or_else(|| Error::domain(format!("unknown label {l:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let c = FanCertificate { n: *n, base: g.subset(base)?, path };
            Ok(validate_fan_certificate(&m, &c))
        }
        Bundle::Lollipop { matroid, base, lollipop, chain } => {
            let m = matroid.to_matroid()?;
            let g = m.ground();
            let b0 = g.subset(base)?;
            if !m.is_base(b0) {
                return Ok(Err("recorded base is not a base".into()));
            }
            let w = twist_of(&m, b0)?;
            let twist = g.subset(&lollipop.twist)?;
            let s = g.subset(&lollipop.stick)?;
            let z = g
                .index_of(&lollipop.z)
                .ok_or_else(|| Error::domain(format!("unknown label {:?}", lollipop.z)))?;
            let c = g.subset(&lollipop.candy)?;
            if !w.is_feasible(twist) {
                return Ok(Err("recorded twist is not feasible".into()));
            }
            let twisted = w.twist(twist)?.restrict(s.with(z) | c)?;
            let found = LollipopMinor { lollipop: Lollipop::new(twisted, s, z, c), twist };
            if let Err(e) = validate_lollipop_minor(&w, &found) {
                return Ok(Err(e));
            }
            let check = validate_lollipop(&found.lollipop, lollipop.a, lollipop.b)?;
            if !check.ok {
                return Ok(Err(check.diagnostic));
            }
            if let Some(cf) = chain {
                let entries = cf
                    .entries
                    .iter()
                    .map(|e| {
                        let s = g.subset(&e.stick)?;
                        let z = g.index_of(&e.z).ok_or_else(|| Error::domain(format!("unknown label {:?}", e.z)))?;
                        let c = g.subset(&e.candy)?;
                        Ok(crate::lollipop::ChainEntry { e: s.with(z) | c, s, z, c, bound: e.bound })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let ch = NestedLollipopChain { a: cf.a, twist: g.subset(&cf.twist)?, entries };
                if let Err(e) = validate_chain(&w, &ch)? {
                    return Ok(Err(e));
                }
            }
            Ok(Ok(()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lollipop::{find_lollipop, Rigor};
    use crate::quasigraphic::bicircular_fan;

    fn roundtrip(m: &Matroid) -> Matroid {
        let text = matroid_to_json(m).unwrap();
        parse_matroid(&text).unwrap()
    }

    #[test]
    fn backends_roundtrip() {
        let ms = vec![
            Matroid::uniform(2, 4).unwrap(),
            Matroid::fan(3).unwrap(),
            Matroid::linear(LinearRep::new(3, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]).unwrap(), GroundSet::numbered(4)).unwrap(),
            Matroid::quasigraphic(bicircular_fan(3).unwrap()),
            Matroid::fan(3).unwrap().contract(Subset::singleton(0)).unwrap(),
            Matroid::uniform(1, 3).unwrap().dual(),
        ];
        for m in ms {
            let back = roundtrip(&m);
            assert_eq!(back.ground(), m.ground());
            assert!(back.same_rank_function(&m));
        }
    }

    #[test]
    fn parse_failures() {
        assert!(matches!(parse_matroid("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_matroid(r#"{"ground":["a"],"backend":{"type":"nope"}}"#), Err(Error::Parse(_))));
        let bad = r#"{"ground":["a","b"],"backend":{"type":"bases","bases":[["a"],["a","b"]]}}"#;
        assert!(parse_matroid(bad).is_err());
        let graphic = r#"{"ground":["a","b","c"],"backend":{"type":"graphic","vertices":3,"edges":[[0,1,"a"],[1,2,"b"],[0,2,"c"]]}}"#;
        assert_eq!(parse_matroid(graphic).unwrap().rank_of_matroid(), 2);
    }

    #[test]
    fn twisted_file_roundtrip() {
        let m = Matroid::fan(3).unwrap();
        let w = twist_of(&m, Subset::full(3)).unwrap();
        let f = TwistedFile::from_twisted(&w);
        let text = to_json(&f);
        let back: TwistedFile = parse_json(&text).unwrap();
        assert_eq!(back.to_twisted().unwrap(), w);
    }

    #[test]
    fn bundles_replay_and_catch_tampering() {
        let m = Matroid::fan(4).unwrap();
        let c = crate::twisted::find_fan_certificate(&m, 3).unwrap().unwrap();
        let b = Bundle::fan(&m, &c).unwrap();
        let back = parse_bundle(&b.to_json()).unwrap();
        assert_eq!(replay_bundle(&back).unwrap(), Ok(()));
        if let Bundle::FanCertificate { matroid, n, base, mut path } = back {
            path.swap(0, 2);
            let t = Bundle::FanCertificate { matroid, n, base, path };
            assert!(replay_bundle(&t).unwrap().is_err());
        }

        let base = Subset::full(4);
        let w = twist_of(&m, base).unwrap();
        let found = find_lollipop(&w, 0, 0, 3, Rigor::Opportunistic).unwrap();
        let b = Bundle::lollipop(&m, base, &found, 0, 0, None).unwrap();
        assert_eq!(replay_bundle(&parse_bundle(&b.to_json()).unwrap()).unwrap(), Ok(()));
        if let Bundle::Lollipop { matroid, base, mut lollipop, chain } = b {
            lollipop.a = 5;
            let t = Bundle::Lollipop { matroid, base, lollipop, chain };
            assert!(replay_bundle(&t).unwrap().is_err());
        }
    }
}
