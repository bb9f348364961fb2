//! JSON documents for diagrams, tangles, tensors, matrices and Lie algebra data.
//!
//! Indices in documents are 1-based and rationals are normalized `"p/q"` strings (`"p"`
//! for integers). Emitting is deterministic, so `emit(parse(emit(x))) == emit(x)`.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::{MetrizedLieAlgebra, Representation};
use crate::linalg::QMatrix;
use crate::rational::{self, Q};
use crate::tangle::{ChordDiagram, Head, Tail, Tangle};
use crate::tensor::SymTensor;

/// Any parsed document.
#[derive(Clone, Debug)]
pub enum Document {
    Diagram(ChordDiagram),
    Tangle(Tangle),
    SymTensor(SymTensor),
    Lie(MetrizedLieAlgebra, Representation),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Diagram(_) => "diagram",
            Document::Tangle(_) => "tangle",
            Document::SymTensor(_) => "sym-tensor",
            Document::Lie(..) => "lie",
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Diagram(d) => diagram_to_json(d),
            Document::Tangle(t) => tangle_to_json(t),
            Document::SymTensor(r) => sym_tensor_to_json(r),
            Document::Lie(g, rho) => lie_to_json(g, rho),
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

/// Parses any document, dispatching on its `"kind"` field.
pub fn parse_document(s: &str) -> Result<Document> {
    #[derive(Deserialize)]
    struct Probe {
        kind: String,
    }
    let probe: Probe = serde_json::from_str(s).map_err(json_error)?;
    match probe.kind.as_str() {
        "diagram" => parse_diagram(s).map(Document::Diagram),
        "tangle" => parse_tangle(s).map(Document::Tangle),
        "sym-tensor" => parse_sym_tensor(s).map(Document::SymTensor),
        "lie" => parse_lie(s).map(|(g, r)| Document::Lie(g, r)),
        other => Err(Error::Parse(format!("unknown document kind {other:?}"))),
    }
}

struct JsonQ(Q);

impl Serialize for JsonQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        rational::parse(&s).map(JsonQ).map_err(de::Error::custom)
    }
}

fn check_kind<E: de::Error>(kind: &str, expected: &str) -> std::result::Result<(), E> {
    if kind == expected {
        Ok(())
    } else {
        Err(E::custom(format!("expected kind {expected:?}, found {kind:?}")))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    kind: String,
    m: usize,
    succ: Vec<usize>,
    loops: usize,
}

pub fn diagram_to_json(d: &ChordDiagram) -> String {
    let raw = RawDiagram {
        kind: "diagram".into(),
        m: d.m(),
        succ: d.succ().iter().map(|v| v + 1).collect(),
        loops: d.loops(),
    };
    serde_json::to_string(&raw).expect("serializable")
}

pub fn parse_diagram(s: &str) -> Result<ChordDiagram> {
    let raw: RawDiagram = serde_json::from_str(s).map_err(json_error)?;
    check_kind::<serde_json::Error>(&raw.kind, "diagram").map_err(json_error)?;
    if raw.succ.len() != 2 * raw.m {
        return Err(Error::NotABijection(format!("succ has {} entries, expected 2m = {}", raw.succ.len(), 2 * raw.m)));
    }
    ChordDiagram::from_one_based(&raw.succ, raw.loops)
}

/// An endpoint reference inside a tangle wiring: a 1-based vertex, `"sink:i"` or `"root:i"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ref {
    Vertex(usize),
    Sink(usize),
    Root(usize),
}

impl Serialize for Ref {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Ref::Vertex(v) => s.serialize_u64(v as u64),
            Ref::Sink(i) => s.serialize_str(&format!("sink:{i}")),
            Ref::Root(i) => s.serialize_str(&format!("root:{i}")),
        }
    }
}

impl<'de> Deserialize<'de> for Ref {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Ref;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a 1-based vertex number, \"sink:i\" or \"root:i\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Ref, E> {
                if v == 0 {
                    return Err(E::custom("vertices are numbered from 1"));
                }
                Ok(Ref::Vertex(v as usize))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Ref, E> {
                let (tag, idx) = s.split_once(':').ok_or_else(|| E::invalid_value(de::Unexpected::Str(s), &self))?;
                let i: usize = idx.parse().map_err(|_| E::invalid_value(de::Unexpected::Str(s), &self))?;
                if i == 0 {
                    return Err(E::custom("labels are numbered from 1"));
                }
                match tag {
                    "sink" => Ok(Ref::Sink(i)),
                    "root" => Ok(Ref::Root(i)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(s), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWiring {
    internal: Vec<Ref>,
    roots: Vec<Ref>,
    sinks_from: Vec<Ref>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTangle {
    kind: String,
    k: usize,
    m: usize,
    wiring: RawWiring,
    loops: usize,
}

fn head_ref(h: Head) -> Ref {
    match h {
        Head::Vertex(v) => Ref::Vertex(v + 1),
        Head::Sink(i) => Ref::Sink(i + 1),
    }
}

fn tail_ref(t: Tail) -> Ref {
    match t {
        Tail::Vertex(v) => Ref::Vertex(v + 1),
        Tail::Root(i) => Ref::Root(i + 1),
    }
}

pub fn tangle_to_json(t: &Tangle) -> String {
    let raw = RawTangle {
        kind: "tangle".into(),
        k: t.k(),
        m: t.m(),
        wiring: RawWiring {
            internal: (0..2 * t.m()).map(|v| head_ref(t.head_of_vertex(v))).collect(),
            roots: (0..t.k()).map(|i| head_ref(t.head_of_root(i))).collect(),
            sinks_from: (0..t.k()).map(|i| tail_ref(t.tail_of_sink(i))).collect(),
        },
        loops: t.loops(),
    };
    serde_json::to_string(&raw).expect("serializable")
}

pub fn parse_tangle(s: &str) -> Result<Tangle> {
    let raw: RawTangle = serde_json::from_str(s).map_err(json_error)?;
    check_kind::<serde_json::Error>(&raw.kind, "tangle").map_err(json_error)?;
    let w = &raw.wiring;
    if w.internal.len() != 2 * raw.m {
        return Err(Error::NotABijection(format!(
            "wiring.internal has {} entries, expected 2m = {}",
            w.internal.len(),
            2 * raw.m
        )));
    }
    if w.roots.len() != raw.k || w.sinks_from.len() != raw.k {
        return Err(Error::LabelMismatch { left: raw.k, right: w.roots.len().max(w.sinks_from.len()) });
    }
    let to_head = |field: &str, i: usize, r: Ref| match r {
        Ref::Vertex(v) => Ok(Head::Vertex(v - 1)),
        Ref::Sink(j) => Ok(Head::Sink(j - 1)),
        Ref::Root(_) => Err(Error::Parse(format!("wiring.{field}[{i}]: a head cannot be a root"))),
    };
    let vertex_heads = w.internal.iter().enumerate().map(|(i, &r)| to_head("internal", i, r)).collect::<Result<Vec<_>>>()?;
    let root_heads = w.roots.iter().enumerate().map(|(i, &r)| to_head("roots", i, r)).collect::<Result<Vec<_>>>()?;
    let t = Tangle::from_heads(raw.k, &vertex_heads, &root_heads, raw.loops)?;
    for (i, &r) in w.sinks_from.iter().enumerate() {
        if matches!(r, Ref::Sink(_)) {
            return Err(Error::Parse(format!("wiring.sinks_from[{i}]: a tail cannot be a sink")));
        }
        let actual = tail_ref(t.tail_of_sink(i));
        if r != actual {
            return Err(Error::NotABijection(format!(
                "wiring.sinks_from[{i}] says {r:?} but the edge entering sink:{} leaves {actual:?}",
                i + 1
            )));
        }
    }
    Ok(t)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSymTensor {
    kind: String,
    n: usize,
    entries: Vec<(usize, usize, usize, usize, JsonQ)>,
}

pub fn sym_tensor_to_json(r: &SymTensor) -> String {
    let raw = RawSymTensor {
        kind: "sym-tensor".into(),
        n: r.n(),
        entries: r.nonzero().map(|((a, b, c, d), v)| (a + 1, b + 1, c + 1, d + 1, JsonQ(v.clone()))).collect(),
    };
    serde_json::to_string(&raw).expect("serializable")
}

pub fn parse_sym_tensor(s: &str) -> Result<SymTensor> {
    let raw: RawSymTensor = serde_json::from_str(s).map_err(json_error)?;
    check_kind::<serde_json::Error>(&raw.kind, "sym-tensor").map_err(json_error)?;
    let n = raw.n;
    let mut dense = vec![rational::zero(); n.pow(4)];
    let mut seen = vec![false; n.pow(4)];
    for (x, (a, b, c, d, v)) in raw.entries.into_iter().enumerate() {
        let idx = [a, b, c, d];
        if idx.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::Parse(format!("entries[{x}]: index out of range 1..={n}")));
        }
        let flat = idx.iter().fold(0, |acc, &i| acc * n + (i - 1));
        if seen[flat] {
            return Err(Error::Parse(format!("entries[{x}]: duplicate index ({a}, {b}, {c}, {d})")));
        }
        seen[flat] = true;
        dense[flat] = v.0;
    }
    SymTensor::new(n, dense)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: Vec<Vec<JsonQ>>,
}

impl RawMatrix {
    fn from_matrix(m: &QMatrix) -> Self {
        RawMatrix { rows: m.to_rows().into_iter().map(|r| r.into_iter().map(JsonQ).collect()).collect() }
    }

    fn into_matrix(self) -> Result<QMatrix> {
        QMatrix::from_rows(self.rows.into_iter().map(|r| r.into_iter().map(|q| q.0).collect()).collect())
    }
}

pub fn matrix_to_json(m: &QMatrix) -> String {
    serde_json::to_string(&RawMatrix::from_matrix(m)).expect("serializable")
}

pub fn parse_matrix(s: &str) -> Result<QMatrix> {
    serde_json::from_str::<RawMatrix>(s).map_err(json_error)?.into_matrix()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    n: usize,
    images: Vec<RawMatrix>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLie {
    kind: String,
    dim: usize,
    structure: Vec<(usize, usize, usize, JsonQ)>,
    gram: Vec<Vec<JsonQ>>,
    rep: RawRep,
}

pub fn lie_to_json(g: &MetrizedLieAlgebra, rho: &Representation) -> String {
    let d = g.dim();
    let mut structure = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                let c = g.bracket_coeff(i, j, l);
                if !num_traits::Zero::is_zero(c) {
                    structure.push((i + 1, j + 1, l + 1, JsonQ(c.clone())));
                }
            }
        }
    }
    let raw = RawLie {
        kind: "lie".into(),
        dim: d,
        structure,
        gram: RawMatrix::from_matrix(g.gram()).rows,
        rep: RawRep { n: rho.n(), images: rho.images().iter().map(RawMatrix::from_matrix).collect() },
    };
    serde_json::to_string(&raw).expect("serializable")
}

pub fn parse_lie(s: &str) -> Result<(MetrizedLieAlgebra, Representation)> {
    let raw: RawLie = serde_json::from_str(s).map_err(json_error)?;
    check_kind::<serde_json::Error>(&raw.kind, "lie").map_err(json_error)?;
    let d = raw.dim;
    let mut structure = vec![rational::zero(); d.pow(3)];
    let mut seen = vec![false; d.pow(3)];
    for (x, (i, j, l, v)) in raw.structure.into_iter().enumerate() {
        if [i, j, l].iter().any(|&a| a == 0 || a > d) {
            return Err(Error::Parse(format!("structure[{x}]: index out of range 1..={d}")));
        }
        let flat = ((i - 1) * d + (j - 1)) * d + (l - 1);
        if seen[flat] {
            return Err(Error::Parse(format!("structure[{x}]: duplicate index ({i}, {j}, {l})")));
        }
        seen[flat] = true;
        structure[flat] = v.0;
    }
    let gram = RawMatrix { rows: raw.gram }.into_matrix()?;
    let g = MetrizedLieAlgebra::new(d, structure, gram)?;
    let images = raw.rep.images.into_iter().map(RawMatrix::into_matrix).collect::<Result<Vec<_>>>()?;
    let rho = Representation::new(&g, raw.rep.n, images)?;
    Ok((g, rho))
}
