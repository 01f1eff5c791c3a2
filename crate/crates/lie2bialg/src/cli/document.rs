//! Versioned JSON documents describing the objects the checker works on.
//!
//! Coefficients are exact rational strings. Tables are sparse maps keyed by
//! basis labels; a bracket or tensor argument pair is written `"u,v"`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::bialgebra::{ManinTripleData, RMatrixData, StrictLie2Bialgebra};
use crate::cohomology::CocyclePair;
use crate::graded::{format_scalar, parse_scalar, GradedSpace2, Matrix, Scalar, TensorElement};
use crate::lie2::{LieAlgebra, StrictLie2Algebra};
use crate::prelie::LeftSymmetricAlgebra;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    Version(u64),
    #[error("unknown kind '{0}'")]
    Kind(String),
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> DocError {
    DocError::Invalid(msg.into())
}

/// Label → rational string.
pub type Coeffs = BTreeMap<String, String>;
/// Key (a label or a `"u,v"` pair) → coefficients.
pub type Table = BTreeMap<String, Coeffs>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dimensions {
    pub g0: usize,
    pub g_minus1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedLabels {
    pub g0: Vec<String>,
    pub g_minus1: Vec<String>,
}

/// A strict Lie 2-algebra: `d` maps each degree -1 label to its image, and
/// `bracket` lists `[x, y]` and `[x, h]` with `x, y` in degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dimensions: Dimensions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<GradedLabels>,
    #[serde(default)]
    pub d: Table,
    #[serde(default)]
    pub bracket: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManinDoc {
    pub form: Coeffs,
    pub first_half: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lie2Doc {
    pub algebra: AlgebraDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manin: Option<ManinDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraDoc {
    pub algebra: AlgebraDoc,
    /// Basis label → `{"u,v": c}` for the tensor `Σ c u⊗v`.
    pub delta: Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RmatrixDoc {
    pub algebra: AlgebraDoc,
    pub r: Coeffs,
    #[serde(default)]
    pub frak_r: Coeffs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrelieDoc {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_labels: Option<Vec<String>>,
    #[serde(default)]
    pub product: Table,
    /// Dual label `e_a*` → `d(e_a*)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Table>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymplecticDoc {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub bracket: Table,
    pub omega: Coeffs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Lie2(Lie2Doc),
    Prelie(PrelieDoc),
    Bialgebra(BialgebraDoc),
    Rmatrix(RmatrixDoc),
    Symplectic(SymplecticDoc),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Lie2(_) => "lie2",
            Body::Prelie(_) => "prelie",
            Body::Bialgebra(_) => "bialgebra",
            Body::Rmatrix(_) => "rmatrix",
            Body::Symplectic(_) => "symplectic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub schema_version: u32,
    pub metadata: Option<Metadata>,
    pub body: Body,
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, DocError> {
    serde_json::from_value(v).map_err(|e| DocError::Json(e.to_string()))
}

impl Document {
    pub fn new(body: Body, metadata: Option<Metadata>) -> Self {
        Document { schema_version: SCHEMA_VERSION, metadata, body }
    }

    pub fn kind(&self) -> &'static str {
        self.body.kind()
    }

    pub fn name(&self) -> Option<&str> {
        self.metadata.as_ref()?.name.as_deref()
    }

    pub fn from_json(text: &str) -> Result<Self, DocError> {
        let value: Value = serde_json::from_str(text).map_err(|e| DocError::Json(e.to_string()))?;
        let Value::Object(mut map) = value else {
            return Err(DocError::Json("top level must be an object".into()));
        };
        let version = map
            .remove("schema_version")
            .ok_or_else(|| invalid("missing field `schema_version`"))?
            .as_u64()
            .ok_or_else(|| invalid("`schema_version` must be a non-negative integer"))?;
        if version != u64::from(SCHEMA_VERSION) {
            return Err(DocError::Version(version));
        }
        let kind = match map.remove("kind") {
            Some(Value::String(s)) => s,
            Some(_) => return Err(invalid("`kind` must be a string")),
            None => return Err(invalid("missing field `kind`")),
        };
        let metadata = map.remove("metadata").map(from_value).transpose()?;
        let rest = Value::Object(map);
        let body = match kind.as_str() {
            "lie2" => Body::Lie2(from_value(rest)?),
            "prelie" => Body::Prelie(from_value(rest)?),
            "bialgebra" => Body::Bialgebra(from_value(rest)?),
            "rmatrix" => Body::Rmatrix(from_value(rest)?),
            "symplectic" => Body::Symplectic(from_value(rest)?),
            _ => return Err(DocError::Kind(kind)),
        };
        Ok(Document { schema_version: SCHEMA_VERSION, metadata, body })
    }

    pub fn to_value(&self) -> Value {
        let body = match &self.body {
            Body::Lie2(b) => serde_json::to_value(b),
            Body::Prelie(b) => serde_json::to_value(b),
            Body::Bialgebra(b) => serde_json::to_value(b),
            Body::Rmatrix(b) => serde_json::to_value(b),
            Body::Symplectic(b) => serde_json::to_value(b),
        }
        .expect("documents serialize");
        let mut map = Map::new();
        map.insert("schema_version".into(), self.schema_version.into());
        map.insert("kind".into(), self.kind().into());
        if let Some(m) = &self.metadata {
            map.insert("metadata".into(), serde_json::to_value(m).expect("metadata serializes"));
        }
        if let Value::Object(fields) = body {
            map.extend(fields);
        }
        Value::Object(map)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("documents serialize");
        s.push('\n');
        s
    }
}

/// The mathematical content of a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Lie2 { algebra: StrictLie2Algebra, manin: Option<ManinTripleData> },
    /// A left-symmetric algebra with an optional `M(d)`.
    Prelie { algebra: LeftSymmetricAlgebra, m: Option<Matrix> },
    Bialgebra(StrictLie2Bialgebra),
    RMatrix { algebra: StrictLie2Algebra, rm: RMatrixData },
    Symplectic { lie: LieAlgebra, omega: Matrix, labels: Vec<String> },
}

fn scalar(s: &str) -> Result<Scalar, DocError> {
    parse_scalar(s).map_err(|e| invalid(e.to_string()))
}

fn coeffs_of(pairs: impl IntoIterator<Item = (String, Scalar)>) -> Coeffs {
    pairs.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, format_scalar(&c))).collect()
}

fn split_pair(key: &str) -> Result<(&str, &str), DocError> {
    key.split_once(',').ok_or_else(|| invalid(format!("expected a pair \"u,v\", got \"{key}\"")))
}

fn check_labels(labels: &[String]) -> Result<(), DocError> {
    let mut seen = HashMap::new();
    for l in labels {
        if l.is_empty() || l.contains(',') || l.chars().any(char::is_whitespace) {
            return Err(invalid(format!("invalid label \"{l}\"")));
        }
        if seen.insert(l.as_str(), ()).is_some() {
            return Err(invalid(format!("duplicate label \"{l}\"")));
        }
    }
    Ok(())
}

fn labels_or(given: Option<&Vec<String>>, n: usize, default: impl Fn(usize) -> String, what: &str) -> Result<Vec<String>, DocError> {
    match given {
        Some(l) if l.len() != n => Err(invalid(format!("{what}: {} labels for dimension {n}", l.len()))),
        Some(l) => Ok(l.clone()),
        None => Ok((1..=n).map(default).collect()),
    }
}

/// Label lookup over a combined basis.
struct Basis {
    index: HashMap<String, usize>,
}

impl Basis {
    fn new(labels: &[String]) -> Result<Self, DocError> {
        check_labels(labels)?;
        Ok(Basis { index: labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect() })
    }

    fn get(&self, label: &str) -> Result<usize, DocError> {
        self.index.get(label).copied().ok_or_else(|| invalid(format!("unknown label \"{label}\"")))
    }

    fn pair(&self, key: &str) -> Result<(usize, usize), DocError> {
        let (u, v) = split_pair(key)?;
        Ok((self.get(u)?, self.get(v)?))
    }
}

fn space_of(a: &AlgebraDoc) -> Result<GradedSpace2, DocError> {
    let Dimensions { g0: n0, g_minus1: n1 } = a.dimensions;
    let labels0 = labels_or(a.labels.as_ref().map(|l| &l.g0), n0, |i| format!("x{i}"), "labels.g0")?;
    let labels1 = labels_or(a.labels.as_ref().map(|l| &l.g_minus1), n1, |i| format!("h{i}"), "labels.g_minus1")?;
    Ok(GradedSpace2::with_labels(labels0, labels1))
}

fn combined_labels(space: &GradedSpace2) -> Vec<String> {
    space.labels0.iter().chain(&space.labels_m1).cloned().collect()
}

pub fn algebra_from_doc(a: &AlgebraDoc) -> Result<StrictLie2Algebra, DocError> {
    let space = space_of(a)?;
    let (n0, n1) = (space.dim0, space.dim_m1);
    let basis = Basis::new(&combined_labels(&space))?;
    let mut l = StrictLie2Algebra::abelian(n0, n1);
    l.space = space;
    let degree0 = |u: usize, what: &str| if u < n0 { Ok(u) } else { Err(invalid(format!("{what} must have degree 0"))) };
    let degree1 = |u: usize, what: &str| if u >= n0 { Ok(u - n0) } else { Err(invalid(format!("{what} must have degree -1"))) };
    for (h, image) in &a.d {
        let col = degree1(basis.get(h)?, &format!("d: argument {h}"))?;
        for (x, c) in image {
            let row = degree0(basis.get(x)?, &format!("d({h}): component {x}"))?;
            l.d.set(row, col, scalar(c)?);
        }
    }
    for (key, value) in &a.bracket {
        let (u, v) = basis.pair(key)?;
        let i = degree0(u, &format!("bracket [{key}]: first argument"))?;
        for (w, c) in value {
            let k = basis.get(w)?;
            let what = format!("bracket [{key}]: component {w}");
            if v < n0 {
                l.set_c00(i, v, degree0(k, &what)?, scalar(c)?);
            } else {
                l.set_c01(i, v - n0, degree1(k, &what)?, scalar(c)?);
            }
        }
    }
    Ok(l)
}

pub fn algebra_to_doc(l: &StrictLie2Algebra) -> AlgebraDoc {
    let (n0, n1) = (l.n0(), l.n1());
    let s = &l.space;
    let mut d = Table::new();
    for a in 0..n1 {
        let image = coeffs_of((0..n0).map(|i| (s.labels0[i].clone(), l.d.get(i, a).clone())));
        if !image.is_empty() {
            d.insert(s.labels_m1[a].clone(), image);
        }
    }
    let mut bracket = Table::new();
    for i in 0..n0 {
        for j in 0..n0 {
            let v = coeffs_of((0..n0).map(|k| (s.labels0[k].clone(), l.c00(i, j, k).clone())));
            if !v.is_empty() {
                bracket.insert(format!("{},{}", s.labels0[i], s.labels0[j]), v);
            }
        }
        for a in 0..n1 {
            let v = coeffs_of((0..n1).map(|b| (s.labels_m1[b].clone(), l.c01(i, a, b).clone())));
            if !v.is_empty() {
                bracket.insert(format!("{},{}", s.labels0[i], s.labels_m1[a]), v);
            }
        }
    }
    AlgebraDoc {
        dimensions: Dimensions { g0: n0, g_minus1: n1 },
        labels: Some(GradedLabels { g0: s.labels0.clone(), g_minus1: s.labels_m1.clone() }),
        d,
        bracket,
    }
}

fn tensor_from(pairs: &Coeffs, basis: &Basis, n0: usize, n1: usize) -> Result<TensorElement, DocError> {
    let mut t = TensorElement::zeros(n0, n1);
    for (key, c) in pairs {
        let (u, v) = basis.pair(key)?;
        t.set(u, v, scalar(c)?);
    }
    Ok(t)
}

fn tensor_to(t: &TensorElement, labels: &[String]) -> Coeffs {
    coeffs_of(t.terms().into_iter().map(|(u, v, c)| (format!("{},{}", labels[u], labels[v]), c)))
}

fn square_from(pairs: &Coeffs, basis: &Basis, n: usize) -> Result<Matrix, DocError> {
    let mut m = Matrix::zeros(n, n);
    for (key, c) in pairs {
        let (u, v) = basis.pair(key)?;
        m.set(u, v, scalar(c)?);
    }
    Ok(m)
}

fn square_to(m: &Matrix, labels: &[String]) -> Coeffs {
    let n = m.rows();
    coeffs_of((0..n).flat_map(|u| (0..n).map(move |v| (u, v))).map(|(u, v)| (format!("{},{}", labels[u], labels[v]), m.get(u, v).clone())))
}

/// Reads `key → {label: c}` into `(key index, label index, c)` triples.
fn sparse_table(t: &Table, keys: &Basis, values: &Basis) -> Result<Vec<(usize, usize, Scalar)>, DocError> {
    let mut out = Vec::new();
    for (k, row) in t {
        let ki = keys.get(k)?;
        for (v, c) in row {
            out.push((ki, values.get(v)?, scalar(c)?));
        }
    }
    Ok(out)
}

fn product_table(t: &Table, basis: &Basis) -> Result<Vec<(usize, usize, usize, Scalar)>, DocError> {
    let mut out = Vec::new();
    for (key, row) in t {
        let (i, j) = basis.pair(key)?;
        for (w, c) in row {
            out.push((i, j, basis.get(w)?, scalar(c)?));
        }
    }
    Ok(out)
}

fn product_to_table(n: usize, labels: &[String], f: impl Fn(usize, usize, usize) -> Scalar) -> Table {
    let mut out = Table::new();
    for i in 0..n {
        for j in 0..n {
            let row = coeffs_of((0..n).map(|k| (labels[k].clone(), f(i, j, k))));
            if !row.is_empty() {
                out.insert(format!("{},{}", labels[i], labels[j]), row);
            }
        }
    }
    out
}

impl Document {
    pub fn interpret(&self) -> Result<Object, DocError> {
        match &self.body {
            Body::Lie2(b) => {
                let algebra = algebra_from_doc(&b.algebra)?;
                let manin = match &b.manin {
                    None => None,
                    Some(m) => {
                        let labels = combined_labels(&algebra.space);
                        let basis = Basis::new(&labels)?;
                        let form = square_from(&m.form, &basis, labels.len())?;
                        let first_half = m.first_half.iter().map(|l| basis.get(l)).collect::<Result<_, _>>()?;
                        Some(ManinTripleData { table: algebra.to_table(), form, first_half })
                    }
                };
                Ok(Object::Lie2 { algebra, manin })
            }
            Body::Bialgebra(b) => {
                let base = algebra_from_doc(&b.algebra)?;
                let (n0, n1) = (base.n0(), base.n1());
                let labels = combined_labels(&base.space);
                let basis = Basis::new(&labels)?;
                let mut cocycle = CocyclePair::zero(n0, n1);
                for (u, pairs) in &b.delta {
                    let t = tensor_from(pairs, &basis, n0, n1)?;
                    let i = basis.get(u)?;
                    if i < n0 {
                        if !t.is_degree_one() {
                            return Err(invalid(format!("delta({u}) must lie in g0⊗g-1 ⊕ g-1⊗g0")));
                        }
                        cocycle.delta0[i] = t;
                    } else {
                        if !t.is_degree_zero() {
                            return Err(invalid(format!("delta({u}) must lie in g-1⊗g-1")));
                        }
                        cocycle.delta1[i - n0] = t;
                    }
                }
                Ok(Object::Bialgebra(StrictLie2Bialgebra { base, cocycle }))
            }
            Body::Rmatrix(b) => {
                let algebra = algebra_from_doc(&b.algebra)?;
                let (n0, n1) = (algebra.n0(), algebra.n1());
                let basis = Basis::new(&combined_labels(&algebra.space))?;
                let r = tensor_from(&b.r, &basis, n0, n1)?;
                let frak_r = tensor_from(&b.frak_r, &basis, n0, n1)?;
                let rm = RMatrixData::new(r, frak_r).map_err(|e| invalid(e.to_string()))?;
                Ok(Object::RMatrix { algebra, rm })
            }
            Body::Prelie(b) => {
                let n = b.dimension;
                let labels = labels_or(b.labels.as_ref(), n, |i| format!("e{i}"), "labels")?;
                let dual_labels = match &b.dual_labels {
                    Some(_) => labels_or(b.dual_labels.as_ref(), n, |_| String::new(), "dual_labels")?,
                    None => labels.iter().map(|l| format!("{l}*")).collect(),
                };
                let all: Vec<String> = labels.iter().chain(&dual_labels).cloned().collect();
                check_labels(&all)?;
                let basis = Basis::new(&labels)?;
                let dual_basis = Basis::new(&dual_labels)?;
                let mut algebra = LeftSymmetricAlgebra::from_products(n, &product_table(&b.product, &basis)?);
                algebra.labels = labels;
                algebra.dual_labels = dual_labels;
                let m = match &b.d {
                    None => None,
                    Some(d) => {
                        let mut m = Matrix::zeros(n, n);
                        for (a, k, c) in sparse_table(d, &dual_basis, &basis)? {
                            m.set(a, k, c);
                        }
                        Some(m)
                    }
                };
                Ok(Object::Prelie { algebra, m })
            }
            Body::Symplectic(b) => {
                let n = b.dimension;
                let labels = labels_or(b.labels.as_ref(), n, |i| format!("e{i}"), "labels")?;
                let basis = Basis::new(&labels)?;
                let mut table = vec![vec![vec![Scalar::zero(); n]; n]; n];
                for (i, j, k, c) in product_table(&b.bracket, &basis)? {
                    table[i][j][k] = c;
                }
                let lie = LieAlgebra::from_fn(n, |i, j| table[i][j].clone());
                let omega = square_from(&b.omega, &basis, n)?;
                Ok(Object::Symplectic { lie, omega, labels })
            }
        }
    }
}

impl Object {
    pub fn to_document(&self, metadata: Option<Metadata>) -> Document {
        let body = match self {
            Object::Lie2 { algebra, manin } => {
                let labels = combined_labels(&algebra.space);
                Body::Lie2(Lie2Doc {
                    algebra: algebra_to_doc(algebra),
                    manin: manin.as_ref().map(|m| ManinDoc {
                        form: square_to(&m.form, &labels),
                        first_half: m.first_half.iter().map(|&u| labels[u].clone()).collect(),
                    }),
                })
            }
            Object::Bialgebra(b) => {
                let labels = combined_labels(&b.base.space);
                let n0 = b.base.n0();
                let mut delta = Table::new();
                for (u, t) in b.cocycle.delta0.iter().chain(&b.cocycle.delta1).enumerate() {
                    let pairs = tensor_to(t, &labels);
                    if !pairs.is_empty() {
                        delta.insert(labels[u].clone(), pairs);
                    }
                }
                debug_assert_eq!(b.cocycle.n0(), n0);
                Body::Bialgebra(BialgebraDoc { algebra: algebra_to_doc(&b.base), delta })
            }
            Object::RMatrix { algebra, rm } => {
                let labels = combined_labels(&algebra.space);
                Body::Rmatrix(RmatrixDoc {
                    algebra: algebra_to_doc(algebra),
                    r: tensor_to(&rm.r, &labels),
                    frak_r: tensor_to(&rm.frak_r, &labels),
                })
            }
            Object::Prelie { algebra, m } => {
                let n = algebra.dim();
                let labels = &algebra.labels;
                let d = m.as_ref().map(|m| {
                    let mut t = Table::new();
                    for a in 0..n {
                        let row = coeffs_of((0..n).map(|k| (labels[k].clone(), m.get(a, k).clone())));
                        if !row.is_empty() {
                            t.insert(algebra.dual_labels[a].clone(), row);
                        }
                    }
                    t
                });
                Body::Prelie(PrelieDoc {
                    dimension: n,
                    labels: Some(labels.clone()),
                    dual_labels: Some(algebra.dual_labels.clone()),
                    product: product_to_table(n, labels, |i, j, k| algebra.constant(i, j, k).clone()),
                    d,
                })
            }
            Object::Symplectic { lie, omega, labels } => Body::Symplectic(SymplecticDoc {
                dimension: lie.dim(),
                labels: Some(labels.clone()),
                bracket: product_to_table(lie.dim(), labels, |i, j, k| lie.constant(i, j, k).clone()),
                omega: square_to(omega, labels),
            }),
        };
        Document::new(body, metadata)
    }
}
