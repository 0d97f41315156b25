//! JSON documents for Hopf algebras, modules, data and braiding matrices.
//!
//! Scalars are written relative to the document's `cyclotomic_order` `L`:
//! `"m/n"`, `"z^k"` or `"-z^k"` when possible, otherwise the array of
//! rational coefficients of `1, ζ_L, ζ_L², …`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::diagram::{BaseCategory, Environment};
use crate::exactmath::{CycScalar, Matrix, Space, SparseVec};
use crate::hopf::{register_hopf, verify_pairing, Ambient, HopfAlgebra, HopfPairing, HopfParts};
use crate::nichols::DiagonalBraiding;
use crate::partialdual::{make_datum, PartialDualizationDatum};
use crate::radford::check_projection;
use crate::yd::{verify_yd, Side, YetterDrinfeldModule};
use crate::{Error, Result};

/// Default cap on cyclotomic orders accepted from documents.
pub const DEFAULT_MAX_ORDER: u64 = 120;

/// The cap from `HOPFDUAL_MAX_ORDER`, or the default.
pub fn max_order() -> u64 {
    std::env::var("HOPFDUAL_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLit {
    Short(String),
    Coeffs(Vec<String>),
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn check_order(order: u64) -> Result<()> {
    let cap = max_order();
    if order == 0 || order > cap {
        return Err(schema(format!("cyclotomic order {order} outside 1..={cap}")));
    }
    Ok(())
}

impl ScalarLit {
    pub fn parse(&self, order: u64) -> Result<CycScalar> {
        let s = match self {
            ScalarLit::Short(t) => CycScalar::parse(order, t),
            ScalarLit::Coeffs(c) => CycScalar::from_coeff_strings(order, c),
        };
        s.map_err(|e| schema(format!("bad scalar {self:?}: {e}")))
    }

    pub fn write(x: &CycScalar, order: u64) -> Self {
        let x = x.embed(order);
        match x.short_literal() {
            Some(t) => ScalarLit::Short(t),
            None => ScalarLit::Coeffs(x.coeff_strings()),
        }
    }
}

type Entry2 = (usize, usize, ScalarLit);
type Entry3 = (usize, usize, usize, ScalarLit);
type Entry4 = (usize, usize, usize, ScalarLit);

/// A Hopf algebra given inline or by the name of one already loaded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Name(String),
    Doc(Box<HopfDoc>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AmbientDoc {
    /// `"vect"`.
    Base(String),
    YdOver {
        yd_over: HopfRef,
        rho: Vec<Entry4>,
        delta: Vec<Entry4>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDoc {
    pub name: String,
    pub cyclotomic_order: u64,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// Lattice degrees of the basis (graded base categories only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<Vec<i32>>>,
    /// Bicharacter matrix of the graded base category.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<Vec<ScalarLit>>>,
    /// `e_i·e_j += s·e_k`.
    pub mu: Vec<Entry3>,
    pub eta: Vec<ScalarLit>,
    /// `Δ(e_i) += s·e_j⊗e_k`.
    #[serde(rename = "Delta")]
    pub delta: Vec<Entry3>,
    pub eps: Vec<ScalarLit>,
    /// `S(e_i) += s·e_j`; solved for when absent.
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Entry2>>,
    pub ambient: AmbientDoc,
}

fn order_of(ms: &[&Matrix]) -> u64 {
    ms.iter().map(|m| m.max_order()).fold(1, num_integer::lcm)
}

fn lit_vector(m: &Matrix, order: u64, by_column: bool) -> Vec<ScalarLit> {
    let n = if by_column { m.cols() } else { m.rows() };
    (0..n)
        .map(|k| {
            let v = if by_column { m.get(0, k) } else { m.get(k, 0) };
            ScalarLit::write(&v, order)
        })
        .collect()
}

/// Entries of a map `X⊗Y → Z` (or `X → Y⊗Z`) as index triples.
fn entries3(m: &Matrix, d_inner: usize, order: u64, coproduct: bool) -> Vec<Entry3> {
    let mut out = Vec::new();
    for (col, v) in m.columns().iter().enumerate() {
        for (row, c) in v.iter() {
            let e = if coproduct {
                (col, row / d_inner, row % d_inner, ScalarLit::write(c, order))
            } else {
                (col / d_inner, col % d_inner, *row, ScalarLit::write(c, order))
            };
            out.push(e);
        }
    }
    out.sort_by_key(|a| (a.0, a.1, a.2));
    out
}

fn entries2(m: &Matrix, order: u64) -> Vec<Entry2> {
    let mut out = Vec::new();
    for (col, v) in m.columns().iter().enumerate() {
        for (row, c) in v.iter() {
            out.push((col, *row, ScalarLit::write(c, order)));
        }
    }
    out
}

fn matrix3(rows: usize, cols: usize, d_inner: usize, es: &[Entry3], order: u64, coproduct: bool) -> Result<Matrix> {
    let mut trip = Vec::with_capacity(es.len());
    for (i, j, k, s) in es {
        let (r, c) = if coproduct {
            (j * d_inner + k, *i)
        } else {
            (*k, i * d_inner + j)
        };
        if r >= rows || c >= cols || *j >= d_inner {
            return Err(schema(format!("entry ({i},{j},{k}) out of range")));
        }
        trip.push((r, c, s.parse(order)?));
    }
    Matrix::from_triplets(rows, cols, trip).map_err(|e| schema(e.to_string()))
}

/// `rows × cols` from `(col, row, s)` entries (the image of `e_col`).
fn matrix2(rows: usize, cols: usize, es: &[Entry2], order: u64) -> Result<Matrix> {
    let mut trip = Vec::with_capacity(es.len());
    for (i, j, s) in es {
        if *i >= cols || *j >= rows {
            return Err(schema(format!("entry ({i},{j}) out of range")));
        }
        trip.push((*j, *i, s.parse(order)?));
    }
    Matrix::from_triplets(rows, cols, trip).map_err(|e| schema(e.to_string()))
}

fn vector(es: &[ScalarLit], n: usize, order: u64, what: &str) -> Result<Vec<CycScalar>> {
    if es.len() != n {
        return Err(schema(format!("{what} has {} entries, expected {n}", es.len())));
    }
    es.iter().map(|s| s.parse(order)).collect()
}

/// Serializes a Hopf algebra; algebras over another Hopf algebra embed it.
pub fn save_hopf(h: &HopfAlgebra) -> HopfDoc {
    let base = h.base();
    let mut ms: Vec<&Matrix> = vec![&h.mu, &h.eta, &h.delta, &h.eps, &h.s];
    let yd = h.self_yd();
    if let Some((_, rho, delta)) = &yd {
        ms.push(rho);
        ms.push(delta);
    }
    let mut order = order_of(&ms);
    for row in base.q() {
        for x in row {
            order = num_integer::lcm(order, x.order());
        }
    }
    let d = h.dim;
    let ambient = match yd {
        None => AmbientDoc::Base("vect".into()),
        Some((over, rho, delta)) => AmbientDoc::YdOver {
            yd_over: HopfRef::Doc(Box::new(save_hopf(over))),
            rho: module_entries(rho, d, order, false),
            delta: module_entries(delta, d, order, true),
        },
    };
    let braiding = (base.rank() > 0 && matches!(h.ambient, Ambient::Base(_))).then(|| {
        base.q()
            .iter()
            .map(|r| r.iter().map(|x| ScalarLit::write(x, order)).collect())
            .collect()
    });
    HopfDoc {
        name: h.name.clone(),
        cyclotomic_order: order,
        dim: d,
        basis_labels: h.labels.clone(),
        grading: h.grading.as_ref().map(|g| (**g).clone()),
        braiding,
        mu: entries3(&h.mu, d, order, false),
        eta: lit_vector(&h.eta, order, false),
        delta: entries3(&h.delta, d, order, true),
        eps: lit_vector(&h.eps, order, true),
        s: Some(entries2(&h.s, order)),
        ambient,
    }
}

/// `[a, i, j, s]` entries: action `a⊗x_i ↦ s·x_j`, coaction
/// `x_i ↦ s·a⊗x_j`.
fn module_entries(m: &Matrix, d: usize, order: u64, coaction: bool) -> Vec<Entry4> {
    let mut out = Vec::new();
    for (col, v) in m.columns().iter().enumerate() {
        for (row, c) in v.iter() {
            let lit = ScalarLit::write(c, order);
            out.push(if coaction {
                (col, row / d, row % d, lit)
            } else {
                (col / d, col % d, *row, lit)
            });
        }
    }
    out.sort_by_key(|a| (a.0, a.1, a.2));
    out
}

fn module_matrix(es: &[Entry4], da: usize, d: usize, order: u64, coaction: bool) -> Result<Matrix> {
    let mut trip = Vec::with_capacity(es.len());
    for (x, y, z, s) in es {
        let (r, c) = if coaction {
            if *x >= d || *y >= da || *z >= d {
                return Err(schema(format!("coaction entry ({x},{y},{z}) out of range")));
            }
            (y * d + z, *x)
        } else {
            if *x >= da || *y >= d || *z >= d {
                return Err(schema(format!("action entry ({x},{y},{z}) out of range")));
            }
            (*z, x * d + y)
        };
        trip.push((r, c, s.parse(order)?));
    }
    let (rows, cols) = if coaction { (da * d, d) } else { (d, da * d) };
    Matrix::from_triplets(rows, cols, trip).map_err(|e| schema(e.to_string()))
}

/// Named Hopf algebras available to references in documents.
pub type Registry = HashMap<String, Arc<HopfAlgebra>>;

pub fn resolve(r: &HopfRef, registry: &Registry) -> Result<Arc<HopfAlgebra>> {
    match r {
        HopfRef::Name(n) => registry
            .get(n)
            .cloned()
            .ok_or_else(|| schema(format!("unknown Hopf algebra {n:?}"))),
        HopfRef::Doc(d) => load_hopf(d, registry),
    }
}

/// Builds and fully verifies a Hopf algebra from its document.
pub fn load_hopf(doc: &HopfDoc, registry: &Registry) -> Result<Arc<HopfAlgebra>> {
    let order = doc.cyclotomic_order;
    check_order(order)?;
    let d = doc.dim;
    if doc.basis_labels.len() != d {
        return Err(schema(format!("{} labels for dimension {d}", doc.basis_labels.len())));
    }
    let mu = matrix3(d, d * d, d, &doc.mu, order, false)?;
    let delta = matrix3(d * d, d, d, &doc.delta, order, true)?;
    let eta = Matrix::from_columns(
        d,
        vec![SparseVec::from_entries(vector(&doc.eta, d, order, "eta")?.into_iter().enumerate())],
    );
    let eps_vals = vector(&doc.eps, d, order, "eps")?;
    let eps = Matrix::from_columns(1, eps_vals.into_iter().map(|c| SparseVec::from_entries([(0, c)])).collect());
    let mut parts = HopfParts::new(&doc.name, doc.basis_labels.clone(), mu, eta, delta, eps);
    if let Some(s) = &doc.s {
        parts.s = Some(matrix2(d, d, s, order)?);
    }
    if let Some(g) = &doc.grading {
        if g.len() != d {
            return Err(schema("grading length differs from dim"));
        }
        parts.grading = Some(Arc::new(g.clone()));
    }
    parts.ambient = match &doc.ambient {
        AmbientDoc::Base(s) if s == "vect" => match &doc.braiding {
            None => Ambient::Base(Arc::new(BaseCategory::vect())),
            Some(q) => {
                let q = q
                    .iter()
                    .map(|r| r.iter().map(|x| x.parse(order)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                if q.iter().any(|r| r.len() != q.len()) {
                    return Err(schema("braiding matrix must be square"));
                }
                Ambient::Base(Arc::new(BaseCategory::graded(q)))
            }
        },
        AmbientDoc::Base(s) => return Err(schema(format!("unknown ambient {s:?}"))),
        AmbientDoc::YdOver { yd_over, rho, delta } => {
            let over = resolve(yd_over, registry)?;
            Ambient::YdOver {
                rho: Arc::new(module_matrix(rho, over.dim, d, order, false)?),
                delta: Arc::new(module_matrix(delta, over.dim, d, order, true)?),
                over,
            }
        }
    };
    Ok(Arc::new(HopfAlgebra::new(parts)?))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    #[serde(default = "default_module_name")]
    pub name: String,
    pub over: HopfRef,
    pub cyclotomic_order: u64,
    pub dim: usize,
    pub side: Side,
    /// `[a, i, j, s]`: `a.x_i += s·x_j`.
    pub rho: Vec<Entry4>,
    /// `[i, a, j, s]`: `δ(x_i) += s·a⊗x_j`.
    pub delta: Vec<Entry4>,
}

fn default_module_name() -> String {
    "M".into()
}

pub fn save_module(m: &YetterDrinfeldModule) -> ModuleDoc {
    let order = num_integer::lcm(order_of(&[&m.rho, &m.delta]), save_hopf(&m.over).cyclotomic_order);
    let (da, d) = (m.over.dim, m.dim());
    let (rho, delta) = match m.side {
        Side::Left => (
            module_entries(&m.rho, d, order, false),
            module_entries(&m.delta, d, order, true),
        ),
        Side::Right => (right_entries(&m.rho, da, order, false), right_entries(&m.delta, da, order, true)),
    };
    ModuleDoc {
        name: m.space.name.to_string(),
        over: HopfRef::Doc(Box::new(save_hopf(&m.over))),
        cyclotomic_order: order,
        dim: d,
        side: m.side,
        rho,
        delta,
    }
}

/// Right modules: action `x_i⊗a`, coaction into `X⊗A`, same entry layout.
fn right_entries(m: &Matrix, da: usize, order: u64, coaction: bool) -> Vec<Entry4> {
    let mut out = Vec::new();
    for (col, v) in m.columns().iter().enumerate() {
        for (row, c) in v.iter() {
            let lit = ScalarLit::write(c, order);
            out.push(if coaction {
                (col, row % da, row / da, lit)
            } else {
                (col % da, col / da, *row, lit)
            });
        }
    }
    out.sort_by_key(|a| (a.0, a.1, a.2));
    out
}

pub fn load_module(doc: &ModuleDoc, registry: &Registry) -> Result<YetterDrinfeldModule> {
    check_order(doc.cyclotomic_order)?;
    let over = resolve(&doc.over, registry)?;
    let (da, d, order) = (over.dim, doc.dim, doc.cyclotomic_order);
    let (rho, delta) = match doc.side {
        Side::Left => (
            module_matrix(&doc.rho, da, d, order, false)?,
            module_matrix(&doc.delta, da, d, order, true)?,
        ),
        Side::Right => (
            right_matrix(&doc.rho, da, d, order, false)?,
            right_matrix(&doc.delta, da, d, order, true)?,
        ),
    };
    let space = Space::new(&doc.name, d);
    let m = YetterDrinfeldModule::new(over, space, doc.side, rho, delta)?;
    let r = verify_yd(&m)?;
    if !r.passed() {
        return Err(Error::Verification(r));
    }
    Ok(m)
}

fn right_matrix(es: &[Entry4], da: usize, d: usize, order: u64, coaction: bool) -> Result<Matrix> {
    let mut trip = Vec::with_capacity(es.len());
    for (x, y, z, s) in es {
        let (r, c) = if coaction {
            if *x >= d || *y >= da || *z >= d {
                return Err(schema(format!("coaction entry ({x},{y},{z}) out of range")));
            }
            (z * da + y, *x)
        } else {
            if *x >= da || *y >= d || *z >= d {
                return Err(schema(format!("action entry ({x},{y},{z}) out of range")));
            }
            (*z, y * da + x)
        };
        trip.push((r, c, s.parse(order)?));
    }
    let (rows, cols) = if coaction { (d * da, d) } else { (d, d * da) };
    Matrix::from_triplets(rows, cols, trip).map_err(|e| schema(e.to_string()))
}

/// A dualization datum; without `B` and `omega` it is a projection datum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDoc {
    pub cyclotomic_order: u64,
    #[serde(rename = "H")]
    pub h: HopfRef,
    #[serde(rename = "A")]
    pub a: HopfRef,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<HopfRef>,
    /// `π(e_i) += s·a_j`.
    pub pi: Vec<Entry2>,
    /// `ι(a_i) += s·e_j`.
    pub iota: Vec<Entry2>,
    /// `ω(a_i, b_j) = s`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Entry2>>,
}

pub fn save_datum(d: &PartialDualizationDatum) -> DatumDoc {
    let w = d.omega.values();
    let order = [&d.pi, &d.iota, &w]
        .iter()
        .map(|m| m.max_order())
        .chain([&d.h, &d.a, &d.b].iter().map(|h| save_hopf(h).cyclotomic_order))
        .fold(1, num_integer::lcm);
    let omega = value_entries(&w, order);
    DatumDoc {
        cyclotomic_order: order,
        h: HopfRef::Doc(Box::new(save_hopf(&d.h))),
        a: HopfRef::Doc(Box::new(save_hopf(&d.a))),
        b: Some(HopfRef::Doc(Box::new(save_hopf(&d.b)))),
        pi: entries2(&d.pi, order),
        iota: entries2(&d.iota, order),
        omega: Some(omega),
    }
}

/// The projection part of a datum document: `(H, A, π, ι)`.
pub fn load_projection(doc: &DatumDoc, registry: &Registry) -> Result<(Arc<HopfAlgebra>, Arc<HopfAlgebra>, Matrix, Matrix)> {
    check_order(doc.cyclotomic_order)?;
    let h = resolve(&doc.h, registry)?;
    let a = resolve(&doc.a, registry)?;
    let order = doc.cyclotomic_order;
    let pi = matrix2(a.dim, h.dim, &doc.pi, order)?;
    let iota = matrix2(h.dim, a.dim, &doc.iota, order)?;
    Ok((h, a, pi, iota))
}

pub fn load_datum(doc: &DatumDoc, registry: &Registry) -> Result<PartialDualizationDatum> {
    let (h, a, pi, iota) = load_projection(doc, registry)?;
    let b = resolve(doc.b.as_ref().ok_or_else(|| schema("datum has no B"))?, registry)?;
    let es = doc.omega.as_ref().ok_or_else(|| schema("datum has no omega"))?;
    let w = value_matrix(es, a.dim, b.dim, doc.cyclotomic_order)?;
    make_datum(h, a, b, pi, iota, &w)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingDoc {
    pub cyclotomic_order: u64,
    pub rank: usize,
    pub q: Vec<Vec<ScalarLit>>,
}

pub fn save_braiding(b: &DiagonalBraiding) -> BraidingDoc {
    let order = b.q.iter().flatten().map(|x| x.order()).fold(1, num_integer::lcm);
    BraidingDoc {
        cyclotomic_order: order,
        rank: b.rank(),
        q: b.q.iter().map(|r| r.iter().map(|x| ScalarLit::write(x, order)).collect()).collect(),
    }
}

pub fn load_braiding(doc: &BraidingDoc) -> Result<DiagonalBraiding> {
    check_order(doc.cyclotomic_order)?;
    if doc.q.len() != doc.rank || doc.q.iter().any(|r| r.len() != doc.rank) {
        return Err(schema(format!("q must be {0}x{0}", doc.rank)));
    }
    let q = doc
        .q
        .iter()
        .map(|r| r.iter().map(|x| x.parse(doc.cyclotomic_order)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    DiagonalBraiding::new(q)
}

/// Environment document for the expression evaluator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvDoc {
    pub cyclotomic_order: u64,
    #[serde(default)]
    pub braiding: Option<Vec<Vec<ScalarLit>>>,
    #[serde(default)]
    pub spaces: Vec<SpaceDoc>,
    /// Hopf algebras bound under their alias (`mu[alias]`, ...).
    #[serde(default)]
    pub hopf: Vec<(String, HopfRef)>,
    #[serde(default)]
    pub generators: Vec<GeneratorDoc>,
    /// Space used by unsubscripted generators.
    #[serde(default)]
    pub default_space: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub grading: Option<Vec<Vec<i32>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub name: String,
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    /// `[row, col, s]` over the flattened tensor indices.
    pub entries: Vec<Entry2>,
}

pub fn load_env(doc: &EnvDoc, registry: &Registry) -> Result<Environment> {
    check_order(doc.cyclotomic_order)?;
    let order = doc.cyclotomic_order;
    let base = match &doc.braiding {
        None => BaseCategory::vect(),
        Some(q) => {
            let q = q
                .iter()
                .map(|r| r.iter().map(|x| x.parse(order)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if q.iter().any(|r| r.len() != q.len()) {
                return Err(schema("braiding matrix must be square"));
            }
            BaseCategory::graded(q)
        }
    };
    let mut env = Environment::new(Arc::new(base));
    for s in &doc.spaces {
        env.add_space(Space::graded(&s.name, s.dim, s.grading.clone().map(Arc::new)));
    }
    for (alias, r) in &doc.hopf {
        let h = resolve(r, registry)?;
        register_hopf(&mut env, alias, &h);
    }
    for g in &doc.generators {
        let dim = |names: &[String]| -> Result<usize> {
            names.iter().try_fold(1usize, |acc, n| {
                Ok(acc * env.space(n).map_err(|e| schema(e.to_string()))?.dim)
            })
        };
        let (rows, cols) = (dim(&g.cod)?, dim(&g.dom)?);
        let mut trip = Vec::with_capacity(g.entries.len());
        for (r, c, s) in &g.entries {
            if *r >= rows || *c >= cols {
                return Err(schema(format!("generator {} entry ({r},{c}) out of range", g.name)));
            }
            trip.push((*r, *c, s.parse(order)?));
        }
        let m = Matrix::from_triplets(rows, cols, trip).map_err(|e| schema(e.to_string()))?;
        let dom: Vec<&str> = g.dom.iter().map(String::as_str).collect();
        let cod: Vec<&str> = g.cod.iter().map(String::as_str).collect();
        env.add_generator(&g.name, &dom, &cod, Arc::new(m))
            .map_err(|e| schema(e.to_string()))?;
    }
    if let Some(d) = &doc.default_space {
        env.set_default_space(d);
    }
    Ok(env)
}

/// Parses any document kind from JSON text.
pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| schema(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Guesses the document kind from its fields.
pub fn document_kind(v: &Value) -> Option<&'static str> {
    let o = v.as_object()?;
    if o.contains_key("mu") && o.contains_key("Delta") {
        Some("hopf")
    } else if o.contains_key("A") && o.contains_key("B") && o.contains_key("omega") && !o.contains_key("H") {
        Some("pairing")
    } else if o.contains_key("H") && o.contains_key("pi") {
        Some(if o.contains_key("omega") { "datum" } else { "projection" })
    } else if o.contains_key("side") && o.contains_key("rho") {
        Some("module")
    } else if o.contains_key("q") && o.contains_key("rank") {
        Some("braiding")
    } else if o.contains_key("generators") || o.contains_key("spaces") {
        Some("env")
    } else {
        None
    }
}

/// A Hopf pairing `ω: A⊗B → 1` by its values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairingDoc {
    pub cyclotomic_order: u64,
    #[serde(rename = "A")]
    pub a: HopfRef,
    #[serde(rename = "B")]
    pub b: HopfRef,
    /// `ω(a_i, b_j) = s`.
    pub omega: Vec<Entry2>,
}

pub fn save_pairing(p: &HopfPairing) -> PairingDoc {
    let w = p.values();
    let order = [w.max_order(), save_hopf(&p.a).cyclotomic_order, save_hopf(&p.b).cyclotomic_order]
        .into_iter()
        .fold(1, num_integer::lcm);
    PairingDoc {
        cyclotomic_order: order,
        a: HopfRef::Doc(Box::new(save_hopf(&p.a))),
        b: HopfRef::Doc(Box::new(save_hopf(&p.b))),
        omega: value_entries(&w, order),
    }
}

fn value_entries(w: &Matrix, order: u64) -> Vec<Entry2> {
    let mut out = Vec::new();
    for (j, col) in w.columns().iter().enumerate() {
        for (i, c) in col.iter() {
            out.push((*i, j, ScalarLit::write(c, order)));
        }
    }
    out.sort_by_key(|e| (e.0, e.1));
    out
}

fn value_matrix(es: &[Entry2], rows: usize, cols: usize, order: u64) -> Result<Matrix> {
    let mut trip = Vec::with_capacity(es.len());
    for (i, j, s) in es {
        if *i >= rows || *j >= cols {
            return Err(schema(format!("omega entry ({i},{j}) out of range")));
        }
        trip.push((*i, *j, s.parse(order)?));
    }
    Matrix::from_triplets(rows, cols, trip).map_err(|e| schema(e.to_string()))
}

/// Loads a pairing and checks the pairing axioms.
pub fn load_pairing(doc: &PairingDoc, registry: &Registry) -> Result<HopfPairing> {
    check_order(doc.cyclotomic_order)?;
    let a = resolve(&doc.a, registry)?;
    let b = resolve(&doc.b, registry)?;
    let w = value_matrix(&doc.omega, a.dim, b.dim, doc.cyclotomic_order)?;
    let p = HopfPairing::from_values(a, b, &w)?;
    let r = verify_pairing(&p)?;
    if !r.passed() {
        return Err(Error::Verification(r));
    }
    Ok(p)
}

/// Any of the document kinds, tagged by shape on output only.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Document {
    Hopf(HopfDoc),
    Module(ModuleDoc),
    Datum(DatumDoc),
    Pairing(PairingDoc),
    Braiding(BraidingDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hopf(_) => "hopf",
            Document::Module(_) => "module",
            Document::Datum(d) if d.omega.is_none() => "projection",
            Document::Datum(_) => "datum",
            Document::Pairing(_) => "pairing",
            Document::Braiding(_) => "braiding",
        }
    }

    /// Reads a document of any kind, dispatching on its fields.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| schema(e.to_string()))?;
        let parse = |v: Value| -> Result<Document> {
            Ok(match document_kind(&v) {
                Some("hopf") => Document::Hopf(from_value(v)?),
                Some("module") => Document::Module(from_value(v)?),
                Some("datum") | Some("projection") => Document::Datum(from_value(v)?),
                Some("pairing") => Document::Pairing(from_value(v)?),
                Some("braiding") => Document::Braiding(from_value(v)?),
                _ => return Err(schema("unrecognized document kind")),
            })
        };
        parse(v)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| schema(e.to_string()))
}

/// A validated object read from a document.
#[derive(Clone, Debug)]
pub enum Loaded {
    Hopf(Arc<HopfAlgebra>),
    Module(YetterDrinfeldModule),
    Datum(PartialDualizationDatum),
    Projection {
        h: Arc<HopfAlgebra>,
        a: Arc<HopfAlgebra>,
        pi: Matrix,
        iota: Matrix,
    },
    Pairing(HopfPairing),
    Braiding(DiagonalBraiding),
}

/// Loads and verifies any document.
pub fn load(doc: &Document, registry: &Registry) -> Result<Loaded> {
    Ok(match doc {
        Document::Hopf(d) => Loaded::Hopf(load_hopf(d, registry)?),
        Document::Module(d) => Loaded::Module(load_module(d, registry)?),
        Document::Datum(d) if d.omega.is_none() && d.b.is_none() => {
            let (h, a, pi, iota) = load_projection(d, registry)?;
            check_projection(&h, &a, &pi, &iota)?;
            Loaded::Projection { h, a, pi, iota }
        }
        Document::Datum(d) => Loaded::Datum(load_datum(d, registry)?),
        Document::Pairing(d) => Loaded::Pairing(load_pairing(d, registry)?),
        Document::Braiding(d) => Loaded::Braiding(load_braiding(d)?),
    })
}

/// The canonical document of a loaded object.
pub fn save(obj: &Loaded) -> Document {
    match obj {
        Loaded::Hopf(h) => Document::Hopf(save_hopf(h)),
        Loaded::Module(m) => Document::Module(save_module(m)),
        Loaded::Datum(d) => Document::Datum(save_datum(d)),
        Loaded::Projection { h, a, pi, iota } => {
            let order = [pi.max_order(), iota.max_order()]
                .into_iter()
                .chain([h, a].iter().map(|x| save_hopf(x).cyclotomic_order))
                .fold(1, num_integer::lcm);
            Document::Datum(DatumDoc {
                cyclotomic_order: order,
                h: HopfRef::Doc(Box::new(save_hopf(h))),
                a: HopfRef::Doc(Box::new(save_hopf(a))),
                b: None,
                pi: entries2(pi, order),
                iota: entries2(iota, order),
                omega: None,
            })
        }
        Loaded::Pairing(p) => Document::Pairing(save_pairing(p)),
        Loaded::Braiding(b) => Document::Braiding(save_braiding(b)),
    }
}
