//! JSON file formats for algebras, quiver presentations, Reedy data and
//! weight orders. Scalars are decimal strings `"n"` or `"n/d"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{subalgebra_closure, Algebra, IdempotentFrame};
use crate::constructors::QuiverPresentation;
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar, Subspace};
use crate::qh::WeightOrder;
use crate::reedy::ReedyStructure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldSpec {
    pub fn of(f: Field) -> Self {
        match f {
            Field::Rationals => FieldSpec {
                kind: "Q".into(),
                p: None,
            },
            Field::Prime(p) => FieldSpec {
                kind: "GF".into(),
                p: Some(p as u64),
            },
        }
    }

    pub fn field(&self) -> Result<Field> {
        match (self.kind.as_str(), self.p) {
            ("Q", None) => Ok(Field::Rationals),
            ("GF", Some(p)) => Field::prime(p),
            _ => Err(Error::InvalidField(format!("{self:?}"))),
        }
    }
}

/// A basis element by label, or a coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Label(String),
    Coords(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedElement {
    pub name: String,
    pub vector: ElementSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    /// Nonzero products `[i, j, [[k, c], ...]]`.
    pub mult: Vec<(usize, usize, Vec<(usize, String)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotents: Option<Vec<NamedElement>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<BTreeMap<String, usize>>,
}

/// An algebra with its distinguished idempotents; a file without
/// idempotents gets the frame `{1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub algebra: Algebra,
    pub frame: IdempotentFrame,
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn element(a: &Algebra, e: &ElementSpec) -> Result<Vec<Scalar>> {
    match e {
        ElementSpec::Label(l) => a
            .index_of(l)
            .map(|i| a.basis_vector(i))
            .ok_or_else(|| Error::Parse(format!("unknown basis label {l:?}"))),
        ElementSpec::Coords(c) => {
            if c.len() != a.dim() {
                return Err(Error::AmbientMismatch(c.len(), a.dim()));
            }
            c.iter().map(|s| a.field().parse_scalar(s)).collect()
        }
    }
}

fn degrees_for(names: &[String], map: &BTreeMap<String, usize>) -> Result<Vec<usize>> {
    for k in map.keys() {
        if !names.contains(k) {
            return Err(Error::Parse(format!("degree given for unknown idempotent {k:?}")));
        }
    }
    names
        .iter()
        .map(|n| {
            map.get(n)
                .copied()
                .ok_or_else(|| Error::Parse(format!("no degree for idempotent {n:?}")))
        })
        .collect()
}

pub fn algebra_file(a: &Algebra, frame: Option<&IdempotentFrame>) -> AlgebraFile {
    let mut mult = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let t = a.product_terms(i, j);
            if !t.is_empty() {
                mult.push((i, j, t.iter().map(|(k, c)| (*k, c.to_string())).collect()));
            }
        }
    }
    AlgebraFile {
        field: FieldSpec::of(a.field()),
        dim: a.dim(),
        labels: a.labels().to_vec(),
        unit: scalars(a.unit()),
        mult,
        idempotents: frame.map(|f| {
            f.names
                .iter()
                .zip(&f.idempotents)
                .map(|(n, e)| NamedElement {
                    name: n.clone(),
                    vector: ElementSpec::Coords(scalars(e)),
                })
                .collect()
        }),
        degrees: frame.map(|f| f.degree_map()),
    }
}

impl AlgebraFile {
    /// Builds and validates the algebra, then the frame.
    pub fn load(&self) -> Result<LoadedAlgebra> {
        let field = self.field.field()?;
        if self.labels.len() != self.dim {
            return Err(Error::Parse(format!(
                "{} labels for dimension {}",
                self.labels.len(),
                self.dim
            )));
        }
        let n = self.dim;
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, j, terms) in &self.mult {
            if *i >= n || *j >= n {
                return Err(Error::Parse(format!("product ({i}, {j}) out of range")));
            }
            for (k, c) in terms {
                mult[*i][*j].push((*k, field.parse_scalar(c)?));
            }
        }
        let unit = self
            .unit
            .iter()
            .map(|s| field.parse_scalar(s))
            .collect::<Result<Vec<_>>>()?;
        let algebra = Algebra::new(field, self.labels.clone(), mult, unit)?;
        let v = algebra.validate();
        if let Some((i, j, k)) = v.associativity.first() {
            return Err(Error::Parse(format!(
                "not associative on ({}, {}, {})",
                algebra.label(*i),
                algebra.label(*j),
                algebra.label(*k)
            )));
        }
        if let Some(i) = v.left_unit.first().or(v.right_unit.first()) {
            return Err(Error::Parse(format!("unit fails on {}", algebra.label(*i))));
        }
        let frame = match &self.idempotents {
            None => {
                let f = IdempotentFrame::unit(&algebra);
                match &self.degrees {
                    Some(d) => f.with_degrees(degrees_for(&f.names, d)?),
                    None => f,
                }
            }
            Some(list) => {
                let names: Vec<String> = list.iter().map(|e| e.name.clone()).collect();
                let vecs = list
                    .iter()
                    .map(|e| element(&algebra, &e.vector))
                    .collect::<Result<Vec<_>>>()?;
                let degrees = match &self.degrees {
                    Some(d) => degrees_for(&names, d)?,
                    None => vec![0; names.len()],
                };
                let f = IdempotentFrame::new(names, vecs, degrees)?;
                f.validate(&algebra)?;
                f
            }
        };
        Ok(LoadedAlgebra { algebra, frame })
    }
}

/// How a subalgebra is given in a Reedy file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubspaceSpec {
    /// The whole algebra.
    Algebra,
    /// The span of the frame idempotents.
    Frame,
    Basis(Vec<ElementSpec>),
    /// Closed under multiplication on load.
    Generators(Vec<ElementSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReedyFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub degrees: BTreeMap<String, usize>,
    pub aplus: SubspaceSpec,
    pub aminus: SubspaceSpec,
}

fn subspace(l: &LoadedAlgebra, spec: &SubspaceSpec) -> Result<Subspace> {
    let a = &l.algebra;
    match spec {
        SubspaceSpec::Algebra => Ok(a.full_space()),
        SubspaceSpec::Frame => Ok(l.frame.s_space(a)),
        SubspaceSpec::Basis(v) => {
            let vecs = v.iter().map(|e| element(a, e)).collect::<Result<Vec<_>>>()?;
            Subspace::from_vectors(a.field(), a.dim(), vecs)
        }
        SubspaceSpec::Generators(v) => {
            let mut vecs = v.iter().map(|e| element(a, e)).collect::<Result<Vec<_>>>()?;
            vecs.extend(l.frame.idempotents.iter().cloned());
            Ok(subalgebra_closure(a, &vecs).space)
        }
    }
}

impl ReedyFile {
    pub fn load(&self, l: &LoadedAlgebra) -> Result<ReedyStructure> {
        let degrees = degrees_for(&l.frame.names, &self.degrees)?;
        let frame = l.frame.with_degrees(degrees);
        let plus = subspace(l, &self.aplus)?;
        let minus = subspace(l, &self.aminus)?;
        ReedyStructure::new(l.algebra.clone(), frame, plus, minus)
    }
}

fn basis_spec(s: &Subspace) -> SubspaceSpec {
    SubspaceSpec::Basis(s.basis_rows().iter().map(|v| ElementSpec::Coords(scalars(v))).collect())
}

pub fn reedy_file(r: &ReedyStructure, algebra_ref: Option<&str>) -> ReedyFile {
    ReedyFile {
        algebra: algebra_ref.map(str::to_string),
        degrees: r.frame.degree_map(),
        aplus: basis_spec(&r.aplus.space),
        aminus: basis_spec(&r.aminus.space),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFile {
    pub levels: BTreeMap<String, usize>,
}

impl OrderFile {
    pub fn of(order: &WeightOrder, frame: &IdempotentFrame) -> Self {
        OrderFile {
            levels: order.as_map(frame),
        }
    }

    pub fn load(&self, frame: &IdempotentFrame) -> Result<WeightOrder> {
        Ok(WeightOrder::new(degrees_for(&frame.names, &self.levels)?))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_algebra(path: &Path) -> Result<LoadedAlgebra> {
    read_json::<AlgebraFile>(path)?.load()
}

pub fn read_quiver(path: &Path) -> Result<QuiverPresentation> {
    read_json(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{diamond, simplex_algebra};
    use crate::reedy::verify_reedy;

    #[test]
    fn algebra_round_trip_is_exact() {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let text = to_json(&algebra_file(&a, Some(&frame)));
        let loaded = from_json::<AlgebraFile>(&text).unwrap().load().unwrap();
        assert_eq!(loaded.algebra, a);
        assert_eq!(loaded.frame, frame);
        assert_eq!(to_json(&algebra_file(&loaded.algebra, Some(&loaded.frame))), text);
    }

    #[test]
    fn reedy_round_trip() {
        let s = simplex_algebra(1, Field::Prime(3)).structure;
        let alg = algebra_file(&s.algebra, Some(&s.frame)).load().unwrap();
        let text = to_json(&reedy_file(&s, Some("s.alg.json")));
        let back = from_json::<ReedyFile>(&text).unwrap().load(&alg).unwrap();
        assert_eq!(back, s);
        assert!(verify_reedy(&back).overall);
    }

    #[test]
    fn symbolic_subspaces() {
        let (a, frame) = diamond(Field::Rationals, [0, 0, 0, 0]);
        let l = algebra_file(&a, Some(&frame)).load().unwrap();
        let text = r#"{"degrees": {"a": 1, "b": 2, "c": 3, "d": 4},
                       "aplus": "algebra", "aminus": "frame"}"#;
        let r = from_json::<ReedyFile>(text).unwrap().load(&l).unwrap();
        assert!(verify_reedy(&r).overall);
        let text = r#"{"degrees": {"a": 1, "b": 2, "c": 3, "d": 4},
                       "aplus": {"generators": ["alpha", "gamma"]}, "aminus": "frame"}"#;
        let r = from_json::<ReedyFile>(text).unwrap().load(&l).unwrap();
        assert_eq!(r.aplus.dim(), 7);
    }

    #[test]
    fn rejects_bad_input() {
        let (a, frame) = diamond(Field::Rationals, [0, 0, 0, 0]);
        let mut f = algebra_file(&a, Some(&frame));
        f.mult[0].2[0].1 = "2".into();
        assert!(matches!(f.load(), Err(Error::Parse(_))));
        let l = algebra_file(&a, Some(&frame)).load().unwrap();
        let text = r#"{"degrees": {"a": 1}, "aplus": "algebra", "aminus": "frame"}"#;
        assert!(from_json::<ReedyFile>(text).unwrap().load(&l).is_err());
        assert!(from_json::<AlgebraFile>("{").is_err());
        let order = from_json::<OrderFile>(r#"{"levels": {"a": 0, "b": 1, "c": 1, "d": 2}}"#).unwrap();
        assert_eq!(order.load(&l.frame).unwrap().levels, vec![0, 1, 1, 2]);
    }
}
