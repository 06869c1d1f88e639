//! Path algebras of finite quivers modulo relations, reduced by linear
//! algebra on the truncated path space.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, IdempotentFrame, Mult, Projection};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Field, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: String,
    /// Arrow labels in traversal order.
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    /// `(source, target, label)`.
    pub arrows: Vec<(String, String, String)>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTerm>>,
    pub nilpotency_bound: usize,
}

/// Result of [`build_quiver_algebra`].
#[derive(Clone, Debug)]
pub struct QuiverAlgebra {
    pub algebra: Algebra,
    /// Vertex idempotents, all of degree 0.
    pub frame: IdempotentFrame,
    /// Span of the classes of all paths of positive length.
    pub arrow_ideal: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl QuiverPresentation {
    fn vertex_index(&self, v: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::Presentation(format!("unknown vertex {v}")))
    }
}

fn path_label(p: &QuiverPresentation, path: &Path) -> String {
    if path.arrows.is_empty() {
        format!("e_{}", p.vertices[path.source])
    } else {
        let names: Vec<&str> = path.arrows.iter().rev().map(|&a| p.arrows[a].2.as_str()).collect();
        names.join("*")
    }
}

pub fn build_quiver_algebra(p: &QuiverPresentation, field: Field) -> Result<QuiverAlgebra> {
    if p.nilpotency_bound < 1 {
        return Err(Error::Presentation("nilpotency bound must be at least 1".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for v in &p.vertices {
        if !seen.insert(v) {
            return Err(Error::Presentation(format!("duplicate vertex {v}")));
        }
    }
    let mut arrow_src = Vec::new();
    let mut arrow_tgt = Vec::new();
    let mut arrow_by_label = HashMap::new();
    for (i, (s, t, l)) in p.arrows.iter().enumerate() {
        arrow_src.push(p.vertex_index(s)?);
        arrow_tgt.push(p.vertex_index(t)?);
        if arrow_by_label.insert(l.clone(), i).is_some() || p.vertices.iter().any(|v| format!("e_{v}") == *l) {
            return Err(Error::Presentation(format!("duplicate arrow label {l}")));
        }
    }

    // all paths of length <= N + 1, longest first
    let top = p.nilpotency_bound + 1;
    let mut by_len: Vec<Vec<Path>> = vec![(0..p.vertices.len())
        .map(|v| Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect()];
    for len in 1..=top {
        let mut next = Vec::new();
        for q in &by_len[len - 1] {
            for a in 0..p.arrows.len() {
                if arrow_src[a] == q.target {
                    let mut arrows = q.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: q.source,
                        target: arrow_tgt[a],
                        arrows,
                    });
                }
            }
        }
        by_len.push(next);
    }
    let paths: Vec<Path> = by_len.iter().rev().flatten().cloned().collect();
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    let np = paths.len();

    // relations as vectors on the path space
    let mut rel_vectors: Vec<(Path, Path, Vec<(usize, Scalar)>)> = Vec::new();
    for (ri, rel) in p.relations.iter().enumerate() {
        let mut endpoints: Option<(usize, usize)> = None;
        let mut terms = Vec::new();
        for term in rel {
            if term.path.is_empty() {
                return Err(Error::Presentation(format!("relation {ri}: empty path")));
            }
            let mut arrows: Vec<usize> = Vec::new();
            for l in &term.path {
                let a = *arrow_by_label
                    .get(l)
                    .ok_or_else(|| Error::Presentation(format!("relation {ri}: unknown arrow {l}")))?;
                if let Some(&prev) = arrows.last() {
                    if arrow_tgt[prev] != arrow_src[a] {
                        return Err(Error::Presentation(format!(
                            "relation {ri}: arrows {} and {l} do not compose",
                            p.arrows[prev].2
                        )));
                    }
                }
                arrows.push(a);
            }
            let path = Path {
                source: arrow_src[arrows[0]],
                target: arrow_tgt[*arrows.last().expect("nonempty")],
                arrows,
            };
            match endpoints {
                None => endpoints = Some((path.source, path.target)),
                Some(e) if e != (path.source, path.target) => {
                    return Err(Error::Presentation(format!(
                        "relation {ri}: paths have different endpoints"
                    )))
                }
                _ => {}
            }
            let c = field
                .parse_scalar(&term.coeff)
                .map_err(|e| Error::Presentation(format!("relation {ri}: {e}")))?;
            terms.push((path, c));
        }
        let Some((s, t)) = endpoints else {
            return Err(Error::Presentation(format!("relation {ri}: no terms")));
        };
        let src = Path {
            source: s,
            target: s,
            arrows: Vec::new(),
        };
        let tgt = Path {
            source: t,
            target: t,
            arrows: Vec::new(),
        };
        let vec = terms
            .into_iter()
            .filter(|(q, _)| q.arrows.len() <= top)
            .map(|(q, c)| (index[&q], c))
            .collect();
        rel_vectors.push((src, tgt, vec));
    }

    // span of all translates x r y, truncated at length N + 1
    let concat = |first: &Path, then: &Path| -> Option<Path> {
        if first.target != then.source {
            return None;
        }
        let mut arrows = first.arrows.clone();
        arrows.extend(then.arrows.iter().copied());
        if arrows.len() > top {
            return None;
        }
        Some(Path {
            source: first.source,
            target: then.target,
            arrows,
        })
    };
    let mut ideal = EchelonBuilder::new(field, np);
    for (src, tgt, vec) in &rel_vectors {
        for x in paths.iter().filter(|x| x.target == src.source) {
            for y in paths.iter().filter(|y| y.source == tgt.target) {
                let mut v = field.zeros(np);
                let mut any = false;
                for (qi, c) in vec {
                    let Some(xq) = concat(x, &paths[*qi]) else { continue };
                    let Some(xqy) = concat(&xq, y) else { continue };
                    v[index[&xqy]].add_assign_ref(c);
                    any = true;
                }
                if any {
                    ideal.insert(v);
                }
            }
        }
    }
    let ideal = ideal.finish();
    for q in &by_len[top] {
        if !ideal.contains(&field.unit_vector(np, index[q])) {
            return Err(Error::Presentation(format!(
                "dimension still growing at the bound: path {} of length {top} survives",
                path_label(p, q)
            )));
        }
    }

    let proj = Projection::new(ideal);
    let cols = proj.columns().to_vec();
    let labels: Vec<String> = cols.iter().map(|&c| path_label(p, &paths[c])).collect();
    let d = cols.len();
    let mut mult: Mult = vec![vec![Vec::new(); d]; d];
    for (r, &pc) in cols.iter().enumerate() {
        for (s, &qc) in cols.iter().enumerate() {
            // b_r * b_s: first path s, then path r
            if let Some(prod) = concat(&paths[qc], &paths[pc]) {
                let img = proj.apply(&field.unit_vector(np, index[&prod]));
                mult[r][s] = img.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
    }
    let mut unit = field.zeros(np);
    for v in &by_len[0] {
        unit[index[v]] = field.one();
    }
    let unit = proj.apply(&unit);
    let algebra = Algebra::new(field, labels, mult, unit)?;

    let idempotents: Vec<Vec<Scalar>> = by_len[0]
        .iter()
        .map(|v| proj.apply(&field.unit_vector(np, index[v])))
        .collect();
    let frame = IdempotentFrame::new(p.vertices.clone(), idempotents, vec![0; p.vertices.len()])?;
    let positive = paths
        .iter()
        .filter(|q| !q.arrows.is_empty())
        .map(|q| proj.apply(&field.unit_vector(np, index[q])));
    let arrow_ideal = Subspace::from_vectors(field, d, positive)?;
    Ok(QuiverAlgebra {
        algebra,
        frame,
        arrow_ideal,
    })
}
