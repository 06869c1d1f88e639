//! Heredity ideals and chains, standard modules, and the exact Borel and
//! Delta subalgebra tests.

mod borel;

pub use borel::{delta_subalgebra_check, exact_borel_check, restrict_frame, BorelVerdict, DeltaVerdict};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    corner, ideal_closure, is_elementary, is_projective_module, left_ideal_closure, product_space, quotient, radical,
    tensor_dim_over_corner_parts, AlgSubspace, Algebra, IdempotentFrame, ModuleRep, Side,
};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, vec_add, EchelonBuilder, Scalar, Subspace};
use crate::reedy::degree_functions;

/// A partial order on weights given by levels: `i` lies strictly below `j`
/// iff `level(i) > level(j)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightOrder {
    pub levels: Vec<usize>,
}

impl WeightOrder {
    pub fn new(levels: Vec<usize>) -> Self {
        WeightOrder { levels }
    }

    pub fn from_frame(frame: &IdempotentFrame) -> Self {
        WeightOrder {
            levels: frame.degrees.clone(),
        }
    }

    /// `i < j` in the order.
    pub fn below(&self, i: usize, j: usize) -> bool {
        self.levels[i] > self.levels[j]
    }

    pub fn below_eq(&self, i: usize, j: usize) -> bool {
        i == j || self.below(i, j)
    }

    pub fn normalized(&self) -> WeightOrder {
        WeightOrder {
            levels: crate::algebra::normalize_degrees(&self.levels),
        }
    }

    pub fn as_map(&self, frame: &IdempotentFrame) -> BTreeMap<String, usize> {
        frame.names.iter().cloned().zip(self.levels.iter().copied()).collect()
    }
}

/// Outcome of the heredity test for `A eps A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeredityVerdict {
    pub ideal_dim: usize,
    pub corner_dim: usize,
    pub corner_semisimple: bool,
    pub tensor_dim: usize,
    pub tensor_bijective: bool,
    /// Direct checks `J^2 = J`, `J rad J = 0`, `J` projective; only run when
    /// the algebra is elementary for the frame.
    pub direct: Option<DirectChecks>,
    pub holds: bool,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectChecks {
    pub idempotent: bool,
    pub radical_annihilated: bool,
    pub projective: bool,
    pub agrees: bool,
}

/// `A eps A` is a heredity ideal: `eps A eps` is semisimple and
/// `A eps (x)_{eps A eps} eps A -> A eps A` is bijective. `parts` are the
/// frame idempotents summing to `eps`.
pub fn heredity_ideal_check(a: &Algebra, frame: &IdempotentFrame, parts: &[usize]) -> Result<HeredityVerdict> {
    let mut eps = a.zero_vector();
    for &i in parts {
        eps = vec_add(&eps, &frame.idempotents[i]);
    }
    if !a.is_idempotent(&eps) {
        return Err(Error::NotIdempotent(a.format_element(&eps)));
    }
    let j = ideal_closure(a, &[eps.clone()]);
    let mut reasons = Vec::new();
    if is_zero_vec(&eps) {
        return Ok(HeredityVerdict {
            ideal_dim: 0,
            corner_dim: 0,
            corner_semisimple: true,
            tensor_dim: 0,
            tensor_bijective: true,
            direct: None,
            holds: true,
            reasons,
        });
    }
    let (c, _) = corner(a, &eps)?;
    let corner_semisimple = radical(&c).dim() == 0;
    if !corner_semisimple {
        reasons.push("corner algebra is not semisimple".into());
    }
    let part_vecs: Vec<Vec<Scalar>> = parts.iter().map(|&i| frame.idempotents[i].clone()).collect();
    let tensor_dim = tensor_dim_over_corner_parts(a, &part_vecs)?;
    let tensor_bijective = tensor_dim == j.dim();
    if !tensor_bijective {
        reasons.push(format!(
            "multiplication onto the ideal is not bijective: tensor dim {tensor_dim}, ideal dim {}",
            j.dim()
        ));
    }
    let holds = corner_semisimple && tensor_bijective;
    let direct = if is_elementary(a, frame) {
        let rad = radical(a);
        let idempotent = product_space(a, &j.space, &j.space) == j.space;
        let jr = product_space(a, &product_space(a, &j.space, &rad.space), &j.space);
        let radical_annihilated = jr.is_zero();
        let m = ModuleRep::regular_submodule(a, Side::Left, &j.space)?;
        let projective = is_projective_module(&m, a, frame)?;
        let all = idempotent && radical_annihilated && projective;
        if all != holds {
            reasons.push("direct heredity checks disagree with the corner criterion".into());
        }
        Some(DirectChecks {
            idempotent,
            radical_annihilated,
            projective,
            agrees: all == holds,
        })
    } else {
        None
    };
    Ok(HeredityVerdict {
        ideal_dim: j.dim(),
        corner_dim: c.dim(),
        corner_semisimple,
        tensor_dim,
        tensor_bijective,
        direct,
        holds,
        reasons,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainLayer {
    pub level: usize,
    pub weights: Vec<String>,
    /// `dim J_l` in `A`.
    pub ideal_dim: usize,
    #[serde(skip)]
    pub ideal: Subspace,
    pub verdict: HeredityVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeredityChainReport {
    pub layers: Vec<ChainLayer>,
    pub reaches_algebra: bool,
    pub strictly_increasing: bool,
    /// Each layer's corner has dimension equal to its number of weights,
    /// matching weights of the layer with frame idempotents.
    pub weights_match: bool,
    pub overall: bool,
}

/// Checks `0 = J_{-1} <= J_0 <= ... <= J_m = A` with
/// `J_l = A (eps_0 + ... + eps_l) A`, layer by layer in `A / J_{l-1}`.
pub fn heredity_chain_verify(a: &Algebra, frame: &IdempotentFrame) -> Result<HeredityChainReport> {
    frame.validate(a)?;
    let mut layers = Vec::new();
    let mut prev = AlgSubspace {
        space: a.zero_space(),
        kind: crate::algebra::ClosureKind::TwoSidedIdeal,
    };
    let mut strictly_increasing = true;
    let mut weights_match = true;
    for l in frame.occupied_levels() {
        let (q, proj) = quotient(a, &prev)?;
        let keep: Vec<usize> = (0..frame.len()).filter(|&i| frame.degrees[i] >= l).collect();
        let qframe = IdempotentFrame::new(
            keep.iter().map(|&i| frame.names[i].clone()).collect(),
            keep.iter().map(|&i| proj.apply(&frame.idempotents[i])).collect(),
            keep.iter().map(|&i| frame.degrees[i]).collect(),
        )?;
        let parts: Vec<usize> = (0..keep.len()).filter(|&k| qframe.degrees[k] == l).collect();
        let verdict = heredity_ideal_check(&q, &qframe, &parts)?;
        if verdict.corner_dim != parts.len() {
            weights_match = false;
        }
        let j = ideal_closure(a, &[frame.cumulative(a, l)]);
        if j.dim() == prev.dim() {
            strictly_increasing = false;
        }
        layers.push(ChainLayer {
            level: l,
            weights: parts.iter().map(|&k| qframe.names[k].clone()).collect(),
            ideal_dim: j.dim(),
            ideal: j.space.clone(),
            verdict,
        });
        prev = j;
    }
    let reaches_algebra = prev.dim() == a.dim();
    let overall = reaches_algebra && layers.iter().all(|l| l.verdict.holds);
    Ok(HeredityChainReport {
        layers,
        reaches_algebra,
        strictly_increasing,
        weights_match,
        overall,
    })
}

/// Projective, standard and simple module at one weight.
#[derive(Clone, Debug)]
pub struct StandardData {
    pub name: String,
    pub projective: ModuleRep,
    pub standard: ModuleRep,
    pub simple: ModuleRep,
    pub trace_dim: usize,
    pub dim_vector: Vec<usize>,
    pub top_vector: Vec<usize>,
    /// `dim e_j Delta(i) = 0` whenever `j` is not below or equal to `i`.
    pub factor_bound: bool,
}

#[derive(Clone, Debug)]
pub struct StandardFamily {
    pub weights: Vec<StandardData>,
    pub elementary: bool,
}

/// `Delta(i) = A e_i / sum_{j not <= i} A e_j A e_i` for each weight.
pub fn standard_modules(a: &Algebra, frame: &IdempotentFrame, order: &WeightOrder) -> Result<StandardFamily> {
    frame.validate(a)?;
    let rad = radical(a);
    let rad_rows = rad.space.basis_rows().to_vec();
    let elementary = is_elementary(a, frame);
    let n = frame.len();
    let weights = (0..n)
        .into_par_iter()
        .map(|i| -> Result<StandardData> {
            let ei = &frame.idempotents[i];
            let p = left_ideal_closure(a, &[ei.clone()]);
            let mut eps = a.zero_vector();
            for j in (0..n).filter(|&j| !order.below_eq(j, i)) {
                eps = vec_add(&eps, &frame.idempotents[j]);
            }
            let ideal = ideal_closure(a, &[eps]);
            let trace = a.sandwich(a.unit(), &ideal.space, ei);
            let projective = ModuleRep::regular_submodule(a, Side::Left, &p)?;
            let standard = ModuleRep::regular_subquotient(a, Side::Left, &p, &trace)?;
            let rad_e = a.sandwich(a.unit(), &rad.space, ei);
            let simple = ModuleRep::regular_subquotient(a, Side::Left, &p, &rad_e)?;
            let dim_vector = standard.dim_vector(&frame.idempotents);
            let top_vector = standard.top_vector(&frame.idempotents, &rad_rows);
            let factor_bound = (0..n).all(|j| order.below_eq(j, i) || dim_vector[j] == 0);
            Ok(StandardData {
                name: frame.names[i].clone(),
                projective,
                standard,
                simple,
                trace_dim: trace.dim(),
                dim_vector,
                top_vector,
                factor_bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StandardFamily { weights, elementary })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedVerdict {
    pub simple_standards: bool,
    pub projective_standards: bool,
}

/// Directedness of a subspace `X` of `a` containing the frame: every
/// `e_i X e_i` is one-dimensional, and off-diagonal blocks `e_j X e_i` only
/// occur for `i` below `j` (simple standards) or `j` below `i` (projective
/// standards).
pub fn directed_qh_check_in(
    a: &Algebra,
    x: &Subspace,
    frame: &IdempotentFrame,
    order: &WeightOrder,
) -> DirectedVerdict {
    let n = frame.len();
    let mut simple = true;
    let mut projective = true;
    for j in 0..n {
        for i in 0..n {
            let d = a.sandwich(&frame.idempotents[j], x, &frame.idempotents[i]).dim();
            if i == j {
                if d != 1 {
                    simple = false;
                    projective = false;
                }
            } else if d > 0 {
                simple &= order.below(i, j);
                projective &= order.below(j, i);
            }
        }
    }
    DirectedVerdict {
        simple_standards: simple,
        projective_standards: projective,
    }
}

pub fn directed_qh_check(a: &Algebra, frame: &IdempotentFrame, order: &WeightOrder) -> DirectedVerdict {
    directed_qh_check_in(a, &a.full_space(), frame, order)
}

/// All normalized level functions whose heredity chain verifies, in
/// lexicographic order.
pub fn qh_order_search(a: &Algebra, frame: &IdempotentFrame, max_weights: usize) -> Result<Vec<WeightOrder>> {
    if frame.len() > max_weights {
        return Err(Error::BoundExceeded(format!(
            "{} idempotents exceed the bound {max_weights}",
            frame.len()
        )));
    }
    frame.validate(a)?;
    let candidates = degree_functions(frame.len());
    let mut found: Vec<WeightOrder> = candidates
        .into_par_iter()
        .filter_map(|levels| {
            let f = frame.with_degrees(levels.clone());
            match heredity_chain_verify(a, &f) {
                Ok(r) if r.overall => Some(WeightOrder::new(levels)),
                _ => None,
            }
        })
        .collect();
    found.sort();
    Ok(found)
}

/// Span of `x * y` over the given bases, used for the hypothesis
/// `A = A+ A-`.
pub fn products_span(a: &Algebra, xs: &Subspace, ys: &Subspace) -> Subspace {
    let mut b = EchelonBuilder::new(a.field(), a.dim());
    for x in xs.basis_rows() {
        for y in ys.basis_rows() {
            b.insert(a.mul(x, y));
        }
    }
    b.finish()
}
