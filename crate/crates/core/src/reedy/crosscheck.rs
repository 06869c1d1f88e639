use serde::Serialize;

use crate::algebra::{is_elementary, is_local_one_dim_top, radical, AlgSubspace};
use crate::error::{Error, Result};
use crate::linalg::EchelonBuilder;
use crate::qh::{
    delta_subalgebra_check, directed_qh_check_in, exact_borel_check, heredity_chain_verify, restrict_frame, WeightOrder,
};
use crate::reedy::{verify_reedy, ReedyStructure};

/// `C (x)_S B -> A` with `C = A+`, `B = A-`, and the side conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationRoute {
    pub plus_elementary: bool,
    pub minus_elementary: bool,
    /// `A+ ∩ A-` is exactly the span of the frame.
    pub intersection_is_frame: bool,
    pub tensor_domain: usize,
    pub tensor_rank: usize,
    pub tensor_bijective: bool,
    pub minus_simple_standards: bool,
    pub plus_projective_standards: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubalgebraRoute {
    pub exact_borel: bool,
    pub delta: bool,
    pub weights_match: bool,
    pub reasons: Vec<String>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crosscheck {
    pub reedy: bool,
    pub factorization: FactorizationRoute,
    pub subalgebras: SubalgebraRoute,
    pub agree: bool,
}

/// Evaluates the Reedy property three ways: directly, as a factorization
/// `A = C (x)_S B`, and through exact Borel and Delta subalgebras.
pub fn characterization_crosscheck(r: &ReedyStructure) -> Result<Crosscheck> {
    let a = &r.algebra;
    let frame = &r.frame;
    let order = WeightOrder::from_frame(frame);
    let reedy = verify_reedy(r).overall;

    let (palg, _, pframe) = restrict_frame(a, &r.aplus.space, frame)?;
    let (malg, _, mframe) = restrict_frame(a, &r.aminus.space, frame)?;
    let plus_elementary = is_elementary(&palg, &pframe);
    let minus_elementary = is_elementary(&malg, &mframe);
    let intersection_is_frame = r.aplus.space.intersect(&r.aminus.space)? == r.s_space();
    let mut tensor_domain = 0;
    let mut span = EchelonBuilder::new(a.field(), a.dim());
    for e in &frame.idempotents {
        let pe = a.sandwich(a.unit(), &r.aplus.space, e);
        let em = a.sandwich(e, &r.aminus.space, a.unit());
        tensor_domain += pe.dim() * em.dim();
        for x in pe.basis_rows() {
            for y in em.basis_rows() {
                span.insert(a.mul(x, y));
            }
        }
    }
    let tensor_rank = span.dim();
    let tensor_bijective = tensor_domain == a.dim() && tensor_rank == a.dim();
    let minus_simple_standards = directed_qh_check_in(a, &r.aminus.space, frame, &order).simple_standards;
    let plus_projective_standards = directed_qh_check_in(a, &r.aplus.space, frame, &order).projective_standards;
    let factorization = FactorizationRoute {
        plus_elementary,
        minus_elementary,
        intersection_is_frame,
        tensor_domain,
        tensor_rank,
        tensor_bijective,
        minus_simple_standards,
        plus_projective_standards,
        holds: plus_elementary
            && minus_elementary
            && intersection_is_frame
            && tensor_bijective
            && minus_simple_standards
            && plus_projective_standards,
    };

    let borel = exact_borel_check(a, frame, &r.aminus, &order)?;
    let delta = delta_subalgebra_check(a, frame, &r.aplus, &order)?;
    let chain = heredity_chain_verify(a, frame)?;
    let mut reasons: Vec<String> = borel.reasons.iter().map(|s| format!("A-: {s}")).collect();
    reasons.extend(delta.reasons.iter().map(|s| format!("A+: {s}")));
    let subalgebras = SubalgebraRoute {
        exact_borel: borel.holds,
        delta: delta.holds,
        weights_match: chain.weights_match,
        holds: borel.holds && delta.holds && chain.weights_match,
        reasons,
    };
    Ok(Crosscheck {
        agree: reedy == factorization.holds && reedy == subalgebras.holds,
        reedy,
        factorization,
        subalgebras,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleIdentity {
    pub weight: String,
    /// `sum_l dim(A+ e_l) dim(e_l A- e_i)`.
    pub domain: usize,
    /// `dim A e_i`.
    pub codomain: usize,
}

/// Identities satisfied by every Reedy structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralIdentities {
    pub plus_elementary: bool,
    pub minus_elementary: bool,
    pub primitive_in_plus: bool,
    pub primitive_in_minus: bool,
    pub intersection_dim: usize,
    pub intersection_is_frame: bool,
    pub frame_split_semisimple: bool,
    pub left_modules: Vec<ModuleIdentity>,
    pub bimodule_total: usize,
    pub holds: bool,
}

pub fn structural_identities(r: &ReedyStructure) -> Result<StructuralIdentities> {
    if !verify_reedy(r).overall {
        return Err(Error::Precondition("structure is not Reedy".into()));
    }
    let a = &r.algebra;
    let frame = &r.frame;
    let (palg, _, pframe) = restrict_frame(a, &r.aplus.space, frame)?;
    let (malg, _, mframe) = restrict_frame(a, &r.aminus.space, frame)?;
    let primitive_in_plus = pframe.idempotents.iter().all(|e| is_local_one_dim_top(&palg, e));
    let primitive_in_minus = mframe.idempotents.iter().all(|e| is_local_one_dim_top(&malg, e));
    let inter = r.aplus.space.intersect(&r.aminus.space)?;
    let s = AlgSubspace::subalgebra(a, inter.clone())?;
    let (salg, _, sframe) = restrict_frame(a, &s.space, frame)?;
    let frame_split_semisimple =
        radical(&salg).dim() == 0 && salg.dim() == frame.len() && is_elementary(&salg, &sframe);

    let plus_cols: Vec<_> = frame
        .idempotents
        .iter()
        .map(|e| a.sandwich(a.unit(), &r.aplus.space, e).dim())
        .collect();
    let mut left_modules = Vec::with_capacity(frame.len());
    let mut bimodule_total = 0;
    for (i, ei) in frame.idempotents.iter().enumerate() {
        let mut domain = 0;
        for (l, el) in frame.idempotents.iter().enumerate() {
            domain += plus_cols[l] * a.sandwich(el, &r.aminus.space, ei).dim();
        }
        bimodule_total += domain;
        left_modules.push(ModuleIdentity {
            weight: frame.names[i].clone(),
            domain,
            codomain: a.sandwich(a.unit(), &a.full_space(), ei).dim(),
        });
    }
    let intersection_is_frame = inter == r.s_space();
    let plus_elementary = is_elementary(&palg, &pframe);
    let minus_elementary = is_elementary(&malg, &mframe);
    let holds = plus_elementary
        && minus_elementary
        && primitive_in_plus
        && primitive_in_minus
        && intersection_is_frame
        && frame_split_semisimple
        && left_modules.iter().all(|m| m.domain == m.codomain)
        && bimodule_total == a.dim();
    Ok(StructuralIdentities {
        plus_elementary,
        minus_elementary,
        primitive_in_plus,
        primitive_in_minus,
        intersection_dim: inter.dim(),
        intersection_is_frame,
        frame_split_semisimple,
        left_modules,
        bimodule_total,
        holds,
    })
}
