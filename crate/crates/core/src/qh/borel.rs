use serde::Serialize;

use crate::algebra::{
    induce_module, is_elementary, is_projective_module, left_ideal_closure, radical, AlgSubspace, Algebra, ClosureKind,
    Embedding, IdempotentFrame, ModuleRep, Side,
};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::qh::{directed_qh_check_in, heredity_chain_verify, standard_modules, WeightOrder};

/// A subalgebra as an algebra in its own right, with the frame carried over.
pub fn restrict_frame(
    a: &Algebra,
    space: &Subspace,
    frame: &IdempotentFrame,
) -> Result<(Algebra, Embedding, IdempotentFrame)> {
    let (alg, emb) = a.restrict(space, a.unit())?;
    let mut idem = Vec::with_capacity(frame.len());
    for (n, e) in frame.names.iter().zip(&frame.idempotents) {
        idem.push(
            emb.restrict(e)
                .ok_or_else(|| Error::Precondition(format!("subalgebra does not contain the idempotent {n}")))?,
        );
    }
    let f = IdempotentFrame::new(frame.names.clone(), idem, frame.degrees.clone())?;
    Ok((alg, emb, f))
}

fn check_subalgebra(sub: &AlgSubspace) -> Result<()> {
    if sub.kind != ClosureKind::Subalgebra {
        return Err(Error::NotASubalgebra);
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightComparison {
    pub weight: String,
    pub dims: (Vec<usize>, Vec<usize>),
    pub tops: (Vec<usize>, Vec<usize>),
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelVerdict {
    pub elementary: bool,
    pub simple_standards: bool,
    pub algebra_quasi_hereditary: bool,
    pub weights_match: bool,
    /// `A` is projective as a right module over the subalgebra.
    pub induction_exact: bool,
    pub induced_standards: Vec<WeightComparison>,
    pub holds: bool,
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaVerdict {
    pub elementary: bool,
    pub projective_standards: bool,
    pub algebra_quasi_hereditary: bool,
    pub weights_match: bool,
    pub restrictions_projective: bool,
    pub restricted_standards: Vec<WeightComparison>,
    pub holds: bool,
    pub reasons: Vec<String>,
}

/// Module identification is at the level of dimension vectors and tops.
pub fn exact_borel_check(
    a: &Algebra,
    frame: &IdempotentFrame,
    b: &AlgSubspace,
    order: &WeightOrder,
) -> Result<BorelVerdict> {
    check_subalgebra(b)?;
    let (balg, _, bframe) = restrict_frame(a, &b.space, frame)?;
    let mut reasons = Vec::new();
    let elementary = is_elementary(&balg, &bframe);
    if !elementary {
        reasons.push("subalgebra is not elementary with respect to the frame".into());
    }
    let simple_standards = directed_qh_check_in(a, &b.space, frame, order).simple_standards;
    if !simple_standards {
        reasons.push("subalgebra does not have simple standard modules for the order".into());
    }
    let ordered = frame.with_degrees(order.levels.clone());
    let chain = heredity_chain_verify(a, &ordered)?;
    if !chain.overall {
        reasons.push("algebra has no heredity chain for the order".into());
    }
    if !chain.weights_match {
        reasons.push("weights of the algebra do not match the frame".into());
    }

    let mut induction_exact = false;
    let mut induced_standards = Vec::new();
    if elementary {
        let actions = b.space.basis_rows().iter().map(|x| a.right_mul_matrix(x)).collect();
        let regular = ModuleRep::new(a.field(), Side::Right, a.dim(), actions)?;
        induction_exact = is_projective_module(&regular, &balg, &bframe)?;
        if !induction_exact {
            reasons.push("algebra is not projective over the subalgebra".into());
        }
        let fam = standard_modules(a, frame, order)?;
        let arad = radical(a);
        let brad = radical(&balg);
        for (i, w) in fam.weights.iter().enumerate() {
            let e = &bframe.idempotents[i];
            let p = left_ideal_closure(&balg, &[e.clone()]);
            let rad_e = balg.sandwich(balg.unit(), &brad.space, e);
            let simple = ModuleRep::regular_subquotient(&balg, Side::Left, &p, &rad_e)?;
            let induced = induce_module(a, b, &simple)?;
            let dims = induced.dim_vector(&frame.idempotents);
            let tops = induced.top_vector(&frame.idempotents, arad.space.basis_rows());
            let matches = dims == w.dim_vector && tops == w.top_vector;
            if !matches {
                reasons.push(format!("induced simple at {} differs from the standard module", w.name));
            }
            induced_standards.push(WeightComparison {
                weight: w.name.clone(),
                dims: (dims, w.dim_vector.clone()),
                tops: (tops, w.top_vector.clone()),
                matches,
            });
        }
    }
    let holds = elementary
        && simple_standards
        && chain.overall
        && chain.weights_match
        && induction_exact
        && induced_standards.iter().all(|c| c.matches);
    Ok(BorelVerdict {
        elementary,
        simple_standards,
        algebra_quasi_hereditary: chain.overall,
        weights_match: chain.weights_match,
        induction_exact,
        induced_standards,
        holds,
        reasons,
    })
}

/// Standard modules restrict to the indecomposable projectives of `c`.
pub fn delta_subalgebra_check(
    a: &Algebra,
    frame: &IdempotentFrame,
    c: &AlgSubspace,
    order: &WeightOrder,
) -> Result<DeltaVerdict> {
    check_subalgebra(c)?;
    let (calg, _, cframe) = restrict_frame(a, &c.space, frame)?;
    let mut reasons = Vec::new();
    let elementary = is_elementary(&calg, &cframe);
    if !elementary {
        reasons.push("subalgebra is not elementary with respect to the frame".into());
    }
    let projective_standards = directed_qh_check_in(a, &c.space, frame, order).projective_standards;
    if !projective_standards {
        reasons.push("subalgebra does not have projective standard modules for the order".into());
    }
    let ordered = frame.with_degrees(order.levels.clone());
    let chain = heredity_chain_verify(a, &ordered)?;
    if !chain.overall {
        reasons.push("algebra has no heredity chain for the order".into());
    }
    if !chain.weights_match {
        reasons.push("weights of the algebra do not match the frame".into());
    }

    let mut restrictions_projective = false;
    let mut restricted_standards = Vec::new();
    if elementary {
        restrictions_projective = true;
        let fam = standard_modules(a, frame, order)?;
        let crad = radical(&calg);
        for (i, w) in fam.weights.iter().enumerate() {
            let restricted = w.standard.restrict(c.space.basis_rows());
            if !is_projective_module(&restricted, &calg, &cframe)? {
                restrictions_projective = false;
                reasons.push(format!(
                    "standard module at {} is not projective over the subalgebra",
                    w.name
                ));
            }
            let e = &cframe.idempotents[i];
            let p = ModuleRep::regular_submodule(&calg, Side::Left, &left_ideal_closure(&calg, &[e.clone()]))?;
            let got = (
                restricted.dim_vector(&cframe.idempotents),
                restricted.top_vector(&cframe.idempotents, crad.space.basis_rows()),
            );
            let want = (
                p.dim_vector(&cframe.idempotents),
                p.top_vector(&cframe.idempotents, crad.space.basis_rows()),
            );
            let matches = got == want;
            if !matches {
                reasons.push(format!(
                    "restricted standard module at {} differs from the projective",
                    w.name
                ));
            }
            restricted_standards.push(WeightComparison {
                weight: w.name.clone(),
                dims: (got.0, want.0),
                tops: (got.1, want.1),
                matches,
            });
        }
    }
    let holds = elementary
        && projective_standards
        && chain.overall
        && chain.weights_match
        && restrictions_projective
        && restricted_standards.iter().all(|c| c.matches);
    Ok(DeltaVerdict {
        elementary,
        projective_standards,
        algebra_quasi_hereditary: chain.overall,
        weights_match: chain.weights_match,
        restrictions_projective,
        restricted_standards,
        holds,
        reasons,
    })
}
