use serde::Serialize;

use crate::algebra::{corner, ideal_closure, quotient, tensor_dim_over_corner_parts, IdempotentFrame};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Subspace};
use crate::qh::products_span;
use crate::reedy::{setup_holds, verify_reedy, ReedyReport, ReedyStructure};

fn span_of(r: &ReedyStructure, v: &[crate::linalg::Scalar]) -> Subspace {
    Subspace::from_vectors(r.algebra.field(), r.algebra.dim(), [v.to_vec()]).expect("element")
}

fn require_verified(r: &ReedyStructure) -> Result<()> {
    if verify_reedy(r).overall {
        Ok(())
    } else {
        Err(Error::Precondition("structure is not Reedy".into()))
    }
}

/// `(eAe, eA+e, eA-e)` for `e` the sum of the idempotents of degree
/// `<= cut`.
pub fn corner_structure(r: &ReedyStructure, cut: usize) -> Result<ReedyStructure> {
    let a = &r.algebra;
    let e = r.frame.cumulative(a, cut);
    if is_zero_vec(&e) {
        return Err(Error::Precondition(format!("no idempotent has degree <= {cut}")));
    }
    let (c, emb) = corner(a, &e)?;
    let keep: Vec<usize> = (0..r.frame.len()).filter(|&i| r.frame.degrees[i] <= cut).collect();
    let frame = IdempotentFrame::new(
        keep.iter().map(|&i| r.frame.names[i].clone()).collect(),
        keep.iter()
            .map(|&i| emb.restrict(&r.frame.idempotents[i]).expect("idempotent in corner"))
            .collect(),
        keep.iter().map(|&i| r.frame.degrees[i]).collect(),
    )?;
    let plus = emb.restrict_space(&a.sandwich(&e, &r.aplus.space, &e))?;
    let minus = emb.restrict_space(&a.sandwich(&e, &r.aminus.space, &e))?;
    ReedyStructure::new(c, frame, plus, minus)
}

/// `(A/AeA, A+/A+eA+, A-/A-eA-)`, together with whether the maps
/// `A+/A+eA+ -> A/AeA` and `A-/A-eA- -> A/AeA` are injective.
pub fn quotient_structure(r: &ReedyStructure, cut: usize) -> Result<(ReedyStructure, bool)> {
    let a = &r.algebra;
    if cut >= r.frame.max_level() {
        return Err(Error::Precondition(format!(
            "cut {cut} leaves no idempotent in the quotient"
        )));
    }
    let e = r.frame.cumulative(a, cut);
    let j = ideal_closure(a, &[e.clone()]);
    let (q, proj) = quotient(a, &j)?;
    let keep: Vec<usize> = (0..r.frame.len()).filter(|&i| r.frame.degrees[i] > cut).collect();
    let frame = IdempotentFrame::new(
        keep.iter().map(|&i| r.frame.names[i].clone()).collect(),
        keep.iter().map(|&i| proj.apply(&r.frame.idempotents[i])).collect(),
        keep.iter().map(|&i| r.frame.degrees[i]).collect(),
    )?;
    let es = span_of(r, &e);
    let mut injective = true;
    let mut images = Vec::with_capacity(2);
    for x in [&r.aplus.space, &r.aminus.space] {
        let xex = products_span(a, &products_span(a, x, &es), x);
        let img = proj.image(x);
        injective &= img.dim() == x.dim() - xex.dim();
        images.push(img);
    }
    let minus = images.pop().expect("two");
    let plus = images.pop().expect("two");
    Ok((ReedyStructure::new(q, frame, plus, minus)?, injective))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedReport {
    pub cut: usize,
    pub dim: usize,
    #[serde(skip)]
    pub structure: ReedyStructure,
    pub reedy: ReedyReport,
    /// The heredity chain of the induced algebra is the one cut out of the
    /// chain of `A`.
    pub chain_matches: bool,
    pub injective: bool,
    pub holds: bool,
}

/// Corner structure of a verified Reedy structure, re-verified.
pub fn induced_corner(r: &ReedyStructure, cut: usize) -> Result<InducedReport> {
    require_verified(r)?;
    let a = &r.algebra;
    let c = corner_structure(r, cut)?;
    let e = r.frame.cumulative(a, cut);
    let (_, emb) = corner(a, &e)?;
    let mut chain_matches = true;
    for l in c.frame.occupied_levels() {
        let jc = ideal_closure(&c.algebra, &[c.frame.cumulative(&c.algebra, l)]).space;
        let ja = ideal_closure(a, &[r.frame.cumulative(a, l)]).space;
        chain_matches &= emb.embed_space(&jc) == a.sandwich(&e, &ja, &e);
    }
    let reedy = verify_reedy(&c);
    Ok(InducedReport {
        cut,
        dim: c.algebra.dim(),
        holds: reedy.overall && chain_matches,
        structure: c,
        reedy,
        chain_matches,
        injective: true,
    })
}

/// Quotient structure of a verified Reedy structure, re-verified.
pub fn induced_quotient(r: &ReedyStructure, cut: usize) -> Result<InducedReport> {
    require_verified(r)?;
    let a = &r.algebra;
    let (q, injective) = quotient_structure(r, cut)?;
    let e = r.frame.cumulative(a, cut);
    let proj = crate::algebra::Projection::new(ideal_closure(a, &[e]).space);
    let mut chain_matches = true;
    for l in q.frame.occupied_levels() {
        let jq = ideal_closure(&q.algebra, &[q.frame.cumulative(&q.algebra, l)]).space;
        let ja = ideal_closure(a, &[r.frame.cumulative(a, l)]).space;
        chain_matches &= proj.image(&ja) == jq;
    }
    let reedy = verify_reedy(&q);
    Ok(InducedReport {
        cut,
        dim: q.algebra.dim(),
        holds: reedy.overall && chain_matches && injective,
        structure: q,
        reedy,
        chain_matches,
        injective,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursiveReport {
    pub cut: usize,
    /// `A` is spanned by the products `A+ A-`.
    pub hypothesis: bool,
    pub corner_reedy: bool,
    pub quotient_reedy: bool,
    /// `Ae (x)_{eAe} eA -> AeA` is bijective.
    pub multiplication_bijective: bool,
    pub triple: bool,
    pub reedy: bool,
    /// Without the hypothesis the triple carries no implication.
    pub informational: bool,
    /// Under the hypothesis, the triple agrees with `verify_reedy`.
    pub consistent: bool,
}

/// Recursive criterion at one cut: corner, quotient and the multiplication
/// map. A quotient by all of `A` counts as Reedy.
pub fn recursive_check(r: &ReedyStructure, cut: usize) -> Result<RecursiveReport> {
    if !setup_holds(r) {
        return Err(Error::Precondition(
            "A+ and A- are not directed with respect to the degrees".into(),
        ));
    }
    let a = &r.algebra;
    let hypothesis = products_span(a, &r.aplus.space, &r.aminus.space).dim() == a.dim();
    let corner_reedy = match corner_structure(r, cut) {
        Ok(c) => verify_reedy(&c).overall,
        Err(Error::Precondition(_)) => true,
        Err(err) => return Err(err),
    };
    let quotient_reedy = if cut >= r.frame.max_level() {
        true
    } else {
        let (q, _) = quotient_structure(r, cut)?;
        verify_reedy(&q).overall
    };
    let parts: Vec<_> = (0..r.frame.len())
        .filter(|&i| r.frame.degrees[i] <= cut)
        .map(|i| r.frame.idempotents[i].clone())
        .collect();
    let e = r.frame.cumulative(a, cut);
    let multiplication_bijective = tensor_dim_over_corner_parts(a, &parts)? == ideal_closure(a, &[e]).dim();
    let triple = corner_reedy && quotient_reedy && multiplication_bijective;
    let reedy = verify_reedy(r).overall;
    Ok(RecursiveReport {
        cut,
        hypothesis,
        corner_reedy,
        quotient_reedy,
        multiplication_bijective,
        triple,
        reedy,
        informational: !hypothesis,
        consistent: !hypothesis || triple == reedy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::constructors::{diamond, simplex_algebra, upper_triangular};
    use crate::linalg::Field;

    fn diamond_r() -> ReedyStructure {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let s = frame.s_space(&a);
        ReedyStructure::new(a.clone(), frame, a.full_space(), s).unwrap()
    }

    #[test]
    fn diamond_corner_and_quotient() {
        let r = diamond_r();
        let c = induced_corner(&r, 2).unwrap();
        assert_eq!(c.dim, 3);
        assert!(c.holds);
        let q = induced_quotient(&r, 1).unwrap();
        assert_eq!(q.dim, 5);
        assert!(q.holds);
        let top = induced_corner(&r, 4).unwrap();
        assert_eq!(top.structure.algebra.dim(), 9);
    }

    #[test]
    fn simplex_cuts() {
        let s2 = simplex_algebra(2, Field::Rationals).structure;
        let c = induced_corner(&s2, 1).unwrap();
        assert!(c.holds);
        assert_eq!(c.dim, 7);
        // A eps_0 A consists of the constant maps: 3 * (1 + 2 + 3) = 18
        let q = induced_quotient(&s2, 0).unwrap();
        assert!(q.holds);
        assert_eq!(q.dim, 31 - 18);
    }

    #[test]
    fn diamond_recursive_all_cuts() {
        let r = diamond_r();
        for cut in 1..=4 {
            let rep = recursive_check(&r, cut).unwrap();
            assert!(rep.hypothesis && rep.triple && rep.consistent, "cut {cut}");
        }
    }

    #[test]
    fn upper_triangular_without_hypothesis() {
        let a = upper_triangular(2, Field::Rationals);
        let frame = IdempotentFrame::from_basis_labels(&a, &["E11", "E22"], &[0, 1]).unwrap();
        let s = frame.s_space(&a);
        let r = ReedyStructure::new(a, frame, s.clone(), s).unwrap();
        let rep = recursive_check(&r, 0).unwrap();
        assert!(rep.corner_reedy && rep.quotient_reedy && rep.multiplication_bijective);
        assert!(!rep.hypothesis && rep.informational && !rep.reedy);
    }

    #[test]
    fn ground_field_recursive() {
        let k = Algebra::ground(Field::Rationals);
        let frame = IdempotentFrame::unit(&k);
        let r = ReedyStructure::new(k.clone(), frame, k.full_space(), k.full_space()).unwrap();
        let rep = recursive_check(&r, 0).unwrap();
        assert!(rep.triple && rep.reedy);
    }
}
