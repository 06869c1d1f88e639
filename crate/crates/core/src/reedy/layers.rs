use serde::Serialize;

use crate::algebra::{ideal_closure, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Scalar, Subspace};
use crate::qh::products_span;
use crate::reedy::{setup_holds, verify_reedy, ReedyStructure};

/// One level of the layer decomposition `J_l / J_{l-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerDiag {
    pub level: usize,
    pub weights: Vec<String>,
    /// `sum dim(A+ e_i) dim(e_i A-)` over `deg e_i = l`.
    pub domain_plain: usize,
    pub rank_plain: usize,
    /// Same with `A+` and `A-` replaced by their quotients by the ideals
    /// generated by the lower levels.
    pub domain_quotient: usize,
    pub rank_quotient: usize,
    pub codomain: usize,
    pub plain_ok: bool,
    pub quotient_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub layers: Vec<LayerDiag>,
    pub plain_ok: bool,
    pub quotient_ok: bool,
    pub reedy: bool,
    /// The two layer criteria and `verify_reedy` agree.
    pub agree: bool,
}

fn one_sided(a: &Algebra, x: &Subspace, e: &[Scalar], left: bool) -> Subspace {
    if left {
        a.sandwich(a.unit(), x, e)
    } else {
        a.sandwich(e, x, a.unit())
    }
}

/// Basis vectors of `v` independent modulo `m`.
fn complement_modulo(v: &Subspace, m: &Subspace) -> Vec<Vec<Scalar>> {
    let mut b = EchelonBuilder::from_subspace(m);
    v.basis_rows()
        .iter()
        .filter(|x| b.insert((*x).clone()))
        .cloned()
        .collect()
}

/// `X s X` for a subalgebra `X` and an element `s`.
fn two_sided_in(a: &Algebra, x: &Subspace, s: &[Scalar]) -> Subspace {
    let sp = Subspace::from_vectors(a.field(), a.dim(), [s.to_vec()]).expect("element");
    products_span(a, &products_span(a, x, &sp), x)
}

/// Layer-by-layer form of the Reedy condition. Requires the directedness
/// conditions on `A+` and `A-`.
pub fn layer_check(r: &ReedyStructure) -> Result<LayerReport> {
    if !setup_holds(r) {
        return Err(Error::Precondition(
            "A+ and A- are not directed with respect to the degrees".into(),
        ));
    }
    let a = &r.algebra;
    let frame = &r.frame;
    let (plus, minus) = (&r.aplus.space, &r.aminus.space);
    let mut prev_e = a.zero_vector();
    let mut prev_j = a.zero_space();
    let mut layers = Vec::new();
    for l in frame.occupied_levels() {
        let j = ideal_closure(a, &[frame.cumulative(a, l)]).space;
        let i_plus = two_sided_in(a, plus, &prev_e);
        let i_minus = two_sided_in(a, minus, &prev_e);
        let (mut dp, mut rp_gens, mut dq, mut rq_gens) = (0, Vec::new(), 0, Vec::new());
        for i in frame.indices_at(l) {
            let e = &frame.idempotents[i];
            let pe = one_sided(a, plus, e, true);
            let em = one_sided(a, minus, e, false);
            dp += pe.dim() * em.dim();
            rp_gens.push((pe.basis_rows().to_vec(), em.basis_rows().to_vec()));
            let pq = complement_modulo(&pe, &i_plus);
            let mq = complement_modulo(&em, &i_minus);
            dq += pq.len() * mq.len();
            rq_gens.push((pq, mq));
        }
        let rank = |gens: &[(Vec<Vec<Scalar>>, Vec<Vec<Scalar>>)]| {
            let mut b = EchelonBuilder::from_subspace(&prev_j);
            let start = b.dim();
            for (xs, ys) in gens {
                for x in xs {
                    for y in ys {
                        b.insert(a.mul(x, y));
                    }
                }
            }
            b.dim() - start
        };
        let rp = rank(&rp_gens);
        let rq = rank(&rq_gens);
        let codomain = j.dim() - prev_j.dim();
        layers.push(LayerDiag {
            level: l,
            weights: frame
                .indices_at(l)
                .into_iter()
                .map(|i| frame.names[i].clone())
                .collect(),
            domain_plain: dp,
            rank_plain: rp,
            domain_quotient: dq,
            rank_quotient: rq,
            codomain,
            plain_ok: dp == codomain && rp == codomain,
            quotient_ok: dq == codomain && rq == codomain,
        });
        prev_e = frame.cumulative(a, l);
        prev_j = j;
    }
    let plain_ok = layers.iter().all(|d| d.plain_ok);
    let quotient_ok = layers.iter().all(|d| d.quotient_ok);
    let reedy = verify_reedy(r).overall;
    Ok(LayerReport {
        agree: plain_ok == quotient_ok && plain_ok == reedy,
        layers,
        plain_ok,
        quotient_ok,
        reedy,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottomReport {
    pub level: usize,
    /// `dim A+ eps_t (x)_{S_t} eps_t A-`, computed blockwise.
    pub domain: usize,
    pub rank: usize,
    /// `dim A eps_t A`.
    pub codomain: usize,
    pub holds: bool,
}

/// At the lowest occupied level `t`, multiplication
/// `A+ eps_t (x)_{S_t} eps_t A- -> A eps_t A` is bijective.
pub fn reedy_heredity_bottom(r: &ReedyStructure) -> Result<BottomReport> {
    if !verify_reedy(r).overall {
        return Err(Error::Precondition("structure is not Reedy".into()));
    }
    let a = &r.algebra;
    let frame = &r.frame;
    let t = frame.min_level();
    let mut domain = 0;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for i in frame.indices_at(t) {
        let e = &frame.idempotents[i];
        let pe = one_sided(a, &r.aplus.space, e, true);
        let em = one_sided(a, &r.aminus.space, e, false);
        domain += pe.dim() * em.dim();
        xs.push(pe);
        ys.push(em);
    }
    let mut rank = 0;
    let mut b = EchelonBuilder::new(a.field(), a.dim());
    for (p, m) in xs.iter().zip(&ys) {
        for x in p.basis_rows() {
            for y in m.basis_rows() {
                b.insert(a.mul(x, y));
            }
        }
        rank = b.dim();
    }
    let codomain = ideal_closure(a, &[frame.epsilon(a, t)]).dim();
    Ok(BottomReport {
        level: t,
        domain,
        rank,
        codomain,
        holds: domain == codomain && rank == codomain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IdempotentFrame;
    use crate::constructors::{diamond, simplex_algebra, upper_triangular};
    use crate::linalg::Field;

    #[test]
    fn simplex_one_layers() {
        let s = simplex_algebra(1, Field::Rationals).structure;
        let rep = layer_check(&s).unwrap();
        assert!(rep.agree && rep.reedy);
        let dims: Vec<(usize, usize)> = rep.layers.iter().map(|d| (d.domain_plain, d.codomain)).collect();
        assert_eq!(dims, vec![(6, 6), (1, 1)]);
        let b = reedy_heredity_bottom(&s).unwrap();
        assert!(b.holds);
        assert_eq!(b.codomain, 6);
    }

    #[test]
    fn diamond_layers() {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let s = frame.s_space(&a);
        let r = ReedyStructure::new(a.clone(), frame, a.full_space(), s).unwrap();
        let rep = layer_check(&r).unwrap();
        let dims: Vec<usize> = rep.layers.iter().map(|d| d.codomain).collect();
        assert_eq!(dims, vec![4, 2, 2, 1]);
        assert!(rep.agree && rep.plain_ok);
        let b = reedy_heredity_bottom(&r).unwrap();
        assert_eq!((b.level, b.domain, b.codomain), (1, 4, 4));
    }

    #[test]
    fn upper_triangular_bottom_layer_fails() {
        let a = upper_triangular(2, Field::Rationals);
        let frame = IdempotentFrame::from_basis_labels(&a, &["E11", "E22"], &[0, 1]).unwrap();
        let s = frame.s_space(&a);
        let r = ReedyStructure::new(a, frame, s.clone(), s).unwrap();
        let rep = layer_check(&r).unwrap();
        assert_eq!((rep.layers[0].domain_plain, rep.layers[0].codomain), (1, 2));
        assert!(!rep.plain_ok && !rep.quotient_ok && !rep.reedy && rep.agree);
        assert!(reedy_heredity_bottom(&r).is_err());
    }

    #[test]
    fn layer_check_requires_directedness() {
        let (a, frame) = diamond(Field::Rationals, [4, 3, 1, 2]);
        let s = frame.s_space(&a);
        let r = ReedyStructure::new(a.clone(), frame, a.full_space(), s).unwrap();
        assert!(layer_check(&r).is_err());
    }
}
