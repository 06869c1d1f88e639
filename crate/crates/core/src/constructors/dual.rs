//! Gluing an upward and a downward directed algebra over their common
//! semisimple part, and tensor products of Reedy structures.

use crate::algebra::{is_elementary, tensor_vectors, Algebra, IdempotentFrame, Mult};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Scalar, Subspace};
use crate::reedy::{blocks, directedness, verify_reedy, ReedyStructure};

/// A basis of an algebra adapted to the frame: each element lies in a single
/// block `e_target X e_source`, and diagonal blocks are spanned by the
/// idempotents themselves.
struct BlockBasis {
    vectors: Vec<Vec<Scalar>>,
    source: Vec<usize>,
    target: Vec<usize>,
    idempotent: Vec<bool>,
    labels: Vec<String>,
    /// Spans of the blocks, indexed `[target][source]`.
    spans: Vec<Vec<Subspace>>,
    /// Index of the first basis element of each block.
    offsets: Vec<Vec<usize>>,
}

impl BlockBasis {
    fn new(a: &Algebra, frame: &IdempotentFrame) -> Self {
        let n = frame.len();
        let spans = blocks(a, frame, &a.full_space());
        let mut bb = BlockBasis {
            vectors: Vec::new(),
            source: Vec::new(),
            target: Vec::new(),
            idempotent: Vec::new(),
            labels: Vec::new(),
            spans: Vec::new(),
            offsets: vec![vec![0; n]; n],
        };
        for j in 0..n {
            for i in 0..n {
                bb.offsets[j][i] = bb.vectors.len();
                let rows: Vec<Vec<Scalar>> = if i == j {
                    vec![frame.idempotents[i].clone()]
                } else {
                    spans[j][i].basis_rows().to_vec()
                };
                for v in rows {
                    bb.labels.push(a.format_element(&v));
                    bb.vectors.push(v);
                    bb.source.push(i);
                    bb.target.push(j);
                    bb.idempotent.push(i == j);
                }
            }
        }
        bb.spans = spans;
        bb
    }

    /// Coordinates of an element of block `(j, i)` in this basis.
    fn coords(&self, j: usize, i: usize, v: &[Scalar]) -> Vec<(usize, Scalar)> {
        if is_zero_vec(v) {
            return Vec::new();
        }
        let off = self.offsets[j][i];
        if i == j {
            // diagonal blocks are one-dimensional, spanned by e_i
            let e = &self.vectors[off];
            let p = e.iter().position(|c| !c.is_zero()).expect("nonzero idempotent");
            let c = &v[p] * &e[p].inv().expect("nonzero");
            return vec![(off, c)];
        }
        let c = self.spans[j][i].coords(v).expect("element lies in its block");
        c.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(s, x)| (off + s, x))
            .collect()
    }
}

fn check_directed(a: &Algebra, frame: &IdempotentFrame, raising: bool, name: &str) -> Result<()> {
    frame.validate(a)?;
    if !is_elementary(a, frame) {
        return Err(Error::Precondition(format!(
            "{name} is not elementary with respect to its frame"
        )));
    }
    let b = blocks(a, frame, &a.full_space());
    if let Some(d) = directedness(frame, &b, &frame.degrees, raising).iter().find(|d| !d.ok) {
        return Err(Error::Precondition(format!(
            "{name} is not {} directed at block {} -> {}",
            if raising { "upward" } else { "downward" },
            d.source,
            d.target
        )));
    }
    Ok(())
}

/// The algebra `sum_l A+ e_l (x) e_l A-` in which a product of a radical
/// element of `A-` followed by a radical element of `A+` vanishes, with its
/// Reedy structure. Frames are identified by idempotent names and must carry
/// the same degrees.
pub fn dual_extension(
    plus: &Algebra,
    plus_frame: &IdempotentFrame,
    minus: &Algebra,
    minus_frame: &IdempotentFrame,
) -> Result<ReedyStructure> {
    if plus.field() != minus.field() {
        return Err(Error::FieldMismatch(plus.field().name(), minus.field().name()));
    }
    // reorder the minus frame to match the plus frame
    let mut perm = Vec::with_capacity(plus_frame.len());
    for (name, deg) in plus_frame.names.iter().zip(&plus_frame.degrees) {
        let k = minus_frame
            .index_of(name)
            .ok_or_else(|| Error::Precondition(format!("idempotent {name} missing from the second frame")))?;
        if minus_frame.degrees[k] != *deg {
            return Err(Error::Precondition(format!(
                "degrees of {name} differ between the frames"
            )));
        }
        perm.push(k);
    }
    if minus_frame.len() != plus_frame.len() {
        return Err(Error::Precondition("frames have different sizes".into()));
    }
    let minus_frame = IdempotentFrame::new(
        plus_frame.names.clone(),
        perm.iter().map(|&k| minus_frame.idempotents[k].clone()).collect(),
        plus_frame.degrees.clone(),
    )?;
    check_directed(plus, plus_frame, true, "A+")?;
    check_directed(minus, &minus_frame, false, "A-")?;

    let f = plus.field();
    let n = plus_frame.len();
    let pb = BlockBasis::new(plus, plus_frame);
    let mb = BlockBasis::new(minus, &minus_frame);

    // basis of A: pairs (p, q) with p in A+ e_l and q in e_l A-
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for p in 0..pb.vectors.len() {
        for q in 0..mb.vectors.len() {
            if pb.source[p] == mb.target[q] {
                pairs.push((p, q));
            }
        }
    }
    let index: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &pq)| (pq, k)).collect();
    let short: Vec<String> = pairs
        .iter()
        .map(|&(p, q)| match (pb.idempotent[p], mb.idempotent[q]) {
            (true, _) => mb.labels[q].clone(),
            (false, true) => pb.labels[p].clone(),
            _ => format!("{}⊗{}", pb.labels[p], mb.labels[q]),
        })
        .collect();
    let unique = short.iter().collect::<std::collections::HashSet<_>>().len() == short.len();
    let labels = if unique {
        short
    } else {
        pairs
            .iter()
            .map(|&(p, q)| format!("{}⊗{}", pb.labels[p], mb.labels[q]))
            .collect()
    };

    let d = pairs.len();
    let mut mult: Mult = vec![vec![Vec::new(); d]; d];
    for (r, &(p, q)) in pairs.iter().enumerate() {
        for (s, &(p2, q2)) in pairs.iter().enumerate() {
            let mut terms: Vec<(usize, Scalar)> = Vec::new();
            if mb.idempotent[q] {
                // (p (x) e_l)(p2 (x) q2) = p p2 (x) q2
                if pb.target[p2] == mb.source[q] {
                    let (j, i) = (pb.target[p], pb.source[p2]);
                    let prod = plus.mul(&pb.vectors[p], &pb.vectors[p2]);
                    for (k, c) in pb.coords(j, i, &prod) {
                        terms.push((index[&(k, q2)], c));
                    }
                }
            } else if pb.idempotent[p2] {
                // (p (x) q)(e_m (x) q2) = p (x) q q2
                if mb.source[q] == pb.target[p2] {
                    let (j, i) = (mb.target[q], mb.source[q2]);
                    let prod = minus.mul(&mb.vectors[q], &mb.vectors[q2]);
                    for (k, c) in mb.coords(j, i, &prod) {
                        terms.push((index[&(p, k)], c));
                    }
                }
            }
            mult[r][s] = terms;
        }
    }
    let diag: Vec<usize> = (0..n).map(|l| index[&(pb.offsets[l][l], mb.offsets[l][l])]).collect();
    let mut unit = f.zeros(d);
    for &k in &diag {
        unit[k] = f.one();
    }
    let algebra = Algebra::new(f, labels, mult, unit)?;
    let v = algebra.validate();
    if !v.is_valid() {
        return Err(Error::Precondition(format!(
            "glued product is not associative and unital ({} violations)",
            v.associativity.len() + v.left_unit.len() + v.right_unit.len()
        )));
    }
    let idempotents = diag.iter().map(|&k| f.unit_vector(d, k)).collect();
    let frame = IdempotentFrame::new(plus_frame.names.clone(), idempotents, plus_frame.degrees.clone())?;
    let aplus = Subspace::from_vectors(
        f,
        d,
        pairs
            .iter()
            .enumerate()
            .filter(|(_, &(_, q))| mb.idempotent[q])
            .map(|(k, _)| f.unit_vector(d, k)),
    )?;
    let aminus = Subspace::from_vectors(
        f,
        d,
        pairs
            .iter()
            .enumerate()
            .filter(|(_, &(p, _))| pb.idempotent[p])
            .map(|(k, _)| f.unit_vector(d, k)),
    )?;
    let r = ReedyStructure::new(algebra, frame, aplus, aminus)?;
    if !verify_reedy(&r).overall {
        return Err(Error::Precondition("glued algebra failed Reedy verification".into()));
    }
    Ok(r)
}

/// `(A (x) B, A+ (x) B+, A- (x) B-)` with product idempotents and summed
/// degrees. Both inputs must verify.
pub fn tensor_reedy(r1: &ReedyStructure, r2: &ReedyStructure) -> Result<ReedyStructure> {
    for (k, r) in [r1, r2].iter().enumerate() {
        if !verify_reedy(r).overall {
            return Err(Error::Precondition(format!(
                "factor {} is not a verified Reedy structure",
                k + 1
            )));
        }
    }
    let algebra = r1.algebra.tensor(&r2.algebra)?;
    let (f, d) = (algebra.field(), algebra.dim());
    let mut names = Vec::new();
    let mut idempotents = Vec::new();
    let mut degrees = Vec::new();
    for i in 0..r1.frame.len() {
        for j in 0..r2.frame.len() {
            names.push(format!("{}⊗{}", r1.frame.names[i], r2.frame.names[j]));
            idempotents.push(tensor_vectors(&r1.frame.idempotents[i], &r2.frame.idempotents[j]));
            degrees.push(r1.frame.degrees[i] + r2.frame.degrees[j]);
        }
    }
    let frame = IdempotentFrame::new(names, idempotents, degrees)?;
    let product = |x: &Subspace, y: &Subspace| -> Result<Subspace> {
        let mut v = Vec::with_capacity(x.dim() * y.dim());
        for p in x.basis_rows() {
            for q in y.basis_rows() {
                v.push(tensor_vectors(p, q));
            }
        }
        Subspace::from_vectors(f, d, v)
    };
    let aplus = product(&r1.aplus.space, &r2.aplus.space)?;
    let aminus = product(&r1.aminus.space, &r2.aminus.space)?;
    ReedyStructure::new(algebra, frame, aplus, aminus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{
        a2_presentation, build_quiver_algebra, simplex_algebra, split_semisimple, QuiverPresentation,
    };
    use crate::linalg::Field;

    fn a2(deg: [usize; 2], reversed: bool) -> (Algebra, IdempotentFrame) {
        let mut p = a2_presentation();
        if reversed {
            p = QuiverPresentation {
                arrows: vec![("b".into(), "a".into(), "beta".into())],
                ..p
            };
        }
        let q = build_quiver_algebra(&p, Field::Rationals).unwrap();
        (q.algebra, q.frame.with_degrees(deg.to_vec()))
    }

    fn semisimple_ab(deg: [usize; 2]) -> (Algebra, IdempotentFrame) {
        let s = split_semisimple(2, Field::Rationals);
        let frame = IdempotentFrame::new(
            vec!["a".into(), "b".into()],
            vec![s.basis_vector(0), s.basis_vector(1)],
            deg.to_vec(),
        )
        .unwrap();
        (s, frame)
    }

    #[test]
    fn semisimple_with_semisimple() {
        let (s, f) = semisimple_ab([0, 1]);
        let r = dual_extension(&s, &f, &s, &f).unwrap();
        assert_eq!(r.algebra.dim(), 2);
    }

    #[test]
    fn directed_with_semisimple_recovers_it() {
        let (p, pf) = a2([0, 1], false);
        let (s, sf) = semisimple_ab([0, 1]);
        let r = dual_extension(&p, &pf, &s, &sf).unwrap();
        assert_eq!(r.algebra.dim(), 3);
        assert_eq!(r.aplus.dim(), 3);
        assert_eq!(r.aminus.dim(), 2);
    }

    #[test]
    fn arrow_and_reverse_arrow() {
        let (p, pf) = a2([0, 1], false);
        let (m, mf) = a2([0, 1], true);
        let r = dual_extension(&p, &pf, &m, &mf).unwrap();
        assert_eq!(r.algebra.dim(), 5);
        let a = &r.algebra;
        // beta then alpha survives, alpha then beta vanishes
        let alpha = a.basis_vector(a.index_of("alpha").unwrap());
        let beta = a.basis_vector(a.index_of("beta").unwrap());
        assert!(is_zero_vec(&a.mul(&beta, &alpha)));
        let ab = a.mul(&alpha, &beta);
        assert_eq!(a.format_element(&ab), "alpha⊗beta");
    }

    #[test]
    fn wrong_direction_is_rejected() {
        let (p, pf) = a2([1, 0], false);
        let (s, sf) = semisimple_ab([1, 0]);
        assert!(matches!(dual_extension(&p, &pf, &s, &sf), Err(Error::Precondition(_))));
    }

    #[test]
    fn tensor_of_simplex_truncations() {
        let s1 = simplex_algebra(1, Field::Rationals).structure;
        let t = tensor_reedy(&s1, &s1).unwrap();
        assert_eq!(t.algebra.dim(), 49);
        assert!(verify_reedy(&t).overall);
    }
}
