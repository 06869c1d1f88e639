//! A fixed collection of candidate Reedy structures over the rationals,
//! positive and negative, used by the test suites and the command line.

use crate::algebra::{Algebra, IdempotentFrame};
use crate::constructors::{
    a2_presentation, build_quiver_algebra, diagonal_frame, diamond, dual_extension, matrix_algebra,
    opposite_presentation, simplex_algebra, tensor_reedy, upper_triangular,
};
use crate::linalg::{Field, Subspace};
use crate::reedy::ReedyStructure;

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub name: String,
    pub structure: ReedyStructure,
    pub expect_reedy: bool,
}

fn item(name: &str, structure: ReedyStructure, expect_reedy: bool) -> CorpusItem {
    CorpusItem {
        name: name.to_string(),
        structure,
        expect_reedy,
    }
}

fn structure(a: &Algebra, frame: &IdempotentFrame, plus: Subspace, minus: Subspace) -> ReedyStructure {
    ReedyStructure::new(a.clone(), frame.clone(), plus, minus).expect("corpus structure")
}

fn span(a: &Algebra, labels: &[&str]) -> Subspace {
    let v = labels.iter().map(|l| a.basis_vector(a.index_of(l).expect("label")));
    Subspace::from_vectors(a.field(), a.dim(), v).expect("labels")
}

/// The diamond with degrees `deg` and `A+ = A, A- = S` (or swapped).
pub fn diamond_structure(deg: [usize; 4], plus_is_algebra: bool) -> ReedyStructure {
    let (a, frame) = diamond(Field::Rationals, deg);
    let s = frame.s_space(&a);
    let full = a.full_space();
    if plus_is_algebra {
        structure(&a, &frame, full, s)
    } else {
        structure(&a, &frame, s, full)
    }
}

/// The arrow `a -> b` glued with the reverse arrow `b -> a`.
pub fn a2_dual_extension() -> ReedyStructure {
    let p = build_quiver_algebra(&a2_presentation(), Field::Rationals).expect("a2");
    let mut op = opposite_presentation(&a2_presentation());
    op.arrows[0].2 = "beta".into();
    let m = build_quiver_algebra(&op, Field::Rationals).expect("reverse a2");
    let pf = p.frame.with_degrees(vec![0, 1]);
    let mf = m.frame.with_degrees(vec![0, 1]);
    dual_extension(&p.algebra, &pf, &m.algebra, &mf).expect("dual extension")
}

/// Sixteen structures; the expected verdicts were derived by hand.
pub fn standard_corpus() -> Vec<CorpusItem> {
    let q = Field::Rationals;
    let mut out = Vec::new();

    let k = Algebra::ground(q);
    let kf = IdempotentFrame::unit(&k);
    out.push(item(
        "ground-field",
        structure(&k, &kf, k.full_space(), k.full_space()),
        true,
    ));

    out.push(item("diamond-1234", diamond_structure([1, 2, 3, 4], true), true));
    out.push(item("diamond-1223", diamond_structure([1, 2, 2, 3], true), true));
    out.push(item("diamond-4231", diamond_structure([4, 2, 3, 1], false), true));
    out.push(item("diamond-4312-plus", diamond_structure([4, 3, 1, 2], true), false));
    out.push(item(
        "diamond-4312-minus",
        diamond_structure([4, 3, 1, 2], false),
        false,
    ));

    let ut = upper_triangular(2, q);
    let utf = IdempotentFrame::from_basis_labels(&ut, &["E11", "E22"], &[0, 1]).expect("frame");
    let s = utf.s_space(&ut);
    out.push(item(
        "uppertri-frame-frame",
        structure(&ut, &utf, s.clone(), s.clone()),
        false,
    ));
    out.push(item(
        "uppertri-frame-algebra",
        structure(&ut, &utf, s, ut.full_space()),
        true,
    ));

    let m2 = matrix_algebra(2, q);
    let m2f = diagonal_frame(&m2, 2).with_degrees(vec![0, 1]);
    let lower = span(&m2, &["E11", "E22", "E21"]);
    let upper = span(&m2, &["E11", "E22", "E12"]);
    out.push(item("m2-lower-upper", structure(&m2, &m2f, lower, upper), false));

    let s1 = simplex_algebra(1, q).structure;
    out.push(item("simplex-1", s1.clone(), true));
    out.push(item("simplex-1-swapped", s1.swapped(), false));
    out.push(item("simplex-2", simplex_algebra(2, q).structure, true));

    out.push(item("a2-dual-extension", a2_dual_extension(), true));

    let d = diamond_structure([1, 2, 3, 4], true);
    out.push(item(
        "diamond-tensor-simplex-1",
        tensor_reedy(&d, &s1).expect("tensor"),
        true,
    ));
    out.push(item(
        "simplex-1-tensor-simplex-1",
        tensor_reedy(&s1, &s1).expect("tensor"),
        true,
    ));
    out.push(item(
        "a2-dual-tensor-uppertri",
        tensor_reedy(&a2_dual_extension(), &out[7].structure).expect("tensor"),
        true,
    ));
    out
}
