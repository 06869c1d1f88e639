//! Builders for the standard example families.

mod dual;
mod quiver;
mod simplex;

pub use dual::{dual_extension, tensor_reedy};
pub use quiver::{build_quiver_algebra, QuiverAlgebra, QuiverPresentation, RelationTerm};
pub use simplex::{binomial, simplex_algebra, MonotoneMap, SimplexAlgebra};

use crate::algebra::{Algebra, IdempotentFrame};
use crate::linalg::Field;

/// Full matrix algebra `M_n` on the matrix units `E{i}{j}` (1-indexed).
pub fn matrix_algebra(n: usize, field: Field) -> Algebra {
    matrix_units(n, field, |_, _| true)
}

/// Upper triangular `n x n` matrices, spanned by `E{i}{j}` with `i <= j`.
pub fn upper_triangular(n: usize, field: Field) -> Algebra {
    matrix_units(n, field, |i, j| i <= j)
}

fn matrix_units(n: usize, field: Field, keep: impl Fn(usize, usize) -> bool) -> Algebra {
    let units: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| keep(i, j))
        .collect();
    let labels = units.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    let dim = units.len();
    let mut unit = field.zeros(dim);
    for (k, (i, j)) in units.iter().enumerate() {
        if i == j {
            unit[k] = field.one();
        }
    }
    Algebra::from_products(field, labels, unit, |p, q| {
        let ((i, j), (k, l)) = (units[p], units[q]);
        let mut v = field.zeros(dim);
        if j == k {
            let r = units.iter().position(|&u| u == (i, l)).expect("closed");
            v[r] = field.one();
        }
        v
    })
    .expect("matrix units")
}

/// `k x ... x k` with `n` factors, basis `e1, ..., en`.
pub fn split_semisimple(n: usize, field: Field) -> Algebra {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    Algebra::from_products(field, labels, vec![field.one(); n], |i, j| {
        let mut v = field.zeros(n);
        if i == j {
            v[i] = field.one();
        }
        v
    })
    .expect("diagonal")
}

/// Frame of the primitive diagonal matrix units `E11, ..., Enn`.
pub fn diagonal_frame(a: &Algebra, n: usize) -> IdempotentFrame {
    let labels: Vec<String> = (1..=n).map(|i| format!("E{i}{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    IdempotentFrame::from_basis_labels(a, &refs, &vec![0; n]).expect("matrix units present")
}

fn rel(coeff: &str, path: &[&str]) -> RelationTerm {
    RelationTerm {
        coeff: coeff.into(),
        path: path.iter().map(|s| s.to_string()).collect(),
    }
}

/// The commutative square `a -> b -> d`, `a -> c -> d`.
pub fn diamond_presentation() -> QuiverPresentation {
    let arrow = |s: &str, t: &str, l: &str| (s.to_string(), t.to_string(), l.to_string());
    QuiverPresentation {
        vertices: ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
        arrows: vec![
            arrow("a", "b", "alpha"),
            arrow("a", "c", "beta"),
            arrow("b", "d", "gamma"),
            arrow("c", "d", "delta"),
        ],
        relations: vec![vec![rel("1", &["alpha", "gamma"]), rel("-1", &["beta", "delta"])]],
        nilpotency_bound: 2,
    }
}

/// A single arrow `alpha: a -> b`.
pub fn a2_presentation() -> QuiverPresentation {
    QuiverPresentation {
        vertices: vec!["a".into(), "b".into()],
        arrows: vec![("a".into(), "b".into(), "alpha".into())],
        relations: vec![],
        nilpotency_bound: 1,
    }
}

/// The presentation of the opposite algebra: arrows and relation paths
/// reversed.
pub fn opposite_presentation(p: &QuiverPresentation) -> QuiverPresentation {
    QuiverPresentation {
        vertices: p.vertices.clone(),
        arrows: p
            .arrows
            .iter()
            .map(|(s, t, l)| (t.clone(), s.clone(), l.clone()))
            .collect(),
        relations: p
            .relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| RelationTerm {
                        coeff: t.coeff.clone(),
                        path: t.path.iter().rev().cloned().collect(),
                    })
                    .collect()
            })
            .collect(),
        nilpotency_bound: p.nilpotency_bound,
    }
}

/// The diamond algebra with degrees assigned to `a, b, c, d`.
pub fn diamond(field: Field, degrees: [usize; 4]) -> (Algebra, IdempotentFrame) {
    let q = build_quiver_algebra(&diamond_presentation(), field).expect("diamond presentation");
    let frame = q.frame.with_degrees(degrees.to_vec());
    (q.algebra, frame)
}
