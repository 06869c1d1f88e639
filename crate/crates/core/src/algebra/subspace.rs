use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureKind {
    Plain,
    Subalgebra,
    TwoSidedIdeal,
}

/// A subspace of an algebra together with the closure property it has been
/// verified to have.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgSubspace {
    pub space: Subspace,
    pub kind: ClosureKind,
}

impl AlgSubspace {
    pub fn plain(space: Subspace) -> Self {
        AlgSubspace {
            space,
            kind: ClosureKind::Plain,
        }
    }

    /// Accepts `space` as a unital subalgebra after checking closure.
    pub fn subalgebra(a: &Algebra, space: Subspace) -> Result<Self> {
        if space.ambient() != a.dim() {
            return Err(Error::AmbientMismatch(space.ambient(), a.dim()));
        }
        if !is_subalgebra(a, &space) {
            return Err(Error::NotASubalgebra);
        }
        Ok(AlgSubspace {
            space,
            kind: ClosureKind::Subalgebra,
        })
    }

    /// Accepts `space` as a two-sided ideal after checking closure.
    pub fn ideal(a: &Algebra, space: Subspace) -> Result<Self> {
        if space.ambient() != a.dim() {
            return Err(Error::AmbientMismatch(space.ambient(), a.dim()));
        }
        if !is_ideal(a, &space) {
            return Err(Error::NotAnIdeal);
        }
        Ok(AlgSubspace {
            space,
            kind: ClosureKind::TwoSidedIdeal,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn is_subalgebra(a: &Algebra, s: &Subspace) -> bool {
    if !s.contains(a.unit()) {
        return false;
    }
    let rows = s.basis_rows();
    rows.iter().all(|x| rows.iter().all(|y| s.contains(&a.mul(x, y))))
}

pub fn is_ideal(a: &Algebra, s: &Subspace) -> bool {
    s.basis_rows()
        .iter()
        .all(|x| (0..a.dim()).all(|k| s.contains(&a.mul_basis_left(k, x)) && s.contains(&a.mul_basis_right(x, k))))
}

/// Smallest unital subalgebra containing the generators.
pub fn subalgebra_closure(a: &Algebra, generators: &[Vec<Scalar>]) -> AlgSubspace {
    let mut b = EchelonBuilder::new(a.field(), a.dim());
    let mut list: Vec<Vec<Scalar>> = Vec::new();
    let push = |v: Vec<Scalar>, b: &mut EchelonBuilder, list: &mut Vec<Vec<Scalar>>| {
        if b.insert(v.clone()) {
            list.push(v);
        }
    };
    push(a.unit().to_vec(), &mut b, &mut list);
    for g in generators {
        push(g.clone(), &mut b, &mut list);
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            let p = a.mul(&list[i], &list[j]);
            push(p, &mut b, &mut list);
            if i != j {
                let q = a.mul(&list[j], &list[i]);
                push(q, &mut b, &mut list);
            }
        }
        i += 1;
    }
    AlgSubspace {
        space: b.finish(),
        kind: ClosureKind::Subalgebra,
    }
}

/// `A X`, the left ideal generated by `X`.
pub fn left_ideal_closure(a: &Algebra, generators: &[Vec<Scalar>]) -> Subspace {
    let mut b = EchelonBuilder::new(a.field(), a.dim());
    for g in generators {
        for k in 0..a.dim() {
            b.insert(a.mul_basis_left(k, g));
        }
    }
    b.finish()
}

/// `X A`, the right ideal generated by `X`.
pub fn right_ideal_closure(a: &Algebra, generators: &[Vec<Scalar>]) -> Subspace {
    let mut b = EchelonBuilder::new(a.field(), a.dim());
    for g in generators {
        for k in 0..a.dim() {
            b.insert(a.mul_basis_right(g, k));
        }
    }
    b.finish()
}

/// `A X A`, the two-sided ideal generated by `X`.
pub fn ideal_closure(a: &Algebra, generators: &[Vec<Scalar>]) -> AlgSubspace {
    let left = left_ideal_closure(a, generators);
    let space = right_ideal_closure(a, left.basis_rows());
    AlgSubspace {
        space,
        kind: ClosureKind::TwoSidedIdeal,
    }
}

/// Span of all products `x y` with `x` in `xs` and `y` in `ys`.
pub fn product_space(a: &Algebra, xs: &Subspace, ys: &Subspace) -> Subspace {
    let mut b = EchelonBuilder::new(a.field(), a.dim());
    for x in xs.basis_rows() {
        for y in ys.basis_rows() {
            b.insert(a.mul(x, y));
        }
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{diamond, matrix_algebra, upper_triangular};
    use crate::linalg::{vec_add, Field};

    #[test]
    fn empty_generators_give_scalars() {
        let m2 = matrix_algebra(2, Field::Rationals);
        let s = subalgebra_closure(&m2, &[]);
        assert_eq!(s.dim(), 1);
        assert!(s.space.contains(m2.unit()));
    }

    #[test]
    fn swap_matrix_generates_two_dims() {
        let m2 = matrix_algebra(2, Field::Rationals);
        // E12 + E21 squares to 1
        let i12 = m2.index_of("E12").unwrap();
        let i21 = m2.index_of("E21").unwrap();
        let g = vec_add(&m2.basis_vector(i12), &m2.basis_vector(i21));
        assert_eq!(m2.mul(&g, &g), m2.unit());
        assert_eq!(subalgebra_closure(&m2, &[g]).dim(), 2);
    }

    #[test]
    fn diamond_closures_count_paths() {
        let (a, _) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let gens = |labels: &[&str]| -> Vec<Vec<Scalar>> {
            labels.iter().map(|l| a.basis_vector(a.index_of(l).unwrap())).collect()
        };
        // alpha, beta share a source: no composable pair, so nothing new
        let s = subalgebra_closure(&a, &gens(&["e_a", "e_b", "e_c", "e_d", "alpha", "beta"]));
        assert_eq!(s.dim(), 6);
        // alpha then gamma compose to the length-two path
        let s = subalgebra_closure(&a, &gens(&["e_a", "e_b", "e_c", "e_d", "alpha", "gamma"]));
        assert_eq!(s.dim(), 7);
    }

    #[test]
    fn ideal_of_first_idempotent_in_upper_triangular() {
        let a = upper_triangular(2, Field::Rationals);
        let e = a.basis_vector(a.index_of("E11").unwrap());
        let j = ideal_closure(&a, &[e]);
        let expected = Subspace::from_vectors(
            a.field(),
            3,
            vec![
                a.basis_vector(a.index_of("E11").unwrap()),
                a.basis_vector(a.index_of("E12").unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(j.space, expected);
        assert!(is_ideal(&a, &j.space));
    }

    #[test]
    fn ideal_of_zero_and_empty_level() {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        assert_eq!(ideal_closure(&a, &[a.zero_vector()]).dim(), 0);
        assert_eq!(ideal_closure(&a, &[frame.epsilon(&a, 0)]).dim(), 0);
    }

    #[test]
    fn checked_constructors_reject() {
        let a = upper_triangular(2, Field::Rationals);
        let e12 = a.basis_vector(a.index_of("E12").unwrap());
        let line = Subspace::from_vectors(a.field(), 3, vec![e12]).unwrap();
        assert!(AlgSubspace::ideal(&a, line.clone()).is_ok());
        assert!(matches!(AlgSubspace::subalgebra(&a, line), Err(Error::NotASubalgebra)));
        let e11 = a.basis_vector(a.index_of("E11").unwrap());
        let line = Subspace::from_vectors(a.field(), 3, vec![e11]).unwrap();
        assert!(matches!(AlgSubspace::ideal(&a, line), Err(Error::NotAnIdeal)));
    }
}
