use crate::algebra::{AlgSubspace, Algebra, ClosureKind, Mult};
use crate::error::{Error, Result};
use crate::linalg::{Scalar, Subspace};

/// The canonical surjection `A -> A/J`. Quotient coordinates are the
/// non-pivot coordinates of the residue modulo `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    ideal: Subspace,
    columns: Vec<usize>,
}

impl Projection {
    pub fn new(ideal: Subspace) -> Self {
        let columns = ideal.complement_columns();
        Projection { ideal, columns }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Ambient basis indices whose classes form the quotient basis.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn target_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.ideal.reduce(v);
        self.columns.iter().map(|&c| r[c].clone()).collect()
    }

    /// A preimage of a quotient vector.
    pub fn lift(&self, w: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.ideal.field().zeros(self.ideal.ambient());
        for (c, x) in self.columns.iter().zip(w) {
            out[*c] = x.clone();
        }
        out
    }

    /// Image of a subspace.
    pub fn image(&self, s: &Subspace) -> Subspace {
        let vecs = s.basis_rows().iter().map(|r| self.apply(r));
        Subspace::from_vectors(s.field(), self.target_dim(), vecs).expect("consistent")
    }
}

/// Inclusion of a subspace-based algebra (corner or subalgebra) into its
/// ambient algebra; basis element `s` maps to row `s` of the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    space: Subspace,
}

impl Embedding {
    pub fn new(space: Subspace) -> Self {
        Embedding { space }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn embed(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.space.combine(coords)
    }

    /// Coordinates of an ambient vector lying in the image.
    pub fn restrict(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.space.coords(v)
    }

    /// Preimage of an ambient subspace contained in the image.
    pub fn restrict_space(&self, s: &Subspace) -> Result<Subspace> {
        let mut vecs = Vec::with_capacity(s.dim());
        for r in s.basis_rows() {
            vecs.push(
                self.restrict(r)
                    .ok_or(Error::Precondition("subspace not in image".into()))?,
            );
        }
        Subspace::from_vectors(s.field(), self.space.dim(), vecs)
    }

    pub fn embed_space(&self, s: &Subspace) -> Subspace {
        let vecs = s.basis_rows().iter().map(|r| self.embed(r));
        Subspace::from_vectors(s.field(), self.space.ambient(), vecs).expect("consistent")
    }
}

/// The quotient algebra `A/J` and its projection.
pub fn quotient(a: &Algebra, j: &AlgSubspace) -> Result<(Algebra, Projection)> {
    if j.kind != ClosureKind::TwoSidedIdeal {
        return Err(Error::NotAnIdeal);
    }
    if j.space.ambient() != a.dim() {
        return Err(Error::AmbientMismatch(j.space.ambient(), a.dim()));
    }
    let proj = Projection::new(j.space.clone());
    let cols = proj.columns().to_vec();
    let labels: Vec<String> = cols.iter().map(|&c| a.label(c).to_string()).collect();
    let mut mult: Mult = Vec::with_capacity(cols.len());
    for &r in &cols {
        let mut row = Vec::with_capacity(cols.len());
        for &s in &cols {
            let mut prod = a.zero_vector();
            for (k, c) in a.product_terms(r, s) {
                prod[*k] = c.clone();
            }
            row.push(
                proj.apply(&prod)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
        }
        mult.push(row);
    }
    let unit = proj.apply(a.unit());
    let q = Algebra::new(a.field(), labels, mult, unit)?;
    Ok((q, proj))
}

/// The corner algebra `eAe` with unit `e`.
pub fn corner(a: &Algebra, e: &[Scalar]) -> Result<(Algebra, Embedding)> {
    if e.len() != a.dim() {
        return Err(Error::AmbientMismatch(e.len(), a.dim()));
    }
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent(a.format_element(e)));
    }
    let space = corner_space(a, e);
    a.restrict(&space, e)
}

/// The subspace `eAe`.
pub fn corner_space(a: &Algebra, e: &[Scalar]) -> Subspace {
    let ea: Vec<Vec<Scalar>> = (0..a.dim()).map(|k| a.mul_basis_right(e, k)).collect();
    let vecs = ea.into_iter().map(|x| a.mul(&x, e));
    Subspace::from_vectors(a.field(), a.dim(), vecs).expect("consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ideal_closure;
    use crate::constructors::{diamond, upper_triangular};
    use crate::linalg::{vec_add, Field};

    #[test]
    fn quotient_by_whole_algebra_is_zero() {
        let a = upper_triangular(2, Field::Rationals);
        let j = ideal_closure(&a, &[a.unit().to_vec()]);
        let (q, _) = quotient(&a, &j).unwrap();
        assert_eq!(q.dim(), 0);
        assert!(q.validate().is_valid());
    }

    #[test]
    fn upper_triangular_mod_first_row_is_ground_field() {
        let a = upper_triangular(2, Field::Rationals);
        let e = a.basis_vector(a.index_of("E11").unwrap());
        let j = ideal_closure(&a, &[e]);
        let (q, proj) = quotient(&a, &j).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.validate().is_valid());
        assert_eq!(q.mult()[0][0], vec![(0, Field::Rationals.one())]);
        assert_eq!(proj.apply(a.unit()), q.unit());
    }

    #[test]
    fn diamond_mod_source_vertex() {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let ea = frame.idempotents[frame.index_of("a").unwrap()].clone();
        let j = ideal_closure(&a, &[ea]);
        let (q, _) = quotient(&a, &j).unwrap();
        assert_eq!(q.dim(), 5);
        assert!(q.validate().is_valid());
        let mut labels = q.labels().to_vec();
        labels.sort();
        assert_eq!(labels, vec!["delta", "e_b", "e_c", "e_d", "gamma"]);
    }

    #[test]
    fn quotient_requires_ideal_flag() {
        let a = upper_triangular(2, Field::Rationals);
        let j = AlgSubspace::plain(a.zero_space());
        assert!(matches!(quotient(&a, &j), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn corners() {
        let a = upper_triangular(2, Field::Rationals);
        let (c, _) = corner(&a, a.unit()).unwrap();
        assert_eq!(c, a);
        let e = a.basis_vector(a.index_of("E11").unwrap());
        let (c, emb) = corner(&a, &e).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(emb.embed(c.unit()), e);

        let (d, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let i = |n: &str| frame.idempotents[frame.index_of(n).unwrap()].clone();
        let e = vec_add(&i("a"), &i("b"));
        let (c, _) = corner(&d, &e).unwrap();
        assert_eq!(c.dim(), 3);
        let mut labels = c.labels().to_vec();
        labels.sort();
        assert_eq!(labels, vec!["alpha", "e_a", "e_b"]);
        assert!(c.validate().is_valid());
    }

    #[test]
    fn corner_rejects_non_idempotent() {
        let a = upper_triangular(2, Field::Rationals);
        let e12 = a.basis_vector(a.index_of("E12").unwrap());
        assert!(matches!(corner(&a, &e12), Err(Error::NotIdempotent(_))));
    }
}
