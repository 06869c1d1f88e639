//! Subspaces of `k^n` in canonical reduced row-echelon form.
//!
//! Two subspaces compare equal iff their RREF bases are identical, so every
//! higher layer may use `==` for subspace equality.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::field::{Field, Scalar};
use crate::linalg::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| field.unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors<I>(field: Field, ambient: usize, vectors: I) -> Result<Subspace>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut b = EchelonBuilder::new(field, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::AmbientMismatch(v.len(), ambient));
            }
            b.insert(v);
        }
        Ok(b.finish())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// The canonical RREF basis.
    pub fn basis_rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.rows).expect("consistent")
    }

    /// Residue of `v` modulo this subspace; zero exactly on pivot columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (k, x) in row.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    out[k].sub_mul_assign(&f, x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` with respect to the RREF basis, if `v` lies in the
    /// subspace.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Coordinates of a member, without the membership check.
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = self.field.zeros(self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    o.add_mul_assign(c, x);
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut b = EchelonBuilder::from_subspace(self);
        for r in &other.rows {
            b.insert(r.clone());
        }
        Ok(b.finish())
    }

    /// Intersection by the Zassenhaus algorithm.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut b = EchelonBuilder::new(self.field, 2 * n);
        for u in &self.rows {
            let mut row = u.clone();
            row.extend(u.iter().cloned());
            b.insert(row);
        }
        for v in &other.rows {
            let mut row = v.clone();
            row.extend(self.field.zeros(n));
            b.insert(row);
        }
        let joint = b.finish();
        let vecs = joint
            .rows
            .iter()
            .zip(&joint.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r[n..].to_vec());
        Subspace::from_vectors(self.field, n, vecs)
    }

    /// Columns that carry no pivot; the corresponding unit vectors span a
    /// complement, and [`Subspace::reduce`] lands in that complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        Ok(())
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then(self.ambient.cmp(&other.ambient))
            .then(self.rows.len().cmp(&other.rows.len()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

/// Incremental echelon basis: rows keep their insertion order, each is zero
/// at the pivots of the rows inserted before it.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(field: Field, ambient: usize) -> Self {
        EchelonBuilder {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBuilder {
            field: s.field,
            ambient: s.ambient,
            rows: s.rows.clone(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (k, x) in row.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    v[k].sub_mul_assign(&f, x);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        if !inv.is_one() {
            for x in v.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn finish(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vec<Scalar>> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        // back substitution: clear each pivot column in the rows above it
        for i in (0..rows.len()).rev() {
            let p = pivots[i];
            let (head, tail) = rows.split_at_mut(i);
            let pivot_row = &tail[0];
            for r in head.iter_mut() {
                if r[p].is_zero() {
                    continue;
                }
                let f = r[p].clone();
                for (k, x) in pivot_row.iter().enumerate().skip(p) {
                    if !x.is_zero() {
                        r[k].sub_mul_assign(&f, x);
                    }
                }
            }
        }
        Subspace {
            field: self.field,
            ambient: self.ambient,
            rows,
            pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn vecs(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn sum_of_coordinate_lines() {
        let e1 = Subspace::from_vectors(q(), 3, vecs(q(), &[&[1, 0, 0]])).unwrap();
        let e2 = Subspace::from_vectors(q(), 3, vecs(q(), &[&[0, 1, 0]])).unwrap();
        let s = e1.sum(&e2).unwrap();
        assert_eq!(
            s,
            Subspace::from_vectors(q(), 3, vecs(q(), &[&[1, 0, 0], &[0, 1, 0]])).unwrap()
        );
        assert_eq!(e1.sum(&e1).unwrap(), e1);
    }

    #[test]
    fn sum_of_diagonals_is_plane() {
        let a = Subspace::from_vectors(q(), 2, vecs(q(), &[&[1, 1]])).unwrap();
        let b = Subspace::from_vectors(q(), 2, vecs(q(), &[&[1, -1]])).unwrap();
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn intersect_planes() {
        let a = Subspace::from_vectors(q(), 3, vecs(q(), &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        let b = Subspace::from_vectors(q(), 3, vecs(q(), &[&[0, 1, 0], &[0, 0, 1]])).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::from_vectors(q(), 3, vecs(q(), &[&[0, 1, 0]])).unwrap());
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(q(), 2);
        let b = Subspace::zero(q(), 3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch(2, 3))));
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn membership_by_solving() {
        // (3,5) = 3*(1,1) + 1*(0,2)
        let s = Subspace::from_vectors(q(), 2, vecs(q(), &[&[1, 1], &[0, 2]])).unwrap();
        assert!(s.contains(&vecs(q(), &[&[3, 5]])[0]));
        let e1 = Subspace::from_vectors(q(), 2, vecs(q(), &[&[1, 0]])).unwrap();
        assert!(e1.contains(&vecs(q(), &[&[1, 0]])[0]));
        assert!(!e1.contains(&vecs(q(), &[&[0, 1]])[0]));
    }

    #[test]
    fn coordinates_recombine() {
        let s = Subspace::from_vectors(q(), 3, vecs(q(), &[&[1, 2, 0], &[0, 1, 1]])).unwrap();
        let v = vecs(q(), &[&[2, 7, 3]])[0].clone();
        let c = s.coords(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(s.coords(&vecs(q(), &[&[0, 0, 1]])[0]).is_none());
    }
}
