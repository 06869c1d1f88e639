//! Finite-dimensional associative unital algebras given by structure
//! constants.
//!
//! Basis elements multiply as `b_i * b_j = sum_k c[i][j][k] b_k`. For path
//! algebras the convention is that `p * q` means "first `q`, then `p`", so
//! `e_j A e_i` is spanned by the paths from `i` to `j`.

mod frame;
mod module;
mod quotient;
mod radical;
mod subspace;
mod tensor;

pub use frame::{normalize_degrees, IdempotentFrame};
pub use module::{ModuleRep, Side};
pub use quotient::{corner, corner_space, quotient, Embedding, Projection};
pub use radical::{is_elementary, is_local_one_dim_top, radical, radical_is_nilpotent};
pub use subspace::{
    ideal_closure, is_ideal, is_subalgebra, left_ideal_closure, product_space, right_ideal_closure, subalgebra_closure,
    AlgSubspace, ClosureKind,
};
pub use tensor::{
    induce_module, is_projective_module, tensor_dim_over_corner, tensor_dim_over_corner_naive,
    tensor_dim_over_corner_parts,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

/// Sparse structure constants: `mult[i][j]` lists the nonzero `(k, c)` with
/// `b_i b_j = sum c b_k`, sorted by `k`.
pub type Mult = Vec<Vec<Vec<(usize, Scalar)>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    mult: Mult,
    unit: Vec<Scalar>,
}

/// Outcome of [`Algebra::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub associativity: Vec<(usize, usize, usize)>,
    pub left_unit: Vec<usize>,
    pub right_unit: Vec<usize>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.associativity.is_empty() && self.left_unit.is_empty() && self.right_unit.is_empty()
    }
}

impl Algebra {
    /// Assembles an algebra, normalizing the sparse table. Does not check the
    /// algebra axioms; see [`Algebra::validate`].
    pub fn new(field: Field, labels: Vec<String>, mut mult: Mult, unit: Vec<Scalar>) -> Result<Algebra> {
        let n = labels.len();
        if unit.len() != n {
            return Err(Error::AmbientMismatch(unit.len(), n));
        }
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(Error::Parse(format!("multiplication table is not {n}x{n}")));
        }
        for s in &unit {
            if s.field() != field {
                return Err(Error::FieldMismatch(s.field().name(), field.name()));
            }
        }
        for row in mult.iter_mut() {
            for entry in row.iter_mut() {
                for (k, c) in entry.iter() {
                    if *k >= n {
                        return Err(Error::Parse(format!("basis index {k} out of range")));
                    }
                    if c.field() != field {
                        return Err(Error::FieldMismatch(c.field().name(), field.name()));
                    }
                }
                entry.sort_by_key(|(k, _)| *k);
                let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(entry.len());
                for (k, c) in entry.drain(..) {
                    match merged.last_mut() {
                        Some((lk, lc)) if *lk == k => lc.add_assign_ref(&c),
                        _ => merged.push((k, c)),
                    }
                }
                merged.retain(|(_, c)| !c.is_zero());
                *entry = merged;
            }
        }
        Ok(Algebra {
            field,
            labels,
            mult,
            unit,
        })
    }

    /// Builds an algebra from a closure computing basis products as dense
    /// coordinate vectors.
    pub fn from_products<F>(field: Field, labels: Vec<String>, unit: Vec<Scalar>, f: F) -> Result<Algebra>
    where
        F: Fn(usize, usize) -> Vec<Scalar> + Sync,
    {
        let n = labels.len();
        let mult: Mult = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| f(i, j).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
                    .collect()
            })
            .collect();
        Algebra::new(field, labels, mult, unit)
    }

    /// The zero algebra, in which `1 = 0`.
    pub fn zero(field: Field) -> Algebra {
        Algebra {
            field,
            labels: Vec::new(),
            mult: Vec::new(),
            unit: Vec::new(),
        }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra {
            field,
            labels: vec!["1".into()],
            mult: vec![vec![vec![(0, field.one())]]],
            unit: vec![field.one()],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mult(&self) -> &Mult {
        &self.mult
    }

    /// Nonzero structure constants of `b_i b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.field.unit_vector(self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        self.field.zeros(self.dim())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// Product of two elements in coordinates.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let terms = &self.mult[i][j];
                if terms.is_empty() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in terms {
                    out[*k].add_mul_assign(&s, c);
                }
            }
        }
        out
    }

    /// `x * b_j`.
    pub fn mul_basis_right(&self, x: &[Scalar], j: usize) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in &self.mult[i][j] {
                out[*k].add_mul_assign(xi, c);
            }
        }
        out
    }

    /// `b_i * y`.
    pub fn mul_basis_left(&self, i: usize, y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in &self.mult[i][j] {
                out[*k].add_mul_assign(yj, c);
            }
        }
        out
    }

    /// Matrix of `y -> x y`, acting on column vectors.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = self.mul_basis_right(x, j);
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of `y -> y x`, acting on column vectors.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            let col = self.mul_basis_left(j, x);
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// `x S y = span { x s y : s in S }`.
    pub fn sandwich(&self, x: &[Scalar], s: &Subspace, y: &[Scalar]) -> Subspace {
        let mut b = crate::linalg::EchelonBuilder::new(self.field, self.dim());
        for v in s.basis_rows() {
            b.insert(self.mul(&self.mul(x, v), y));
        }
        b.finish()
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    /// Checks associativity on all basis triples and both unit laws.
    pub fn validate(&self) -> Validation {
        let n = self.dim();
        let associativity: Vec<(usize, usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut bad = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        // (b_i b_j) b_k versus b_i (b_j b_k)
                        let mut lhs = self.zero_vector();
                        for (m, c) in &self.mult[i][j] {
                            for (t, d) in &self.mult[*m][k] {
                                lhs[*t].add_mul_assign(c, d);
                            }
                        }
                        let mut rhs = self.zero_vector();
                        for (m, c) in &self.mult[j][k] {
                            for (t, d) in &self.mult[i][*m] {
                                rhs[*t].add_mul_assign(c, d);
                            }
                        }
                        if lhs != rhs {
                            bad.push((i, j, k));
                        }
                    }
                }
                bad
            })
            .collect();
        let mut left_unit = Vec::new();
        let mut right_unit = Vec::new();
        for i in 0..n {
            let b = self.basis_vector(i);
            if self.mul(&self.unit, &b) != b {
                left_unit.push(i);
            }
            if self.mul(&b, &self.unit) != b {
                right_unit.push(i);
            }
        }
        Validation {
            associativity,
            left_unit,
            right_unit,
        }
    }

    /// `A (x) B` with basis `a_i (x) b_j` at index `i * dim B + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        let (n, m) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let mut mult: Mult = vec![vec![Vec::new(); n * m]; n * m];
        for i in 0..n {
            for j in 0..m {
                for k in 0..n {
                    if self.mult[i][k].is_empty() {
                        continue;
                    }
                    for l in 0..m {
                        let entry = &mut mult[i * m + j][k * m + l];
                        for (s, c) in &self.mult[i][k] {
                            for (t, d) in &other.mult[j][l] {
                                entry.push((s * m + t, c * d));
                            }
                        }
                    }
                }
            }
        }
        let unit = tensor_vectors(&self.unit, &other.unit);
        Algebra::new(self.field, labels, mult, unit)
    }

    /// The algebra structure on a subspace closed under multiplication, with
    /// the given unit (which must lie in the subspace and act as identity
    /// there). Basis elements are the canonical basis rows of `space`.
    pub fn restrict(&self, space: &Subspace, unit: &[Scalar]) -> Result<(Algebra, Embedding)> {
        let rows = space.basis_rows();
        let d = rows.len();
        let unit_coords = space.coords(unit).ok_or(Error::NotASubalgebra)?;
        let labels: Vec<String> = rows
            .iter()
            .enumerate()
            .map(|(s, r)| self.describe(r).unwrap_or_else(|| format!("v{s}")))
            .collect();
        let products: Vec<Vec<Option<Vec<Scalar>>>> = (0..d)
            .into_par_iter()
            .map(|s| (0..d).map(|t| space.coords(&self.mul(&rows[s], &rows[t]))).collect())
            .collect();
        let mut mult: Mult = Vec::with_capacity(d);
        for row in products {
            let mut out = Vec::with_capacity(d);
            for p in row {
                let p = p.ok_or(Error::NotASubalgebra)?;
                out.push(p.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
            mult.push(out);
        }
        let alg = Algebra::new(self.field, labels, mult, unit_coords)?;
        Ok((alg, Embedding::new(space.clone())))
    }

    /// Label of `v` if it is (a scalar multiple of) a single basis element.
    fn describe(&self, v: &[Scalar]) -> Option<String> {
        let mut nz = v.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (i, c) = nz.next()?;
        if nz.next().is_some() {
            return None;
        }
        if c.is_one() {
            Some(self.labels[i].clone())
        } else {
            Some(format!("{c}*{}", self.labels[i]))
        }
    }

    /// Element `sum coeffs[i] b_i` written with labels, for reports.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("{c}*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Renames basis elements.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim() {
            return Err(Error::AmbientMismatch(labels.len(), self.dim()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mult: Mult = (0..n)
            .map(|i| (0..n).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        Algebra {
            field: self.field,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
        }
    }
}

/// Coordinates of `x (x) y` in the tensor basis.
pub fn tensor_vectors(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_algebra, upper_triangular};

    #[test]
    fn matrix_algebra_is_valid() {
        let m2 = matrix_algebra(2, Field::Rationals);
        assert!(m2.validate().is_valid());
    }

    #[test]
    fn perturbed_constants_break_associativity() {
        let m2 = matrix_algebra(2, Field::Rationals);
        let mut mult = m2.mult().clone();
        // E11 * E11 = 2 E11
        mult[0][0] = vec![(0, Field::Rationals.from_i64(2))];
        let bad = Algebra::new(Field::Rationals, m2.labels().to_vec(), mult, m2.unit().to_vec()).unwrap();
        let v = bad.validate();
        assert!(v.associativity.contains(&(0, 0, 1)));
        assert!(!v.is_valid());
    }

    #[test]
    fn tensor_with_ground_field() {
        let q = Field::Rationals;
        let a = upper_triangular(2, q);
        let t = Algebra::ground(q).tensor(&a).unwrap();
        assert_eq!(t.dim(), a.dim());
        assert_eq!(t.mult(), a.mult());
        assert_eq!(t.unit(), a.unit());
    }

    #[test]
    fn tensor_of_split_semisimple() {
        let q = Field::Rationals;
        let kk = crate::constructors::split_semisimple(2, q);
        let t = kk.tensor(&kk).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.validate().is_valid());
        assert_eq!(radical(&t).space.dim(), 0);
    }

    #[test]
    fn tensor_field_mismatch() {
        let a = Algebra::ground(Field::Rationals);
        let b = Algebra::ground(Field::Prime(2));
        assert!(matches!(a.tensor(&b), Err(Error::FieldMismatch(..))));
    }
}
