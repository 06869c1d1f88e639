use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional module given by one action matrix per basis element
/// of the acting algebra. Matrices act on column vectors for both sides, so
/// for right modules `act(xy) = act(y) act(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    field: Field,
    side: Side,
    dim: usize,
    actions: Vec<Matrix>,
}

impl ModuleRep {
    pub fn new(field: Field, side: Side, dim: usize, actions: Vec<Matrix>) -> Result<Self> {
        for m in &actions {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::AmbientMismatch(m.rows(), dim));
            }
        }
        Ok(ModuleRep {
            field,
            side,
            dim,
            actions,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Action matrix of an element given in coordinates of the acting
    /// algebra.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.actions) {
            if !c.is_zero() {
                m.add_scaled(a, c);
            }
        }
        m
    }

    /// The subquotient `top / bottom` of the regular module, where both are
    /// one-sided ideals of `a` on the given side and `bottom` lies in `top`.
    pub fn regular_subquotient(a: &Algebra, side: Side, top: &Subspace, bottom: &Subspace) -> Result<Self> {
        let reps = Subspace::from_vectors(a.field(), a.dim(), top.basis_rows().iter().map(|r| bottom.reduce(r)))?;
        let d = reps.dim();
        let mut actions = Vec::with_capacity(a.dim());
        for k in 0..a.dim() {
            let mut m = Matrix::zeros(a.field(), d, d);
            for (s, v) in reps.basis_rows().iter().enumerate() {
                let w = match side {
                    Side::Left => a.mul_basis_left(k, v),
                    Side::Right => a.mul_basis_right(v, k),
                };
                if !top.contains(&w) {
                    return Err(Error::Precondition("top space is not a one-sided ideal".into()));
                }
                let r = bottom.reduce(&w);
                let coords = reps
                    .coords(&r)
                    .ok_or_else(|| Error::Precondition("bottom space is not a one-sided ideal".into()))?;
                for (t, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        m.set(t, s, c);
                    }
                }
            }
            actions.push(m);
        }
        ModuleRep::new(a.field(), side, d, actions)
    }

    /// A one-sided ideal of `a` as a module.
    pub fn regular_submodule(a: &Algebra, side: Side, space: &Subspace) -> Result<Self> {
        ModuleRep::regular_subquotient(a, side, space, &a.zero_space())
    }

    /// Restriction along elements of the acting algebra: the new action of
    /// basis element `t` is `act(elems[t])`.
    pub fn restrict(&self, elems: &[Vec<Scalar>]) -> ModuleRep {
        ModuleRep {
            field: self.field,
            side: self.side,
            dim: self.dim,
            actions: elems.iter().map(|e| self.act(e)).collect(),
        }
    }

    /// Checks that the unit acts as identity and the action is multiplicative.
    pub fn validate(&self, a: &Algebra) -> bool {
        if self.actions.len() != a.dim() {
            return false;
        }
        if self.act(a.unit()) != Matrix::identity(self.field, self.dim) {
            return false;
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = match self.side {
                    Side::Left => self.actions[i].mul(&self.actions[j]),
                    Side::Right => self.actions[j].mul(&self.actions[i]),
                }
                .expect("square");
                let mut rhs = Matrix::zeros(self.field, self.dim, self.dim);
                for (k, c) in a.product_terms(i, j) {
                    rhs.add_scaled(&self.actions[*k], c);
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Submodule generated by the given elements under the acting elements.
    pub fn span_under(&self, acting: &[Vec<Scalar>], vecs: &[Vec<Scalar>]) -> Subspace {
        let mut b = EchelonBuilder::new(self.field, self.dim);
        let mats: Vec<Matrix> = acting.iter().map(|x| self.act(x)).collect();
        for v in vecs {
            for m in &mats {
                b.insert(m.mul_vec(v));
            }
        }
        b.finish()
    }

    /// `rad(B) M` for a list spanning the radical of the acting algebra.
    pub fn radical_submodule(&self, rad: &[Vec<Scalar>]) -> Subspace {
        let basis: Vec<Vec<Scalar>> = (0..self.dim).map(|i| self.field.unit_vector(self.dim, i)).collect();
        let mut b = EchelonBuilder::new(self.field, self.dim);
        for r in rad {
            let m = self.act(r);
            for v in &basis {
                b.insert(m.mul_vec(v));
            }
        }
        b.finish()
    }

    /// The quotient by an invariant subspace.
    pub fn quotient(&self, sub: &Subspace) -> Result<ModuleRep> {
        let cols = sub.complement_columns();
        let d = cols.len();
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            for r in sub.basis_rows() {
                if !sub.contains(&a.mul_vec(r)) {
                    return Err(Error::Precondition("subspace is not a submodule".into()));
                }
            }
            let mut m = Matrix::zeros(self.field, d, d);
            for (s, &c) in cols.iter().enumerate() {
                let col: Vec<Scalar> = (0..self.dim).map(|r| a.get(r, c).clone()).collect();
                let red = sub.reduce(&col);
                for (t, &c2) in cols.iter().enumerate() {
                    if !red[c2].is_zero() {
                        m.set(t, s, red[c2].clone());
                    }
                }
            }
            actions.push(m);
        }
        ModuleRep::new(self.field, self.side, d, actions)
    }

    /// `dim e_i M` for each idempotent.
    pub fn dim_vector(&self, idempotents: &[Vec<Scalar>]) -> Vec<usize> {
        idempotents.iter().map(|e| self.act(e).rank()).collect()
    }

    /// Multiplicities of the simple tops: `dim e_i (M / rad M)`.
    pub fn top_vector(&self, idempotents: &[Vec<Scalar>], rad: &[Vec<Scalar>]) -> Vec<usize> {
        let rm = self.radical_submodule(rad);
        let top = self.quotient(&rm).expect("radical submodule is invariant");
        top.dim_vector(idempotents)
    }
}
