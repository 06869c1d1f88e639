//! Exact dense linear algebra over the rationals and prime fields.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use subspace::{EchelonBuilder, Subspace};

/// Whether every entry of `v` is zero.
pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a + b` entrywise.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a - b` entrywise.
pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}
