use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{vec_add, Scalar, Subspace};

/// A complete set of pairwise orthogonal idempotents together with a degree
/// function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentFrame {
    pub names: Vec<String>,
    pub idempotents: Vec<Vec<Scalar>>,
    pub degrees: Vec<usize>,
}

impl IdempotentFrame {
    pub fn new(names: Vec<String>, idempotents: Vec<Vec<Scalar>>, degrees: Vec<usize>) -> Result<Self> {
        if names.len() != idempotents.len() || names.len() != degrees.len() {
            return Err(Error::Parse(
                "frame names, idempotents and degrees differ in length".into(),
            ));
        }
        Ok(IdempotentFrame {
            names,
            idempotents,
            degrees,
        })
    }

    /// The frame `{1}` with degree 0.
    pub fn unit(a: &Algebra) -> Self {
        IdempotentFrame {
            names: vec!["1".into()],
            idempotents: vec![a.unit().to_vec()],
            degrees: vec![0],
        }
    }

    /// Frame whose idempotents are the basis elements with the given labels.
    pub fn from_basis_labels(a: &Algebra, labels: &[&str], degrees: &[usize]) -> Result<Self> {
        let mut idem = Vec::new();
        for l in labels {
            let i = a
                .index_of(l)
                .ok_or_else(|| Error::Parse(format!("unknown basis label {l}")))?;
            idem.push(a.basis_vector(i));
        }
        IdempotentFrame::new(labels.iter().map(|s| s.to_string()).collect(), idem, degrees.to_vec())
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    pub fn with_degrees(&self, degrees: Vec<usize>) -> Self {
        assert_eq!(degrees.len(), self.len());
        IdempotentFrame {
            names: self.names.clone(),
            idempotents: self.idempotents.clone(),
            degrees,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Checks idempotency, orthogonality and completeness.
    pub fn validate(&self, a: &Algebra) -> Result<()> {
        for (name, e) in self.names.iter().zip(&self.idempotents) {
            if e.len() != a.dim() {
                return Err(Error::AmbientMismatch(e.len(), a.dim()));
            }
            if !a.is_idempotent(e) {
                return Err(Error::NotIdempotent(name.clone()));
            }
        }
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && !crate::linalg::is_zero_vec(&a.mul(&self.idempotents[i], &self.idempotents[j])) {
                    return Err(Error::Precondition(format!(
                        "idempotents {} and {} are not orthogonal",
                        self.names[i], self.names[j]
                    )));
                }
            }
        }
        if self.sum(0..self.len(), a) != a.unit() {
            return Err(Error::Precondition("idempotents do not sum to the unit".into()));
        }
        Ok(())
    }

    fn sum<I: IntoIterator<Item = usize>>(&self, idx: I, a: &Algebra) -> Vec<Scalar> {
        let mut out = a.zero_vector();
        for i in idx {
            out = vec_add(&out, &self.idempotents[i]);
        }
        out
    }

    pub fn max_level(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_level(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn indices_at(&self, l: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.degrees[i] == l).collect()
    }

    /// Occupied levels in increasing order.
    pub fn occupied_levels(&self) -> Vec<usize> {
        let mut ls: Vec<usize> = self.degrees.clone();
        ls.sort_unstable();
        ls.dedup();
        ls
    }

    /// Level sum `eps_l`; zero when the level is empty.
    pub fn epsilon(&self, a: &Algebra, l: usize) -> Vec<Scalar> {
        self.sum(self.indices_at(l), a)
    }

    /// Cumulative sum `eps_0 + ... + eps_l`.
    pub fn cumulative(&self, a: &Algebra, l: usize) -> Vec<Scalar> {
        self.sum((0..self.len()).filter(|&i| self.degrees[i] <= l), a)
    }

    /// Span of the idempotents.
    pub fn s_space(&self, a: &Algebra) -> Subspace {
        Subspace::from_vectors(a.field(), a.dim(), self.idempotents.clone()).expect("frame vectors")
    }

    /// Span of the idempotents of degree `l`.
    pub fn s_block(&self, a: &Algebra, l: usize) -> Subspace {
        let v = self.indices_at(l).into_iter().map(|i| self.idempotents[i].clone());
        Subspace::from_vectors(a.field(), a.dim(), v).expect("frame vectors")
    }

    /// Degrees relabelled to consecutive values `0..m` preserving order.
    pub fn normalized_degrees(&self) -> Vec<usize> {
        normalize_degrees(&self.degrees)
    }

    pub fn degree_map(&self) -> BTreeMap<String, usize> {
        self.names.iter().cloned().zip(self.degrees.iter().copied()).collect()
    }
}

/// Relabels values to `0..m` keeping their relative order.
pub fn normalize_degrees(degrees: &[usize]) -> Vec<usize> {
    let mut levels: Vec<usize> = degrees.to_vec();
    levels.sort_unstable();
    levels.dedup();
    degrees
        .iter()
        .map(|d| levels.binary_search(d).expect("present"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{diamond, upper_triangular};
    use crate::linalg::Field;

    #[test]
    fn diamond_frame_is_valid_with_empty_level() {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        frame.validate(&a).unwrap();
        assert!(crate::linalg::is_zero_vec(&frame.epsilon(&a, 0)));
        assert_eq!(frame.occupied_levels(), vec![1, 2, 3, 4]);
        assert_eq!(frame.normalized_degrees(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn non_idempotent_rejected() {
        let q = Field::Rationals;
        let a = upper_triangular(2, q);
        let mut v = a.basis_vector(0);
        v[0] = q.from_i64(2);
        let f = IdempotentFrame::new(vec!["x".into()], vec![v], vec![0]).unwrap();
        assert!(matches!(f.validate(&a), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn normalization_keeps_order() {
        assert_eq!(normalize_degrees(&[4, 2, 3, 1]), vec![3, 1, 2, 0]);
        assert_eq!(normalize_degrees(&[1, 2, 2, 3]), vec![0, 1, 1, 2]);
    }
}
