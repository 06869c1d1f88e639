//! Reedy decompositions: verification, layer analysis, induced structures
//! and search.

mod crosscheck;
mod induced;
mod layers;
mod search;

pub use crosscheck::{characterization_crosscheck, structural_identities, Crosscheck, StructuralIdentities};
pub use induced::{
    corner_structure, induced_corner, induced_quotient, quotient_structure, recursive_check, InducedReport,
    RecursiveReport,
};
pub use layers::{layer_check, reedy_heredity_bottom, BottomReport, LayerDiag, LayerReport};
pub use search::{degree_functions, search_reedy, subalgebras_over_frame, SearchMode, SearchOptions};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgSubspace, Algebra, IdempotentFrame};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Subspace};

/// Candidate Reedy data `(A, E, deg, A+, A-)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReedyStructure {
    pub algebra: Algebra,
    pub frame: IdempotentFrame,
    pub aplus: AlgSubspace,
    pub aminus: AlgSubspace,
}

impl ReedyStructure {
    /// Checks that the frame is valid and that both subspaces are unital
    /// subalgebras containing every frame idempotent.
    pub fn new(algebra: Algebra, frame: IdempotentFrame, aplus: Subspace, aminus: Subspace) -> Result<Self> {
        frame.validate(&algebra)?;
        let mut subs = Vec::with_capacity(2);
        for (name, s) in [("A+", aplus), ("A-", aminus)] {
            let s = AlgSubspace::subalgebra(&algebra, s)?;
            if !s.space.contains(algebra.unit()) {
                return Err(Error::Precondition(format!("{name} does not contain the unit")));
            }
            for (n, e) in frame.names.iter().zip(&frame.idempotents) {
                if !s.space.contains(e) {
                    return Err(Error::Precondition(format!(
                        "{name} does not contain the idempotent {n}"
                    )));
                }
            }
            subs.push(s);
        }
        let aminus = subs.pop().expect("two");
        let aplus = subs.pop().expect("two");
        Ok(ReedyStructure {
            algebra,
            frame,
            aplus,
            aminus,
        })
    }

    pub fn with_degrees(&self, degrees: Vec<usize>) -> Self {
        ReedyStructure {
            frame: self.frame.with_degrees(degrees),
            ..self.clone()
        }
    }

    /// The structure with the roles of `A+` and `A-` exchanged.
    pub fn swapped(&self) -> Self {
        ReedyStructure {
            aplus: self.aminus.clone(),
            aminus: self.aplus.clone(),
            ..self.clone()
        }
    }

    /// Span of the frame idempotents.
    pub fn s_space(&self) -> Subspace {
        self.frame.s_space(&self.algebra)
    }
}

/// `blocks[j][i] = e_j X e_i`.
pub fn blocks(a: &Algebra, frame: &IdempotentFrame, x: &Subspace) -> Vec<Vec<Subspace>> {
    let n = frame.len();
    (0..n)
        .into_par_iter()
        .map(|j| {
            (0..n)
                .map(|i| a.sandwich(&frame.idempotents[j], x, &frame.idempotents[i]))
                .collect()
        })
        .collect()
}

/// Directedness diagnostic for one block `e_j X e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDiag {
    pub source: String,
    pub target: String,
    pub dim: usize,
    pub ok: bool,
}

/// Condition on one block of the multiplication map
/// `sum_l e_j A+ e_l (x) e_l A- e_i -> e_j A e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompDiag {
    pub source: String,
    pub target: String,
    pub domain: usize,
    pub codomain: usize,
    pub rank: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReedyReport {
    pub cond_plus: Vec<PairDiag>,
    pub cond_minus: Vec<PairDiag>,
    pub cond_decomp: Vec<DecompDiag>,
    pub total_domain: usize,
    pub total_codomain: usize,
    pub plus_ok: bool,
    pub minus_ok: bool,
    pub decomp_ok: bool,
    pub overall: bool,
}

/// Checks a directedness pattern on precomputed blocks. With `raising`,
/// `e_j X e_i != 0` for `i != j` requires `deg j > deg i`; otherwise
/// `deg j < deg i`. Diagonal blocks must be one-dimensional.
pub fn directedness(
    frame: &IdempotentFrame,
    blocks: &[Vec<Subspace>],
    levels: &[usize],
    raising: bool,
) -> Vec<PairDiag> {
    let n = frame.len();
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let dim = blocks[j][i].dim();
            let ok = if i == j {
                dim == 1
            } else if dim == 0 {
                true
            } else if raising {
                levels[j] > levels[i]
            } else {
                levels[j] < levels[i]
            };
            out.push(PairDiag {
                source: frame.names[i].clone(),
                target: frame.names[j].clone(),
                dim,
                ok,
            });
        }
    }
    out
}

pub fn verify_reedy(r: &ReedyStructure) -> ReedyReport {
    let a = &r.algebra;
    let frame = &r.frame;
    let n = frame.len();
    let full = blocks(a, frame, &a.full_space());
    let plus = blocks(a, frame, &r.aplus.space);
    let minus = blocks(a, frame, &r.aminus.space);
    let cond_plus = directedness(frame, &plus, &frame.degrees, true);
    let cond_minus = directedness(frame, &minus, &frame.degrees, false);

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..n).map(move |i| (j, i))).collect();
    let cond_decomp: Vec<DecompDiag> = pairs
        .par_iter()
        .map(|&(j, i)| {
            let mut domain = 0;
            let mut span = EchelonBuilder::new(a.field(), a.dim());
            for l in 0..n {
                let (p, m) = (&plus[j][l], &minus[l][i]);
                domain += p.dim() * m.dim();
                for x in p.basis_rows() {
                    for y in m.basis_rows() {
                        span.insert(a.mul(x, y));
                    }
                }
            }
            let codomain = full[j][i].dim();
            let rank = span.dim();
            DecompDiag {
                source: frame.names[i].clone(),
                target: frame.names[j].clone(),
                domain,
                codomain,
                rank,
                ok: domain == codomain && rank == codomain,
            }
        })
        .collect();
    let plus_ok = cond_plus.iter().all(|d| d.ok);
    let minus_ok = cond_minus.iter().all(|d| d.ok);
    let decomp_ok = cond_decomp.iter().all(|d| d.ok);
    ReedyReport {
        total_domain: cond_decomp.iter().map(|d| d.domain).sum(),
        total_codomain: cond_decomp.iter().map(|d| d.codomain).sum(),
        cond_plus,
        cond_minus,
        cond_decomp,
        plus_ok,
        minus_ok,
        decomp_ok,
        overall: plus_ok && minus_ok && decomp_ok,
    }
}

/// Whether the directedness conditions on `A+` and `A-` hold, which is the
/// setting in which the layer and recursive criteria apply.
pub fn setup_holds(r: &ReedyStructure) -> bool {
    let a = &r.algebra;
    let plus = blocks(a, &r.frame, &r.aplus.space);
    let minus = blocks(a, &r.frame, &r.aminus.space);
    directedness(&r.frame, &plus, &r.frame.degrees, true)
        .iter()
        .all(|d| d.ok)
        && directedness(&r.frame, &minus, &r.frame.degrees, false)
            .iter()
            .all(|d| d.ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{diamond, upper_triangular};
    use crate::linalg::Field;

    fn diamond_structure(deg: [usize; 4], plus_is_a: bool) -> ReedyStructure {
        let (a, frame) = diamond(Field::Rationals, deg);
        let s = frame.s_space(&a);
        let full = a.full_space();
        let (p, m) = if plus_is_a { (full, s) } else { (s, full) };
        ReedyStructure::new(a, frame, p, m).unwrap()
    }

    #[test]
    fn ground_field_is_reedy() {
        let a = Algebra::ground(Field::Rationals);
        let frame = IdempotentFrame::unit(&a);
        let r = ReedyStructure::new(a.clone(), frame, a.full_space(), a.full_space()).unwrap();
        assert!(verify_reedy(&r).overall);
    }

    #[test]
    fn diamond_degree_functions() {
        assert!(verify_reedy(&diamond_structure([1, 2, 3, 4], true)).overall);
        assert!(verify_reedy(&diamond_structure([1, 2, 2, 3], true)).overall);
        assert!(verify_reedy(&diamond_structure([4, 2, 3, 1], false)).overall);
        let bad = verify_reedy(&diamond_structure([4, 3, 1, 2], true));
        assert!(!bad.overall && !bad.plus_ok);
    }

    #[test]
    fn upper_triangular_with_diagonal_parts_fails_decomposition() {
        let a = upper_triangular(2, Field::Rationals);
        let frame = IdempotentFrame::from_basis_labels(&a, &["E11", "E22"], &[0, 1]).unwrap();
        let s = frame.s_space(&a);
        let r = ReedyStructure::new(a, frame, s.clone(), s).unwrap();
        let rep = verify_reedy(&r);
        assert!(rep.plus_ok && rep.minus_ok);
        assert!(!rep.overall);
        assert_eq!((rep.total_domain, rep.total_codomain), (2, 3));
        let bad: Vec<_> = rep.cond_decomp.iter().filter(|d| !d.ok).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!((bad[0].source.as_str(), bad[0].target.as_str()), ("E22", "E11"));
    }

    #[test]
    fn structure_rejects_missing_idempotents() {
        let (a, frame) = diamond(Field::Rationals, [1, 2, 3, 4]);
        let z = crate::algebra::subalgebra_closure(&a, &[]).space;
        assert!(ReedyStructure::new(a.clone(), frame, z, a.full_space()).is_err());
    }
}
