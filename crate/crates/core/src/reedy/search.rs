use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::algebra::{is_subalgebra, subalgebra_closure, Algebra, IdempotentFrame};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBuilder, Field, Scalar, Subspace};
use crate::reedy::{blocks, directedness, verify_reedy, ReedyStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Heuristic,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub mode: SearchMode,
    pub max_weights: usize,
    /// Exhaustive mode: bound on `dim A - |E|`.
    pub max_free_dim: usize,
    /// Exhaustive mode: bound on the number of blockwise candidates.
    pub max_candidates: usize,
    /// Only degree functions with at most this many distinct values.
    pub max_levels: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::Heuristic,
            max_weights: 7,
            max_free_dim: 8,
            max_candidates: 1 << 20,
            max_levels: None,
        }
    }
}

impl SearchOptions {
    pub fn exhaustive() -> Self {
        SearchOptions {
            mode: SearchMode::Exhaustive,
            ..Default::default()
        }
    }
}

/// Normalized degree functions on `n` idempotents: maps onto `{0, ..., m}`,
/// in lexicographic order.
pub fn degree_functions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        let mut seen = vec![false; n];
        for &v in &cur {
            seen[v] = true;
        }
        let m = cur.iter().copied().max().unwrap_or(0);
        if seen.iter().take(m + 1).all(|&s| s) {
            out.push(cur.clone());
        }
        // odometer, last position fastest
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] + 1 < n {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}

/// All subspaces of `F_p^r`, as lists of basis vectors in reduced echelon
/// form.
fn all_subspaces(p: u32, r: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << r) {
        let pivots: Vec<usize> = (0..r).filter(|&c| mask & (1 << c) != 0).collect();
        // free positions: (row s, column c) with c > pivot_s and c not a pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(s, &ps)| {
                let pivots = &pivots;
                (ps + 1..r).filter(move |c| !pivots.contains(c)).map(move |c| (s, c))
            })
            .collect();
        let total = (p as u64).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows: Vec<Vec<u32>> = pivots
                .iter()
                .map(|&ps| {
                    let mut v = vec![0; r];
                    v[ps] = 1;
                    v
                })
                .collect();
            for &(s, c) in &free {
                rows[s][c] = (code % p as u64) as u32;
                code /= p as u64;
            }
            out.push(rows);
        }
    }
    out
}

fn gaussian_count(p: u64, r: usize) -> u128 {
    // number of subspaces of F_p^r
    let mut total: u128 = 0;
    for k in 0..=r {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..k {
            num *= (p as u128).pow((r - i) as u32) - 1;
            den *= (p as u128).pow((i + 1) as u32) - 1;
        }
        total += num / den;
    }
    total
}

/// Every unital subalgebra of `a` containing the frame idempotents, over a
/// finite field. Such a subalgebra is the direct sum of its blocks
/// `e_j X e_i`, so candidates are enumerated blockwise.
pub fn subalgebras_over_frame(a: &Algebra, frame: &IdempotentFrame, opts: &SearchOptions) -> Result<Vec<Subspace>> {
    let Field::Prime(p) = a.field() else {
        return Err(Error::Unsupported("exhaustive search needs a finite field".into()));
    };
    frame.validate(a)?;
    let free = a.dim() - frame.len();
    if free > opts.max_free_dim {
        return Err(Error::BoundExceeded(format!(
            "dim A - |E| = {free} exceeds the bound {}",
            opts.max_free_dim
        )));
    }
    let n = frame.len();
    let full = blocks(a, frame, &a.full_space());
    // per block: the fixed part and the list of choices for the rest
    let mut fixed: Vec<Vec<Scalar>> = Vec::new();
    let mut choices: Vec<Vec<Vec<Vec<Scalar>>>> = Vec::new();
    let mut count: u128 = 1;
    for j in 0..n {
        for i in 0..n {
            let block = &full[j][i];
            let base = if i == j {
                fixed.push(frame.idempotents[i].clone());
                Subspace::from_vectors(a.field(), a.dim(), [frame.idempotents[i].clone()])?
            } else {
                a.zero_space()
            };
            let mut b = EchelonBuilder::from_subspace(&base);
            let comp: Vec<Vec<Scalar>> = block
                .basis_rows()
                .iter()
                .filter(|x| b.insert((*x).clone()))
                .cloned()
                .collect();
            if comp.is_empty() {
                continue;
            }
            count = count.saturating_mul(gaussian_count(p as u64, comp.len()));
            if count > opts.max_candidates as u128 {
                return Err(Error::BoundExceeded(format!(
                    "more than {} candidate subspaces",
                    opts.max_candidates
                )));
            }
            let subs = all_subspaces(p as u32, comp.len())
                .into_iter()
                .map(|rows| {
                    rows.iter()
                        .map(|coef| {
                            let mut v = a.zero_vector();
                            for (c, x) in coef.iter().zip(&comp) {
                                if *c != 0 {
                                    let s = a.field().from_i64(*c as i64);
                                    for (t, y) in v.iter_mut().zip(x) {
                                        t.add_mul_assign(&s, y);
                                    }
                                }
                            }
                            v
                        })
                        .collect()
                })
                .collect();
            choices.push(subs);
        }
    }
    let total = count as usize;
    let mut found: Vec<Subspace> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut vecs = fixed.clone();
            for c in &choices {
                vecs.extend(c[code % c.len()].iter().cloned());
                code /= c.len();
            }
            let s = Subspace::from_vectors(a.field(), a.dim(), vecs).expect("block vectors");
            is_subalgebra(a, &s).then_some(s)
        })
        .collect();
    found.sort_by(|x, y| (x.dim(), x.basis_rows()).cmp(&(y.dim(), y.basis_rows())));
    Ok(found)
}

/// Span of the frame and the blocks `e_j A e_i` selected by `keep`.
fn block_span(
    a: &Algebra,
    frame: &IdempotentFrame,
    full: &[Vec<Subspace>],
    keep: impl Fn(usize, usize) -> bool,
) -> Subspace {
    let mut vecs: Vec<Vec<Scalar>> = frame.idempotents.clone();
    let n = frame.len();
    for j in 0..n {
        for i in 0..n {
            if i != j && keep(j, i) {
                vecs.extend(full[j][i].basis_rows().iter().cloned());
            }
        }
    }
    Subspace::from_vectors(a.field(), a.dim(), vecs).expect("block vectors")
}

type Key = (Vec<usize>, Vec<Vec<Scalar>>, Vec<Vec<Scalar>>);

fn key(r: &ReedyStructure) -> Key {
    (
        r.frame.degrees.clone(),
        r.aplus.space.basis_rows().to_vec(),
        r.aminus.space.basis_rows().to_vec(),
    )
}

fn candidate(a: &Algebra, frame: &IdempotentFrame, plus: &Subspace, minus: &Subspace) -> Option<ReedyStructure> {
    let r = ReedyStructure::new(a.clone(), frame.clone(), plus.clone(), minus.clone()).ok()?;
    verify_reedy(&r).overall.then_some(r)
}

/// Reedy structures on `a` over the given idempotents, one degree function
/// at a time. Input degrees are ignored; results carry normalized degrees
/// and are sorted by degrees, then `A+`, then `A-`.
pub fn search_reedy(a: &Algebra, frame: &IdempotentFrame, opts: &SearchOptions) -> Result<Vec<ReedyStructure>> {
    frame.validate(a)?;
    if frame.len() > opts.max_weights {
        return Err(Error::BoundExceeded(format!(
            "{} idempotents exceed the bound {}",
            frame.len(),
            opts.max_weights
        )));
    }
    let mut degs = degree_functions(frame.len());
    if let Some(k) = opts.max_levels {
        degs.retain(|d| d.iter().all(|&v| v < k));
    }
    let found: Vec<ReedyStructure> = match opts.mode {
        SearchMode::Heuristic => {
            let full = blocks(a, frame, &a.full_space());
            let s = frame.s_space(a);
            let whole = a.full_space();
            degs.into_par_iter()
                .flat_map_iter(|d| {
                    let f = frame.with_degrees(d.clone());
                    let raise = block_span(a, frame, &full, |j, i| d[j] > d[i]);
                    let lower = block_span(a, frame, &full, |j, i| d[j] < d[i]);
                    let raise = subalgebra_closure(a, raise.basis_rows()).space;
                    let lower = subalgebra_closure(a, lower.basis_rows()).space;
                    [(raise, lower), (whole.clone(), s.clone()), (s.clone(), whole.clone())]
                        .into_iter()
                        .filter_map(|(p, m)| candidate(a, &f, &p, &m))
                        .collect::<Vec<_>>()
                })
                .collect()
        }
        SearchMode::Exhaustive => {
            let subs = subalgebras_over_frame(a, frame, opts)?;
            let sub_blocks: Vec<Vec<Vec<Subspace>>> = subs.par_iter().map(|x| blocks(a, frame, x)).collect();
            let n = frame.len();
            degs.into_par_iter()
                .flat_map_iter(|d| {
                    let f = frame.with_degrees(d.clone());
                    let ok =
                        |k: usize, raising: bool| directedness(frame, &sub_blocks[k], &d, raising).iter().all(|x| x.ok);
                    let plus: Vec<usize> = (0..subs.len()).filter(|&k| ok(k, true)).collect();
                    let minus: Vec<usize> = (0..subs.len()).filter(|&k| ok(k, false)).collect();
                    let mut out = Vec::new();
                    for &p in &plus {
                        for &m in &minus {
                            let (pb, mb) = (&sub_blocks[p], &sub_blocks[m]);
                            let domain: usize = (0..n)
                                .flat_map(|j| (0..n).flat_map(move |i| (0..n).map(move |l| (j, i, l))))
                                .map(|(j, i, l)| pb[j][l].dim() * mb[l][i].dim())
                                .sum();
                            if domain != a.dim() {
                                continue;
                            }
                            if let Some(r) = candidate(a, &f, &subs[p], &subs[m]) {
                                out.push(r);
                            }
                        }
                    }
                    out
                })
                .collect()
        }
    };
    let mut seen = BTreeSet::new();
    let mut out: Vec<(Key, ReedyStructure)> = Vec::new();
    for r in found {
        let k = key(&r);
        if seen.insert(k.clone()) {
            out.push((k, r));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{diagonal_frame, diamond, matrix_algebra, simplex_algebra};

    #[test]
    fn degree_function_counts() {
        // ordered set partitions (Fubini numbers)
        let counts: Vec<usize> = (0..=5).map(|n| degree_functions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 75, 541]);
        let d = degree_functions(3);
        let mut sorted = d.clone();
        sorted.sort();
        assert_eq!(d, sorted);
    }

    #[test]
    fn subspace_counts() {
        for (p, r) in [(2u32, 3usize), (3, 2), (2, 4)] {
            assert_eq!(all_subspaces(p, r).len() as u128, gaussian_count(p as u64, r));
        }
        assert_eq!(gaussian_count(2, 3), 16);
    }

    #[test]
    fn matrix_algebra_has_no_reedy_structure() {
        for p in [2, 3] {
            let m2 = matrix_algebra(2, Field::Prime(p));
            for frame in [IdempotentFrame::unit(&m2), diagonal_frame(&m2, 2)] {
                let found = search_reedy(&m2, &frame, &SearchOptions::exhaustive()).unwrap();
                assert!(found.is_empty());
            }
        }
    }

    #[test]
    fn diamond_exhaustive_over_gf2() {
        let (a, frame) = diamond(Field::Prime(2), [0, 0, 0, 0]);
        let found = search_reedy(&a, &frame, &SearchOptions::exhaustive()).unwrap();
        assert!(!found.is_empty());
        let s = frame.s_space(&a);
        let has = |d: Vec<usize>, p: &Subspace, m: &Subspace| {
            found
                .iter()
                .any(|r| r.frame.degrees == d && &r.aplus.space == p && &r.aminus.space == m)
        };
        assert!(has(vec![0, 1, 2, 3], &a.full_space(), &s));
        assert!(has(vec![0, 1, 1, 2], &a.full_space(), &s));
        assert!(has(vec![3, 1, 2, 0], &s, &a.full_space()));
        assert!(!found.iter().any(|r| r.frame.degrees == vec![3, 2, 0, 1]));
        for r in &found {
            assert!(verify_reedy(r).overall);
        }
    }

    #[test]
    fn simplex_heuristic_finds_combinatorial_spans() {
        let s = simplex_algebra(1, Field::Rationals).structure;
        let found = search_reedy(&s.algebra, &s.frame.with_degrees(vec![0, 0]), &SearchOptions::default()).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].aplus, s.aplus);
        assert_eq!(found[0].aminus, s.aminus);

        let flat = SearchOptions {
            max_levels: Some(1),
            ..Default::default()
        };
        assert!(search_reedy(&s.algebra, &s.frame, &flat).unwrap().is_empty());
    }

    #[test]
    fn exhaustive_requires_finite_field() {
        let (a, frame) = diamond(Field::Rationals, [0, 0, 0, 0]);
        assert!(matches!(
            search_reedy(&a, &frame, &SearchOptions::exhaustive()),
            Err(Error::Unsupported(_))
        ));
    }
}
