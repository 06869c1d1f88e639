//! The truncated simplex category algebra on weakly monotone maps between
//! the ordinals `[0], ..., [n]`.

use crate::algebra::{Algebra, IdempotentFrame};
use crate::linalg::{Field, Subspace};
use crate::reedy::ReedyStructure;

/// A weakly monotone map `[source] -> [target]`, stored by its values on
/// `0..=source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl MonotoneMap {
    pub fn identity(i: usize) -> Self {
        MonotoneMap {
            source: i,
            target: i,
            values: (0..=i).collect(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.values.len() == self.source + 1
            && self.values.iter().all(|&v| v <= self.target)
            && self.values.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values.first() == Some(&0)
            && self.values.last() == Some(&self.target)
            && self.values.windows(2).all(|w| w[1] <= w[0] + 1)
    }

    /// `self` after `first`, defined when `first.target == self.source`.
    pub fn after(&self, first: &MonotoneMap) -> Option<MonotoneMap> {
        if first.target != self.source {
            return None;
        }
        Some(MonotoneMap {
            source: first.source,
            target: self.target,
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    /// Factorization `self = mono after epi` through the image.
    pub fn epi_mono(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image = self.values.clone();
        image.dedup();
        let l = image.len() - 1;
        let epi = MonotoneMap {
            source: self.source,
            target: l,
            values: self
                .values
                .iter()
                .map(|v| image.binary_search(v).expect("in image"))
                .collect(),
        };
        let mono = MonotoneMap {
            source: l,
            target: self.target,
            values: image,
        };
        (epi, mono)
    }

    /// All monotone maps `[i] -> [j]` in lexicographic order of values.
    pub fn enumerate(i: usize, j: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut vals = vec![0usize; i + 1];
        loop {
            out.push(MonotoneMap {
                source: i,
                target: j,
                values: vals.clone(),
            });
            // next weakly increasing sequence
            let mut k = i + 1;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if vals[k] < j {
                    vals[k] += 1;
                    let v = vals[k];
                    for x in vals.iter_mut().skip(k + 1) {
                        *x = v;
                    }
                    break;
                }
            }
        }
    }

    pub fn label(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("{}>{}:{}", self.source, self.target, vals.join(","))
    }
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1))
}

/// `k Delta_{<=n}` with its canonical Reedy data: degrees `deg [i] = i`,
/// `A+` spanned by injections and `A-` by surjections.
pub struct SimplexAlgebra {
    pub algebra: Algebra,
    pub maps: Vec<MonotoneMap>,
    pub structure: ReedyStructure,
}

pub fn simplex_algebra(n: usize, field: Field) -> SimplexAlgebra {
    let mut maps = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            maps.extend(MonotoneMap::enumerate(i, j));
        }
    }
    let index: std::collections::HashMap<MonotoneMap, usize> =
        maps.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let labels: Vec<String> = maps.iter().map(MonotoneMap::label).collect();
    let dim = maps.len();
    let mut unit = field.zeros(dim);
    for i in 0..=n {
        unit[index[&MonotoneMap::identity(i)]] = field.one();
    }
    let algebra = Algebra::from_products(field, labels, unit, |p, q| {
        // b_p * b_q is "q, then p"
        let mut v = field.zeros(dim);
        if let Some(c) = maps[p].after(&maps[q]) {
            v[index[&c]] = field.one();
        }
        v
    })
    .expect("well-formed table");

    let names: Vec<String> = (0..=n).map(|i| format!("[{i}]")).collect();
    let idempotents = (0..=n)
        .map(|i| algebra.basis_vector(index[&MonotoneMap::identity(i)]))
        .collect();
    let frame = IdempotentFrame::new(names, idempotents, (0..=n).collect()).expect("frame");
    let span = |pred: fn(&MonotoneMap) -> bool| {
        let v = maps
            .iter()
            .enumerate()
            .filter(|(_, m)| pred(m))
            .map(|(k, _)| algebra.basis_vector(k));
        Subspace::from_vectors(field, dim, v).expect("consistent")
    };
    let aplus = span(MonotoneMap::is_injective);
    let aminus = span(MonotoneMap::is_surjective);
    let structure =
        ReedyStructure::new(algebra.clone(), frame, aplus, aminus).expect("injections and surjections compose");
    SimplexAlgebra {
        algebra,
        maps,
        structure,
    }
}
