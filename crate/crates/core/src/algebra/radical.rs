//! Jacobson radical.
//!
//! In characteristic 0, or characteristic `p > dim A`, the radical is the
//! kernel of the trace form `(x, y) -> Tr(L_{xy})` of the left regular
//! representation. For small `p` the trace form is too coarse and the
//! p-power trace filtration is used instead: with `I_{-1} = A` and integer
//! lifts `^L` of the regular matrices,
//!
//! ```text
//! g_i(x) = (Tr(^L_x^(p^i)) mod p^(i+1)) / p^i
//! I_i    = { x in I_{i-1} : g_i(x y) = 0 for all y }
//! ```
//!
//! and `rad A = I_l` for `l = floor(log_p dim A)`. Each `g_i` is linear on
//! `I_{i-1}`, which makes every step a kernel computation.

use crate::algebra::{corner_space, product_space, quotient, AlgSubspace, Algebra, ClosureKind, IdempotentFrame};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

pub fn radical(a: &Algebra) -> AlgSubspace {
    let n = a.dim();
    let space = if n == 0 {
        a.zero_space()
    } else {
        match a.field() {
            Field::Prime(p) if (p as usize) <= n => power_trace_radical(a, p),
            _ => trace_form_kernel(a),
        }
    };
    AlgSubspace {
        space,
        kind: ClosureKind::TwoSidedIdeal,
    }
}

/// Traces of the left multiplication maps of the basis elements.
fn basis_traces(a: &Algebra) -> Vec<Scalar> {
    let n = a.dim();
    (0..n)
        .map(|k| {
            let mut t = a.field().zero();
            for m in 0..n {
                for (r, c) in a.product_terms(k, m) {
                    if *r == m {
                        t.add_assign_ref(c);
                    }
                }
            }
            t
        })
        .collect()
}

fn trace_form_kernel(a: &Algebra) -> Subspace {
    let n = a.dim();
    let t = basis_traces(a);
    let mut form = Matrix::zeros(a.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = a.field().zero();
            for (k, c) in a.product_terms(i, j) {
                s.add_mul_assign(c, &t[*k]);
            }
            form.set(i, j, s);
        }
    }
    form.kernel()
}

/// Integer lift of the regular matrix of `x`, entries in `0..p`.
fn lifted_regular(a: &Algebra, x: &[Scalar]) -> Vec<Vec<u128>> {
    let m = a.left_mul_matrix(x);
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|s| s.gf_value().expect("prime field") as u128)
                .collect()
        })
        .collect()
}

fn mat_mul_mod(x: &[Vec<u128>], y: &[Vec<u128>], modulus: u128) -> Vec<Vec<u128>> {
    let n = x.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let a = x[i][k];
            if a == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + a * y[k][j]) % modulus;
            }
        }
    }
    out
}

fn trace_of_power_mod(m: &[Vec<u128>], mut e: u128, modulus: u128) -> u128 {
    let n = m.len();
    let mut result: Vec<Vec<u128>> = (0..n).map(|i| (0..n).map(|j| u128::from(i == j)).collect()).collect();
    let mut base: Vec<Vec<u128>> = m.iter().map(|r| r.iter().map(|v| v % modulus).collect()).collect();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_mod(&result, &base, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_mod(&base, &base, modulus);
        }
    }
    (0..n).fold(0, |acc, i| (acc + result[i][i]) % modulus)
}

fn power_trace_radical(a: &Algebra, p: u32) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let p128 = p as u128;
    let mut l = 0u32;
    while p128.pow(l + 1) <= n as u128 {
        l += 1;
    }
    let mut current = a.full_space();
    for i in 0..=l {
        if current.is_zero() {
            break;
        }
        let pi = p128.pow(i);
        let modulus = pi * p128;
        let basis = current.basis_rows().to_vec();
        // g_i on the canonical basis of I_{i-1}
        let g: Vec<Scalar> = basis
            .iter()
            .map(|w| {
                let t = trace_of_power_mod(&lifted_regular(a, w), pi, modulus);
                debug_assert_eq!(t % pi, 0);
                f.from_i64(((t / pi) % p128) as i64)
            })
            .collect();
        // G[t][s] = g_i(u_s b_t), expanded linearly through coordinates in I_{i-1}
        let d = basis.len();
        let mut mat = Matrix::zeros(f, n, d);
        for (s, u) in basis.iter().enumerate() {
            for t in 0..n {
                let prod = a.mul_basis_right(u, t);
                let coords = current.coords_unchecked(&prod);
                let mut val = f.zero();
                for (c, gv) in coords.iter().zip(&g) {
                    val.add_mul_assign(c, gv);
                }
                mat.set(t, s, val);
            }
        }
        let ker = mat.kernel();
        let vecs = ker.basis_rows().iter().map(|c| current.combine(c));
        current = Subspace::from_vectors(f, n, vecs).expect("consistent");
    }
    current
}

/// Whether some power of the subspace (under multiplication) vanishes.
pub fn radical_is_nilpotent(a: &Algebra, s: &Subspace) -> bool {
    let mut power = s.clone();
    for _ in 0..=a.dim() {
        if power.is_zero() {
            return true;
        }
        let next = product_space(a, &power, s);
        if next == power {
            return next.is_zero();
        }
        power = next;
    }
    power.is_zero()
}

/// `dim A - dim rad A = |E|` and every `e_i (A/rad) e_i` is one-dimensional.
pub fn is_elementary(a: &Algebra, frame: &IdempotentFrame) -> bool {
    let rad = radical(a);
    if a.dim() - rad.dim() != frame.len() {
        return false;
    }
    let Ok((q, proj)) = quotient(a, &rad) else {
        return false;
    };
    frame
        .idempotents
        .iter()
        .all(|e| corner_space(&q, &proj.apply(e)).dim() == 1)
}

/// Primitivity test for an idempotent: `eAe` is local with one-dimensional
/// top.
pub fn is_local_one_dim_top(a: &Algebra, e: &[Scalar]) -> bool {
    match crate::algebra::corner(a, e) {
        Ok((c, _)) => c.dim() >= 1 && c.dim() - radical(&c).dim() == 1,
        Err(_) => false,
    }
}
