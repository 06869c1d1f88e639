//! Tensor products over subalgebras: `Ae (x)_{eAe} eA`, induction
//! `A (x)_B M`, and the projectivity test.

use crate::algebra::{
    corner_space, is_elementary, left_ideal_closure, radical, right_ideal_closure, AlgSubspace, Algebra, ClosureKind,
    IdempotentFrame, ModuleRep, Side,
};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, vec_add, EchelonBuilder, Matrix, Scalar, Subspace};

/// `dim Ae (x)_{eAe} eA`.
pub fn tensor_dim_over_corner(a: &Algebra, e: &[Scalar]) -> Result<usize> {
    tensor_dim_over_corner_parts(a, &[e.to_vec()])
}

/// `dim Ae (x)_{eAe} eA` for `e` the sum of the given orthogonal idempotents.
///
/// `Ae` is presented as a right `eAe`-module by a free cover
/// `F = sum_g f_g eAe -> Ae`, with generators `g = g f_g` chosen greedily.
/// With `K` the kernel of the cover, the tensor product is the cokernel of
/// `K (x) eA -> sum_g f_g A`.
pub fn tensor_dim_over_corner_parts(a: &Algebra, parts: &[Vec<Scalar>]) -> Result<usize> {
    let mut e = a.zero_vector();
    for p in parts {
        if !a.is_idempotent(p) {
            return Err(Error::NotIdempotent(a.format_element(p)));
        }
        e = vec_add(&e, p);
    }
    if !a.is_idempotent(&e) {
        return Err(Error::NotIdempotent(a.format_element(&e)));
    }
    if is_zero_vec(&e) {
        return Ok(0);
    }
    let r_basis = corner_space(a, &e).basis_rows().to_vec();
    let ae = left_ideal_closure(a, &[e.clone()]);
    let ea = right_ideal_closure(a, &[e.clone()]);

    // candidates x = x f with the size of x R
    let mut candidates: Vec<(usize, usize, Vec<Scalar>)> = Vec::new();
    for (pi, f) in parts.iter().enumerate() {
        if is_zero_vec(f) {
            continue;
        }
        let af = left_ideal_closure(a, &[f.clone()]);
        for x in af.basis_rows() {
            let xr = Subspace::from_vectors(a.field(), a.dim(), r_basis.iter().map(|r| a.mul(x, r)))?;
            candidates.push((xr.dim(), pi, x.clone()));
        }
    }
    candidates.sort_by(|p, q| q.0.cmp(&p.0));

    let mut covered = EchelonBuilder::new(a.field(), a.dim());
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (_, pi, x) in candidates {
        if covered.dim() == ae.dim() {
            break;
        }
        if covered.contains(&x) {
            continue;
        }
        for r in &r_basis {
            covered.insert(a.mul(&x, r));
        }
        gens.push((pi, x));
    }

    // free cover: block g has basis f_g R = f_g A e
    let mut blocks: Vec<Vec<Vec<Scalar>>> = Vec::new();
    let mut images: Vec<Vec<Scalar>> = Vec::new();
    for (pi, g) in &gens {
        let f = &parts[*pi];
        let fr = Subspace::from_vectors(a.field(), a.dim(), r_basis.iter().map(|r| a.mul(f, r)))?;
        for u in fr.basis_rows() {
            images.push(a.mul(g, u));
        }
        blocks.push(fr.basis_rows().to_vec());
    }
    let total: usize = blocks.iter().map(Vec::len).sum();
    let mut cover = Matrix::zeros(a.field(), a.dim(), total);
    for (c, img) in images.iter().enumerate() {
        for (r, v) in img.iter().enumerate() {
            if !v.is_zero() {
                cover.set(r, c, v.clone());
            }
        }
    }
    let kernel = cover.kernel();

    // sum_g f_g N with N = eA, in concatenated ambient coordinates
    let n = a.dim();
    let mut free_dim = 0;
    for (pi, _) in &gens {
        free_dim += right_ideal_closure(a, &[parts[*pi].clone()]).dim();
    }
    let mut rel = EchelonBuilder::new(a.field(), n * gens.len());
    for k in kernel.basis_rows() {
        // split k into per-generator elements of f_g R
        let mut comps: Vec<Vec<Scalar>> = Vec::with_capacity(gens.len());
        let mut off = 0;
        for block in &blocks {
            let mut v = a.zero_vector();
            for (s, u) in block.iter().enumerate() {
                let c = &k[off + s];
                if !c.is_zero() {
                    for (t, x) in u.iter().enumerate() {
                        if !x.is_zero() {
                            v[t].add_mul_assign(c, x);
                        }
                    }
                }
            }
            off += block.len();
            comps.push(v);
        }
        for y in ea.basis_rows() {
            let mut row = Vec::with_capacity(n * gens.len());
            for c in &comps {
                row.extend(a.mul(c, y));
            }
            rel.insert(row);
        }
    }
    Ok(free_dim - rel.dim())
}

/// Direct computation of `dim Ae (x)_{eAe} eA` as `dim Ae * dim eA` minus
/// the rank of the balancing relations `xr (x) y - x (x) ry`.
pub fn tensor_dim_over_corner_naive(a: &Algebra, e: &[Scalar]) -> Result<usize> {
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent(a.format_element(e)));
    }
    let ae = left_ideal_closure(a, &[e.to_vec()]);
    let ea = right_ideal_closure(a, &[e.to_vec()]);
    let r = corner_space(a, e);
    let (p, q) = (ae.dim(), ea.dim());
    let mut rel = EchelonBuilder::new(a.field(), p * q);
    for (i, x) in ae.basis_rows().iter().enumerate() {
        for rt in r.basis_rows() {
            let xr = ae.coords_unchecked(&a.mul(x, rt));
            for (j, y) in ea.basis_rows().iter().enumerate() {
                let ry = ea.coords_unchecked(&a.mul(rt, y));
                let mut v = a.field().zeros(p * q);
                for (s, c) in xr.iter().enumerate() {
                    if !c.is_zero() {
                        v[s * q + j].add_assign_ref(c);
                    }
                }
                for (t, c) in ry.iter().enumerate() {
                    if !c.is_zero() {
                        v[i * q + t].sub_mul_assign(c, &a.field().one());
                    }
                }
                rel.insert(v);
            }
        }
    }
    Ok(p * q - rel.dim())
}

/// `A (x)_B M` for a left module `M` over the subalgebra `B`, whose action
/// matrices are indexed by the canonical basis of `b`.
pub fn induce_module(a: &Algebra, b: &AlgSubspace, m: &ModuleRep) -> Result<ModuleRep> {
    if b.kind != ClosureKind::Subalgebra {
        return Err(Error::NotASubalgebra);
    }
    if m.side() != Side::Left || m.actions().len() != b.dim() {
        return Err(Error::Precondition(
            "module is not a left module over the subalgebra".into(),
        ));
    }
    let n = a.dim();
    let d = m.dim();
    let f = a.field();
    let mut rel = EchelonBuilder::new(f, n * d);
    for s in 0..n {
        for (t, beta) in b.space.basis_rows().iter().enumerate() {
            let sb = a.mul_basis_left(s, beta);
            let act = &m.actions()[t];
            for u in 0..d {
                let mut v = f.zeros(n * d);
                for (k, c) in sb.iter().enumerate() {
                    if !c.is_zero() {
                        v[k * d + u].add_assign_ref(c);
                    }
                }
                for w in 0..d {
                    let c = act.get(w, u);
                    if !c.is_zero() {
                        v[s * d + w].sub_mul_assign(c, &f.one());
                    }
                }
                rel.insert(v);
            }
        }
    }
    let rel = rel.finish();
    let cols = rel.complement_columns();
    let q = cols.len();
    let mut actions = Vec::with_capacity(n);
    for k in 0..n {
        let mut mat = Matrix::zeros(f, q, q);
        for (ci, &c) in cols.iter().enumerate() {
            let (s, u) = (c / d, c % d);
            let mut v = f.zeros(n * d);
            for (r, x) in a.product_terms(k, s) {
                v[r * d + u] = x.clone();
            }
            let red = rel.reduce(&v);
            for (ti, &t) in cols.iter().enumerate() {
                if !red[t].is_zero() {
                    mat.set(ti, ci, red[t].clone());
                }
            }
        }
        actions.push(mat);
    }
    ModuleRep::new(f, Side::Left, q, actions)
}

/// Projective-cover criterion over an elementary algebra: `M` is projective
/// iff `dim M = sum_i m_i dim P(i)` where `m_i` are the top multiplicities.
pub fn is_projective_module(m: &ModuleRep, acting: &Algebra, frame: &IdempotentFrame) -> Result<bool> {
    if !is_elementary(acting, frame) {
        return Err(Error::Unsupported(
            "projectivity test needs an elementary algebra".into(),
        ));
    }
    let rad = radical(acting);
    let top = m.top_vector(&frame.idempotents, rad.space.basis_rows());
    let mut cover = 0;
    for (mult, e) in top.iter().zip(&frame.idempotents) {
        if *mult == 0 {
            continue;
        }
        let p = match m.side() {
            Side::Left => left_ideal_closure(acting, &[e.clone()]),
            Side::Right => right_ideal_closure(acting, &[e.clone()]),
        };
        cover += mult * p.dim();
    }
    Ok(cover == m.dim())
}
