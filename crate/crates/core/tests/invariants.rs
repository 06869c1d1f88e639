use std::collections::BTreeSet;

use reedylab::algebra::{
    induce_module, quotient, radical, tensor_dim_over_corner, AlgSubspace, Algebra, ModuleRep, Side,
};
use reedylab::constructors::{
    a2_presentation, binomial, build_quiver_algebra, diamond, simplex_algebra, tensor_reedy, upper_triangular,
    MonotoneMap,
};
use reedylab::corpus::{diamond_structure, standard_corpus};
use reedylab::linalg::{Field, Matrix};
use reedylab::qh::{directed_qh_check, heredity_chain_verify, WeightOrder};
use reedylab::reedy::{characterization_crosscheck, layer_check, recursive_check, structural_identities, verify_reedy};

#[test]
fn quotient_dimensions_add_up() {
    for item in standard_corpus() {
        let a = &item.structure.algebra;
        let mut ideals = vec![radical(a)];
        if let Ok(chain) = heredity_chain_verify(a, &item.structure.frame) {
            for l in chain.layers {
                ideals.push(AlgSubspace::ideal(a, l.ideal).unwrap());
            }
        }
        for j in ideals {
            let (q, _) = quotient(a, &j).unwrap();
            assert_eq!(q.dim() + j.dim(), a.dim(), "{}", item.name);
            assert!(q.validate().is_valid());
        }
    }
}

#[test]
fn tensor_over_the_unit_is_the_algebra() {
    for item in standard_corpus() {
        let a = &item.structure.algebra;
        assert_eq!(tensor_dim_over_corner(a, a.unit()).unwrap(), a.dim(), "{}", item.name);
    }
}

#[test]
fn induction_along_the_identity() {
    for item in standard_corpus().into_iter().take(8) {
        let a = &item.structure.algebra;
        let full = AlgSubspace::subalgebra(a, a.full_space()).unwrap();
        let reg = ModuleRep::regular_submodule(a, Side::Left, &a.full_space()).unwrap();
        let ind = induce_module(a, &full, &reg).unwrap();
        assert_eq!(ind.dim(), a.dim());
        assert!(ind.validate(a));
    }
}

#[test]
fn induction_from_the_frame_gives_projectives() {
    // A (x)_S k_i = A e_i for S spanned by orthogonal idempotents
    let (a, frame) = diamond(Field::Prime(3), [0, 1, 1, 2]);
    let s = AlgSubspace::subalgebra(&a, frame.s_space(&a)).unwrap();
    let f = a.field();
    for (i, e) in frame.idempotents.iter().enumerate() {
        let actions = s
            .space
            .basis_rows()
            .iter()
            .map(|b| {
                let mut m = Matrix::zeros(f, 1, 1);
                if b == e {
                    m.set(0, 0, f.one());
                }
                m
            })
            .collect();
        let k_i = ModuleRep::new(f, Side::Left, 1, actions).unwrap();
        let ind = induce_module(&a, &s, &k_i).unwrap();
        let ae = reedylab::algebra::left_ideal_closure(&a, &[e.clone()]);
        assert_eq!(ind.dim(), ae.dim(), "weight {i}");
        assert!(ind.validate(&a));
    }
}

#[test]
fn tensor_product_is_associative() {
    let q = Field::Rationals;
    let x = upper_triangular(2, q);
    let y = simplex_algebra(1, q).algebra;
    let z = diamond(q, [0, 1, 1, 2]).0;
    let left = x.tensor(&y).unwrap().tensor(&z).unwrap();
    let right = x.tensor(&y.tensor(&z).unwrap()).unwrap();
    assert_eq!(left.mult(), right.mult());
    assert_eq!(left.unit(), right.unit());
}

fn isomorphic_by_permutation(a: &Algebra, b: &Algebra) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for k in 0..n {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    a.dim() == b.dim()
        && perms(a.dim()).into_iter().any(|p| {
            (0..a.dim()).all(|i| {
                (0..a.dim()).all(|j| {
                    let lhs: BTreeSet<_> = a.product_terms(i, j).iter().map(|(k, c)| (p[*k], c.clone())).collect();
                    let rhs: BTreeSet<_> = b.product_terms(p[i], p[j]).iter().cloned().collect();
                    lhs == rhs
                })
            })
        })
}

#[test]
fn arrow_quiver_is_upper_triangular() {
    for f in [Field::Rationals, Field::Prime(2), Field::Prime(5)] {
        let a2 = build_quiver_algebra(&a2_presentation(), f).unwrap().algebra;
        assert!(isomorphic_by_permutation(&a2, &upper_triangular(2, f)));
    }
}

#[test]
fn monotone_maps_factor_uniquely() {
    for n in 0..=4 {
        let mut total = 0;
        for i in 0..=n {
            for j in 0..=n {
                let maps = MonotoneMap::enumerate(i, j);
                assert_eq!(maps.len(), binomial(i + j + 1, i + 1));
                total += maps.len();
                for m in &maps {
                    let (epi, mono) = m.epi_mono();
                    assert!(epi.is_surjective() && mono.is_injective());
                    assert_eq!(mono.after(&epi).as_ref(), Some(m));
                }
                // maps i -> j correspond to (surjection i -> k, injection k -> j) pairs
                let pairs: usize = (0..=i.min(j))
                    .map(|k| {
                        MonotoneMap::enumerate(i, k)
                            .iter()
                            .filter(|e| e.is_surjective())
                            .count()
                            * MonotoneMap::enumerate(k, j).iter().filter(|m| m.is_injective()).count()
                    })
                    .sum();
                assert_eq!(pairs, maps.len());
            }
        }
        if n <= 2 {
            assert_eq!(simplex_algebra(n, Field::Rationals).algebra.dim(), total);
        }
    }
}

#[test]
fn direct_checks_agree_across_the_corpus() {
    for item in standard_corpus() {
        let r = &item.structure;
        let rep = verify_reedy(r);
        assert_eq!(rep.overall, item.expect_reedy, "{}", item.name);
        let cross = characterization_crosscheck(r).unwrap();
        assert!(cross.agree, "{}", item.name);
        if let Ok(layers) = layer_check(r) {
            assert!(layers.agree, "{}", item.name);
            assert_eq!(layers.reedy, rep.overall, "{}", item.name);
        }
    }
}

#[test]
fn reedy_factorization_counts() {
    for item in standard_corpus().into_iter().filter(|i| i.expect_reedy) {
        let r = &item.structure;
        let a = &r.algebra;
        let rep = verify_reedy(r);
        assert_eq!(rep.total_domain, a.dim(), "{}", item.name);
        assert_eq!(rep.total_codomain, a.dim(), "{}", item.name);

        let layers = layer_check(r).unwrap();
        let chain = heredity_chain_verify(a, &r.frame).unwrap();
        assert!(chain.overall, "{}", item.name);
        let mut prev = 0;
        for (l, c) in layers.layers.iter().zip(&chain.layers) {
            assert_eq!(l.codomain, c.ideal_dim - prev, "{}", item.name);
            prev = c.ideal_dim;
        }
        assert_eq!(prev, a.dim());
        assert_eq!(layers.layers.iter().map(|l| l.codomain).sum::<usize>(), a.dim());

        assert!(structural_identities(r).unwrap().holds, "{}", item.name);
    }
}

#[test]
fn simple_standards_give_a_heredity_chain() {
    for item in standard_corpus() {
        let r = &item.structure;
        let order = WeightOrder::from_frame(&r.frame);
        if directed_qh_check(&r.algebra, &r.frame, &order).simple_standards {
            assert!(
                heredity_chain_verify(&r.algebra, &r.frame).unwrap().overall,
                "{}",
                item.name
            );
        }
    }
}

#[test]
fn recursive_criterion_is_consistent_at_every_cut() {
    for item in standard_corpus()
        .into_iter()
        .filter(|i| i.structure.algebra.dim() <= 31)
    {
        let r = &item.structure;
        if !reedylab::reedy::setup_holds(r) {
            continue;
        }
        for cut in r.frame.occupied_levels() {
            let rep = recursive_check(r, cut).unwrap();
            assert!(rep.consistent, "{} cut {cut}", item.name);
            if item.expect_reedy {
                assert!(rep.hypothesis && rep.triple, "{} cut {cut}", item.name);
            }
        }
    }
}

#[test]
fn tensor_products_of_reedy_structures_are_reedy() {
    let d = diamond_structure([0, 1, 2, 3], true);
    let s1 = simplex_algebra(1, Field::Rationals).structure;
    for (x, y) in [(&d, &s1), (&s1, &d), (&s1, &s1)] {
        let t = tensor_reedy(x, y).unwrap();
        assert_eq!(t.algebra.dim(), x.algebra.dim() * y.algebra.dim());
        assert!(verify_reedy(&t).overall);
    }
}
