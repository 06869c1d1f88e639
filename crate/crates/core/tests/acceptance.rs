//! Acceptance suite: one line per criterion with its time limit. Exits
//! non-zero if any criterion fails or runs over time.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reedylab::algebra::{quotient, radical, radical_is_nilpotent, IdempotentFrame};
use reedylab::constructors::{
    a2_presentation, binomial, build_quiver_algebra, diagonal_frame, diamond, diamond_presentation, matrix_algebra,
    simplex_algebra, tensor_reedy, upper_triangular,
};
use reedylab::corpus::{diamond_structure, standard_corpus, CorpusItem};
use reedylab::linalg::{Field, Matrix, Subspace};
use reedylab::qh::heredity_chain_verify;
use reedylab::reedy::{
    characterization_crosscheck, induced_corner, induced_quotient, layer_check, recursive_check, reedy_heredity_bottom,
    search_reedy, setup_holds, structural_identities, verify_reedy, ReedyStructure, SearchOptions,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verified(corpus: &[CorpusItem]) -> impl Iterator<Item = &CorpusItem> {
    corpus.iter().filter(|c| c.expect_reedy)
}

fn diamond_verdicts() -> Outcome {
    for (deg, plus) in [([1, 2, 3, 4], true), ([1, 2, 2, 3], true), ([4, 2, 3, 1], false)] {
        let r = diamond_structure(deg, plus);
        ensure(verify_reedy(&r).overall, || format!("{deg:?} not Reedy"))?;
    }
    let bad = reedylab::algebra::normalize_degrees(&[4, 3, 1, 2]);
    let (a2, f2) = diamond(Field::Prime(2), [0; 4]);
    let ex = search_reedy(&a2, &f2, &SearchOptions::exhaustive()).map_err(|e| e.to_string())?;
    ensure(!ex.is_empty(), || "exhaustive search over GF(2) found nothing".into())?;
    ensure(!ex.iter().any(|r| r.frame.degrees == bad), || {
        "GF(2) search found (4,3,1,2)".into()
    })?;
    let (aq, fq) = diamond(Field::Rationals, [0; 4]);
    let he = search_reedy(&aq, &fq, &SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure(!he.iter().any(|r| r.frame.degrees == bad), || {
        "heuristic search found (4,3,1,2)".into()
    })
}

fn matrix_algebra_empty() -> Outcome {
    for p in [2, 3] {
        let m2 = matrix_algebra(2, Field::Prime(p));
        for frame in [IdempotentFrame::unit(&m2), diagonal_frame(&m2, 2)] {
            let found = search_reedy(&m2, &frame, &SearchOptions::exhaustive()).map_err(|e| e.to_string())?;
            ensure(found.is_empty(), || {
                format!("GF({p}), {} idempotents: {} found", frame.len(), found.len())
            })?;
        }
    }
    Ok(())
}

fn hypothesis_needed() -> Outcome {
    let a = upper_triangular(2, Field::Rationals);
    let frame = IdempotentFrame::from_basis_labels(&a, &["E11", "E22"], &[0, 1]).map_err(|e| e.to_string())?;
    let s = frame.s_space(&a);
    let r = ReedyStructure::new(a, frame, s.clone(), s).map_err(|e| e.to_string())?;
    let rep = recursive_check(&r, 0).map_err(|e| e.to_string())?;
    ensure(
        rep.corner_reedy && rep.quotient_reedy && rep.multiplication_bijective,
        || {
            format!(
                "triple {:?}",
                (rep.corner_reedy, rep.quotient_reedy, rep.multiplication_bijective)
            )
        },
    )?;
    ensure(!rep.hypothesis, || "A = A+ A- reported".into())?;
    ensure(!verify_reedy(&r).overall, || "verify_reedy passed".into())
}

fn monotone_count(i: usize, j: usize) -> usize {
    // all maps {0..i} -> {0..j}, keep the non-decreasing ones
    let total = (j + 1).pow(i as u32 + 1);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let mut prev = 0;
            for _ in 0..=i {
                let v = c % (j + 1);
                c /= j + 1;
                if v < prev {
                    return false;
                }
                prev = v;
            }
            true
        })
        .count()
}

fn simplex_truncations() -> Outcome {
    for n in 0..=3 {
        let s = simplex_algebra(n, Field::Rationals).structure;
        ensure(verify_reedy(&s).overall, || format!("n = {n} not Reedy"))?;
        let blocks = reedylab::reedy::blocks(&s.algebra, &s.frame, &s.algebra.full_space());
        for i in 0..=n {
            for j in 0..=n {
                let d = blocks[j][i].dim();
                let b = binomial(i + j + 1, i + 1);
                let m = monotone_count(i, j);
                ensure(d == b && d == m, || format!("n = {n}, [{i}]->[{j}]: {d} vs {b} vs {m}"))?;
            }
        }
    }
    Ok(())
}

fn crosscheck(corpus: &[CorpusItem]) -> Outcome {
    for c in corpus {
        let x = characterization_crosscheck(&c.structure).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(x.agree, || {
            format!(
                "{}: {} {} {}",
                c.name, x.reedy, x.factorization.holds, x.subalgebras.holds
            )
        })?;
        ensure(x.reedy == c.expect_reedy, || format!("{}: unexpected verdict", c.name))?;
    }
    Ok(())
}

fn layers(corpus: &[CorpusItem]) -> Outcome {
    let mut negatives = 0;
    for c in corpus.iter().filter(|c| setup_holds(&c.structure)) {
        let rep = layer_check(&c.structure).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(rep.agree, || format!("{}: layer verdicts disagree", c.name))?;
        negatives += usize::from(!rep.reedy);
    }
    ensure(negatives > 0, || "no failing instance exercised".into())
}

fn closure(corpus: &[CorpusItem]) -> Outcome {
    let s1 = simplex_algebra(1, Field::Rationals).structure;
    let d = diamond_structure([1, 2, 2, 3], true);
    for t in [tensor_reedy(&d, &s1), tensor_reedy(&s1, &d)] {
        let t = t.map_err(|e| e.to_string())?;
        ensure(verify_reedy(&t).overall, || "tensor product not Reedy".into())?;
    }
    for c in verified(corpus) {
        let levels = c.structure.frame.occupied_levels();
        for &cut in &levels {
            let rep = induced_corner(&c.structure, cut).map_err(|e| format!("{}: {e}", c.name))?;
            ensure(rep.holds, || format!("{}: corner at {cut}", c.name))?;
        }
        for &cut in &levels[..levels.len() - 1] {
            let rep = induced_quotient(&c.structure, cut).map_err(|e| format!("{}: {e}", c.name))?;
            ensure(rep.holds, || format!("{}: quotient at {cut}", c.name))?;
        }
    }
    Ok(())
}

fn heredity(corpus: &[CorpusItem]) -> Outcome {
    for c in verified(corpus) {
        let r = &c.structure;
        let chain = heredity_chain_verify(&r.algebra, &r.frame).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(chain.overall, || format!("{}: heredity chain", c.name))?;
        let b = reedy_heredity_bottom(r).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(b.holds, || {
            format!("{}: bottom layer {} vs {}", c.name, b.domain, b.codomain)
        })?;
    }
    Ok(())
}

fn identities(corpus: &[CorpusItem]) -> Outcome {
    for c in verified(corpus) {
        let id = structural_identities(&c.structure).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(id.holds, || format!("{}: {id:?}", c.name))?;
    }
    Ok(())
}

fn random_matrix(rng: &mut ChaCha8Rng, field: Field) -> Matrix {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    let mut m = Matrix::zeros(field, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            // sparse entries make rank deficiency common
            if rng.gen_bool(0.5) {
                m.set(r, c, field.from_i64(rng.gen_range(-3..=3)));
            }
        }
    }
    m
}

fn kernel_suite(corpus: &[CorpusItem]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for field in [Field::Rationals, Field::Prime(2), Field::Prime(5)] {
        for t in 0..1000 {
            let m = random_matrix(&mut rng, field);
            let k = m.kernel();
            ensure(m.rank() + k.dim() == m.cols(), || format!("{field} #{t}: rank-nullity"))?;
            for v in k.basis_rows() {
                ensure(m.mul_vec(v).iter().all(|x| x.is_zero()), || {
                    format!("{field} #{t}: kernel")
                })?;
            }
            let (r, _) = m.rref();
            ensure(r.rref().0 == r, || format!("{field} #{t}: rref not idempotent"))?;
            let u = m.row_space();
            let w = random_matrix(&mut rng, field);
            if w.cols() == m.cols() {
                let w = w.row_space();
                let sum = u.sum(&w).map_err(|e| e.to_string())?;
                let int = u.intersect(&w).map_err(|e| e.to_string())?;
                ensure(sum.dim() + int.dim() == u.dim() + w.dim(), || {
                    format!("{field} #{t}: dimension formula")
                })?;
            }
        }
    }
    for c in corpus {
        let a = &c.structure.algebra;
        let rad = radical(a);
        ensure(radical_is_nilpotent(a, &rad.space), || {
            format!("{}: radical not nilpotent", c.name)
        })?;
        let (q, _) = quotient(a, &rad).map_err(|e| e.to_string())?;
        ensure(radical(&q).dim() == 0, || {
            format!("{}: quotient not semisimple", c.name)
        })?;
    }
    for field in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
        for p in [diamond_presentation(), a2_presentation()] {
            let qa = build_quiver_algebra(&p, field).map_err(|e| e.to_string())?;
            let rad: Subspace = radical(&qa.algebra).space;
            ensure(rad == qa.arrow_ideal, || {
                format!("{field}: radical differs from arrow ideal")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = standard_corpus();
    println!("corpus: {} structures built in {:.2?}", corpus.len(), start.elapsed());
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("diamond degree functions", 5, Box::new(diamond_verdicts)),
        (
            "2x2 matrix algebras have no Reedy structure",
            10,
            Box::new(matrix_algebra_empty),
        ),
        ("recursive criterion needs A = A+ A-", 1, Box::new(hypothesis_needed)),
        ("simplex truncations n <= 3", 30, Box::new(simplex_truncations)),
        (
            "three characterizations agree on the corpus",
            60,
            Box::new(|| crosscheck(&corpus)),
        ),
        (
            "layer criteria agree with verification",
            30,
            Box::new(|| layers(&corpus)),
        ),
        ("tensor, corner and quotient closure", 60, Box::new(|| closure(&corpus))),
        ("heredity chain and bottom layer", 30, Box::new(|| heredity(&corpus))),
        (
            "elementarity and dimension identities",
            10,
            Box::new(|| identities(&corpus)),
        ),
        (
            "linear algebra and radical kernels",
            30,
            Box::new(|| kernel_suite(&corpus)),
        ),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        let over = elapsed > Duration::from_secs(*limit);
        let status = match (&outcome, over) {
            (Ok(()), false) => "PASS",
            _ => "FAIL",
        };
        if status == "FAIL" {
            failed += 1;
        }
        let detail = match (&outcome, over) {
            (Err(e), _) => format!(" ({e})"),
            (Ok(()), true) => " (over time)".to_string(),
            _ => String::new(),
        };
        println!("{:>2} {status} {name} [{elapsed:.2?} / {limit}s]{detail}", k + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
