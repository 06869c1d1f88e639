use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use reedylab::algebra::{radical, Algebra, IdempotentFrame};
use reedylab::constructors::{
    build_quiver_algebra, diagonal_frame, dual_extension, matrix_algebra, simplex_algebra, tensor_reedy,
};
use reedylab::io::{
    algebra_file, read_algebra, read_json, read_quiver, reedy_file, to_json, write_text, LoadedAlgebra, OrderFile,
    ReedyFile,
};
use reedylab::linalg::Field;
use reedylab::qh::{delta_subalgebra_check, directed_qh_check, exact_borel_check, heredity_chain_verify, WeightOrder};
use reedylab::reedy::{
    characterization_crosscheck, recursive_check, search_reedy, setup_holds, verify_reedy, ReedyStructure, SearchMode,
    SearchOptions,
};

use crate::{Check, Command, ConstructKind, CorpusAction, Mode, SearchArgs, VerifyArgs};

/// Result of one command: exit code, machine-readable report and whatever
/// goes to the terminal.
#[derive(Debug)]
pub struct Outcome {
    pub code: u8,
    pub report: Option<Value>,
    pub stdout: Option<String>,
    pub message: Option<String>,
}

impl Outcome {
    fn input_error(msg: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            report: None,
            stdout: None,
            message: Some(format!("error: {}", msg.into())),
        }
    }
}

type Res<T> = std::result::Result<T, String>;

/// Relative input paths are resolved against `base`.
pub struct Context {
    pub base: PathBuf,
}

impl Context {
    pub fn cwd() -> Self {
        Context { base: PathBuf::new() }
    }

    pub fn resolve(&self, p: &Path) -> PathBuf {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            self.base.join(p)
        }
    }
}

pub fn run(cmd: &Command, ctx: &Context) -> Outcome {
    let r = match cmd {
        Command::Build {
            quiver,
            field,
            degrees,
            out,
        } => build(ctx, quiver, field, degrees.as_deref(), out.as_deref()),
        Command::Construct { kind } => construct(ctx, kind),
        Command::Verify(v) => verify(ctx, v),
        Command::Search(s) => search(ctx, s),
        Command::Corpus {
            action: CorpusAction::Run { dir },
        } => return crate::corpus::run(&ctx.resolve(dir)),
    };
    r.unwrap_or_else(Outcome::input_error)
}

pub fn parse_field(s: &str) -> Res<Field> {
    match s.trim() {
        "Q" => Ok(Field::Rationals),
        t => {
            let p = t
                .strip_prefix("GF:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("field must be Q or GF:p, got {s:?}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn parse_degrees(s: &str) -> Res<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("degree entry {part:?} is not name=value"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("bad degree in {part:?}"))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

fn apply_degrees(frame: &IdempotentFrame, map: &BTreeMap<String, usize>) -> Res<IdempotentFrame> {
    if let Some(k) = map.keys().find(|k| frame.index_of(k).is_none()) {
        return Err(format!("no idempotent named {k:?}"));
    }
    let degrees = frame
        .names
        .iter()
        .map(|n| map.get(n).copied().ok_or_else(|| format!("no degree given for {n:?}")))
        .collect::<Res<Vec<_>>>()?;
    Ok(frame.with_degrees(degrees))
}

fn load_algebra(ctx: &Context, path: &Path) -> Res<LoadedAlgebra> {
    read_algebra(&ctx.resolve(path)).map_err(|e| e.to_string())
}

fn load_reedy(ctx: &Context, files: &[PathBuf]) -> Res<(LoadedAlgebra, ReedyStructure)> {
    let (alg_path, reedy_path) = match files {
        [r] => {
            let rp = ctx.resolve(r);
            let file: ReedyFile = read_json(&rp).map_err(|e| e.to_string())?;
            let name = file
                .algebra
                .ok_or_else(|| format!("{} does not name its algebra file", r.display()))?;
            let dir = rp.parent().map(Path::to_path_buf).unwrap_or_default();
            (dir.join(name), rp)
        }
        [a, r] => (ctx.resolve(a), ctx.resolve(r)),
        _ => return Err("expected an algebra file and a Reedy file".into()),
    };
    let l = read_algebra(&alg_path).map_err(|e| e.to_string())?;
    let file: ReedyFile = read_json(&reedy_path).map_err(|e| e.to_string())?;
    let r = file.load(&l).map_err(|e| format!("{}: {e}", reedy_path.display()))?;
    Ok((l, r))
}

fn report_outcome(verdict: bool, report: Value, out: Option<&Path>, summary: String) -> Res<Outcome> {
    let text = to_json(&report);
    let stdout = match out {
        Some(p) => {
            write_text(p, &text).map_err(|e| e.to_string())?;
            None
        }
        None => Some(text),
    };
    Ok(Outcome {
        code: if verdict { 0 } else { 1 },
        report: Some(report),
        stdout,
        message: Some(summary),
    })
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

/// Reedy data goes next to the algebra file: `x.alg.json` -> `x.reedy.json`.
fn reedy_path(alg: &Path) -> PathBuf {
    let name = alg
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let stem = name
        .strip_suffix(".alg.json")
        .or_else(|| name.strip_suffix(".json"))
        .unwrap_or(&name);
    alg.with_file_name(format!("{stem}.reedy.json"))
}

fn write_construction(
    a: &Algebra,
    frame: Option<&IdempotentFrame>,
    r: Option<&ReedyStructure>,
    out: Option<&Path>,
) -> Res<Outcome> {
    let alg = algebra_file(a, frame);
    let mut summary = format!("dim {}", a.dim());
    let stdout = match out {
        Some(p) => {
            write_text(p, &to_json(&alg)).map_err(|e| e.to_string())?;
            if let Some(r) = r {
                let rp = reedy_path(p);
                let name = p.file_name().map(|s| s.to_string_lossy().into_owned());
                write_text(&rp, &to_json(&reedy_file(r, name.as_deref()))).map_err(|e| e.to_string())?;
                summary.push_str(&format!(", Reedy data in {}", rp.display()));
            }
            None
        }
        None => {
            let mut doc = json!({ "algebra": value(&alg) });
            if let Some(r) = r {
                doc["reedy"] = value(&reedy_file(r, None));
            }
            Some(to_json(&doc))
        }
    };
    Ok(Outcome {
        code: 0,
        report: Some(json!({ "dim": a.dim(), "reedy": r.is_some() })),
        stdout,
        message: Some(summary),
    })
}

fn build(ctx: &Context, quiver: &Path, field: &str, degrees: Option<&str>, out: Option<&Path>) -> Res<Outcome> {
    let field = parse_field(field)?;
    let p = read_quiver(&ctx.resolve(quiver)).map_err(|e| e.to_string())?;
    let q = build_quiver_algebra(&p, field).map_err(|e| e.to_string())?;
    let frame = match degrees {
        Some(d) => apply_degrees(&q.frame, &parse_degrees(d)?)?,
        None => q.frame.clone(),
    };
    let rad = radical(&q.algebra).dim();
    let mut o = write_construction(&q.algebra, Some(&frame), None, out)?;
    o.report = Some(json!({ "dim": q.algebra.dim(), "radical_dim": rad }));
    o.message = Some(format!("dim {}, radical dim {rad}", q.algebra.dim()));
    Ok(o)
}

fn construct(ctx: &Context, kind: &ConstructKind) -> Res<Outcome> {
    match kind {
        ConstructKind::Simplex { n, field, out } => {
            let s = simplex_algebra(*n, parse_field(field)?);
            let r = &s.structure;
            write_construction(&r.algebra, Some(&r.frame), Some(r), out.as_deref())
        }
        ConstructKind::Matrix { n, field, out } => {
            if *n == 0 {
                return Err("matrix size must be positive".into());
            }
            let a = matrix_algebra(*n, parse_field(field)?);
            let frame = diagonal_frame(&a, *n);
            write_construction(&a, Some(&frame), None, out.as_deref())
        }
        ConstructKind::Dualext {
            plus,
            minus,
            degrees,
            out,
        } => {
            let mut p = load_algebra(ctx, plus)?;
            let mut m = load_algebra(ctx, minus)?;
            if let Some(d) = degrees {
                let d = parse_degrees(d)?;
                p.frame = apply_degrees(&p.frame, &d)?;
                m.frame = apply_degrees(&m.frame, &d)?;
            }
            let r = dual_extension(&p.algebra, &p.frame, &m.algebra, &m.frame).map_err(|e| e.to_string())?;
            write_construction(&r.algebra, Some(&r.frame), Some(&r), out.as_deref())
        }
        ConstructKind::Tensor {
            first,
            second,
            reedy,
            out,
        } => match reedy {
            Some(files) => {
                let (_, r1) = load_reedy(ctx, &[first.clone(), files[0].clone()])?;
                let (_, r2) = load_reedy(ctx, &[second.clone(), files[1].clone()])?;
                let t = tensor_reedy(&r1, &r2).map_err(|e| e.to_string())?;
                write_construction(&t.algebra, Some(&t.frame), Some(&t), out.as_deref())
            }
            None => {
                let a = load_algebra(ctx, first)?;
                let b = load_algebra(ctx, second)?;
                let t = a.algebra.tensor(&b.algebra).map_err(|e| e.to_string())?;
                write_construction(&t, None, None, out.as_deref())
            }
        },
    }
}

fn load_order(ctx: &Context, path: Option<&Path>, frame: &IdempotentFrame) -> Res<WeightOrder> {
    match path {
        Some(p) => {
            let f: OrderFile = read_json(&ctx.resolve(p)).map_err(|e| e.to_string())?;
            f.load(frame).map_err(|e| e.to_string())
        }
        None => Ok(WeightOrder::from_frame(frame)),
    }
}

fn verify(ctx: &Context, v: &VerifyArgs) -> Res<Outcome> {
    let out = v.out.as_deref();
    let err = |e: reedylab::Error| e.to_string();
    if v.what == Check::Qh {
        let (a, frame) = if v.files.len() == 1 && is_algebra_file(&ctx.resolve(&v.files[0])) {
            let l = load_algebra(ctx, &v.files[0])?;
            (l.algebra, l.frame)
        } else {
            let (_, r) = load_reedy(ctx, &v.files)?;
            (r.algebra, r.frame)
        };
        let order = load_order(ctx, v.order.as_deref(), &frame)?;
        let frame = frame.with_degrees(order.levels.clone());
        let chain = heredity_chain_verify(&a, &frame).map_err(err)?;
        let directed = directed_qh_check(&a, &frame, &order);
        let verdict = chain.overall;
        let report = json!({ "check": "qh", "verdict": verdict, "chain": value(&chain), "directed": value(&directed) });
        return report_outcome(verdict, report, out, format!("quasi-hereditary: {verdict}"));
    }

    let (_, r) = load_reedy(ctx, &v.files)?;
    let order = load_order(ctx, v.order.as_deref(), &r.frame)?;
    let a = &r.algebra;
    let (name, verdict, body) = match v.what {
        Check::Qh => unreachable!(),
        Check::Reedy => {
            let rep = verify_reedy(&r);
            ("reedy", rep.overall, value(&rep))
        }
        Check::Borel => {
            let rep = exact_borel_check(a, &r.frame, &r.aminus, &order).map_err(err)?;
            ("borel", rep.holds, value(&rep))
        }
        Check::Delta => {
            let rep = delta_subalgebra_check(a, &r.frame, &r.aplus, &order).map_err(err)?;
            ("delta", rep.holds, value(&rep))
        }
        Check::Characterizations => {
            let rep = characterization_crosscheck(&r).map_err(err)?;
            ("characterizations", rep.agree && rep.reedy, value(&rep))
        }
        Check::Recursive => {
            if !setup_holds(&r) {
                let body = json!({ "setup_holds": false, "cuts": [] });
                ("recursive", false, body)
            } else {
                let cuts = match v.cut {
                    Some(c) => vec![c],
                    None => r.frame.occupied_levels(),
                };
                let reps = cuts
                    .iter()
                    .map(|&c| recursive_check(&r, c))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                let verdict = reps.iter().all(|x| x.hypothesis && x.triple);
                (
                    "recursive",
                    verdict,
                    json!({ "setup_holds": true, "cuts": value(&reps) }),
                )
            }
        }
    };
    let report = json!({ "check": name, "verdict": verdict, "report": body });
    report_outcome(verdict, report, out, format!("{name}: {verdict}"))
}

fn is_algebra_file(p: &Path) -> bool {
    std::fs::read_to_string(p)
        .ok()
        .and_then(|t| serde_json::from_str::<Value>(&t).ok())
        .is_some_and(|v| v.get("mult").is_some())
}

fn search(ctx: &Context, s: &SearchArgs) -> Res<Outcome> {
    let l = load_algebra(ctx, &s.algebra)?;
    let opts = SearchOptions {
        mode: match s.mode {
            Mode::Heuristic => SearchMode::Heuristic,
            Mode::Exhaustive => SearchMode::Exhaustive,
        },
        max_levels: s.max_levels,
        ..Default::default()
    };
    let found = search_reedy(&l.algebra, &l.frame, &opts).map_err(|e| e.to_string())?;
    let structures: Vec<Value> = found.iter().map(|r| value(&reedy_file(r, None))).collect();
    let mode = match s.mode {
        Mode::Heuristic => "heuristic",
        Mode::Exhaustive => "exhaustive",
    };
    let report = json!({ "mode": mode, "count": found.len(), "structures": structures });
    report_outcome(
        !found.is_empty(),
        report,
        s.out.as_deref(),
        format!("{} structures found", found.len()),
    )
}
