use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use arcgeom::curvefinder::{
    almost_phi, compute_bounds, coprime_certificate, rho_system, CertificateOutcome, CurveError,
};
use arcgeom::dualcurve::{build_dual_curve, verify_dual, DualReport};
use arcgeom::search::{classify_with, extensions, kestenband, ClassifyOptions, SearchError};
use arcgeom::socle::{socle, vanishing_space};
use arcgeom::ttform::{build_f, verify_f, FReport};
use arcgeom::wire::{self, ArcDoc, TTFormDoc};
use arcgeom::{build_tangent_system, check_lemma_of_tangents, Arc, ArcViolation, Field, LemmaReport, ProjPoint};

/// Exact computations with arcs in PG(2,q).
#[derive(Parser, Debug)]
#[command(name = "arcs", version)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for parallel sections (results do not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print run metadata (version, timing) to stderr.
    #[arg(long, global = true)]
    meta: bool,
    #[command(subcommand)]
    cmd: Top,
}

#[derive(Subcommand, Debug)]
enum Top {
    /// Operations on a single arc, or searches producing arcs.
    #[command(subcommand)]
    Arc(ArcCmd),
    /// Degree bounds for an arc of deficiency t.
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        t: u32,
        /// Curve degree for the point bound on a curve.
        #[arg(long)]
        dprime: Option<u32>,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Arc JSON file, or `-` for stdin. Objects with an "arc" member are accepted.
    file: PathBuf,
}

#[derive(Subcommand, Debug)]
enum ArcCmd {
    /// Check that the points form an arc.
    Validate(Input),
    /// Tangent lines and scaled tangent forms f_a.
    Tangents {
        #[command(flatten)]
        input: Input,
        /// Base point e as `x,y,z` (default: first point).
        #[arg(long, value_delimiter = ',')]
        base: Option<Vec<i64>>,
    },
    /// Check f_x(y) = (−1)^{t+1} f_y(x) on all pairs.
    LemmaCheck(Input),
    /// The dual curve φ through the tangents.
    Dual(Input),
    /// A socle and the vanishing space at degree r.
    Socle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: u32,
    },
    /// The (t,t)-form F.
    Ttform(Input),
    /// The ρ_w system and its gcd φ.
    Rho(Input),
    /// Two coprime curves through the arc.
    Curves(Input),
    /// Projective classes of arcs of a given size.
    Classify {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        size: usize,
        /// Keep complete arcs only.
        #[arg(long)]
        complete: bool,
        /// Run even when q exceeds the exhaustive budget.
        #[arg(long)]
        allow_large_q: bool,
    },
    /// The Kestenband arc for an odd square q.
    Kestenband {
        #[arg(long)]
        q: u32,
    },
}

enum Outcome {
    Ok(Vec<Value>),
    /// A mathematical check failed; the record explains why.
    Fail(Value),
}

fn ok(v: Value) -> anyhow::Result<Outcome> {
    Ok(Outcome::Ok(vec![v]))
}

fn read_input(input: &Input) -> anyhow::Result<Value> {
    let mut text = String::new();
    if input.file.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&input.file)
            .with_context(|| format!("cannot read {}", input.file.display()))?;
    }
    // JSON-lines input: take the first line that carries an arc.
    if let Ok(v) = serde_json::from_str::<Value>(&text) {
        return Ok(v);
    }
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let v: Value = serde_json::from_str(line).context("malformed JSON")?;
        if v.get("points").is_some() || v.get("arc").is_some() {
            return Ok(v);
        }
    }
    bail!("no arc found in {}", input.file.display())
}

fn load_arc(v: &Value) -> anyhow::Result<Arc> {
    Ok(wire::arc_from_doc(&wire::arc_doc_in(v)?)?)
}

fn pt(field: &Field, x: &ProjPoint) -> Value {
    serde_json::to_value(wire::point_to_wire(field, x)).expect("points serialize")
}

fn arc_json(arc: &Arc) -> Value {
    serde_json::to_value(wire::arc_to_doc(arc)).expect("arcs serialize")
}

fn run(cmd: Top) -> anyhow::Result<Outcome> {
    match cmd {
        Top::Bounds { q, p, t, dprime } => {
            let b = compute_bounds(q, p, t, dprime)?;
            ok(wire::bounds_to_json(&b))
        }
        Top::Arc(c) => run_arc(c),
    }
}

fn run_arc(cmd: ArcCmd) -> anyhow::Result<Outcome> {
    match cmd {
        ArcCmd::Validate(input) => {
            let v = read_input(&input)?;
            let doc: ArcDoc = wire::arc_doc_in(&v)?;
            let (field, pts) = wire::point_set_from_doc(&doc)?;
            match Arc::new(&field, &pts) {
                Ok(arc) => ok(json!({
                    "valid": true,
                    "q": field.q(),
                    "size": arc.len(),
                    "t": arc.deficiency(),
                    "arc": arc_json(&arc),
                })),
                Err(ArcViolation::Duplicate(x)) => Ok(Outcome::Fail(json!({
                    "valid": false,
                    "violation": "duplicate",
                    "points": [pt(&field, &x)],
                }))),
                Err(ArcViolation::Collinear(xs)) => Ok(Outcome::Fail(json!({
                    "valid": false,
                    "violation": "collinear",
                    "points": xs.iter().map(|x| pt(&field, x)).collect::<Vec<_>>(),
                }))),
            }
        }
        ArcCmd::Tangents { input, base } => {
            let arc = load_arc(&read_input(&input)?)?;
            let f = arc.field();
            let e = match base {
                Some(b) => match b[..] {
                    [x, y, z] => Some(ProjPoint::from_ints(f, [x, y, z])?),
                    _ => bail!("--base takes three coordinates"),
                },
                None => None,
            };
            let sys = build_tangent_system(&arc, e.as_ref())?;
            let rows: Vec<Value> = arc
                .points()
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    json!({
                        "point": pt(f, a),
                        "lines": sys.factors(i).iter().map(|l| pt(f, &l.as_dual_point())).collect::<Vec<_>>(),
                        "form": wire::poly_to_doc(sys.form(i)),
                    })
                })
                .collect();
            ok(json!({
                "arc": arc_json(&arc),
                "t": sys.t(),
                "base": pt(f, &sys.base_point()),
                "tangents": rows,
            }))
        }
        ArcCmd::LemmaCheck(input) => {
            let arc = load_arc(&read_input(&input)?)?;
            let f = arc.field();
            let sys = build_tangent_system(&arc, None)?;
            match check_lemma_of_tangents(&sys) {
                LemmaReport::Pass => ok(json!({"t": sys.t(), "pairs": arc.len() * (arc.len() - 1), "pass": true})),
                LemmaReport::Counterexample { x, y, fx_at_y, fy_at_x } => Ok(Outcome::Fail(json!({
                    "t": sys.t(),
                    "pass": false,
                    "x": pt(f, &x),
                    "y": pt(f, &y),
                    "fx_at_y": wire::fe_to_wire(f, fx_at_y),
                    "fy_at_x": wire::fe_to_wire(f, fy_at_x),
                }))),
            }
        }
        ArcCmd::Dual(input) => {
            let arc = load_arc(&read_input(&input)?)?;
            let f = arc.field();
            let sys = build_tangent_system(&arc, None)?;
            let d = build_dual_curve(&sys)?;
            let out = json!({
                "arc": arc_json(&arc),
                "t": sys.t(),
                "m": d.m(),
                "phi": wire::dual_poly_to_doc(d.phi()),
            });
            match verify_dual(&sys, &d) {
                DualReport::Pass => ok(out),
                DualReport::FormMismatch { a } => Ok(Outcome::Fail(json!({"pass": false, "form_mismatch": pt(f, &a)}))),
                DualReport::TangentOffCurve { a, tangent } => Ok(Outcome::Fail(json!({
                    "pass": false,
                    "point": pt(f, &a),
                    "tangent_off_curve": pt(f, &tangent),
                }))),
            }
        }
        ArcCmd::Socle { input, degree } => {
            let arc = load_arc(&read_input(&input)?)?;
            let f = arc.field();
            let s = socle(f, arc.points(), degree, &[])?;
            let v = vanishing_space(f, arc.points(), degree);
            ok(json!({
                "arc": arc_json(&arc),
                "degree": degree,
                "socle": s.points().iter().map(|x| pt(f, x)).collect::<Vec<_>>(),
                "dim": v.dim(),
                "basis": v.basis().iter().map(wire::poly_to_doc).collect::<Vec<_>>(),
            }))
        }
        ArcCmd::Ttform(input) => {
            let arc = load_arc(&read_input(&input)?)?;
            let f = arc.field();
            let sys = build_tangent_system(&arc, None)?;
            let form = build_f(&sys)?;
            let report = verify_f(&sys, &form);
            let mut out = serde_json::to_value(wire::ttform_to_doc(&form))?;
            out["arc"] = arc_json(&arc);
            out["base"] = pt(f, &sys.base_point());
            match report {
                FReport::Pass => ok(out),
                other => Ok(Outcome::Fail(json!({"pass": false, "report": format!("{other:?}")}))),
            }
        }
        ArcCmd::Rho(input) => {
            let v = read_input(&input)?;
            let arc = load_arc(&v)?;
            let f = arc.field();
            let t = arc.deficiency() as u32;
            // A ttform document carries F; otherwise compute it.
            let form = if v.get("terms").is_some() {
                let doc: TTFormDoc = serde_json::from_value(v.clone())?;
                if doc.t != t {
                    bail!("form has bidegree ({0}, {0}) but the arc has t = {t}", doc.t);
                }
                wire::ttform_from_doc(f, &doc)?
            } else {
                build_f(&build_tangent_system(&arc, None)?)?
            };
            let bounds = compute_bounds(f.q(), f.p(), t, None)?;
            let rho = rho_system(&form, &bounds);
            let vanish = rho
                .rhos
                .iter()
                .all(|(_, r)| arc.points().iter().all(|y| r.eval_point(y).is_zero()));
            let mut out = json!({
                "arc": arc_json(&arc),
                "t": t,
                "pe": rho.pe,
                "rhos": rho.rhos.iter().map(|(w, r)| json!({"w": w, "poly": wire::poly_to_doc(r)})).collect::<Vec<_>>(),
                "vanish_on_arc": vanish,
            });
            if f.p() != 2 {
                let phi = almost_phi(&arc, &rho, &vanishing_space(f, arc.points(), t))?;
                out["phi"] = serde_json::to_value(wire::poly_to_doc(&phi))?;
            }
            if vanish {
                ok(out)
            } else {
                Ok(Outcome::Fail(out))
            }
        }
        ArcCmd::Curves(input) => {
            let arc = load_arc(&read_input(&input)?)?;
            match coprime_certificate(&arc) {
                Ok(CertificateOutcome::Certificate(c)) => ok(wire::certificate_to_json(&c)),
                Ok(CertificateOutcome::ConicContainment(c)) => ok(json!({
                    "arc": arc_json(&arc),
                    "conic": wire::poly_to_doc(&c),
                })),
                Err(CurveError::NotFound(b)) => Ok(Outcome::Fail(json!({
                    "error": "not_found",
                    "message": "no coprime pair within the degree budget",
                    "bounds": wire::bounds_to_json(&b),
                }))),
                Err(e @ CurveError::AllGeneratorsZero) => Ok(Outcome::Fail(json!({
                    "error": "all_generators_zero",
                    "message": e.to_string(),
                }))),
                Err(e) => Err(e.into()),
            }
        }
        ArcCmd::Classify { q, size, complete, allow_large_q } => {
            let field = Field::of_order(q)?;
            let res = classify_with(&field, size, complete, ClassifyOptions { allow_large_q })?;
            Ok(Outcome::Ok(wire::classification_lines(&res)))
        }
        ArcCmd::Kestenband { q } => {
            let field = Field::of_order(q)?;
            let k = kestenband(&field, None)?;
            let h: Vec<Vec<Value>> = k
                .spec
                .h
                .iter()
                .map(|row| row.iter().map(|&c| json!(wire::fe_to_wire(&field, c))).collect())
                .collect();
            ok(json!({
                "arc": arc_json(&k.arc),
                "size": k.arc.len(),
                "complete": extensions(&k.arc).is_empty(),
                "h": h,
                "hermitians": k.hermitians.iter().map(wire::poly_to_doc).collect::<Vec<_>>(),
            }))
        }
    }
}

/// Short machine-readable kind for an input error.
fn error_kind(e: &anyhow::Error) -> &'static str {
    if e.downcast_ref::<arcgeom::wire::WireError>().is_some() {
        "bad_input"
    } else if e.downcast_ref::<SearchError>().is_some() {
        "search"
    } else if e.downcast_ref::<CurveError>().is_some() {
        "parameters"
    } else if e.downcast_ref::<std::io::Error>().is_some() {
        "io"
    } else {
        "input"
    }
}

fn emit(dest: &Option<PathBuf>, lines: &[Value]) -> std::io::Result<()> {
    let mut buf = Vec::new();
    for v in lines {
        serde_json::to_writer(&mut buf, v)?;
        buf.push(b'\n');
    }
    match dest {
        Some(p) => std::fs::write(p, buf),
        None => std::io::stdout().write_all(&buf),
    }
}

fn configure_jobs(jobs: Option<usize>) {
    let Some(n) = jobs else { return };
    if n <= 1 {
        arcgeom::par::set_sequential(true);
        return;
    }
    #[cfg(feature = "parallel")]
    {
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_jobs(cli.jobs);
    let start = Instant::now();
    let (code, lines) = match run(cli.cmd) {
        Ok(Outcome::Ok(lines)) => (0, lines),
        Ok(Outcome::Fail(v)) => (1, vec![v]),
        Err(e) => (2, vec![json!({"error": error_kind(&e), "message": format!("{e:#}")})]),
    };
    if let Err(e) = emit(&cli.output, &lines) {
        eprintln!("cannot write output: {e}");
        return ExitCode::from(2);
    }
    if cli.meta {
        eprintln!(
            "{}",
            json!({
                "version": env!("CARGO_PKG_VERSION"),
                "parallel": arcgeom::par::is_parallel(),
                "jobs": cli.jobs,
                "elapsed_ms": start.elapsed().as_millis() as u64,
                "exit": code,
            })
        );
    }
    ExitCode::from(code)
}
