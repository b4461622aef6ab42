use crate::output::{self, Format, Record};
use crate::source;
use crate::{CompareArgs, ConstructCmd, FactorCheck, Input, LemmaArgs, SpectralArgs, TheoremArgs};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use parfact::factor::{decide, decide_lovasz, FactorMethod, FactorSpec, DEFAULT_LOVASZ_CAP};
use parfact::graph::{clique_join, h_extremal, write_graph6, Graph, VertexSet};
use parfact::harness::{
    verify_lemma_no_factor, verify_main_theorem, verify_spectral_lemmas, verify_zhw, ScanMode, TheoremScan,
};
use parfact::spectral::{
    char_poly_exact, full_spectrum, l_ns, spectral_radius, IntPolynomial, LargestRoot, RadiusComparator,
};
use serde_json::{json, Map, Value};
use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Capacity(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Capacity(_) => 3,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Capacity(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<parfact::Error> for CliError {
    fn from(e: parfact::Error) -> Self {
        if e.is_capacity() {
            CliError::Capacity(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type Outcome = Result<u8, CliError>;

fn graph_fields(g: &Graph) -> Map<String, Value> {
    let mut f = Map::new();
    f.insert("graph6".into(), write_graph6(g).into());
    f.insert("n".into(), g.order().into());
    f.insert("m".into(), g.edge_count().into());
    f
}

fn label<T: serde::Serialize>(t: &T) -> String {
    match serde_json::to_value(t) {
        Ok(Value::String(s)) => s,
        Ok(v) => v.to_string(),
        Err(_) => String::new(),
    }
}

fn set_text(s: VertexSet) -> String {
    let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// Runs `op` on the single `--graph` or on every line of `--batch`.
///
/// Batch exit code: 1 if any line failed for a reason other than capacity,
/// else 3 if any hit a capacity limit, else 0.
fn run_graphs<F>(input: &Input, format: Format, mut op: F) -> Outcome
where
    F: FnMut(&Graph) -> parfact::Result<Record>,
{
    if let Some(src) = &input.graph {
        let g = source::resolve(src)?;
        output::emit(format, &[op(&g)?])?;
        return Ok(0);
    }
    let path = input.batch.as_ref().expect("clap enforces one input");
    let lines = source::batch_lines(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut records = Vec::with_capacity(lines.len());
    let mut code = 0;
    for (no, line) in lines {
        match source::inline(&line).and_then(|g| op(&g)) {
            Ok(mut r) => {
                r.fields.insert("line".into(), no.into());
                records.push(r);
            }
            Err(e) => {
                code = match (code, e.is_capacity()) {
                    (1, _) | (_, false) => 1,
                    _ => 3,
                };
                eprintln!("line {no}: {e}");
                records.push(Record::error(no, &line, e.to_string()));
            }
        }
    }
    output::emit(format, &records)?;
    Ok(code)
}

pub fn factor_check(args: &FactorCheck, format: Format) -> Outcome {
    let spec = FactorSpec::new(args.a, args.b)?;
    let method: FactorMethod = args.method.parse()?;
    run_graphs(&args.input, format, |g| {
        let res = decide(g, spec, method)?;
        let certificate = match res.certificate {
            None if args.certificate && !res.is_yes() => decide_lovasz(g, spec, DEFAULT_LOVASZ_CAP)?.certificate,
            c => c,
        };
        let mut f = graph_fields(g);
        f.insert("a".into(), args.a.into());
        f.insert("b".into(), args.b.into());
        f.insert("method".into(), args.method.clone().into());
        f.insert("decision".into(), label(&res.decision).into());
        let mut text = label(&res.decision);
        if let Some(edges) = &res.factor_edges {
            f.insert("factor_edges".into(), serde_json::to_value(edges).expect("edges"));
            let es: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            text.push_str(&format!("  F = {}", es.join(" ")));
        }
        if let Some(c) = &certificate {
            f.insert("certificate".into(), serde_json::to_value(c).expect("certificate"));
            text.push_str(&format!(
                "  S = {} T = {} eta = {} q = {}",
                set_text(c.s),
                set_text(c.t),
                c.eta,
                c.q
            ));
        }
        Ok(Record { fields: f, text })
    })
}

#[derive(Clone, Copy)]
pub enum SpectralOp {
    Radius,
    Spectrum,
    Charpoly,
}

fn poly_text(p: &IntPolynomial) -> String {
    let mut out = String::new();
    for k in (0..=p.degree()).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let unit = mag == 1.into();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !unit {
                    out.push_str(&mag.to_string());
                }
                out.push('x');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn positive_tol(tol: f64) -> parfact::Result<f64> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(parfact::Error::Parameter(format!("tolerance must be positive, got {tol}")))
    }
}

pub fn spectral(args: &SpectralArgs, op: SpectralOp, format: Format) -> Outcome {
    let tol = positive_tol(args.tol.unwrap_or(match op {
        SpectralOp::Radius => 1e-10,
        _ => 1e-12,
    }))?;
    run_graphs(&args.input, format, |g| {
        let mut f = graph_fields(g);
        let text = match op {
            SpectralOp::Radius => {
                let e = spectral_radius(g, tol)?;
                f.insert("lo".into(), e.lo.into());
                f.insert("hi".into(), e.hi.into());
                f.insert("rho".into(), e.midpoint().into());
                f.insert("method".into(), label(&e.method).into());
                f.insert("iterations".into(), e.iterations.into());
                f.insert("converged".into(), e.converged.into());
                format!("{:.12}  [{:.12}, {:.12}]", e.midpoint(), e.lo, e.hi)
            }
            SpectralOp::Spectrum => {
                let s = full_spectrum(g, tol)?;
                f.insert("values".into(), json!(s.values));
                f.insert("sweeps".into(), s.sweeps.into());
                f.insert("converged".into(), s.converged.into());
                let vs: Vec<String> = s.values.iter().map(|v| format!("{v:.12}")).collect();
                vs.join(" ")
            }
            SpectralOp::Charpoly => {
                let p = char_poly_exact(g);
                let coeffs: Vec<String> = (0..=p.degree()).rev().map(|k| p.coeff(k).to_string()).collect();
                f.insert("coefficients".into(), json!(coeffs));
                let mut text = poly_text(&p);
                let root = LargestRoot::isolate(&p).map(|mut r| {
                    r.refine_to(&BigRational::from_float(tol).expect("finite tolerance"));
                    (r.lo().to_f64().unwrap_or(f64::NAN), r.hi().to_f64().unwrap_or(f64::NAN))
                });
                match root {
                    Some((lo, hi)) => {
                        f.insert("largest_root".into(), json!({ "lo": lo, "hi": hi }));
                        text.push_str(&format!("  largest root in [{lo:.12}, {hi:.12}]"));
                    }
                    None => {
                        f.insert("largest_root".into(), Value::Null);
                    }
                }
                text
            }
        };
        Ok(Record { fields: f, text })
    })
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

pub fn compare(args: &CompareArgs, format: Format) -> Outcome {
    let reference = source::resolve(&args.against)?;
    let cmp = RadiusComparator::with_tol(&reference, positive_tol(args.tol)?)?;
    let against = write_graph6(&reference);
    let rho_against = cmp.enclosure().midpoint();
    run_graphs(&args.input, format, |g| {
        let enc = spectral_radius(g, cmp.tol())?;
        let c = cmp.compare_with_enclosure(g, &enc);
        let mut f = graph_fields(g);
        f.insert("against".into(), against.clone().into());
        f.insert("ordering".into(), ordering_name(c.ordering).into());
        f.insert("decision".into(), label(&c.decision).into());
        f.insert("rho".into(), enc.midpoint().into());
        f.insert("rho_against".into(), rho_against.into());
        let text = format!(
            "{} ({})  {:.12} vs {:.12}",
            ordering_name(c.ordering),
            label(&c.decision),
            enc.midpoint(),
            rho_against
        );
        Ok(Record { fields: f, text })
    })
}

pub fn construct(cmd: &ConstructCmd, format: Format) -> Outcome {
    let g = match cmd {
        ConstructCmd::H { n, a } => h_extremal(*n, *a)?,
        ConstructCmd::L { n, s } => l_ns(*n, *s)?.0,
        ConstructCmd::CliqueJoin { s, parts } => clique_join(*s, parts)?,
    };
    let f = graph_fields(&g);
    output::emit(format, &[Record { fields: f, text: write_graph6(&g) }])?;
    Ok(0)
}

pub fn theorem(args: &TheoremArgs, format: Format) -> Outcome {
    let mode: ScanMode = args.mode.parse()?;
    let mut cfg = TheoremScan::new(args.a, args.b, args.n, mode);
    cfg.seed = args.seed;
    cfg.samples = args.samples;
    cfg.jobs = args.jobs;
    let r = verify_main_theorem(&cfg)?;
    for note in &r.params.notes {
        eprintln!("note: {note}");
    }
    let text = || {
        let c = &r.counts;
        let mut s = format!(
            "theorem (a,b)=({},{}) n={} mode={}\n",
            r.params.a,
            r.params.b,
            r.params.n,
            label(&r.params.mode)
        );
        s.push_str(&format!(
            "scanned {}, below threshold {}, candidates {} ({} float, {} exact), extremal {}, factor yes {}\n",
            c.scanned,
            c.below_threshold,
            c.spectral_candidates,
            r.decisions.float,
            r.decisions.exact,
            c.recognized_extremal,
            c.factor_yes
        ));
        s.push_str(&format!(
            "extremal {}: recognized {}, has factor {}\n",
            r.extremal.graph6, r.extremal.recognized, r.extremal.has_factor
        ));
        for v in &r.violations {
            s.push_str(&format!("violation {v}\n"));
        }
        s.push_str(if r.confirmed() { "confirmed\n" } else { "NOT confirmed\n" });
        s
    };
    output::emit_report(format, || r.to_json(), || r.to_csv(), text)?;
    Ok(if r.confirmed() { 0 } else { 1 })
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bad = || CliError::Usage(format!("bad range '{s}', expected LO..HI"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..=hi)
}

pub fn lemma(args: &LemmaArgs, format: Format) -> Outcome {
    let need = |name: &str| CliError::Usage(format!("--which {} needs {name}", args.which));
    let r = match args.which.as_str() {
        "nofactor" => {
            let a = args.a.ok_or_else(|| need("-a"))?;
            let b = args.b.ok_or_else(|| need("-b"))?;
            if args.n.is_empty() {
                return Err(need("-n"));
            }
            verify_lemma_no_factor(a, b, &args.n)?
        }
        "zhw" => {
            let s = args.s.ok_or_else(|| need("-s"))?;
            let [n] = args.n[..] else {
                return Err(need("exactly one -n"));
            };
            verify_zhw(s, n, args.q_max)?
        }
        _ => verify_spectral_lemmas(parse_range(&args.s_range)?, parse_range(&args.n_range)?)?,
    };
    let text = || {
        let mut s = format!(
            "lemma {}: {} points, {} passed, {} failed",
            r.lemma, r.counts.points, r.counts.passed, r.counts.failed
        );
        if let Some(m) = r.min_slack {
            s.push_str(&format!(", min slack {m:.6e}"));
        }
        s.push('\n');
        for p in r.points.iter().filter(|p| !p.pass) {
            s.push_str(&format!("failed {}: {}\n", p.point, p.detail));
        }
        s
    };
    output::emit_report(format, || r.to_json(), || r.to_csv(), text)?;
    Ok(if r.passed() { 0 } else { 1 })
}
