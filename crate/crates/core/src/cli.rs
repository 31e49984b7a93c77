//! Command-line front end. Every subcommand builds a [`Report`] holding both
//! the human text and the JSON form, so output is reproducible byte for byte.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BoundsOptions, BoundsReport};
use crate::certified::{Direction, Inequality, Interval, DEFAULT_MAX_BITS};
use crate::error::{Error, Result};
use crate::generate;
use crate::mixedvol::{self, NefSequence};
use crate::nefseq::{self, EqualityConditions, MinkowskiReport, SequenceReport};
use crate::polytope::Polytope;
use crate::radii;
use crate::rational::{self, Rational};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;
pub const EXIT_UNDECIDED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "nefcalc", version, about = "Exact intersection sequences of polytope pairs and certified inequality checks")]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Precision cap for certified comparisons, in bits.
    #[arg(long, global = true, env = "NEFCALC_PRECISION_BITS", default_value_t = DEFAULT_MAX_BITS,
          value_parser = clap::value_parser!(u32).range(1..=1 << 20))]
    pub precision_bits: u32,
    /// Width of reported enclosures, in bits.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..=1 << 16))]
    pub report_bits: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmChoice {
    Auto,
    Polarization,
    Interpolation,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mixed volume of d polytopes; with two files, also the intersection sequence.
    Mixedvol {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Intersection sequence of a polytope pair.
    Sequence {
        p: PathBuf,
        q: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgorithmChoice::Auto)]
        algorithm: AlgorithmChoice,
    },
    /// Every applicable inequality for a sequence file or a polytope pair.
    Verify {
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
    },
    /// Inradius and outradius bounds with Diskant's inequality.
    Bounds {
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        /// Slope for Diskant's inequality, as p/q.
        #[arg(long)]
        slope: Option<String>,
    },
    /// Exact inradius and outradius of a pair.
    Radii { p: PathBuf, q: PathBuf },
    /// First-order coefficient of vol(P + tQ) against d V(P, ..., P, Q).
    Derivative { p: PathBuf, q: PathBuf },
    /// Write seeded random full-dimensional polytopes.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Output directory.
        #[arg(long, short)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Undecided,
    Violation,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => EXIT_PASS,
            Status::Violation => EXIT_VIOLATION,
            Status::Undecided => EXIT_UNDECIDED,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Parses `args` and runs the command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.json).as_bytes());
            report.status.exit_code()
        }
        Err(Error::UnrealizableSequence(msg)) => {
            let _ = writeln!(err, "certified violation: {msg}");
            EXIT_VIOLATION
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let bits = Bits { max: cli.precision_bits, report: cli.report_bits };
    match &cli.command {
        Command::Mixedvol { files } => cmd_mixedvol(&load_polytopes(files)?),
        Command::Sequence { p, q, algorithm } => cmd_sequence(&load_polytope(p)?, &load_polytope(q)?, *algorithm),
        Command::Verify { files } => cmd_verify(&load_input(files)?, bits),
        Command::Bounds { files, slope } => {
            let slope = slope.as_deref().map(rational::parse).transpose()?;
            cmd_bounds(&load_input(files)?, slope, bits)
        }
        Command::Radii { p, q } => cmd_radii(&load_polytope(p)?, &load_polytope(q)?),
        Command::Derivative { p, q } => cmd_derivative_check(&load_polytope(p)?, &load_polytope(q)?),
        Command::Generate { seed, dim, max_vertices, count, out } => {
            cmd_generate(*seed, *dim, *max_vertices, *count, out)
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Bits {
    pub max: u32,
    pub report: u32,
}

impl Default for Bits {
    fn default() -> Self {
        Bits { max: DEFAULT_MAX_BITS, report: 64 }
    }
}

// ---------------------------------------------------------------------------
// input

/// A checker input: a bare sequence or a polytope pair.
#[derive(Debug, Clone)]
pub enum Input {
    Sequence(NefSequence),
    Pair(Polytope, Polytope),
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn load_polytope(path: &Path) -> Result<Polytope> {
    with_path(path, Polytope::from_json(&read(path)?))
}

fn load_polytopes(paths: &[PathBuf]) -> Result<Vec<Polytope>> {
    paths.iter().map(|p| load_polytope(p)).collect()
}

/// One sequence file, or two polytope files.
pub fn load_input(paths: &[PathBuf]) -> Result<Input> {
    match paths {
        [one] => {
            let text = read(one)?;
            let value: Value = with_path(one, serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string())))?;
            if value.get("vertices").is_some() {
                return Err(Error::InvalidInput("a polytope needs a partner; pass two polytope files".into()));
            }
            Ok(Input::Sequence(with_path(one, NefSequence::from_json(&text))?))
        }
        [p, q] => Ok(Input::Pair(load_polytope(p)?, load_polytope(q)?)),
        _ => Err(Error::InvalidInput("expected one sequence file or two polytope files".into())),
    }
}

// ---------------------------------------------------------------------------
// formatting

fn rj(r: &Rational) -> Value {
    Value::String(rational::format(r))
}

fn rjs(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rj).collect())
}

fn interval_json(iv: &Interval) -> Value {
    json!({ "lo": rj(&iv.lo), "hi": rj(&iv.hi) })
}

fn tuple(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn interval_text(iv: &Interval) -> String {
    if iv.is_exact() {
        iv.lo.to_string()
    } else {
        // exact endpoints are in the JSON report
        format!("~{:.12}", iv.midpoint_f64())
    }
}

fn status_word(holds: bool, undecided: bool) -> &'static str {
    if undecided {
        "UNDECIDED"
    } else if holds {
        "PASS"
    } else {
        "FAIL"
    }
}

fn inequality_json(q: &Inequality) -> Value {
    json!({
        "label": q.label,
        "direction": match q.direction { Direction::Ge => ">=", Direction::Le => "<=" },
        "lhs": interval_json(&q.lhs),
        "rhs": interval_json(&q.rhs),
        "difference": interval_json(&q.comparison.difference),
        "verdict": q.comparison.verdict.to_string(),
        "holds": q.holds(),
        "equality": q.is_tie(),
        "exact": q.comparison.exact,
        "bits_used": q.comparison.bits_used,
    })
}

fn inequality_text(q: &Inequality) -> String {
    let dir = match q.direction {
        Direction::Ge => ">=",
        Direction::Le => "<=",
    };
    let mut line = format!(
        "[{}] {}: {} {} {}",
        status_word(q.holds(), q.is_undecided()),
        q.label,
        interval_text(&q.lhs),
        dir,
        interval_text(&q.rhs)
    );
    if q.is_tie() {
        line.push_str(" (equality)");
    } else if q.is_undecided() {
        let _ = write!(line, " (difference {} at {} bits)", interval_text(&q.comparison.difference), q.comparison.bits_used);
    }
    line
}

fn sequence_json(seq: &NefSequence) -> Value {
    json!({
        "d": seq.degree(),
        "s": rjs(seq.values()),
        "realized": seq.is_realized(),
        "provenance": seq.provenance().map(|a| a.to_string()),
    })
}

fn sequence_text(seq: &NefSequence) -> String {
    let source = match seq.provenance() {
        Some(a) => a.to_string(),
        None => "free".to_string(),
    };
    format!("s = {}  [{source}]\n", tuple(seq.values()))
}

fn seq_report_json(r: &SequenceReport) -> Value {
    json!({
        "name": r.name,
        "passed": r.passed(),
        "entries": r.entries.iter().map(|e| json!({
            "index": e.index,
            "deficit": rj(&e.deficit),
            "holds": e.holds(),
            "equality": e.is_equality(),
        })).collect::<Vec<_>>(),
    })
}

fn seq_report_text(r: &SequenceReport, out: &mut String) {
    for e in &r.entries {
        let _ = writeln!(
            out,
            "[{}] {} at i={}: deficit {}{}",
            status_word(e.holds(), false),
            r.name,
            e.index,
            e.deficit,
            if e.is_equality() { " (equality)" } else { "" }
        );
    }
}

// ---------------------------------------------------------------------------
// commands

fn status_of<'a>(verdicts: impl IntoIterator<Item = &'a Inequality>) -> Status {
    verdicts.into_iter().fold(Status::Pass, |acc, q| {
        let s = if q.is_violated() {
            Status::Violation
        } else if q.is_undecided() {
            Status::Undecided
        } else {
            Status::Pass
        };
        acc.max(s)
    })
}

pub fn cmd_mixedvol(polytopes: &[Polytope]) -> Result<Report> {
    let dim = polytopes[0].dim();
    if polytopes.iter().any(|p| p.dim() != dim) {
        return Err(Error::InvalidInput("polytopes live in different dimensions".into()));
    }
    if polytopes.len() != dim && polytopes.len() != 2 {
        return Err(Error::InvalidInput(format!("need {dim} polytopes (or a pair), got {}", polytopes.len())));
    }
    let mut text = String::new();
    let v = if polytopes.len() == dim { Some(mixedvol::mixed_volume(polytopes)?) } else { None };
    if let Some(v) = &v {
        let _ = writeln!(text, "V = {v}");
    }
    let seq = if polytopes.len() == 2 {
        let seq = mixedvol::intersection_sequence(&polytopes[0], &polytopes[1])?;
        text.push_str(&sequence_text(&seq));
        Some(seq)
    } else {
        None
    };
    let json = json!({
        "mixed_volume": v.as_ref().map(rj),
        "sequence": seq.as_ref().map(sequence_json),
    });
    Ok(Report { status: Status::Pass, text, json })
}

pub fn cmd_sequence(p: &Polytope, q: &Polytope, algorithm: AlgorithmChoice) -> Result<Report> {
    let seq = match algorithm {
        AlgorithmChoice::Auto => mixedvol::intersection_sequence(p, q)?,
        AlgorithmChoice::Polarization => mixedvol::sequence_by_polarization(p, q)?,
        AlgorithmChoice::Interpolation => mixedvol::sequence_by_interpolation(p, q)?,
    };
    Ok(Report { status: Status::Pass, text: sequence_text(&seq), json: sequence_json(&seq) })
}

fn minkowski_json(m: &MinkowskiReport) -> Value {
    json!({
        "sum_top": rj(&m.sum_top),
        "expansion_identity": m.expansion_identity,
        "inequality": inequality_json(&m.inequality),
    })
}

fn conditions_json(c: &EqualityConditions) -> Value {
    json!({
        "log_affine": c.log_affine,
        "power_equalities": c.power_equalities,
        "top_equality": c.top_equality,
        "minkowski_equality": c.minkowski_equality,
        "all_equivalent": c.all_equivalent(),
    })
}

fn bounds_json(b: &BoundsReport) -> Value {
    json!({
        "inradius": { "lower": interval_json(&b.inradius_lower), "upper": interval_json(&b.inradius_upper) },
        "outradius": { "lower": interval_json(&b.outradius_lower), "upper": interval_json(&b.outradius_upper) },
        "diskant_deficit": b.diskant.as_ref().map(|d| interval_json(&d.deficit)),
        "inequalities": b.verdicts.iter().map(inequality_json).collect::<Vec<_>>(),
        "precision_bits_used": b.precision_bits_used,
    })
}

fn bounds_text(b: &BoundsReport, out: &mut String) {
    let _ = writeln!(out, "inradius in [{}, {}]", interval_text(&b.inradius_lower), interval_text(&b.inradius_upper));
    let _ = writeln!(out, "outradius in [{}, {}]", interval_text(&b.outradius_lower), interval_text(&b.outradius_upper));
    if let Some(d) = &b.diskant {
        let _ = writeln!(out, "Diskant deficit = {}", interval_text(&d.deficit));
    }
    for q in &b.verdicts {
        let _ = writeln!(out, "{}", inequality_text(q));
    }
    let _ = writeln!(out, "precision bits used: {}", b.precision_bits_used);
}

fn radii_of(p: &Polytope, q: &Polytope) -> Result<(radii::RadiiResult, Rational)> {
    let inner = radii::inradius(p, q)?;
    let outer = radii::outradius(p, q)?;
    Ok((inner, outer.value))
}

pub fn cmd_verify(input: &Input, bits: Bits) -> Result<Report> {
    let (seq, pair) = match input {
        Input::Sequence(s) => (s.clone(), None),
        Input::Pair(p, q) => (mixedvol::intersection_sequence(p, q)?, Some((p, q))),
    };
    let d = seq.degree();
    let mut text = sequence_text(&seq);
    let mut json = serde_json::Map::new();
    json.insert("sequence".into(), sequence_json(&seq));
    let mut status = Status::Pass;
    let mut undecided: Vec<String> = Vec::new();
    let mut note = |q: &Inequality, status: &mut Status| {
        *status = (*status).max(status_of([q]));
        if q.is_undecided() {
            undecided.push(q.label.clone());
        }
    };

    let mut kt_ok = true;
    if d >= 2 {
        let lc = nefseq::check_log_concavity(&seq)?;
        let pw = nefseq::check_kt_power(&seq);
        seq_report_text(&lc, &mut text);
        seq_report_text(&pw, &mut text);
        kt_ok = lc.passed() && pw.passed();
        json.insert("log_concavity".into(), seq_report_json(&lc));
        json.insert("power_form".into(), seq_report_json(&pw));
    }
    if !kt_ok {
        status = Status::Violation;
    }

    let mink = match pair {
        Some((p, q)) => nefseq::check_minkowski_with(p, q, bits.max, bits.report)?,
        None => nefseq::check_minkowski_sequence(&seq, bits.max, bits.report)?,
    };
    let _ = writeln!(text, "{}", inequality_text(&mink.inequality));
    if !mink.expansion_identity {
        let _ = writeln!(text, "[FAIL] binomial expansion of the sum: {} != sum C(d,i) s_i", mink.sum_top);
        status = Status::Violation;
    }
    note(&mink.inequality, &mut status);
    json.insert("minkowski".into(), minkowski_json(&mink));

    let big = seq.alpha_big() && seq.beta_big();
    if big && d >= 2 {
        let mut conds = nefseq::check_equality_conditions(&seq)?;
        if pair.is_some() {
            conds.minkowski_equality = Some(mink.inequality.is_tie());
        }
        let _ = writeln!(
            text,
            "equality conditions: log-affine {}, power equalities {}, top equality {}, Minkowski equality {}",
            conds.log_affine,
            conds.power_equalities,
            conds.top_equality,
            conds.minkowski_equality.map_or("n/a".to_string(), |b| b.to_string()),
        );
        if seq.is_realized() && !conds.all_equivalent() {
            let _ = writeln!(text, "[FAIL] equality conditions disagree");
            status = Status::Violation;
        }
        json.insert("equality_conditions".into(), conditions_json(&conds));

        if kt_ok {
            let radii = match pair {
                Some((p, q)) => Some(radii_of(p, q)?),
                None => None,
            };
            let opts = BoundsOptions {
                precision_bits: bits.report,
                max_bits: bits.max,
                slope: None,
                radii: radii.as_ref().map(|(r, big_r)| (r.t_star.clone(), big_r.clone())),
            };
            let report = bounds::bounds_report(&seq, &opts)?;
            if let Some((r, big_r)) = &radii {
                let _ = writeln!(text, "r = {}, R = {}", r.t_star, big_r);
                json.insert("radii".into(), json!({ "r": rj(&r.t_star), "R": rj(big_r), "x": rjs(&r.translation) }));
            }
            bounds_text(&report, &mut text);
            for q in &report.verdicts {
                note(q, &mut status);
            }
            json.insert("bounds".into(), bounds_json(&report));

            let prop = match pair {
                Some((p, q)) => bounds::proportionality_test_polytopes(p, q, bits.report)?,
                None => bounds::proportionality_test(&seq, bits.report)?,
            };
            let _ = writeln!(text, "proportional: {}", prop.proportional);
            if let Some(iv) = &prop.ratio_enclosure {
                let _ = writeln!(text, "ratio (s_d/s_0)^(1/d) = {}", interval_text(iv));
            }
            if let Some((lambda, x)) = &prop.witness {
                let _ = writeln!(text, "homothety: Q = {lambda} P + {}", tuple(x));
            }
            json.insert(
                "proportionality".into(),
                json!({
                    "proportional": prop.proportional,
                    "ratio": prop.ratio_enclosure.as_ref().map(interval_json),
                    "witness": prop.witness.as_ref().map(|(l, x)| json!({ "lambda": rj(l), "x": rjs(x) })),
                }),
            );
        }
    } else if !big {
        let _ = writeln!(text, "not big: radius bounds and equality conditions skipped");
    }

    if !undecided.is_empty() {
        let _ = writeln!(text, "undecided at {} bits: {}", bits.max, undecided.join("; "));
    }
    let _ = writeln!(text, "verdict: {}", verdict_word(status));
    json.insert("undecided".into(), json!(undecided));
    json.insert("verdict".into(), json!(verdict_word(status)));
    Ok(Report { status, text, json: Value::Object(json) })
}

fn verdict_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Violation => "violation",
        Status::Undecided => "undecided",
    }
}

pub fn cmd_bounds(input: &Input, slope: Option<Rational>, bits: Bits) -> Result<Report> {
    let (seq, radii) = match input {
        Input::Sequence(s) => (s.clone(), None),
        Input::Pair(p, q) => {
            let (r, big_r) = radii_of(p, q)?;
            (mixedvol::intersection_sequence(p, q)?, Some((r.t_star, big_r)))
        }
    };
    let opts = BoundsOptions { precision_bits: bits.report, max_bits: bits.max, slope, radii: radii.clone() };
    let report = bounds::bounds_report(&seq, &opts)?;
    let mut text = sequence_text(&seq);
    if let Some((r, big_r)) = &radii {
        let _ = writeln!(text, "r = {r}, R = {big_r}");
    }
    bounds_text(&report, &mut text);
    let status = status_of(&report.verdicts);
    let undecided: Vec<&str> = report.undecided().map(|q| q.label.as_str()).collect();
    if !undecided.is_empty() {
        let _ = writeln!(text, "undecided at {} bits: {}", bits.max, undecided.join("; "));
    }
    let mut json = bounds_json(&report);
    json["sequence"] = sequence_json(&seq);
    json["radii"] = match &radii {
        Some((r, big_r)) => json!({ "r": rj(r), "R": rj(big_r) }),
        None => Value::Null,
    };
    json["undecided"] = json!(undecided);
    Ok(Report { status, text, json })
}

pub fn cmd_radii(p: &Polytope, q: &Polytope) -> Result<Report> {
    let (inner, big_r) = radii_of(p, q)?;
    let text = format!("r = {}\nx = {}\nR = {}\n", inner.t_star, tuple(&inner.translation), big_r);
    let json = json!({ "t": rj(&inner.t_star), "x": rjs(&inner.translation), "R": rj(&big_r) });
    Ok(Report { status: Status::Pass, text, json })
}

pub fn cmd_derivative_check(p: &Polytope, q: &Polytope) -> Result<Report> {
    if !p.is_full_dimensional() || !q.is_full_dimensional() {
        return Err(Error::DegenerateInput("the derivative check needs full-dimensional polytopes".into()));
    }
    let d = p.dim();
    let poly = mixedvol::volume_polynomial(p, q)?;
    let mut args = vec![p.clone(); d - 1];
    args.push(q.clone());
    let mixed = mixedvol::mixed_volume(&args)? * rational::int(d as i64);
    let equal = poly[1] == mixed;
    let text = format!(
        "vol(P + tQ) coefficients: {}\nt^1 coefficient = {}\nd V(P[d-1], Q) = {}\n[{}] derivative identity\n",
        tuple(&poly),
        poly[1],
        mixed,
        if equal { "PASS" } else { "FAIL" }
    );
    let json = json!({
        "polynomial": rjs(&poly),
        "t1_coefficient": rj(&poly[1]),
        "d_mixed_volume": rj(&mixed),
        "equal": equal,
    });
    Ok(Report { status: if equal { Status::Pass } else { Status::Violation }, text, json })
}

pub fn cmd_generate(seed: u64, d: usize, max_vertices: usize, count: usize, out: &Path) -> Result<Report> {
    let polytopes = generate::generate(seed, d, max_vertices, count)?;
    let io = |e: std::io::Error| Error::InvalidInput(format!("{}: {e}", out.display()));
    std::fs::create_dir_all(out).map_err(io)?;
    let mut names = Vec::new();
    for (i, p) in polytopes.iter().enumerate() {
        let name = format!("polytope_{i:04}.json");
        let mut body = p.to_json();
        body.push('\n');
        std::fs::write(out.join(&name), body).map_err(io)?;
        names.push(name);
    }
    let text = names.iter().map(|n| format!("{}\n", out.join(n).display())).collect();
    let json = json!({ "seed": seed, "dim": d, "files": names });
    Ok(Report { status: Status::Pass, text, json })
}
