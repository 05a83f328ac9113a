//! Command-line front end for the `cominuscule` library.
//!
//! Exit status: 0 on success, 1 when a check fails or a computation is
//! refused, 2 on usage errors and invalid input.

pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cominuscule::cominuscule::{build_context, CominusculeContext};
use cominuscule::conormal::{closure_is_schubert, is_smooth, SmoothnessReport};
use cominuscule::detvar::{fibre_rank, n_bar, perm_to_element, SignedPermutation};
use cominuscule::rootsys::{build_diagram, highest_root, positive_roots};
use cominuscule::weyl::AffineWeylElement;
use cominuscule::{Error, NodeSet, RootVector, Series};

use verify::{verify_suite, Suite, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cominuscule",
    version,
    about = "Conormal varieties of Schubert varieties in cominuscule Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan data and positive roots of a Dynkin type
    Roots {
        #[arg(long = "type", value_parser = parse_series)]
        series: Series,
        #[arg(long)]
        rank: usize,
        /// Use the extended (affine) diagram
        #[arg(long)]
        affine: bool,
        #[arg(long)]
        json: bool,
    },
    /// Smoothness criteria for X_J(u), u in W_d^0
    Smooth {
        #[arg(long = "type", value_parser = parse_series)]
        series: Series,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        comin: usize,
        /// Space-separated word, or a bracketed signed permutation in type D
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long)]
        json: bool,
    },
    /// Conormal data of X(w) for w in W_0^J
    Conormal {
        #[arg(long = "type", value_parser = parse_series)]
        series: Series,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        comin: usize,
        /// Space-separated word, or a bracketed signed permutation in type D
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        /// Also compute the maximal elements of the fibre index set
        #[arg(long)]
        fibre: bool,
        #[arg(long)]
        json: bool,
    },
    /// Conormal fibre of the rank-r skew-symmetric determinantal variety
    Detvar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification suite
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
        #[arg(long)]
        include_e7: bool,
        #[arg(long)]
        json: bool,
        /// Report elapsed times
        #[arg(long)]
        timing: bool,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>()
}

fn parse_series(s: &str) -> Result<Series, String> {
    s.parse::<Series>().map_err(|e| e.to_string())
}

/// A finished subcommand: the rendered report and the exit status.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.text.trim_end());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Maps a library error to an exit status.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Roots {
            series,
            rank,
            affine,
            json,
        } => roots(series, rank, affine, json),
        Command::Smooth {
            series,
            rank,
            comin,
            u,
            json,
        } => smooth(series, rank, comin, &u, json),
        Command::Conormal {
            series,
            rank,
            comin,
            w,
            fibre,
            json,
        } => conormal(series, rank, comin, &w, fibre, json),
        Command::Detvar { n, r, json } => detvar(n, r, json),
        Command::Verify {
            suite,
            max_rank,
            include_e7,
            json,
            timing,
        } => verify(suite, max_rank, include_e7, json, timing),
    }
}

fn render_json(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values always serialize")
}

fn roots_json(roots: &[RootVector]) -> Value {
    Value::from(roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>())
}

fn words_json(ctx: &CominusculeContext, elems: &[AffineWeylElement]) -> Value {
    Value::from(
        elems
            .iter()
            .map(|e| ctx.group().reduced_word(e).to_string())
            .collect::<Vec<_>>(),
    )
}

fn nodes_text(nodes: &NodeSet) -> String {
    if nodes.is_empty() {
        return "{}".to_string();
    }
    let parts: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn word_text(word: String) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word
    }
}

fn matrix_text(rows: &[Vec<i64>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    rows.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            format!("  {}", cells.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Aligned `key: value` lines.
fn table(rows: &[(&str, String)]) -> String {
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn roots(series: Series, rank: usize, affine: bool, as_json: bool) -> Result<Outcome, Error> {
    let finite = build_diagram(series, rank, false)?;
    let diagram = if affine {
        build_diagram(series, rank, true)?
    } else {
        finite.clone()
    };
    let pos = positive_roots(&finite)?;
    let theta = highest_root(&finite, &finite.all_nodes())?;
    if as_json {
        let value = json!({
            "type": series.to_string(),
            "rank": rank,
            "affine": affine,
            "labels": diagram.labels,
            "cartan": diagram.cartan,
            "symmetrizer": diagram.symmetrizer,
            "marks": diagram.marks,
            "highest_root": theta.0,
            "positive_roots": roots_json(&pos),
            "num_positive_roots": pos.len(),
        });
        return Ok(Outcome::ok(render_json(&value)));
    }
    let labels: Vec<String> = diagram.labels.iter().map(|l| l.to_string()).collect();
    let mut rows = vec![
        (
            "type",
            format!("{series}{rank}{}", if affine { " (affine)" } else { "" }),
        ),
        ("labels", labels.join(" ")),
        ("symmetrizer", format!("{:?}", diagram.symmetrizer)),
    ];
    if let Some(marks) = &diagram.marks {
        rows.push(("marks", format!("{marks:?}")));
    }
    rows.push(("highest root", theta.to_string()));
    rows.push(("positive roots", pos.len().to_string()));
    let mut text = table(&rows);
    text.push_str("\ncartan:\n");
    text.push_str(&matrix_text(&diagram.cartan));
    text.push_str("\nroots:\n");
    for r in &pos {
        text.push_str(&format!("  {r}\n"));
    }
    Ok(Outcome::ok(text))
}

/// Reads an element either as a word or, in type D, as a signed permutation.
fn parse_input(ctx: &CominusculeContext, text: &str) -> Result<AffineWeylElement, Error> {
    if text.trim_start().starts_with('[') {
        if ctx.series() != Series::D {
            return Err(Error::Parse(format!(
                "signed permutations are accepted only in type D, got {text:?}"
            )));
        }
        let p: SignedPermutation = text.parse()?;
        if p.rank() != ctx.rank() {
            return Err(Error::Parse(format!(
                "signed permutation {p} has {} entries, expected {}",
                p.rank(),
                ctx.rank()
            )));
        }
        return perm_to_element(ctx, &p);
    }
    ctx.group().parse_element(text)
}

fn smoothness_json(ctx: &CominusculeContext, rep: &SmoothnessReport) -> Value {
    let g = ctx.group();
    json!({
        "c3": rep.c3,
        "c4": rep.c4,
        "c5": rep.c5,
        "c6": rep.c6,
        "L": rep.support_l.iter().collect::<Vec<_>>(),
        "w_L": g.reduced_word(&rep.witness.0).to_string(),
        "w_LJ": g.reduced_word(&rep.witness.1).to_string(),
    })
}

fn smoothness_rows(
    ctx: &CominusculeContext,
    rep: &SmoothnessReport,
) -> Vec<(&'static str, String)> {
    let g = ctx.group();
    vec![
        ("smooth", rep.is_smooth().to_string()),
        (
            "criteria",
            format!(
                "(3) {}  (4) {}  (5) {}  (6) {}",
                rep.c3, rep.c4, rep.c5, rep.c6
            ),
        ),
        ("L", nodes_text(&rep.support_l)),
        ("w_L", word_text(g.reduced_word(&rep.witness.0).to_string())),
        (
            "w_{L∩J}",
            word_text(g.reduced_word(&rep.witness.1).to_string()),
        ),
    ]
}

fn smooth(series: Series, rank: usize, d: usize, u: &str, as_json: bool) -> Result<Outcome, Error> {
    let ctx = build_context(series, rank, d)?;
    let u = parse_input(&ctx, u)?;
    let rep = is_smooth(&ctx, &u)?;
    let word = ctx.group().reduced_word(&u).to_string();
    if as_json {
        let value = json!({
            "type": series.to_string(),
            "rank": rank,
            "d": d,
            "u_word": word,
            "smooth": rep.is_smooth(),
            "criteria": smoothness_json(&ctx, &rep),
        });
        return Ok(Outcome::ok(render_json(&value)));
    }
    let mut rows = vec![
        ("type", format!("{series}{rank}, d = {d}")),
        ("u", word_text(word)),
    ];
    rows.extend(smoothness_rows(&ctx, &rep));
    Ok(Outcome::ok(table(&rows)))
}

fn conormal(
    series: Series,
    rank: usize,
    d: usize,
    w: &str,
    fibre: bool,
    as_json: bool,
) -> Result<Outcome, Error> {
    let ctx = build_context(series, rank, d)?;
    let g = ctx.group();
    let w = parse_input(&ctx, w)?;
    let rep = closure_is_schubert(&ctx, &w, fibre, false)?;
    let refused = fibre && rep.fibre_max.is_none();
    let refusal = refused.then(|| {
        format!(
            "fibre decomposition refused: X_J(w0 w w_J) is not smooth (L = {})",
            nodes_text(&rep.smooth.support_l)
        )
    });
    let code = if refused { EXIT_FAILURE } else { EXIT_OK };
    let word = |e: &AffineWeylElement| g.reduced_word(e).to_string();
    if as_json {
        let mut value = json!({
            "type": series.to_string(),
            "rank": rank,
            "d": d,
            "w_word": word(&rep.w),
            "v_word": word(&rep.v),
            "wv_word": word(&rep.wv),
            "R": roots_json(&rep.r),
            "smooth": smoothness_json(&ctx, &rep.smooth),
            "closure_is_schubert": rep.closure_is_schubert,
            "compactification_length": rep.compactification_length,
            "dim_flag": ctx.dim_flag(),
            "fibre_max": rep.fibre_max.as_ref().map(|m| words_json(&ctx, m)),
        });
        if let Some(reason) = &refusal {
            value["fibre_refused"] = Value::from(reason.clone());
        }
        return Ok(Outcome {
            text: render_json(&value),
            code,
        });
    }
    let roots: Vec<String> = rep.r.iter().map(|r| r.to_string()).collect();
    let mut rows = vec![
        ("type", format!("{series}{rank}, d = {d}")),
        ("w", word_text(word(&rep.w))),
        ("v", word_text(word(&rep.v))),
        ("wv", word_text(word(&rep.wv))),
        ("R", format!("{} roots: {}", roots.len(), roots.join(" "))),
    ];
    rows.extend(smoothness_rows(&ctx, &rep.smooth));
    rows.push(("closure is Schubert", rep.closure_is_schubert.to_string()));
    rows.push((
        "compactification",
        format!(
            "length {} (dim G/B = {})",
            rep.compactification_length,
            ctx.dim_flag()
        ),
    ));
    if let Some(m) = &rep.fibre_max {
        let words: Vec<String> = m.iter().map(|e| format!("[{}]", word(e))).collect();
        rows.push(("fibre maxima", words.join(" ")));
    }
    if let Some(reason) = refusal {
        rows.push(("fibre", reason));
    }
    Ok(Outcome {
        text: table(&rows),
        code,
    })
}

fn detvar(n: usize, r: usize, as_json: bool) -> Result<Outcome, Error> {
    let fr = fibre_rank(n, r)?;
    let ctx = build_context(Series::D, n, n)?;
    let g = ctx.group();
    let word = |e: &AffineWeylElement| g.reduced_word(e).to_string();
    let w_r_elem = perm_to_element(&ctx, &fr.w_r)?;
    if as_json {
        let value = json!({
            "n": n,
            "r": r,
            "nbar": n_bar(n),
            "fibre_rank": fr.rank,
            "w_r": fr.w_r.to_string(),
            "w_r_word": word(&w_r_elem),
            "v_r_word": word(&fr.v_r),
            "witness": fr.witness.to_string(),
            "witness_word": word(&fr.witness_element),
            "fibre_max": words_json(&ctx, &fr.fibre_max),
        });
        return Ok(Outcome::ok(render_json(&value)));
    }
    let maxima: Vec<String> = fr
        .fibre_max
        .iter()
        .map(|e| format!("[{}]", word(e)))
        .collect();
    let rows = vec![
        ("type", format!("D{n}, d = {n}, nbar = {}", n_bar(n))),
        ("r", r.to_string()),
        ("w_r", format!("{} = [{}]", fr.w_r, word(&w_r_elem))),
        ("v_r", word_text(word(&fr.v_r))),
        ("fibre rank", fr.rank.to_string()),
        ("witness", format!("w_{} = {}", fr.rank, fr.witness)),
        ("iota witness", word_text(word(&fr.witness_element))),
        ("fibre maxima", maxima.join(" ")),
    ];
    Ok(Outcome::ok(table(&rows)))
}

/// JSON form of a verification report; elapsed times only with `timing`.
pub fn report_json(report: &VerificationReport, timing: bool, total_ms: Option<u128>) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let mut v = json!({
                "id": c.id,
                "params": c.params,
                "pass": c.pass,
            });
            if let Some(detail) = &c.detail {
                v["detail"] = Value::from(detail.clone());
            }
            if timing {
                v["elapsed_ms"] = Value::from(c.elapsed_ms as u64);
            }
            v
        })
        .collect();
    let mut value = json!({
        "suite": report.suite,
        "max_rank": report.max_rank,
        "include_e7": report.include_e7,
        "checks": checks,
        "totals": {
            "checks": report.checks.len(),
            "passed": report.passed(),
            "failed": report.failed(),
        },
        "pass": report.all_pass(),
    });
    if let (true, Some(ms)) = (timing, total_ms) {
        value["elapsed_ms"] = Value::from(ms as u64);
    }
    value
}

fn verify(
    suite: Suite,
    max_rank: usize,
    include_e7: bool,
    as_json: bool,
    timing: bool,
) -> Result<Outcome, Error> {
    let start = Instant::now();
    let report = verify_suite(suite, max_rank, include_e7);
    let total_ms = start.elapsed().as_millis();
    let code = if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if as_json {
        return Ok(Outcome {
            text: render_json(&report_json(&report, timing, Some(total_ms))),
            code,
        });
    }
    let id_width = report.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let param_width = report
        .checks
        .iter()
        .map(|c| c.params.len())
        .max()
        .unwrap_or(0);
    let mut lines = Vec::new();
    for c in &report.checks {
        let mut line = format!(
            "{:<4}  {:<id_width$}  {:<param_width$}",
            if c.pass { "PASS" } else { "FAIL" },
            c.id,
            c.params
        );
        if timing {
            line.push_str(&format!("  {:>6} ms", c.elapsed_ms));
        }
        if let Some(detail) = &c.detail {
            line.push_str(&format!("  {detail}"));
        }
        lines.push(line.trim_end().to_string());
    }
    let mut summary = format!(
        "suite {}: {} checks, {} passed, {} failed",
        report.suite,
        report.checks.len(),
        report.passed(),
        report.failed()
    );
    if timing {
        summary.push_str(&format!(" in {total_ms} ms"));
    }
    lines.push(summary);
    Ok(Outcome {
        text: lines.join("\n"),
        code,
    })
}
