//! `subtorus`: command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 negative verdict,
//! 3 equivalence violated under `--strict`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use subtorus::io::{parse_halfspaces, parse_subspace};
use subtorus::{
    builtin, equivalence_verdict, good_polytope, image_polytope, smoothness_report, validate_delzant,
    AffineSubspace, CatalogRow, DelzantPolytope, Error, HalfSpace,
};

#[derive(Parser)]
#[command(name = "subtorus", version, about = "Smoothness of subtorus closures in toric manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a polytope is Delzant.
    Validate(Common),
    /// Classify vertices and decide goodness.
    Classify(WithSubspace),
    /// Decide smoothness chart by chart.
    Smooth(WithSubspace),
    /// Compute the image polytope and check it is Delzant.
    Image(WithSubspace),
    /// Goodness, smoothness and their agreement.
    Verdict(WithSubspace),
    /// Run `verdict` over all hyperplanes of bounded height.
    Sweep(SweepArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Polytope JSON file.
    #[arg(long)]
    polytope: Option<PathBuf>,
    /// Builtin polytope, e.g. `simplex:2:1` or `cube:1:1*simplex:2:1`.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: Source,
    /// Fail with exit code 3 when goodness and smoothness disagree.
    #[arg(long)]
    strict: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WithSubspace {
    #[command(flatten)]
    common: Common,
    /// Subspace JSON, inline or as a file path.
    #[arg(long)]
    subspace: String,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    /// Largest absolute entry of the hyperplane normal.
    #[arg(long)]
    height: u32,
}

#[derive(Serialize)]
struct ErrorReport {
    error: String,
}

#[derive(Serialize)]
struct ImageReport {
    label: subtorus::ImageLabel,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<subtorus::ConvexPolytope>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_is_delzant: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    validation: Option<subtorus::ValidationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

enum Failure {
    Input(String),
    Violated(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EquivalenceViolated(_) => Failure::Violated(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn halfspaces(c: &Common) -> Result<(usize, Vec<HalfSpace>), Failure> {
    match (&c.source.polytope, &c.source.builtin) {
        (Some(path), _) => Ok(parse_halfspaces(&read(path)?)?),
        (_, Some(name)) => {
            let p = builtin(name)?;
            Ok((p.dim(), p.halfspaces().to_vec()))
        }
        _ => Err(Failure::Input("no polytope given".into())),
    }
}

fn polytope(c: &Common) -> Result<DelzantPolytope, Failure> {
    let (dim, hs) = halfspaces(c)?;
    Ok(DelzantPolytope::new(dim, hs)?)
}

fn subspace(arg: &str, dim: usize) -> Result<AffineSubspace, Failure> {
    let text = if arg.trim_start().starts_with('{') { arg.to_string() } else { read(Path::new(arg))? };
    let s = parse_subspace(&text)?;
    if s.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: s.dim() }.into());
    }
    Ok(s)
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CsvRow {
    basis: String,
    q: String,
    good: bool,
    smooth: bool,
    holds: bool,
    failures: String,
}

fn write_csv(rows: &[CatalogRow], path: &Path) -> Result<(), Failure> {
    let io_err = |e: csv::Error| Failure::Input(format!("{}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io_err)?;
    for r in rows {
        w.serialize(CsvRow {
            basis: r.basis.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            q: r.q.to_string(),
            good: r.good,
            smooth: r.smooth,
            holds: r.holds,
            failures: r.failures.join("; "),
        })
        .map_err(io_err)?;
    }
    w.flush().map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn verdict_code(ok: bool) -> u8 {
    if ok {
        0
    } else {
        2
    }
}

fn run(cmd: &Command) -> (Outcome, Option<&Path>) {
    match cmd {
        Command::Validate(c) => {
            let out = c.out.as_deref();
            let res = halfspaces(c).and_then(|(dim, hs)| {
                let report = validate_delzant(&hs, dim);
                emit(&report, out)?;
                Ok(verdict_code(report.passed))
            });
            (res, out)
        }
        Command::Classify(a) => {
            let out = a.common.out.as_deref();
            let res = polytope(&a.common).and_then(|p| {
                let s = subspace(&a.subspace, p.dim())?;
                let report = good_polytope(&p, &s)?;
                emit(&report, out)?;
                Ok(verdict_code(report.good))
            });
            (res, out)
        }
        Command::Smooth(a) => {
            let out = a.common.out.as_deref();
            let res = polytope(&a.common).and_then(|p| {
                let s = subspace(&a.subspace, p.dim())?;
                let report = smoothness_report(&p, &s)?;
                emit(&report, out)?;
                Ok(verdict_code(report.smooth))
            });
            (res, out)
        }
        Command::Image(a) => {
            let out = a.common.out.as_deref();
            let res = polytope(&a.common).and_then(|p| {
                let s = subspace(&a.subspace, p.dim())?;
                let smooth = smoothness_report(&p, &s)?.smooth;
                let label = if smooth { subtorus::ImageLabel::MomentImage } else { subtorus::ImageLabel::FormalImage };
                let report = match image_polytope(&p, &s) {
                    Ok(img) => {
                        let validation = img.validate();
                        ImageReport {
                            label,
                            image_is_delzant: Some(validation.passed),
                            image: Some(img),
                            validation: Some(validation),
                            error: None,
                        }
                    }
                    Err(e @ Error::DegenerateImage { .. }) => ImageReport {
                        label,
                        image: None,
                        image_is_delzant: None,
                        validation: None,
                        error: Some(e.to_string()),
                    },
                    Err(e) => return Err(e.into()),
                };
                emit(&report, out)?;
                Ok(verdict_code(report.image_is_delzant == Some(true)))
            });
            (res, out)
        }
        Command::Verdict(a) => {
            let out = a.common.out.as_deref();
            let res = polytope(&a.common).and_then(|p| {
                let s = subspace(&a.subspace, p.dim())?;
                let report = equivalence_verdict(&p, &s, a.common.strict)?;
                emit(&report, out)?;
                Ok(verdict_code(report.good && report.smooth))
            });
            (res, out)
        }
        Command::Sweep(a) => {
            let out = a.common.out.as_deref();
            let res = polytope(&a.common).and_then(|p| {
                let rows = subtorus::sweep(&p, a.height, a.common.strict)?;
                match out {
                    Some(path) if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) => {
                        write_csv(&rows, path)?
                    }
                    _ => emit(&rows, out)?,
                }
                Ok(0)
            });
            (res, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (res, out) = run(&cli.command);
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (msg, code) = match f {
                Failure::Input(m) => (m, 1),
                Failure::Violated(m) => (m, 3),
            };
            eprintln!("error: {msg}");
            let csv_out = out.is_some_and(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")));
            if !csv_out {
                let _ = emit(&ErrorReport { error: msg }, out);
            }
            ExitCode::from(code)
        }
    }
}
