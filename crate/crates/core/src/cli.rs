//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cancellation::{
    check_condition_c, check_condition_t, check_helly, check_piece_length_bound, check_strong_helly, HellyMode,
};
use crate::complex::{validate_complex, Subcomplex, TwoComplex};
use crate::duals::{
    build_nerve, check_k_large, check_quadric_conditions, check_systolic_links, graph_distance, quadrize, DualComplex,
};
use crate::error::{Error, Result};
use crate::flats::{
    check_flat_c3t6, check_flat_plane_c6, check_quasi_flat_plane, gallery_distance, numbering, skeleton_graph,
    translate_subcomplex, FlatCertificate, FlatCheck, NumberingRule,
};
use crate::generators::{generate, quotient_by_lattice, Family, PatchSpec};
use crate::io::{load_complex, serialize_complex};
use crate::report::{CheckReport, Verdict};

#[derive(Debug, Parser)]
#[command(
    name = "smallcancel",
    version,
    about = "Small cancellation complexes, their duals and flats"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cond {
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "T", alias = "t")]
    T,
    Helly,
    StrongHelly,
    PieceLength,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    C6,
    C4t4,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DualKind {
    Nerve,
    Quadrization,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DualCheck {
    Systolic,
    Quadric,
    KLarge,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FlatKindArg {
    C6Plane,
    Quasi,
    C3t6,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Rule {
    C6,
    Quasi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Metric {
    Gallery,
    Skeleton,
    Dual,
}

#[derive(Debug, clap::Args)]
struct ReportArgs {
    /// Report rendering on standard output.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Also write the report as JSON to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a patch of a periodic family.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a complex file.
    Validate {
        input: PathBuf,
        /// Also require embedded closed cells.
        #[arg(long)]
        embedded: bool,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Check a small cancellation condition or Helly-type lemma.
    Check {
        #[arg(long, value_enum)]
        cond: Cond,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value = "c6")]
        mode: Mode,
        input: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Build the nerve or the quadrization of a complex.
    Dual {
        #[arg(long, value_enum)]
        kind: DualKind,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a dual and check its curvature conditions.
    CheckDual {
        #[arg(long, value_enum)]
        kind: DualCheck,
        #[arg(long, default_value_t = 6)]
        k: usize,
        input: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Check a subcomplex against local flat criteria and emit a certificate.
    DetectFlat {
        #[arg(long, value_enum)]
        kind: FlatKindArg,
        #[arg(long, default_value_t = 1)]
        margin: usize,
        /// Comma-separated face ids; the whole complex by default.
        #[arg(long, value_delimiter = ',')]
        faces: Vec<String>,
        /// Certificate output path.
        #[arg(long)]
        out: Option<PathBuf>,
        input: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Run the inductive numbering from a seed.
    Numbering {
        #[arg(long, value_enum)]
        rule: Rule,
        /// Three comma-separated face ids.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        seed: Vec<String>,
        #[arg(long, default_value_t = 25)]
        count: usize,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance between two cells.
    Distance {
        #[arg(long, value_enum)]
        metric: Metric,
        #[arg(long, value_enum, default_value = "nerve")]
        dual: DualKind,
        input: PathBuf,
        from: String,
        to: String,
    },
    /// Finite quotient of a periodic family.
    Quotient {
        #[arg(long)]
        family: String,
        /// Periods as `m,n`.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        periods: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Translate a certificate by a lattice vector and re-verify it.
    Translate {
        #[arg(long)]
        cert: PathBuf,
        /// Shift as `dx,dy`.
        #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true)]
        shift: Vec<i64>,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Re-render a stored report.
    Report {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        input: PathBuf,
    },
}

/// Runs the tool on `argv` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run_with(argv, &mut out)
}

/// As [`run`], writing normal output to `out`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Verdict::Error.exit_code() } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    init_threads();
    let command = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(cli.command, &command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Ambiguous { .. } => Verdict::Inconclusive.exit_code(),
                _ => Verdict::Error.exit_code(),
            }
        }
    }
}

fn init_threads() {
    let threads = std::env::var("SMALLCANCEL_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    // a pool may already exist when called twice in one process
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

fn read(path: &Path) -> Result<Vec<u8>> {
    Ok(fs::read(path)?)
}

fn load(path: &Path) -> Result<(TwoComplex, Vec<u8>)> {
    let bytes = read(path)?;
    let text = String::from_utf8_lossy(&bytes);
    Ok((load_complex(&text)?, bytes))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn finish(
    report: CheckReport,
    args: &ReportArgs,
    command: &str,
    input: &[u8],
    started: Instant,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = report.with_command(command).with_input(input).with_timing(started);
    let rendered = match args.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    out.write_all(rendered.as_bytes())?;
    if let Some(p) = &args.report {
        fs::write(p, report.to_json())?;
    }
    Ok(report.verdict.exit_code())
}

fn execute(command: Command, line: &str, out: &mut dyn Write) -> Result<i32> {
    let started = Instant::now();
    match command {
        Command::Generate {
            family,
            radius,
            out: path,
        } => {
            let family: Family = family.parse()?;
            let patch = generate(PatchSpec { family, radius })?;
            emit(out, path.as_deref(), &serialize_complex(&patch.complex))?;
            Ok(0)
        }
        Command::Validate {
            input,
            embedded,
            report,
        } => {
            let bytes = read(&input)?;
            let r = match load_complex(&String::from_utf8_lossy(&bytes)) {
                Ok(x) => validate_complex(&x, embedded),
                Err(e) => CheckReport::error(e.to_string()),
            };
            finish(r, &report, line, &bytes, started, out)
        }
        Command::Check {
            cond,
            p,
            q,
            mode,
            input,
            report,
        } => {
            let (x, bytes) = load(&input)?;
            let mode = match mode {
                Mode::C6 => HellyMode::C6,
                Mode::C4t4 => HellyMode::C4T4,
            };
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| Error::Precondition(format!("--{flag} is required for this condition")))
            };
            let r = match cond {
                Cond::C => check_condition_c(&x, need(p, "p")?),
                Cond::T => check_condition_t(&x, need(q, "q")?),
                Cond::PieceLength => check_piece_length_bound(&x, need(q, "q")?),
                Cond::Helly => check_helly(&x, mode),
                Cond::StrongHelly => check_strong_helly(&x, mode),
            };
            finish(r, &report, line, &bytes, started, out)
        }
        Command::Dual { kind, input, out: path } => {
            let (x, _) = load(&input)?;
            let dual = build_dual(&x, kind)?;
            emit(out, path.as_deref(), &dual.serialize())?;
            Ok(0)
        }
        Command::CheckDual { kind, k, input, report } => {
            let (x, bytes) = load(&input)?;
            let r = match kind {
                DualCheck::Systolic => check_systolic_links(&build_nerve(&x)?),
                DualCheck::KLarge => check_k_large(&build_nerve(&x)?, k),
                DualCheck::Quadric => check_quadric_conditions(&quadrize(&x)?),
            };
            finish(r, &report, line, &bytes, started, out)
        }
        Command::DetectFlat {
            kind,
            margin,
            faces,
            out: path,
            input,
            report,
        } => {
            let (x, bytes) = load(&input)?;
            let e = if faces.is_empty() {
                Subcomplex::whole(&x)
            } else {
                Subcomplex::from_face_ids(&x, &faces)?
            };
            let check = match kind {
                FlatKindArg::C6Plane => check_flat_plane_c6(&x, &e, margin)?,
                FlatKindArg::Quasi => check_quasi_flat_plane(&x, &e, margin)?,
                FlatKindArg::C3t6 => check_flat_c3t6(&x, &e, margin)?,
            };
            write_certificate(&check, path.as_deref())?;
            finish(check.report, &report, line, &bytes, started, out)
        }
        Command::Numbering {
            rule,
            seed,
            count,
            input,
            out: path,
        } => {
            let (x, _) = load(&input)?;
            let seed: [&str; 3] = match seed.as_slice() {
                [a, b, c] => [a, b, c],
                _ => return Err(Error::Seed("expected three comma-separated face ids".into())),
            };
            let rule = match rule {
                Rule::C6 => NumberingRule::C6,
                Rule::Quasi => NumberingRule::Quasi,
            };
            let n = numbering(&x, &Subcomplex::whole(&x), rule, seed, count)?;
            let text: String = n.cells.iter().map(|c| format!("{c}\n")).collect();
            emit(out, path.as_deref(), &text)?;
            Ok(0)
        }
        Command::Distance {
            metric,
            dual,
            input,
            from,
            to,
        } => {
            let (x, _) = load(&input)?;
            let d = match metric {
                Metric::Gallery => gallery_distance(&x, x.face(&from)?, x.face(&to)?)?,
                Metric::Skeleton => {
                    let g = skeleton_graph(&x, 0..x.edge_count());
                    g.distance(x.vertex(&from)?, x.vertex(&to)?)?
                }
                Metric::Dual => {
                    let dual = build_dual(&x, dual)?;
                    graph_distance(&dual.skeleton(), &dual.face_vertex(&from), &dual.face_vertex(&to))?
                }
            };
            writeln!(out, "{d}")?;
            Ok(0)
        }
        Command::Quotient {
            family,
            periods,
            out: path,
        } => {
            let family: Family = family.parse()?;
            let periods = match periods.as_slice() {
                [m, n] => (*m, *n),
                _ => return Err(Error::Precondition("expected periods as m,n".into())),
            };
            let x = quotient_by_lattice(family, periods)?;
            emit(out, path.as_deref(), &serialize_complex(&x))?;
            Ok(0)
        }
        Command::Translate {
            cert,
            shift,
            input,
            out: path,
            report,
        } => {
            let (x, bytes) = load(&input)?;
            let cert = FlatCertificate::from_json(&String::from_utf8_lossy(&read(&cert)?))?;
            let shift = match shift.as_slice() {
                [a, b] => (*a, *b),
                _ => return Err(Error::Precondition("expected shift as dx,dy".into())),
            };
            let check = translate_subcomplex(&x, &cert, shift)?;
            write_certificate(&check, path.as_deref())?;
            finish(check.report, &report, line, &bytes, started, out)
        }
        Command::Report { format, input } => {
            let text = String::from_utf8_lossy(&read(&input)?).into_owned();
            let report = CheckReport::from_json(&text).or_else(|_| CheckReport::from_text(&text))?;
            match format {
                Format::Text => out.write_all(report.to_text().as_bytes())?,
                Format::Json => writeln!(out, "{}", report.to_json())?,
            }
            Ok(report.verdict.exit_code())
        }
    }
}

fn build_dual(x: &TwoComplex, kind: DualKind) -> Result<DualComplex> {
    Ok(match kind {
        DualKind::Nerve => DualComplex::Nerve(build_nerve(x)?),
        DualKind::Quadrization => DualComplex::Quadrization(quadrize(x)?),
    })
}

fn write_certificate(check: &FlatCheck, path: Option<&Path>) -> Result<()> {
    if let (Some(p), Some(cert)) = (path, &check.certificate) {
        fs::write(p, cert.to_json())?;
    }
    Ok(())
}
