use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liecap::catalog::{build, default_epsilons, list_with_epsilons, CatalogKey};
use liecap::covers::exterior_cover;
use liecap::lie::LieAlgebra;
use liecap::linalg::{Field, Rational};
use liecap::par::Execution;
use liecap::report::{run_selector, InvariantReport, VerificationSuite, VerifyOptions, CSV_HEADER};
use liecap::Error;

#[derive(Parser)]
#[command(
    name = "liecap",
    version,
    about = "Schur multipliers, exterior squares and capability of nilpotent Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog algebras of one dimension (1 to 6).
    List {
        dim: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Report the invariants of a catalog algebra or of an algebra read from JSON.
    Invariants {
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        key: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Recompute the expected tables and compare them row by row.
    VerifyTables {
        /// all, dim4, multipliers5, exterior5, diagonal5, tensor5, multipliers6,
        /// exterior6, census, kunneth or theorem2
        suite: String,
        /// Q or Fp:<p>
        #[arg(long, default_value = "Q")]
        field: String,
        /// Comma-separated epsilon samples for the parameterized families.
        #[arg(long, default_value = "0,1,-1,2", allow_hyphen_values = true)]
        epsilon_set: String,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Build the exterior cover of a catalog algebra.
    Cover {
        key: String,
        /// Print the covering algebra as JSON.
        #[arg(long)]
        dump_star: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::JacobiViolation { .. } => 3,
            Error::Parse(_)
            | Error::UnknownKey(_)
            | Error::EpsilonRequired(_)
            | Error::EpsilonForbidden(_)
            | Error::UnsupportedDimension(_)
            | Error::InvalidPrime(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::List { dim, format } => list(&mut out, dim, format),
        Command::Invariants { key, file, format } => invariants(&mut out, key, file, format),
        Command::VerifyTables { suite, field, epsilon_set, jobs, format } => {
            verify(&mut out, &suite, &field, &epsilon_set, jobs, format)
        }
        Command::Cover { key, dump_star } => cover(&mut out, &key, dump_star),
    };
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn list(out: &mut String, dim: usize, format: ListFormat) -> Result<u8, Failure> {
    let eps = default_epsilons();
    let keys = list_with_epsilons(dim, &eps)?;
    let mut rows = Vec::new();
    for key in &keys {
        let entry = build(key)?;
        let family = key.is_parameterized().then(|| "epsilon family".to_string());
        rows.push((key.to_string(), entry.structure_note.to_string(), family));
    }
    match format {
        ListFormat::Text => {
            for (key, note, family) in &rows {
                let mut line = key.clone();
                if let Some(f) = family {
                    line.push_str(&format!("  [{f}]"));
                }
                if !note.is_empty() {
                    line.push_str(&format!("  {note}"));
                }
                writeln!(out, "{line}").unwrap();
            }
        }
        ListFormat::Json => {
            let json: Vec<_> = rows
                .iter()
                .map(|(key, note, family)| {
                    serde_json::json!({"key": key, "note": note, "epsilon_family": family.is_some()})
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serializable")).unwrap();
        }
    }
    Ok(0)
}

fn load(key: Option<String>, file: Option<PathBuf>) -> Result<(String, LieAlgebra), Failure> {
    match (key, file) {
        (Some(k), None) => {
            let key: CatalogKey = k.parse()?;
            Ok((key.to_string(), build(&key)?.algebra))
        }
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let l = LieAlgebra::from_json_str(&text)?;
            if let Err(v) = l.validate() {
                return Err(Failure { code: 3, message: format!("{v}") });
            }
            let name = path.file_stem().map_or("algebra".into(), |s| s.to_string_lossy().into_owned());
            Ok((name, l))
        }
        _ => Err(usage("give either a catalog key or --file")),
    }
}

fn invariants(out: &mut String, key: Option<String>, file: Option<PathBuf>, format: Format) -> Result<u8, Failure> {
    let (name, l) = load(key, file)?;
    let report = InvariantReport::compute(&name, &l)?;
    match format {
        Format::Json => writeln!(out, "{}", report.to_json()).unwrap(),
        Format::Pretty => out.push_str(&report.pretty()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure { code: 1, message: e.to_string() };
            w.write_record(CSV_HEADER).map_err(io)?;
            w.write_record(report.csv_record()).map_err(io)?;
            let bytes = w.into_inner().map_err(|e| Failure { code: 1, message: e.to_string() })?;
            out.push_str(&String::from_utf8(bytes).expect("csv output is UTF-8"));
        }
    }
    Ok(0)
}

fn parse_field(s: &str) -> Result<Field, Failure> {
    match s {
        "Q" => Ok(Field::Rationals),
        _ => {
            let p = s
                .strip_prefix("Fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| usage(format!("bad field `{s}` (expected Q or Fp:<p>)")))?;
            Ok(Field::prime(p)?)
        }
    }
}

fn parse_epsilons(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',').map(|t| t.trim().parse::<Rational>().map_err(|e| usage(format!("bad epsilon `{t}`: {e}")))).collect()
}

fn verify(
    out: &mut String,
    suite: &str,
    field: &str,
    eps: &str,
    jobs: Option<usize>,
    format: ListFormat,
) -> Result<u8, Failure> {
    let opts = VerifyOptions {
        field: parse_field(field)?,
        epsilons: parse_epsilons(eps)?,
        exec: if jobs == Some(1) { Execution::Sequential } else { Execution::Parallel },
        ..VerifyOptions::default()
    };
    let suites = run_with_jobs(jobs, || run_selector(suite, &opts))??;
    match format {
        ListFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&suites).expect("serializable")).unwrap(),
        ListFormat::Text => print_suites(out, &suites),
    }
    Ok(if suites.iter().all(VerificationSuite::passed) { 0 } else { 1 })
}

#[cfg(feature = "parallel")]
fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        Some(n) if n > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure { code: 1, message: e.to_string() })?;
            Ok(pool.install(f))
        }
        Some(0) => Err(usage("--jobs must be at least 1")),
        _ => Ok(f()),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    if jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    Ok(f())
}

fn print_suites(out: &mut String, suites: &[VerificationSuite]) {
    for s in suites {
        let passed = s.rows.iter().filter(|r| r.pass).count();
        writeln!(out, "== {} ({}/{} rows pass)", s.id, passed, s.rows.len()).unwrap();
        let width = s.rows.iter().map(|r| r.subject.chars().count()).max().unwrap_or(0);
        for r in &s.rows {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            let pad = " ".repeat(width - r.subject.chars().count());
            writeln!(out, "{verdict}  {}{pad}  {}: {}", r.subject, r.quantity, r.computed).unwrap();
        }
        for r in s.failures() {
            writeln!(out, "DIFF {}", serde_json::to_string(r).expect("serializable")).unwrap();
        }
    }
}

fn cover(out: &mut String, key: &str, dump_star: bool) -> Result<u8, Failure> {
    let key: CatalogKey = key.parse()?;
    let l = build(&key)?.algebra;
    let c = exterior_cover(&l)?;
    writeln!(out, "algebra            {key}").unwrap();
    writeln!(out, "generators         {}", c.generators).unwrap();
    writeln!(out, "free class         {}", c.free_class).unwrap();
    writeln!(out, "free dim           {}", c.free_dim).unwrap();
    writeln!(out, "cover dim          {}", c.star.dim()).unwrap();
    writeln!(out, "multiplier part    {}", c.multiplier_part.dim()).unwrap();
    writeln!(out, "derived part       {}", c.derived_part.dim()).unwrap();
    writeln!(out, "exterior center    {}", c.exterior_center().dim()).unwrap();
    if dump_star {
        writeln!(out, "{}", c.star.to_json_string()).unwrap();
    }
    Ok(0)
}
