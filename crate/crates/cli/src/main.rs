mod cache;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dm_core::verify::{
    t_from_involution_counts, verify_alternating_sum_with, verify_corollary_with,
    verify_main_theorem_with, Counts,
};
use dm_core::{
    classify_traced, family_n, pair_all, parse_matrix, phi, render_matrix, shape_checks,
    EnumerationBound, MainForm, MatrixFormat, VerificationReport,
};
use serde_json::json;

use cache::{CountSource, Family};

#[derive(Debug)]
pub enum CliError {
    /// Bad input or flags; exit status 2.
    Usage(String),
    /// Anything else that stops the command; exit status 1.
    Failure(String),
}

impl From<dm_core::Error> for CliError {
    fn from(e: dm_core::Error) -> Self {
        use dm_core::Error::*;
        match e {
            Overflow(_) | Defect(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<dm_core::ParseError> for CliError {
    fn from(e: dm_core::ParseError) -> Self {
        CliError::Usage(format!("bad matrix: {e}"))
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "dm",
    version,
    about = "Involutions by descents, symmetric matrix families T(n,k) and W(n,k), and the sign-reversing involution phi"
)]
struct Cli {
    /// Largest n any enumeration may use.
    #[arg(long, global = true, default_value_t = EnumerationBound::DEFAULT.max_n() as u32, value_parser = clap::value_parser!(u32).range(1..))]
    bound: u32,

    /// Read and write count rows in the cache directory.
    #[arg(long, global = true)]
    cache: bool,

    /// Cache directory used with --cache.
    #[arg(long, global = true, env = "DM_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Output format; csv is accepted by `tables` only.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    Main1,
    Main2,
    AltSum,
    Corollary,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count triangles for n = 1..max-n.
    Tables {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, ignore_case = true)]
        family: Family,
    },
    /// Check identities exactly and print one report per check.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = IdentityArg::All)]
        identity: IdentityArg,
        /// Check every n from 1 up to --n.
        #[arg(long)]
        up_to: bool,
    },
    /// Read one matrix and print its image under phi with the trace.
    Phi {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Read one matrix and print its case label and pivot data.
    Classify {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print every matrix of T(n,1) ∪ … ∪ T(n,n) with its image, one JSON object per line.
    Pair {
        #[arg(long)]
        n: usize,
        /// Restrict to matrices with an all-zero main diagonal.
        #[arg(long)]
        zero_diagonal: bool,
    },
    /// Recover T(n,k) from involution counts and compare with direct enumeration.
    Oracle {
        #[arg(long)]
        n: usize,
    },
    /// Symmetry, unimodality and log-concavity of each row I(n,·).
    Shapes {
        #[arg(long)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let mut stdout = io::stdout().lock();
    // a closed pipe is not worth reporting
    let _ = stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command, appending its output to `out`. `Ok(false)` means a check failed.
fn run(cli: &Cli, out: &mut String) -> Result<bool, CliError> {
    let bound = EnumerationBound::new(cli.bound as usize)?;
    if cli.format == OutputFormat::Csv && !matches!(cli.command, Command::Tables { .. }) {
        return Err(CliError::Usage(
            "--format csv is only available for `tables`".into(),
        ));
    }
    let cache_dir = match (cli.cache, &cli.cache_dir) {
        (false, _) => None,
        (true, Some(dir)) => Some(dir.clone()),
        (true, None) => {
            return Err(CliError::Usage(
                "--cache needs --cache-dir or DM_CACHE_DIR".into(),
            ))
        }
    };
    let source = CountSource::new(bound, cache_dir);
    let json_out = cli.format == OutputFormat::Json;

    match &cli.command {
        Command::Tables { max_n, family } => tables(&source, *max_n, *family, cli.format, out),
        Command::Verify { n, identity, up_to } => {
            let ns: Vec<usize> = if *up_to { (1..=*n).collect() } else { vec![*n] };
            verify(&source, &ns, *identity, json_out, out)
        }
        Command::Phi { input } => {
            let x = parse_matrix(&read_input(input.as_ref())?)?;
            let r = phi(&x)?;
            if json_out {
                let v = json!({
                    "input": x,
                    "image": r.image,
                    "label": r.label,
                    "m": r.m,
                    "x": r.x,
                    "inner_label": r.inner_label,
                    "fixed": r.is_fixed(),
                });
                writeln!(out, "{v}").unwrap();
            } else {
                out.push_str(
                    &String::from_utf8(render_matrix(&r.image, MatrixFormat::Plain)).unwrap(),
                );
                writeln!(out, "# label: {}", r.label).unwrap();
                writeln!(out, "# m: {}", r.m).unwrap();
                writeln!(out, "# x: {}", r.x).unwrap();
                if let Some(inner) = r.inner_label {
                    writeln!(out, "# inner: {inner}").unwrap();
                }
            }
            Ok(true)
        }
        Command::Classify { input } => {
            let x = parse_matrix(&read_input(input.as_ref())?)?;
            let c = classify_traced(&x)?;
            let n = family_n(&x)?;
            if json_out {
                let v = json!({
                    "n": n,
                    "label": c.label,
                    "m": c.m,
                    "x": c.x,
                    "inner_label": c.inner_label,
                });
                writeln!(out, "{v}").unwrap();
            } else {
                writeln!(out, "label: {}", c.label).unwrap();
                writeln!(out, "n: {n}").unwrap();
                writeln!(out, "m: {}", c.m).unwrap();
                writeln!(out, "x: {}", c.x).unwrap();
                if let Some(inner) = c.inner_label {
                    writeln!(out, "inner: {inner}").unwrap();
                }
            }
            Ok(true)
        }
        Command::Pair { n, zero_diagonal } => {
            for item in pair_all(*n, *zero_diagonal, bound)? {
                let (x, r) = item?;
                let v = json!({
                    "dim": x.dim(),
                    "matrix": x,
                    "image": r.image,
                    "label": r.label,
                    "m": r.m,
                    "x": r.x,
                    "inner_label": r.inner_label,
                    "fixed": r.is_fixed(),
                });
                writeln!(out, "{v}").unwrap();
            }
            Ok(true)
        }
        Command::Oracle { n } => {
            let involutions = source.counts(Family::I, *n)?;
            let recovered = t_from_involution_counts(*n, &involutions)?;
            let direct = source.counts(Family::T, *n)?;
            let passed = recovered == direct;
            if json_out {
                let v = json!({
                    "identity": "oracle",
                    "n": n,
                    "passed": passed,
                    "lhs": recovered,
                    "rhs": direct,
                });
                writeln!(out, "{v}").unwrap();
            } else {
                writeln!(out, "from involutions: {}", join(&recovered)).unwrap();
                writeln!(out, "direct:           {}", join(&direct)).unwrap();
                writeln!(out, "{}", if passed { "PASS" } else { "FAIL" }).unwrap();
            }
            Ok(passed)
        }
        Command::Shapes { max_n } => {
            let report = shape_checks(*max_n, bound)?;
            if json_out {
                writeln!(out, "{}", serde_json::to_string(&report).unwrap()).unwrap();
            } else {
                for r in &report.rows {
                    writeln!(
                        out,
                        "n={} row=[{}] symmetric={} unimodal={} log_concave={}",
                        r.n,
                        join(&r.row).replace(' ', ","),
                        r.symmetric,
                        r.unimodal,
                        r.log_concave
                    )
                    .unwrap();
                }
                match report.first_log_concave_failure {
                    Some(n) => writeln!(out, "first log-concavity failure: n={n}").unwrap(),
                    None => writeln!(out, "no log-concavity failure for n <= {max_n}").unwrap(),
                }
            }
            Ok(true)
        }
    }
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_input(path: Option<&PathBuf>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) => std::fs::read(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn tables(
    source: &CountSource,
    max_n: usize,
    family: Family,
    format: OutputFormat,
    out: &mut String,
) -> Result<bool, CliError> {
    source.bound().check(max_n)?;
    let rows = (1..=max_n)
        .map(|n| source.counts(family, n))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        OutputFormat::Plain => {
            for (idx, row) in rows.iter().enumerate() {
                writeln!(out, "{}: {}", idx + 1, join(row)).unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str("n,k,count\n");
            for (idx, row) in rows.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    writeln!(out, "{},{},{c}", idx + 1, j + family.first_k()).unwrap();
                }
            }
        }
        OutputFormat::Json => {
            let v = json!({
                "family": family.name(),
                "first_k": family.first_k(),
                "rows": rows
                    .iter()
                    .enumerate()
                    .map(|(idx, row)| json!({ "n": idx + 1, "counts": row }))
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{v}").unwrap();
        }
    }
    Ok(true)
}

fn verify(
    source: &CountSource,
    ns: &[usize],
    identity: IdentityArg,
    json_out: bool,
    out: &mut String,
) -> Result<bool, CliError> {
    if identity == IdentityArg::Corollary && !ns.iter().any(|n| n % 2 == 0) {
        return Err(dm_core::Error::OddCorollary(ns[0]).into());
    }
    let bound = source.bound();
    for &n in ns {
        bound.check(n)?;
    }

    let mut reports: Vec<VerificationReport> = Vec::new();
    for &n in ns {
        let wants = |id: IdentityArg| identity == id || identity == IdentityArg::All;
        if wants(IdentityArg::Main1) || wants(IdentityArg::Main2) {
            let counts = Counts {
                n,
                involutions: source.counts(Family::I, n)?,
                matrices: source.counts(Family::T, n)?,
            };
            if wants(IdentityArg::Main1) {
                reports.push(verify_main_theorem_with(&counts, MainForm::First)?);
            }
            if wants(IdentityArg::Main2) {
                reports.push(verify_main_theorem_with(&counts, MainForm::Second)?);
            }
        }
        if wants(IdentityArg::AltSum) {
            let t = source.counts(Family::T, n)?;
            reports.push(verify_alternating_sum_with(&t, n, bound)?);
        }
        if wants(IdentityArg::Corollary) {
            if n % 2 == 0 {
                let w = source.counts(Family::W, n)?;
                reports.push(verify_corollary_with(&w, n, bound)?);
            } else {
                eprintln!(
                    "note: n={n} is odd; every W({n},k) is 0 so the zero-diagonal sum is 0 (not a checked identity)"
                );
            }
        }
    }

    for r in &reports {
        if json_out {
            writeln!(out, "{}", serde_json::to_string(r).unwrap()).unwrap();
        } else {
            writeln!(out, "{r}").unwrap();
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}
