//! The `numrange` command line.
//!
//! Exit status: 0 on success, 1 on internal errors or failed checks, 2 on
//! usage or validation errors. Every error is reported as one line starting
//! with `error:` on stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numrange_core::analysis::{flat_portions, DEFAULT_GAP_TOL};
use numrange_core::kipp::{boundary, rank_k_range, sweep, RankKVerdict, DEFAULT_GRID, MIN_GRID};
use numrange_core::pisom::{
    build, cubic_minus, cubic_plus, exceptional_constants, validate_partial_isometry, PisomSpec,
};
use numrange_core::{ComplexMatrix, Error, DEFAULT_TOL};
use serde_json::{json, Value};

use crate::format::{fmt_num, round_json};
use crate::report::{analyze, rank_k_json, AnalyzeOptions, RANK_K_TOL};
use crate::reproduce::{self, DEFAULT_SEED};
use crate::spec_json::{parse_matrix, parse_spec, InputError, MatrixJson};
use crate::svg;

#[derive(Debug, Parser)]
#[command(
    name = "numrange",
    version,
    about = "Numerical ranges of small matrices and partial isometries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of sweep angles
    #[arg(long, global = true, default_value_t = DEFAULT_GRID)]
    grid: usize,

    /// Replaces every default tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Print shortest round-trip numbers instead of 12 significant digits
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Family spec, inline JSON or a path to a JSON file
    #[arg(long)]
    spec: Option<String>,

    /// Matrix JSON file `{"n": .., "entries": [[re, im], ..]}`
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member and print it with the validator verdict
    Construct(Input),
    /// Check AA*A = A
    Validate(Input),
    /// Full report: genericity, circles, flat portions, reducibility, rank-k ranges
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Rank-k ranges to include (default 2..=n, without vertices)
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
    },
    /// Boundary of W(A) as CSV (theta,re,im), JSON or SVG
    Boundary(Input),
    /// Ordered eigenvalues of Re(e^{-iθ}A) over the grid
    Sweep(Input),
    /// Rank-k numerical range as a polygon or a degenerate set
    RankRange {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Constants of the exceptional 5×5 matrices
    Constants,
    /// Run the acceptance checks
    Reproduce {
        /// Run a single check, by id or number
        #[arg(long)]
        only: Option<String>,
        /// Print results as a JSON array
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    /// Output already written; exit with status 1 without a diagnostic.
    ChecksFailed,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_)
            | Error::InvalidRank { .. }
            | Error::InvalidK { .. }
            | Error::GridTooSmall(_)
            | Error::UnsupportedDimension(_)
            | Error::DimensionMismatch { .. }
            | Error::NotHermitian { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

struct Loaded {
    matrix: ComplexMatrix,
    spec: Option<PisomSpec>,
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    if let Some(spec) = &input.spec {
        let text = if spec.trim_start().starts_with('{') {
            spec.clone()
        } else {
            std::fs::read_to_string(spec)
                .map_err(|e| Failure::Usage(format!("cannot read {spec}: {e}")))?
        };
        let spec = parse_spec(&text)?;
        return Ok(Loaded {
            matrix: build(&spec),
            spec: Some(spec),
        });
    }
    let path = input.matrix_file.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Loaded {
        matrix: parse_matrix(&text)?,
        spec: None,
    })
}

fn json_text(mut v: Value, exact: bool) -> String {
    round_json(&mut v, exact);
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_points<'a>(rows: impl Iterator<Item = (f64, f64, f64)> + 'a, exact: bool) -> String {
    let mut s = String::from("theta,re,im\n");
    for (t, re, im) in rows {
        let _ = writeln!(
            s,
            "{},{},{}",
            fmt_num(t, exact),
            fmt_num(re, exact),
            fmt_num(im, exact)
        );
    }
    s
}

fn use_color(cli: &Cli) -> bool {
    cli.out.is_none() && std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

fn execute(cli: &Cli) -> Result<String, (Failure, Option<String>)> {
    let fail = |f: Failure| (f, None);
    if cli.grid < MIN_GRID {
        return Err(fail(Failure::Usage(format!(
            "--grid must be at least {MIN_GRID}, got {}",
            cli.grid
        ))));
    }
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(fail(Failure::Usage(format!(
                "--tol must be positive and finite, got {t}"
            ))));
        }
    }
    let allowed: &[Format] = match cli.command {
        Command::Boundary(_) | Command::RankRange { .. } => {
            &[Format::Json, Format::Csv, Format::Svg]
        }
        Command::Sweep(_) => &[Format::Json, Format::Csv],
        _ => &[Format::Json],
    };
    if let Some(f) = cli.format {
        if !allowed.contains(&f) {
            let name = f
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            return Err(fail(Failure::Usage(format!(
                "--format {name} is not available for this subcommand"
            ))));
        }
    }
    let exact = cli.exact;
    let m = cli.grid;
    let tol = |default: f64| cli.tol.unwrap_or(default);

    let out = match &cli.command {
        Command::Construct(input) => {
            let l = load(input).map_err(fail)?;
            let mut v =
                serde_json::to_value(MatrixJson::from_matrix(&l.matrix)).expect("serializable");
            v["partial_isometry"] = json!(validate_partial_isometry(&l.matrix, tol(DEFAULT_TOL)));
            json_text(v, exact)
        }
        Command::Validate(input) => {
            let l = load(input).map_err(fail)?;
            let a = &l.matrix;
            let defect = (&a.matmul(&a.adjoint()).matmul(a) - a).frobenius_norm();
            json_text(
                json!({"partial_isometry": validate_partial_isometry(a, tol(DEFAULT_TOL)), "defect": defect}),
                exact,
            )
        }
        Command::Analyze { input, k } => {
            let l = load(input).map_err(fail)?;
            let opts = AnalyzeOptions {
                grid: m,
                tol: cli.tol,
                ks: k.clone(),
            };
            let report = analyze(&l.matrix, l.spec.as_ref(), &opts).map_err(|e| fail(e.into()))?;
            json_text(report, exact)
        }
        Command::Boundary(input) => {
            let l = load(input).map_err(fail)?;
            let curve = boundary(&l.matrix, m).map_err(|e| fail(e.into()))?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => csv_points(
                    curve
                        .thetas
                        .iter()
                        .zip(&curve.points)
                        .map(|(t, z)| (*t, z.re, z.im)),
                    exact,
                ),
                Format::Json => json_text(
                    json!({
                        "thetas": curve.thetas,
                        "points": curve.points.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                    }),
                    exact,
                ),
                Format::Svg => {
                    let flats = flat_portions(&l.matrix, m, tol(DEFAULT_GAP_TOL))
                        .map_err(|e| fail(e.into()))?;
                    let markers: Vec<_> = flats.iter().flat_map(|p| p.endpoints).collect();
                    svg::render(&curve.points, curve.closed, &markers)
                }
            }
        }
        Command::Sweep(input) => {
            let l = load(input).map_err(fail)?;
            let sw = sweep(&l.matrix, m).map_err(|e| fail(e.into()))?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => {
                    json_text(json!({"thetas": sw.thetas, "eigenvalues": sw.eigs}), exact)
                }
                _ => {
                    let mut s = String::from("theta");
                    for j in 1..=sw.matrix_dim {
                        let _ = write!(s, ",l{j}");
                    }
                    s.push('\n');
                    for (t, row) in sw.thetas.iter().zip(&sw.eigs) {
                        s.push_str(&fmt_num(*t, exact));
                        for x in row {
                            s.push(',');
                            s.push_str(&fmt_num(*x, exact));
                        }
                        s.push('\n');
                    }
                    s
                }
            }
        }
        Command::RankRange { input, k } => {
            let l = load(input).map_err(fail)?;
            let r = rank_k_range(&l.matrix, *k, m, tol(RANK_K_TOL)).map_err(|e| fail(e.into()))?;
            let points = match &r.verdict {
                RankKVerdict::EmptySet => Vec::new(),
                RankKVerdict::SinglePoint(z) => vec![*z],
                RankKVerdict::Polygon(v) => v.clone(),
            };
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => json_text(rank_k_json(&r, true), exact),
                Format::Csv => csv_points(points.iter().map(|z| (z.arg(), z.re, z.im)), exact),
                Format::Svg => match r.verdict {
                    RankKVerdict::Polygon(_) => svg::render(&points, true, &[]),
                    _ => svg::render(&[], false, &points),
                },
            }
        }
        Command::Constants => {
            let k = exceptional_constants();
            json_text(
                json!({
                    "alpha": k.alpha,
                    "c_plus": k.c_plus,
                    "c_minus": k.c_minus,
                    "t_plus": k.t_plus,
                    "t_minus": k.t_minus,
                    "cubic_plus_residual": cubic_plus(k.c_plus),
                    "cubic_minus_residual": cubic_minus(k.c_minus),
                }),
                exact,
            )
        }
        Command::Reproduce { only, json } => {
            let seed = cli.seed.unwrap_or(DEFAULT_SEED);
            let results = reproduce::run(only.as_deref(), seed).ok_or_else(|| {
                fail(Failure::Usage(format!(
                    "unknown check {:?}; known ids: {}",
                    only.as_deref().unwrap_or_default(),
                    reproduce::check_ids().join(", ")
                )))
            })?;
            let all_passed = results.iter().all(|r| r.passed);
            let text = if *json || cli.format == Some(Format::Json) {
                let mut s = serde_json::to_string_pretty(&results).expect("serializable");
                s.push('\n');
                s
            } else {
                let color = use_color(cli);
                let mut s = String::new();
                for r in &results {
                    let tag = match (r.passed, color) {
                        (true, true) => "\x1b[32mPASS\x1b[0m",
                        (false, true) => "\x1b[31mFAIL\x1b[0m",
                        (true, false) => "PASS",
                        (false, false) => "FAIL",
                    };
                    let _ = writeln!(s, "{tag} [{}] {}: {}", r.number, r.id, r.detail);
                }
                let passed = results.iter().filter(|r| r.passed).count();
                let _ = writeln!(s, "{passed}/{} checks passed", results.len());
                s
            };
            if !all_passed {
                return Err((Failure::ChecksFailed, Some(text)));
            }
            text
        }
    };
    Ok(out)
}

fn emit(cli: &Cli, text: &str, stdout: &mut dyn Write) -> Result<(), String> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    }
}

fn one_line(msg: &str) -> String {
    msg.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                let _ = writeln!(stderr, "error: a subcommand is required (see --help)");
                return 2;
            }
            let text = e.render().to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let msg = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(stderr, "error: {}", one_line(msg));
            return 2;
        }
    };
    let (text, failure) = match execute(&cli) {
        Ok(text) => (Some(text), None),
        Err((f, text)) => (text, Some(f)),
    };
    if let Some(text) = text {
        if let Err(msg) = emit(&cli, &text, stdout) {
            let _ = writeln!(stderr, "error: {}", one_line(&msg));
            return 1;
        }
    }
    match failure {
        None => 0,
        Some(Failure::ChecksFailed) => 1,
        Some(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {}", one_line(&msg));
            2
        }
        Some(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "error: {}", one_line(&msg));
            1
        }
    }
}
