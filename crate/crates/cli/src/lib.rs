//! `ptree`: distances, projections and medians on the command line, plus the
//! verification suite for the Cauchy sequence and the structural checks.
//!
//! Exit status is 0 when no check fails, 2 when some check fails, and 1 on
//! usage or input errors.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use puiseux_tree::counterexample::{
    obstruction_corpus, obstruction_witness, verify_all, verify_branching, verify_cauchy,
    verify_limit_routes, verify_monotone, verify_obstruction, verify_vertical_identification,
    VerifyConfig,
};
use puiseux_tree::hplane::hp_distance;
use puiseux_tree::properties::{check_cross_ratio, verify_axioms, DEFAULT_SAMPLES};
use puiseux_tree::report::{Status, Summary, VerificationReport};
use puiseux_tree::series::{Exponent, Rational, DEFAULT_WINDOW};
use puiseux_tree::textio::{
    format_tree_point, parse_point, parse_rational, parse_series, parse_tree_point,
    report_to_json, ParseError, SERIES_GRAMMAR,
};
use puiseux_tree::tree::{median, project, tree_distance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;

const BRANCHING_PROBES: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "ptree", version, about = "Exact computations in the tree of the hyperbolic plane over real Puiseux series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two points
    #[command(subcommand)]
    Dist(DistCommand),
    /// Tree point of a half-plane point `x ; y`
    Project {
        #[arg(long)]
        z: String,
    },
    /// Median of three tree points `u ; t`
    Median {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        #[arg(long)]
        p3: String,
    },
    /// Run a verification and report pass/fail/skip per check
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum DistCommand {
    /// Pseudo-distance of two half-plane points `x ; y`
    Hp {
        #[arg(long)]
        z1: String,
        #[arg(long)]
        z2: String,
    },
    /// Distance of two tree points `u ; t`
    Tree {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Cauchy,
    Branching,
    Vertical,
    Obstruction,
    Axioms,
    Crossratio,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    target: Target,
    /// Largest sequence index checked
    #[arg(long, default_value_t = 32)]
    max_n: u32,
    /// Series: the candidate limit for `obstruction`, the second foot for `vertical`
    #[arg(long)]
    a: Option<String>,
    /// First foot for `vertical`
    #[arg(long, default_value = "0")]
    x: String,
    /// Comma-separated nonnegative height offsets for `vertical`
    #[arg(long, default_value = "0,1/4,1,3")]
    heights: String,
    /// Sample count for `axioms`; cross-ratio attempts default to a quarter of it
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest working window (positive rational) for series expansions
    #[arg(long, default_value_t = DEFAULT_WINDOW.to_string())]
    window: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug)]
enum UsageError {
    Input { flag: &'static str, error: ParseError },
    Invalid(String),
}

impl Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            UsageError::Input { flag, error } => write!(f, "--{flag}: {error}"),
            UsageError::Invalid(msg) => f.write_str(msg),
        }
    }
}

fn input<T>(flag: &'static str, r: Result<T, ParseError>) -> Result<T, UsageError> {
    r.map_err(|error| UsageError::Input { flag, error })
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, UsageError::Input { .. }) {
                let _ = writeln!(err, "\ninput grammar:\n{SERIES_GRAMMAR}");
            }
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, UsageError> {
    let text = match command {
        Command::Dist(DistCommand::Hp { z1, z2 }) => {
            let z1 = input("z1", parse_point(&z1))?;
            let z2 = input("z2", parse_point(&z2))?;
            hp_distance(&z1, &z2).to_string()
        }
        Command::Dist(DistCommand::Tree { p1, p2 }) => {
            let p1 = input("p1", parse_tree_point(&p1))?;
            let p2 = input("p2", parse_tree_point(&p2))?;
            tree_distance(&p1, &p2).to_string()
        }
        Command::Project { z } => format_tree_point(&project(&input("z", parse_point(&z))?)),
        Command::Median { p1, p2, p3 } => {
            let p1 = input("p1", parse_tree_point(&p1))?;
            let p2 = input("p2", parse_tree_point(&p2))?;
            let p3 = input("p3", parse_tree_point(&p3))?;
            format_tree_point(&median(&p1, &p2, &p3))
        }
        Command::Verify(args) => return verify(&args, out),
    };
    let _ = writeln!(out, "{text}");
    Ok(EXIT_OK)
}

fn parse_offsets(text: &str) -> Result<Vec<Rational>, UsageError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| input("heights", parse_rational(s)))
        .collect()
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, UsageError> {
    let window: Exponent = input("window", parse_rational(&args.window))?;
    if window <= Rational::from_integer(0.into()) {
        return Err(UsageError::Invalid(format!("--window must be positive, got {window}")));
    }
    let mut params = BTreeMap::new();
    params.insert("max_n".to_string(), args.max_n.to_string());
    params.insert("seed".to_string(), args.seed.to_string());
    let samples = args.samples.unwrap_or(DEFAULT_SAMPLES);

    let reports = match args.target {
        Target::Cauchy => vec![verify_monotone(args.max_n), verify_cauchy(args.max_n)],
        Target::Branching => vec![verify_branching(args.max_n, BRANCHING_PROBES, args.seed)],
        Target::Vertical => {
            let x = input("x", parse_series(&args.x))?;
            let a = input("a", parse_series(args.a.as_deref().unwrap_or("X^(-1/2)")))?;
            let offsets = parse_offsets(&args.heights)?;
            params.insert("heights".to_string(), args.heights.clone());
            let report = verify_vertical_identification(&x, &a, &offsets)
                .map_err(|e| UsageError::Invalid(e.to_string()))?;
            vec![report]
        }
        Target::Obstruction => match &args.a {
            Some(a) => {
                let a = input("a", parse_series(a))?;
                params.insert("a".to_string(), a.to_string());
                vec![obstruction_witness(&a, args.max_n)]
            }
            None => {
                let corpus = obstruction_corpus(args.seed);
                vec![verify_limit_routes(&corpus, args.max_n), verify_obstruction(&corpus, args.max_n)]
            }
        },
        Target::Axioms => {
            params.insert("samples".to_string(), samples.to_string());
            verify_axioms(samples, args.seed)
        }
        Target::Crossratio => {
            let attempts = args.samples.unwrap_or(DEFAULT_SAMPLES / 4);
            params.insert("samples".to_string(), attempts.to_string());
            params.insert("window".to_string(), window.to_string());
            vec![check_cross_ratio(attempts, args.seed, &window)]
        }
        Target::All => {
            params.insert("samples".to_string(), samples.to_string());
            params.insert("window".to_string(), window.to_string());
            let mut config = VerifyConfig::new(args.max_n, args.seed);
            config.samples = samples;
            config.window = window;
            verify_all(&config)
        }
    };

    let command = format!("verify {}", target_name(args.target));
    let _ = match args.format {
        Format::Json => writeln!(out, "{}", report_to_json(&command, &params, &reports)),
        Format::Text => write!(out, "{}", render_text(&command, &params, &reports)),
    };
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}

fn target_name(t: Target) -> String {
    t.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn render_text(command: &str, params: &BTreeMap<String, String>, reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    let joined = |m: &BTreeMap<String, String>| {
        m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    };
    s.push_str(&format!("{command}  {}\n", joined(params)));
    for r in reports {
        let counts: Vec<_> = r.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("{:<4}  {}  {}\n", r.status.to_string().to_uppercase(), r.name, counts.join(" ")));
        for w in &r.witnesses {
            s.push_str(&format!("      {w}\n"));
        }
    }
    let sum = Summary::of(reports);
    s.push_str(&format!("summary: pass={} fail={} skip={}\n", sum.pass, sum.fail, sum.skip));
    s
}
