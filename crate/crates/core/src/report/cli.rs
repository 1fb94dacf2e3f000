//! `cevconic <catalog|verify|fuzz|svg>`.
//!
//! Exit codes: 0 success, 1 a theorem FAILED, 2 inadmissible input,
//! 3 parse error, 4 I/O error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::json::{document, ConicInfo};
use super::{parse, svg, text};
use crate::config::{build_config, CevianConfig};
use crate::theorems::{fuzz_with, run_config, FuzzMix};
use crate::triangle::bary_to_point;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INADMISSIBLE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "cevconic", version, about = "Exact cevian-conic geometry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every named point, the conic, its class and center.
    Catalog(PointArgs),
    /// Run every registry check on one configuration.
    Verify(PointArgs),
    /// Run the checks on seeded random configurations.
    Fuzz(FuzzArgs),
    /// Draw the configuration as SVG.
    Svg(PointArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mix {
    Mixed,
    Steiner,
    Median,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    /// Vertices as "x1,y1;x2,y2;x3,y3".
    #[arg(long, default_value = "0,0;4,0;0,3", allow_hyphen_values = true)]
    pub triangle: String,
    /// Cartesian point "x,y".
    #[arg(long, conflicts_with = "bary", allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Barycentric point "u:v:w".
    #[arg(long, allow_hyphen_values = true)]
    pub bary: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output path; "-" is standard output.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, env = "CEVCONIC_SEED", default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    /// Coordinate bound for triangles and point heights.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Mix::Mixed)]
    pub mix: Mix,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

/// What a command produced, before it is written anywhere.
struct Output {
    body: String,
    code: i32,
}

enum Failure {
    Parse(String),
    Inadmissible(String),
}

fn load(args: &PointArgs) -> Result<CevianConfig, Failure> {
    let tri = parse::triangle(&args.triangle).map_err(|e| Failure::Parse(e.to_string()))?;
    let p = match (&args.point, &args.bary) {
        (Some(s), None) => parse::point(s).map_err(|e| Failure::Parse(e.to_string()))?,
        (None, Some(s)) => {
            let b = parse::bary(s).map_err(|e| Failure::Parse(e.to_string()))?;
            bary_to_point(&tri, &b)
        }
        _ => return Err(Failure::Parse("give exactly one of --point or --bary".into())),
    };
    build_config(&tri, &p).map_err(|e| Failure::Inadmissible(e.to_string()))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn catalog(args: &PointArgs) -> Result<Output, Failure> {
    let cfg = load(args)?;
    let info = ConicInfo::of(&cfg);
    let body = match args.format {
        Format::Text => text::catalog(&cfg, &info),
        Format::Json => pretty(&document(&cfg, &info, &[])),
    };
    Ok(Output { body, code: EXIT_OK })
}

fn verify(args: &PointArgs) -> Result<Output, Failure> {
    let cfg = load(args)?;
    let reports = run_config(&cfg);
    let failed = reports.iter().any(|r| r.status.is_failed());
    let body = match args.format {
        Format::Text => text::reports(&reports),
        Format::Json => pretty(&document(&cfg, &ConicInfo::of(&cfg), &reports)),
    };
    Ok(Output { body, code: if failed { EXIT_FAILED } else { EXIT_OK } })
}

fn fuzz(args: &FuzzArgs) -> Output {
    let mix = match args.mix {
        Mix::Mixed => FuzzMix::Mixed,
        Mix::Steiner => FuzzMix::Steiner,
        Mix::Median => FuzzMix::Median,
    };
    let summary = fuzz_with(args.seed, args.count, args.bound, mix, args.jobs);
    let body = match args.format {
        Format::Text => text::fuzz(&summary),
        Format::Json => pretty(&serde_json::to_value(&summary).expect("summary serializes")),
    };
    Output { body, code: if summary.failed > 0 { EXIT_FAILED } else { EXIT_OK } }
}

fn figure(args: &PointArgs, stderr: &mut dyn Write) -> Result<Output, Failure> {
    let cfg = load(args)?;
    let (body, warnings) = svg::render(&cfg, &ConicInfo::of(&cfg));
    for w in warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(Output { body, code: EXIT_OK })
}

fn emit(out: Option<&str>, body: &str, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match out {
        None | Some("-") => stdout.write_all(body.as_bytes()),
        Some(path) => std::fs::write(path, body),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", out.unwrap_or("stdout"));
            EXIT_IO
        }
    }
}

/// Parse `args` (program name first) and run, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (result, out) = match &cli.command {
        Command::Catalog(a) => (catalog(a), a.out.as_deref()),
        Command::Verify(a) => (verify(a), a.out.as_deref()),
        Command::Svg(a) => (figure(a, stderr), Some(a.out.as_deref().unwrap_or("cevconic.svg"))),
        Command::Fuzz(a) => (Ok(fuzz(a)), a.out.as_deref()),
    };
    match result {
        Ok(output) => match emit(out, &output.body, stdout, stderr) {
            EXIT_OK => output.code,
            io => io,
        },
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_PARSE
        }
        Err(Failure::Inadmissible(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INADMISSIBLE
        }
    }
}
