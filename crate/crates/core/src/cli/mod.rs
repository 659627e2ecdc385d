//! The `phaseint` command surface.
//!
//! Every subcommand writes to stdout or, with `-o`, atomically to a file.
//! Numbers in CSV and JSON carry 10 significant digits; the `text` table
//! rounds to 4 to 6 significant digits for reading.

mod commands;
mod config;
mod output;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

pub use config::ConfigFile;

use crate::error::Error;
use crate::potentials::Family;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  1  I/O failure
  2  usage error (bad flags, unsupported family, empty range)
  3  oracle failure (table rows are still written, without E_exact)
  4  line tracing failure (the lines that did trace are still written)
  5  parse error in an itinerary or config file (line number reported)

A config file (--config) holds `key = value` lines, `#` starts a comment.
Keys are long flag names without dashes, plus `family`. Flags given on the
command line override the file.";

#[derive(Debug, Parser)]
#[command(name = "phaseint", version, about = "WKB levels with Stokes-constant corrections, exact Stokes constants and Stokes diagrams", after_help = EXIT_CODES)]
struct Cli {
    /// Read defaults from a `key = value` file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy table: E_exact, E_wkb, cos W and E_PI for n = 0..=n_max.
    Table(TableArgs),
    /// Exact Stokes constant and gap |S - i| for weber (in E) or budden (in c).
    Stokes(StokesArgs),
    /// Stokes and anti-Stokes lines of a family.
    Diagram(DiagramArgs),
    /// Real-axis potential V(x).
    Profile(ProfileArgs),
    /// Run a continuation itinerary and report the terminal expression.
    Itinerary(ItineraryArgs),
}

/// Output encodings; not every command supports every one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "svg" => Ok(Format::Svg),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}` (text, csv, json or svg)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        })
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// text, csv, json or svg.
    #[arg(long)]
    format: Option<Format>,
    /// Write here instead of stdout.
    #[arg(short, long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Box half-width L for the brute-force solvers.
    #[arg(long)]
    box_half_width: Option<f64>,
    /// Finite-difference intervals on the coarse grid.
    #[arg(long)]
    grid_points: Option<usize>,
    /// RK4 step of the pt_cubic shooting.
    #[arg(long)]
    shooting_step: Option<f64>,
    /// Upper end of the pt_cubic energy scan.
    #[arg(long)]
    energy_scan_max: Option<f64>,
    /// Spacing of the pt_cubic energy scan.
    #[arg(long)]
    scan_step: Option<f64>,
}

#[derive(Debug, Args)]
struct TableArgs {
    family: Option<Family>,
    /// Highest level.
    #[arg(long)]
    n_max: Option<usize>,
    /// Skip the brute-force E_exact column.
    #[arg(long)]
    no_oracle: bool,
    /// Solve the corrected condition for E directly instead of using the
    /// first-order shift.
    #[arg(long)]
    self_consistent: bool,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct StokesArgs {
    family: Option<Family>,
    /// First parameter of the sweep.
    #[arg(long)]
    from: Option<f64>,
    /// Last parameter of the sweep.
    #[arg(long)]
    to: Option<f64>,
    /// Number of samples.
    #[arg(long)]
    points: Option<usize>,
    /// Evaluate a single parameter instead of a sweep.
    #[arg(long)]
    at: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct DiagramArgs {
    family: Option<Family>,
    /// Energy parameter.
    #[arg(long = "E", value_name = "E")]
    e: Option<f64>,
    /// Budden pole strength.
    #[arg(long = "c", value_name = "C")]
    c: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    family: Option<Family>,
    /// Energy; defaults to the brute-force ground level.
    #[arg(long = "E", value_name = "E")]
    e: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<f64>,
    /// Number of samples.
    #[arg(long)]
    points: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ItineraryArgs {
    family: Option<Family>,
    /// Phase integral W.
    #[arg(long = "W", value_name = "W", allow_hyphen_values = true)]
    w: Option<f64>,
    /// Real part of the Stokes constant (default 0).
    #[arg(long, allow_hyphen_values = true)]
    s_re: Option<f64>,
    /// Imaginary part of the Stokes constant (default 1).
    #[arg(long, allow_hyphen_values = true)]
    s_im: Option<f64>,
    /// Itinerary file; the family's built-in walk otherwise.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
}

/// A failed command: exit code plus the message for stderr.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

/// Exit code for a library error.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::NotApplicable { .. } | Error::InvalidArgument(_) | Error::UnknownVertex(_) => 2,
        Error::NotConverged { .. } | Error::NoBracket { .. } => 3,
        Error::StepFailure { .. } | Error::UnsupportedOrder(_) | Error::DegenerateLeadingCoefficient => 4,
        Error::ItineraryParse { .. } => 5,
        _ => 1,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: exit_code(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self { code: 1, message: e.to_string() }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Warnings and errors go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = load_config(cli.config.as_deref()).and_then(|cfg| match cli.command {
        Command::Table(a) => commands::table(a, &cfg, stdout, stderr),
        Command::Stokes(a) => commands::stokes(a, &cfg, stdout),
        Command::Diagram(a) => commands::diagram(a, &cfg, stdout, stderr),
        Command::Profile(a) => commands::profile(a, &cfg, stdout),
        Command::Itinerary(a) => commands::itinerary(a, &cfg, stdout),
    });
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

const KNOWN_KEYS: &[&str] = &[
    "family",
    "n-max",
    "no-oracle",
    "self-consistent",
    "box-half-width",
    "grid-points",
    "shooting-step",
    "energy-scan-max",
    "scan-step",
    "format",
    "output",
    "from",
    "to",
    "points",
    "at",
    "E",
    "c",
    "x-min",
    "x-max",
    "W",
    "s-re",
    "s-im",
    "file",
];

fn load_config(path: Option<&std::path::Path>) -> Result<ConfigFile, Failure> {
    let Some(path) = path else {
        return Ok(ConfigFile::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?;
    let cfg = ConfigFile::parse(&text)
        .map_err(|e| Failure { code: 5, message: format!("{}: {e}", path.display()) })?;
    if let Some((key, line)) = cfg.unknown_keys(KNOWN_KEYS).into_iter().next() {
        return Err(Failure { code: 5, message: format!("{}: line {line}: unknown key `{key}`", path.display()) });
    }
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["phaseint"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn help_lists_exit_codes() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Exit codes"));
        assert!(out.contains("5  parse error"));
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let (code, _, err) = run_capture(&["plot"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::not_applicable(Family::Budden, "x")), 2);
        assert_eq!(exit_code(&Error::NoBracket { found: 1, wanted: 2, scan_max: 3.0 }), 3);
        assert_eq!(exit_code(&Error::StepFailure { re: 0.0, im: 0.0, reason: String::new() }), 4);
        assert_eq!(exit_code(&Error::ItineraryParse { line: 1, message: String::new() }), 5);
    }

    #[test]
    fn format_names_round_trip() {
        for f in [Format::Text, Format::Csv, Format::Json, Format::Svg] {
            assert_eq!(f.to_string().parse::<Format>().unwrap(), f);
        }
        assert!("png".parse::<Format>().is_err());
    }
}
