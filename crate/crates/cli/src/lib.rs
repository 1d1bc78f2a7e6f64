//! The `hypoly` command-line tool: every subcommand reads flags or a JSON
//! request and writes a single JSON envelope to standard output.

mod commands;
pub mod error;
pub mod input;
mod isom;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

pub use error::{CliError, EXIT_DOMAIN, EXIT_INPUT};

#[derive(Parser, Debug)]
#[command(name = "hypoly", version, about = "Hyperpolygon spaces, polygon spaces and parabolic Higgs bundles")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Read parameters from a JSON request; explicit flags take precedence.
    #[arg(long, global = true)]
    json_in: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether no subset sum vanishes.
    Generic(commands::AlphaArgs),
    /// Short subsets, ascending by bitmask.
    Shortsets(commands::ShortSetArgs),
    /// Sign of every canonical subset sum.
    Chamber(commands::AlphaArgs),
    /// Whether the polygon space is nonempty.
    PolygonNonempty(commands::AlphaArgs),
    /// Fixed components of the circle action.
    Fixed(commands::AlphaArgs),
    /// Core components, or the intersection of two with `--S` and `--T`.
    Core(commands::CoreArgs),
    /// Poincaré polynomials and the middle Betti number.
    Betti(commands::AlphaArgs),
    /// Triangular family and the top power of `c₁` on the polygon space.
    Triangular(commands::AlphaArgs),
    /// Integral of a monomial in `c_1, …, c_n` over a core component.
    Intersect(commands::IntersectArgs),
    /// Intersection pairing on a basis of middle-degree classes.
    Pairing(commands::PairingArgs),
    /// Ring presentation and graded dimensions.
    Ring(commands::RingArgs),
    /// Whether the ring relations integrate to zero.
    VerifyIdeal(commands::SetArgs),
    /// Critical submanifolds of the Hitchin function.
    PhbCritical(commands::PhbArgs),
    /// Check a hyperpolygon or parabolic Higgs bundle point.
    VerifyIsom(commands::IsomArgs),
    /// Report for crossing a single wall.
    Wallcross(commands::WallArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Generic(_) => "generic",
            Command::Shortsets(_) => "shortsets",
            Command::Chamber(_) => "chamber",
            Command::PolygonNonempty(_) => "polygon-nonempty",
            Command::Fixed(_) => "fixed",
            Command::Core(_) => "core",
            Command::Betti(_) => "betti",
            Command::Triangular(_) => "triangular",
            Command::Intersect(_) => "intersect",
            Command::Pairing(_) => "pairing",
            Command::Ring(_) => "ring",
            Command::VerifyIdeal(_) => "verify-ideal",
            Command::PhbCritical(_) => "phb-critical",
            Command::VerifyIsom(_) => "verify-isom",
            Command::Wallcross(_) => "wallcross",
        }
    }
}

fn dispatch(cmd: Command, params: Option<&Map<String, Value>>) -> Result<Value, CliError> {
    use commands::*;
    use input::merge;
    match cmd {
        Command::Generic(a) => generic(merge(a, params)?),
        Command::Shortsets(a) => shortsets(merge(a, params)?),
        Command::Chamber(a) => chamber(merge(a, params)?),
        Command::PolygonNonempty(a) => polygon(merge(a, params)?),
        Command::Fixed(a) => fixed(merge(a, params)?),
        Command::Core(a) => core(merge(a, params)?),
        Command::Betti(a) => betti(merge(a, params)?),
        Command::Triangular(a) => triangular(merge(a, params)?),
        Command::Intersect(a) => intersect(merge(a, params)?),
        Command::Pairing(a) => pairing(merge(a, params)?),
        Command::Ring(a) => ring(merge(a, params)?),
        Command::VerifyIdeal(a) => verify_ideal(merge(a, params)?),
        Command::PhbCritical(a) => phb_critical(merge(a, params)?),
        Command::VerifyIsom(a) => verify_isom(merge(a, params)?),
        Command::Wallcross(a) => wallcross(merge(a, params)?),
    }
}

fn execute(cli: Cli, argv: &[OsString]) -> Result<Value, CliError> {
    let request = match &cli.json_in {
        Some(path) => Some(input::request_params(input::load_json(path)?)?),
        None => None,
    };
    let (named, params) = match request {
        Some((named, params)) => (named, Some(params)),
        None => (None, None),
    };
    let cmd = match (cli.command, named) {
        (Some(cmd), Some(named)) if cmd.name() != named => {
            return Err(CliError::input(
                "COMMAND_MISMATCH",
                format!("request names `{named}` but `{}` was invoked", cmd.name()),
            ))
        }
        (Some(cmd), _) => cmd,
        (None, Some(named)) => {
            let mut args = vec![argv.first().cloned().unwrap_or_else(|| "hypoly".into()), named.into()];
            args.extend(argv.iter().skip(1).cloned());
            match Cli::try_parse_from(args) {
                Ok(Cli { command: Some(cmd), .. }) => cmd,
                Ok(_) => return Err(CliError::input("USAGE", "no subcommand given")),
                Err(e) => return Err(CliError::input("USAGE", e.to_string())),
            }
        }
        (None, None) => return Err(CliError::input("USAGE", "no subcommand given")),
    };
    dispatch(cmd, params.as_ref())
}

/// Runs the tool on `argv` (including the program name); returns the exit code and output text.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let pretty = argv.iter().any(|a| a == "--pretty");
    let (code, envelope) = match Cli::try_parse_from(&argv) {
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            return (0, e.to_string());
        }
        Err(e) => {
            let err = CliError::input("USAGE", e.render().to_string().trim_end());
            (err.exit, failure(&err))
        }
        Ok(cli) => match execute(cli, &argv) {
            Ok(result) => (0, json!({ "ok": true, "result": result })),
            Err(err) => (err.exit, failure(&err)),
        },
    };
    let text = if pretty {
        serde_json::to_string_pretty(&envelope)
    } else {
        serde_json::to_string(&envelope)
    }
    .expect("JSON values always serialize");
    (code, text)
}

fn failure(err: &CliError) -> Value {
    json!({ "ok": false, "error": { "code": err.code, "message": err.message } })
}
