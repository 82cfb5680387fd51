mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lgorb_core::milnor::quintic::DEFAULT_MAX_DEGREE;
use lgorb_core::LgError;
use serde_json::{json, Value};

const GRAMMAR: &str = "\
polynomial: terms joined by + or -; a term is an optional coefficient (p/q or integer)
            followed by *-separated powers xK^E, e.g. \"x1^3 + x1*x2^3\"
group:      generators separated by ';', phases by ',', e.g. \"1/5,1/5,1/5,1/5,1/5\";
            with --mod k the phases are integers read as multiples of 1/k";

/// Exact invariants of invertible Landau-Ginzburg orbifolds. Output is JSON.
#[derive(Parser)]
#[command(name = "lgorb", version, after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Cubic,
    Quintic,
}

impl Model {
    fn as_str(self) -> &'static str {
        match self {
            Model::Cubic => "cubic",
            Model::Quintic => "quintic",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exponent matrix, atomic blocks, inverse, weights, c_W, mu and |G^max|.
    Analyze { poly: String },
    /// Sector-by-sector state space of W for a group of diagonal symmetries.
    StateSpace {
        poly: String,
        #[arg(long)]
        group: String,
        /// Read group phases as integers modulo this number.
        #[arg(long = "mod")]
        modulus: Option<i64>,
        /// Print the sector table as TSV instead of JSON.
        #[arg(long)]
        tsv: bool,
    },
    /// Degree-gap certificate over all ordered pairs of Milnor basis elements.
    VerifySplitting { poly: String },
    /// Period series and mirror map of the cubic or quintic model.
    MirrorMap {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        order: usize,
    },
    /// Quintic Yukawa coupling in the psi frame and in the flat coordinate.
    Yukawa {
        #[arg(long)]
        order: usize,
    },
    /// Flat extensions of the cubic chain-level splitting and its equivariance.
    HochschildCubic {
        #[arg(long)]
        order: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::StateSpace { .. } => "state-space",
            Command::VerifySplitting { .. } => "verify-splitting",
            Command::MirrorMap { .. } => "mirror-map",
            Command::Yukawa { .. } => "yukawa",
            Command::HochschildCubic { .. } => "hochschild-cubic",
        }
    }

    fn inputs(&self) -> Value {
        match self {
            Command::Analyze { poly } | Command::VerifySplitting { poly } => json!({ "poly": poly }),
            Command::StateSpace { poly, group, modulus, tsv } => {
                json!({ "poly": poly, "group": group, "mod": modulus, "tsv": tsv })
            }
            Command::MirrorMap { model, order } => json!({ "model": model.as_str(), "order": order }),
            Command::Yukawa { order } | Command::HochschildCubic { order } => json!({ "order": order }),
        }
    }
}

fn max_degree() -> Result<u32, LgError> {
    match std::env::var("LG_MAX_DEGREE") {
        Ok(v) => v.trim().parse().map_err(|_| LgError::Syntax {
            offset: 0,
            message: format!("LG_MAX_DEGREE must be a non-negative integer, got `{v}`"),
        }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn run(cmd: &Command) -> Result<Value, LgError> {
    match cmd {
        Command::Analyze { poly } => commands::analyze(poly),
        Command::StateSpace { poly, group, modulus, tsv } => commands::state_space(poly, group, *modulus, *tsv),
        Command::VerifySplitting { poly } => commands::verify_splitting(poly),
        Command::MirrorMap { model, order } => commands::mirror_map(model.as_str(), *order),
        Command::Yukawa { order } => commands::yukawa(*order, max_degree()?),
        Command::HochschildCubic { order } => commands::hochschild_cubic(*order),
    }
}

/// Variant name of an error, e.g. `NotSquare`.
fn error_kind(e: &LgError) -> String {
    let debug = format!("{e:?}");
    debug.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

/// Writes to stdout; a closed pipe on the reading end is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            if !usage {
                return ExitCode::SUCCESS;
            }
            eprintln!("\n{GRAMMAR}");
            return ExitCode::from(2);
        }
    };
    let cmd = &cli.command;
    match run(cmd) {
        Ok(Value::String(table)) => {
            emit(&table);
            ExitCode::SUCCESS
        }
        Ok(payload) => {
            let out = json!({
                "command": cmd.name(),
                "inputs": cmd.inputs(),
                "payload": payload,
                "exact": true,
            });
            emit(&format!("{out}\n"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let out = json!({
                "command": cmd.name(),
                "inputs": cmd.inputs(),
                "error": { "kind": error_kind(&e), "message": e.to_string() },
            });
            emit(&format!("{out}\n"));
            if e.is_internal() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
