//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 negative result
//! (e.g. an arrangement that is not fiber-type).

mod commands;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

pub use commands::Report;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hyparr", version, about = "Invariants of complex hyperplane arrangement complements")]
struct Cli {
    /// Emit the versioned JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress normal output and warnings; only the exit code and errors remain.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Flats of the intersection poset by codimension, with Möbius values.
    Lattice { file: PathBuf },
    /// Characteristic polynomial.
    Charpoly { file: PathBuf },
    /// Betti numbers of the complement.
    Betti { file: PathBuf },
    /// Search for a fibration tower (chain of modular flats).
    Fibertype { file: PathBuf },
    /// Stable wedge decomposition of the suspended complement.
    Suspension {
        file: PathBuf,
        /// Also evaluate the decomposition over the full intersection poset.
        #[arg(long)]
        full_poset: bool,
    },
    /// Surgery groups of the complement's fundamental group.
    Lgroups {
        file: PathBuf,
        /// Use this hyperplane count even when the input is not fiber-type.
        #[arg(long = "force-N", value_name = "N")]
        force_n: Option<u64>,
    },
    /// Print the braid arrangement in C^(n+1) in the file format.
    Braid { n: usize },
    /// Surgery groups of the pure braid group PB_n.
    #[command(name = "surgery-pb")]
    SurgeryPb { n: u64 },
    /// Strongly poly-free filtration data of PB_n.
    #[command(name = "spf-pb")]
    SpfPb { n: u64 },
}

pub(crate) enum Failure {
    Input(String),
}

/// Runs the CLI with `args[0]` as the program name. `stdin` is read only when
/// a file argument is `-`.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };

    let mut read = |path: &PathBuf| -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("<stdin>: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
    };

    let (name, input, outcome) = match &cli.command {
        Command::Lattice { file } => ("lattice", path_value(file), commands::lattice(&mut read, file)),
        Command::Charpoly { file } => ("charpoly", path_value(file), commands::charpoly(&mut read, file)),
        Command::Betti { file } => ("betti", path_value(file), commands::betti(&mut read, file)),
        Command::Fibertype { file } => ("fibertype", path_value(file), commands::fibertype(&mut read, file)),
        Command::Suspension { file, full_poset } => (
            "suspension",
            path_value(file),
            commands::suspension(&mut read, file, *full_poset),
        ),
        Command::Lgroups { file, force_n } => (
            "lgroups",
            path_value(file),
            commands::lgroups(&mut read, file, *force_n),
        ),
        Command::Braid { n } => ("braid", json!({ "n": n }), commands::braid(*n)),
        Command::SurgeryPb { n } => ("surgery-pb", json!({ "n": n }), commands::surgery_pb(*n)),
        Command::SpfPb { n } => ("spf-pb", json!({ "n": n }), commands::spf_pb(*n)),
    };

    let report = match outcome {
        Ok(r) => r,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "hyparr {name}: {msg}");
            return EXIT_INPUT;
        }
    };

    if !cli.quiet {
        if cli.json {
            let envelope = json!({
                "schema": SCHEMA_VERSION,
                "command": name,
                "input": input,
                "result": report.result,
                "warnings": report.warnings,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
        } else {
            let _ = write!(out, "{}", report.text);
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
        }
    }
    if let Some(msg) = &report.failure {
        let _ = writeln!(err, "hyparr {name}: {msg}");
    }
    report.exit
}

fn path_value(p: &std::path::Path) -> serde_json::Value {
    json!(p.display().to_string())
}
