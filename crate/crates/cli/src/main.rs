mod commands;
mod format;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Generate, verify and measure integer drawings of Horton sets.
///
/// Exit codes: 0 all checks passed, 1 a checked property failed,
/// 2 usage or input error, 3 a resource cap was exceeded.
#[derive(Debug, Parser)]
#[command(name = "horton", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// The quasi-polynomial drawing P^k.
    Small,
    /// The classic drawing H^k with doubly exponential y.
    Classic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Report {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HoleMode {
    /// Largest empty convex polygon and a witness.
    Max,
    /// Number of empty triangles.
    Triangles,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the drawing of the Horton set on 2^k points.
    Generate {
        k: u32,
        #[arg(long, short, value_enum, default_value = "small")]
        construction: Construction,
        #[arg(long, short, value_enum, default_value = "text")]
        format: Format,
        /// Output file; standard output when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Shade the slab R in SVG output.
        #[arg(long)]
        slab: bool,
    },
    /// Check properties of a point-set file ("-" reads standard input).
    ///
    /// With no check selected, --horton is assumed.
    Verify {
        file: PathBuf,
        /// The file is a Horton set in its x order.
        #[arg(long)]
        horton: bool,
        /// No three points are collinear.
        #[arg(long)]
        general_position: bool,
        /// The file has the same labeled order type as this one.
        #[arg(long, value_name = "FILE2")]
        order_type_equal: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Report,
    },
    /// Largest hole or number of empty triangles of a point set.
    Holes {
        file: PathBuf,
        #[arg(long, short, value_enum, default_value = "max")]
        mode: HoleMode,
        #[arg(long, value_enum, default_value = "text")]
        format: Report,
    },
    /// Tree, slab lines, girth growth checks and size for an isothetic drawing.
    Lowerbound {
        file: PathBuf,
        /// Level parameter; defaults to 2.
        #[arg(long, short, default_value_t = 2)]
        t: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Report,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::limits_from_env().and_then(|limits| match cli.command {
        Command::Generate { k, construction, format, out, slab } => {
            commands::generate(&limits, k, construction, format, out.as_deref(), slab)
        }
        Command::Verify { file, horton, general_position, order_type_equal, format } => {
            let checks = commands::Checks { horton, general_position, order_type_equal };
            commands::verify(&file, &checks, format)
        }
        Command::Holes { file, mode, format } => commands::holes(&limits, &file, mode, format),
        Command::Lowerbound { file, t, format } => commands::lowerbound(&file, t, format),
    });
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("horton: {e}");
            ExitCode::from(e.code())
        }
    }
}
