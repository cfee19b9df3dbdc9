mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nuplus_core::Error;
use output::Format;

/// Exact correction terms, V-sequences and nu+ of cable knots.
#[derive(Debug, Parser)]
#[command(name = "nuplus", version, about)]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Correction terms d(L(p,q), i).
    LensD {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        /// A single label (read mod p).
        #[arg(long = "i", allow_negative_numbers = true, conflicts_with = "all")]
        label: Option<i64>,
        /// Every label 0..p (the default).
        #[arg(long)]
        all: bool,
    },
    /// Correction term of p/q-surgery on a knot.
    SurgeryD {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(long = "i", allow_negative_numbers = true)]
        label: i64,
        #[arg(long)]
        knot: String,
    },
    /// V-sequence of the torus knot T(p,q).
    TorusV {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// nu+ of the (p,q) cable of a knot.
    Cable {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[command(flatten)]
        companion: Companion,
        /// 4-ball genus of the companion, for the slice-surface upper bound.
        #[arg(long)]
        g4: Option<u64>,
    },
    /// V-sequence and nu+ of a knot expression.
    NuPlus {
        #[arg(long)]
        knot: String,
    },
    /// Reproduce the reference tables.
    Tables,
    /// Run every property sweep.
    Verify {
        #[arg(long, default_value_t = 40)]
        max_p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Companion {
    /// Companion knot expression.
    #[arg(long)]
    knot: Option<String>,
    /// Companion given only by its nu+.
    #[arg(long)]
    nu: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };

    let result = match cli.command {
        Command::LensD {
            p,
            q,
            label,
            all: _,
        } => commands::lens_d(p, q, label),
        Command::SurgeryD { p, q, label, knot } => commands::surgery_d(p, q, label, &knot),
        Command::TorusV { p, q } => commands::torus_v(p, q),
        Command::Cable {
            p,
            q,
            companion,
            g4,
        } => commands::cable(p, q, companion.knot.as_deref(), companion.nu, g4),
        Command::NuPlus { knot } => commands::nu_plus(&knot),
        Command::Tables => Ok((commands::tables(), true)),
        Command::Verify { max_p, seed } => commands::verify(max_p, seed),
    };

    match result {
        Ok((record, ok)) => {
            print!("{}", record.render(format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        _ => 1,
    }
}
