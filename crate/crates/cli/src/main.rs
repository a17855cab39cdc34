use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use polyprod::simplicial::DEFAULT_MAX_VERTICES;
use polyprod::Field;
use polyprod_cli::{run, Command, OutputFormat, RunOptions};

/// Poincaré series and wedge decompositions of polyhedral products.
#[derive(Debug, Parser)]
#[command(name = "polyprod", version)]
struct Args {
    /// smash-series | pp-series | summands | oracle-smash | oracle-pp | check | order
    command: Command,

    /// Problem file (JSON, or TOML with a .toml extension).
    spec: PathBuf,

    /// Coefficient field, "Q" or "Fp:<prime>".
    #[arg(long)]
    field: Option<Field>,

    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,

    /// Largest vertex count accepted.
    #[arg(long = "max-m", default_value_t = DEFAULT_MAX_VERTICES)]
    max_m: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Out {
    Text,
    Json,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let opts = RunOptions {
        field: args.field,
        out: match args.out {
            Out::Text => OutputFormat::Text,
            Out::Json => OutputFormat::Json,
        },
        max_m: args.max_m,
    };
    match run(args.command, &args.spec, &opts) {
        Ok(report) => {
            println!("{}", report.output);
            if report.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
