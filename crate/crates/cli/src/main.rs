use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use ratcurve_cli::{run_document, Defaults};

/// Splitting types, dimension formulas, line censuses and Hirzebruch class
/// arithmetic, driven by JSON job documents.
#[derive(Parser)]
#[command(name = "ratcurve", version)]
struct Args {
    /// Field for jobs that do not name one: "Q" or "Fp:<prime>".
    #[arg(long, default_value = "Q")]
    field: String,
    /// Seed for jobs that do not carry one.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Job file, or "-" for standard input.
    #[arg(long, default_value = "-")]
    jobs: String,
    /// Worker threads for batches and self-checks.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = if args.jobs == "-" {
        let mut s = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut s) {
            eprintln!("ratcurve: cannot read standard input: {e}");
            return ExitCode::from(2);
        }
        s
    } else {
        match std::fs::read_to_string(&args.jobs) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("ratcurve: cannot read {}: {e}", args.jobs);
                return ExitCode::from(2);
            }
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(args.parallel.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("ratcurve: cannot start worker threads: {e}");
            return ExitCode::from(1);
        }
    };
    let defaults = Defaults { field: args.field, seed: args.seed };
    let outcome = pool.install(|| run_document(&text, &defaults));
    println!("{}", outcome.json);
    ExitCode::from(outcome.exit as u8)
}
