//! `fibercone`: command-line front end for the fiber-cone toolkit.
//!
//! Exit codes: 0 success, 1 input error, 2 failed internal self-check.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fibercone::depth::ProbeConfig;
use fibercone::modp::DEFAULT_PRIME;
use fibercone::parse::{parse_ideal, parse_uint_list};
use fibercone::report::{
    analyze, powers_report, scan_report, semigroup_report, staircase, symmetric_report,
    AnalyzeOptions,
};
use fibercone::Error;
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "fibercone", version, about = "Fiber cones of monomial ideals in K[x, y]")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit the versioned JSON schema instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random linear forms of the depth probe
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Prime field for the depth probe
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Degree bound K for powers, Hilbert data and the depth probe
    #[arg(long, global = true, default_value_t = 6)]
    kmax: u32,
    /// Number of probe trials
    #[arg(long, global = true, default_value_t = 3)]
    trials: u32,
    /// Divide out the common monomial factor of the generators
    #[arg(long, global = true)]
    normalize: bool,
    /// Write the report to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shape classification and depth verdict
    Analyze {
        /// `x^2, x*y, y^2` or `(2,0),(1,1),(0,2)`
        ideal: String,
    },
    /// mu(I^k) table, shapes of powers and reduction-number search
    Powers {
        ideal: String,
        /// Highest power (overrides --kmax)
        #[arg(long)]
        k: Option<u32>,
        /// Search bound for the reduction number (default max(8, a_1))
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Fiber-cone presentation, Gröbner self-check, initial ideal, Hilbert data
    Fiber { ideal: String },
    /// Classify (x^c, x^b y^a, x^a y^b, y^c)
    Symmetric {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
    },
    /// Apéry set and Cohen-Macaulay test for a monomial curve
    Semigroup {
        /// Comma-separated generators, e.g. `3,4,7`
        #[arg(long)]
        gens: String,
        /// Element for the Apéry set (default: largest generator)
        #[arg(long)]
        apery: Option<u64>,
    },
    /// Grid of symmetric classifications over 0 < a < b < c
    Scan {
        #[arg(long)]
        amax: u64,
        #[arg(long)]
        bmax: u64,
        #[arg(long)]
        cmax: u64,
    },
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let g = &cli.global;
    let probe = ProbeConfig {
        kmax: g.kmax,
        trials: g.trials,
        prime: g.prime,
        seed: g.seed,
        exact_checks: true,
    };
    let opts = AnalyzeOptions { normalize: g.normalize, fiber: false, probe };
    Ok(match &cli.command {
        Command::Analyze { ideal } => {
            let report = analyze(&parse_ideal(ideal)?, &opts)?;
            emit(g.json, &report, |r| {
                let mut s = r.render_text();
                if let Some(art) = staircase(&r.normalized.ideal, 40) {
                    s.push_str("\nstaircase (o generator, # in I):\n");
                    s.push_str(&art);
                }
                s
            })
        }
        Command::Fiber { ideal } => {
            let report = analyze(&parse_ideal(ideal)?, &AnalyzeOptions { fiber: true, ..opts })?;
            emit(g.json, &report, |r| r.render_text())
        }
        Command::Powers { ideal, k, bound } => {
            let mut ideal = parse_ideal(ideal)?;
            if g.normalize {
                ideal = ideal.normalize().0;
            }
            let report = powers_report(&ideal, k.unwrap_or(g.kmax), *bound)?;
            emit(g.json, &report, |r| r.render_text())
        }
        Command::Symmetric { a, b, c } => {
            let report = symmetric_report(*a, *b, *c)?;
            emit(g.json, &report, |r| r.render_text())
        }
        Command::Semigroup { gens, apery } => {
            let report = semigroup_report(&parse_uint_list(gens)?, *apery)?;
            emit(g.json, &report, |r| r.render_text())
        }
        Command::Scan { amax, bmax, cmax } => {
            let report = scan_report(*amax, *bmax, *cmax)?;
            emit(g.json, &report, |r| r.render_text())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &out),
                None => io::stdout().write_all(out.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
