//! Transition-matrix tables for one reduced word and one weight: prints the
//! four matrices [P:~E], [~E:E], [E:L], and [P:L] with rows and columns
//! labelled by Lusztig data.
//!
//! Exit codes: 0 on success, 2 on usage or configuration errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use quantum_pbw::report::{build_cartan, transition_tables, RunConfig};
use quantum_pbw::root_data::{ReducedWord, Weight};
use quantum_pbw_cli::{parse_int_list, render_tables};

#[derive(Parser, Debug)]
#[command(name = "tables", about = "Print PBW/canonical transition-matrix tables")]
struct Args {
    /// Cartan type: A, D, or E.
    #[arg(long = "type", value_name = "LETTER")]
    cartan_type: String,

    /// Rank of the root system.
    #[arg(long)]
    rank: usize,

    /// The weight in simple-root coordinates, e.g. "1,1".
    #[arg(long, value_name = "a1,a2,...")]
    beta: String,

    /// The reduced word of the longest Weyl element, e.g. "1,2,1".
    #[arg(long, value_name = "i1,i2,...")]
    word: String,

    /// Output format: json, csv, or latex.
    #[arg(long, default_value = "json")]
    format: String,

    /// Write the tables to this path instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn run(args: &Args) -> anyhow::Result<String> {
    let config = RunConfig {
        cartan_type: args.cartan_type.clone(),
        rank: args.rank,
        ..RunConfig::default()
    };
    let c = build_cartan(&config)?;
    let beta = Weight {
        coords: parse_int_list(&args.beta)?,
    };
    let letters = parse_int_list(&args.word)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| anyhow::anyhow!("negative letter")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let word = ReducedWord::new(&c, letters)?;
    let tables = transition_tables(&c, &word, &beta)?;
    render_tables(&tables, &args.format)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let rendered = match run(&args) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {}", path.display(), e);
            return ExitCode::from(2);
        }
    } else {
        print!("{}", rendered);
    }
    ExitCode::SUCCESS
}
