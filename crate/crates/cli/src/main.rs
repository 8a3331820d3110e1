use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use equising::commands::{cmd_classify, cmd_family, cmd_milnor, cmd_sequence, CliError, Output};
use equising::corpus::run_corpus;
use equising::RunConfig;

/// Milnor numbers, Milnor sequences, Du Val and cDV classification, and
/// equisingularity checks for one-parameter families.
#[derive(Debug, Parser)]
#[command(name = "equising", version)]
struct Cli {
    /// Comma-separated variable names; inferred from the input by default.
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Seed for the random linear sections.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random sections drawn before escalating.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Degree cap for standard bases (default: twice the sum of the
    /// generator degrees, plus four).
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Milnor number, multiplicity and weights of an isolated germ.
    Milnor { polynomial: String },
    /// Milnor sequence (mu of the germ, then of general plane sections).
    Sequence { polynomial: String },
    /// Du Val type of a surface germ or cDV type of a threefold germ.
    Classify { polynomial: String },
    /// Whitney equisingularity evidence for a family file.
    Family { path: PathBuf },
    /// Run the embedded regression corpus.
    Corpus,
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = RunConfig {
        seed: cli.seed,
        samples: cli.samples as usize,
        degree_cap: cli.degree_cap,
        json: cli.json,
    };
    let vars = cli.vars.as_deref();
    match &cli.command {
        Command::Milnor { polynomial } => cmd_milnor(polynomial, vars, &cfg),
        Command::Sequence { polynomial } => cmd_sequence(polynomial, vars, &cfg),
        Command::Classify { polynomial } => cmd_classify(polynomial, vars, &cfg),
        Command::Family { path } => cmd_family(path, &cfg),
        Command::Corpus => {
            let report = run_corpus(&cfg)?;
            Ok(Output {
                json: serde_json::to_value(&report).expect("reports serialize"),
                text: report.text(),
                code: report.code(),
            })
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which is the non-isolated code here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            ExitCode::from(1)
        }
    }
}
