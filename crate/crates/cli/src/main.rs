use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use opinion_algebra::{is_decomposable, Decomposition, DogmaticWeights, FissionMode, FissionWeights};
use opinion_calc::{evaluate_source, exit, load_file, output, parse_expression, CliError, EvalOptions};

#[derive(Parser)]
#[command(name = "opinion-calc", version, about = "Subjective-logic fusion and fission calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a fusion/fission expression over the opinions in FILE.
    Eval {
        /// Opinion file, or `-` for standard input.
        file: String,
        /// Expression, e.g. "(A (+) B) (-) B".
        expr: String,
        /// Emit a JSON object instead of the text block.
        #[arg(long)]
        json: bool,
        /// Evaluate through Dirichlet evidence arithmetic.
        #[arg(long)]
        via_evidence: bool,
        /// Prior weight used by --via-evidence.
        #[arg(long, default_value_t = opinion_algebra::DEFAULT_PRIOR_WEIGHT)]
        prior_weight: f64,
        /// Weight of the left operand when fusing two dogmatic opinions.
        #[arg(long, default_value_t = 0.5)]
        gamma: f64,
        /// gamma^C for splitting two dogmatic opinions (gamma^B = 1 + gamma^C).
        #[arg(long, default_value_t = 0.0)]
        gamma_c: f64,
    },
    /// Report whether opinion C can be split by its component B.
    Check {
        file: String,
        c: String,
        b: String,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 0.0)]
        gamma_c: f64,
    },
    /// Parse and validate FILE without evaluating anything.
    Validate { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cumulative,
    Averaging,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Eval {
            file,
            expr,
            json,
            via_evidence,
            prior_weight,
            gamma,
            gamma_c,
        } => {
            let options = EvalOptions {
                fusion_weights: DogmaticWeights::new(gamma)?,
                fission_weights: FissionWeights::new(gamma_c)?,
                via_evidence,
                prior_weight,
            };
            if !(prior_weight.is_finite() && prior_weight > 0.0) {
                return Err(opinion_algebra::Error::InvalidPriorWeight(prior_weight).into());
            }
            let file = load_file(&file)?;
            if parse_expression(&expr)?.has_ungrouped_averaging_chain() {
                eprintln!("note: averaging fusion is not associative; unparenthesized chains evaluate left to right");
            }
            let result = evaluate_source(&expr, &file, &options)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&output::to_json(&result)).unwrap());
            } else {
                print!("{}", output::to_text(&result));
            }
            Ok(exit::SUCCESS)
        }
        Command::Check {
            file,
            c,
            b,
            mode,
            gamma_c,
        } => {
            let file = load_file(&file)?;
            let get = |name: &str| file.get(name).ok_or_else(|| CliError::UnknownOpinion(name.to_owned()));
            let mode = match mode {
                Mode::Cumulative => FissionMode::Cumulative,
                Mode::Averaging => FissionMode::Averaging,
            };
            let weights = Some(FissionWeights::new(gamma_c)?);
            match is_decomposable(get(&c)?, get(&b)?, mode, weights)? {
                Decomposition::Decomposable => {
                    println!("decomposable");
                    Ok(exit::SUCCESS)
                }
                Decomposition::NotDecomposable(v) => {
                    println!("not decomposable: {v}");
                    Ok(exit::NOT_DECOMPOSABLE)
                }
            }
        }
        Command::Validate { file } => {
            let parsed = load_file(&file)?;
            println!("valid: {} opinions over frame {}", parsed.len(), parsed.frame());
            Ok(exit::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
