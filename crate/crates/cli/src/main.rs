mod document;
mod report;
mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dynspan::linearize::{extend_products, invariant_basis};
use dynspan::plrowmotion::{exponent_orbit_sum, lyness_homomesy_check, lyness_matrix, lyness_pullback, ExpVector};
use dynspan::systems::{chain_rowmotion, distinct_multiset_rotation, multiset_rotation, negation_system};
use dynspan::FiniteSystem;

use document::SystemDocument;
use report::MethodChoice;

#[derive(Parser)]
#[command(name = "dynspan", version, about = "Exact spectra, invariants and homomesies of finite periodic systems")]
struct Cli {
    /// Spectrum algorithm; `both` runs the two and checks they agree.
    #[arg(long, value_enum, default_value_t = MethodChoice::Both, global = true)]
    method: MethodChoice,
    #[arg(long, value_enum, default_value_t = Output::Table, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Multiset,
    Chain,
    Distinct,
    Negation,
}

#[derive(Subcommand)]
enum Command {
    /// Print the document of a built-in system (always JSON).
    Builtin {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Full report: spectrum, invariants, homomesies, flatness.
    Analyze { input: Option<PathBuf> },
    /// Eigenvalue multiplicities of the time-evolution operator.
    Spectrum { input: Option<PathBuf> },
    /// A basis of the invariant functions in the dynamical span.
    Invariants { input: Option<PathBuf> },
    /// Per-statistic homomesy verdicts and 0-mesic combinations.
    Homomesies { input: Option<PathBuf> },
    /// The system with pairwise products of its spanning functions added
    /// (always JSON).
    ExtendProducts { input: Option<PathBuf> },
    /// Pull back a Lyness exponent vector, given as a JSON array of five
    /// integers inline, in a file, or on stdin.
    Lyness { input: Option<String> },
    /// Rerun the reference checks.
    VerifyPaper {
        /// Run a single check by id.
        #[arg(long)]
        only: Option<String>,
        /// Corrupt one entry of the Lyness matrix to exercise failure
        /// reporting.
        #[arg(long, hide = true)]
        perturb_lyness: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

type Outcome = Result<String, Failure>;

fn read_input(path: Option<&std::path::Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn load(path: Option<&std::path::Path>) -> Result<FiniteSystem, Failure> {
    let text = read_input(path)?;
    SystemDocument::from_json(&text)
        .and_then(|d| d.to_system())
        .map_err(Failure::Usage)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn disagreement(d: report::Disagreement) -> Failure {
    Failure::Verification(format!(
        "spectrum methods disagree: galois {:?}, cyclotomic {:?}",
        d.galois, d.cyclotomic
    ))
}

fn builtin(family: Family, n: u32, k: usize) -> Outcome {
    let sys = match family {
        Family::Multiset => multiset_rotation(n, k),
        Family::Chain => chain_rowmotion(n, k),
        Family::Distinct => distinct_multiset_rotation(n, k),
        Family::Negation => Ok(negation_system()),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(SystemDocument::from_system(&sys).to_json() + "\n")
}

fn parse_exponents(text: &str) -> Result<ExpVector, Failure> {
    let v: Vec<i64> = serde_json::from_str(text.trim())
        .map_err(|e| Failure::Usage(format!("expected a JSON array of five integers: {e}")))?;
    let arr: [i64; 5] = v
        .try_into()
        .map_err(|v: Vec<i64>| Failure::Usage(format!("expected five exponents, got {}", v.len())))?;
    Ok(ExpVector(arr))
}

fn lyness(input: Option<&str>, output: Output) -> Outcome {
    let text = match input {
        Some(s) if s.trim_start().starts_with('[') => s.to_string(),
        Some(p) => read_input(Some(std::path::Path::new(p)))?,
        None => read_input(None)?,
    };
    let v = parse_exponents(&text)?;
    let pulled = lyness_pullback(&v);
    if output == Output::Json {
        return Ok(serde_json::to_string(&pulled.0).expect("array") + "\n");
    }
    let sum = exponent_orbit_sum(&lyness_matrix(), &v, 5);
    Ok(format!(
        "pullback:  {:?}\norbit sum: {:?}\n0-mesic:   {}\n",
        pulled.0,
        sum.0,
        lyness_homomesy_check(&v)
    ))
}

fn run(cli: Cli) -> Outcome {
    let (method, output) = (cli.method, cli.output);
    let table = output == Output::Table;
    match cli.command {
        Command::Builtin { family, n, k } => builtin(family, n, k),
        Command::Analyze { input } => {
            let sys = load(input.as_deref())?;
            let r = report::analyze(&sys, method).map_err(disagreement)?;
            Ok(if table { report::analysis_table(&r) } else { json(&r) })
        }
        Command::Spectrum { input } => {
            let sys = load(input.as_deref())?;
            let s = report::compute_spectrum(&sys, method).map_err(disagreement)?;
            let entries = report::spectrum_entries(&s);
            Ok(if table { report::spectrum_table(&entries) } else { json(&entries) })
        }
        Command::Invariants { input } => {
            let sys = load(input.as_deref())?;
            let basis = report::basis_strings(&invariant_basis(&sys));
            Ok(if table { report::basis_table(&basis) } else { json(&basis) })
        }
        Command::Homomesies { input } => {
            let sys = load(input.as_deref())?;
            let listing = report::homomesy_listing(&sys);
            Ok(if table {
                format!(
                    "{}\n0-mesic combinations of the statistics\n{}",
                    report::homomesy_table(&listing.homomesies),
                    report::basis_table(&listing.zero_mesic_combinations)
                )
            } else {
                json(&listing)
            })
        }
        Command::ExtendProducts { input } => {
            let sys = load(input.as_deref())?;
            Ok(SystemDocument::from_system(&extend_products(&sys)).to_json() + "\n")
        }
        Command::Lyness { input } => lyness(input.as_deref(), output),
        Command::VerifyPaper { only, perturb_lyness } => {
            let results = verify::run(only.as_deref(), perturb_lyness).map_err(Failure::Usage)?;
            let text = if table { verify::to_table(&results) } else { verify::to_json(&results) + "\n" };
            if results.iter().all(|r| r.passed) {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
