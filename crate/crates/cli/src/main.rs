mod commands;
mod output;

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use pte_core::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(name = "pte", version, about = "Exact Prouhet-Tarry-Escott constructions and checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Largest enumeration (number of terms or tuples) any command may perform.
    #[arg(long, default_value_t = Budget::DEFAULT.0, global = true)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print v_p(0), …, v_p(p^N − 1).
    Ptm {
        #[arg(long)]
        p: u32,
        #[arg(long = "n")]
        n: u32,
    },
    /// Prouhet's partition of {0, …, p^(M+1) − 1} with its power-sum table.
    Partition {
        #[arg(long)]
        p: u32,
        #[arg(long = "m")]
        m: u32,
        /// Also compare power sums up to this degree (may exceed M).
        #[arg(long)]
        check_beyond: Option<u32>,
    },
    /// Factor F_N(x; A) = P_N(x) · Q_N(x) and cross-check both constructions of P_N.
    #[command(group(ArgGroup::new("vector").required(true).args(["coeffs", "symbolic"])))]
    Factor {
        #[arg(long)]
        p: u32,
        #[arg(long = "n")]
        n: u32,
        /// Integer zero-sum vector a_0,…,a_(p−1).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Option<Vec<i64>>,
        /// Use the generic zero-sum vector (a_0, …, a_(p−1)).
        #[arg(long)]
        symbolic: bool,
    },
    /// Lehmer's classification of a_0μ_0 + ⋯ + a_Mμ_M by digit-sum class.
    Lehmer {
        #[arg(long)]
        p: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        mu: Vec<i64>,
    },
    /// Check the root-of-unity product identity and the vanishing weighted sums.
    Identities {
        #[arg(long)]
        p: u32,
        #[arg(long = "m")]
        m: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget(cli.budget);
    let outcome = match cli.command {
        Command::Ptm { p, n } => commands::ptm(p, n, budget),
        Command::Partition { p, m, check_beyond } => commands::partition(p, m, check_beyond, budget),
        Command::Factor { p, n, coeffs, symbolic } => commands::factor(p, n, coeffs, symbolic, budget),
        Command::Lehmer { p, mu } => commands::lehmer(p, mu, budget),
        Command::Identities { p, m } => commands::identities(p, m, budget),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if !out.passed {
                if let Some(diff) = &out.diagnostics {
                    eprintln!("{diff}");
                }
                return ExitCode::from(output::EXIT_VERIFICATION);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(output::exit_code(&err))
        }
    }
}
