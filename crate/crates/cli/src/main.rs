//! `reslat`: batch verification for finite residuated lattices, their
//! quantifiers, Kalman algebras and the two-component term translation.
//!
//! Exit status: 0 when every check passes, 1 when a check fails (the
//! witness is printed as JSON on standard output), 2 on usage or I/O
//! errors.

mod commands;
mod output;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};
use thiserror::Error;

use reslat_core::catalog::CatalogError;
use reslat_core::schema::SchemaError;
use reslat_core::{KalmanError, MonadicError, TermError, TranslationError};

use source::{Filter, QuantifierChoice, Source};

#[derive(Parser, Debug)]
#[command(name = "reslat", version, about, propagate_version = true)]
struct Cli {
    /// Print the full report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel checks (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Sampling {
    /// Maximum depth of sampled terms
    #[arg(long, default_value_t = 4, value_name = "D")]
    pub depth: usize,
    /// Number of distinct variables in sampled terms
    #[arg(long, default_value_t = 3, value_name = "V")]
    pub vars: usize,
    /// Number of sampled terms
    #[arg(long, default_value_t = 500, value_name = "S")]
    pub sample: usize,
    /// Seed for term sampling
    #[arg(long, default_value_t = 1, value_name = "N")]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra axioms (and the c-differential laws for a view)
    Validate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
    },
    /// Print the classification flags
    Classify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
    },
    /// List the monadic quantifier pairs and check their consequences
    Quantifiers {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        choice: QuantifierChoice,
    },
    /// Build K(L), check it, and check the boxes induced by quantifiers
    Kalman {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        choice: QuantifierChoice,
        /// Also check the map (x, y) -> (x, -x) as a center quantifier
        #[arg(long)]
        box_neg: bool,
    },
    /// Build C(A) of a view, or of K(L) for an algebra
    Center {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
    },
    /// Check the c-differential laws and condition CK against psi
    Ck {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
    },
    /// Check phi, psi and the round trip between quantifier pairs and
    /// center quantifiers
    Equivalence {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        choice: QuantifierChoice,
    },
    /// Translate a c-differential term, equation or symbol into pairs of
    /// residuated lattice terms
    Translate {
        /// A term in the c-differential grammar
        #[arg(long, group = "input")]
        term: Option<String>,
        /// An equation `lhs == rhs` in the c-differential grammar
        #[arg(long, group = "input")]
        equation: Option<String>,
        /// A single signature symbol: cap cup (x) ~> ~ Box 0 c 1
        #[arg(long, group = "input")]
        symbol: Option<String>,
    },
    /// Compare K(L)-evaluation with evaluation of the translation
    Pairing {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        choice: QuantifierChoice,
        #[command(flatten)]
        sampling: Sampling,
        /// Check this term instead of a random sample
        #[arg(long)]
        term: Option<String>,
    },
    /// Decide a consequence on (K(L), box_K) and its translation on (L, q)
    Consequence {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        #[command(flatten)]
        choice: QuantifierChoice,
        /// A premise equation; repeatable
        #[arg(long)]
        premise: Vec<String>,
        /// The conclusion equation
        #[arg(long, required_unless_present = "suite", conflicts_with = "suite")]
        conclusion: Option<String>,
        /// Run the built-in problem suite instead
        #[arg(long)]
        suite: bool,
        /// Maximum number of distinct variables
        #[arg(long, default_value_t = 3, value_name = "V")]
        vars: usize,
        /// Maximum assignments per algebra
        #[arg(long, default_value_t = 10_000_000, value_name = "N")]
        max_assignments: u64,
    },
    /// Enumerate residuated lattices up to isomorphism
    Enumerate {
        /// Enumerate this size only
        #[arg(long, value_name = "N", group = "sizes", required = true)]
        size: Option<usize>,
        /// Enumerate every size from 1 to N
        #[arg(long, value_name = "N", group = "sizes")]
        max_size: Option<usize>,
        /// Raise the size limit (default 6)
        #[arg(long, value_name = "N", default_value_t = reslat_core::catalog::DEFAULT_SIZE_CAP)]
        cap: usize,
        /// Save the result as a catalog file
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Write a Hasse diagram in Graphviz DOT
    ExportDot {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        /// Draw K(L) instead of L
        #[arg(long)]
        kalman: bool,
        /// Output file (default: standard output)
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Generate congruences and check the quotients
    Congruence {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        filter: Filter,
        /// Generating pair `x,y` (default: every pair x < y)
        #[arg(long, value_name = "X,Y")]
        pair: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Kalman(#[from] KalmanError),
    #[error(transparent)]
    Monadic(#[from] MonadicError),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Translation(#[from] TranslationError),
}

fn run(cli: Cli) -> Result<output::Outcome, CliError> {
    use Command::*;
    match cli.command {
        Validate { source, filter } => commands::validate(&source, &filter),
        Classify { source, filter } => commands::classify(&source, &filter),
        Quantifiers {
            source,
            filter,
            choice,
        } => commands::quantifiers(&source, &filter, &choice),
        Kalman {
            source,
            filter,
            choice,
            box_neg,
        } => commands::kalman(&source, &filter, &choice, box_neg),
        Center { source, filter } => commands::center(&source, &filter),
        Ck { source, filter } => commands::ck(&source, &filter),
        Equivalence {
            source,
            filter,
            choice,
        } => commands::equivalence(&source, &filter, &choice),
        Translate {
            term,
            equation,
            symbol,
        } => commands::translate(term.as_deref(), equation.as_deref(), symbol.as_deref()),
        Pairing {
            source,
            filter,
            choice,
            sampling,
            term,
        } => commands::pairing(&source, &filter, &choice, &sampling, term.as_deref()),
        Consequence {
            source,
            filter,
            choice,
            premise,
            conclusion,
            suite,
            vars,
            max_assignments,
        } => {
            let limits = reslat_core::translation::ConsequenceLimits {
                max_vars: vars,
                max_assignments,
            };
            commands::consequence(
                &source,
                &filter,
                &choice,
                &premise,
                conclusion.as_deref(),
                suite,
                &limits,
            )
        }
        Enumerate {
            size,
            max_size,
            cap,
            out,
        } => commands::enumerate(size, max_size, cap, out.as_deref()),
        ExportDot {
            source,
            filter,
            kalman,
            dot,
        } => commands::export_dot(&source, &filter, kalman, dot.as_deref()),
        Congruence {
            source,
            filter,
            pair,
        } => commands::congruence(&source, &filter, pair.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(outcome) => {
            outcome.emit(json);
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        // a file whose tables break an axiom is a failed check
        Err(CliError::Schema(SchemaError::Axiom {
            entry,
            axiom,
            witness,
        })) => {
            let witness =
                serde_json::json!({ "algebra": entry, "axiom": axiom, "witness": witness });
            println!("{witness}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}\n\n{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn quantifier_flags_conflict() {
        let r = Cli::try_parse_from([
            "reslat",
            "kalman",
            "--builtin",
            "L3",
            "--quantifier-index",
            "0",
            "--all-quantifiers",
        ]);
        assert!(r.is_err());
    }
}
