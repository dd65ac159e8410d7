//! Command-line front end. Exit status: 0 success, 1 verification failure
//! (or no witness found), 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::catalog;
use crate::classify::{
    classify_sequence, epr_forbidden_order3, forbidden_order2, forbidden_order3, scan_for_forbidden, Field, Verdict,
};
use crate::matrix::io::{parse_matrix, to_json};
use crate::search::{
    attainability_census, default_pool, find_witness, hunt_counterexamples, parse_pool, Property, SearchConfig,
    SearchMode,
};
use crate::sepr::{compute_epr, compute_sepr, SeprSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sepr", about = "Exact sepr-sequences of Hermitian matrices", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the epr- and sepr-sequence of a JSON matrix file.
    Compute { file: String },
    /// Decide whether an order-2 or order-3 pattern is forbidden.
    Classify {
        sequence: SeprSequence,
        #[arg(long, default_value = "hermitian")]
        field: Field,
    },
    /// Print the forbidden patterns of one order, sorted, one per line.
    EnumerateForbidden {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "hermitian")]
        field: Field,
        /// Print the epr-level set instead (order 3 only).
        #[arg(long)]
        epr: bool,
        /// Append the rule that forbids each pattern.
        #[arg(long)]
        rules: bool,
    },
    /// Witness catalog operations.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Search for a matrix attaining a pattern, or run a census.
    Search(SearchArgs),
    /// Run the property suite over sampled matrices.
    Properties(PropertyArgs),
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// Recompute every witness and compare with its claimed sequence.
    Verify {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        id: Option<String>,
    },
    /// List the witnesses with their constructors.
    List,
}

#[derive(Debug, Args)]
struct SamplingArgs {
    /// Matrix order.
    #[arg(long = "order-n", default_value_t = 4)]
    n: usize,
    #[arg(long, default_value = "hermitian")]
    field: Field,
    /// Comma-separated entry pool; defaults depend on the field.
    #[arg(long, allow_hyphen_values = true)]
    pool: Option<String>,
    #[arg(long, default_value = "random")]
    mode: SearchMode,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[command(flatten)]
    sampling: SamplingArgs,
    #[arg(long, required_unless_present = "census")]
    target: Option<SeprSequence>,
    /// Match the target as a contiguous window.
    #[arg(long)]
    subsequence: bool,
    /// Run the attainability census of this order (2 or 3) instead; the
    /// search sweep covers orders up to `--order-n`.
    #[arg(long, conflicts_with = "target")]
    census: Option<usize>,
}

#[derive(Debug, Args)]
struct PropertyArgs {
    #[command(flatten)]
    sampling: SamplingArgs,
    /// Comma-separated property names, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
}

impl SamplingArgs {
    fn config(&self) -> Result<SearchConfig, String> {
        let mut cfg = SearchConfig::new(self.n, self.field);
        cfg.pool = match &self.pool {
            Some(spec) => parse_pool(spec).map_err(|e| e.to_string())?,
            None => default_pool(self.field),
        };
        cfg.mode = self.mode;
        cfg.budget = self.budget;
        cfg.seed = self.seed;
        Ok(cfg)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Compute { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| usage(format!("{file}: {e}")))?;
            let b = parse_matrix(&text).map_err(|e| usage(format!("{file}: {e}")))?;
            let s = compute_sepr(&b);
            let field = if b.is_real() { Field::RealSymmetric } else { Field::Hermitian };
            writeln!(out, "epr: {}", compute_epr(&b))?;
            writeln!(out, "sepr: {s}")?;
            let hits = scan_for_forbidden(&s, field);
            if hits.is_empty() {
                writeln!(out, "forbidden windows: none")?;
                Ok(EXIT_OK)
            } else {
                let list: Vec<String> = hits.iter().map(ToString::to_string).collect();
                writeln!(out, "forbidden windows: {}", list.join("; "))?;
                Ok(EXIT_FAILURE)
            }
        }
        Command::Classify { sequence, field } => {
            match classify_sequence(&sequence, field).map_err(usage)? {
                Verdict::Forbidden { rule } => writeln!(out, "FORBIDDEN ({}): {rule}", field.label())?,
                Verdict::NotForbidden => writeln!(out, "NOT FORBIDDEN ({})", field.label())?,
            }
            Ok(EXIT_OK)
        }
        Command::EnumerateForbidden { order, field, epr, rules } => {
            if epr {
                if order != 3 {
                    return Err(usage("epr-level sets are defined for order 3 only"));
                }
                for e in epr_forbidden_order3(field) {
                    writeln!(out, "{e}")?;
                }
                return Ok(EXIT_OK);
            }
            let set = match order {
                2 => forbidden_order2(field),
                3 => forbidden_order3(field).clone(),
                _ => return Err(usage(format!("order must be 2 or 3, got {order}"))),
            };
            for p in set {
                if rules {
                    let rule = classify_sequence(&p, field).map_err(usage)?;
                    let rule = rule.rule().map(ToString::to_string).unwrap_or_default();
                    writeln!(out, "{p}\t{rule}")?;
                } else {
                    writeln!(out, "{p}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Catalog(CatalogCommand::Verify { family, id }) => {
            let report = catalog::verify_all(family.as_deref(), id.as_deref()).map_err(usage)?;
            for row in &report.rows {
                writeln!(out, "{}", row.tsv())?;
            }
            for row in report.rows.iter().filter(|r| r.arithmetic != "Q(i)") {
                writeln!(out, "note: {} evaluated exactly over {}", row.id, row.arithmetic)?;
            }
            writeln!(out, "{}/{} witnesses verified", report.passed(), report.total())?;
            for row in report.failures() {
                writeln!(out, "MISMATCH {}: claimed {}, computed {}", row.id, row.claimed, row.computed)?;
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Catalog(CatalogCommand::List) => {
            for r in catalog::records() {
                writeln!(out, "{}\t{}\t{}\t{}\t{}", r.id, r.field, r.constructor(), r.claimed, r.source)?;
            }
            Ok(EXIT_OK)
        }
        Command::Search(args) => {
            let mut cfg = args.sampling.config().map_err(usage)?;
            if let Some(order) = args.census {
                let report = attainability_census(order, cfg.field, &cfg).map_err(usage)?;
                for line in report.lines() {
                    writeln!(out, "{line}")?;
                }
                for b in &report.budgets {
                    writeln!(out, "budget\t{b}")?;
                }
                writeln!(out, "{}", report.summary())?;
                let open: Vec<String> = report.open().iter().map(ToString::to_string).collect();
                writeln!(out, "search-open: {}", if open.is_empty() { "none".to_string() } else { open.join(" ") })?;
                return Ok(if report.all_verified { EXIT_OK } else { EXIT_FAILURE });
            }
            cfg.target = args.target;
            cfg.subsequence = args.subsequence;
            match find_witness(&cfg).map_err(usage)? {
                Some(found) => {
                    writeln!(out, "found: sample {}", found.index)?;
                    writeln!(out, "sepr: {}", found.sepr)?;
                    writeln!(out, "position: {}", found.position)?;
                    writeln!(out, "matrix: {}", to_json(&found.matrix))?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not found within {} matrices", cfg.sample_count())?;
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Properties(args) => {
            let cfg = args.sampling.config().map_err(usage)?;
            let suite = Property::parse_suite(&args.suite).map_err(usage)?;
            let report = hunt_counterexamples(&cfg, &suite).map_err(usage)?;
            for line in report.lines() {
                writeln!(out, "{line}")?;
            }
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}
