//! `secmod`: enumerate, classify and check submodule lattices of finite
//! modules over Z/nZ.
//!
//! Exit status: 0 success, 1 violations or witnesses found, 2 usage or
//! parse error, 3 size bound exceeded. Errors are also written to stderr as
//! JSON.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use secmod_core::harness::{
    check_all, check_theorem_with, search_with, HarnessConfig, DEFAULT_HOM_SAMPLES,
    DEFAULT_HOM_SEED,
};
use secmod_core::report::{
    to_dot, CheckJson, ClassificationJson, CorpusJson, LatticeJson, SearchJson, SecondRadicalJson,
};
use secmod_core::{
    classify_all, corpus_generate, parse_generators, parse_module_expr, second_radical, Bounds,
    ClassId, CorpusFilter, CorpusSpec, Error, FinModule, SubLattice, TheoremId,
};
use serde_json::json;

const LATTICE_ENV: &str = "SECMOD_MAX_LATTICE";

#[derive(Parser, Debug)]
#[command(
    name = "secmod",
    version,
    about = "Submodule lattices and absorbing classes of finite modules over Z/nZ"
)]
struct Cli {
    /// Acting ring Z/nZ; defaults to the module exponent.
    #[arg(long, global = true)]
    ring: Option<u64>,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Submodule lattice with cover relation.
    Enumerate {
        expr: String,
        /// Emit a DOT Hasse diagram instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Class membership of every submodule.
    Classify { expr: String },
    /// Second radical of a submodule given by generator rows.
    Sec {
        expr: String,
        /// Generator rows such as `1,3;0,2`.
        #[arg(long)]
        submodule: String,
    },
    /// Check a theorem (or `all`) on a module or on a corpus.
    Check {
        theorem: String,
        expr: Option<String>,
        /// Check every abelian group up to this order.
        #[arg(long, conflicts_with = "expr")]
        corpus: Option<u64>,
        /// Random injective homs per source class.
        #[arg(long, default_value_t = DEFAULT_HOM_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_HOM_SEED)]
        seed: u64,
    },
    /// Submodules in the first class but not the second.
    Search {
        antecedent: String,
        consequent: String,
        #[arg(long)]
        corpus: u64,
    },
    /// Isomorphism classes of abelian groups up to an order.
    Corpus {
        max_order: u64,
        #[arg(long, conflicts_with = "p_groups_only")]
        cyclic_only: bool,
        #[arg(long)]
        p_groups_only: bool,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::BoundExceeded { .. }) => 3,
            Failure::Core(Error::InvariantViolation(_)) => 1,
            Failure::Core(_) => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Core(Error::BoundExceeded { .. }) => "bound_exceeded",
            Failure::Core(Error::InvariantViolation(_)) => "invariant_violation",
            Failure::Core(Error::Parse { .. }) => "parse",
            Failure::Core(_) => "invalid_input",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

fn bounds() -> Result<Bounds, Failure> {
    let mut b = Bounds::default();
    if let Ok(v) = std::env::var(LATTICE_ENV) {
        b.max_lattice = v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{LATTICE_ENV} must be a positive integer, got `{v}`"
            ))
        })?;
    }
    Ok(b)
}

fn module(expr: &str, ring: Option<u64>) -> Result<FinModule, Failure> {
    Ok(parse_module_expr(expr, ring)?)
}

fn corpus_with_ring(spec: &CorpusSpec, ring: Option<u64>) -> Result<Vec<FinModule>, Failure> {
    let corpus = corpus_generate(spec)?;
    match ring {
        None => Ok(corpus),
        Some(n) => Ok(corpus
            .into_iter()
            .filter(|m| n % m.exponent() == 0)
            .map(|m| m.with_ring(n))
            .collect::<Result<_, _>>()?),
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// Runs a command; returns stdout text and the success exit code.
fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let bounds = bounds()?;
    match &cli.command {
        Command::Enumerate { expr, dot } => {
            let m = module(expr, cli.ring)?;
            let lattice = SubLattice::enumerate_with(&m, &bounds)?;
            if *dot {
                let report = classify_all(&lattice)?;
                Ok((to_dot(&report, &lattice), 0))
            } else {
                Ok((to_json(&LatticeJson::new(&lattice)), 0))
            }
        }
        Command::Classify { expr } => {
            let m = module(expr, cli.ring)?;
            let lattice = SubLattice::enumerate_with(&m, &bounds)?;
            let report = classify_all(&lattice)?;
            Ok((to_json(&ClassificationJson::new(&report)), 0))
        }
        Command::Sec { expr, submodule } => {
            let m = module(expr, cli.ring)?;
            let n = parse_generators(&m, submodule)?;
            Ok((to_json(&SecondRadicalJson::new(&n, &second_radical(&n))), 0))
        }
        Command::Check {
            theorem,
            expr,
            corpus,
            samples,
            seed,
        } => {
            let ids = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![TheoremId::parse(theorem)?]
            };
            let modules = match (expr, corpus) {
                (Some(e), None) => vec![module(e, cli.ring)?],
                (None, Some(max)) => corpus_with_ring(&CorpusSpec::up_to(*max), cli.ring)?,
                _ => {
                    return Err(Failure::Usage(
                        "check needs a module expression or --corpus".into(),
                    ))
                }
            };
            let cfg = HarnessConfig {
                bounds,
                hom_samples: *samples,
                seed: *seed,
            };
            let per_module: Vec<Vec<_>> = modules
                .par_iter()
                .map(|m| {
                    if ids.len() == TheoremId::ALL.len() {
                        check_all(m, &cfg)
                    } else {
                        ids.iter()
                            .map(|&id| check_theorem_with(id, m, &cfg))
                            .collect()
                    }
                })
                .collect::<Result<_, _>>()?;
            let report = CheckJson::new(modules.len(), per_module.into_iter().flatten().collect());
            let code = if report.total_violations > 0 { 1 } else { 0 };
            Ok((to_json(&report), code))
        }
        Command::Search {
            antecedent,
            consequent,
            corpus,
        } => {
            let a = ClassId::parse(antecedent)?;
            let c = ClassId::parse(consequent)?;
            let report = search_with(a, c, &CorpusSpec::up_to(*corpus), &bounds)?;
            let code = if report.witnesses.is_empty() { 0 } else { 1 };
            Ok((to_json(&SearchJson::new(report)), code))
        }
        Command::Corpus {
            max_order,
            cyclic_only,
            p_groups_only,
        } => {
            let filter = if *cyclic_only {
                CorpusFilter::CyclicOnly
            } else if *p_groups_only {
                CorpusFilter::PGroupsOnly
            } else {
                CorpusFilter::All
            };
            let spec = CorpusSpec {
                max_order: *max_order,
                filter,
            };
            let modules = corpus_with_ring(&spec, cli.ring)?;
            Ok((to_json(&CorpusJson::new(*max_order, &modules)), 0))
        }
    }
}

fn report_failure(f: &Failure) -> ExitCode {
    let code = f.exit_code();
    let body = json!({
        "error": { "kind": f.kind(), "message": f.message() },
        "exit_code": code,
    });
    eprintln!("{body}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return report_failure(&Failure::Usage(e.kind().to_string()));
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return report_failure(&Failure::Usage(e.to_string())),
    };
    match pool.install(|| run(&cli)) {
        Ok((out, code)) => {
            println!("{}", out.trim_end());
            ExitCode::from(code)
        }
        Err(f) => report_failure(&f),
    }
}
