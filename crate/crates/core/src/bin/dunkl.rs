use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dunkl_core::runner::{
    export_basis, export_connection, export_ladder, run_suite, KCaps, MuSpec, RealizationChoice, RunConfig, Suite,
};

#[derive(Parser)]
#[command(name = "dunkl", version, about = "Exact checks for the Z2^n Dirac-Dunkl operator and its Bannai-Ito algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites and emit a JSON report.
    Verify(VerifyArgs),
    /// Export the monogenic basis, one file per (k, s).
    Basis {
        #[command(flatten)]
        common: Common,
        /// Use the tower started from x_[1]^j1 e1^j1, which the Gamma operators preserve.
        #[arg(long)]
        sector: bool,
    },
    /// Export the ladder-operator actions as CSV.
    Ladder {
        #[command(flatten)]
        common: Common,
    },
    /// Export connection coefficients and Gram sidecars as CSV.
    Connection {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Degree cap; defaults depend on n.
    #[arg(long)]
    k_max: Option<u32>,
    /// `p/q,p/q,...` or `random:<seed>`.
    #[arg(long)]
    mu: Option<String>,
    /// Seed used when --mu is not given.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long)]
    k_max: Option<u32>,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Parameter sets drawn for a random spec.
    #[arg(long, default_value_t = 3)]
    sets: usize,
    /// Comma separated: osp, bi, casimir, monogenics, ladder, scalar.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// clifford, scalar or both.
    #[arg(long, default_value = "both")]
    realization: String,
    /// Directory for report.json and timings.json; prints the report when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Flip the sign of one term in every Bannai-Ito relation.
    #[arg(long)]
    inject_fault: bool,
}

fn mu_spec(mu: Option<&str>, seed: u64) -> dunkl_core::Result<MuSpec> {
    match mu {
        Some(s) => s.parse(),
        None => Ok(MuSpec::Random(seed)),
    }
}

fn verify(a: VerifyArgs) -> dunkl_core::Result<i32> {
    let mut config = RunConfig::new(a.n);
    config.mu = mu_spec(a.mu.as_deref(), a.seed)?;
    config.parameter_sets = a.sets;
    if let Some(k) = a.k_max {
        config.k_caps = KCaps::uniform(k);
    }
    if !a.suite.is_empty() {
        config.suites = a.suite.iter().map(|s| s.parse::<Suite>()).collect::<dunkl_core::Result<_>>()?;
    }
    config.realization = a.realization.parse::<RealizationChoice>()?;
    config.out = a.out.clone();
    config.jobs = a.jobs;
    config.inject_fault = a.inject_fault;
    let report = run_suite(&config)?;
    if a.out.is_none() {
        print!("{}", report.to_json());
    }
    let s = report.summary;
    eprintln!(
        "{} rows: {} passed, {} failed, {} errors ({:.1}s)",
        s.total, s.passed, s.failed, s.errors, report.total_seconds
    );
    for row in report.failures() {
        eprintln!("  {} {}: {:?} {:?}", row.suite, row.name, row.subsets, row.witness);
    }
    Ok(report.exit_code())
}

fn export(common: Common, what: &str, sector: bool) -> dunkl_core::Result<i32> {
    let mut config = RunConfig::new(common.n);
    config.mu = mu_spec(common.mu.as_deref(), common.seed)?;
    config.parameter_sets = 1;
    config.validate()?;
    let params = config.parameter_sets()?.remove(0);
    let k = common.k_max.unwrap_or(config.k_caps.basis);
    let paths = match what {
        "basis" => export_basis(&params, k, sector, &common.out)?,
        "ladder" => export_ladder(&params, k, &common.out)?,
        _ => export_connection(&params, k, &common.out)?,
    };
    for p in paths {
        println!("{}", p.display());
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Basis { common, sector } => export(common, "basis", sector),
        Command::Ladder { common } => export(common, "ladder", false),
        Command::Connection { common } => export(common, "connection", false),
    };
    match result {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
