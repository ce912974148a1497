//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use anyhow::Context;
use clap::Parser;

use crate::config::{parse, ScenarioConfig};
use crate::output::write_atomically;
use crate::run::run_study;
use crate::validate::{reference_checks, REFERENCE_SCENARIO};

/// Environment fallback for `--threads`.
pub const THREADS_ENV: &str = "RIPT_SIM_THREADS";

/// Resonant inductive link simulator.
#[derive(Debug, Parser)]
#[command(name = "ript-sim", version)]
pub struct Args {
    /// Scenario file. Optional with --validate, which defaults to the
    /// bundled reference scenario.
    pub config: Option<PathBuf>,

    /// Run the reference checks and print one pass/fail line each.
    #[arg(long)]
    pub validate: bool,

    /// Directory for `<study>.csv` and `summary.txt`.
    #[arg(long, default_value = ".")]
    pub output_dir: PathBuf,

    /// Worker threads for sweeps; 0 picks the number of CPUs.
    #[arg(long)]
    pub threads: Option<usize>,

    /// Reserved for stochastic studies; currently unused.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// `--threads`, else `RIPT_SIM_THREADS`, else 0 (automatic).
pub fn thread_count(args: &Args, env: Option<&str>) -> anyhow::Result<usize> {
    match (args.threads, env) {
        (Some(n), _) => Ok(n),
        (None, Some(v)) => v
            .trim()
            .parse()
            .with_context(|| format!("{THREADS_ENV}=`{v}` is not a thread count")),
        (None, None) => Ok(0),
    }
}

/// Runs the CLI; returns the process exit code.
pub fn run(args: &Args, out: &mut impl Write) -> anyhow::Result<i32> {
    let env = std::env::var(THREADS_ENV).ok();
    let threads = thread_count(args, env.as_deref())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;

    let cfg = match &args.config {
        Some(path) => ScenarioConfig::from_path(path)?,
        None if args.validate => parse(REFERENCE_SCENARIO).context("bundled reference scenario")?,
        None => anyhow::bail!("a scenario file is required unless --validate is given"),
    };

    if args.validate {
        let checks = pool.install(|| reference_checks(&cfg))?;
        for c in &checks {
            writeln!(out, "{c}")?;
        }
        let failed = checks.iter().filter(|c| !c.pass).count();
        writeln!(
            out,
            "{} of {} checks passed",
            checks.len() - failed,
            checks.len()
        )?;
        return Ok(i32::from(failed > 0));
    }

    let result = pool.install(|| run_study(&cfg))?;
    let csv_name = format!("{}.csv", result.name);
    let csv = result.table.to_csv()?;
    let paths = write_atomically(
        &args.output_dir,
        &[
            (csv_name.as_str(), &csv),
            ("summary.txt", result.summary.as_bytes()),
        ],
    )
    .with_context(|| format!("writing results to {}", args.output_dir.display()))?;
    write!(out, "{}", result.summary)?;
    for p in paths {
        writeln!(out, "wrote {}", p.display())?;
    }
    Ok(0)
}
