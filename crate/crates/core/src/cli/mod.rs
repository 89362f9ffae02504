//! The `schern` command line.
//!
//! Exit codes: 0 success, 1 I/O or internal error, 2 bad arguments or a
//! violated precondition, 3 a cross-check failure (two computation routes or
//! the cache disagree). Results go to `out`, diagnostics to `err`.

mod args;
mod cache;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{CaseArg, Cli, Command, Format, GlobalOpts, MethodArg};
pub use cache::{Cache, CacheKey, CacheRecord};

use crate::chern::{c2, ChernResult, MethodChoice};
use crate::combinatorics::{schur_dimension, Partition};
use crate::error::{Error, Result};
use crate::repring::{
    case_table, explore_conjecture, generator_table, image_index, verify_case, GeneratorRow,
};
use crate::weights::GroupSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CROSS_CHECK: i32 = 3;

/// Parse `args` (including the program name) and run one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    if let Some(threads) = cli.global.threads {
        // Fails harmlessly when a global pool already exists (e.g. in tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match execute(&cli, out) {
        Ok(Outcome::Success) => EXIT_OK,
        Ok(Outcome::CrossCheckFailed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CROSS_CHECK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_cross_check() {
                EXIT_CROSS_CHECK
            } else if e.is_precondition() {
                EXIT_USAGE
            } else {
                EXIT_INTERNAL
            }
        }
    }
}

enum Outcome {
    Success,
    /// Output was written but some part of it failed a cross-check.
    CrossCheckFailed(String),
}

fn cache_for(global: &GlobalOpts) -> Option<Cache> {
    if global.no_cache {
        return None;
    }
    global
        .cache
        .clone()
        .or_else(Cache::default_path)
        .map(Cache::new)
}

fn record(n: usize, d: Option<usize>, partition: &Partition, r: &ChernResult) -> CacheRecord {
    CacheRecord {
        n,
        d,
        partition: partition.clone(),
        n_lambda: r.n_lambda.to_string(),
        dim: r.dim.to_string(),
        method: r.method.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn row_records(spec: &GroupSpec, rows: &[&GeneratorRow]) -> Vec<CacheRecord> {
    rows.iter()
        .filter_map(|r| {
            Some(CacheRecord {
                n: spec.n(),
                d: Some(spec.d()),
                partition: r.partition.clone(),
                n_lambda: r.n_lambda.as_ref()?.to_string(),
                dim: r.dim.as_ref()?.to_string(),
                method: r.method?.to_string(),
                version: env!("CARGO_PKG_VERSION").to_string(),
            })
        })
        .collect()
}

fn row_failure(rows: &[&GeneratorRow]) -> Option<Outcome> {
    let bad: Vec<String> = rows
        .iter()
        .filter_map(|r| {
            r.failure
                .as_ref()
                .map(|f| format!("{}: {}", r.partition, f.message))
        })
        .collect();
    if bad.is_empty() {
        None
    } else {
        Some(Outcome::CrossCheckFailed(bad.join("; ")))
    }
}

fn no_csv(format: Format, command: &str) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::Usage(format!(
            "csv output is only available for `generators` and `table`, not `{command}`"
        )));
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let g = &cli.global;
    let cache = cache_for(g);
    match &cli.command {
        Command::C2 {
            n,
            partition,
            method,
        } => {
            no_csv(g.format, "c2")?;
            let choice = method.map(MethodChoice::from).unwrap_or_default();
            let config = g.rep_config(choice);
            let r = c2(*n, partition, choice, &config.chern)?;
            if let Some(cache) = &cache {
                cache.check_and_record(&[record(*n, None, partition, &r)])?;
            }
            match g.format {
                Format::Json => output::write_json(out, &output::C2Json::new(*n, partition, &r))?,
                _ => writeln!(out, "{}", r.n_lambda)?,
            }
        }
        Command::Dim { n, partition } => {
            no_csv(g.format, "dim")?;
            if *n < 1 {
                return Err(Error::RankTooSmall(*n, 1));
            }
            let dim = schur_dimension(*n, partition);
            match g.format {
                Format::Json => output::write_json(
                    out,
                    &output::DimJson {
                        n: *n,
                        partition,
                        dim: dim.to_string(),
                    },
                )?,
                _ => writeln!(out, "{dim}")?,
            }
        }
        Command::Generators { n, d } => {
            let spec = GroupSpec::new(*n, *d)?;
            let table = generator_table(&spec, &g.rep_config(MethodChoice::Auto))?;
            let rows: Vec<&GeneratorRow> = table.rows.iter().collect();
            if let Some(cache) = &cache {
                cache.check_and_record(&row_records(&spec, &rows))?;
            }
            match g.format {
                Format::Text => output::generators_text(out, &table)?,
                Format::Json => output::write_json(out, &output::GeneratorsJson::from(&table))?,
                Format::Csv => output::write_csv(out, &table.rows)?,
            }
            if let Some(outcome) = row_failure(&rows) {
                return Ok(outcome);
            }
        }
        Command::ImageIndex { n, d } => {
            no_csv(g.format, "image-index")?;
            let spec = GroupSpec::new(*n, *d)?;
            let index = image_index(&spec, &g.rep_config(MethodChoice::Auto))?;
            match g.format {
                Format::Json => {
                    output::write_json(out, &output::ImageIndexJson::new(&spec, &index))?
                }
                _ => writeln!(out, "{index}")?,
            }
        }
        Command::Verify { case_id } => {
            no_csv(g.format, "verify")?;
            let report = verify_case(case_id, &g.rep_config(MethodChoice::Auto))?;
            match g.format {
                Format::Json => output::write_json(out, &output::VerifyJson::from(&report))?,
                _ => output::verify_text(out, &report)?,
            }
        }
        Command::Table { case } => {
            let table = case_table(case.id(), &g.rep_config(MethodChoice::Auto))?;
            let spec = table.table.spec();
            let rows: Vec<&GeneratorRow> = table
                .rows
                .iter()
                .map(|r| &r.row)
                .chain(table.unlisted.iter())
                .collect();
            if let Some(cache) = &cache {
                cache.check_and_record(&row_records(&spec, &rows))?;
            }
            match g.format {
                Format::Text => output::table_text(out, &table)?,
                Format::Json => output::write_json(out, &output::TableJson::from(&table))?,
                Format::Csv => output::write_csv(out, table.rows.iter().map(|r| &r.row))?,
            }
            if let Some(outcome) = row_failure(&rows) {
                return Ok(outcome);
            }
        }
        Command::Conjecture { ell } => {
            no_csv(g.format, "conjecture")?;
            let report = explore_conjecture(*ell, &g.rep_config(MethodChoice::ClosedForm))?;
            match g.format {
                Format::Json => output::write_json(out, &output::ConjectureJson::from(&report))?,
                _ => output::conjecture_text(out, &report)?,
            }
            if !report.duality_failures.is_empty() {
                return Ok(Outcome::CrossCheckFailed(format!(
                    "duality check failed for {} generators",
                    report.duality_failures.len()
                )));
            }
        }
    }
    Ok(Outcome::Success)
}
