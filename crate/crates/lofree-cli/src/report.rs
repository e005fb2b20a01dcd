//! The `report` subcommand: run the acceptance suite and write a
//! deterministic bundle of CSV artifacts plus a summary.
//!
//! The bundle contains no timestamps, timings, or machine details, so two
//! runs with the same configuration (including seed) produce byte-identical
//! directories. `--self-check` rebuilds the bundle in memory and verifies
//! that equality before anything is written.

use std::path::Path;

use crate::config::{CliError, RunConfig};
use crate::criteria::{run_all, CriterionReport};
use crate::exit;
use crate::output::{Cell, Table};

/// An in-memory bundle: ordered (filename, contents) pairs.
pub type Bundle = Vec<(String, String)>;

/// Build the full report bundle: one CSV per criterion plus `summary.csv`.
pub fn build_report_bundle(config: &RunConfig) -> Result<Bundle, CliError> {
    let reports = run_all(config.quick, config.seed)?;
    Ok(bundle_from_reports(&reports))
}

fn bundle_from_reports(reports: &[CriterionReport]) -> Bundle {
    let mut files: Bundle = Vec::new();
    let mut summary = Table::new(["id", "title", "passed", "detail"]);
    for r in reports {
        files.push((format!("c{:02}_{}.csv", r.id, r.slug), r.table.to_csv()));
        summary.push(vec![
            Cell::UInt(r.id as u64),
            Cell::text(r.title),
            Cell::Bool(r.passed),
            Cell::text(&r.detail),
        ]);
    }
    files.push(("summary.csv".into(), summary.to_csv()));
    files
}

/// Write a bundle into `dir`, creating the directory if needed.
pub fn write_bundle(dir: &Path, bundle: &Bundle) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    for (name, contents) in bundle {
        std::fs::write(dir.join(name), contents)?;
    }
    Ok(())
}

/// Outcome of a report run: exit code plus stderr lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportOutcome {
    pub exit: i32,
    pub lines: Vec<String>,
}

/// Run the acceptance suite, optionally self-check determinism, write the
/// bundle, and summarize. Any failed criterion (or a self-check
/// difference) yields exit 1.
pub fn run_report(config: &RunConfig) -> Result<ReportOutcome, CliError> {
    let reports = run_all(config.quick, config.seed)?;
    let bundle = bundle_from_reports(&reports);
    let mut lines: Vec<String> = reports.iter().map(|r| r.line()).collect();
    let mut failed = reports.iter().filter(|r| !r.passed).count();
    if config.self_check {
        let again = build_report_bundle(config)?;
        if again == bundle {
            lines.push("self-check: second build is byte-identical".into());
        } else {
            failed += 1;
            lines.push("self-check: SECOND BUILD DIFFERS — determinism broken".into());
        }
    }
    let dir = config
        .out
        .clone()
        .unwrap_or_else(|| std::path::PathBuf::from("lofree-report"));
    write_bundle(&dir, &bundle)?;
    lines.push(format!(
        "wrote {} files to {}; {} of {} criteria passed",
        bundle.len(),
        dir.display(),
        reports.len() - reports.iter().filter(|r| !r.passed).count(),
        reports.len()
    ));
    Ok(ReportOutcome {
        exit: if failed == 0 {
            exit::SUCCESS
        } else {
            exit::MISMATCH
        },
        lines,
    })
}
