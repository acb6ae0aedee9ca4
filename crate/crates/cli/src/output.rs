//! CSV layouts. Floats are written with 17 significant digits.

use gloa_core::RunReport;

use crate::error::{CliError, Result};
use crate::runner::RunRecord;

pub fn float(v: f64) -> String {
    format!("{v:.16e}")
}

fn table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Parse(format!("csv: {e}"));
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Parse(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// `iteration,best_fitness`; row 0 is the initial population.
pub fn trajectory_csv(report: &RunReport) -> Result<String> {
    table(
        &["iteration", "best_fitness"],
        report
            .best_fitness_per_iteration
            .iter()
            .enumerate()
            .map(|(i, f)| vec![i.to_string(), float(*f)]),
    )
}

/// `run,seed,final_fitness,iterations,evaluations,seconds,termination`.
pub fn summary_csv(records: &[RunRecord]) -> Result<String> {
    table(
        &["run", "seed", "final_fitness", "iterations", "evaluations", "seconds", "termination"],
        records.iter().map(|r| {
            vec![
                r.run.to_string(),
                r.seed.to_string(),
                float(r.report.best_fitness()),
                r.report.iterations_run.to_string(),
                r.report.evaluations.to_string(),
                float(r.report.elapsed),
                r.report.termination_reason.as_str().to_string(),
            ]
        }),
    )
}

/// `run,seed,iteration,seconds,final_fitness`; the middle two are empty for
/// runs that never reached the target.
pub fn encounters_csv(records: &[RunRecord]) -> Result<String> {
    table(
        &["run", "seed", "iteration", "seconds", "final_fitness"],
        records.iter().map(|r| {
            let (it, s) = r
                .first_hit
                .map_or((String::new(), String::new()), |h| (h.iteration.to_string(), float(h.seconds)));
            vec![r.run.to_string(), r.seed.to_string(), it, s, float(r.report.best_fitness())]
        }),
    )
}

/// `n,seconds,energy` per size of an incremental chain.
pub fn chain_csv(chain: &[(usize, f64, f64)]) -> Result<String> {
    table(
        &["n", "seconds", "energy"],
        chain.iter().map(|&(n, s, e)| vec![n.to_string(), float(s), float(e)]),
    )
}

/// `(x, y)` pairs from two named columns of a CSV file with a header row.
pub fn read_columns(text: &str, x: &str, y: &str) -> std::result::Result<Vec<(f64, f64)>, String> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().map_err(|e| e.to_string())?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| format!("no column {name:?} (have: {})", headers.iter().collect::<Vec<_>>().join(", ")))
    };
    let (xi, yi) = (find(x)?, find(y)?);
    let mut out = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| e.to_string())?;
        let get = |i: usize, name: &str| -> std::result::Result<f64, String> {
            let raw = rec.get(i).unwrap_or("").trim();
            raw.parse().map_err(|_| format!("row {}: {name} = {raw:?} is not a number", k + 1))
        };
        out.push((get(xi, x)?, get(yi, y)?));
    }
    Ok(out)
}
