use std::cell::Cell;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use gloa_core::lj::{seed_from_smaller, write_xyz, ClusterGeometry, LjObjective};
use gloa_core::quantum::write_circuit;
use gloa_core::{Gloa, GloaConfig, Objective, RunReport, Target};
use rayon::prelude::*;

use crate::config::{ExperimentConfig, Problem};
use crate::error::{CliError, Result};
use crate::output;

/// First iteration whose best fitness was within the target tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstHit {
    pub iteration: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    pub report: RunReport,
    pub first_hit: Option<FirstHit>,
    /// XYZ text or circuit listing, depending on the objective.
    pub artifact: Option<String>,
    /// `(N, seconds, energy)` per size of an incremental LJ chain.
    pub chain: Vec<(usize, f64, f64)>,
}

#[derive(Debug)]
pub struct ExperimentOutcome {
    pub records: Vec<RunRecord>,
    pub files: Vec<PathBuf>,
}

/// Runs `cfg.repeats` independent runs, seeded `seed + 0, seed + 1, ...`, in
/// parallel, then writes the requested reports into `output_dir`.
pub fn run_experiment(cfg: &ExperimentConfig, base_dir: &Path, output_dir: &Path) -> Result<ExperimentOutcome> {
    let problem = cfg.problem(base_dir)?;
    let top = match &problem {
        Problem::Lj { particles, .. } => *particles,
        _ => 0,
    };
    let base_seed = cfg.engine_config(&problem, top)?.seed;
    let records = (0..cfg.repeats)
        .into_par_iter()
        .map(|run| run_one(cfg, &problem, run, base_seed.wrapping_add(run as u64)))
        .collect::<Result<Vec<_>>>()?;
    let files = write_reports(cfg, output_dir, &records)?;
    Ok(ExperimentOutcome { records, files })
}

/// Runs one engine pass, noting when `target` is first reached.
fn timed_run<O: Objective + ?Sized>(
    config: &GloaConfig,
    objective: &O,
    seeder: Option<&dyn gloa_core::Seeder>,
) -> Result<(RunReport, Option<FirstHit>)> {
    let start = Instant::now();
    let hit: Cell<Option<FirstHit>> = Cell::new(None);
    let target: Option<Target> = config.target;
    let mut gloa = Gloa::new(config, objective).on_iteration(|info| {
        if hit.get().is_none() && target.is_some_and(|t| t.reached(info.best_fitness)) {
            hit.set(Some(FirstHit {
                iteration: info.iteration,
                seconds: start.elapsed().as_secs_f64(),
            }));
        }
    });
    if let Some(s) = seeder {
        gloa = gloa.seeder(s);
    }
    let report = gloa.run()?;
    Ok((report, hit.get()))
}

fn run_one(cfg: &ExperimentConfig, problem: &Problem, run: usize, seed: u64) -> Result<RunRecord> {
    let record = |report: RunReport, first_hit, artifact, chain| RunRecord {
        run,
        seed,
        report,
        first_hit,
        artifact,
        chain,
    };
    match problem {
        Problem::Benchmark { objective, .. } => {
            let mut config = cfg.engine_config(problem, 0)?;
            config.seed = seed;
            let (report, hit) = timed_run(&config, objective, None)?;
            Ok(record(report, hit, None, Vec::new()))
        }
        Problem::Quantum(objective) => {
            let mut config = cfg.engine_config(problem, 0)?;
            config.seed = seed;
            let (report, hit) = timed_run(&config, objective, None)?;
            let circuit = objective.decode(&report.best_candidate.values)?;
            let (y, c, cost) = objective.score(&circuit)?;
            let text = format!(
                "# objective {y:.16e}\n# correctness {c:.16e}\n# cost {cost}\n{}",
                write_circuit(&circuit)
            );
            Ok(record(report, hit, Some(text), Vec::new()))
        }
        Problem::Lj {
            particles,
            chain_from,
            seed_fraction,
            ..
        } => {
            let first = chain_from.unwrap_or(*particles);
            let mut previous: Option<ClusterGeometry> = None;
            let mut chain = Vec::new();
            let mut last = None;
            for n in first..=*particles {
                let mut config = cfg.engine_config(problem, n)?;
                config.seed = seed;
                let objective = LjObjective::new(n);
                let seeder = previous.as_ref().map(|g| seed_from_smaller(g, *seed_fraction));
                let (report, hit) = timed_run(&config, &objective, seeder.as_ref().map(|s| s as _))?;
                chain.push((n, report.elapsed, report.best_fitness()));
                let geometry = ClusterGeometry::new(report.best_candidate.values.clone())
                    .map_err(|e| CliError::Parse(format!("engine returned a malformed geometry: {e}")))?;
                previous = Some(geometry);
                last = Some((report, hit));
            }
            let (report, hit) = last.expect("at least one cluster size");
            let geometry = previous.expect("geometry of the last size");
            let xyz = write_xyz(&geometry, &format!("N={particles} E={:.16e} seed={seed}", report.best_fitness()));
            if chain_from.is_none() {
                chain.clear();
            }
            Ok(record(report, hit, Some(xyz), chain))
        }
    }
}

fn write_reports(cfg: &ExperimentConfig, dir: &Path, records: &[RunRecord]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    let mut put = |name: String, text: String| -> Result<()> {
        let path = dir.join(name);
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        files.push(path);
        Ok(())
    };
    put("config.toml".into(), cfg.to_toml()?)?;
    let ext = match cfg.objective {
        crate::config::ObjectiveConfig::Lj(_) => "xyz",
        _ => "txt",
    };
    let stem = match cfg.objective {
        crate::config::ObjectiveConfig::Lj(_) => "geometry",
        _ => "circuit",
    };
    for r in records {
        if cfg.report.trajectory {
            put(format!("trajectory_{:03}.csv", r.run), output::trajectory_csv(&r.report)?)?;
        }
        if cfg.report.artifacts {
            if let Some(a) = &r.artifact {
                put(format!("{stem}_{:03}.{ext}", r.run), a.clone())?;
            }
        }
        if !r.chain.is_empty() {
            put(format!("chain_{:03}.csv", r.run), output::chain_csv(&r.chain)?)?;
        }
    }
    if cfg.report.summary {
        put("summary.csv".into(), output::summary_csv(records)?)?;
    }
    if cfg.report.encounters {
        put("encounters.csv".into(), output::encounters_csv(records)?)?;
    }
    Ok(files)
}
