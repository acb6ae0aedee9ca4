use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gloa_cli::config::{load_config, parse_config};
use gloa_cli::output::{float, read_columns};
use gloa_cli::{presets, run_experiment, CliError, ExperimentConfig, Result, OUTPUT_DIR_ENV};
use gloa_core::fit::fit_power_law;

#[derive(Parser)]
#[command(name = "gloa", version, about = "Group leaders optimization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment file or a shipped preset.
    Run {
        /// Path to a TOML experiment, or a preset name.
        config: String,
        /// Base seed; run k uses seed + k.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        repeats: Option<usize>,
        /// Defaults to the config's output_dir, then $GLOA_OUTPUT_DIR, then
        /// ./gloa-results/<name>.
        #[arg(long)]
        output_dir: Option<PathBuf>,
        /// Dotted key=value applied to the config, e.g. gloa.groups=5.
        #[arg(long = "override", short = 'o', value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        /// Only print the aggregate line.
        #[arg(long, short)]
        quiet: bool,
    },
    /// List the shipped presets.
    ListPresets,
    /// Print a preset's TOML.
    ShowPreset { name: String },
    /// Fit seconds ~ N^b to two columns of a CSV file.
    FitScaling {
        csv: PathBuf,
        #[arg(long, default_value = "n")]
        x: String,
        #[arg(long, default_value = "seconds")]
        y: String,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Run {
            config,
            seed,
            repeats,
            output_dir,
            mut overrides,
            quiet,
        } => {
            if let Some(s) = seed {
                overrides.push(format!("gloa.seed={s}"));
            }
            if let Some(r) = repeats {
                overrides.push(format!("repeats={r}"));
            }
            let (cfg, base_dir) = resolve(&config, &overrides)?;
            let out = output_dir
                .or_else(|| cfg.output_dir.clone())
                .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
                .unwrap_or_else(|| {
                    PathBuf::from("gloa-results").join(cfg.name.clone().unwrap_or_else(|| "experiment".into()))
                });
            let outcome = run_experiment(&cfg, &base_dir, &out)?;
            report(&outcome, quiet);
            println!("wrote {} files to {}", outcome.files.len(), out.display());
            Ok(())
        }
        Command::ListPresets => {
            for name in presets::names() {
                let cfg = ExperimentConfig::from_toml(presets::preset(name).expect("listed preset"))?;
                println!("{name:<20} {}", describe(&cfg));
            }
            Ok(())
        }
        Command::ShowPreset { name } => {
            let text = presets::preset(&name).ok_or_else(|| CliError::field("preset", format!("unknown preset {name:?}")))?;
            print!("{text}");
            Ok(())
        }
        Command::FitScaling { csv, x, y } => {
            let text = std::fs::read_to_string(&csv).map_err(|e| CliError::io(&csv, e))?;
            let input = |message: String| CliError::Input {
                path: csv.clone(),
                message,
            };
            let points = read_columns(&text, &x, &y).map_err(input)?;
            let fit = fit_power_law(&points).map_err(|e| input(e.to_string()))?;
            println!("exponent {} stderr {} intercept {} points {}", float(fit.exponent), float(fit.stderr), float(fit.intercept), points.len());
            Ok(())
        }
    }
}

/// A config file path, or failing that a preset name.
fn resolve(arg: &str, overrides: &[String]) -> Result<(ExperimentConfig, PathBuf)> {
    let path = Path::new(arg);
    if path.exists() {
        let cfg = load_config(path, overrides)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        return Ok((cfg, base));
    }
    match presets::preset(arg) {
        Some(text) => Ok((parse_config(text, overrides)?, PathBuf::from("."))),
        None => Err(CliError::Input {
            path: path.to_path_buf(),
            message: "no such file or preset (see `gloa list-presets`)".into(),
        }),
    }
}

fn describe(cfg: &ExperimentConfig) -> String {
    use gloa_cli::ObjectiveConfig::*;
    match &cfg.objective {
        Benchmark(b) => format!("benchmark {} d={}", b.name, b.dimension.unwrap_or(2)),
        Lj(l) => match l.incremental_from {
            Some(from) => format!("lj N={} (incremental from {from})", l.particles),
            None => format!("lj N={}", l.particles),
        },
        Quantum(q) => format!("quantum {:?} on {} qubits", q.target, q.qubits.unwrap_or(2)).to_lowercase(),
    }
}

fn report(outcome: &gloa_cli::ExperimentOutcome, quiet: bool) {
    let mut finals: Vec<f64> = outcome.records.iter().map(|r| r.report.best_fitness()).collect();
    if !quiet {
        println!("{:>4} {:>20} {:>24} {:>6} {:>10}  termination", "run", "seed", "final", "iters", "seconds");
        for r in &outcome.records {
            println!(
                "{:>4} {:>20} {:>24} {:>6} {:>10.3}  {}",
                r.run,
                r.seed,
                float(r.report.best_fitness()),
                r.report.iterations_run,
                r.report.elapsed,
                r.report.termination_reason.as_str()
            );
        }
    }
    finals.sort_by(f64::total_cmp);
    if let (Some(best), Some(worst)) = (finals.first(), finals.last()) {
        let median = finals[finals.len() / 2];
        println!("best {} median {} worst {}", float(*best), float(median), float(*worst));
    }
}
