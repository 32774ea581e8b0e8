//! `phonon-damping`: rates, sweeps, assumption reports, special-function
//! tables and Monte-Carlo cross-checks from the command line.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 the potential
//! fails the assumption checks, 3 a numerical failure at one or more points.

mod config;
mod output;
mod sweep;

use std::fmt;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use phonon_damping::bogoliubov::omega_bg;
use phonon_damping::damping::{gamma_beliaev_quadrature, gamma_landau_quadrature, mc_oracle, Process};
use phonon_damping::potential::{validate_assumptions, ProbeGrid};
use phonon_damping::specfun::{beliaev_i, landau_gk};
use phonon_damping::{GasParameters, PotentialModel};

use config::{Flags, Format, Merged};
use output::{fmt_num, to_csv, to_json};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
    Numerical(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Validation(m) => write!(f, "assumption validation failed:\n{m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(name = "phonon-damping", version, about = "Beliaev and Landau damping of Bogoliubov phonons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rates at a single (k, βν) point.
    Rate(Flags),
    /// Rates over a grid of βν and k values.
    Sweep(Flags),
    /// Check the potential against the assumptions the rates rely on.
    Validate(Flags),
    /// Tabulate I(θ) and G_k(θ).
    Specfun(Flags),
    /// Quadrature against the Monte-Carlo mollified-delta estimate.
    Oracle(Flags),
}

fn write_out(merged: &Merged, text: &str) -> Result<(), CliError> {
    match merged.output() {
        Some(path) => fs::write(&path, text).map_err(|e| CliError::Usage(format!("output {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Usage(format!("stdout: {e}")))
        }
    }
}

fn check_model(model: &PotentialModel, nu: f64, skip: bool) -> Result<(), CliError> {
    let params = GasParameters::new(nu, 1.0, model.vhat0()).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = validate_assumptions(model, &params, &ProbeGrid::default_for(model, nu))
        .map_err(|e| CliError::Validation(e.to_string()))?;
    if report.passed() {
        return Ok(());
    }
    if skip {
        eprintln!("warning: continuing despite failed assumption checks (--skip-validation)");
        for f in report.failures() {
            eprintln!("  {}", f.id.label());
        }
        return Ok(());
    }
    Err(CliError::Validation(report.to_string()))
}

fn run_sweep(merged: &Merged, single: bool) -> Result<(), CliError> {
    let cfg = merged.sweep("quadrature")?;
    if single && (cfg.k.len() != 1 || cfg.beta_nu.len() != 1) {
        return Err(CliError::Usage("rate: k and beta_nu take a single value; use sweep for grids".into()));
    }
    let model = cfg.potential.build(cfg.nu, cfg.raw)?;
    check_model(&model, cfg.nu, cfg.skip_validation)?;
    let rows = sweep::run_sweep(&cfg, &model);
    let text = match cfg.format {
        Format::Csv => to_csv(&rows),
        Format::Json => to_json(&rows),
    };
    write_out(merged, &text)?;
    let failed: Vec<String> = rows
        .iter()
        .filter(|r| r.failed())
        .map(|r| {
            format!(
                "k/√ν = {}, βν = {}, {}: {}",
                fmt_num(r.k_over_sqrt_nu),
                fmt_num(r.beta_nu),
                r.method,
                r.errors.join("; ")
            )
        })
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Numerical(format!("{} point(s) failed\n{}", failed.len(), failed.join("\n"))))
    }
}

fn run_validate(merged: &Merged) -> Result<(), CliError> {
    let nu = merged.nu()?;
    let model = merged.potential()?;
    let params = GasParameters::new(nu, 1.0, model.vhat0()).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = validate_assumptions(&model, &params, &ProbeGrid::default_for(&model, nu))
        .map_err(|e| CliError::Validation(e.to_string()))?;
    write_out(merged, &format!("model: {model}\n{report}"))?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Validation(format!("{} check(s) failed", report.failures().count())))
    }
}

fn run_specfun(merged: &Merged) -> Result<(), CliError> {
    let mut text = String::from("theta,I,G2,G3,G4\n");
    for theta in merged.theta()? {
        let num = |r: phonon_damping::Result<f64>| r.map(fmt_num).map_err(|e| CliError::Numerical(e.to_string()));
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_num(theta),
            num(beliaev_i(theta))?,
            num(landau_gk(2, theta))?,
            num(landau_gk(3, theta))?,
            num(landau_gk(4, theta))?,
        ));
    }
    write_out(merged, &text)
}

fn run_oracle(merged: &Merged) -> Result<(), CliError> {
    let cfg = merged.sweep("mc")?;
    if cfg.k.len() != 1 || cfg.beta_nu.len() != 1 {
        return Err(CliError::Usage("oracle: k and beta_nu take a single value".into()));
    }
    let model = cfg.potential.build(cfg.nu, cfg.raw)?;
    check_model(&model, cfg.nu, cfg.skip_validation)?;
    let (k, beta) = if cfg.raw {
        (cfg.k[0], cfg.beta_nu[0])
    } else {
        (cfg.k[0] * cfg.nu.sqrt(), cfg.beta_nu[0] / cfg.nu)
    };
    let params = GasParameters::new(cfg.nu, beta, model.vhat0()).map_err(|e| CliError::Usage(e.to_string()))?;
    let numerical = |e: phonon_damping::Error| CliError::Numerical(e.to_string());
    let eps = cfg.mc_epsilon * omega_bg(&params, &model, k).map_err(numerical)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("jobs: {e}")))?;
    let mut text = String::from("process,quadrature,quadrature_err,mc,mc_stderr,z\n");
    for process in [Process::Beliaev, Process::Landau] {
        let q = match process {
            Process::Beliaev => gamma_beliaev_quadrature(&params, &model, k, &cfg.quad),
            Process::Landau => gamma_landau_quadrature(&params, &model, k, &cfg.quad),
        }
        .map_err(numerical)?;
        let m = pool
            .install(|| mc_oracle(&params, &model, k, process, eps, cfg.mc_samples, cfg.mc_seed))
            .map_err(numerical)?;
        let z = if m.stderr > 0.0 { fmt_num((m.estimate - q.value) / m.stderr) } else { String::new() };
        text.push_str(&format!(
            "{process},{},{},{},{},{z}\n",
            fmt_num(q.value),
            fmt_num(q.abs_error),
            fmt_num(m.estimate),
            fmt_num(m.stderr)
        ));
    }
    write_out(merged, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rate(f) => Merged::new(f).and_then(|m| run_sweep(&m, true)),
        Command::Sweep(f) => Merged::new(f).and_then(|m| run_sweep(&m, false)),
        Command::Validate(f) => Merged::new(f).and_then(|m| run_validate(&m)),
        Command::Specfun(f) => Merged::new(f).and_then(|m| run_specfun(&m)),
        Command::Oracle(f) => Merged::new(f).and_then(|m| run_oracle(&m)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.code())
        }
    }
}
