use phonon_damping::bogoliubov::omega_bg;
use phonon_damping::damping::{
    closed_form_regime, gamma_beliaev_asymptotic, gamma_beliaev_quadrature, gamma_landau_asymptotic,
    gamma_landau_quadrature, mc_oracle, BeliaevRegime, LandauRegime, Process,
};
use phonon_damping::{GasParameters, PotentialModel};
use rayon::prelude::*;

use crate::config::{MethodSel, SweepConfig};

/// One output cell: a number, not requested, or failed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Value(f64),
    Missing,
    Error,
}

impl Cell {
    fn value(self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub k: f64,
    pub k_over_sqrt_nu: f64,
    pub beta_nu: f64,
    pub theta: Cell,
    pub method: &'static str,
    pub gamma_b: Cell,
    pub gamma_b_err: Cell,
    pub gamma_l: Cell,
    pub gamma_l_err: Cell,
    pub total: Cell,
    /// Messages of failed evaluations, reported on stderr.
    pub errors: Vec<String>,
}

impl SweepRow {
    pub fn failed(&self) -> bool {
        !self.errors.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
struct Point {
    k: f64,
    beta: f64,
}

/// (value, error) of one rate by one method.
fn one_rate(
    cfg: &SweepConfig,
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
    method: MethodSel,
) -> Result<(f64, Cell), String> {
    let r = match (method, process) {
        (MethodSel::Quadrature, Process::Beliaev) => {
            gamma_beliaev_quadrature(params, model, k, &cfg.quad).map(|r| (r.value, Cell::Value(r.abs_error)))
        }
        (MethodSel::Quadrature, Process::Landau) => {
            gamma_landau_quadrature(params, model, k, &cfg.quad).map(|r| (r.value, Cell::Value(r.abs_error)))
        }
        (MethodSel::Asymptotic, Process::Beliaev) => {
            gamma_beliaev_asymptotic(params, model, k, BeliaevRegime::Full).map(|v| (v, Cell::Missing))
        }
        (MethodSel::Asymptotic, Process::Landau) => {
            gamma_landau_asymptotic(params, model, k, LandauRegime::Full).map(|v| (v, Cell::Missing))
        }
        (MethodSel::ClosedFormRegime, _) => closed_form_regime(params, model, k, process).map(|(v, _)| (v, Cell::Missing)),
        (MethodSel::Mc, _) => omega_bg(params, model, k).and_then(|w| {
            mc_oracle(params, model, k, process, cfg.mc_epsilon * w, cfg.mc_samples, cfg.mc_seed)
                .map(|m| (m.estimate, Cell::Value(m.stderr)))
        }),
    };
    r.map_err(|e| e.to_string())
}

fn evaluate(cfg: &SweepConfig, model: &PotentialModel, pt: Point, method: MethodSel) -> SweepRow {
    let sqrt_nu = cfg.nu.sqrt();
    let mut row = SweepRow {
        k: pt.k,
        k_over_sqrt_nu: pt.k / sqrt_nu,
        beta_nu: pt.beta * cfg.nu,
        theta: Cell::Error,
        method: method.name(),
        gamma_b: Cell::Missing,
        gamma_b_err: Cell::Missing,
        gamma_l: Cell::Missing,
        gamma_l_err: Cell::Missing,
        total: Cell::Missing,
        errors: Vec::new(),
    };
    let params = match GasParameters::new(cfg.nu, pt.beta, model.vhat0()) {
        Ok(p) => p,
        Err(e) => {
            row.errors.push(e.to_string());
            return row;
        }
    };
    match omega_bg(&params, model, pt.k) {
        Ok(w) => row.theta = Cell::Value(pt.beta * w),
        Err(e) => row.errors.push(format!("omega_bg: {e}")),
    }
    let mut run = |process: Process| -> (Cell, Cell) {
        match one_rate(cfg, &params, model, pt.k, process, method) {
            Ok((v, err)) => (Cell::Value(v), err),
            Err(e) => {
                row.errors.push(format!("{process}: {e}"));
                (Cell::Error, Cell::Error)
            }
        }
    };
    let b = if cfg.rates.needs_beliaev() { Some(run(Process::Beliaev)) } else { None };
    let l = if cfg.rates.needs_landau() { Some(run(Process::Landau)) } else { None };
    if cfg.rates.total {
        let sum = match (b.and_then(|c| c.0.value()), l.and_then(|c| c.0.value())) {
            (Some(x), Some(y)) => Cell::Value(x + y),
            _ => Cell::Error,
        };
        row.total = sum;
    }
    if cfg.rates.beliaev {
        (row.gamma_b, row.gamma_b_err) = b.expect("computed when requested");
    }
    if cfg.rates.landau {
        (row.gamma_l, row.gamma_l_err) = l.expect("computed when requested");
    }
    row
}

/// One row per (βν, k, method), in ascending (βν, k) order whatever the
/// number of workers.
pub fn run_sweep(cfg: &SweepConfig, model: &PotentialModel) -> Vec<SweepRow> {
    let sqrt_nu = cfg.nu.sqrt();
    let mut tasks = Vec::new();
    for &b in &cfg.beta_nu {
        for &k in &cfg.k {
            let pt = if cfg.raw { Point { k, beta: b } } else { Point { k: k * sqrt_nu, beta: b / cfg.nu } };
            for &m in &cfg.methods {
                tasks.push((pt, m));
            }
        }
    }
    let compute = || tasks.par_iter().map(|&(pt, m)| evaluate(cfg, model, pt, m)).collect::<Vec<_>>();
    match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(pool) => pool.install(compute),
        Err(_) => compute(),
    }
}
