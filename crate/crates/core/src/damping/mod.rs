//! Beliaev and Landau damping rates of a phonon of momentum k.
//!
//! Rates are reported as positive numbers; the imaginary part of the
//! dispersion shift is −(γ_B + γ_L).
//!
//! Two exact reductions of the delta-constrained integrals are provided. The
//! energy-variable path integrates in u = ω_bg(p) and needs ω_bg to be
//! increasing over the relevant range; the generic path integrates in |p|
//! and sums over the partner roots q*, and works for any branch structure.

mod asymptotic;
mod energy;
mod generic;
mod montecarlo;
mod support;
pub mod thermal;

use std::cell::RefCell;
use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{integrate_pieces, Integral, QuadratureSpec};
use crate::params::{diagnostics, GasParameters, RegimeDiagnostics};
use crate::potential::PotentialModel;

pub use asymptotic::{
    closed_form_regime, flat_high_t_kernel, flat_high_t_kernel_integral, gamma_beliaev_asymptotic,
    gamma_landau_asymptotic, gamma_landau_flat_high_t, BeliaevRegime, LandauRegime,
};
pub use generic::{partner_roots, reduce_delta_generic};
pub use montecarlo::{mc_oracle, McEstimate, MC_CHUNK};
pub use support::{detect_support, DeltaSupport, RateContext, SupportCoordinate, SupportSegment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Process {
    /// ω_k → ω_p + ω_q
    Beliaev,
    /// ω_k + ω_p → ω_q
    Landau,
}

impl fmt::Display for Process {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Process::Beliaev => "beliaev",
            Process::Landau => "landau",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    EnergyQuadrature,
    GenericScan,
    Asymptotic,
    ClosedFormRegime,
    MonteCarlo,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::EnergyQuadrature => "energy_quadrature",
            Method::GenericScan => "generic_scan",
            Method::Asymptotic => "asymptotic",
            Method::ClosedFormRegime => "closed_form_regime",
            Method::MonteCarlo => "monte_carlo",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DampingResult {
    pub process: Process,
    pub k: f64,
    /// γ ≥ 0
    pub value: f64,
    pub abs_error: f64,
    pub method: Method,
    pub diagnostics: RegimeDiagnostics,
    /// Human-readable summary of the resolved support.
    pub support: String,
    /// False when some quadrature ran out of its subdivision budget.
    pub converged: bool,
}

impl DampingResult {
    pub(crate) fn from_integral(ctx: &RateContext, integral: Integral, method: Method, support: &DeltaSupport) -> Self {
        DampingResult {
            process: ctx.process,
            k: ctx.k,
            // Integrands are non-negative; only rounding can push below 0.
            value: integral.value.max(0.0),
            abs_error: integral.abs_error.abs(),
            method,
            diagnostics: diagnostics(ctx.params(), ctx.k, ctx.omega_k),
            support: support.summary(),
            converged: integral.converged,
        }
    }
}

/// Integrates a fallible integrand. The first error stops further work
/// (the integrand returns 0 from then on) and is returned.
pub(crate) fn integrate_fallible<F>(f: F, a: f64, b: f64, breaks: &[f64], spec: &QuadratureSpec) -> Result<Integral>
where
    F: Fn(f64) -> Result<f64>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let out = integrate_pieces(
        |x| {
            if failure.borrow().is_some() {
                return 0.0;
            }
            match f(x) {
                Ok(v) => v,
                Err(e) => {
                    *failure.borrow_mut() = Some(e);
                    0.0
                }
            }
        },
        a,
        b,
        breaks,
        spec,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(out?)
}

fn quadrature(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
    quad: &QuadratureSpec,
) -> Result<DampingResult> {
    quad.validate()?;
    let ctx = RateContext::new(params, model, k, process)?;
    if ctx.energy_path_applies() {
        energy::rate(&ctx, quad)
    } else {
        generic::rate(&ctx, quad)
    }
}

/// γ_B(k) by exact quadrature: energy variables when ω_bg is increasing over
/// [0, ω_bg(k)], the generic scan otherwise.
pub fn gamma_beliaev_quadrature(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    quad: &QuadratureSpec,
) -> Result<DampingResult> {
    quadrature(params, model, k, Process::Beliaev, quad)
}

/// γ_L(k) by exact quadrature, the thermal tail truncated at t = βu = t_max
/// with a bound on the remainder added to the error.
pub fn gamma_landau_quadrature(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    quad: &QuadratureSpec,
) -> Result<DampingResult> {
    quadrature(params, model, k, Process::Landau, quad)
}

/// Energy-variable reduction only; fails if ω_bg is not increasing.
pub fn reduce_delta_energy(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
    quad: &QuadratureSpec,
) -> Result<DampingResult> {
    quad.validate()?;
    let ctx = RateContext::new(params, model, k, process)?;
    if !ctx.energy_path_applies() {
        let b = &ctx.disp.branches()[0];
        return Err(Error::SupportResolution(format!(
            "ω_bg is not increasing beyond p = {}; use the generic reduction",
            b.p_hi
        )));
    }
    energy::rate(&ctx, quad)
}

/// (γ_B, γ_L, γ_B + γ_L)
pub fn total_damping(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    quad: &QuadratureSpec,
) -> Result<(DampingResult, DampingResult, f64)> {
    let b = gamma_beliaev_quadrature(params, model, k, quad)?;
    let l = gamma_landau_quadrature(params, model, k, quad)?;
    let total = b.value + l.value;
    Ok((b, l, total))
}

#[cfg(test)]
mod tests;
