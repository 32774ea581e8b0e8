//! Generic reduction in |p|: the angular delta is resolved through
//! q² = k² + p² − 2kp cosϑ, giving
//!
//!   γ_B = 1/(8πk) ∫ dp Σ_{q*} p q* j(k;p,q*)² W_B / |ω'(q*)|,
//!   γ_L = 1/(4πk) ∫ dp Σ_{q*} p q* j(q*;k,p)² W_L / |ω'(q*)|,
//!
//! with q* ∈ [|p−k|, p+k] solving ω(q*) = ω_k − ω_p or ω_p + ω_k.

use std::f64::consts::PI;

use crate::bogoliubov::Dispersion;
use crate::error::{Error, Result};
use crate::numerics::{find_root_bracketed, Integral, QuadratureSpec, RootBracket};
use crate::params::GasParameters;
use crate::potential::PotentialModel;
use crate::vertices::{regularized_f_points, RegPoint};

use super::support::{support_for, RateContext};
use super::thermal::{beliaev_weight, landau_weight};
use super::{integrate_fallible, DampingResult, Method, Process};

const ROOT_TOL: f64 = 1e-14;
/// |dω/dq| below this (in units of √ν) at a root is rejected.
const SLOPE_FLOOR: f64 = 1e-8;

/// All q in [|p−k|, p+k] with ω(q) on the energy shell of the process,
/// one per monotone branch piece that brackets the target.
pub fn partner_roots(disp: &Dispersion, process: Process, k: f64, p: f64) -> Result<Vec<f64>> {
    let (wk, wp) = (disp.omega(k), disp.omega(p));
    let target = match process {
        Process::Beliaev => wk - wp,
        Process::Landau => wp + wk,
    };
    if target < 0.0 {
        return Ok(Vec::new());
    }
    let (q_lo, q_hi) = ((p - k).abs(), (p + k).min(disp.p_max()));
    let phi = |q: f64| disp.omega(q) - target;
    let mut roots = Vec::new();
    for b in disp.branches() {
        let (a, c) = (q_lo.max(b.p_lo), q_hi.min(b.p_hi));
        if a > c {
            continue;
        }
        let (fa, fc) = (phi(a), phi(c));
        if fa * fc > 0.0 {
            continue;
        }
        // A root shared by two adjacent pieces is counted once.
        if fa == 0.0 && roots.last().map_or(false, |&r: &f64| r == a) {
            continue;
        }
        let br = RootBracket::new(a, c, fa, fc)?;
        roots.push(find_root_bracketed(phi, br, ROOT_TOL)?);
    }
    Ok(roots)
}

pub(crate) fn count_roots(ctx: &RateContext, p: f64) -> Result<usize> {
    Ok(partner_roots(&ctx.disp, ctx.process, ctx.k, p)?.len())
}

fn integrand(ctx: &RateContext, om_k: &RegPoint, p: f64) -> Result<f64> {
    if p <= 0.0 {
        return Ok(0.0);
    }
    let disp = &ctx.disp;
    let nu = ctx.params().nu();
    let v0 = ctx.params().vhat0();
    let pp = RegPoint::from_momentum(disp, p);
    let mut sum = 0.0;
    for q in partner_roots(disp, ctx.process, ctx.k, p)? {
        let slope = disp.d_omega_dk(q).abs();
        if slope < SLOPE_FLOOR * nu.sqrt() {
            return Err(Error::NearSingularRoot { p, q });
        }
        if q <= 0.0 {
            continue;
        }
        let pq = RegPoint::from_momentum(disp, q);
        let (f, th) = match ctx.process {
            Process::Beliaev => (
                regularized_f_points(om_k, &pp, &pq),
                beliaev_weight(ctx.beta, om_k.x, pp.x, pq.x),
            ),
            Process::Landau => (
                regularized_f_points(&pq, om_k, &pp),
                landau_weight(ctx.beta, om_k.x, pp.x, pq.x),
            ),
        };
        // j² = (v̂(0)/ν) F² / (8 ω_k ω_p ω_q)
        let j2 = v0 / nu * f * f / (8.0 * om_k.x * pp.x * pq.x);
        sum += p * q * j2 * th / slope;
    }
    Ok(sum)
}

pub(crate) fn rate(ctx: &RateContext, quad: &QuadratureSpec) -> Result<DampingResult> {
    let support = support_for(ctx, true)?;
    let om_k = RegPoint::new(ctx.omega_k, ctx.disp.nu_r(ctx.k));
    let sqrt_nu = ctx.params().nu().sqrt();
    let thermal_p = 1.0 / (ctx.beta * sqrt_nu);
    let mut total = Integral::ZERO;
    for seg in &support.segments {
        let (a, b) = (seg.lo, seg.hi);
        if b <= a {
            continue;
        }
        let mut breaks: Vec<f64> = [ctx.k, thermal_p, sqrt_nu, 1e-3 * ctx.k]
            .into_iter()
            .filter(|&x| x > a && x < b)
            .collect();
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
        let part = integrate_fallible(|p| integrand(ctx, &om_k, p), a, b, &breaks, quad)?;
        total = total.combine(part);
    }
    if ctx.process == Process::Landau {
        if let Some(last) = support.segments.last() {
            if last.hi >= support.range_hi {
                // Beyond the thermal cut the integrand falls like e^{−βω_p}.
                let p = last.hi;
                let edge = integrand(ctx, &om_k, p)?;
                let decay = ctx.beta * ctx.disp.d_omega_dk(p).abs();
                if decay > 0.0 {
                    total.abs_error += 2.0 * edge / decay;
                }
            }
        }
    }
    let pref = match ctx.process {
        Process::Beliaev => 1.0 / (8.0 * PI * ctx.k),
        Process::Landau => 1.0 / (4.0 * PI * ctx.k),
    };
    Ok(DampingResult::from_integral(ctx, total.scale(pref), Method::GenericScan, &support))
}

/// The momentum-scan reduction for either process, whatever the branch
/// structure. An empty support gives exactly zero.
pub fn reduce_delta_generic(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
    quad: &QuadratureSpec,
) -> Result<DampingResult> {
    quad.validate()?;
    let ctx = RateContext::new(params, model, k, process)?;
    rate(&ctx, quad)
}
