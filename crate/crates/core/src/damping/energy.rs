//! Energy-variable reduction on an increasing dispersion.
//!
//! Beliaev: γ_B = v̂(0)/(128πνkω) ∫_{−ω}^{ω} dy f(u) f(w) F(ω;u,w)² W_B,
//! u, w = (ω ± y)/2, evaluated as 4∫_0^{ω/2} du by the u ↔ w symmetry.
//! Landau: γ_L = v̂(0)/(32πkω) (βν)⁻¹ ∫ dt G(u,ω) f(u) f(u+ω) W_L(θ,t),
//! u = t/β.

use std::f64::consts::PI;

use crate::error::Result;
use crate::numerics::{Integral, QuadratureSpec};
use crate::vertices::{regularized_f_points, RegPoint};

use super::support::{support_for, RateContext};
use super::thermal::{beliaev_weight_on_shell, landau_t_weight};
use super::{integrate_fallible, DampingResult, Method, Process};

/// RegPoint and measure factor f at energy x on the first branch.
fn point(ctx: &RateContext, x: f64) -> Result<(RegPoint, f64)> {
    let p = ctx.disp.invert_first(x)?;
    Ok((RegPoint::new(x, ctx.disp.nu_r(p)), ctx.disp.measure_factor_at_p(p)?))
}

/// Interior break points inside (a, b) that mark the scales of the integrand.
fn breaks_within(a: f64, b: f64, candidates: &[f64]) -> Vec<f64> {
    let mut v: Vec<f64> = candidates.iter().copied().filter(|&x| x > a && x < b).collect();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

pub(crate) fn beliaev_integrand(ctx: &RateContext, om: &RegPoint, u: f64) -> Result<f64> {
    let w = ctx.omega_k - u;
    if u <= 0.0 || w <= 0.0 {
        return Ok(0.0);
    }
    let (pu, fu) = point(ctx, u)?;
    let (pw, fw) = point(ctx, w)?;
    let f = regularized_f_points(om, &pu, &pw);
    Ok(fu * fw * f * f * beliaev_weight_on_shell(ctx.beta, ctx.omega_k, u, w))
}

pub(crate) fn landau_integrand(ctx: &RateContext, om: &RegPoint, t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Ok(0.0);
    }
    let u = t / ctx.beta;
    let (pu, fu) = point(ctx, u)?;
    let (pq, fq) = point(ctx, u + ctx.omega_k)?;
    let f = regularized_f_points(&pq, &pu, om);
    Ok(f * f * fu * fq * landau_t_weight(ctx.beta * ctx.omega_k, t))
}

fn beliaev(ctx: &RateContext, quad: &QuadratureSpec) -> Result<DampingResult> {
    let support = support_for(ctx, false)?;
    let om_k = ctx.omega_k;
    let nu = ctx.params().nu();
    let om = RegPoint::new(om_k, ctx.disp.nu_r(ctx.k));
    let half = 0.5 * om_k;
    let mut total = Integral::ZERO;
    for seg in &support.segments {
        let (a, b) = (seg.lo, seg.hi.min(half));
        if b <= a {
            continue;
        }
        let breaks = breaks_within(a, b, &[1.0 / ctx.beta, nu, 1e-3 * om_k]);
        let part = integrate_fallible(|u| beliaev_integrand(ctx, &om, u), a, b, &breaks, quad)?;
        total = total.combine(part);
    }
    let pref = ctx.params().vhat0() / (128.0 * PI * nu * ctx.k * om_k);
    Ok(DampingResult::from_integral(ctx, total.scale(4.0 * pref), Method::EnergyQuadrature, &support))
}

fn landau(ctx: &RateContext, quad: &QuadratureSpec) -> Result<DampingResult> {
    let support = support_for(ctx, false)?;
    let om = RegPoint::new(ctx.omega_k, ctx.disp.nu_r(ctx.k));
    let theta = ctx.beta * ctx.omega_k;
    let bnu = ctx.params().beta_nu();
    let mut total = Integral::ZERO;
    for seg in &support.segments {
        let (a, b) = (seg.lo, seg.hi);
        if b <= a {
            continue;
        }
        let breaks = breaks_within(a, b, &[1e-3, 1.0, 10.0, theta, bnu, 1e-2 * bnu, 10.0 * bnu]);
        let part = integrate_fallible(|t| landau_integrand(ctx, &om, t), a, b, &breaks, quad)?;
        total = total.combine(part);
    }
    // ∫_{t_max}^∞ of an integrand ~ P(t) e^{−t} with slowly growing P.
    if support.segments.last().map_or(false, |s| s.hi >= ctx.t_max) {
        let edge = landau_integrand(ctx, &om, ctx.t_max)?;
        total.abs_error += 2.0 * edge;
    }
    let pref = ctx.params().vhat0() / (32.0 * PI * ctx.k * ctx.omega_k) / bnu;
    Ok(DampingResult::from_integral(ctx, total.scale(pref), Method::EnergyQuadrature, &support))
}

pub(crate) fn rate(ctx: &RateContext, quad: &QuadratureSpec) -> Result<DampingResult> {
    match ctx.process {
        Process::Beliaev => beliaev(ctx, quad),
        Process::Landau => landau(ctx, quad),
    }
}
