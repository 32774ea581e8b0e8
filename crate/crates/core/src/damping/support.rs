//! Where the energy-conservation constraint can be met, for a given process
//! and external momentum k.
//!
//! On a globally increasing dispersion the constraint is resolved in energy
//! variables: for Beliaev the split u + w = ω_k is admissible when
//! p(u) + p(w) ≥ k, for Landau the pair (u, u + ω_k) when
//! p(u + ω_k) − p(u) ≤ k. A convex dispersion satisfies both everywhere.
//! Otherwise the support is described in |p| with the number of q roots.

use crate::bogoliubov::{omega_bg, Dispersion};
use crate::error::{Error, Result};
use crate::params::GasParameters;
use crate::potential::PotentialModel;

use super::generic::count_roots;
use super::Process;

/// Scan points for the energy-coordinate support test.
const ENERGY_SCAN: usize = 256;
/// Scan points for the momentum-coordinate support test.
const MOMENTUM_SCAN: usize = 512;
/// Smallest truncation t_max = βu_max accepted when a table cuts the tail.
const MIN_T_MAX: f64 = 36.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportCoordinate {
    /// u = ω_p in [0, ω_k]; the partner has w = ω_k − u.
    BeliaevEnergy,
    /// t = βω_p in [0, t_max]; the partner has energy ω_p + ω_k.
    LandauT,
    /// |p|, with the number of partner roots q* per p.
    Momentum,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportSegment {
    pub lo: f64,
    pub hi: f64,
    /// Roots q* per point: 1 in energy coordinates.
    pub roots: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaSupport {
    pub process: Process,
    pub k: f64,
    pub omega_k: f64,
    pub coordinate: SupportCoordinate,
    pub segments: Vec<SupportSegment>,
    /// The whole natural range is admissible on the first increasing branch.
    pub convex_fastpath_ok: bool,
    /// Upper end of the coordinate range that was examined.
    pub range_hi: f64,
}

impl DeltaSupport {
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// For Beliaev in energy variables: the range of y = u − w.
    pub fn y_range(&self) -> Option<(f64, f64)> {
        if self.coordinate != SupportCoordinate::BeliaevEnergy || self.segments.is_empty() {
            return None;
        }
        let lo = self.segments.first().expect("non-empty").lo;
        let hi = self.segments.last().expect("non-empty").hi;
        Some((2.0 * lo - self.omega_k, 2.0 * hi - self.omega_k))
    }

    pub fn summary(&self) -> String {
        let coord = match self.coordinate {
            SupportCoordinate::BeliaevEnergy => "u",
            SupportCoordinate::LandauT => "t",
            SupportCoordinate::Momentum => "p",
        };
        if self.segments.is_empty() {
            return format!("empty ({coord})");
        }
        let parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| format!("[{:.6e}, {:.6e}]x{}", s.lo, s.hi, s.roots))
            .collect();
        format!("{coord} {}{}", parts.join(" "), if self.convex_fastpath_ok { " fast" } else { "" })
    }
}

/// Everything a rate evaluation at one (params, model, k) needs.
#[derive(Debug, Clone)]
pub struct RateContext {
    pub disp: Dispersion,
    pub k: f64,
    pub omega_k: f64,
    pub beta: f64,
    /// Landau truncation in t = βu.
    pub t_max: f64,
    pub process: Process,
}

impl RateContext {
    pub fn new(params: &GasParameters, model: &PotentialModel, k: f64, process: Process) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::Domain { what: "rates need a momentum k > 0", at: k });
        }
        let omega_k = omega_bg(params, model, k)?;
        let beta = params.beta();
        let theta = beta * omega_k;
        let mut t_max = (theta + 40.0).max(50.0);
        let e_need = match process {
            Process::Beliaev => omega_k,
            Process::Landau => t_max / beta + omega_k,
        };
        let mut disp = Dispersion::covering_energy(params, model, e_need * (1.0 + 1e-9))?;
        let e_top = disp.branches().last().expect("at least one branch").omega_hi;
        if e_top < e_need {
            match process {
                Process::Beliaev => {
                    return Err(Error::SupportResolution(format!(
                        "potential table too short: ω_bg reaches only {e_top}, need {omega_k}"
                    )))
                }
                Process::Landau => {
                    t_max = beta * (e_top - omega_k) * (1.0 - 1e-9);
                    if t_max < MIN_T_MAX {
                        return Err(Error::SupportResolution(format!(
                            "potential table too short for the thermal tail: βu_max = {t_max}"
                        )));
                    }
                }
            }
        }
        // Partner momenta reach p + k.
        let e_p = match process {
            Process::Beliaev => omega_k,
            Process::Landau => t_max / beta,
        };
        let p_hi = disp.sup_p_below(e_p)?;
        if p_hi + k > disp.p_max() && disp.p_max() < model.k_max() {
            let want = (1.05 * (p_hi + k)).min(model.k_max());
            disp = Dispersion::new(params, model, want)?;
        }
        Ok(RateContext { disp, k, omega_k, beta, t_max, process })
    }

    pub fn params(&self) -> &GasParameters {
        self.disp.params()
    }

    /// Energy-variable reduction applies: one increasing branch over the range.
    pub fn energy_path_applies(&self) -> bool {
        self.disp.is_monotone()
    }

    /// Largest |p| that can contribute (Landau: up to the thermal cut).
    pub fn p_range(&self) -> Result<f64> {
        match self.process {
            Process::Beliaev => self.disp.sup_p_below(self.omega_k),
            Process::Landau => self.disp.sup_p_below(self.t_max / self.beta),
        }
    }
}

/// Bisect a predicate change between `a` (value `in_a`) and `b`.
fn refine_edge<F: FnMut(f64) -> Result<bool>>(mut inside: F, mut a: f64, mut b: f64, in_a: bool) -> Result<f64> {
    let tol = 1e-13 * a.abs().max(b.abs());
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        let mid = 0.5 * (a + b);
        if inside(mid)? == in_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Runs of `inside` over a grid that starts and ends at the range ends.
fn segments_from_grid<F: FnMut(f64) -> Result<bool>>(
    mut inside: F,
    grid: &[f64],
    first_in: bool,
    last_in: bool,
) -> Result<Vec<(f64, f64)>> {
    let n = grid.len();
    let mut flags = Vec::with_capacity(n);
    flags.push(first_in);
    for &x in &grid[1..n - 1] {
        flags.push(inside(x)?);
    }
    flags.push(last_in);
    let mut out = Vec::new();
    let mut start: Option<f64> = if flags[0] { Some(grid[0]) } else { None };
    for i in 1..n {
        if flags[i] == flags[i - 1] {
            continue;
        }
        let edge = refine_edge(&mut inside, grid[i - 1], grid[i], flags[i - 1])?;
        if flags[i] {
            start = Some(edge);
        } else if let Some(s) = start.take() {
            out.push((s, edge));
        }
    }
    if let Some(s) = start {
        out.push((s, grid[n - 1]));
    }
    Ok(out)
}

fn beliaev_energy_support(ctx: &RateContext) -> Result<Vec<SupportSegment>> {
    let (om, k) = (ctx.omega_k, ctx.k);
    let tol = 1e-12 * k;
    let disp = &ctx.disp;
    let inside = |u: f64| -> Result<bool> {
        let g = disp.invert_first(u)? + disp.invert_first(om - u)? - k;
        Ok(g >= -tol)
    };
    let grid: Vec<f64> = (0..=ENERGY_SCAN).map(|i| om * i as f64 / ENERGY_SCAN as f64).collect();
    // g vanishes at both ends; they belong to the support if their neighbours do.
    let first_in = inside(grid[1])?;
    let last_in = inside(grid[ENERGY_SCAN - 1])?;
    let segs = segments_from_grid(inside, &grid, first_in, last_in)?;
    Ok(segs.into_iter().map(|(lo, hi)| SupportSegment { lo, hi, roots: 1 }).collect())
}

fn landau_energy_support(ctx: &RateContext) -> Result<Vec<SupportSegment>> {
    let (om, k, beta) = (ctx.omega_k, ctx.k, ctx.beta);
    let tol = 1e-12 * k;
    let disp = &ctx.disp;
    let inside = |t: f64| -> Result<bool> {
        let u = t / beta;
        let h = disp.invert_first(u + om)? - disp.invert_first(u)? - k;
        Ok(h <= tol)
    };
    let t_max = ctx.t_max;
    let mut grid = vec![0.0];
    grid.extend(crate::numerics::geometric_grid(1e-6 * t_max, t_max, ENERGY_SCAN));
    let first_in = inside(grid[1])?;
    let last_in = inside(t_max)?;
    let segs = segments_from_grid(inside, &grid, first_in, last_in)?;
    Ok(segs.into_iter().map(|(lo, hi)| SupportSegment { lo, hi, roots: 1 }).collect())
}

fn momentum_support(ctx: &RateContext) -> Result<(Vec<SupportSegment>, f64)> {
    let p_hi = ctx.p_range()?;
    if !(p_hi > 0.0) {
        return Ok((Vec::new(), 0.0));
    }
    let mut grid = vec![0.0];
    grid.extend(crate::numerics::geometric_grid(1e-6 * p_hi, p_hi / MOMENTUM_SCAN as f64, 64));
    grid.extend((2..=MOMENTUM_SCAN).map(|i| p_hi * i as f64 / MOMENTUM_SCAN as f64));
    let count = |p: f64| count_roots(ctx, p);
    let mut counts = Vec::with_capacity(grid.len());
    counts.push(count(grid[1])?);
    for &p in &grid[1..] {
        counts.push(count(p)?);
    }
    let mut segs = Vec::new();
    let mut start = 0.0;
    for i in 1..grid.len() {
        if counts[i] == counts[i - 1] {
            continue;
        }
        // Bisect to the point where the count changes.
        let (mut a, mut b) = (grid[i - 1], grid[i]);
        let ca = counts[i - 1];
        let tol = 1e-13 * b;
        while b - a > tol {
            let mid = 0.5 * (a + b);
            if count(mid)? == ca {
                a = mid;
            } else {
                b = mid;
            }
        }
        let edge = 0.5 * (a + b);
        if ca > 0 && edge > start {
            segs.push(SupportSegment { lo: start, hi: edge, roots: ca });
        }
        start = edge;
    }
    let last = *counts.last().expect("non-empty");
    if last > 0 && p_hi > start {
        segs.push(SupportSegment { lo: start, hi: p_hi, roots: last });
    }
    Ok((segs, p_hi))
}

pub(crate) fn support_for(ctx: &RateContext, force_momentum: bool) -> Result<DeltaSupport> {
    let (coordinate, segments, range_hi) = if ctx.energy_path_applies() && !force_momentum {
        match ctx.process {
            Process::Beliaev => (SupportCoordinate::BeliaevEnergy, beliaev_energy_support(ctx)?, ctx.omega_k),
            Process::Landau => (SupportCoordinate::LandauT, landau_energy_support(ctx)?, ctx.t_max),
        }
    } else {
        let (segs, hi) = momentum_support(ctx)?;
        (SupportCoordinate::Momentum, segs, hi)
    };
    let convex_fastpath_ok = coordinate != SupportCoordinate::Momentum
        && segments.len() == 1
        && segments[0].lo == 0.0
        && segments[0].hi == range_hi;
    Ok(DeltaSupport {
        process: ctx.process,
        k: ctx.k,
        omega_k: ctx.omega_k,
        coordinate,
        segments,
        convex_fastpath_ok,
        range_hi,
    })
}

/// Resolve the delta-function support. An empty support is a valid answer.
pub fn detect_support(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
) -> Result<DeltaSupport> {
    let ctx = RateContext::new(params, model, k, process)?;
    support_for(&ctx, false)
}
