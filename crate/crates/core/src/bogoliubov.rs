//! Bogoliubov dispersion, rotation coefficients, thermal occupation, branch
//! decomposition and inversion of ω_bg, the energy-variable measure factor,
//! and the ground-state energy density.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{
    find_root_bracketed, geometric_grid, integrate_pieces, Integral, QuadratureSpec, RootBracket,
    TailMap,
};
use crate::params::GasParameters;
use crate::potential::{no_plateau_function, PotentialKind, PotentialModel};

/// Default number of geometric grid points for the branch scan.
pub const BRANCH_SCAN_POINTS: usize = 4096;
/// |D| below this on 3 consecutive scan points counts as a plateau; loose
/// enough to absorb interpolation error of tabulated models.
const PLATEAU_TOL: f64 = 1e-7;
const PLATEAU_RUN: usize = 3;
const INVERSION_TOL: f64 = 1e-14;

/// Rates and dispersion work with `params.vhat0()` as the normalisation, so it
/// has to be the model's own v̂(0); a Gaussian also carries its own ν.
pub fn check_binding(params: &GasParameters, model: &PotentialModel) -> Result<()> {
    let v0 = model.vhat0();
    if !(v0 > 0.0) {
        return Err(Error::Mismatch(format!("model has v̂(0) = {v0}, must be > 0")));
    }
    if ((params.vhat0() - v0) / v0).abs() > 1e-12 {
        return Err(Error::Mismatch(format!(
            "params.vhat0 = {} but the model has v̂(0) = {v0}",
            params.vhat0()
        )));
    }
    if let PotentialKind::Gaussian { nu, .. } = model.kind() {
        if ((params.nu() - nu) / nu).abs() > 1e-12 {
            return Err(Error::Mismatch(format!(
                "params.nu = {} but the Gaussian is bound to nu = {nu}",
                params.nu()
            )));
        }
    }
    Ok(())
}

/// ν v̂(k)/v̂(0)
fn nu_r(params: &GasParameters, model: &PotentialModel, k: f64) -> f64 {
    params.nu() * model.vhat(k) / model.vhat0()
}

fn radicand(params: &GasParameters, model: &PotentialModel, k: f64) -> f64 {
    let k2 = k * k;
    0.25 * k2 * k2 + nu_r(params, model, k) * k2
}

/// ω_bg(k) = √(k⁴/4 + ν v̂(k)/v̂(0) k²)
pub fn omega_bg(params: &GasParameters, model: &PotentialModel, k: f64) -> Result<f64> {
    if k.is_nan() {
        return Err(Error::Domain { what: "momentum is NaN", at: k });
    }
    let k = k.abs();
    if k > model.k_max() {
        return Err(Error::OutOfRange { value: k, lo: 0.0, hi: model.k_max() });
    }
    let rad = radicand(params, model, k);
    if rad < 0.0 || rad.is_nan() {
        return Err(Error::Domain { what: "negative dispersion radicand", at: k });
    }
    Ok(rad.sqrt())
}

/// (s_k, c_k). Both are computed from ω and ν_k = ν v̂(k)/v̂(0) through
/// A = √(ω² + ν_k²), with A − ω formed as ν_k²/(A + ω).
pub fn bogo_coeffs(params: &GasParameters, model: &PotentialModel, k: f64) -> Result<(f64, f64)> {
    if k == 0.0 {
        return Err(Error::Singular { what: "Bogoliubov coefficients" });
    }
    let omega = omega_bg(params, model, k)?;
    let nr = nu_r(params, model, k);
    let a = omega.hypot(nr);
    let s = (nr * nr / (a + omega) / (2.0 * omega)).sqrt();
    let c = ((a + omega) / (2.0 * omega)).sqrt();
    Ok((s, c))
}

/// s_k written through ν_k/(k²/2 + ν_k) only, as an independent route to
/// [`bogo_coeffs`]. 1 − x and 1/√(1 − x²) − 1 are rearranged so that neither
/// small nor large k loses digits.
pub fn s_alternative(params: &GasParameters, model: &PotentialModel, k: f64) -> Result<f64> {
    if k == 0.0 {
        return Err(Error::Singular { what: "Bogoliubov coefficients" });
    }
    let nr = nu_r(params, model, k);
    let a = 0.5 * k * k + nr;
    if !(a > 0.0) {
        return Err(Error::Domain { what: "non-positive k²/2 + ν v̂/v̂(0)", at: k });
    }
    let x = nr / a;
    // 1 − x = (k²/2)/a exactly
    let one_minus = (0.5 * k * k / a) * (1.0 + x);
    if !(one_minus > 0.0) {
        return Err(Error::Domain { what: "negative dispersion radicand", at: k });
    }
    let root = one_minus.sqrt();
    let inner = x * x / (root * (1.0 + root));
    Ok((0.5 * inner).sqrt())
}

/// ρ = 1/(e^{βω} − 1)
pub fn occupation_rho(params: &GasParameters, omega: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain { what: "occupation needs omega > 0", at: omega });
    }
    Ok(1.0 / (params.beta() * omega).exp_m1())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    pub k: f64,
    pub omega: f64,
    pub s: f64,
    pub c: f64,
    pub rho: f64,
}

pub fn spectrum_point(params: &GasParameters, model: &PotentialModel, k: f64) -> Result<SpectrumPoint> {
    let omega = omega_bg(params, model, k)?;
    let (s, c) = bogo_coeffs(params, model, k)?;
    let rho = occupation_rho(params, omega)?;
    Ok(SpectrumPoint { k, omega, s, c, rho })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A maximal momentum interval on which ω_bg is strictly monotone, with a
/// sampled table used to bracket inversions.
#[derive(Debug, Clone, PartialEq)]
pub struct DispersionBranch {
    pub p_lo: f64,
    pub p_hi: f64,
    pub direction: Direction,
    pub omega_lo: f64,
    pub omega_hi: f64,
    /// (p, ω_bg(p)) samples, ascending in p, including both ends.
    samples: Vec<(f64, f64)>,
}

impl DispersionBranch {
    pub fn omega_min(&self) -> f64 {
        self.omega_lo.min(self.omega_hi)
    }
    pub fn omega_max(&self) -> f64 {
        self.omega_lo.max(self.omega_hi)
    }
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }
}

/// ω_bg with its branch table over [0, p_max].
#[derive(Debug, Clone)]
pub struct Dispersion {
    params: GasParameters,
    model: PotentialModel,
    branches: Vec<DispersionBranch>,
    p_max: f64,
}

impl Dispersion {
    pub fn new(params: &GasParameters, model: &PotentialModel, p_max: f64) -> Result<Self> {
        check_binding(params, model)?;
        let branches = detect_branches(params, model, p_max)?;
        Ok(Dispersion { params: *params, model: model.clone(), branches, p_max })
    }

    /// Covers energies up to `e_max` on the first branch when possible.
    pub fn covering_energy(params: &GasParameters, model: &PotentialModel, e_max: f64) -> Result<Self> {
        check_binding(params, model)?;
        let sqrt_nu = params.nu().sqrt();
        let mut p = (2.0 * (2.0 * e_max).sqrt()).max(4.0 * sqrt_nu);
        let top = model.k_max();
        if p >= top {
            p = top;
        } else {
            // ω_bg ≥ k²/2 − o(k²) for any admissible model, so this stops quickly.
            let mut guard = 0;
            while radicand(params, model, p).sqrt() < e_max && guard < 60 && p < top {
                p = (2.0 * p).min(top);
                guard += 1;
            }
        }
        Dispersion::new(params, model, p)
    }

    pub fn params(&self) -> &GasParameters {
        &self.params
    }
    pub fn model(&self) -> &PotentialModel {
        &self.model
    }
    pub fn branches(&self) -> &[DispersionBranch] {
        &self.branches
    }
    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    /// True when ω_bg is increasing on the whole table.
    pub fn is_monotone(&self) -> bool {
        self.branches.len() == 1
    }

    pub fn omega(&self, k: f64) -> f64 {
        radicand(&self.params, &self.model, k.abs()).max(0.0).sqrt()
    }

    pub fn nu_r(&self, k: f64) -> f64 {
        nu_r(&self.params, &self.model, k)
    }

    /// k²/(2ν) + r + k r'/2, whose sign is that of dω/dk.
    pub fn slope_sign_function(&self, k: f64) -> f64 {
        no_plateau_function(&self.model, self.params.nu(), k)
    }

    pub fn d_omega_dk(&self, k: f64) -> f64 {
        let nu = self.params.nu();
        if k == 0.0 {
            return nu.sqrt();
        }
        nu * k * self.slope_sign_function(k) / self.omega(k)
    }

    /// Largest p in [0, p_max] with ω_bg(p) ≤ e; p_max itself if the table
    /// never rises above e.
    pub fn sup_p_below(&self, e: f64) -> Result<f64> {
        for (n, b) in self.branches.iter().enumerate().rev() {
            if b.omega_min() > e {
                continue;
            }
            if b.omega_max() <= e {
                return Ok(b.p_hi);
            }
            return match b.direction {
                Direction::Increasing => self.invert(n, e),
                // The later, increasing branch starts at this one's minimum,
                // which is ≤ e, so it would have matched first.
                Direction::Decreasing => Ok(b.p_hi),
            };
        }
        Ok(0.0)
    }

    /// Momentum on the first (increasing, starting at 0) branch.
    pub fn invert_first(&self, omega: f64) -> Result<f64> {
        self.invert(0, omega)
    }

    pub fn invert(&self, branch: usize, omega: f64) -> Result<f64> {
        let b = self.branches.get(branch).ok_or(Error::OutOfRange {
            value: branch as f64,
            lo: 0.0,
            hi: self.branches.len() as f64 - 1.0,
        })?;
        if branch == 0 {
            if omega == 0.0 {
                return Ok(0.0);
            }
            if let PotentialKind::FlatCutoff { lambda, .. } = self.model.kind() {
                let p = flat_inverse(self.params.nu(), omega);
                if p < *lambda && omega <= b.omega_max() {
                    return Ok(p);
                }
            }
        }
        invert_on_branch(&self.params, &self.model, b, omega)
    }

    /// f(u) = d(p²)/d(u²) on the given branch, = 1/(ν D(p(u))).
    pub fn measure_factor_f(&self, branch: usize, u: f64) -> Result<f64> {
        let p = self.invert(branch, u)?;
        self.measure_factor_at_p(p)
    }

    /// f expressed at the momentum p: 1/(ν v̂/v̂(0) + (1/2 + ν v̂_{,p²}/v̂(0)) p²).
    pub fn measure_factor_at_p(&self, p: f64) -> Result<f64> {
        let nu = self.params.nu();
        let v0 = self.model.vhat0();
        let denom = nu * self.model.vhat(p) / v0 + (0.5 + nu * self.model.dvhat_dk2(p) / v0) * p * p;
        if denom.abs() <= 1e-14 * nu || !denom.is_finite() {
            return Err(Error::SingularMeasure { p });
        }
        Ok(1.0 / denom.abs())
    }
}

/// p(ω) for a flat v̂: p² = 2(√(ν² + ω²) − ν), in a cancellation-free form.
pub fn flat_inverse(nu: f64, omega: f64) -> f64 {
    (2.0 * omega * omega / (nu.hypot(omega) + nu)).sqrt()
}

pub fn detect_branches(params: &GasParameters, model: &PotentialModel, p_max: f64) -> Result<Vec<DispersionBranch>> {
    if !(p_max > 0.0) || p_max.is_nan() {
        return Err(Error::Domain { what: "branch scan needs p_max > 0", at: p_max });
    }
    if p_max > model.k_max() {
        return Err(Error::OutOfRange { value: p_max, lo: 0.0, hi: model.k_max() });
    }
    let nu = params.nu();
    let sqrt_nu = nu.sqrt();
    let d = |p: f64| no_plateau_function(model, nu, p);
    let p_min = 1e-6 * sqrt_nu.min(p_max);
    let mut grid = vec![0.0];
    grid.extend(geometric_grid(p_min, p_max, BRANCH_SCAN_POINTS - 1));
    let values: Vec<f64> = grid.iter().map(|&p| d(p)).collect();

    let mut run = 0usize;
    for (i, v) in values.iter().enumerate() {
        if v.abs() <= PLATEAU_TOL {
            run += 1;
            if run >= PLATEAU_RUN {
                return Err(Error::Plateau { lo: grid[i + 1 - run], hi: grid[i] });
            }
        } else {
            run = 0;
        }
        if !v.is_finite() {
            return Err(Error::Domain { what: "dispersion slope not finite", at: grid[i] });
        }
    }

    let width = 1e-8 * sqrt_nu;
    let mut stationary = Vec::new();
    let mut last_nonzero = (grid[0], values[0]);
    for i in 1..grid.len() {
        let (p, v) = (grid[i], values[i]);
        if v == 0.0 {
            continue;
        }
        if v * last_nonzero.1 < 0.0 {
            let (mut lo, mut hi, f_lo) = (last_nonzero.0, p, last_nonzero.1);
            while hi - lo > width {
                let mid = 0.5 * (lo + hi);
                let fm = d(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (fm < 0.0) == (f_lo < 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            stationary.push(0.5 * (lo + hi));
        }
        last_nonzero = (p, v);
    }

    let mut edges = vec![0.0];
    edges.extend(stationary.iter().copied());
    edges.push(p_max);
    let omega = |p: f64| radicand(params, model, p).max(0.0).sqrt();
    let mut branches = Vec::with_capacity(edges.len() - 1);
    for (n, w) in edges.windows(2).enumerate() {
        let (lo, hi) = (w[0], w[1]);
        let mut samples = vec![(lo, omega(lo))];
        samples.extend(grid.iter().filter(|&&p| p > lo && p < hi).map(|&p| (p, omega(p))));
        samples.push((hi, omega(hi)));
        branches.push(DispersionBranch {
            p_lo: lo,
            p_hi: hi,
            direction: if n % 2 == 0 { Direction::Increasing } else { Direction::Decreasing },
            omega_lo: samples[0].1,
            omega_hi: samples[samples.len() - 1].1,
            samples,
        });
    }
    Ok(branches)
}

/// p on `branch` with ω_bg(p) = omega.
pub fn invert_on_branch(
    params: &GasParameters,
    model: &PotentialModel,
    branch: &DispersionBranch,
    omega: f64,
) -> Result<f64> {
    let (lo_w, hi_w) = (branch.omega_min(), branch.omega_max());
    let slack = 1e-13 * hi_w;
    if !(omega >= lo_w - slack && omega <= hi_w + slack) {
        return Err(Error::OutOfRange { value: omega, lo: lo_w, hi: hi_w });
    }
    let s = &branch.samples;
    let increasing = branch.direction == Direction::Increasing;
    // First sample index whose energy has passed the target.
    let idx = if increasing {
        s.partition_point(|&(_, w)| w < omega)
    } else {
        s.partition_point(|&(_, w)| w > omega)
    };
    if idx == 0 {
        return Ok(s[0].0);
    }
    if idx >= s.len() {
        return Ok(s[s.len() - 1].0);
    }
    let (p0, w0) = s[idx - 1];
    let (p1, w1) = s[idx];
    if w1 == omega {
        return Ok(p1);
    }
    let f = |p: f64| radicand(params, model, p).max(0.0).sqrt() - omega;
    let bracket = RootBracket::new(p0, p1, w0 - omega, w1 - omega)?;
    Ok(find_root_bracketed(f, bracket, INVERSION_TOL)?)
}

pub fn invert_dispersion(dispersion: &Dispersion, branch: usize, omega: f64) -> Result<f64> {
    dispersion.invert(branch, omega)
}

pub fn measure_factor_f(dispersion: &Dispersion, branch: usize, u: f64) -> Result<f64> {
    if !(u > 0.0) {
        return Err(Error::Domain { what: "measure factor needs u > 0", at: u });
    }
    dispersion.measure_factor_f(branch, u)
}

/// E_bg = −(1/4π²) ∫ k² (k²/2 + ν_k − ω_bg(k)) dk, with the bracket written as
/// ν_k²/(k²/2 + ν_k + ω_bg).
pub fn ground_state_energy_density(
    params: &GasParameters,
    model: &PotentialModel,
    quad: &QuadratureSpec,
) -> Result<Integral> {
    check_binding(params, model)?;
    if !model.is_square_integrable() {
        return Err(Error::Divergence(
            "v̂ does not decay; the integrand falls off like ν²/k² and is not integrable".into(),
        ));
    }
    let integrand = |k: f64| {
        let nr = nu_r(params, model, k);
        let a = 0.5 * k * k + nr;
        let w = radicand(params, model, k).max(0.0).sqrt();
        k * k * nr * nr / (a + w)
    };
    let sqrt_nu = params.nu().sqrt();
    let raw = match model.kind() {
        PotentialKind::Gaussian { .. } => {
            let spec = quad.clone().with_tail(TailMap::Rational { scale: sqrt_nu });
            integrate_pieces(integrand, 0.0, f64::INFINITY, &[], &spec)?
        }
        PotentialKind::FlatCutoff { lambda, .. } => {
            integrate_pieces(integrand, 0.0, 2.0 * lambda, &[*lambda], quad)?
        }
        PotentialKind::Tabulated(t) => {
            let last = *t.values().last().expect("non-empty table");
            if last.abs() > 1e-3 * model.vhat0() {
                return Err(Error::Divergence(format!(
                    "table ends at k = {} with v̂ = {last}, not decayed",
                    t.k_max()
                )));
            }
            integrate_pieces(integrand, 0.0, t.k_max(), t.grid(), quad)?
        }
    };
    Ok(raw.scale(-1.0 / (4.0 * PI * PI)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::Table;

    fn flat() -> (GasParameters, PotentialModel) {
        (GasParameters::new(1.0, 1.0, 1.0).unwrap(), PotentialModel::flat(1.0).unwrap())
    }

    fn gaussian(v: f64) -> (GasParameters, PotentialModel) {
        (GasParameters::new(1.0, 1.0, v).unwrap(), PotentialModel::gaussian(v, 1.0).unwrap())
    }

    #[test]
    fn omega_reference_values() {
        let (p, m) = flat();
        assert!((omega_bg(&p, &m, 2.0).unwrap() - 8f64.sqrt()).abs() < 1e-14);
        assert_eq!(omega_bg(&p, &m, 0.0).unwrap(), 0.0);
        let (p, g) = gaussian(0.4);
        let want = (0.25 + (-0.5f64).exp()).sqrt();
        assert!((omega_bg(&p, &g, 1.0).unwrap() - want).abs() < 1e-14);
        assert!((want - 0.925_489_5).abs() < 1e-7);
    }

    #[test]
    fn coefficients_reference_values() {
        let (p, m) = flat();
        let (s, c) = bogo_coeffs(&p, &m, 2f64.sqrt()).unwrap();
        // √((2 − √3)/(2√3))
        assert!((s - 0.278_119_16).abs() < 1e-8, "{s}");
        assert!((c - 1.037_955).abs() < 1e-6, "{c}");
        let (s, _) = bogo_coeffs(&p, &m, 100.0).unwrap();
        assert!(s <= 1e-3);
        assert!(matches!(bogo_coeffs(&p, &m, 0.0), Err(Error::Singular { .. })));
    }

    #[test]
    fn two_routes_to_s_agree() {
        let (p, g) = gaussian(0.1);
        for &k in &[1e-4, 1e-2, 0.3, 1.0, 3.0, 30.0, 100.0] {
            let (s, _) = bogo_coeffs(&p, &g, k).unwrap();
            let s2 = s_alternative(&p, &g, k).unwrap();
            assert!(s == s2 || ((s - s2) / s).abs() < 1e-10, "k={k}: {s} {s2}");
        }
    }

    #[test]
    fn occupation_values() {
        let p = GasParameters::new(1.0, 1.0, 1.0).unwrap();
        assert!((occupation_rho(&p, 2f64.ln()).unwrap() - 1.0).abs() < 1e-15);
        assert!(occupation_rho(&p, 50.0).unwrap() < 1e-21);
        assert!((occupation_rho(&p, 0.01).unwrap() - 99.500_833_3).abs() < 1e-6);
        assert!(occupation_rho(&p, 0.0).is_err());
    }

    #[test]
    fn flat_branch_and_inverse() {
        let (p, m) = flat();
        let d = Dispersion::new(&p, &m, 50.0).unwrap();
        assert_eq!(d.branches().len(), 1);
        assert!((d.invert_first(3f64.sqrt()).unwrap() - 2f64.sqrt()).abs() < 1e-14);
        // Same answer from the generic branch inversion.
        let generic = invert_on_branch(&p, &m, &d.branches()[0], 3f64.sqrt()).unwrap();
        assert!((generic - 2f64.sqrt()).abs() < 1e-13);
        assert!(matches!(d.invert_first(1e6), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn gaussian_single_branch() {
        let (p, g) = gaussian(0.4);
        let d = Dispersion::new(&p, &g, 20.0).unwrap();
        assert_eq!(d.branches().len(), 1);
        assert_eq!(d.branches()[0].direction, Direction::Increasing);
    }

    fn roton_table() -> PotentialModel {
        // v̂ = e^{−k²/2}(1 − k²) at ν = 1: maxon near 0.83, roton near 1.24.
        let mut k = Vec::new();
        let mut v = Vec::new();
        for i in 0..=800 {
            let x = i as f64 * 0.005;
            k.push(x);
            v.push((-0.5 * x * x).exp() * (1.0 - x * x));
        }
        PotentialModel::tabulated(Table::new(k, v).unwrap())
    }

    #[test]
    fn roton_table_has_three_branches() {
        let m = roton_table();
        let p = GasParameters::new(1.0, 1.0, 1.0).unwrap();
        let d = Dispersion::new(&p, &m, 4.0).unwrap();
        assert!((d.branches()[1].p_lo - 0.83).abs() < 0.01);
        assert!((d.branches()[1].p_hi - 1.24).abs() < 0.01);
        let dirs: Vec<Direction> = d.branches().iter().map(|b| b.direction).collect();
        assert_eq!(dirs, vec![Direction::Increasing, Direction::Decreasing, Direction::Increasing]);
        for (n, b) in d.branches().iter().enumerate() {
            for &(q, w) in b.samples().iter().step_by(37) {
                let back = d.invert(n, w).unwrap();
                assert!((back - q).abs() <= 1e-10 * q.max(2.0), "branch {n}: {q} -> {back}");
            }
        }
    }

    #[test]
    fn plateau_is_reported() {
        // On [1, 2] the table follows ν v̂/v̂(0) = (1/2 − k⁴/4)/k², which keeps
        // ω_bg² ≡ 1/2 there.
        let mut k = vec![];
        let mut v = vec![];
        for i in 0..=1500 {
            let x = i as f64 * 0.002;
            k.push(x);
            let val = if x < 1.0 {
                1.0 - 0.75 * x * x
            } else if x <= 2.0 {
                (0.5 - 0.25 * x.powi(4)) / (x * x)
            } else {
                (0.5 + 4.0 * (x - 2.0).powi(2) - 0.25 * x.powi(4)) / (x * x)
            };
            v.push(val);
        }
        let m = PotentialModel::tabulated(Table::new(k, v).unwrap());
        let p = GasParameters::new(1.0, 1.0, 1.0).unwrap();
        let r = Dispersion::new(&p, &m, 3.0);
        assert!(matches!(r, Err(Error::Plateau { lo, hi }) if lo >= 0.99 && hi <= 2.01), "{r:?}");
    }

    #[test]
    fn measure_factor_values() {
        let (p, m) = flat();
        let d = Dispersion::new(&p, &m, 50.0).unwrap();
        assert!((measure_factor_f(&d, 0, 1.0).unwrap() - 0.5f64.sqrt()).abs() < 1e-14);
        assert!((d.measure_factor_f(0, 1e-9).unwrap() - 1.0).abs() < 1e-12);
        // Against a centered difference of p² in u².
        let (p, g) = gaussian(0.1);
        let d = Dispersion::new(&p, &g, 20.0).unwrap();
        for &u in &[0.05, 0.3, 1.0, 4.0] {
            let h = 1e-4 * u;
            let p2 = |x: f64| d.invert_first(x).unwrap().powi(2);
            let fd = (p2(u + h) - p2(u - h)) / ((u + h).powi(2) - (u - h).powi(2));
            let f = d.measure_factor_f(0, u).unwrap();
            assert!(((fd - f) / f).abs() < 1e-6, "u={u}: {fd} {f}");
        }
    }

    #[test]
    fn ground_state_energy() {
        let (p, g) = gaussian(0.4);
        let e = ground_state_energy_density(&p, &g, &QuadratureSpec::default()).unwrap();
        assert!(e.value < 0.0 && e.converged);
        let (p, m) = flat();
        assert!(matches!(
            ground_state_energy_density(&p, &m, &QuadratureSpec::default()),
            Err(Error::Divergence(_))
        ));
    }

    #[test]
    fn binding_mismatch() {
        let p = GasParameters::new(2.0, 1.0, 0.4).unwrap();
        let g = PotentialModel::gaussian(0.4, 1.0).unwrap();
        assert!(matches!(Dispersion::new(&p, &g, 5.0), Err(Error::Mismatch(_))));
        let p = GasParameters::new(1.0, 1.0, 0.5).unwrap();
        assert!(matches!(Dispersion::new(&p, &g, 5.0), Err(Error::Mismatch(_))));
    }
}
