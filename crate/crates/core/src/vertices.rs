//! Three-quasiparticle vertex amplitudes j and κ, the effective potentials V
//! and U, and the regularised amplitude F(ω;u,w) with G(u,w) = F(u+w;u,w)².
//!
//! Near zero momentum s_k and c_k both diverge like ω^{−1/2} while c_k − s_k
//! vanishes, so everything here is built from the unnormalised pair
//! C(x) = √(A_x + x), S(x) = √(A_x − x), A_x = √(x² + ν_x²), via
//! σ = C + S = √(2(A_x + |ν_x|)) and δ = C − S = 2x/σ, which are smooth.

use crate::bogoliubov::{bogo_coeffs, omega_bg, Dispersion};
use crate::error::{Error, Result};
use crate::params::GasParameters;
use crate::potential::PotentialModel;

/// Below this (in units of √ν) j and κ go through the regularised form.
pub const DIRECT_VERTEX_MIN: f64 = 1e-3;

/// One quasiparticle energy x with its ν_x = ν v̂(p(x))/v̂(0) and the
/// derived smooth quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegPoint {
    pub x: f64,
    pub nu_x: f64,
    /// A_x + |ν_x|
    pub a: f64,
    pub sigma: f64,
    pub delta: f64,
}

impl RegPoint {
    pub fn new(x: f64, nu_x: f64) -> Self {
        let big_a = x.hypot(nu_x);
        let a = big_a + nu_x.abs();
        let sigma = (2.0 * a).sqrt();
        let delta = if x == 0.0 { 0.0 } else { 2.0 * x / sigma };
        RegPoint { x, nu_x, a, sigma, delta }
    }

    /// Energy x on the first branch; p is found by inversion.
    pub fn from_energy(disp: &Dispersion, x: f64) -> Result<Self> {
        if !(x >= 0.0) {
            return Err(Error::Domain { what: "negative quasiparticle energy", at: x });
        }
        let p = disp.invert_first(x)?;
        Ok(RegPoint::new(x, disp.nu_r(p)))
    }

    /// Built directly from a momentum, without inversion.
    pub fn from_momentum(disp: &Dispersion, p: f64) -> Self {
        RegPoint::new(disp.omega(p), disp.nu_r(p))
    }

    pub fn c(&self) -> f64 {
        0.5 * (self.sigma + self.delta)
    }
    pub fn s(&self) -> f64 {
        0.5 * (self.sigma - self.delta)
    }
    /// A_x = a − |ν_x|
    pub fn big_a(&self) -> f64 {
        self.a - self.nu_x.abs()
    }
}

/// ν_u a_ω − ν_ω a_u. For ν of equal sign this is ν_u A_ω − ν_ω A_u, which is
/// rewritten through (ν_u ω − ν_ω u)(ν_u ω + ν_ω u) to keep the small
/// difference exact.
fn cross(u: &RegPoint, om: &RegPoint) -> f64 {
    if u.nu_x * om.nu_x > 0.0 {
        let den = u.nu_x * om.big_a() + om.nu_x * u.big_a();
        let num = (u.nu_x * om.x - om.nu_x * u.x) * (u.nu_x * om.x + om.nu_x * u.x);
        num / den
    } else {
        u.nu_x * om.a - om.nu_x * u.a
    }
}

/// F(ω;u,w) from the three points. Exactly symmetric in u ↔ w and exactly
/// zero at (ω; ω, 0); free of the O(x) cancellations of the plain sum.
pub fn regularized_f_points(om: &RegPoint, u: &RegPoint, w: &RegPoint) -> f64 {
    let m = u.x * w.a * cross(u, om)
        + w.x * u.a * cross(w, om)
        + ((u.x + w.x) - om.x) * om.nu_x * (u.a * w.a);
    let m = if u.x + w.x == om.x && (u.x == 0.0 || w.x == 0.0) {
        // (ω; ω, 0): M vanishes identically; avoid a rounding residue.
        0.0
    } else {
        m
    };
    4.0 * m / (om.sigma * (u.sigma * w.sigma))
        + 0.5 * om.delta * (u.delta * w.delta) * (om.nu_x + (u.nu_x + w.nu_x))
}

/// The same F as the plain vertex sum, without any rearrangement.
pub fn regularized_f_plain(om: &RegPoint, u: &RegPoint, w: &RegPoint) -> f64 {
    let (co, so) = (om.c(), om.s());
    let (cu, su) = (u.c(), u.s());
    let (cw, sw) = (w.c(), w.s());
    om.nu_x * (so - co) * (cu * sw + cw * su)
        + u.nu_x * (cu - su) * (co * cw + so * sw)
        + w.nu_x * (cw - sw) * (co * cu + so * su)
}

/// The κ counterpart: √(8 x y z) √(ν/v̂(0)) κ.
fn regularized_kappa_points(a: &RegPoint, b: &RegPoint, c: &RegPoint) -> f64 {
    let term = |x: &RegPoint, y: &RegPoint, z: &RegPoint| {
        -x.nu_x * x.delta * (y.c() * z.s() + z.c() * y.s())
    };
    term(a, b, c) + term(b, a, c) + term(c, a, b)
}

fn check_energy(disp: &Dispersion, x: f64) -> Result<()> {
    let top = disp.branches()[0].omega_max();
    if !(x >= 0.0 && x <= top * (1.0 + 1e-13)) {
        return Err(Error::OutOfRange { value: x, lo: 0.0, hi: top });
    }
    Ok(())
}

/// F(ω;u,w) = √(8ωuw) √(ν/v̂(0)) j(p(ω); p(u), p(w)), energies on the first branch.
pub fn regularized_f(disp: &Dispersion, omega: f64, u: f64, w: f64) -> Result<f64> {
    for x in [omega, u, w] {
        check_energy(disp, x)?;
    }
    let om = RegPoint::from_energy(disp, omega)?;
    let pu = RegPoint::from_energy(disp, u)?;
    let pw = RegPoint::from_energy(disp, w)?;
    Ok(regularized_f_points(&om, &pu, &pw))
}

/// G(u,w) = F(u+w; u, w)²
#[allow(non_snake_case)]
pub fn G_of(disp: &Dispersion, u: f64, w: f64) -> Result<f64> {
    Ok(regularized_f(disp, u + w, u, w)?.powi(2))
}

/// G − 9u²w²(u+w)²/ν, the part beyond the leading cubic law.
pub fn g_remainder(disp: &Dispersion, u: f64, w: f64) -> Result<f64> {
    let lead = 9.0 * (u * w * (u + w)).powi(2) / disp.params().nu();
    Ok(G_of(disp, u, w)? - lead)
}

fn check_positive_momenta(ks: &[f64]) -> Result<()> {
    if ks.iter().any(|&k| !(k.abs() > 0.0)) {
        return Err(Error::Singular { what: "vertex at zero momentum (use regularized_f)" });
    }
    Ok(())
}

fn use_direct(params: &GasParameters, ks: &[f64]) -> bool {
    let floor = DIRECT_VERTEX_MIN * params.nu().sqrt();
    ks.iter().all(|&k| k.abs() > floor)
}

fn reg_from_momentum(params: &GasParameters, model: &PotentialModel, k: f64) -> Result<RegPoint> {
    let x = omega_bg(params, model, k)?;
    Ok(RegPoint::new(x, params.nu() * model.vhat(k) / model.vhat0()))
}

fn unnormalise(params: &GasParameters, model: &PotentialModel, ks: [f64; 3]) -> Result<(f64, [RegPoint; 3])> {
    let pts = [
        reg_from_momentum(params, model, ks[0])?,
        reg_from_momentum(params, model, ks[1])?,
        reg_from_momentum(params, model, ks[2])?,
    ];
    let scale = (8.0 * pts[0].x * pts[1].x * pts[2].x).sqrt() * (params.nu() / params.vhat0()).sqrt();
    Ok((scale, pts))
}

/// j(k;p,q) on momentum magnitudes.
pub fn vertex_j(params: &GasParameters, model: &PotentialModel, k: f64, p: f64, q: f64) -> Result<f64> {
    check_positive_momenta(&[k, p, q])?;
    if !use_direct(params, &[k, p, q]) {
        let (scale, [a, b, c]) = unnormalise(params, model, [k, p, q])?;
        return Ok(regularized_f_plain(&a, &b, &c) / scale);
    }
    let (sk, ck) = bogo_coeffs(params, model, k)?;
    let (sp, cp) = bogo_coeffs(params, model, p)?;
    let (sq, cq) = bogo_coeffs(params, model, q)?;
    let pref = (params.nu() / params.vhat0()).sqrt();
    Ok(pref
        * (model.vhat(k) * (sk - ck) * (cp * sq + cq * sp)
            + model.vhat(p) * (cp - sp) * (ck * cq + sk * sq)
            + model.vhat(q) * (cq - sq) * (cp * ck + sp * sk)))
}

/// κ(k,p,q) on momentum magnitudes; symmetric under all permutations.
pub fn vertex_kappa(params: &GasParameters, model: &PotentialModel, k: f64, p: f64, q: f64) -> Result<f64> {
    check_positive_momenta(&[k, p, q])?;
    if !use_direct(params, &[k, p, q]) {
        let (scale, [a, b, c]) = unnormalise(params, model, [k, p, q])?;
        return Ok(regularized_kappa_points(&a, &b, &c) / scale);
    }
    let (sk, ck) = bogo_coeffs(params, model, k)?;
    let (sp, cp) = bogo_coeffs(params, model, p)?;
    let (sq, cq) = bogo_coeffs(params, model, q)?;
    let pref = (params.nu() / params.vhat0()).sqrt();
    Ok(pref
        * (model.vhat(k) * (sk - ck) * (cp * sq + cq * sp)
            + model.vhat(p) * (sp - cp) * (ck * sq + sk * cq)
            + model.vhat(q) * (sq - cq) * (cp * sk + sp * ck)))
}

pub type Vec3 = [f64; 3];

pub fn norm(v: Vec3) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// V_{p,q} in continuum normalisation.
#[allow(non_snake_case)]
pub fn eff_V(params: &GasParameters, model: &PotentialModel, p: Vec3, q: Vec3) -> Result<f64> {
    let (np, nq, ns) = (norm(p), norm(q), norm(add(p, q)));
    check_positive_momenta(&[np, nq, ns])?;
    let (sp, cp) = bogo_coeffs(params, model, np)?;
    let (sq, cq) = bogo_coeffs(params, model, nq)?;
    let (ss, cs) = bogo_coeffs(params, model, ns)?;
    let pref = (params.nu() / params.vhat0()).sqrt();
    Ok(pref
        * (model.vhat(np) * (cp - sp) * (cq * cs + sq * ss)
            + model.vhat(ns) * (ss - cs) * sp * cq))
}

/// U_{p,q} in continuum normalisation.
#[allow(non_snake_case)]
pub fn eff_U(params: &GasParameters, model: &PotentialModel, p: Vec3, q: Vec3) -> Result<f64> {
    let (np, nq, ns) = (norm(p), norm(q), norm(add(p, q)));
    check_positive_momenta(&[np, nq, ns])?;
    let (sp, cp) = bogo_coeffs(params, model, np)?;
    let (sq, cq) = bogo_coeffs(params, model, nq)?;
    let (ss, cs) = bogo_coeffs(params, model, ns)?;
    let pref = (params.nu() / params.vhat0()).sqrt();
    Ok(pref * model.vhat(np) * (cs * sp * sq - ss * cp * cq))
}
