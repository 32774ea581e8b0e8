//! Closed-form small-momentum laws for γ_B and γ_L, written in the scaled
//! variables k/√ν, βν and the ratio β√ν k.

use std::f64::consts::PI;

use crate::bogoliubov::omega_bg;
use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureSpec, TailMap};
use crate::params::GasParameters;
use crate::potential::PotentialModel;
use crate::specfun::{beliaev_i, landau_gk, zeta};

use super::Process;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BeliaevRegime {
    /// Uniform in β√νk, through I(θ).
    Full,
    /// β√νk ≫ 1: ∝ k⁵, temperature independent.
    LowT,
    /// β√νk ≪ 1: ∝ k⁴ T.
    HighT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LandauRegime {
    /// Uniform in β√νk, through G₂, G₃, G₄; needs βν ≫ 1.
    Full,
    /// β√νk ≪ 1: ∝ k T⁴.
    HighTRatio,
    /// β√νk ≫ 1: ∝ k² T³.
    LowTRatio,
}

impl BeliaevRegime {
    pub fn name(self) -> &'static str {
        match self {
            BeliaevRegime::Full => "full",
            BeliaevRegime::LowT => "low_T",
            BeliaevRegime::HighT => "high_T",
        }
    }
}

impl LandauRegime {
    pub fn name(self) -> &'static str {
        match self {
            LandauRegime::Full => "full",
            LandauRegime::HighTRatio => "high_T_ratio",
            LandauRegime::LowTRatio => "low_T_ratio",
        }
    }
}

fn check_k(k: f64) -> Result<()> {
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::Domain { what: "asymptotic laws need k ≥ 0", at: k });
    }
    Ok(())
}

/// v̂(0) ν^{3/2}, the common scale of every law.
fn scale(params: &GasParameters) -> f64 {
    params.vhat0() * params.nu().powf(1.5)
}

pub fn gamma_beliaev_asymptotic(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    regime: BeliaevRegime,
) -> Result<f64> {
    check_k(k)?;
    if k == 0.0 {
        return Ok(0.0);
    }
    let nu = params.nu();
    let kn = k / nu.sqrt();
    let inv_bnu = 1.0 / params.beta_nu();
    Ok(match regime {
        BeliaevRegime::Full => {
            let theta = params.beta() * omega_bg(params, model, k)?;
            9.0 * scale(params) / (2048.0 * PI) * kn.powi(4) * inv_bnu * beliaev_i(theta)?
        }
        BeliaevRegime::LowT => 3.0 * scale(params) / (640.0 * PI) * kn.powi(5),
        BeliaevRegime::HighT => 3.0 * scale(params) / (128.0 * PI) * kn.powi(4) * inv_bnu,
    })
}

pub fn gamma_landau_asymptotic(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    regime: LandauRegime,
) -> Result<f64> {
    check_k(k)?;
    if k == 0.0 {
        return Ok(0.0);
    }
    let nu = params.nu();
    let kn = k / nu.sqrt();
    let bnu = params.beta_nu();
    let x = params.beta() * nu.sqrt() * k;
    Ok(match regime {
        LandauRegime::Full => {
            let theta = params.beta() * omega_bg(params, model, k)?;
            let bracket = landau_gk(4, theta)? + 2.0 * x * landau_gk(3, theta)? + x * x * landau_gk(2, theta)?;
            9.0 * scale(params) / (64.0 * PI) * bnu.powi(-5) * bracket
        }
        LandauRegime::HighTRatio => 3.0 * PI.powi(3) * scale(params) / 40.0 * kn * bnu.powi(-4),
        LandauRegime::LowTRatio => 9.0 * zeta(3)? * scale(params) / (16.0 * PI) * bnu.powi(-3) * kn * kn,
    })
}

/// β√νk above this selects the low-temperature reduced law, below its
/// inverse the high-temperature one; in between the full law is used.
pub const REGIME_RATIO_SWITCH: f64 = 10.0;

/// The law suited to the point's β√νk, with the name of the regime used.
pub fn closed_form_regime(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
) -> Result<(f64, &'static str)> {
    let x = params.beta() * params.nu().sqrt() * k;
    match process {
        Process::Beliaev => {
            let r = if x >= REGIME_RATIO_SWITCH {
                BeliaevRegime::LowT
            } else if x <= 1.0 / REGIME_RATIO_SWITCH {
                BeliaevRegime::HighT
            } else {
                BeliaevRegime::Full
            };
            Ok((gamma_beliaev_asymptotic(params, model, k, r)?, r.name()))
        }
        Process::Landau => {
            let r = if x >= REGIME_RATIO_SWITCH {
                LandauRegime::LowTRatio
            } else if x <= 1.0 / REGIME_RATIO_SWITCH {
                LandauRegime::HighTRatio
            } else {
                LandauRegime::Full
            };
            Ok((gamma_landau_asymptotic(params, model, k, r)?, r.name()))
        }
    }
}

/// γ_L for a flat v̂ in the joint limit βν → 0, k/√ν → 0.
pub fn gamma_landau_flat_high_t(params: &GasParameters, k: f64) -> Result<f64> {
    check_k(k)?;
    let nu = params.nu();
    Ok(3.0 * scale(params) / 32.0 / params.beta_nu() * (k / nu.sqrt()))
}

/// The z-kernel whose integral over (0, ∞) fixes the flat high-T constant.
pub fn flat_high_t_kernel(z: f64) -> f64 {
    // The bracket is O(z⁴); below this its rounding error dominates.
    if z < 1e-3 {
        return 0.0;
    }
    let e = 1.0 + z * z;
    let r = e.sqrt();
    let a = 1.5 - 1.0 / r - 1.0 / e + 0.5 / (e * e);
    let b = z * z * (0.5 / e - 1.0 / (e * r) + 1.5 / (e * e) - 1.5 / (e * e * e));
    let c = -1.5 * z.powi(4) / (e * e * e);
    (a + b + c) / (z * z)
}

/// ∫_0^∞ of [`flat_high_t_kernel`]; equals 3π/8.
pub fn flat_high_t_kernel_integral(spec: &QuadratureSpec) -> Result<f64> {
    let spec = spec.with_tail(TailMap::Rational { scale: 1.0 });
    Ok(integrate(flat_high_t_kernel, 0.0, f64::INFINITY, &spec)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::PotentialModel;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn reduced_law_reference_value() {
        let params = GasParameters::new(1.0, 10.0, 1.0).unwrap();
        let model = PotentialModel::flat(1.0).unwrap();
        let v = gamma_beliaev_asymptotic(&params, &model, 0.1, BeliaevRegime::LowT).unwrap();
        assert!(rel(v, 3e-5 / (640.0 * PI)) < 1e-14);
        assert!(rel(v, 1.4921e-8) < 1e-4);
    }

    #[test]
    fn flat_high_t_reference_value() {
        let params = GasParameters::new(1.0, 0.1, 1.0).unwrap();
        let v = gamma_landau_flat_high_t(&params, 0.01).unwrap();
        assert!(rel(v, 9.375e-3) < 1e-14);
    }

    #[test]
    fn kernel_integral_is_three_pi_over_eight() {
        let v = flat_high_t_kernel_integral(&QuadratureSpec::with_tol(1e-12, 0.0)).unwrap();
        assert!((v - 3.0 * PI / 8.0).abs() < 1e-6, "{v}");
    }

    #[test]
    fn zero_momentum_gives_zero() {
        let params = GasParameters::new(1.0, 10.0, 1.0).unwrap();
        let model = PotentialModel::flat(1.0).unwrap();
        for r in [BeliaevRegime::Full, BeliaevRegime::LowT, BeliaevRegime::HighT] {
            assert_eq!(gamma_beliaev_asymptotic(&params, &model, 0.0, r).unwrap(), 0.0);
        }
        for r in [LandauRegime::Full, LandauRegime::HighTRatio, LandauRegime::LowTRatio] {
            assert_eq!(gamma_landau_asymptotic(&params, &model, 0.0, r).unwrap(), 0.0);
        }
    }

    #[test]
    fn full_laws_reduce_to_the_limits() {
        let model = PotentialModel::flat(1.0).unwrap();
        // Deep low-T ratio: β√νk = 400 at k = 0.02.
        let params = GasParameters::new(1.0, 2e4, 1.0).unwrap();
        let k = 0.02;
        let full = gamma_beliaev_asymptotic(&params, &model, k, BeliaevRegime::Full).unwrap();
        let low = gamma_beliaev_asymptotic(&params, &model, k, BeliaevRegime::LowT).unwrap();
        assert!(rel(full, low) < 0.02, "{full} {low}");
        let full = gamma_landau_asymptotic(&params, &model, k, LandauRegime::Full).unwrap();
        let low = gamma_landau_asymptotic(&params, &model, k, LandauRegime::LowTRatio).unwrap();
        assert!(rel(full, low) < 0.02, "{full} {low}");
        // High-T ratio: β√νk = 1e-3.
        let params = GasParameters::new(1.0, 100.0, 1.0).unwrap();
        let k = 1e-5;
        let full = gamma_beliaev_asymptotic(&params, &model, k, BeliaevRegime::Full).unwrap();
        let high = gamma_beliaev_asymptotic(&params, &model, k, BeliaevRegime::HighT).unwrap();
        assert!(rel(full, high) < 1e-2, "{full} {high}");
        let full = gamma_landau_asymptotic(&params, &model, k, LandauRegime::Full).unwrap();
        let high = gamma_landau_asymptotic(&params, &model, k, LandauRegime::HighTRatio).unwrap();
        assert!(rel(full, high) < 1e-2, "{full} {high}");
    }
}
