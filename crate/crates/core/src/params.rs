//! Physical parameters and dimensionless regime groups.
//!
//! Units: ħ = m = k_B = 1, kinetic energy k²/2, spatial dimension 3. The
//! coupling constant in front of the cubic/quartic terms is fixed to 1, so
//! the interaction strength enters only through v̂.

use crate::error::ParamError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasParameters {
    nu: f64,
    beta: f64,
    vhat0: f64,
}

fn positive(field: &'static str, value: f64) -> Result<f64, ParamError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(ParamError::NotPositive { field, value })
    }
}

impl GasParameters {
    /// `nu`: effective chemical potential, `beta`: inverse temperature,
    /// `vhat0`: v̂(0). All must be finite and strictly positive.
    pub fn new(nu: f64, beta: f64, vhat0: f64) -> Result<Self, ParamError> {
        Ok(GasParameters {
            nu: positive("nu", nu)?,
            beta: positive("beta", beta)?,
            vhat0: positive("vhat0", vhat0)?,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn vhat0(&self) -> f64 {
        self.vhat0
    }
    pub fn beta_nu(&self) -> f64 {
        self.beta * self.nu
    }

    pub fn with_beta(&self, beta: f64) -> Result<Self, ParamError> {
        GasParameters::new(self.nu, beta, self.vhat0)
    }
}

pub fn make_params(nu: f64, beta: f64, vhat0: f64) -> Result<GasParameters, ParamError> {
    GasParameters::new(nu, beta, vhat0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeDiagnostics {
    pub k_over_sqrt_nu: f64,
    pub inv_beta_nu: f64,
    pub beta_sqrtnu_k: f64,
    /// β ω_bg(k)
    pub theta: f64,
    /// ω_bg(k) / ν
    pub delta: f64,
}

pub fn diagnostics(params: &GasParameters, k: f64, omega_k: f64) -> RegimeDiagnostics {
    let sqrt_nu = params.nu.sqrt();
    RegimeDiagnostics {
        k_over_sqrt_nu: k / sqrt_nu,
        inv_beta_nu: 1.0 / params.beta_nu(),
        beta_sqrtnu_k: params.beta * sqrt_nu * k,
        theta: params.beta * omega_k,
        delta: omega_k / params.nu,
    }
}
