//! Thermal weights of the two processes, written in forms that neither
//! overflow at large βω nor lose digits at small βω.
//!
//! Beliaev: ω_k → ω_p + ω_q. Landau: ω_k + ω_p → ω_q. Arguments are
//! (β, ω_k, ω_p, ω_q).

/// 1 − e^{−x}
fn one_minus_exp(x: f64) -> f64 {
    -(-x).exp_m1()
}

fn rho(beta: f64, x: f64) -> f64 {
    1.0 / (beta * x).exp_m1()
}

/// (1 − e^{−a})² / Π_x (1 − e^{−βx}), a = β(ω_k + u + w)/2. Equal to
/// ρ_k ρ_u ρ_w (1 − e^{β(ω_k+u+w)/2})² for any three energies.
pub fn beliaev_weight(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    let a = 0.5 * beta * (wk + u + w);
    one_minus_exp(a).powi(2)
        / (one_minus_exp(beta * wk) * one_minus_exp(beta * u) * one_minus_exp(beta * w))
}

/// (√((1+ρ_k)(1+ρ_u)(1+ρ_w)) − √(ρ_k ρ_u ρ_w))², straight from occupations.
pub fn beliaev_weight_rho(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    let (rk, ru, rw) = (rho(beta, wk), rho(beta, u), rho(beta, w));
    let d = ((1.0 + rk) * (1.0 + ru) * (1.0 + rw)).sqrt() - (rk * ru * rw).sqrt();
    d * d
}

/// ρ_k ρ_u ρ_w (1 − e^{β(ω_k+u+w)/2})², the factored form.
pub fn beliaev_weight_factored(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    let e = (0.5 * beta * (wk + u + w)).exp();
    rho(beta, wk) * rho(beta, u) * rho(beta, w) * (1.0 - e).powi(2)
}

/// On shell (u + w = ω_k): (1 − e^{−βω_k}) / ((1 − e^{−βu})(1 − e^{−βw})).
pub fn beliaev_weight_on_shell(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    one_minus_exp(beta * wk) / (one_minus_exp(beta * u) * one_minus_exp(beta * w))
}

/// e^{−βu} (1 − e^{β(u − ω_k − w)/2})² / Π_x (1 − e^{−βx}). Equal to
/// ρ_k ρ_u ρ_w (e^{β(ω_k+w)/2} − e^{βu/2})² for any three energies.
pub fn landau_weight(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    let half_gap = 0.5 * beta * (u - wk - w);
    let bracket = if half_gap <= 0.0 { one_minus_exp(-half_gap) } else { half_gap.exp_m1() };
    (-beta * u).exp() * bracket * bracket
        / (one_minus_exp(beta * wk) * one_minus_exp(beta * u) * one_minus_exp(beta * w))
}

/// (√((1+ρ_w)(1+ρ_k)ρ_u) − √((1+ρ_u)ρ_w ρ_k))², straight from occupations.
pub fn landau_weight_rho(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    let (rk, ru, rw) = (rho(beta, wk), rho(beta, u), rho(beta, w));
    let d = ((1.0 + rw) * (1.0 + rk) * ru).sqrt() - ((1.0 + ru) * rw * rk).sqrt();
    d * d
}

/// ρ_k ρ_u ρ_w (e^{β(ω_k+w)/2} − e^{βu/2})², the factored form.
pub fn landau_weight_factored(beta: f64, wk: f64, u: f64, w: f64) -> f64 {
    let d = (0.5 * beta * (wk + w)).exp() - (0.5 * beta * u).exp();
    rho(beta, wk) * rho(beta, u) * rho(beta, w) * d * d
}

/// On shell (w = u + ω_k): e^{−βu}(1 − e^{−βω_k}) / ((1 − e^{−βu})(1 − e^{−β(u+ω_k)})).
pub fn landau_weight_on_shell(beta: f64, wk: f64, u: f64) -> f64 {
    landau_t_weight(beta * wk, beta * u)
}

/// The on-shell Landau weight in t = βu, θ = βω_k.
pub fn landau_t_weight(theta: f64, t: f64) -> f64 {
    one_minus_exp(theta) * (-t).exp() / (one_minus_exp(t) * one_minus_exp(t + theta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn on_shell_forms() {
        let (beta, wk) = (1.3, 0.8);
        for &u in &[0.01, 0.2, 0.5, 0.79] {
            let w = wk - u;
            let r = rel(beliaev_weight_on_shell(beta, wk, u, w), beliaev_weight(beta, wk, u, w));
            assert!(r < 1e-13, "{r}");
            let spec = (beta * wk).exp_m1() / ((beta * u).exp_m1() * (beta * w).exp_m1());
            assert!(rel(beliaev_weight_on_shell(beta, wk, u, w), spec) < 1e-13);
        }
        for &u in &[0.01, 0.2, 3.0] {
            let w = u + wk;
            assert!(rel(landau_weight_on_shell(beta, wk, u), landau_weight(beta, wk, u, w)) < 1e-13);
            let spec = (beta * wk).exp_m1() * (beta * u).exp()
                / ((beta * u).exp_m1() * (beta * w).exp_m1());
            assert!(rel(landau_weight_on_shell(beta, wk, u), spec) < 1e-13);
        }
    }

    #[test]
    fn no_overflow_deep_in_the_tail() {
        let v = beliaev_weight(1.0, 800.0, 400.0, 400.0);
        assert!((v - 1.0).abs() < 1e-15);
        let v = landau_weight(1.0, 1.0, 900.0, 901.0);
        assert!(v.is_finite() && v >= 0.0);
    }
}
