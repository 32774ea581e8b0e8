//! Polylogarithms and zeta values at integer order, and the regime functions
//! I(θ) (Beliaev) and G_k(θ) (Landau).

use crate::error::{Error, Result};
use crate::numerics::{integrate, QuadratureSpec, TailMap};

/// Polylog arguments above this use the expansion in θ = −ln z.
const EXPANSION_ZMIN: f64 = 0.25;
/// Below this θ, I(θ) is integrated directly instead of using the closed form.
pub const BELIAEV_I_SWITCH: f64 = 0.3;

fn check_order(n: u32, max: u32) -> Result<()> {
    if n < 2 || n > max {
        Err(Error::Domain { what: "polylog/zeta order outside supported range", at: n as f64 })
    } else {
        Ok(())
    }
}

/// ζ(s) for integer s ≥ 2: direct sum to N−1 plus the Euler-Maclaurin tail.
fn zeta_int(s: u32) -> f64 {
    const N: u32 = 20;
    // B_2j / (2j)!
    const B_OVER_FACT: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30_240.0,
        -1.0 / 1_209_600.0,
        1.0 / 47_900_160.0,
        -691.0 / 1_307_674_368_000.0,
        1.0 / 74_724_249_600.0,
    ];
    let sf = s as f64;
    let n = N as f64;
    let mut sum = 0.0;
    for k in (1..N).rev() {
        sum += (k as f64).powf(-sf);
    }
    let mut tail = n.powf(1.0 - sf) / (sf - 1.0) + 0.5 * n.powf(-sf);
    // rising = s (s+1) ... (s+2j-2), power = N^{-s-2j+1}
    let mut rising = sf;
    let mut power = n.powf(-sf - 1.0);
    for (j, c) in B_OVER_FACT.iter().enumerate() {
        if j > 0 {
            let m = sf + 2.0 * j as f64;
            rising *= (m - 1.0) * m;
            power /= n * n;
        }
        tail += c * rising * power;
    }
    sum + tail
}

/// ζ(m) for any integer m other than 1 (non-positive orders via Bernoulli numbers).
fn zeta_signed(m: i64) -> f64 {
    if m >= 2 {
        return zeta_int(m as u32);
    }
    if m == 0 {
        return -0.5;
    }
    if m % 2 == 0 {
        return 0.0;
    }
    // ζ(1−2j) = (−1)^j · 2 (2j−1)! ζ(2j) / (2π)^{2j}
    let j = (1 - m) / 2;
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut mag = 2.0 * zeta_int(2 * j as u32);
    for i in 1..=(2 * j) {
        // (2j−1)! / (2π)^{2j}, interleaved to stay in range
        mag /= two_pi;
        if i < 2 * j {
            mag *= i as f64;
        }
    }
    if j % 2 == 0 {
        mag
    } else {
        -mag
    }
}

/// Riemann zeta at integer order 2..=8.
pub fn zeta(n: u32) -> Result<f64> {
    check_order(n, 8)?;
    Ok(zeta_int(n))
}

fn polylog_series(n: u32, z: f64) -> f64 {
    if z == 0.0 {
        return 0.0;
    }
    // Integral-test tail bound z^{N+1} / ((1 − z) (N+1)^n) below 1e-17 · z.
    let nf = n as f64;
    let mut terms = 1usize;
    loop {
        let m = terms as f64 + 1.0;
        let bound = z.powf(m - 1.0) / ((1.0 - z) * m.powf(nf));
        if bound <= 1e-17 || terms > 10_000_000 {
            break;
        }
        terms += 1;
    }
    let mut sum = 0.0;
    for k in (1..=terms).rev() {
        let kf = k as f64;
        sum += (kf * z.ln()).exp() / kf.powf(nf);
    }
    sum
}

/// ζ(n) − Li_n(e^{−θ}) by the expansion in θ, valid for 0 < θ < 2π.
fn gap_expansion(n: u32, theta: f64) -> f64 {
    let n_i = n as i64;
    let mut sum = 0.0;
    // term_m = (−θ)^m / m!
    let mut pow = 1.0;
    let mut harmonic = 0.0;
    for m in 1..200i64 {
        pow *= -theta / m as f64;
        if m < n_i {
            harmonic += 1.0 / m as f64;
        }
        if m == n_i - 1 {
            sum -= pow * (harmonic - theta.ln());
            continue;
        }
        let zm = zeta_signed(n_i - m);
        if zm == 0.0 {
            continue;
        }
        let t = zm * pow;
        sum -= t;
        if m > n_i + 2 && t.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

/// ζ(n) − Li_n(e^{−θ}) for θ ≥ 0, without the cancellation of the naive
/// difference at small θ. Infinite θ gives ζ(n).
pub fn zeta_minus_polylog_exp(n: u32, theta: f64) -> Result<f64> {
    check_order(n, 8)?;
    if theta.is_nan() || theta < 0.0 {
        return Err(Error::Domain { what: "negative theta", at: theta });
    }
    if theta == 0.0 {
        return Ok(0.0);
    }
    let z = (-theta).exp();
    if z > EXPANSION_ZMIN {
        Ok(gap_expansion(n, theta))
    } else {
        Ok(zeta_int(n) - polylog_series(n, z))
    }
}

/// Li_n(z) for integer 2 ≤ n ≤ 8 and real z in [0, 1].
pub fn polylog(n: u32, z: f64) -> Result<f64> {
    check_order(n, 8)?;
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::Domain { what: "polylog argument outside [0, 1]", at: z });
    }
    if z == 1.0 {
        return Ok(zeta_int(n));
    }
    if z <= EXPANSION_ZMIN {
        return Ok(polylog_series(n, z));
    }
    Ok(zeta_int(n) - gap_expansion(n, -z.ln()))
}

fn x_over_one_minus_exp(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x / -(-x).exp_m1()
    }
}

/// The defining integral of I(θ) by adaptive quadrature, written in a form
/// that stays well conditioned as θ → 0.
pub fn beliaev_i_integral(theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    if theta.is_nan() || theta < 0.0 {
        return Err(Error::Domain { what: "negative theta", at: theta });
    }
    if theta == 0.0 {
        return Ok(16.0 / 3.0);
    }
    let pref = 4.0 * -(-theta).exp_m1() / theta;
    let r = integrate(
        |t: f64| {
            let a = 0.5 * theta * (1.0 + t);
            let b = 0.5 * theta * (1.0 - t);
            pref * (1.0 - t * t) * x_over_one_minus_exp(a) * x_over_one_minus_exp(b)
        },
        -1.0,
        1.0,
        spec,
    )?;
    Ok(r.value)
}

/// I(θ) of the full Beliaev law. Closed form in polylogarithms above
/// [`BELIAEV_I_SWITCH`], direct quadrature below it.
pub fn beliaev_i(theta: f64) -> Result<f64> {
    if theta.is_nan() || theta < 0.0 {
        return Err(Error::Domain { what: "negative theta", at: theta });
    }
    if theta <= BELIAEV_I_SWITCH {
        return beliaev_i_integral(theta, &QuadratureSpec::with_tol(1e-14, 0.0));
    }
    if theta.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let g3 = zeta_minus_polylog_exp(3, theta)?;
    let g4 = zeta_minus_polylog_exp(4, theta)?;
    let g5 = zeta_minus_polylog_exp(5, theta)?;
    // ζ(4) + Li_4(e^{−θ}) = 2ζ(4) − gap
    let s4 = 2.0 * zeta_int(4) - g4;
    let t2 = theta * theta;
    let bracket = 1.0 / 30.0 + 4.0 * g3 / (t2 * theta) - 24.0 * s4 / (t2 * t2)
        + 48.0 * g5 / (t2 * t2 * theta);
    Ok(32.0 * theta * bracket)
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// G_k(θ) = 2 k! (ζ(k+1) − Li_{k+1}(e^{−θ})) for k in {2, 3, 4}.
pub fn landau_gk(k: u32, theta: f64) -> Result<f64> {
    if !(2..=4).contains(&k) {
        return Err(Error::Domain { what: "G_k defined here for k in {2, 3, 4}", at: k as f64 });
    }
    Ok(2.0 * factorial(k) * zeta_minus_polylog_exp(k + 1, theta)?)
}

/// G_k(θ) = ∫_0^∞ dt t^k sinh(θ/2) / (sinh(t/2) sinh((t+θ)/2)) by adaptive
/// quadrature, the kernel rewritten in decaying exponentials.
pub fn landau_gk_integral(k: u32, theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    if theta.is_nan() || theta < 0.0 {
        return Err(Error::Domain { what: "negative theta", at: theta });
    }
    if theta == 0.0 {
        return Ok(0.0);
    }
    let a = -(-theta).exp_m1();
    let spec = spec.with_tail(TailMap::Exponential { scale: 1.0 });
    let kernel = |t: f64| {
        if t == 0.0 || t.is_infinite() {
            return 0.0;
        }
        // t^k / (1 − e^{−t}) = t^{k−1} · t/(1 − e^{−t})
        2.0 * a * t.powi(k as i32 - 1) * x_over_one_minus_exp(t) * (-t).exp() / -(-(t + theta)).exp_m1()
    };
    let split = theta.clamp(1.0, 40.0);
    let head = integrate(kernel, 0.0, split, &spec)?;
    let tail = integrate(kernel, split, f64::INFINITY, &spec)?;
    Ok(head.value + tail.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zeta_known_values() {
        assert!(rel(zeta(2).unwrap(), PI * PI / 6.0) < 1e-15);
        assert!(rel(zeta(4).unwrap(), PI.powi(4) / 90.0) < 1e-15);
        assert!(rel(zeta(6).unwrap(), PI.powi(6) / 945.0) < 1e-15);
        assert!(rel(zeta(3).unwrap(), 1.202_056_903_159_594_3) < 1e-15);
        assert!(rel(zeta(5).unwrap(), 1.036_927_755_143_37) < 1e-14);
    }

    #[test]
    fn negative_orders_match_bernoulli() {
        assert!(rel(zeta_signed(-1), -1.0 / 12.0) < 1e-15);
        assert!(rel(zeta_signed(-3), 1.0 / 120.0) < 1e-14);
        assert!(rel(zeta_signed(-5), -1.0 / 252.0) < 1e-14);
        assert!(rel(zeta_signed(-11), 691.0 / 32_760.0) < 1e-13);
        assert_eq!(zeta_signed(-4), 0.0);
    }

    #[test]
    fn polylog_domain() {
        assert_eq!(polylog(3, 0.0).unwrap(), 0.0);
        assert!(polylog(1, 0.5).is_err());
        assert!(polylog(9, 0.5).is_err());
        assert!(polylog(2, 1.5).is_err());
        assert!(polylog(2, -0.1).is_err());
    }

    #[test]
    fn polylog_known_values() {
        // Li_2(1/2) = π²/12 − ln²2/2
        let l2 = PI * PI / 12.0 - 0.5 * 2f64.ln().powi(2);
        assert!(rel(polylog(2, 0.5).unwrap(), l2) < 1e-14);
        // Li_3(1/2) = 7ζ(3)/8 − π² ln2/12 + ln³2/6
        let ln2 = 2f64.ln();
        let l3 = 7.0 / 8.0 * 1.202_056_903_159_594_3 - PI * PI * ln2 / 12.0 + ln2.powi(3) / 6.0;
        assert!(rel(polylog(3, 0.5).unwrap(), l3) < 1e-14);
        assert!(rel(polylog(2, 1.0).unwrap(), PI * PI / 6.0) < 1e-15);
    }

    #[test]
    fn expansion_and_series_agree_at_the_seam() {
        for n in 2..=8 {
            for &z in &[0.2, 0.25, 0.3, 0.5] {
                let a = polylog_series(n, z);
                let b = zeta_int(n) - gap_expansion(n, -f64::ln(z));
                assert!(rel(a, b) < 1e-14, "n={n} z={z} {a} {b}");
            }
        }
    }

    #[test]
    fn i_limits() {
        assert!((beliaev_i(1e-3).unwrap() - 16.0 / 3.0).abs() < 0.02);
        assert!((beliaev_i(100.0).unwrap() * 15.0 / 1600.0 - 1.0).abs() < 1e-3);
        assert_eq!(beliaev_i(0.0).unwrap(), 16.0 / 3.0);
        assert!(beliaev_i(-1.0).is_err());
    }

    #[test]
    fn i_is_continuous_across_switch() {
        let below = beliaev_i_integral(BELIAEV_I_SWITCH, &QuadratureSpec::with_tol(1e-14, 0.0)).unwrap();
        let above = beliaev_i(BELIAEV_I_SWITCH * (1.0 + 1e-15)).unwrap();
        assert!(rel(above, below) < 1e-9, "{above} {below}");
    }

    #[test]
    fn gk_closed_form_matches_quadrature() {
        let spec = QuadratureSpec::with_tol(1e-13, 0.0);
        for k in 2..=4 {
            for &theta in &[0.01, 0.1, 1.0, 10.0, 50.0] {
                let q = landau_gk_integral(k, theta, &spec).unwrap();
                let c = landau_gk(k, theta).unwrap();
                assert!(rel(c, q) < 1e-8, "k={k} θ={theta}: {c} vs {q}");
            }
        }
    }

    #[test]
    fn gk_limits() {
        for k in 2..=4 {
            assert_eq!(landau_gk(k, 0.0).unwrap(), 0.0);
        }
        assert!(rel(landau_gk(2, 200.0).unwrap(), 4.0 * zeta_int(3)) < 1e-15);
        let slope = landau_gk(4, 1e-6).unwrap() / 1e-6;
        assert!(rel(slope, 48.0 * zeta_int(4)) < 1e-5);
        assert!(landau_gk(5, 1.0).is_err());
    }
}
