mod common;

use common::{integrate, integrate_breaks, rel};
use phonon_damping::specfun::{beliaev_i, landau_gk, polylog, zeta, zeta_minus_polylog_exp};

/// θ(1 − e^{−θ}) ∫_{−1}^{1} dt (1 − t²)² / ((1 − e^{−θ(1+t)/2})(1 − e^{−θ(1−t)/2}))
fn i_definition(theta: f64) -> f64 {
    let g = |t: f64| {
        let a = -(-0.5 * theta * (1.0 + t)).exp_m1();
        let b = -(-0.5 * theta * (1.0 - t)).exp_m1();
        (1.0 - t * t).powi(2) / (a * b)
    };
    theta * -(-theta).exp_m1() * integrate(g, -1.0, 1.0, 16)
}

/// ∫_0^∞ dt t^k sinh(θ/2) / (sinh((t+θ)/2) sinh(t/2)), cut where the tail
/// is below 1e-40.
fn g_definition(k: i32, theta: f64) -> f64 {
    let g = |t: f64| t.powi(k) * (0.5 * theta).sinh() / ((0.5 * (t + theta)).sinh() * (0.5 * t).sinh());
    let top = 160.0;
    let mut breaks = vec![0.0, 0.5, 2.0, 8.0, 20.0, 40.0, 80.0, top];
    if theta > 0.5 && theta < top {
        breaks.push(theta);
        breaks.sort_by(f64::total_cmp);
    }
    integrate_breaks(g, &breaks, 8)
}

#[test]
fn i_closed_form_matches_its_definition() {
    for theta in [0.01, 0.1, 0.3, 0.31, 0.5, 1.0, 2.0, 10.0, 50.0] {
        let (c, d) = (beliaev_i(theta).unwrap(), i_definition(theta));
        assert!(rel(c, d) < 1e-10, "θ = {theta}: {c} vs {d}");
    }
}

#[test]
fn gk_closed_form_matches_its_definition() {
    for k in 2..=4 {
        for theta in [0.01, 0.1, 1.0, 10.0, 50.0] {
            let (c, d) = (landau_gk(k, theta).unwrap(), g_definition(k as i32, theta));
            assert!(rel(c, d) < 1e-10, "k = {k}, θ = {theta}: {c} vs {d}");
        }
    }
}

#[test]
fn polylog_matches_its_series() {
    for n in 2..=6 {
        for z in [0.0f64, 0.1, 0.5, 0.9] {
            let series: f64 = (1..4000).map(|j| z.powi(j) / (j as f64).powi(n as i32)).sum();
            assert!(rel(polylog(n, z).unwrap(), series) < 1e-13, "Li_{n}({z})");
        }
        assert!(rel(polylog(n, 1.0).unwrap(), zeta(n).unwrap()) < 1e-14);
    }
}

#[test]
fn gap_is_accurate_where_the_difference_is_small() {
    // ζ(n) − Li_n(e^{−θ}) for tiny θ: the leading term is ζ(n−1)θ.
    for n in 3..=5 {
        let theta = 1e-9;
        let g = zeta_minus_polylog_exp(n, theta).unwrap();
        assert!(rel(g, zeta(n - 1).unwrap() * theta) < 1e-6, "n = {n}: {g}");
    }
    // Large θ: Li_n(e^{−θ}) ≈ e^{−θ}, so the gap is ζ(n) to all digits.
    assert!(rel(zeta_minus_polylog_exp(3, 60.0).unwrap(), zeta(3).unwrap()) < 1e-15);
}

#[test]
fn limiting_values() {
    assert!((beliaev_i(1e-3).unwrap() - 16.0 / 3.0).abs() <= 0.02);
    assert!((beliaev_i(100.0).unwrap() * 15.0 / 1600.0 - 1.0).abs() <= 1e-3);
    for k in 2..=4u32 {
        let fact: f64 = (1..=k).map(f64::from).product();
        let inf = 2.0 * fact * zeta(k + 1).unwrap();
        assert!(rel(landau_gk(k, 60.0).unwrap(), inf) < 1e-15);
        let slope = 2.0 * fact * zeta(k).unwrap();
        assert!(rel(landau_gk(k, 1e-6).unwrap() / 1e-6, slope) < 1e-4);
    }
}
