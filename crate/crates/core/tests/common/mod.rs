//! Test-only oracle: fixed-order composite Gauss–Legendre, sharing no code
//! with the library's adaptive integrator.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Nodes and weights of the n-point rule on [−1, 1], by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let j = j as f64;
                let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// ∫_a^b f over `panels` equal panels with a 32-point rule on each.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let rule = gauss_legendre(32);
    let h = (b - a) / panels as f64;
    let mut sum = 0.0;
    for i in 0..panels {
        let (lo, hi) = (a + i as f64 * h, a + (i + 1) as f64 * h);
        let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        sum += half * rule.iter().map(|&(x, w)| w * f(mid + half * x)).sum::<f64>();
    }
    sum
}

/// Same rule over consecutive intervals between the given break points.
pub fn integrate_breaks<F: Fn(f64) -> f64>(f: F, breaks: &[f64], panels: usize) -> f64 {
    breaks.windows(2).map(|w| integrate(&f, w[0], w[1], panels)).sum()
}

/// Geometric break points a = x_0 < … < x_n = b, a > 0.
pub fn geometric(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..=n).map(|i| a * (b / a).powf(i as f64 / n as f64)).collect()
}

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

#[test]
fn rule_integrates_polynomials_and_exponentials() {
    assert!((integrate(|x| x.powi(7), 0.0, 2.0, 1) - 32.0).abs() < 1e-12);
    assert!(rel(integrate(|x| (-x).exp(), 0.0, 40.0, 20), 1.0 - (-40.0f64).exp()) < 1e-14);
}
