//! Acceptance criteria for the damping library. Each criterion returns a
//! verdict with detail lines; [`run_all`] evaluates them in order and
//! [`report`] renders one PASS/FAIL line per criterion.
//!
//! The reference model is the Gaussian v̂(k) = v e^{−k²/(2ν)} with ν = 1 and
//! v = v̂(0) = 0.1 (2v/ν = 0.2). Its dispersion is concave at small momenta, so
//! several laws that presuppose convexity are additionally evaluated on the
//! convex cut-off model v̂ = 0.1 for |k| ≤ 10√ν; those lines are marked
//! "convex" and do not decide the verdict of a criterion that names the
//! Gaussian.

mod gauss;

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use phonon_damping::bogoliubov::{bogo_coeffs, omega_bg, Dispersion};
use phonon_damping::damping::thermal::{
    beliaev_weight, beliaev_weight_factored, beliaev_weight_rho, landau_weight, landau_weight_factored,
    landau_weight_rho,
};
use phonon_damping::damping::{
    flat_high_t_kernel_integral, gamma_beliaev_asymptotic, gamma_beliaev_quadrature, gamma_landau_asymptotic,
    gamma_landau_quadrature, mc_oracle, reduce_delta_energy, reduce_delta_generic, BeliaevRegime, LandauRegime,
    Process,
};
use phonon_damping::numerics::QuadratureSpec;
use phonon_damping::specfun::{beliaev_i, beliaev_i_integral, landau_gk, landau_gk_integral};
use phonon_damping::vertices::{eff_U, eff_V, regularized_f, vertex_j, vertex_kappa, Vec3, G_of};
use phonon_damping::{GasParameters, PotentialModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MC_SEED: u64 = 20_240_917;

pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    /// Criterion met within its runtime budget.
    pub pass: bool,
    pub budget: Duration,
    pub elapsed: Duration,
    pub lines: Vec<String>,
}

fn gaussian() -> PotentialModel {
    PotentialModel::gaussian(0.1, 1.0).unwrap()
}

fn convex() -> PotentialModel {
    PotentialModel::flat_cutoff(0.1, 10.0).unwrap()
}

fn params(beta_nu: f64) -> GasParameters {
    GasParameters::new(1.0, beta_nu, 0.1).unwrap()
}

fn quad() -> QuadratureSpec {
    QuadratureSpec::with_tol(1e-10, 0.0)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// (quadrature − law)/law.
fn deviation(q: f64, law: f64) -> f64 {
    (q - law) / law
}

/// Is `ratio` within ±30% of `expected`?
fn order_ok(ratio: f64, expected: f64) -> bool {
    ratio.is_finite() && (ratio / expected - 1.0).abs() <= 0.3
}

fn beliaev(m: &PotentialModel, beta_nu: f64, k: f64) -> f64 {
    gamma_beliaev_quadrature(&params(beta_nu), m, k, &quad()).unwrap().value
}

fn landau(m: &PotentialModel, beta_nu: f64, k: f64) -> f64 {
    gamma_landau_quadrature(&params(beta_nu), m, k, &quad()).unwrap().value
}

fn c1() -> (bool, Vec<String>) {
    let mut lines = Vec::new();
    let mut ok = true;
    let spec = QuadratureSpec::with_tol(1e-13, 0.0);
    let mut worst = 0.0f64;
    for theta in [0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 50.0] {
        let closed = beliaev_i(theta).unwrap();
        let adaptive = beliaev_i_integral(theta, &spec).unwrap();
        // Fixed-order rule on the untransformed integrand.
        let gl = theta
            * -(-theta).exp_m1()
            * gauss::integrate(
                |t| {
                    let a = -(-0.5 * theta * (1.0 + t)).exp_m1();
                    let b = -(-0.5 * theta * (1.0 - t)).exp_m1();
                    (1.0 - t * t).powi(2) / (a * b)
                },
                -1.0,
                1.0,
                16,
            );
        let d = rel(closed, adaptive).max(rel(closed, gl));
        worst = worst.max(d);
        ok &= d <= 1e-8;
    }
    lines.push(format!("max relative difference to quadrature {worst:.2e} (limit 1e-8)"));
    let small = (beliaev_i(1e-3).unwrap() - 16.0 / 3.0).abs();
    let large = (beliaev_i(100.0).unwrap() * 15.0 / 1600.0 - 1.0).abs();
    ok &= small <= 0.02 && large <= 1e-3;
    lines.push(format!("|I(1e-3) − 16/3| = {small:.3e} (≤ 0.02), |15 I(100)/1600 − 1| = {large:.3e} (≤ 1e-3)"));
    (ok, lines)
}

fn c2() -> (bool, Vec<String>) {
    let spec = QuadratureSpec::with_tol(1e-13, 0.0);
    let mut worst = 0.0f64;
    for k in 2..=4 {
        for theta in [0.01, 0.1, 1.0, 10.0, 50.0] {
            let d = rel(landau_gk(k, theta).unwrap(), landau_gk_integral(k, theta, &spec).unwrap());
            worst = worst.max(d);
        }
    }
    (worst <= 1e-8, vec![format!("max relative difference over k ∈ 2..4, 5 θ values: {worst:.2e} (limit 1e-8)")])
}

/// Deviation of a quadrature rate from a law at a list of momenta.
fn deviations(
    m: &PotentialModel,
    beta_nu: f64,
    ks: &[f64],
    rate: fn(&PotentialModel, f64, f64) -> f64,
    law: impl Fn(&GasParameters, f64) -> f64,
) -> Vec<(f64, f64, f64)> {
    ks.iter()
        .map(|&k| {
            let q = rate(m, beta_nu, k);
            let l = law(&params(beta_nu), k);
            (q, l, deviation(q, l))
        })
        .collect()
}

fn fmt_devs(d: &[(f64, f64, f64)]) -> String {
    d.iter().map(|x| format!("{:+.3e}", x.2)).collect::<Vec<_>>().join(", ")
}

fn c3() -> (bool, Vec<String>) {
    let law = |p: &GasParameters, k: f64| gamma_beliaev_asymptotic(p, &gaussian(), k, BeliaevRegime::LowT).unwrap();
    let ks = [0.05, 0.025, 0.0125];
    let mut lines = Vec::new();
    let g = deviations(&gaussian(), 2000.0, &ks, beliaev, law);
    let g_ok = g[0].2.abs() <= 0.02 && order_ok(g[0].2 / g[1].2, 4.0);
    lines.push(format!(
        "gaussian: quadrature {:.4e} vs law {:.4e} at k = 0.05 (empty decay support: the dispersion is concave at small k)",
        g[0].0, g[0].1
    ));
    let c = deviations(&convex(), 2000.0, &ks, beliaev, law);
    let within = c[0].2.abs() <= 0.02;
    let (r1, r2) = (c[0].2 / c[1].2, c[1].2 / c[2].2);
    lines.push(format!(
        "convex: deviations at k = 0.05, 0.025, 0.0125: {}; within 2% {}; halving ratios {r1:.3}, {r2:.3} (want 4 ± 30%) {}",
        fmt_devs(&c),
        verdict(within),
        verdict(order_ok(r1, 4.0))
    ));
    (g_ok, lines)
}

fn c4() -> (bool, Vec<String>) {
    let law = |p: &GasParameters, k: f64| gamma_beliaev_asymptotic(p, &gaussian(), k, BeliaevRegime::HighT).unwrap();
    // β√νk = 0.1, 0.05, 0.025 at βν = 100
    let ks = [1e-3, 5e-4, 2.5e-4];
    let mut lines = Vec::new();
    let g = deviations(&gaussian(), 100.0, &ks, beliaev, law);
    let g_ok = order_ok(g[0].2 / g[1].2, 2.0);
    lines.push(format!("gaussian: quadrature {:.4e} vs law {:.4e} at β√νk = 0.1", g[0].0, g[0].1));
    let c = deviations(&convex(), 100.0, &ks, beliaev, law);
    let (r1, r2) = (c[0].2 / c[1].2, c[1].2 / c[2].2);
    lines.push(format!(
        "convex: deviations at β√νk = 0.1, 0.05, 0.025: {}; halving ratios {r1:.3}, {r2:.3} (want 2 ± 30%) {}",
        fmt_devs(&c),
        verdict(order_ok(r1, 2.0))
    ));
    (g_ok, lines)
}

fn c5() -> (bool, Vec<String>) {
    let k = 1e-3;
    let run = |m: &PotentialModel| -> Vec<(f64, f64, f64)> {
        [50.0, 100.0, 200.0]
            .iter()
            .map(|&b| {
                let q = landau(m, b, k);
                let l = gamma_landau_asymptotic(&params(b), m, k, LandauRegime::Full).unwrap();
                (q, l, deviation(q, l))
            })
            .collect()
    };
    let mut lines = Vec::new();
    let g = run(&gaussian());
    let g_ok = g[0].2.abs() <= 0.01 && order_ok(g[0].2 / g[1].2, 4.0);
    lines.push(format!(
        "gaussian: quadrature {:.4e} vs law {:.4e} at βν = 50 (support starts near βu ≈ βν, beyond the thermal window)",
        g[0].0, g[0].1
    ));
    let c = run(&convex());
    let (r1, r2) = (c[0].2 / c[1].2, c[1].2 / c[2].2);
    lines.push(format!(
        "convex: deviations at βν = 50, 100, 200: {}; within 1% {}; doubling ratios {r1:.3}, {r2:.3} (want 4 ± 30%) {}",
        fmt_devs(&c),
        verdict(c[0].2.abs() <= 0.01),
        verdict(order_ok(r1, 4.0))
    ));
    (g_ok, lines)
}

fn c6() -> (bool, Vec<String>) {
    let mut lines = Vec::new();
    // (a) β√νk = 0.05, 0.025, 0.0125 at βν = 50
    let law_a = |p: &GasParameters, k: f64| gamma_landau_asymptotic(p, &gaussian(), k, LandauRegime::HighTRatio).unwrap();
    let ka = [1e-3, 5e-4, 2.5e-4];
    // (b) β√νk = 20, 40, 80 at βν = 400
    let law_b = |p: &GasParameters, k: f64| gamma_landau_asymptotic(p, &gaussian(), k, LandauRegime::LowTRatio).unwrap();
    let kb = [0.05, 0.1, 0.2];

    let ga = deviations(&gaussian(), 50.0, &ka, landau, law_a);
    let gb = deviations(&gaussian(), 400.0, &kb, landau, law_b);
    let g_ok = order_ok(ga[0].2 / ga[1].2, 2.0) && order_ok(gb[0].2 / gb[1].2, 2.0);
    lines.push(format!(
        "gaussian: (a) quadrature {:.4e} vs law {:.4e}; (b) quadrature {:.4e} vs law {:.4e}",
        ga[0].0, ga[0].1, gb[0].0, gb[0].1
    ));
    let ca = deviations(&convex(), 50.0, &ka, landau, law_a);
    let ra = ca[0].2 / ca[1].2;
    lines.push(format!(
        "convex (a): deviations at β√νk = 0.05, 0.025, 0.0125: {}; halving ratio {ra:.3} (want 2 ± 30%) {}",
        fmt_devs(&ca),
        verdict(order_ok(ra, 2.0))
    ));
    let cb = deviations(&convex(), 400.0, &kb, landau, law_b);
    let (rb1, rb2) = (cb[0].2 / cb[1].2, cb[1].2 / cb[2].2);
    lines.push(format!(
        "convex (b): deviations at β√νk = 20, 40, 80: {}; doubling ratios {rb1:.3}, {rb2:.3} (want 2 ± 30%) {}",
        fmt_devs(&cb),
        verdict(order_ok(rb1, 2.0))
    ));
    (g_ok, lines)
}

fn c7() -> (bool, Vec<String>) {
    let v = flat_high_t_kernel_integral(&QuadratureSpec::with_tol(1e-12, 0.0)).unwrap();
    let d = (v - 3.0 * PI / 8.0).abs();
    (d <= 1e-6, vec![format!("kernel integral {v:.10} vs 3π/8 = {:.10}, |difference| {d:.2e} (limit 1e-6)", 3.0 * PI / 8.0)])
}

/// (pass, z, stderr fraction) of one process at the oracle point.
fn oracle_line(m: &PotentialModel, name: &str, process: Process, lines: &mut Vec<String>) -> bool {
    let p = params(10.0);
    let k = 0.3;
    let eps = 1e-3 * omega_bg(&p, m, k).unwrap();
    let q = match process {
        Process::Beliaev => gamma_beliaev_quadrature(&p, m, k, &quad()),
        Process::Landau => gamma_landau_quadrature(&p, m, k, &quad()),
    }
    .unwrap()
    .value;
    let mc = mc_oracle(&p, m, k, process, eps, 10_000_000, MC_SEED).unwrap();
    let z = (mc.estimate - q) / mc.stderr;
    let frac = mc.stderr / mc.estimate;
    let ok = z.abs() <= 3.0 && frac <= 0.02;
    lines.push(format!(
        "{name} {process}: quadrature {q:.5e}, MC {:.5e} ± {:.2e} ({:.2}%), z = {z:+.2} {}",
        mc.estimate,
        mc.stderr,
        100.0 * frac,
        verdict(ok)
    ));
    ok
}

fn c8() -> (bool, Vec<String>) {
    let mut lines = Vec::new();
    let mut g_ok = oracle_line(&gaussian(), "gaussian", Process::Beliaev, &mut lines);
    g_ok &= oracle_line(&gaussian(), "gaussian", Process::Landau, &mut lines);
    oracle_line(&convex(), "convex", Process::Beliaev, &mut lines);
    oracle_line(&convex(), "convex", Process::Landau, &mut lines);
    (g_ok, lines)
}

fn random_vector(rng: &mut ChaCha8Rng) -> Vec3 {
    let r: f64 = rng.gen_range(0.01..3.0);
    let c: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - c * c).sqrt();
    [r * s * phi.cos(), r * s * phi.sin(), r * c]
}

fn c9() -> (bool, Vec<String>) {
    const N: usize = 200;
    let tol = 1e-12;
    let close = |a: f64, b: f64, scale: f64| (a - b).abs() <= tol * scale.max(a.abs()).max(b.abs());
    let add = |a: Vec3, b: Vec3| [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
    let neg = |a: Vec3| [-a[0], -a[1], -a[2]];
    let norm = |a: Vec3| (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt();
    let models = [("gaussian", gaussian()), ("convex", convex()), ("flat", PotentialModel::flat(0.1).unwrap())];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lines = Vec::new();
    let mut ok = true;
    for (name, m) in &models {
        let p = params(10.0);
        let disp = Dispersion::covering_energy(&p, m, 2.5).unwrap();
        let mut fails = [0usize; 7];
        for _ in 0..N {
            let (k, a, b): (f64, f64, f64) = (rng.gen_range(0.01..3.0), rng.gen_range(0.01..3.0), rng.gen_range(0.01..3.0));
            let (s, c) = bogo_coeffs(&p, m, k).unwrap();
            fails[0] += !close(c * c - s * s, 1.0, 1.0) as usize;
            fails[1] += !close(vertex_j(&p, m, k, a, b).unwrap(), vertex_j(&p, m, k, b, a).unwrap(), 0.0) as usize;
            let kap = vertex_kappa(&p, m, k, a, b).unwrap();
            fails[2] += [(k, b, a), (a, k, b), (a, b, k), (b, k, a), (b, a, k)]
                .iter()
                .any(|&(x, y, z)| !close(vertex_kappa(&p, m, x, y, z).unwrap(), kap, 0.0)) as usize;

            let (pv, qv) = (random_vector(&mut rng), random_vector(&mut rng));
            let (v1, v2) = (eff_V(&p, m, pv, qv).unwrap(), eff_V(&p, m, qv, pv).unwrap());
            let j = vertex_j(&p, m, norm(add(pv, qv)), norm(pv), norm(qv)).unwrap();
            fails[3] += !close(v1 + v2, j, v1.abs() + v2.abs()) as usize;

            let (kv, qv) = (pv, qv);
            let kmp = add(kv, neg(qv));
            let terms = [
                eff_U(&p, m, kv, neg(qv)).unwrap(),
                eff_U(&p, m, neg(qv), kv).unwrap(),
                eff_U(&p, m, qv, kmp).unwrap(),
                eff_U(&p, m, neg(kmp), kv).unwrap(),
                eff_U(&p, m, kv, neg(kmp)).unwrap(),
                eff_U(&p, m, kmp, qv).unwrap(),
            ];
            let kappa = vertex_kappa(&p, m, norm(kv), norm(qv), norm(kmp)).unwrap();
            let scale: f64 = terms.iter().map(|t| t.abs()).sum();
            fails[4] += !close(terms.iter().sum(), kappa, scale) as usize;

            let (bk, bu, bw): (f64, f64, f64) = (rng.gen_range(0.05..30.0), rng.gen_range(0.05..30.0), rng.gen_range(0.05..30.0));
            let bw0 = beliaev_weight(1.0, bk, bu, bw);
            let lw0 = landau_weight(1.0, bk, bu, bw);
            fails[5] += !(close(bw0, beliaev_weight_rho(1.0, bk, bu, bw), 0.0)
                && close(bw0, beliaev_weight_factored(1.0, bk, bu, bw), 0.0)
                && close(lw0, landau_weight_rho(1.0, bk, bu, bw), 0.0)
                && close(lw0, landau_weight_factored(1.0, bk, bu, bw), 0.0)) as usize;

            let om: f64 = rng.gen_range(1e-4..2.0);
            let split: f64 = rng.gen_range(0.0..1.0);
            let (u, w) = (split * om, (1.0 - split) * om);
            let typical = regularized_f(&disp, om, 0.5 * om, 0.5 * om).unwrap().abs();
            let f_ok = close(regularized_f(&disp, om, u, w).unwrap(), regularized_f(&disp, om, w, u).unwrap(), 0.0)
                && regularized_f(&disp, om, om, 0.0).unwrap().abs() <= tol * typical
                && regularized_f(&disp, om, 0.0, om).unwrap().abs() <= tol * typical;
            fails[6] += !f_ok as usize;
        }
        let total: usize = fails.iter().sum();
        ok &= total == 0;
        lines.push(format!(
            "{name}: {N} configurations; failures c²−s² {}, j symmetry {}, κ symmetry {}, V+V=j {}, ΣU=κ {}, thermal forms {}, F zero lines/symmetry {}",
            fails[0], fails[1], fails[2], fails[3], fails[4], fails[5], fails[6]
        ));
    }
    (ok, lines)
}

fn c10() -> (bool, Vec<String>) {
    let m = convex();
    let points = [
        (0.02, 10.0),
        (0.1, 10.0),
        (0.3, 10.0),
        (0.6, 10.0),
        (0.02, 100.0),
        (0.05, 100.0),
        (0.2, 100.0),
        (0.5, 1.0),
        (1.0, 1.0),
        (0.05, 1000.0),
    ];
    let mut worst = 0.0f64;
    for (k, b) in points {
        for process in [Process::Beliaev, Process::Landau] {
            let e = reduce_delta_energy(&params(b), &m, k, process, &quad()).unwrap().value;
            let g = reduce_delta_generic(&params(b), &m, k, process, &quad()).unwrap().value;
            worst = worst.max(rel(g, e));
        }
    }
    (worst <= 1e-6, vec![format!("convex: 10 (k, βν) points, both rates, max relative difference {worst:.2e} (limit 1e-6)")])
}

fn c11() -> (bool, Vec<String>) {
    let mut lines = Vec::new();
    let mut primary = true;
    for (name, m) in [("gaussian", gaussian()), ("convex", convex())] {
        let p = params(10.0);
        let disp = Dispersion::covering_energy(&p, &m, 1.0).unwrap();
        let mut ratios = Vec::new();
        for (u, w) in [(1.0, 1.0), (1.0, 2.0), (3.0, 1.0)] {
            let devs: Vec<f64> = [1.0, 0.5, 0.25]
                .iter()
                .map(|l| {
                    let (a, b) = (l * u * 1e-2, l * w * 1e-2);
                    p.nu() * G_of(&disp, a, b).unwrap() / (9.0 * (a * b * (a + b)).powi(2)) - 1.0
                })
                .collect();
            ratios.push(devs[0] / devs[1]);
            ratios.push(devs[1] / devs[2]);
        }
        let ok = ratios.iter().all(|&r| order_ok(r, 4.0));
        if name == "gaussian" {
            primary = ok;
        }
        let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
        lines.push(format!("{name}: halving ratios {} (want 4 ± 30%) {}", shown.join(", "), verdict(ok)));
    }
    (primary, lines)
}

fn c12() -> (bool, Vec<String>) {
    let beta_nu = 2000.0;
    let xs = [4.0f64, 8.0, 16.0];
    let mut lines = Vec::new();
    let slope = |m: &PotentialModel| -> (f64, Vec<f64>) {
        let pts: Vec<(f64, f64)> = xs
            .iter()
            .map(|&x| {
                let k = x / beta_nu;
                (x.ln(), (landau(m, beta_nu, k) / beliaev(m, beta_nu, k)).ln())
            })
            .collect();
        let n = pts.len() as f64;
        let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        (sxy / sxx, pts.iter().map(|p| p.1.exp()).collect())
    };
    let (s, r) = slope(&convex());
    let ok = (s + 3.0).abs() <= 0.3;
    lines.push(format!(
        "convex: γ_L/γ_B at β√νk = 4, 8, 16: {:.4e}, {:.4e}, {:.4e}; log-log slope {s:.3} (want −3 ± 0.3)",
        r[0], r[1], r[2]
    ));
    let k = xs[0] / beta_nu;
    lines.push(format!(
        "gaussian: γ_B = {:.1e} at β√νk = 4 (empty decay support), so the ratio is undefined",
        beliaev(&gaussian(), beta_nu, k)
    ));
    (ok, lines)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "[ok]"
    } else {
        "[not met]"
    }
}

fn run(id: u32, title: &'static str, budget_s: u64, f: fn() -> (bool, Vec<String>)) -> Outcome {
    let start = Instant::now();
    let (pass, lines) = f();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_s);
    Outcome { id, title, pass: pass && elapsed <= budget, budget, elapsed, lines }
}

pub fn run_all() -> Vec<Outcome> {
    vec![
        run(1, "I(θ) closed form vs quadrature and limits", 1, c1),
        run(2, "G_k(θ) closed form vs quadrature", 1, c2),
        run(3, "Beliaev low-temperature law (gaussian)", 10, c3),
        run(4, "Beliaev high-temperature-ratio law (gaussian)", 10, c4),
        run(5, "Landau full law (gaussian)", 10, c5),
        run(6, "Landau regime laws with order (gaussian)", 30, c6),
        run(7, "flat high-temperature kernel integral = 3π/8", 1, c7),
        run(8, "Monte-Carlo oracle equivalence (gaussian)", 300, c8),
        run(9, "algebraic identity suite", 5, c9),
        run(10, "energy vs generic reduction", 60, c10),
        run(11, "G expansion order", 1, c11),
        run(12, "γ_L/γ_B scaling with β√νk", 60, c12),
    ]
}

/// One line per criterion with indented details, then a summary line.
pub fn report(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&format!(
            "criterion {:>2}: {} {} ({:.2} s of {} s)\n",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.title,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs()
        ));
        for l in &o.lines {
            out.push_str(&format!("    {l}\n"));
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    out.push_str(&format!("acceptance: {passed} of {} criteria pass\n", outcomes.len()));
    out
}
