use super::*;
use crate::potential::PotentialModel;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn convex() -> (GasParameters, PotentialModel) {
    (GasParameters::new(1.0, 100.0, 0.1).unwrap(), PotentialModel::flat_cutoff(0.1, 10.0).unwrap())
}

fn tight() -> QuadratureSpec {
    QuadratureSpec::with_tol(1e-10, 0.0)
}

#[test]
fn energy_and_generic_paths_agree() {
    let (params, model) = convex();
    let k = 0.1;
    for process in [Process::Beliaev, Process::Landau] {
        let e = reduce_delta_energy(&params, &model, k, process, &tight()).unwrap();
        let g = reduce_delta_generic(&params, &model, k, process, &tight()).unwrap();
        assert_eq!(e.method, Method::EnergyQuadrature);
        assert_eq!(g.method, Method::GenericScan);
        assert!(e.value > 0.0);
        assert!(rel(e.value, g.value) < 1e-6, "{process}: {} vs {}", e.value, g.value);
    }
}

#[test]
fn convex_beliaev_support_is_the_full_y_range() {
    let (params, model) = convex();
    let s = detect_support(&params, &model, 0.05, Process::Beliaev).unwrap();
    assert!(s.convex_fastpath_ok);
    let (lo, hi) = s.y_range().unwrap();
    assert_eq!((lo, hi), (-s.omega_k, s.omega_k));
}

#[test]
fn concave_start_empties_beliaev_support() {
    let params = GasParameters::new(1.0, 100.0, 0.1).unwrap();
    let model = PotentialModel::gaussian(0.1, 1.0).unwrap();
    let s = detect_support(&params, &model, 0.1, Process::Beliaev).unwrap();
    assert!(s.is_empty());
    let g = reduce_delta_generic(&params, &model, 0.1, Process::Beliaev, &tight()).unwrap();
    assert_eq!((g.value, g.abs_error), (0.0, 0.0));
    // Landau needs p(u + ω) − p(u) ≤ k, which first holds where ω_bg turns
    // convex, at u of order ν: invisible at βν = 100, present at βν = 1.
    let l = detect_support(&params, &model, 0.1, Process::Landau).unwrap();
    assert!(l.is_empty());
    let warm = params.with_beta(1.0).unwrap();
    let l = detect_support(&warm, &model, 0.1, Process::Landau).unwrap();
    assert!(!l.is_empty());
    assert!(l.segments[0].lo > 0.1, "{}", l.summary());
}

#[test]
fn partner_roots_sit_on_shell_and_inside_the_triangle() {
    let (params, model) = convex();
    let k = 0.2;
    let disp = crate::bogoliubov::Dispersion::new(&params, &model, 20.0).unwrap();
    let wk = disp.omega(k);
    for &p in &[0.01, 0.05, 0.1, 0.19] {
        for q in partner_roots(&disp, Process::Beliaev, k, p).unwrap() {
            assert!(q >= (p - k).abs() && q <= p + k);
            assert!((wk - disp.omega(p) - disp.omega(q)).abs() <= 1e-9 * wk);
        }
    }
    for &p in &[0.01, 0.5, 3.0] {
        let roots = partner_roots(&disp, Process::Landau, k, p).unwrap();
        assert_eq!(roots.len(), 1);
        let q = roots[0];
        assert!(q >= (p - k).abs() && q <= p + k);
        assert!((disp.omega(q) - disp.omega(p) - wk).abs() <= 1e-9 * wk);
    }
}

#[test]
fn beliaev_vanishes_with_k() {
    let (params, model) = convex();
    let a = gamma_beliaev_quadrature(&params, &model, 0.02, &tight()).unwrap().value;
    let b = gamma_beliaev_quadrature(&params, &model, 0.01, &tight()).unwrap().value;
    assert!(b < a && b > 0.0);
    // Between k⁴ (high T) and k⁵ (low T) at β√νk = 1..2.
    let order = (a / b).log2();
    assert!(order > 3.8 && order < 5.2, "{order}");
}

#[test]
fn landau_vanishes_at_low_temperature() {
    let model = PotentialModel::flat_cutoff(0.1, 10.0).unwrap();
    let k = 0.05;
    let mut last = f64::INFINITY;
    for beta in [10.0, 100.0, 1000.0] {
        let params = GasParameters::new(1.0, beta, 0.1).unwrap();
        let v = gamma_landau_quadrature(&params, &model, k, &tight()).unwrap().value;
        assert!(v < last && v >= 0.0);
        last = v;
    }
    assert!(last < 1e-9);
}

#[test]
fn total_is_the_exact_sum() {
    let (params, model) = convex();
    let (b, l, t) = total_damping(&params, &model, 0.05, &tight()).unwrap();
    assert_eq!(t, b.value + l.value);
}

#[test]
fn mc_is_deterministic_and_matches_quadrature() {
    let params = GasParameters::new(1.0, 10.0, 0.1).unwrap();
    let model = PotentialModel::flat_cutoff(0.1, 10.0).unwrap();
    let k = 0.3;
    let eps = 1e-3 * crate::bogoliubov::omega_bg(&params, &model, k).unwrap();
    let a = mc_oracle(&params, &model, k, Process::Beliaev, eps, 200_000, 7).unwrap();
    let b = mc_oracle(&params, &model, k, Process::Beliaev, eps, 200_000, 7).unwrap();
    assert_eq!(a, b);
    let q = gamma_beliaev_quadrature(&params, &model, k, &tight()).unwrap().value;
    assert!((a.estimate - q).abs() < 4.0 * a.stderr, "{} ± {} vs {q}", a.estimate, a.stderr);
}

#[test]
fn rejects_bad_inputs() {
    let (params, model) = convex();
    assert!(gamma_beliaev_quadrature(&params, &model, 0.0, &tight()).is_err());
    assert!(mc_oracle(&params, &model, 0.1, Process::Landau, 0.0, 20_000, 1).is_err());
    assert!(mc_oracle(&params, &model, 0.1, Process::Landau, 1e-4, 100, 1).is_err());
}
