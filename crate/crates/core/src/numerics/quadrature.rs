//! Adaptive Gauss-Kronrod (7/15) quadrature with worst-panel bisection.
//!
//! Nodes are interior to every panel, so integrands with removable endpoint
//! singularities are never evaluated at the endpoints.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::NumericsError;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// How a semi-infinite range `[a, inf)` is compactified onto `s in (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailMap {
    None,
    /// `t = a + scale * s / (1 - s)`
    Rational { scale: f64 },
    /// `t = a - scale * ln(1 - s)`
    Exponential { scale: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail_map: TailMap,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-9,
            abs_tol: 0.0,
            max_subdivisions: 2000,
            tail_map: TailMap::None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tol(rel_tol: f64, abs_tol: f64) -> Self {
        QuadratureSpec {
            rel_tol,
            abs_tol,
            ..Default::default()
        }
    }

    pub fn with_tail(mut self, tail_map: TailMap) -> Self {
        self.tail_map = tail_map;
        self
    }

    pub fn validate(&self) -> Result<(), NumericsError> {
        let tol_ok = (self.rel_tol > 0.0 && self.rel_tol.is_finite())
            || (self.abs_tol > 0.0 && self.abs_tol.is_finite());
        if !tol_ok || self.rel_tol < 0.0 || self.abs_tol < 0.0 {
            return Err(NumericsError::BadSpec(
                "need rel_tol > 0 or abs_tol > 0".into(),
            ));
        }
        if self.max_subdivisions < 10 {
            return Err(NumericsError::BadSpec("max_subdivisions must be >= 10".into()));
        }
        match self.tail_map {
            TailMap::Rational { scale } | TailMap::Exponential { scale }
                if !(scale > 0.0 && scale.is_finite()) =>
            {
                Err(NumericsError::BadSpec("tail scale must be positive".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Result of an adaptive integration. `converged == false` means the budget
/// ran out; `value` is then the best available estimate, not a silent answer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub converged: bool,
    pub evaluations: usize,
    pub panels: usize,
}

impl Integral {
    pub const ZERO: Integral = Integral {
        value: 0.0,
        abs_error: 0.0,
        converged: true,
        evaluations: 0,
        panels: 0,
    };

    /// Sum of independent pieces: values and error bounds add.
    pub fn combine(self, other: Integral) -> Integral {
        Integral {
            value: self.value + other.value,
            abs_error: self.abs_error + other.abs_error,
            converged: self.converged && other.converged,
            evaluations: self.evaluations + other.evaluations,
            panels: self.panels + other.panels,
        }
    }

    pub fn scale(self, factor: f64) -> Integral {
        Integral {
            value: self.value * factor,
            abs_error: self.abs_error * factor.abs(),
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    // Max-heap on error; ties broken by position so the order is total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Result<Panel, NumericsError> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut eval = |x: f64| -> Result<f64, NumericsError> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(NumericsError::NonFinite { at: x, value: y })
        }
    };
    let fc = eval(c)?;
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = h * x;
        let f1 = eval(c - dx)?;
        let f2 = eval(c + dx)?;
        kron += wk * (f1 + f2);
        resabs += wk * (f1.abs() + f2.abs());
        if i % 2 == 1 {
            gauss += WG[i / 2] * (f1 + f2);
        }
    }
    let value = kron * h;
    // The Kronrod-Gauss difference, floored at the rounding level of the panel.
    let error = ((kron - gauss) * h)
        .abs()
        .max(50.0 * f64::EPSILON * resabs * h.abs());
    Ok(Panel { a, b, value, error })
}

/// Integrate `f` over `[a, b]`; `b` may be `+inf` when `spec.tail_map` is set.
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<Integral, NumericsError> {
    spec.validate()?;
    if a.is_nan() || b.is_nan() || a.is_infinite() {
        return Err(NumericsError::BadSpec(format!("invalid interval [{a}, {b}]")));
    }
    if b == f64::INFINITY {
        return match spec.tail_map {
            TailMap::None => Err(NumericsError::BadSpec(
                "semi-infinite range needs a tail map".into(),
            )),
            TailMap::Rational { scale } => adaptive(
                |s: f64| {
                    let om = 1.0 - s;
                    // s = 1 is the point at infinity, where an integrable f vanishes.
                    if om <= 0.0 {
                        return 0.0;
                    }
                    let y = f(a + scale * s / om);
                    if y == 0.0 { 0.0 } else { y * scale / (om * om) }
                },
                0.0,
                1.0,
                spec,
            ),
            TailMap::Exponential { scale } => adaptive(
                |s: f64| {
                    let om = 1.0 - s;
                    if om <= 0.0 {
                        return 0.0;
                    }
                    let y = f(a - scale * (-s).ln_1p());
                    if y == 0.0 { 0.0 } else { y * scale / om }
                },
                0.0,
                1.0,
                spec,
            ),
        };
    }
    if b == a {
        return Ok(Integral::ZERO);
    }
    if b < a {
        let r = adaptive(f, b, a, spec)?;
        return Ok(Integral { value: -r.value, ..r });
    }
    adaptive(f, a, b, spec)
}

fn adaptive<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<Integral, NumericsError> {
    let mut heap = BinaryHeap::new();
    let first = gk15(&mut f, a, b)?;
    let mut value = first.value;
    let mut error = first.error;
    let mut evaluations = 15;
    heap.push(first);
    let target = |v: f64| spec.abs_tol.max(spec.rel_tol * v.abs());
    while error > target(value) && heap.len() < spec.max_subdivisions {
        let worst = heap.pop().expect("heap never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Panel below floating resolution; keep it and stop refining.
            heap.push(worst);
            break;
        }
        let left = gk15(&mut f, worst.a, mid)?;
        let right = gk15(&mut f, mid, worst.b)?;
        evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum from the panels to shed accumulated update drift.
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value: f64 = panels.iter().map(|p| p.value).sum();
    let error: f64 = panels.iter().map(|p| p.error).sum();
    Ok(Integral {
        value,
        abs_error: error,
        converged: error <= target(value),
        evaluations,
        panels: panels.len(),
    })
}

/// Integrate over consecutive sub-intervals split at `breaks` (sorted, inside
/// `[a, b]`). Each piece gets the full relative tolerance.
pub fn integrate_pieces<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<Integral, NumericsError> {
    let mut edges = Vec::with_capacity(breaks.len() + 2);
    edges.push(a);
    edges.extend(breaks.iter().copied().filter(|&x| x > a && x < b));
    edges.push(b);
    let mut total = Integral::ZERO;
    for w in edges.windows(2) {
        total = total.combine(integrate(&mut f, w[0], w[1], spec)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let r = integrate(|x| x * x, 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() < 1e-12);
        assert!(r.converged);
    }

    #[test]
    fn gamma_five_through_rational_tail() {
        let spec = QuadratureSpec::default().with_tail(TailMap::Rational { scale: 4.0 });
        let r = integrate(|t: f64| (-t).exp() * t.powi(4), 0.0, f64::INFINITY, &spec).unwrap();
        assert!((r.value / 24.0 - 1.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn exponential_tail_map() {
        let spec = QuadratureSpec::default().with_tail(TailMap::Exponential { scale: 1.0 });
        let r = integrate(|t: f64| (-t).exp() * t.powi(4), 0.0, f64::INFINITY, &spec).unwrap();
        assert!((r.value / 24.0 - 1.0).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn beliaev_large_theta_kernel() {
        let r = integrate(|t: f64| (1.0 - t * t).powi(2), -1.0, 1.0, &QuadratureSpec::default())
            .unwrap();
        assert!((r.value - 16.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn endpoint_singularity_is_never_touched() {
        let r = integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-8, "{}", r.value);
    }

    #[test]
    fn nan_in_interior_is_reported() {
        let err = integrate(
            |x: f64| if x > 0.5 { f64::NAN } else { x },
            0.0,
            1.0,
            &QuadratureSpec::default(),
        )
        .unwrap_err();
        assert!(matches!(err, NumericsError::NonFinite { .. }));
    }

    #[test]
    fn exhausted_budget_is_flagged() {
        let spec = QuadratureSpec {
            rel_tol: 1e-14,
            abs_tol: 0.0,
            max_subdivisions: 10,
            tail_map: TailMap::None,
        };
        let r = integrate(|x: f64| (50.0 * x).sin().abs(), 0.0, 10.0, &spec).unwrap();
        assert!(!r.converged);
    }

    #[test]
    fn reversed_interval_flips_sign() {
        let r = integrate(|x| x, 1.0, 0.0, &QuadratureSpec::default()).unwrap();
        assert!((r.value + 0.5).abs() < 1e-14);
    }

    #[test]
    fn infinite_range_without_map_is_rejected() {
        assert!(integrate(|x| x, 0.0, f64::INFINITY, &QuadratureSpec::default()).is_err());
    }
}
