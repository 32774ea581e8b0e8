//! Interaction potentials given by their radial Fourier transform v̂(k), and
//! a validator for the structural assumptions the damping theory needs.

use std::fmt;
use std::path::Path;

use crate::error::PotentialError;
use crate::params::GasParameters;

/// Monotone (Fritsch-Butland) cubic Hermite interpolant of a radial table.
/// The slope at k = 0 is pinned to zero, matching the even extension.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    k: Vec<f64>,
    v: Vec<f64>,
    d: Vec<f64>,
}

impl Table {
    pub fn new(k: Vec<f64>, v: Vec<f64>) -> Result<Self, PotentialError> {
        if k.len() != v.len() {
            return Err(PotentialError::BadTable("grid and value lengths differ".into()));
        }
        if k.len() < 3 {
            return Err(PotentialError::BadTable("need at least 3 rows".into()));
        }
        if k[0] != 0.0 {
            return Err(PotentialError::BadTable("first row must be k = 0".into()));
        }
        if k.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(PotentialError::BadTable("k must be strictly increasing".into()));
        }
        if k.iter().chain(v.iter()).any(|x| !x.is_finite()) {
            return Err(PotentialError::BadTable("non-finite entry".into()));
        }
        let n = k.len();
        let h: Vec<f64> = k.windows(2).map(|w| w[1] - w[0]).collect();
        let delta: Vec<f64> = (0..n - 1).map(|i| (v[i + 1] - v[i]) / h[i]).collect();
        let mut d = vec![0.0; n];
        for i in 1..n - 1 {
            if delta[i - 1] * delta[i] > 0.0 {
                let w1 = 2.0 * h[i] + h[i - 1];
                let w2 = h[i] + 2.0 * h[i - 1];
                d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        // Shape-preserving three-point end slope at the last node.
        let (h0, h1) = (h[n - 2], h[n - 3]);
        let (d0, d1) = (delta[n - 2], delta[n - 3]);
        let mut end = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if end * d0 <= 0.0 {
            end = 0.0;
        } else if d0 * d1 <= 0.0 && end.abs() > 3.0 * d0.abs() {
            end = 3.0 * d0;
        }
        d[n - 1] = end;
        Ok(Table { k, v, d })
    }

    /// Two whitespace-separated columns `k vhat`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, PotentialError> {
        let mut k = Vec::new();
        let mut v = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() != 2 {
                return Err(PotentialError::BadTable(format!(
                    "line {}: expected 2 columns, found {}",
                    lineno + 1,
                    cols.len()
                )));
            }
            let parse = |s: &str| {
                s.parse::<f64>().map_err(|e| {
                    PotentialError::BadTable(format!("line {}: {e}: {s:?}", lineno + 1))
                })
            };
            k.push(parse(cols[0])?);
            v.push(parse(cols[1])?);
        }
        Table::new(k, v)
    }

    pub fn read(path: &Path) -> Result<Self, PotentialError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PotentialError::BadTable(format!("{}: {e}", path.display())))?;
        Table::parse(&text)
    }

    pub fn grid(&self) -> &[f64] {
        &self.k
    }
    pub fn values(&self) -> &[f64] {
        &self.v
    }
    pub fn k_max(&self) -> f64 {
        *self.k.last().expect("table is non-empty")
    }

    fn interval(&self, x: f64) -> usize {
        let i = self.k.partition_point(|&g| g <= x);
        i.saturating_sub(1).min(self.k.len() - 2)
    }

    /// NaN outside the grid.
    pub fn eval(&self, x: f64) -> f64 {
        if !(x >= 0.0 && x <= self.k_max()) {
            return f64::NAN;
        }
        let i = self.interval(x);
        let h = self.k[i + 1] - self.k[i];
        let t = (x - self.k[i]) / h;
        let t2 = t * t;
        let s = 1.0 - t;
        let h00 = (1.0 + 2.0 * t) * s * s;
        let h10 = t * s * s;
        let h01 = t2 * (3.0 - 2.0 * t);
        let h11 = t2 * (t - 1.0);
        h00 * self.v[i] + h10 * h * self.d[i] + h01 * self.v[i + 1] + h11 * h * self.d[i + 1]
    }

    /// Second derivative of the first Hermite piece at k = 0.
    fn curvature_at_zero(&self) -> f64 {
        let h = self.k[1];
        (6.0 * (self.v[1] - self.v[0]) - 4.0 * h * self.d[0] - 2.0 * h * self.d[1]) / (h * h)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialKind {
    /// v̂(k) = v exp(−k²/(2 nu))
    Gaussian { v: f64, nu: f64 },
    /// v0 below `lambda`, half-cosine ramp to 0 on [lambda, 2 lambda].
    /// An infinite `lambda` is the unbounded flat potential.
    FlatCutoff { v0: f64, lambda: f64 },
    Tabulated(Table),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialModel {
    kind: PotentialKind,
}

impl fmt::Display for PotentialModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PotentialKind::Gaussian { v, nu } => write!(f, "gaussian(v={v}, nu={nu})"),
            PotentialKind::FlatCutoff { v0, lambda } if lambda.is_infinite() => {
                write!(f, "flat(v0={v0})")
            }
            PotentialKind::FlatCutoff { v0, lambda } => {
                write!(f, "flat-cutoff(v0={v0}, lambda={lambda})")
            }
            PotentialKind::Tabulated(t) => write!(
                f,
                "table({} rows, k in [0, {}])",
                t.grid().len(),
                t.k_max()
            ),
        }
    }
}

fn positive(name: &str, x: f64) -> Result<f64, PotentialError> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(PotentialError::BadParameter(format!("{name} must be finite and > 0 (got {x})")))
    }
}

/// Finite-difference step for tabulated derivatives.
fn fd_step(k: f64) -> f64 {
    1e-6f64.max(1e-6 * k)
}

impl PotentialModel {
    pub fn gaussian(v: f64, nu: f64) -> Result<Self, PotentialError> {
        Ok(PotentialModel {
            kind: PotentialKind::Gaussian { v: positive("v", v)?, nu: positive("nu", nu)? },
        })
    }

    pub fn flat_cutoff(v0: f64, lambda: f64) -> Result<Self, PotentialError> {
        if !(lambda > 0.0) {
            return Err(PotentialError::BadParameter(format!("lambda must be > 0 (got {lambda})")));
        }
        Ok(PotentialModel { kind: PotentialKind::FlatCutoff { v0: positive("v0", v0)?, lambda } })
    }

    pub fn flat(v0: f64) -> Result<Self, PotentialError> {
        PotentialModel::flat_cutoff(v0, f64::INFINITY)
    }

    /// A table whose v̂(0) may be non-positive is accepted here so that the
    /// validator can report it; the rates refuse such a model.
    pub fn tabulated(table: Table) -> Self {
        PotentialModel { kind: PotentialKind::Tabulated(table) }
    }

    pub fn kind(&self) -> &PotentialKind {
        &self.kind
    }

    pub fn vhat0(&self) -> f64 {
        match &self.kind {
            PotentialKind::Gaussian { v, .. } => *v,
            PotentialKind::FlatCutoff { v0, .. } => *v0,
            PotentialKind::Tabulated(t) => t.values()[0],
        }
    }

    /// Radius around the origin on which v̂ is treated as smooth (C⁵).
    pub fn smooth_radius(&self) -> f64 {
        match &self.kind {
            PotentialKind::Gaussian { .. } => f64::INFINITY,
            PotentialKind::FlatCutoff { lambda, .. } => *lambda,
            PotentialKind::Tabulated(_) => 0.0,
        }
    }

    /// Largest momentum at which v̂ is defined.
    pub fn k_max(&self) -> f64 {
        match &self.kind {
            PotentialKind::Tabulated(t) => t.k_max(),
            _ => f64::INFINITY,
        }
    }

    /// v̂(k); NaN beyond a table's range.
    pub fn vhat(&self, k: f64) -> f64 {
        let k = k.abs();
        match &self.kind {
            PotentialKind::Gaussian { v, nu } => v * (-k * k / (2.0 * nu)).exp(),
            PotentialKind::FlatCutoff { v0, lambda } => {
                if k < *lambda {
                    *v0
                } else if k >= 2.0 * lambda {
                    0.0
                } else {
                    let x = std::f64::consts::PI * (k - lambda) / lambda;
                    0.5 * v0 * (1.0 + x.cos())
                }
            }
            PotentialKind::Tabulated(t) => t.eval(k),
        }
    }

    pub fn evaluate_vhat(&self, k: f64) -> Result<f64, PotentialError> {
        if k.is_nan() {
            return Err(PotentialError::BadParameter("k is NaN".into()));
        }
        if let PotentialKind::Tabulated(t) = &self.kind {
            if k.abs() > t.k_max() {
                return Err(PotentialError::Extrapolation { k, lo: 0.0, hi: t.k_max() });
            }
        }
        Ok(self.vhat(k))
    }

    /// dv̂/dk: analytic for the closed-form models, centered difference for tables.
    pub fn dvhat_dk(&self, k: f64) -> f64 {
        match &self.kind {
            PotentialKind::Gaussian { nu, .. } => -k / nu * self.vhat(k),
            PotentialKind::FlatCutoff { v0, lambda } => {
                if k < *lambda || k >= 2.0 * lambda {
                    0.0
                } else {
                    let pi = std::f64::consts::PI;
                    -0.5 * v0 * pi / lambda * (pi * (k - lambda) / lambda).sin()
                }
            }
            PotentialKind::Tabulated(t) => {
                let h = fd_step(k);
                let top = t.k_max();
                if k + h > top {
                    (t.eval(k) - t.eval(k - h)) / h
                } else {
                    // vhat is even, so k − h < 0 reflects.
                    (t.eval(k + h) - t.eval((k - h).abs())) / (2.0 * h)
                }
            }
        }
    }

    /// v̂''(0).
    pub fn curvature_at_zero(&self) -> f64 {
        match &self.kind {
            PotentialKind::Gaussian { v, nu } => -v / nu,
            PotentialKind::FlatCutoff { .. } => 0.0,
            PotentialKind::Tabulated(t) => t.curvature_at_zero(),
        }
    }

    /// dv̂/d(k²), finite at k = 0.
    pub fn dvhat_dk2(&self, k: f64) -> f64 {
        match &self.kind {
            PotentialKind::Gaussian { nu, .. } => -self.vhat(k) / (2.0 * nu),
            PotentialKind::FlatCutoff { .. } if k == 0.0 => 0.0,
            PotentialKind::Tabulated(t) if k < 1e-3 * t.grid()[1] => 0.5 * t.curvature_at_zero(),
            _ => self.dvhat_dk(k) / (2.0 * k),
        }
    }

    pub fn is_square_integrable(&self) -> bool {
        !matches!(self.kind, PotentialKind::FlatCutoff { lambda, .. } if lambda.is_infinite())
    }
}

pub fn evaluate_vhat(model: &PotentialModel, k: f64) -> Result<f64, PotentialError> {
    model.evaluate_vhat(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssumptionId {
    /// v is an integrable real function (not checkable from v̂ samples).
    IntegrableReal,
    SquareIntegrable,
    /// v̂(0) > 0 and v̂(k) > −v̂(0) k²/(2ν).
    Positivity,
    Even,
    Radial,
    SmoothAtOrigin,
    /// ν v̂''(0)/v̂(0) > −1
    CurvatureAtOrigin,
    C1,
    /// k²/(2ν) + v̂/v̂(0) + k v̂'/(2 v̂(0)) has finitely many zeros and a positive liminf.
    NoPlateau,
    /// ν v̂''(0)/v̂(0) > −1/2, the actual condition for ω_bg to be convex near 0.
    ConvexAtOrigin,
}

impl AssumptionId {
    pub fn label(&self) -> &'static str {
        match self {
            AssumptionId::IntegrableReal => "integrable-real",
            AssumptionId::SquareIntegrable => "square-integrable",
            AssumptionId::Positivity => "positivity",
            AssumptionId::Even => "even",
            AssumptionId::Radial => "radial",
            AssumptionId::SmoothAtOrigin => "smooth-at-origin",
            AssumptionId::CurvatureAtOrigin => "curvature-at-origin",
            AssumptionId::C1 => "c1",
            AssumptionId::NoPlateau => "no-plateau",
            AssumptionId::ConvexAtOrigin => "convex-at-origin",
        }
    }
}

/// A point where a check failed: the two sides of the violated inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub k: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CheckStatus {
    Pass,
    Fail(Witness),
    Assumed(&'static str),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssumptionEntry {
    pub id: AssumptionId,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssumptionReport {
    pub entries: Vec<AssumptionEntry>,
    /// The single ν the checks were run for; the theory wants them for all ν in ]0, V].
    pub nu: f64,
    pub sign_changes: usize,
}

impl AssumptionReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| !matches!(e.status, CheckStatus::Fail(_)))
    }

    pub fn get(&self, id: AssumptionId) -> &CheckStatus {
        &self
            .entries
            .iter()
            .find(|e| e.id == id)
            .expect("every id is reported")
            .status
    }

    pub fn failures(&self) -> impl Iterator<Item = &AssumptionEntry> {
        self.entries.iter().filter(|e| matches!(e.status, CheckStatus::Fail(_)))
    }
}

impl fmt::Display for AssumptionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "assumption checks at nu = {} (single value, not a range)", self.nu)?;
        for e in &self.entries {
            match &e.status {
                CheckStatus::Pass => writeln!(f, "  pass     {}", e.id.label())?,
                CheckStatus::Assumed(why) => writeln!(f, "  assumed  {} ({why})", e.id.label())?,
                CheckStatus::Fail(w) => writeln!(
                    f,
                    "  FAIL     {} at k = {}: {} vs {}",
                    e.id.label(),
                    w.k,
                    w.lhs,
                    w.rhs
                )?,
            }
        }
        Ok(())
    }
}

/// Uniform probe grid on [0, k_max].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeGrid {
    pub k_max: f64,
    pub points: usize,
}

impl ProbeGrid {
    /// Several √ν, past a cutoff's support, and never beyond a table.
    pub fn default_for(model: &PotentialModel, nu: f64) -> Self {
        let mut k_max = 20.0 * nu.sqrt();
        match model.kind() {
            PotentialKind::FlatCutoff { lambda, .. } if lambda.is_finite() => {
                k_max = k_max.max(3.0 * lambda)
            }
            PotentialKind::Tabulated(t) => k_max = t.k_max(),
            _ => {}
        }
        ProbeGrid { k_max, points: 4001 }
    }

    fn points(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..=n).map(|i| self.k_max * i as f64 / n as f64).collect()
    }
}

/// k²/(2ν) + v̂/v̂(0) + k v̂'/(2 v̂(0)); shares its sign with dω_bg/dk for k > 0.
pub fn no_plateau_function(model: &PotentialModel, nu: f64, k: f64) -> f64 {
    let v0 = model.vhat0();
    k * k / (2.0 * nu) + model.vhat(k) / v0 + k * model.dvhat_dk(k) / (2.0 * v0)
}

pub fn validate_assumptions(
    model: &PotentialModel,
    params: &GasParameters,
    probe: &ProbeGrid,
) -> Result<AssumptionReport, PotentialError> {
    if probe.points < 2 || !(probe.k_max > 0.0) {
        return Err(PotentialError::DegenerateProbe);
    }
    let nu = params.nu();
    let v0 = model.vhat0();
    let grid = probe.points();
    let k_top = *grid.last().expect("non-empty grid");
    let mut entries = Vec::new();
    let mut push = |id, status| entries.push(AssumptionEntry { id, status });

    push(
        AssumptionId::IntegrableReal,
        CheckStatus::Assumed("not decidable from samples of v̂"),
    );

    let square = match model.kind() {
        PotentialKind::FlatCutoff { lambda, .. } if lambda.is_infinite() => {
            CheckStatus::Fail(Witness { k: k_top, lhs: model.vhat(k_top).powi(2), rhs: 0.0 })
        }
        PotentialKind::Tabulated(t) => {
            let last = *t.values().last().expect("non-empty table");
            if last.abs() <= 1e-3 * v0.abs() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail(Witness { k: t.k_max(), lhs: last.abs(), rhs: 1e-3 * v0.abs() })
            }
        }
        _ => CheckStatus::Pass,
    };
    push(AssumptionId::SquareIntegrable, square);

    let mut positivity = if v0 > 0.0 {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail(Witness { k: 0.0, lhs: v0, rhs: 0.0 })
    };
    if v0 > 0.0 {
        for &k in grid.iter().skip(1) {
            let lhs = model.vhat(k);
            let rhs = -v0 * k * k / (2.0 * nu);
            if !(lhs > rhs) {
                positivity = CheckStatus::Fail(Witness { k, lhs, rhs });
                break;
            }
        }
    }
    push(AssumptionId::Positivity, positivity);

    push(AssumptionId::Even, CheckStatus::Pass);
    push(AssumptionId::Radial, CheckStatus::Pass);
    push(
        AssumptionId::SmoothAtOrigin,
        match model.kind() {
            PotentialKind::Tabulated(_) => {
                CheckStatus::Assumed("a cubic interpolant is only C¹; smoothness of the data is assumed")
            }
            _ => CheckStatus::Pass,
        },
    );

    let curv = nu * model.curvature_at_zero() / v0;
    // Strict inequalities: equality within rounding counts as a failure.
    let strict = |lhs: f64, rhs: f64| lhs > rhs + 1e-12 * rhs.abs().max(1.0);
    push(
        AssumptionId::CurvatureAtOrigin,
        if v0 > 0.0 && strict(curv, -1.0) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(Witness { k: 0.0, lhs: curv, rhs: -1.0 })
        },
    );
    push(AssumptionId::C1, CheckStatus::Pass);

    let mut sign_changes = 0;
    let mut plateau = None;
    let mut prev: Option<f64> = None;
    let mut flat_run = 0;
    let tiny = 1e-12;
    if v0 > 0.0 {
        for &k in &grid {
            let d = no_plateau_function(model, nu, k);
            if d.abs() <= tiny {
                flat_run += 1;
                if flat_run >= 2 && plateau.is_none() {
                    plateau = Some(Witness { k, lhs: d, rhs: 0.0 });
                }
            } else {
                flat_run = 0;
            }
            if let Some(p) = prev {
                if p * d < 0.0 {
                    sign_changes += 1;
                }
            }
            if d != 0.0 {
                prev = Some(d);
            }
        }
    }
    let liminf = if v0 > 0.0 { no_plateau_function(model, nu, k_top) } else { f64::NAN };
    let no_plateau = if let Some(w) = plateau {
        CheckStatus::Fail(w)
    } else if !(liminf > 0.0) {
        CheckStatus::Fail(Witness { k: k_top, lhs: liminf, rhs: 0.0 })
    } else {
        CheckStatus::Pass
    };
    push(AssumptionId::NoPlateau, no_plateau);

    push(
        AssumptionId::ConvexAtOrigin,
        if v0 > 0.0 && strict(curv, -0.5) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail(Witness { k: 0.0, lhs: curv, rhs: -0.5 })
        },
    );

    Ok(AssumptionReport { entries, nu, sign_changes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_values() {
        let g = PotentialModel::gaussian(0.4, 1.0).unwrap();
        assert_eq!(g.vhat(0.0), 0.4);
        assert!((g.vhat(2f64.sqrt()) - 0.4 * (-1f64).exp()).abs() < 1e-15);
        assert!((g.vhat(2f64.sqrt()) - 0.147_152).abs() < 1e-6);
    }

    #[test]
    fn flat_cutoff_values() {
        let f = PotentialModel::flat_cutoff(1.0, 10.0).unwrap();
        assert_eq!(f.vhat(3.0), 1.0);
        assert_eq!(f.vhat(25.0), 0.0);
        assert!((f.vhat(15.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn ramp_is_c1_at_both_junctions() {
        let f = PotentialModel::flat_cutoff(2.0, 10.0).unwrap();
        let h = 1e-7;
        for &x in &[10.0, 20.0] {
            let left = (f.vhat(x) - f.vhat(x - h)) / h;
            let right = (f.vhat(x + h) - f.vhat(x)) / h;
            assert!((left - right).abs() < 1e-6, "{left} {right}");
            assert!(f.dvhat_dk(x).abs() < 1e-12);
        }
    }

    #[test]
    fn table_parse_and_nodes() {
        let text = "# k vhat\n0 1.0\n0.5 0.9  # comment\n\n1.0 0.5\n2.0 0.1\n4.0 0.0\n";
        let t = Table::parse(text).unwrap();
        for (k, v) in t.grid().iter().zip(t.values()) {
            assert_eq!(t.eval(*k), *v);
        }
        let m = PotentialModel::tabulated(t);
        assert!(m.evaluate_vhat(4.5).is_err());
        assert!(m.evaluate_vhat(3.9).is_ok());
    }

    #[test]
    fn table_rejects_bad_input() {
        assert!(Table::parse("0 1\n1 2 3\n").is_err());
        assert!(Table::parse("0 1\n2 1\n1 1\n").is_err());
        assert!(Table::parse("0.1 1\n1 1\n2 1\n").is_err());
        assert!(Table::parse("0 1\n1 x\n2 1\n").is_err());
    }

    #[test]
    fn table_interpolant_is_monotone_on_monotone_data() {
        let k = vec![0.0, 0.3, 0.5, 1.0, 1.2, 3.0];
        let v = vec![1.0, 0.98, 0.7, 0.69, 0.1, 0.0];
        let t = Table::new(k, v).unwrap();
        let mut prev = t.eval(0.0);
        for i in 1..=3000 {
            let x = 3.0 * i as f64 / 3000.0;
            let y = t.eval(x);
            assert!(y <= prev + 1e-15, "non-monotone at {x}");
            prev = y;
        }
    }

    #[test]
    fn gaussian_fails_curvature_check() {
        // ν v̂''(0)/v̂(0) = −1 exactly, which also leaves ω_bg concave near 0.
        let p = GasParameters::new(1.0, 1.0, 0.4).unwrap();
        let g = PotentialModel::gaussian(0.4, 1.0).unwrap();
        let r = validate_assumptions(&g, &p, &ProbeGrid::default_for(&g, 1.0)).unwrap();
        assert!(matches!(r.get(AssumptionId::CurvatureAtOrigin), CheckStatus::Fail(_)));
        assert!(matches!(r.get(AssumptionId::ConvexAtOrigin), CheckStatus::Fail(_)));
        assert_eq!(*r.get(AssumptionId::NoPlateau), CheckStatus::Pass);
        assert_eq!(*r.get(AssumptionId::Positivity), CheckStatus::Pass);
        assert!(!r.passed());
    }

    #[test]
    fn flat_cutoff_passes_and_unbounded_flat_fails_l2() {
        let p = GasParameters::new(1.0, 1.0, 1.0).unwrap();
        let f = PotentialModel::flat_cutoff(1.0, 10.0).unwrap();
        let r = validate_assumptions(&f, &p, &ProbeGrid::default_for(&f, 1.0)).unwrap();
        assert!(r.passed(), "{r}");
        let flat = PotentialModel::flat(1.0).unwrap();
        let r = validate_assumptions(&flat, &p, &ProbeGrid::default_for(&flat, 1.0)).unwrap();
        assert!(matches!(r.get(AssumptionId::SquareIntegrable), CheckStatus::Fail(_)));
    }

    #[test]
    fn nonpositive_table_origin_fails_positivity() {
        let t = Table::new(vec![0.0, 1.0, 2.0], vec![-0.1, 0.0, 0.0]).unwrap();
        let m = PotentialModel::tabulated(t);
        let p = GasParameters::new(1.0, 1.0, 1.0).unwrap();
        let r = validate_assumptions(&m, &p, &ProbeGrid::default_for(&m, 1.0)).unwrap();
        assert!(matches!(r.get(AssumptionId::Positivity), CheckStatus::Fail(w) if w.k == 0.0));
    }

    #[test]
    fn degenerate_probe_is_rejected() {
        let f = PotentialModel::flat_cutoff(1.0, 10.0).unwrap();
        let p = GasParameters::new(1.0, 1.0, 1.0).unwrap();
        let probe = ProbeGrid { k_max: 1.0, points: 1 };
        assert_eq!(validate_assumptions(&f, &p, &probe), Err(PotentialError::DegenerateProbe));
    }
}
