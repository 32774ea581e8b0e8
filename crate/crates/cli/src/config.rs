//! Settings from a flat `key = value` file merged with command-line flags.
//! Flags win over the file; keys use the flag names with `_` or `-`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use phonon_damping::numerics::QuadratureSpec;
use phonon_damping::potential::Table;
use phonon_damping::PotentialModel;

use crate::CliError;

/// Every setting, as given on the command line. All optional so that a
/// config file can supply them.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Flat key = value file; flags given here override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// gaussian:v=V | flat:v0=V | flat-cutoff:v0=V,lambda=L | table:PATH.
    /// lambda is in units of √ν unless --raw.
    #[arg(long)]
    pub potential: Option<String>,
    #[arg(long)]
    pub nu: Option<f64>,
    /// βν values: "a,b,c", "log:lo:hi:n" or "lin:lo:hi:n" (β with --raw).
    #[arg(long)]
    pub beta_nu: Option<String>,
    /// k/√ν values, same syntax as --beta-nu (k with --raw).
    #[arg(long)]
    pub k: Option<String>,
    /// Subset of beliaev,landau,total.
    #[arg(long)]
    pub rates: Option<String>,
    /// Subset of quadrature,asymptotic,closed_form_regime,mc.
    #[arg(long)]
    pub methods: Option<String>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads for independent sweep points.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub mc_samples: Option<usize>,
    #[arg(long)]
    pub mc_seed: Option<u64>,
    /// Mollifier width as a fraction of ω_bg(k).
    #[arg(long)]
    pub mc_epsilon: Option<f64>,
    /// θ = βω values for the specfun table.
    #[arg(long)]
    pub theta: Option<String>,
    /// Compute even if the potential fails the assumption checks.
    #[arg(long)]
    pub skip_validation: bool,
    /// Read --k and --beta-nu as raw k and β, and lambda as a raw momentum.
    #[arg(long)]
    pub raw: bool,
}

const KEYS: [&str; 19] = [
    "potential",
    "nu",
    "beta_nu",
    "k",
    "rates",
    "methods",
    "rel_tol",
    "abs_tol",
    "max_subdivisions",
    "format",
    "output",
    "jobs",
    "mc_samples",
    "mc_seed",
    "mc_epsilon",
    "theta",
    "skip_validation",
    "raw",
    "config",
];

pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", n + 1)))?;
        let key = key.trim().replace('-', "_");
        if !KEYS.contains(&key.as_str()) || key == "config" {
            return Err(CliError::Usage(format!("config line {}: unknown key '{key}'", n + 1)));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

fn parse_bool(field: &str, s: &str) -> Result<bool, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::Usage(format!("{field}: expected true or false, got '{s}'"))),
    }
}

fn parse_num<T: std::str::FromStr>(field: &str, s: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{field}: cannot parse '{s}'")))
}

/// "a,b,c" (commas or spaces), "log:lo:hi:n" or "lin:lo:hi:n"; sorted, deduplicated.
pub fn parse_list(field: &str, s: &str) -> Result<Vec<f64>, CliError> {
    let s = s.trim();
    let mut values = if let Some(rest) = s.strip_prefix("log:").or_else(|| s.strip_prefix("lin:")) {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(CliError::Usage(format!("{field}: range needs lo:hi:n")));
        }
        let lo: f64 = parse_num(field, parts[0])?;
        let hi: f64 = parse_num(field, parts[1])?;
        let n: usize = parse_num(field, parts[2])?;
        if n == 0 {
            return Err(CliError::Usage(format!("{field}: range needs n ≥ 1")));
        }
        if !(lo > 0.0 && hi >= lo && hi.is_finite()) {
            return Err(CliError::Usage(format!("{field}: range must satisfy 0 < lo ≤ hi < inf")));
        }
        let log = s.starts_with("log:");
        (0..n)
            .map(|i| {
                // Endpoints exactly as given.
                if i == 0 {
                    return lo;
                }
                if i == n - 1 {
                    return hi;
                }
                let f = i as f64 / (n - 1) as f64;
                if log {
                    (lo.ln() + f * (hi / lo).ln()).exp()
                } else {
                    lo + f * (hi - lo)
                }
            })
            .collect::<Vec<f64>>()
    } else {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| parse_num::<f64>(field, t))
            .collect::<Result<Vec<f64>, CliError>>()?
    };
    if values.is_empty() {
        return Err(CliError::Usage(format!("{field}: needs at least one value")));
    }
    if let Some(bad) = values.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(CliError::Usage(format!("{field}: values must be finite and > 0 (got {bad})")));
    }
    values.sort_by(f64::total_cmp);
    values.dedup();
    Ok(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MethodSel {
    Quadrature,
    Asymptotic,
    ClosedFormRegime,
    Mc,
}

impl MethodSel {
    pub fn name(self) -> &'static str {
        match self {
            MethodSel::Quadrature => "quadrature",
            MethodSel::Asymptotic => "asymptotic",
            MethodSel::ClosedFormRegime => "closed_form_regime",
            MethodSel::Mc => "mc",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RateSet {
    pub beliaev: bool,
    pub landau: bool,
    pub total: bool,
}

impl RateSet {
    pub fn needs_beliaev(&self) -> bool {
        self.beliaev || self.total
    }
    pub fn needs_landau(&self) -> bool {
        self.landau || self.total
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSpec {
    Gaussian { v: f64 },
    Flat { v0: f64 },
    FlatCutoff { v0: f64, lambda: f64 },
    Table(PathBuf),
}

impl PotentialSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let bad = |msg: &str| CliError::Usage(format!("potential: {msg} in '{s}'"));
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let kind = kind.trim().to_ascii_lowercase();
        if kind == "table" {
            if rest.trim().is_empty() {
                return Err(bad("table needs a path"));
            }
            return Ok(PotentialSpec::Table(PathBuf::from(rest.trim())));
        }
        let mut args = BTreeMap::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected name=value"))?;
            let v: f64 = v.trim().parse().map_err(|_| bad("non-numeric parameter"))?;
            args.insert(k.trim().to_string(), v);
        }
        let mut take = |name: &str| args.remove(name).ok_or_else(|| bad(&format!("missing {name}")));
        let spec = match kind.as_str() {
            "gaussian" => PotentialSpec::Gaussian { v: take("v")? },
            "flat" => PotentialSpec::Flat { v0: take("v0")? },
            "flat-cutoff" | "flat_cutoff" => PotentialSpec::FlatCutoff { v0: take("v0")?, lambda: take("lambda")? },
            _ => return Err(bad("unknown kind (gaussian, flat, flat-cutoff, table)")),
        };
        if let Some(extra) = args.keys().next() {
            return Err(bad(&format!("unexpected parameter {extra}")));
        }
        Ok(spec)
    }

    pub fn build(&self, nu: f64, raw: bool) -> Result<PotentialModel, CliError> {
        let model = match self {
            PotentialSpec::Gaussian { v } => PotentialModel::gaussian(*v, nu),
            PotentialSpec::Flat { v0 } => PotentialModel::flat(*v0),
            PotentialSpec::FlatCutoff { v0, lambda } => {
                let lambda = if raw { *lambda } else { lambda * nu.sqrt() };
                PotentialModel::flat_cutoff(*v0, lambda)
            }
            PotentialSpec::Table(path) => Table::read(Path::new(path)).map(PotentialModel::tabulated),
        };
        model.map_err(|e| CliError::Usage(format!("potential: {e}")))
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub potential: PotentialSpec,
    pub nu: f64,
    /// βν, or β with `raw`.
    pub beta_nu: Vec<f64>,
    /// k/√ν, or k with `raw`.
    pub k: Vec<f64>,
    pub rates: RateSet,
    pub methods: Vec<MethodSel>,
    pub quad: QuadratureSpec,
    pub format: Format,
    pub jobs: usize,
    pub mc_samples: usize,
    pub mc_seed: u64,
    pub mc_epsilon: f64,
    pub skip_validation: bool,
    pub raw: bool,
}

/// Flags merged over the optional config file.
pub struct Merged {
    flags: Flags,
    file: BTreeMap<String, String>,
}

impl Merged {
    pub fn new(flags: Flags) -> Result<Self, CliError> {
        let file = match &flags.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
                parse_config_text(&text)?
            }
            None => BTreeMap::new(),
        };
        Ok(Merged { flags, file })
    }

    fn get<T: std::str::FromStr>(&self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.file.get(key).map(|s| parse_num(key, s)).transpose(),
        }
    }

    fn get_str(&self, key: &str, flag: &Option<String>) -> Option<String> {
        flag.clone().or_else(|| self.file.get(key).cloned())
    }

    fn require_str(&self, key: &str, flag: &Option<String>) -> Result<String, CliError> {
        self.get_str(key, flag)
            .ok_or_else(|| CliError::Usage(format!("{key}: required (flag --{} or config key)", key.replace('_', "-"))))
    }

    fn get_bool(&self, key: &str, flag: bool) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        self.file.get(key).map_or(Ok(false), |s| parse_bool(key, s))
    }

    pub fn raw(&self) -> Result<bool, CliError> {
        self.get_bool("raw", self.flags.raw)
    }

    pub fn skip_validation(&self) -> Result<bool, CliError> {
        self.get_bool("skip_validation", self.flags.skip_validation)
    }

    pub fn nu(&self) -> Result<f64, CliError> {
        let nu = self.get("nu", self.flags.nu)?.unwrap_or(1.0);
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(CliError::Usage(format!("nu: must be finite and > 0 (got {nu})")));
        }
        Ok(nu)
    }

    pub fn potential(&self) -> Result<PotentialModel, CliError> {
        let spec = PotentialSpec::parse(&self.require_str("potential", &self.flags.potential)?)?;
        spec.build(self.nu()?, self.raw()?)
    }

    pub fn theta(&self) -> Result<Vec<f64>, CliError> {
        parse_list("theta", &self.require_str("theta", &self.flags.theta)?)
    }

    pub fn output(&self) -> Option<PathBuf> {
        self.flags.output.clone().or_else(|| self.file.get("output").map(PathBuf::from))
    }

    pub fn sweep(&self, default_methods: &str) -> Result<SweepConfig, CliError> {
        let potential = PotentialSpec::parse(&self.require_str("potential", &self.flags.potential)?)?;
        let beta_nu = parse_list("beta_nu", &self.require_str("beta_nu", &self.flags.beta_nu)?)?;
        let k = parse_list("k", &self.require_str("k", &self.flags.k)?)?;

        let rates_s = self.get_str("rates", &self.flags.rates).unwrap_or_else(|| "beliaev,landau,total".into());
        let mut rates = RateSet::default();
        for r in rates_s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match r {
                "beliaev" => rates.beliaev = true,
                "landau" => rates.landau = true,
                "total" => rates.total = true,
                _ => return Err(CliError::Usage(format!("rates: unknown rate '{r}'"))),
            }
        }
        if rates == RateSet::default() {
            return Err(CliError::Usage("rates: needs at least one of beliaev, landau, total".into()));
        }

        let methods_s = self.get_str("methods", &self.flags.methods).unwrap_or_else(|| default_methods.into());
        let mut methods = Vec::new();
        for m in methods_s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            methods.push(match m {
                "quadrature" => MethodSel::Quadrature,
                "asymptotic" => MethodSel::Asymptotic,
                "closed_form_regime" | "closed-form-regime" => MethodSel::ClosedFormRegime,
                "mc" => MethodSel::Mc,
                _ => return Err(CliError::Usage(format!("methods: unknown method '{m}'"))),
            });
        }
        methods.sort();
        methods.dedup();
        if methods.is_empty() {
            return Err(CliError::Usage("methods: needs at least one method".into()));
        }

        let mut quad = QuadratureSpec::with_tol(1e-8, 0.0);
        if let Some(t) = self.get("rel_tol", self.flags.rel_tol)? {
            quad.rel_tol = t;
        }
        if let Some(t) = self.get("abs_tol", self.flags.abs_tol)? {
            quad.abs_tol = t;
        }
        if let Some(n) = self.get("max_subdivisions", self.flags.max_subdivisions)? {
            quad.max_subdivisions = n;
        }
        quad.validate().map_err(|e| CliError::Usage(format!("quadrature settings: {e}")))?;

        let format = match self.get_str("format", &self.flags.format).as_deref().unwrap_or("csv") {
            "csv" => Format::Csv,
            "json" => Format::Json,
            other => return Err(CliError::Usage(format!("format: expected csv or json, got '{other}'"))),
        };
        let jobs = self
            .get("jobs", self.flags.jobs)?
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if jobs == 0 {
            return Err(CliError::Usage("jobs: must be ≥ 1".into()));
        }
        let mc_samples = self.get("mc_samples", self.flags.mc_samples)?.unwrap_or(1_000_000);
        let mc_epsilon = self.get("mc_epsilon", self.flags.mc_epsilon)?.unwrap_or(1e-3);
        if !(mc_epsilon > 0.0 && mc_epsilon.is_finite()) {
            return Err(CliError::Usage(format!("mc_epsilon: must be finite and > 0 (got {mc_epsilon})")));
        }
        Ok(SweepConfig {
            potential,
            nu: self.nu()?,
            beta_nu,
            k,
            rates,
            methods,
            quad,
            format,
            jobs,
            mc_samples,
            mc_seed: self.get("mc_seed", self.flags.mc_seed)?.unwrap_or(1),
            mc_epsilon,
            skip_validation: self.skip_validation()?,
            raw: self.raw()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text_with_comments() {
        let m = parse_config_text("# sweep\nnu = 1\nbeta-nu = 50, 2000 # two\n\n").unwrap();
        assert_eq!(m["nu"], "1");
        assert_eq!(m["beta_nu"], "50, 2000");
    }

    #[test]
    fn unknown_key_is_named() {
        let e = parse_config_text("temperature = 3").unwrap_err();
        assert!(e.to_string().contains("temperature"));
    }

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_list("k", "0.05, 0.001 0.05").unwrap(), vec![0.001, 0.05]);
        let r = parse_list("k", "log:0.001:0.1:3").unwrap();
        assert!((r[1] - 0.01).abs() < 1e-15 && r[2] == 0.1);
        assert_eq!(parse_list("k", "lin:1:2:3").unwrap(), vec![1.0, 1.5, 2.0]);
        assert!(parse_list("k", "").is_err());
        assert!(parse_list("k", "1,-2").is_err());
    }

    #[test]
    fn potential_specs() {
        assert_eq!(PotentialSpec::parse("gaussian:v=0.1").unwrap(), PotentialSpec::Gaussian { v: 0.1 });
        assert_eq!(
            PotentialSpec::parse("flat-cutoff:v0=0.1,lambda=10").unwrap(),
            PotentialSpec::FlatCutoff { v0: 0.1, lambda: 10.0 }
        );
        assert!(PotentialSpec::parse("gaussian:v=0.1,w=2").is_err());
        assert!(PotentialSpec::parse("square:v=1").is_err());
        assert!(PotentialSpec::parse("table:").is_err());
    }
}
