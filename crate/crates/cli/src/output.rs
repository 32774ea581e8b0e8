use std::fmt::Write as _;

use serde_json::{Map, Number, Value};

use crate::sweep::{Cell, SweepRow};

pub const HEADER: &str = "k,k_over_sqrt_nu,beta_nu,theta,method,gamma_B,gamma_B_err,gamma_L,gamma_L_err,total";
pub const ERROR_MARKER: &str = "error";

/// Shortest decimal that parses back to the same f64; exponent form only
/// for very small or very large magnitudes. Rust formatting ignores locale.
pub fn fmt_num(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn cell_csv(c: Cell) -> String {
    match c {
        Cell::Value(v) => fmt_num(v),
        Cell::Missing => String::new(),
        Cell::Error => ERROR_MARKER.to_string(),
    }
}

fn cell_json(c: Cell) -> Value {
    match c {
        Cell::Value(v) => Number::from_f64(v).map_or(Value::Null, Value::Number),
        Cell::Missing => Value::Null,
        Cell::Error => Value::String(ERROR_MARKER.into()),
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            fmt_num(r.k),
            fmt_num(r.k_over_sqrt_nu),
            fmt_num(r.beta_nu),
            cell_csv(r.theta),
            r.method,
            cell_csv(r.gamma_b),
            cell_csv(r.gamma_b_err),
            cell_csv(r.gamma_l),
            cell_csv(r.gamma_l_err),
            cell_csv(r.total),
        );
    }
    out
}

pub fn to_json(rows: &[SweepRow]) -> String {
    let arr: Vec<Value> = rows
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("k".into(), cell_json(Cell::Value(r.k)));
            m.insert("k_over_sqrt_nu".into(), cell_json(Cell::Value(r.k_over_sqrt_nu)));
            m.insert("beta_nu".into(), cell_json(Cell::Value(r.beta_nu)));
            m.insert("theta".into(), cell_json(r.theta));
            m.insert("method".into(), Value::String(r.method.into()));
            m.insert("gamma_B".into(), cell_json(r.gamma_b));
            m.insert("gamma_B_err".into(), cell_json(r.gamma_b_err));
            m.insert("gamma_L".into(), cell_json(r.gamma_l));
            m.insert("gamma_L_err".into(), cell_json(r.gamma_l_err));
            m.insert("total".into(), cell_json(r.total));
            Value::Object(m)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(arr)).expect("plain values serialise");
    s.push('\n');
    s
}
