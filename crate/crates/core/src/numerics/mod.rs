//! Shared numerical engines: adaptive quadrature and bracketed root solving.

mod quadrature;
mod roots;

pub use quadrature::{integrate, integrate_pieces, Integral, QuadratureSpec, TailMap};
pub use roots::{
    find_root_bracketed, scan_sign_changes, sign_changes_on_grid, RootBracket, MAX_ROOT_ITERATIONS,
};

/// `n + 1` points from `a` to `b` (both > 0) in geometric progression.
pub fn geometric_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let ratio = (b / a).ln() / n as f64;
    let mut g: Vec<f64> = (0..=n).map(|i| a * (ratio * i as f64).exp()).collect();
    g[n] = b;
    g
}
