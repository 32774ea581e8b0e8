//! Bracketed root finding and sign-change scanning.

use crate::error::NumericsError;

/// Interval enclosing a sign change of some function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl RootBracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self, NumericsError> {
        let b = RootBracket { lo, hi, f_lo, f_hi };
        if b.is_valid() {
            Ok(b)
        } else {
            Err(NumericsError::InvalidBracket { lo, hi, f_lo, f_hi })
        }
    }

    pub fn from_fn<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<Self, NumericsError> {
        let (f_lo, f_hi) = (f(lo), f(hi));
        RootBracket::new(lo, hi, f_lo, f_hi)
    }

    pub fn is_valid(&self) -> bool {
        self.lo <= self.hi
            && self.f_lo.is_finite()
            && self.f_hi.is_finite()
            && self.f_lo * self.f_hi <= 0.0
    }
}

pub const MAX_ROOT_ITERATIONS: usize = 200;

/// Bisection down to `1e-3` relative width, then guarded secant to `tol`
/// (relative to the root magnitude, with an absolute floor of `tol * 1e-3`).
pub fn find_root_bracketed<F: FnMut(f64) -> f64>(
    mut f: F,
    bracket: RootBracket,
    tol: f64,
) -> Result<f64, NumericsError> {
    if !bracket.is_valid() {
        return Err(NumericsError::InvalidBracket {
            lo: bracket.lo,
            hi: bracket.hi,
            f_lo: bracket.f_lo,
            f_hi: bracket.f_hi,
        });
    }
    let RootBracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    let width_ok = |lo: f64, hi: f64, rel: f64| {
        let scale = lo.abs().max(hi.abs());
        hi - lo <= rel * scale || hi - lo <= rel * 1e-3
    };
    let mut iter = 0;
    while !width_ok(lo, hi, 1e-3) {
        iter += 1;
        if iter > MAX_ROOT_ITERATIONS {
            return Err(NumericsError::NoConvergence { iterations: iter });
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if !fm.is_finite() {
            return Err(NumericsError::NonFinite { at: mid, value: fm });
        }
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    // Secant steps from the bracket ends; a step leaving the bracket or
    // failing to halve it falls back to bisection.
    while !width_ok(lo, hi, tol) {
        iter += 1;
        if iter > MAX_ROOT_ITERATIONS {
            return Err(NumericsError::NoConvergence { iterations: iter });
        }
        let width = hi - lo;
        let mut x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let fx = f(x);
        if !fx.is_finite() {
            return Err(NumericsError::NonFinite { at: x, value: fx });
        }
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx < 0.0) == (f_lo < 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        // Secant converging from one side only: force a bisection.
        if hi - lo > 0.5 * width {
            let mid = 0.5 * (lo + hi);
            let fm = f(mid);
            if !fm.is_finite() {
                return Err(NumericsError::NonFinite { at: mid, value: fm });
            }
            if fm == 0.0 {
                return Ok(mid);
            }
            if (fm < 0.0) == (f_lo < 0.0) {
                lo = mid;
                f_lo = fm;
            } else {
                hi = mid;
                f_hi = fm;
            }
        }
        let next = 0.5 * (lo + hi);
        if next <= lo || next >= hi {
            break;
        }
    }
    // Return the end with the smaller residual.
    Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}

/// Sign changes of `f` sampled on the given ascending grid. Exact zeros at
/// grid points produce a degenerate bracket at that point.
pub fn sign_changes_on_grid<F: FnMut(f64) -> f64>(mut f: F, grid: &[f64]) -> Vec<RootBracket> {
    let mut out = Vec::new();
    if grid.len() < 2 {
        return out;
    }
    let mut x0 = grid[0];
    let mut f0 = f(x0);
    for &x1 in &grid[1..] {
        let f1 = f(x1);
        if f0.is_finite() && f1.is_finite() {
            if f0 == 0.0 {
                out.push(RootBracket { lo: x0, hi: x0, f_lo: 0.0, f_hi: 0.0 });
            } else if f0 * f1 < 0.0 {
                out.push(RootBracket { lo: x0, hi: x1, f_lo: f0, f_hi: f1 });
            }
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        out.push(RootBracket { lo: x0, hi: x0, f_lo: 0.0, f_hi: 0.0 });
    }
    out
}

/// Brackets of sign changes of `f` on `[a, b]`, from a uniform grid of `n`
/// intervals doubled until the bracket count is unchanged twice in a row.
pub fn scan_sign_changes<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, n: usize) -> Vec<RootBracket> {
    let mut n = n.max(2);
    let grid = |n: usize| -> Vec<f64> {
        (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
    };
    let mut prev = sign_changes_on_grid(&mut f, &grid(n));
    let mut stable = 0;
    // 2^12 refinement is far past any sane initial grid.
    for _ in 0..12 {
        n *= 2;
        let next = sign_changes_on_grid(&mut f, &grid(n));
        if next.len() == prev.len() {
            stable += 1;
            prev = next;
            if stable >= 2 {
                break;
            }
        } else {
            stable = 0;
            prev = next;
        }
    }
    prev
}
