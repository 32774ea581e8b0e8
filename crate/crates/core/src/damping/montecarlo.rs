//! Monte-Carlo oracle: the energy delta in the three-dimensional rate
//! integrals is replaced by a normalised Gaussian of width ε and the d³p
//! integral is sampled uniformly over a ball. The mollified integral differs
//! from the exact rate by O(ε²).
//!
//! Samples are drawn in fixed-size chunks, chunk c from the ChaCha stream c of
//! the seed, and merged in chunk order, so the result does not depend on the
//! number of worker threads.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bogoliubov::{omega_bg, Dispersion};
use crate::error::{Error, Result};
use crate::params::GasParameters;
use crate::potential::PotentialModel;
use crate::vertices::vertex_j;

use super::support::{detect_support, SupportCoordinate};
use super::thermal::{beliaev_weight, landau_weight};
use super::Process;

/// Samples per independent RNG stream.
pub const MC_CHUNK: usize = 1 << 16;
/// Landau sampling ball: |p| with β(ω_bg(p) − u_min) up to this value,
/// u_min the lower edge of the support. The weight left outside is a few
/// 1e-3 of the total; a smaller ball shows a visible bias.
const LANDAU_THERMAL_CUT: f64 = 10.0;
const MIN_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub samples: usize,
    pub ball_radius: f64,
    pub epsilon: f64,
}

/// Running (count, mean, M2), merged pairwise.
#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1.0;
        let d = x - self.mean;
        self.mean += d / self.n;
        self.m2 += d * (x - self.mean);
    }

    fn merge(self, o: Moments) -> Moments {
        if self.n == 0.0 {
            return o;
        }
        if o.n == 0.0 {
            return self;
        }
        let n = self.n + o.n;
        let d = o.mean - self.mean;
        Moments {
            n,
            mean: self.mean + d * o.n / n,
            m2: self.m2 + o.m2 + d * d * self.n * o.n / n,
        }
    }
}

fn mollifier(x: f64, eps: f64) -> f64 {
    (-0.5 * (x / eps).powi(2)).exp() / ((2.0 * PI).sqrt() * eps)
}

struct Sampler<'a> {
    params: &'a GasParameters,
    model: &'a PotentialModel,
    process: Process,
    k: f64,
    omega_k: f64,
    eps: f64,
    radius: f64,
    /// Ball volume times the process prefactor.
    weight: f64,
}

impl Sampler<'_> {
    /// Integrand at |p| = p, cos ϑ = c; q = |k − p|.
    fn value(&self, p: f64, c: f64) -> Result<f64> {
        let k = self.k;
        let q = (k * k + p * p - 2.0 * k * p * c).max(0.0).sqrt();
        if p == 0.0 || q == 0.0 {
            return Ok(0.0);
        }
        let (wp, wq) = (omega_bg(self.params, self.model, p)?, omega_bg(self.params, self.model, q)?);
        let beta = self.params.beta();
        let (gap, j, th) = match self.process {
            Process::Beliaev => {
                let gap = self.omega_k - wp - wq;
                // Far outside the shell the mollifier is exactly 0 anyway.
                if gap.abs() > 40.0 * self.eps {
                    return Ok(0.0);
                }
                (gap, vertex_j(self.params, self.model, k, p, q)?, beliaev_weight(beta, self.omega_k, wp, wq))
            }
            Process::Landau => {
                let gap = wq - wp - self.omega_k;
                if gap.abs() > 40.0 * self.eps {
                    return Ok(0.0);
                }
                (gap, vertex_j(self.params, self.model, q, k, p)?, landau_weight(beta, self.omega_k, wp, wq))
            }
        };
        Ok(self.weight * j * j * th * mollifier(gap, self.eps))
    }

    fn chunk(&self, seed: u64, index: u64, n: usize) -> Result<Moments> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let mut m = Moments::default();
        for _ in 0..n {
            let u: f64 = rng.gen();
            let c: f64 = rng.gen_range(-1.0..=1.0);
            let p = self.radius * (1.0 - u).cbrt();
            m.push(self.value(p, c)?);
        }
        Ok(m)
    }
}

/// Mollified-delta estimate of γ_B or γ_L with its standard error.
/// Deterministic in `seed` and independent of the thread count.
pub fn mc_oracle(
    params: &GasParameters,
    model: &PotentialModel,
    k: f64,
    process: Process,
    epsilon: f64,
    n_samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::Domain { what: "mollifier width must be > 0", at: epsilon });
    }
    if n_samples < MIN_SAMPLES {
        return Err(Error::Domain { what: "Monte-Carlo oracle needs at least 1e4 samples", at: n_samples as f64 });
    }
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Domain { what: "rates need a momentum k > 0", at: k });
    }
    let omega_k = omega_bg(params, model, k)?;
    let beta = params.beta();
    let e_ball = match process {
        Process::Beliaev => omega_k + 5.0 * epsilon,
        Process::Landau => {
            let support = detect_support(params, model, k, process)?;
            let u_min = match (support.coordinate, support.segments.first()) {
                (_, None) => 0.0,
                (SupportCoordinate::LandauT, Some(s)) => s.lo / beta,
                (_, Some(s)) => omega_bg(params, model, s.lo)?,
            };
            u_min + LANDAU_THERMAL_CUT / beta
        }
    };
    let disp = Dispersion::covering_energy(params, model, e_ball)?;
    let radius = disp.sup_p_below(e_ball)?;
    let volume = 4.0 / 3.0 * PI * radius.powi(3);
    // γ_B = (π/2)(2π)⁻³ ∫d³p …, γ_L = π (2π)⁻³ ∫d³p …
    let pref = match process {
        Process::Beliaev => 0.5 * PI,
        Process::Landau => PI,
    } / (2.0 * PI).powi(3);
    let sampler = Sampler {
        params,
        model,
        process,
        k,
        omega_k,
        eps: epsilon,
        radius,
        weight: pref * volume,
    };
    let n_chunks = n_samples.div_ceil(MC_CHUNK);
    let parts: Vec<Result<Moments>> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let n = MC_CHUNK.min(n_samples - c * MC_CHUNK);
            sampler.chunk(seed, c as u64, n)
        })
        .collect();
    let mut total = Moments::default();
    for p in parts {
        total = total.merge(p?);
    }
    let var = if total.n > 1.0 { total.m2 / (total.n - 1.0) } else { 0.0 };
    Ok(McEstimate {
        estimate: total.mean,
        stderr: (var / total.n).sqrt(),
        samples: n_samples,
        ball_radius: radius,
        epsilon,
    })
}
