//! Monte Carlo estimates of `V(ε) = vol{w in box : |f(w)| <= ε}` and a
//! least-squares fit of `log V = log C + λ log ε + (m - 1) log(-log ε)`.
//!
//! Sampling is counter based: the sample stream is cut into fixed-size
//! chunks and chunk `k` draws from a ChaCha stream keyed by `(seed, k)`, so
//! estimates are identical no matter how rayon schedules the chunks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::NormalizedArrangement;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

const CHUNK: u64 = 1 << 14;

pub const DEFAULT_EPS_MIN: f64 = 1e-6;
pub const DEFAULT_EPS_MAX: f64 = 1e-2;
pub const DEFAULT_EPS_POINTS: usize = 9;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

/// Axis-aligned box with rational bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SamplingBox {
    #[serde(serialize_with = "serialize_bounds")]
    bounds: Vec<(Rational, Rational)>,
}

fn serialize_bounds<S: serde::Serializer>(b: &[(Rational, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(b.len()))?;
    for (lo, hi) in b {
        seq.serialize_element(&[rational::format(lo), rational::format(hi)])?;
    }
    seq.end()
}

impl SamplingBox {
    pub fn new(bounds: Vec<(Rational, Rational)>) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::Domain("box needs at least one coordinate".into()));
        }
        if let Some(i) = bounds.iter().position(|(lo, hi)| lo >= hi) {
            return Err(Error::Domain(format!("box is degenerate in coordinate {i}")));
        }
        Ok(Self { bounds })
    }

    /// `[-1, 1]^d`.
    pub fn symmetric_unit(d: usize) -> Self {
        Self { bounds: vec![(rational::int(-1), rational::int(1)); d] }
    }

    /// Parses `"lo,hi;lo,hi;..."`.
    pub fn parse(text: &str) -> Result<Self> {
        let bounds = text
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|pair| {
                let (lo, hi) = pair
                    .split_once(',')
                    .ok_or_else(|| Error::Domain(format!("box interval `{pair}` is not `lo,hi`")))?;
                Ok((rational::parse(lo)?, rational::parse(hi)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bounds)
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn volume(&self) -> f64 {
        self.bounds.iter().map(|(lo, hi)| rational::to_f64(&(hi - lo))).product()
    }

    fn float_bounds(&self) -> Vec<(f64, f64)> {
        self.bounds.iter().map(|(lo, hi)| (rational::to_f64(lo), rational::to_f64(hi))).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VolumeSample {
    pub epsilon: f64,
    pub volume_estimate: f64,
    pub std_error: f64,
    pub sample_count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticFit {
    pub lambda_hat: f64,
    pub m_hat: f64,
    pub log_c_hat: f64,
    pub residual_norm: f64,
}

/// `points` values geometrically spaced from `min` to `max`, ascending.
pub fn geometric_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    if !(min > 0.0 && max >= min && min.is_finite() && max.is_finite()) || points == 0 {
        return Err(Error::Domain(format!("invalid epsilon grid {min}..{max} with {points} points")));
    }
    if points == 1 {
        return Ok(vec![min]);
    }
    let (a, b) = (min.ln(), max.ln());
    Ok((0..points)
        .map(|i| (a + (b - a) * i as f64 / (points - 1) as f64).exp())
        .collect())
}

pub fn estimate_volume(
    arr: &NormalizedArrangement,
    region: &SamplingBox,
    epsilon: f64,
    samples: u64,
    seed: u64,
) -> Result<VolumeSample> {
    Ok(estimate_volume_grid(arr, region, &[epsilon], samples, seed)?.remove(0))
}

/// Estimates `V(ε)` for every ε from one shared point set, so estimates are
/// non-decreasing in ε.
pub fn estimate_volume_grid(
    arr: &NormalizedArrangement,
    region: &SamplingBox,
    epsilons: &[f64],
    samples: u64,
    seed: u64,
) -> Result<Vec<VolumeSample>> {
    if region.dim() != arr.dim() {
        return Err(Error::Dimension(format!(
            "box has {} coordinates, arrangement has {}",
            region.dim(),
            arr.dim()
        )));
    }
    if samples == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    if let Some(e) = epsilons.iter().find(|e| !(**e > 0.0 && e.is_finite())) {
        return Err(Error::Domain(format!("epsilon must be positive, got {e}")));
    }
    let forms = arr.float_evaluator();
    let bounds = region.float_bounds();
    let chunks = samples.div_ceil(CHUNK);

    let hits = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let len = CHUNK.min(samples - k * CHUNK);
            let mut counts = vec![0u64; epsilons.len()];
            let mut w = vec![0.0; bounds.len()];
            for _ in 0..len {
                for (x, (lo, hi)) in w.iter_mut().zip(&bounds) {
                    *x = lo + (hi - lo) * rng.gen::<f64>();
                }
                let v = forms.abs_value(&w);
                for (c, e) in counts.iter_mut().zip(epsilons) {
                    if v <= *e {
                        *c += 1;
                    }
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; epsilons.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let total = region.volume();
    Ok(epsilons
        .iter()
        .zip(hits)
        .map(|(&epsilon, h)| {
            let p = h as f64 / samples as f64;
            VolumeSample {
                epsilon,
                volume_estimate: total * p,
                std_error: total * (p * (1.0 - p) / samples as f64).sqrt(),
                sample_count: samples,
            }
        })
        .collect())
}

/// Noise-free samples of `C ε^λ (-ln ε)^(m-1)`, for self-checks.
pub fn synthetic_samples(lambda: f64, m: f64, c: f64, epsilons: &[f64]) -> Vec<VolumeSample> {
    epsilons
        .iter()
        .map(|&e| VolumeSample {
            epsilon: e,
            volume_estimate: c * e.powf(lambda) * (-e.ln()).powf(m - 1.0),
            std_error: 0.0,
            sample_count: 0,
        })
        .collect()
}

struct Regression {
    log_eps: Vec<f64>,
    log_log: Vec<f64>,
    log_v: Vec<f64>,
}

fn prepare(samples: &[VolumeSample]) -> Result<Regression> {
    if let Some(s) = samples.iter().find(|s| !(s.epsilon > 0.0 && s.epsilon < 1.0)) {
        return Err(Error::Domain(format!("fit needs 0 < ε < 1, got {}", s.epsilon)));
    }
    if samples.iter().any(|s| s.volume_estimate <= 0.0) {
        return Err(Error::InsufficientData(
            "a volume estimate is zero; increase the sample count or raise the smallest epsilon".into(),
        ));
    }
    let mut eps: Vec<f64> = samples.iter().map(|s| s.epsilon).collect();
    eps.sort_by(f64::total_cmp);
    eps.dedup();
    if eps.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "need at least 3 distinct epsilons, got {}",
            eps.len()
        )));
    }
    Ok(Regression {
        log_eps: samples.iter().map(|s| s.epsilon.ln()).collect(),
        log_log: samples.iter().map(|s| (-s.epsilon.ln()).ln()).collect(),
        log_v: samples.iter().map(|s| s.volume_estimate.ln()).collect(),
    })
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn centered(v: &[f64]) -> Vec<f64> {
    let m = mean(v);
    v.iter().map(|x| x - m).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn residual_norm(r: &Regression, log_c: f64, lambda: f64, m: f64) -> f64 {
    (0..r.log_v.len())
        .map(|i| {
            let e = r.log_v[i] - log_c - lambda * r.log_eps[i] - (m - 1.0) * r.log_log[i];
            e * e
        })
        .sum::<f64>()
        .sqrt()
}

/// Ordinary least squares on both exponents.
pub fn fit_asymptotics(samples: &[VolumeSample]) -> Result<AsymptoticFit> {
    let r = prepare(samples)?;
    let (x1, x2, y) = (centered(&r.log_eps), centered(&r.log_log), centered(&r.log_v));
    let (a11, a12, a22) = (dot(&x1, &x1), dot(&x1, &x2), dot(&x2, &x2));
    let (b1, b2) = (dot(&x1, &y), dot(&x2, &y));
    let det = a11 * a22 - a12 * a12;
    if det.abs() <= 1e-12 * a11 * a22 {
        return Err(Error::InsufficientData("epsilon grid does not separate the two exponents".into()));
    }
    let lambda = (b1 * a22 - b2 * a12) / det;
    let slope_m = (a11 * b2 - a12 * b1) / det;
    let m = slope_m + 1.0;
    let log_c = mean(&r.log_v) - lambda * mean(&r.log_eps) - slope_m * mean(&r.log_log);
    Ok(AsymptoticFit { lambda_hat: lambda, m_hat: m, log_c_hat: log_c, residual_norm: residual_norm(&r, log_c, lambda, m) })
}

/// Fits λ and `log C` with `m` held fixed.
pub fn fit_lambda_given_m(samples: &[VolumeSample], m: f64) -> Result<AsymptoticFit> {
    let r = prepare(samples)?;
    let y: Vec<f64> = r.log_v.iter().zip(&r.log_log).map(|(v, l)| v - (m - 1.0) * l).collect();
    let x = centered(&r.log_eps);
    let lambda = dot(&x, &centered(&y)) / dot(&x, &x);
    let log_c = mean(&y) - lambda * mean(&r.log_eps);
    Ok(AsymptoticFit { lambda_hat: lambda, m_hat: m, log_c_hat: log_c, residual_norm: residual_norm(&r, log_c, lambda, m) })
}

/// Fits `m` and `log C` with λ held fixed.
pub fn fit_m_given_lambda(samples: &[VolumeSample], lambda: f64) -> Result<AsymptoticFit> {
    let r = prepare(samples)?;
    let y: Vec<f64> = r.log_v.iter().zip(&r.log_eps).map(|(v, e)| v - lambda * e).collect();
    let x = centered(&r.log_log);
    let slope = dot(&x, &centered(&y)) / dot(&x, &x);
    let m = slope + 1.0;
    let log_c = mean(&y) - slope * mean(&r.log_log);
    Ok(AsymptoticFit { lambda_hat: lambda, m_hat: m, log_c_hat: log_c, residual_norm: residual_norm(&r, log_c, lambda, m) })
}
