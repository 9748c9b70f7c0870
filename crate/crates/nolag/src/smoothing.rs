//! Base smoothers: weighted moving averages and exponential moving averages.
//!
//! A weighted moving average with weights `w = (w_0, …, w_{p-1})` maps `x` to
//!
//! ```text
//! y_n = Σ_{j=p-1-n..p-1} w_j x_{n-p+1+j} / Σ_{j=p-1-n..p-1} w_j   for n <= p-2
//! y_n = Σ_{j=0..p-1} w_j x_{n-p+1+j}                              for n >= p-1
//! ```
//!
//! so the first `p-1` outputs are renormalized over the samples that exist.
//! The exponential moving average of factor `alpha` is the recursion
//! `y_0 = x_0`, `y_n = alpha·x_n + (1-alpha)·y_{n-1}`.

use crate::error::{Error, Result};
use crate::series::Series;

/// Strictly positive weights that sum to 1 (renormalized on construction).
#[derive(Debug, Clone, PartialEq)]
pub struct Weights {
    w: Vec<f64>,
}

impl Weights {
    /// Validates positivity and `|Σw - 1| <= 1e-12`, then renormalizes so the
    /// stored sum is 1 at machine precision.
    pub fn new(w: Vec<f64>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWeights);
        }
        for (index, &value) in w.iter().enumerate() {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidWeight { index, value });
            }
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::WeightSum { sum });
        }
        let w = w.into_iter().map(|v| v / sum).collect();
        Ok(Self { w })
    }

    /// Uniform weights `1/p`, the classical moving average.
    pub fn classical(periods: usize) -> Result<Self> {
        if periods == 0 {
            return Err(Error::ZeroPeriods);
        }
        Self::new(vec![1.0 / periods as f64; periods])
    }

    /// Linearly increasing weights `2(j+1)/(p(p+1))`, the simple weighted
    /// moving average.
    pub fn simple_weighted(periods: usize) -> Result<Self> {
        if periods == 0 {
            return Err(Error::ZeroPeriods);
        }
        let p = periods as f64;
        let scale = 2.0 / (p * (p + 1.0));
        Self::new((1..=periods).map(|j| scale * j as f64).collect())
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }
}

/// Smoothing factor for an exponential moving average, with the period count
/// that produced it when built from `alpha = 2/(p+1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmaParam {
    alpha: f64,
    periods: Option<usize>,
}

impl EmaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(Self {
            alpha,
            periods: None,
        })
    }

    /// `alpha = 2/(p+1)`; requires `p >= 2` so that `alpha < 1`.
    pub fn from_periods(periods: usize) -> Result<Self> {
        if periods < 2 {
            return Err(Error::InvalidEmaPeriods(periods));
        }
        Ok(Self {
            alpha: 2.0 / (periods as f64 + 1.0),
            periods: Some(periods),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn periods(&self) -> Option<usize> {
        self.periods
    }
}

/// Weighted moving average with renormalized warm-up.
///
/// Each window is averaged relative to its newest sample, so a constant
/// window is an exact fixed point at every index.
pub fn weighted_ma(weights: &Weights, x: &Series) -> Series {
    let w = weights.as_slice();
    let p = w.len();
    let v = x.values();
    let mut out = Vec::with_capacity(v.len());
    for n in 0..v.len() {
        let lo = if n + 1 < p { p - 1 - n } else { 0 };
        let newest = v[n];
        let mut dot = 0.0;
        let mut wsum = 0.0;
        for (j, &wj) in w.iter().enumerate().skip(lo) {
            dot += wj * (v[n + 1 + j - p] - newest);
            wsum += wj;
        }
        out.push(newest + dot / wsum);
    }
    Series::from_raw(out, x.tau())
}

/// Exponential moving average, `y_0 = x_0` and
/// `y_n = alpha·x_n + (1-alpha)·y_{n-1}`.
///
/// The update is computed incrementally as `y += alpha·(x - y)`, which is the
/// same recursion and keeps constant inputs exact fixed points.
pub fn ema(param: EmaParam, x: &Series) -> Series {
    let alpha = param.alpha();
    let v = x.values();
    let mut out = Vec::with_capacity(v.len());
    let mut y = v[0];
    out.push(y);
    for &xi in &v[1..] {
        y += alpha * (xi - y);
        out.push(y);
    }
    Series::from_raw(out, x.tau())
}

/// Closed form of the EMA recursion,
/// `y_n = (1-alpha)^n x_0 + alpha Σ_{j=1..n} (1-alpha)^{n-j} x_j`.
///
/// Kept as a second, direct-summation route so the recursion can be checked
/// against it.
pub fn ema_closed_form(param: EmaParam, x: &Series) -> Series {
    let alpha = param.alpha();
    let q = 1.0 - alpha;
    let v = x.values();
    let mut out = Vec::with_capacity(v.len());
    for n in 0..v.len() {
        let mut pw = 1.0;
        let mut y = 0.0;
        for j in (1..=n).rev() {
            y += alpha * pw * v[j];
            pw *= q;
        }
        y += pw * v[0];
        out.push(y);
    }
    Series::from_raw(out, x.tau())
}
