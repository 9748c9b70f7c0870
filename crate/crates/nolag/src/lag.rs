//! The lag functional, lag-cancelling polynomial transforms, and the
//! Nyquist moving average.
//!
//! For a finite-window operator whose steady state is
//! `y_n = Σ_j w_j x_{n-p+1+j}`, the lag is `τ·Σ_j w_j(p-1-j)`: the horizontal
//! displacement the filter imposes on a linear trend. Applying a polynomial
//! `P` to the operator multiplies the lag by `P'(1)`, which makes
//! `P = 2X - X²` and `Q = 3X - 3X² + X³` lag-free whenever `P(1) = Q(1) = 1`.
//! The Nyquist moving average cancels lag with a first-order extrapolation of
//! two simple weighted averages instead.

use crate::error::{Error, Result};
use crate::series::OperatorExpr;
use crate::smoothing::Weights;

/// A lag, in the same time units as the series step `tau`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagValue(f64);

impl LagValue {
    pub fn new(value: f64) -> Self {
        LagValue(value)
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Lag of a finite-window operator with steady-state weights `w`:
/// `τ·Σ_j w_j (p-1-j)`.
///
/// The weights may be any finite reals, not only convex combinations.
pub fn lag_of_weights(w: &[f64], tau: f64) -> Result<LagValue> {
    if w.is_empty() {
        return Err(Error::EmptyWeights);
    }
    if let Some(index) = w.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteLagWeight { index });
    }
    if !tau.is_finite() || tau <= 0.0 {
        return Err(Error::InvalidTau(tau));
    }
    let p = w.len();
    let sum: f64 = w
        .iter()
        .enumerate()
        .map(|(j, wj)| wj * (p - 1 - j) as f64)
        .sum();
    Ok(LagValue(tau * sum))
}

/// Lag of `P(M)` given the lag of `M`: `lag(M)·P'(1)` with
/// `P'(1) = Σ_k k·a_k`.
pub fn lag_of_poly(coeffs: &[f64], base_lag: LagValue) -> LagValue {
    let dp1: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(k, a)| k as f64 * a)
        .sum();
    LagValue(base_lag.value() * dp1)
}

/// `2·base - base²`, the unique lag-free operator of the form
/// `a·base + b·base²` with `a + b = 1`.
pub fn no_lag_quadratic(base: OperatorExpr) -> OperatorExpr {
    OperatorExpr::poly(vec![0.0, 2.0, -1.0], base)
}

/// `3·base - 3·base² + base³`, the cubic lag-free transform.
pub fn no_lag_cubic(base: OperatorExpr) -> OperatorExpr {
    OperatorExpr::poly(vec![0.0, 3.0, -3.0, 1.0], base)
}

/// Periods and extrapolation ratio of a Nyquist moving average.
///
/// Requires `p1 >= 2·p2` (the stability criterion) and `p2 >= 2` so that
/// `alpha = (p1-1)/(p2-1)` is defined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NyquistParams {
    p1: usize,
    p2: usize,
    alpha: f64,
}

impl NyquistParams {
    pub fn new(p1: usize, p2: usize) -> Result<Self> {
        if p2 < 2 {
            return Err(Error::NyquistSlowPeriod { p2 });
        }
        if p1 < 2 * p2 {
            return Err(Error::NyquistUnstable { p1, p2 });
        }
        let alpha = (p1 as f64 - 1.0) / (p2 as f64 - 1.0);
        Ok(Self { p1, p2, alpha })
    }

    pub fn p1(&self) -> usize {
        self.p1
    }

    pub fn p2(&self) -> usize {
        self.p2
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

/// The Nyquist moving average `N_{p1,p2} = (1+α)·M1 - α·M2∘M1`, where `M1`
/// and `M2` are simple weighted moving averages with `p1` and `p2` periods.
/// Both component lags are proportional to `p-1`, so the combination has
/// zero lag.
pub fn nyquist_ma(params: &NyquistParams) -> OperatorExpr {
    let m1 = OperatorExpr::WeightedMa(
        Weights::simple_weighted(params.p1()).expect("p1 >= 4 by construction"),
    );
    let m2 = OperatorExpr::WeightedMa(
        Weights::simple_weighted(params.p2()).expect("p2 >= 2 by construction"),
    );
    let alpha = params.alpha();
    OperatorExpr::lin_comb(vec![
        (1.0 + alpha, m1.clone()),
        (-alpha, OperatorExpr::compose(m2, m1)),
    ])
}

/// Convenience constructor: validated params, then the operator.
pub fn nyquist_op(p1: usize, p2: usize) -> Result<OperatorExpr> {
    Ok(nyquist_ma(&NyquistParams::new(p1, p2)?))
}
