//! Finite price/indicator sequences and the operator algebra built on them.
//!
//! A [`Series`] is a finite prefix of a bounded sequence together with the
//! sampling step `tau`. An [`OperatorExpr`] describes a linear sequence
//! operator: a base smoother, a composition, a linear combination, or a
//! polynomial in an operator. Evaluation preserves length and `tau` and is
//! linear in the input.

use crate::error::{Error, Result};
use crate::smoothing::{self, EmaParam, Weights};

/// A non-empty sequence of finite values sampled every `tau` units of time.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    values: Vec<f64>,
    tau: f64,
}

impl Series {
    pub fn new(values: Vec<f64>, tau: f64) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        if !tau.is_finite() || tau <= 0.0 {
            return Err(Error::InvalidTau(tau));
        }
        Ok(Self { values, tau })
    }

    /// Series with `tau = 1`, the convention for daily bars.
    pub fn with_unit_tau(values: Vec<f64>) -> Result<Self> {
        Self::new(values, 1.0)
    }

    /// Internal constructor for values produced by evaluation; skips checks.
    pub(crate) fn from_raw(values: Vec<f64>, tau: f64) -> Self {
        debug_assert!(!values.is_empty());
        Self { values, tau }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Max of `|values|` over the computed prefix.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl std::ops::Index<usize> for Series {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.values[index]
    }
}

/// Composable description of a linear sequence operator.
///
/// Base smoothers carry their own warm-up rule; composite expressions apply
/// each stage's rule in turn, so every input sample contributes from index 0.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorExpr {
    Identity,
    WeightedMa(Weights),
    Ema(EmaParam),
    Compose {
        outer: Box<OperatorExpr>,
        inner: Box<OperatorExpr>,
    },
    LinComb(Vec<(f64, OperatorExpr)>),
    /// `coeffs[k]` multiplies the k-fold application of `operand`;
    /// the degree-0 term acts as the identity.
    Poly {
        coeffs: Vec<f64>,
        operand: Box<OperatorExpr>,
    },
}

impl OperatorExpr {
    pub fn identity() -> Self {
        OperatorExpr::Identity
    }

    pub fn weighted_ma(weights: Weights) -> Self {
        OperatorExpr::WeightedMa(weights)
    }

    pub fn ema(param: EmaParam) -> Self {
        OperatorExpr::Ema(param)
    }

    /// Classical moving average with `p` periods (uniform weights).
    pub fn classical_ma(periods: usize) -> Result<Self> {
        Ok(OperatorExpr::WeightedMa(Weights::classical(periods)?))
    }

    /// Simple weighted moving average with `p` periods (linearly increasing weights).
    pub fn simple_weighted_ma(periods: usize) -> Result<Self> {
        Ok(OperatorExpr::WeightedMa(Weights::simple_weighted(periods)?))
    }

    /// `outer ∘ inner`: `inner` is evaluated first.
    pub fn compose(outer: OperatorExpr, inner: OperatorExpr) -> Self {
        OperatorExpr::Compose {
            outer: Box::new(outer),
            inner: Box::new(inner),
        }
    }

    pub fn lin_comb(terms: Vec<(f64, OperatorExpr)>) -> Self {
        OperatorExpr::LinComb(terms)
    }

    pub fn poly(coeffs: Vec<f64>, operand: OperatorExpr) -> Self {
        OperatorExpr::Poly {
            coeffs,
            operand: Box::new(operand),
        }
    }

    /// Apply the operator to a series. Output has the same length and `tau`.
    pub fn eval(&self, x: &Series) -> Series {
        match self {
            OperatorExpr::Identity => x.clone(),
            OperatorExpr::WeightedMa(w) => smoothing::weighted_ma(w, x),
            OperatorExpr::Ema(param) => smoothing::ema(*param, x),
            OperatorExpr::Compose { outer, inner } => outer.eval(&inner.eval(x)),
            OperatorExpr::LinComb(terms) => {
                let mut acc = vec![0.0; x.len()];
                for (coeff, op) in terms {
                    let term = op.eval(x);
                    for (a, v) in acc.iter_mut().zip(term.values()) {
                        *a += coeff * v;
                    }
                }
                Series::from_raw(acc, x.tau())
            }
            OperatorExpr::Poly { coeffs, operand } => {
                let mut acc = vec![0.0; x.len()];
                let mut power = x.clone();
                for (k, coeff) in coeffs.iter().enumerate() {
                    if k > 0 {
                        power = operand.eval(&power);
                    }
                    for (a, v) in acc.iter_mut().zip(power.values()) {
                        *a += coeff * v;
                    }
                }
                Series::from_raw(acc, x.tau())
            }
        }
    }
}
