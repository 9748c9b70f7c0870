//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("series must contain at least one value")]
    EmptySeries,
    #[error("series value at index {index} is not finite")]
    NonFiniteValue { index: usize },
    #[error("time step must be positive and finite, got {0}")]
    InvalidTau(f64),

    #[error("weight vector must not be empty")]
    EmptyWeights,
    #[error("weight at index {index} must be strictly positive and finite, got {value}")]
    InvalidWeight { index: usize, value: f64 },
    #[error("weights must sum to 1 within 1e-12, got {sum}")]
    WeightSum { sum: f64 },
    #[error("period count must be at least 1")]
    ZeroPeriods,
    #[error("smoothing factor must lie strictly between 0 and 1, got {0}")]
    InvalidAlpha(f64),
    #[error("{0} periods do not define a smoothing factor strictly between 0 and 1")]
    InvalidEmaPeriods(usize),

    #[error("lag weight at index {index} is not finite")]
    NonFiniteLagWeight { index: usize },
    #[error("nyquist stability requires p1 >= 2*p2, got p1={p1}, p2={p2}")]
    NyquistUnstable { p1: usize, p2: usize },
    #[error("nyquist slow component requires p2 >= 2, got p2={p2}")]
    NyquistSlowPeriod { p2: usize },

    #[error("signal has {signal} entries but price series has {prices}")]
    LengthMismatch { prices: usize, signal: usize },
    #[error("backtest needs at least 2 bars, got {0}")]
    SeriesTooShort(usize),
    #[error("transaction cost must be non-negative and finite, got {0}")]
    InvalidCost(f64),
    #[error("contract multiplier must be positive and finite, got {0}")]
    InvalidMultiplier(f64),
    #[error("signal sequence must start with B")]
    SignalStart,

    #[error("{path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: expected header 'date,close'")]
    BadHeader { path: String },
    #[error("{path}: no records")]
    NoRecords { path: String },
    #[error("{path} line {line}: {msg}")]
    MalformedRecord { path: String, line: u64, msg: String },

    #[error("mode '{mode}' requires a single variant, not 'all'")]
    VariantAllUnsupported { mode: String },
    #[error("--json applies to report mode only")]
    JsonUnsupported,
    #[error("output: {0}")]
    Output(#[source] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
