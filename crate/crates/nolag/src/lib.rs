//! Zero-lag technical indicators built from a small operator algebra over
//! finite price series, plus the three-color impulse systems and a minimal
//! stop-and-reverse backtester with a full metrics report.
//!
//! The building blocks are weighted and exponential moving averages as
//! length-preserving linear operators. Operators compose, combine linearly,
//! and accept polynomial transforms; with the lag functional this yields the
//! zero-lag constructions `2M - M²`, `3M - 3M² + M³` and the Nyquist moving
//! average, and on top of those the MACD families and impulse systems.

pub mod backtest;
pub mod cli;
pub mod data;
pub mod error;
pub mod indicators;
pub mod lag;
pub mod series;
pub mod smoothing;

pub use backtest::{compute_report, run_backtest, BacktestConfig, BacktestReport, Direction, Trade, TradeLedger};
pub use error::{Error, Result};
pub use indicators::{impulse, macd, MacdTriple, SignalColor, SignalSeries, Variant};
pub use lag::{lag_of_poly, lag_of_weights, no_lag_cubic, no_lag_quadratic, nyquist_ma, nyquist_op, LagValue, NyquistParams};
pub use series::{OperatorExpr, Series};
pub use smoothing::{ema, ema_closed_form, weighted_ma, EmaParam, Weights};
