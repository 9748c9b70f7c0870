//! Stop-and-reverse backtest driven by an impulse color sequence, plus the
//! report metrics.
//!
//! The position state machine holds at most one contract: green covers a
//! short and opens a long, red covers a long and opens a short, blue holds.
//! Fills happen at the close of the signal bar. By default any open position
//! is force-closed one bar before the end of the data, and no entry is taken
//! at or after that bar.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::indicators::SignalColor;
use crate::series::Series;

/// Costs and conventions of a backtest run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BacktestConfig {
    /// Dollars paid per entry and per exit (a round trip pays twice).
    pub cost_per_side: f64,
    /// Dollars of pnl per index point per contract.
    pub contract_multiplier: f64,
    /// Force-close open positions one bar before the last one.
    pub close_before_end: bool,
}

impl Default for BacktestConfig {
    fn default() -> Self {
        Self {
            cost_per_side: 3.0,
            contract_multiplier: 50.0,
            close_before_end: true,
        }
    }
}

impl BacktestConfig {
    fn validate(&self) -> Result<()> {
        if !self.cost_per_side.is_finite() || self.cost_per_side < 0.0 {
            return Err(Error::InvalidCost(self.cost_per_side));
        }
        if !self.contract_multiplier.is_finite() || self.contract_multiplier <= 0.0 {
            return Err(Error::InvalidMultiplier(self.contract_multiplier));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Long,
    Short,
}

impl Direction {
    pub fn sign(&self) -> f64 {
        match self {
            Direction::Long => 1.0,
            Direction::Short => -1.0,
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Long => "long",
            Direction::Short => "short",
        })
    }
}

/// One round trip: entry and exit fills with gross and net pnl.
#[derive(Debug, Clone, PartialEq)]
pub struct Trade {
    pub direction: Direction,
    pub entry_index: usize,
    pub exit_index: usize,
    pub entry_price: f64,
    pub exit_price: f64,
    pub gross_pnl: f64,
    pub net_pnl: f64,
}

/// The trades of one run, in entry order, with the config that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeLedger {
    trades: Vec<Trade>,
    config: BacktestConfig,
}

impl TradeLedger {
    pub fn trades(&self) -> &[Trade] {
        &self.trades
    }

    pub fn config(&self) -> &BacktestConfig {
        &self.config
    }

    pub fn len(&self) -> usize {
        self.trades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trades.is_empty()
    }
}

fn close_trade(
    direction: Direction,
    entry_index: usize,
    exit_index: usize,
    x: &Series,
    config: &BacktestConfig,
) -> Trade {
    let entry_price = x[entry_index];
    let exit_price = x[exit_index];
    let gross_pnl = direction.sign() * (exit_price - entry_price) * config.contract_multiplier;
    let net_pnl = gross_pnl - 2.0 * config.cost_per_side;
    Trade {
        direction,
        entry_index,
        exit_index,
        entry_price,
        exit_price,
        gross_pnl,
        net_pnl,
    }
}

/// Run the signal-driven state machine over a price series.
///
/// With `close_before_end` the force-close bar is the second-to-last one,
/// otherwise the last one; either way no position is entered at or after the
/// force-close bar, so every recorded trade has `entry_index < exit_index`.
pub fn run_backtest(
    x: &Series,
    colors: &[SignalColor],
    config: &BacktestConfig,
) -> Result<TradeLedger> {
    config.validate()?;
    if colors.len() != x.len() {
        return Err(Error::LengthMismatch {
            prices: x.len(),
            signal: colors.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::SeriesTooShort(x.len()));
    }
    let d = x.len() - 1;
    let force_index = if config.close_before_end { d - 1 } else { d };

    let mut open: Option<(Direction, usize)> = None;
    let mut trades = Vec::new();
    for (n, color) in colors.iter().enumerate() {
        match color {
            SignalColor::Green => {
                if let Some((Direction::Short, entry)) = open {
                    trades.push(close_trade(Direction::Short, entry, n, x, config));
                    open = None;
                }
                if open.is_none() && n < force_index {
                    open = Some((Direction::Long, n));
                }
            }
            SignalColor::Red => {
                if let Some((Direction::Long, entry)) = open {
                    trades.push(close_trade(Direction::Long, entry, n, x, config));
                    open = None;
                }
                if open.is_none() && n < force_index {
                    open = Some((Direction::Short, n));
                }
            }
            SignalColor::Blue => {}
        }
        if n == force_index {
            if let Some((direction, entry)) = open.take() {
                trades.push(close_trade(direction, entry, n, x, config));
            }
        }
    }
    Ok(TradeLedger {
        trades,
        config: *config,
    })
}

/// Flags marking statistics whose denominator was empty; the value itself is
/// reported as 0 so machine-readable output never carries NaN.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct UndefinedStats {
    pub pct_winning: bool,
    pub avg_net_per_trade: bool,
    pub ap: bool,
    pub al: bool,
    pub avg_net_long: bool,
    pub avg_net_short: bool,
    pub profit_factor: bool,
    pub ratio_ap_al: bool,
    pub ratio_tp_tpi: bool,
}

/// The full metric set for one run. A win is a trade with net pnl
/// strictly greater than zero; everything else counts as a losing trade.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BacktestReport {
    pub n_trades: usize,
    pub n_winning: usize,
    pub n_losing: usize,
    pub n_long: usize,
    pub n_short: usize,
    pub total_net_profit: f64,
    /// Percentage of winning trades, in `[0, 100]`.
    pub pct_winning: f64,
    pub avg_net_per_trade: f64,
    /// Total net profit of winning trades.
    pub tp: f64,
    /// Average net profit per winning trade.
    pub ap: f64,
    /// Total net loss of losing trades (non-positive).
    pub tl: f64,
    /// Average net loss per losing trade (non-positive).
    pub al: f64,
    /// Most negative sum over a maximal run of consecutive losing trades.
    pub greatest_loss_between_wins: f64,
    pub total_net_long: f64,
    pub avg_net_long: f64,
    pub total_net_short: f64,
    pub avg_net_short: f64,
    /// Buy-and-hold benchmark: `(x_d - x_0) * contract_multiplier`.
    pub tpi: f64,
    pub profit_factor: f64,
    pub ratio_ap_al: f64,
    pub ratio_tp_tpi: f64,
    pub undefined: UndefinedStats,
}

/// Compute every report metric from a ledger and the price series it was
/// produced on.
pub fn compute_report(ledger: &TradeLedger, x: &Series) -> BacktestReport {
    let trades = ledger.trades();
    let config = ledger.config();
    let mut undefined = UndefinedStats::default();

    let n_trades = trades.len();
    let total_net_profit: f64 = trades.iter().map(|t| t.net_pnl).sum();

    let n_winning = trades.iter().filter(|t| t.net_pnl > 0.0).count();
    let n_losing = n_trades - n_winning;
    let tp: f64 = trades
        .iter()
        .filter(|t| t.net_pnl > 0.0)
        .map(|t| t.net_pnl)
        .sum();
    let tl: f64 = trades
        .iter()
        .filter(|t| t.net_pnl <= 0.0)
        .map(|t| t.net_pnl)
        .sum();

    let pct_winning = if n_trades > 0 {
        100.0 * n_winning as f64 / n_trades as f64
    } else {
        undefined.pct_winning = true;
        0.0
    };
    let avg_net_per_trade = if n_trades > 0 {
        total_net_profit / n_trades as f64
    } else {
        undefined.avg_net_per_trade = true;
        0.0
    };
    let ap = if n_winning > 0 {
        tp / n_winning as f64
    } else {
        undefined.ap = true;
        0.0
    };
    let al = if n_losing > 0 {
        tl / n_losing as f64
    } else {
        undefined.al = true;
        0.0
    };

    let mut greatest_loss_between_wins = 0.0_f64;
    let mut run = 0.0_f64;
    for t in trades {
        if t.net_pnl > 0.0 {
            greatest_loss_between_wins = greatest_loss_between_wins.min(run);
            run = 0.0;
        } else {
            run += t.net_pnl;
        }
    }
    greatest_loss_between_wins = greatest_loss_between_wins.min(run);

    let n_long = trades
        .iter()
        .filter(|t| t.direction == Direction::Long)
        .count();
    let n_short = n_trades - n_long;
    let total_net_long: f64 = trades
        .iter()
        .filter(|t| t.direction == Direction::Long)
        .map(|t| t.net_pnl)
        .sum();
    let total_net_short: f64 = trades
        .iter()
        .filter(|t| t.direction == Direction::Short)
        .map(|t| t.net_pnl)
        .sum();
    let avg_net_long = if n_long > 0 {
        total_net_long / n_long as f64
    } else {
        undefined.avg_net_long = true;
        0.0
    };
    let avg_net_short = if n_short > 0 {
        total_net_short / n_short as f64
    } else {
        undefined.avg_net_short = true;
        0.0
    };

    let tpi = (x[x.len() - 1] - x[0]) * config.contract_multiplier;
    let profit_factor = if tl != 0.0 {
        tp / tl.abs()
    } else {
        undefined.profit_factor = true;
        0.0
    };
    let ratio_ap_al = if al != 0.0 {
        ap / al.abs()
    } else {
        undefined.ratio_ap_al = true;
        0.0
    };
    let ratio_tp_tpi = if tpi != 0.0 {
        tp / tpi
    } else {
        undefined.ratio_tp_tpi = true;
        0.0
    };

    BacktestReport {
        n_trades,
        n_winning,
        n_losing,
        n_long,
        n_short,
        total_net_profit,
        pct_winning,
        avg_net_per_trade,
        tp,
        ap,
        tl,
        al,
        greatest_loss_between_wins,
        total_net_long,
        avg_net_long,
        total_net_short,
        avg_net_short,
        tpi,
        profit_factor,
        ratio_ap_al,
        ratio_tp_tpi,
        undefined,
    }
}
