//! Independent reference implementations used to check the library.
//!
//! Everything here works on plain `Vec<f64>` with direct summation or the
//! literal recursions, deliberately avoiding the operator machinery under
//! test.

#![allow(dead_code)]

use nolag::backtest::{BacktestReport, Direction, Trade, UndefinedStats};
use nolag::indicators::{SignalColor, Variant};

pub const EMA_ALPHA_12: f64 = 2.0 / 13.0;
pub const EMA_ALPHA_26: f64 = 2.0 / 27.0;
pub const EMA_ALPHA_9: f64 = 2.0 / 10.0;

pub fn ramp(len: usize) -> Vec<f64> {
    (0..len).map(|n| n as f64).collect()
}

pub fn classical_weights(p: usize) -> Vec<f64> {
    vec![1.0 / p as f64; p]
}

pub fn simple_weights(p: usize) -> Vec<f64> {
    let pf = p as f64;
    (1..=p).map(|j| 2.0 * j as f64 / (pf * (pf + 1.0))).collect()
}

/// Weighted moving average by direct summation, renormalized warm-up.
pub fn oracle_wma(w: &[f64], xs: &[f64]) -> Vec<f64> {
    let p = w.len();
    (0..xs.len())
        .map(|n| {
            if n + 1 < p {
                let lo = p - 1 - n;
                let num: f64 = (lo..p).map(|j| w[j] * xs[n + 1 + j - p]).sum();
                let den: f64 = (lo..p).map(|j| w[j]).sum();
                num / den
            } else {
                (0..p).map(|j| w[j] * xs[n + 1 + j - p]).sum()
            }
        })
        .collect()
}

/// The literal EMA recursion `y_n = alpha x_n + (1-alpha) y_{n-1}`.
pub fn oracle_ema(alpha: f64, xs: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(xs.len());
    out.push(xs[0]);
    for n in 1..xs.len() {
        out.push(alpha * xs[n] + (1.0 - alpha) * out[n - 1]);
    }
    out
}

/// `2E - E∘E` expanded leg by leg.
pub fn oracle_no_lag_ema(alpha: f64, xs: &[f64]) -> Vec<f64> {
    let e1 = oracle_ema(alpha, xs);
    let e2 = oracle_ema(alpha, &e1);
    e1.iter().zip(&e2).map(|(a, b)| 2.0 * a - b).collect()
}

/// `(1+alpha) m1 - alpha m2∘m1` with simple weighted components.
pub fn oracle_nyquist(p1: usize, p2: usize, xs: &[f64]) -> Vec<f64> {
    let m1 = oracle_wma(&simple_weights(p1), xs);
    let m2 = oracle_wma(&simple_weights(p2), &m1);
    let alpha = (p1 as f64 - 1.0) / (p2 as f64 - 1.0);
    m1.iter()
        .zip(&m2)
        .map(|(a, b)| (1.0 + alpha) * a - alpha * b)
        .collect()
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The fast line each impulse variant compares bar over bar.
pub fn oracle_fast_line(variant: Variant, xs: &[f64]) -> Vec<f64> {
    match variant {
        Variant::Classic => oracle_ema(EMA_ALPHA_12, xs),
        Variant::NoLag => oracle_no_lag_ema(EMA_ALPHA_12, xs),
        Variant::Nyquist => oracle_nyquist(12, 3, xs),
    }
}

/// MACD, signal line, histogram for a variant.
pub fn oracle_macd_triple(variant: Variant, xs: &[f64]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let (fast, slow): (Vec<f64>, Vec<f64>) = match variant {
        Variant::Classic => (oracle_ema(EMA_ALPHA_12, xs), oracle_ema(EMA_ALPHA_26, xs)),
        Variant::NoLag => (
            oracle_no_lag_ema(EMA_ALPHA_12, xs),
            oracle_no_lag_ema(EMA_ALPHA_26, xs),
        ),
        Variant::Nyquist => (oracle_nyquist(12, 3, xs), oracle_nyquist(26, 6, xs)),
    };
    let macd = sub(&fast, &slow);
    let macds = match variant {
        Variant::Classic => oracle_ema(EMA_ALPHA_9, &macd),
        Variant::NoLag => oracle_no_lag_ema(EMA_ALPHA_9, &macd),
        Variant::Nyquist => oracle_nyquist(9, 3, &macd),
    };
    let macdh = sub(&macd, &macds);
    (macd, macds, macdh)
}

/// Impulse colors from the oracle fast line and histogram.
pub fn oracle_impulse(variant: Variant, xs: &[f64]) -> Vec<SignalColor> {
    let fast = oracle_fast_line(variant, xs);
    let (_, _, hist) = oracle_macd_triple(variant, xs);
    let mut colors = vec![SignalColor::Blue];
    for n in 1..xs.len() {
        let c = if fast[n] > fast[n - 1] && hist[n] > hist[n - 1] {
            SignalColor::Green
        } else if fast[n] < fast[n - 1] && hist[n] < hist[n - 1] {
            SignalColor::Red
        } else {
            SignalColor::Blue
        };
        colors.push(c);
    }
    colors
}

fn oracle_trade(
    long: bool,
    entry: usize,
    exit: usize,
    xs: &[f64],
    cost: f64,
    mult: f64,
) -> Trade {
    let gross = if long {
        (xs[exit] - xs[entry]) * mult
    } else {
        (xs[entry] - xs[exit]) * mult
    };
    Trade {
        direction: if long {
            Direction::Long
        } else {
            Direction::Short
        },
        entry_index: entry,
        exit_index: exit,
        entry_price: xs[entry],
        exit_price: xs[exit],
        gross_pnl: gross,
        net_pnl: gross - 2.0 * cost,
    }
}

/// Event-by-event simulation of the trading rules with an integer position.
pub fn oracle_backtest(
    xs: &[f64],
    colors: &[SignalColor],
    cost: f64,
    mult: f64,
    close_before_end: bool,
) -> Vec<Trade> {
    assert_eq!(xs.len(), colors.len());
    assert!(xs.len() >= 2);
    let d = xs.len() - 1;
    let force = if close_before_end { d - 1 } else { d };
    let mut position = 0i32;
    let mut entry = 0usize;
    let mut trades = Vec::new();
    for (n, &c) in colors.iter().enumerate() {
        if position == 1 && c == SignalColor::Red {
            trades.push(oracle_trade(true, entry, n, xs, cost, mult));
            position = 0;
        } else if position == -1 && c == SignalColor::Green {
            trades.push(oracle_trade(false, entry, n, xs, cost, mult));
            position = 0;
        }
        if position == 0 && n < force {
            if c == SignalColor::Green {
                position = 1;
                entry = n;
            } else if c == SignalColor::Red {
                position = -1;
                entry = n;
            }
        }
        if n == force && position != 0 {
            trades.push(oracle_trade(position == 1, entry, n, xs, cost, mult));
            position = 0;
        }
    }
    trades
}

/// Single-pass recomputation of every report statistic.
pub fn oracle_report(trades: &[Trade], xs: &[f64], mult: f64) -> BacktestReport {
    let mut undefined = UndefinedStats::default();
    let n_trades = trades.len();
    let mut total_net_profit = 0.0;
    let mut n_winning = 0usize;
    let mut tp = 0.0;
    let mut tl = 0.0;
    let mut n_long = 0usize;
    let mut total_net_long = 0.0;
    let mut total_net_short = 0.0;
    let mut greatest_loss_between_wins = 0.0_f64;
    let mut run = 0.0_f64;
    for t in trades {
        total_net_profit += t.net_pnl;
        if t.net_pnl > 0.0 {
            n_winning += 1;
            tp += t.net_pnl;
            greatest_loss_between_wins = greatest_loss_between_wins.min(run);
            run = 0.0;
        } else {
            tl += t.net_pnl;
            run += t.net_pnl;
        }
        if t.direction == Direction::Long {
            n_long += 1;
            total_net_long += t.net_pnl;
        } else {
            total_net_short += t.net_pnl;
        }
    }
    greatest_loss_between_wins = greatest_loss_between_wins.min(run);
    let n_losing = n_trades - n_winning;
    let n_short = n_trades - n_long;

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
    let tpi = (xs[xs.len() - 1] - xs[0]) * mult;
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

/// Deterministic synthetic price path: drift, two waves, seeded noise,
/// quoted in quarter points.
pub fn synthetic_prices(len: usize, seed: u64) -> Vec<f64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut price = 2500.0_f64;
    let mut out = Vec::with_capacity(len);
    for n in 0..len {
        let wave = 0.004 * (n as f64 / 9.0).sin() + 0.002 * (n as f64 / 23.0).cos();
        let noise: f64 = rng.gen_range(-0.009..0.009);
        let step = 0.0004 + wave + noise;
        price *= 1.0 + step;
        out.push((price * 4.0).round() / 4.0);
    }
    out
}

/// Weekday sequence starting 2017-11-01, one date per bar.
pub fn synthetic_dates(len: usize) -> Vec<chrono::NaiveDate> {
    use chrono::{Datelike, Duration, NaiveDate, Weekday};
    let mut date = NaiveDate::from_ymd_opt(2017, 11, 1).unwrap();
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        if date.weekday() != Weekday::Sat && date.weekday() != Weekday::Sun {
            out.push(date);
        }
        date += Duration::days(1);
    }
    out
}

pub fn assert_vec_close(actual: &[f64], expected: &[f64], tol: f64, what: &str) {
    assert_eq!(actual.len(), expected.len(), "{what}: length mismatch");
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert!(
            (a - e).abs() <= tol,
            "{what}: index {i}: got {a}, expected {e} (diff {})",
            (a - e).abs()
        );
    }
}
