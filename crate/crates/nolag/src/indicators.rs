//! MACD triples (classic, zero-lag, Nyquist) and the three-color impulse
//! systems driven by them.
//!
//! The classic triple is `MACD = ME_12 - ME_26`, `MACDS = ME_9 ∘ MACD`,
//! `MACDH = MACD - MACDS`. The zero-lag triple replaces every EMA leg by its
//! `2E - E²` transform, and the Nyquist triple uses `N_{12,3}`, `N_{26,6}`
//! and `N_{9,3}`. An impulse system colors bar `n` green when both the fast
//! line and the histogram strictly rose, red when both strictly fell, and
//! blue otherwise (including the first bar and all ties).

use crate::error::{Error, Result};
use crate::lag::{no_lag_quadratic, nyquist_op};
use crate::series::{OperatorExpr, Series};
use crate::smoothing::EmaParam;

/// Indicator family used for a MACD triple or an impulse system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Classic,
    NoLag,
    Nyquist,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Classic, Variant::NoLag, Variant::Nyquist];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Classic => "classic",
            Variant::NoLag => "no_lag",
            Variant::Nyquist => "nyquist",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-bar impulse color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignalColor {
    Red,
    Green,
    Blue,
}

impl SignalColor {
    pub fn letter(&self) -> char {
        match self {
            SignalColor::Red => 'R',
            SignalColor::Green => 'G',
            SignalColor::Blue => 'B',
        }
    }
}

impl std::fmt::Display for SignalColor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for SignalColor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "R" => Ok(SignalColor::Red),
            "G" => Ok(SignalColor::Green),
            "B" => Ok(SignalColor::Blue),
            other => Err(format!("unknown signal color '{other}'")),
        }
    }
}

/// One impulse color per bar of the driving series; the first bar is blue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignalSeries {
    colors: Vec<SignalColor>,
}

impl SignalSeries {
    pub fn new(colors: Vec<SignalColor>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::EmptySeries);
        }
        if colors[0] != SignalColor::Blue {
            return Err(Error::SignalStart);
        }
        Ok(Self { colors })
    }

    pub fn colors(&self) -> &[SignalColor] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

/// MACD line, its smoothing (signal line), and their difference.
#[derive(Debug, Clone, PartialEq)]
pub struct MacdTriple {
    macd: Series,
    signal: Series,
    histogram: Series,
}

impl MacdTriple {
    pub fn macd(&self) -> &Series {
        &self.macd
    }

    pub fn signal(&self) -> &Series {
        &self.signal
    }

    pub fn histogram(&self) -> &Series {
        &self.histogram
    }
}

/// `ME_p`, the EMA with `alpha = 2/(p+1)`.
pub fn ema_op(periods: usize) -> Result<OperatorExpr> {
    Ok(OperatorExpr::ema(EmaParam::from_periods(periods)?))
}

/// `ME_{p,wl} = 2·ME_p - ME_p²`, the zero-lag EMA transform.
pub fn ema_no_lag_op(periods: usize) -> Result<OperatorExpr> {
    Ok(no_lag_quadratic(ema_op(periods)?))
}

fn fixed(op: Result<OperatorExpr>) -> OperatorExpr {
    op.expect("built-in indicator parameters are valid")
}

/// Fast line compared by the impulse system: `ME_12`, `ME_12,wl`, or `N_{12,3}`.
pub fn fast_line(variant: Variant) -> OperatorExpr {
    match variant {
        Variant::Classic => fixed(ema_op(12)),
        Variant::NoLag => fixed(ema_no_lag_op(12)),
        Variant::Nyquist => fixed(nyquist_op(12, 3)),
    }
}

fn triple_from_ops(
    fast: OperatorExpr,
    slow: OperatorExpr,
    smoother: OperatorExpr,
    x: &Series,
) -> MacdTriple {
    let macd_op = OperatorExpr::lin_comb(vec![(1.0, fast), (-1.0, slow)]);
    let macds_op = OperatorExpr::compose(smoother, macd_op.clone());
    let macdh_op = OperatorExpr::lin_comb(vec![(1.0, macd_op.clone()), (-1.0, macds_op.clone())]);
    MacdTriple {
        macd: macd_op.eval(x),
        signal: macds_op.eval(x),
        histogram: macdh_op.eval(x),
    }
}

/// Classic MACD with arbitrary EMA periods.
pub fn macd_classic_with(
    fast_periods: usize,
    slow_periods: usize,
    signal_periods: usize,
    x: &Series,
) -> Result<MacdTriple> {
    Ok(triple_from_ops(
        ema_op(fast_periods)?,
        ema_op(slow_periods)?,
        ema_op(signal_periods)?,
        x,
    ))
}

/// `MACD = ME_12 - ME_26`, `MACDS = ME_9 ∘ MACD`, `MACDH = MACD - MACDS`.
pub fn macd_classic(x: &Series) -> MacdTriple {
    macd_classic_with(12, 26, 9, x).expect("12/26/9 are valid EMA periods")
}

/// Zero-lag MACD with arbitrary EMA periods.
pub fn macd_no_lag_with(
    fast_periods: usize,
    slow_periods: usize,
    signal_periods: usize,
    x: &Series,
) -> Result<MacdTriple> {
    Ok(triple_from_ops(
        ema_no_lag_op(fast_periods)?,
        ema_no_lag_op(slow_periods)?,
        ema_no_lag_op(signal_periods)?,
        x,
    ))
}

/// `MACD_wl = ME_12,wl - ME_26,wl`, smoothed by `ME_9,wl`.
pub fn macd_no_lag(x: &Series) -> MacdTriple {
    macd_no_lag_with(12, 26, 9, x).expect("12/26/9 are valid EMA periods")
}

/// Nyquist MACD with arbitrary `(p1, p2)` pairs per leg.
pub fn macd_nyquist_with(
    fast: (usize, usize),
    slow: (usize, usize),
    signal: (usize, usize),
    x: &Series,
) -> Result<MacdTriple> {
    Ok(triple_from_ops(
        nyquist_op(fast.0, fast.1)?,
        nyquist_op(slow.0, slow.1)?,
        nyquist_op(signal.0, signal.1)?,
        x,
    ))
}

/// `MACD_N = N_{12,3} - N_{26,6}`, smoothed by `N_{9,3}`.
pub fn macd_nyquist(x: &Series) -> MacdTriple {
    macd_nyquist_with((12, 3), (26, 6), (9, 3), x)
        .expect("(12,3)/(26,6)/(9,3) satisfy p1 >= 2*p2")
}

/// The triple for a variant, with its standard parameters.
pub fn macd(variant: Variant, x: &Series) -> MacdTriple {
    match variant {
        Variant::Classic => macd_classic(x),
        Variant::NoLag => macd_no_lag(x),
        Variant::Nyquist => macd_nyquist(x),
    }
}

/// Impulse system: green when the variant's fast line and MACD histogram
/// both strictly rise, red when both strictly fall, blue otherwise.
pub fn impulse(x: &Series, variant: Variant) -> SignalSeries {
    let fast = fast_line(variant).eval(x);
    let hist = macd(variant, x).histogram;
    let f = fast.values();
    let h = hist.values();
    let mut colors = Vec::with_capacity(x.len());
    colors.push(SignalColor::Blue);
    for n in 1..x.len() {
        let color = if f[n] > f[n - 1] && h[n] > h[n - 1] {
            SignalColor::Green
        } else if f[n] < f[n - 1] && h[n] < h[n - 1] {
            SignalColor::Red
        } else {
            SignalColor::Blue
        };
        colors.push(color);
    }
    SignalSeries { colors }
}
