//! Run orchestration and output emission for the command-line driver.
//!
//! Three output modes over one loaded CSV:
//! - `report`: the full metric table per variant, as aligned text or JSON;
//! - `ledger`: one CSV row per executed round trip;
//! - `series`: a plot-ready CSV with the Nyquist lines `N_{12,3}`, `N_{26,3}`
//!   and `N_{26,6}`, the chosen variant's MACD/MACDS/MACDH, and the impulse
//!   color per bar.

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;

use crate::backtest::{compute_report, run_backtest, BacktestConfig, BacktestReport, Trade};
use crate::data::{self, PriceRecord};
use crate::error::{Error, Result};
use crate::indicators::{impulse, macd, Variant};
use crate::lag::nyquist_op;
use crate::series::Series;

/// Which indicator variants a run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantArg {
    One(Variant),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Report,
    Ledger,
    Series,
}

impl OutputMode {
    fn name(&self) -> &'static str {
        match self {
            OutputMode::Report => "report",
            OutputMode::Ledger => "ledger",
            OutputMode::Series => "series",
        }
    }
}

/// A fully described run: input, variant selection, config, output shape.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub input: PathBuf,
    pub variant: VariantArg,
    pub mode: OutputMode,
    pub cost_per_side: f64,
    pub contract_multiplier: f64,
    pub close_before_end: bool,
    pub json: bool,
}

/// Format with 12 significant digits; parsing the result back and printing
/// it again reproduces the same string.
pub fn fmt_sig12(value: f64) -> String {
    format!("{value:.11e}")
}

fn money(value: f64) -> String {
    format!("{value:.2}")
}

#[derive(Serialize)]
struct AllReports<'a> {
    classic: &'a BacktestReport,
    no_lag: &'a BacktestReport,
    nyquist: &'a BacktestReport,
}

/// Serialize one report as pretty JSON.
pub fn report_to_json(report: &BacktestReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

fn reports_to_json(reports: &[(Variant, BacktestReport)]) -> String {
    let find = |v: Variant| {
        &reports
            .iter()
            .find(|(variant, _)| *variant == v)
            .expect("all variants present")
            .1
    };
    let all = AllReports {
        classic: find(Variant::Classic),
        no_lag: find(Variant::NoLag),
        nyquist: find(Variant::Nyquist),
    };
    serde_json::to_string_pretty(&all).expect("report serialization cannot fail")
}

fn report_line(out: &mut dyn Write, label: &str, value: String) -> std::io::Result<()> {
    writeln!(out, "  {label:<44} {value:>14}")
}

/// Aligned text rendering of one report.
pub fn write_report_text(
    variant: Variant,
    report: &BacktestReport,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let opt = |value: f64, flag: bool, unit: &str| {
        if flag {
            "n/a".to_string()
        } else {
            format!("{value:.2}{unit}")
        }
    };
    writeln!(out, "variant: {variant}")?;
    report_line(out, "number of trades", report.n_trades.to_string())?;
    report_line(out, "total net profit", money(report.total_net_profit))?;
    report_line(
        out,
        "percentage of winning trades",
        opt(report.pct_winning, report.undefined.pct_winning, "%"),
    )?;
    report_line(
        out,
        "average net profit per trade",
        opt(
            report.avg_net_per_trade,
            report.undefined.avg_net_per_trade,
            "",
        ),
    )?;
    report_line(out, "total net profit of winning trades (TP)", money(report.tp))?;
    report_line(
        out,
        "average net profit per winning trade (AP)",
        opt(report.ap, report.undefined.ap, ""),
    )?;
    report_line(out, "total net loss of losing trades (TL)", money(report.tl))?;
    report_line(
        out,
        "average net loss per losing trade (AL)",
        opt(report.al, report.undefined.al, ""),
    )?;
    report_line(
        out,
        "greatest loss between two winning trades",
        money(report.greatest_loss_between_wins),
    )?;
    report_line(out, "total net profit of long trades", money(report.total_net_long))?;
    report_line(
        out,
        "average net profit per long trade",
        opt(report.avg_net_long, report.undefined.avg_net_long, ""),
    )?;
    report_line(
        out,
        "total net profit of short trades",
        money(report.total_net_short),
    )?;
    report_line(
        out,
        "average net profit per short trade",
        opt(report.avg_net_short, report.undefined.avg_net_short, ""),
    )?;
    report_line(out, "buy-and-hold profit (TPI)", money(report.tpi))?;
    report_line(
        out,
        "profit factor TP/|TL|",
        opt(report.profit_factor, report.undefined.profit_factor, ""),
    )?;
    report_line(
        out,
        "ratio AP/|AL|",
        opt(report.ratio_ap_al, report.undefined.ratio_ap_al, ""),
    )?;
    report_line(
        out,
        "ratio TP/TPI",
        opt(report.ratio_tp_tpi, report.undefined.ratio_tp_tpi, ""),
    )?;
    Ok(())
}

/// One CSV row per trade: fills as 12-significant-digit values, pnl in cents.
pub fn write_ledger_csv(
    records: &[PriceRecord],
    trades: &[Trade],
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(
        out,
        "direction,entry_index,exit_index,entry_date,exit_date,entry_price,exit_price,gross_pnl,net_pnl"
    )?;
    for t in trades {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            t.direction,
            t.entry_index,
            t.exit_index,
            records[t.entry_index].date,
            records[t.exit_index].date,
            fmt_sig12(t.entry_price),
            fmt_sig12(t.exit_price),
            money(t.gross_pnl),
            money(t.net_pnl),
        )?;
    }
    Ok(())
}

/// Plot-ready per-bar CSV for one variant.
pub fn write_series_csv(
    records: &[PriceRecord],
    x: &Series,
    variant: Variant,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    let n12_3 = nyquist_op(12, 3).expect("12 >= 2*3").eval(x);
    let n26_3 = nyquist_op(26, 3).expect("26 >= 2*3").eval(x);
    let n26_6 = nyquist_op(26, 6).expect("26 >= 2*6").eval(x);
    let triple = macd(variant, x);
    let colors = impulse(x, variant);
    writeln!(
        out,
        "index,date,close,n12_3,n26_3,n26_6,macd,macds,macdh,impulse"
    )?;
    for (i, record) in records.iter().enumerate() {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            i,
            record.date,
            fmt_sig12(record.close),
            fmt_sig12(n12_3[i]),
            fmt_sig12(n26_3[i]),
            fmt_sig12(n26_6[i]),
            fmt_sig12(triple.macd()[i]),
            fmt_sig12(triple.signal()[i]),
            fmt_sig12(triple.histogram()[i]),
            colors.colors()[i],
        )?;
    }
    Ok(())
}

fn single_variant(spec: &RunSpec) -> Result<Variant> {
    match spec.variant {
        VariantArg::One(v) => Ok(v),
        VariantArg::All => Err(Error::VariantAllUnsupported {
            mode: spec.mode.name().to_string(),
        }),
    }
}

fn config_of(spec: &RunSpec) -> BacktestConfig {
    BacktestConfig {
        cost_per_side: spec.cost_per_side,
        contract_multiplier: spec.contract_multiplier,
        close_before_end: spec.close_before_end,
    }
}

/// Execute a run and write its output. Any error leaves a nonzero exit to
/// the binary.
pub fn run(spec: &RunSpec, out: &mut dyn Write) -> Result<()> {
    if spec.json && spec.mode != OutputMode::Report {
        return Err(Error::JsonUnsupported);
    }
    if spec.mode != OutputMode::Report {
        single_variant(spec)?;
    }
    let records = data::load_csv(&spec.input)?;
    let x = data::series_from_records(&records)?;
    let config = config_of(spec);

    match spec.mode {
        OutputMode::Report => {
            let variants: Vec<Variant> = match spec.variant {
                VariantArg::One(v) => vec![v],
                VariantArg::All => Variant::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            for variant in variants {
                let signal = impulse(&x, variant);
                let ledger = run_backtest(&x, signal.colors(), &config)?;
                reports.push((variant, compute_report(&ledger, &x)));
            }
            if spec.json {
                let json = if reports.len() == 1 {
                    report_to_json(&reports[0].1)
                } else {
                    reports_to_json(&reports)
                };
                writeln!(out, "{json}").map_err(Error::Output)?;
            } else {
                for (i, (variant, report)) in reports.iter().enumerate() {
                    if i > 0 {
                        writeln!(out).map_err(Error::Output)?;
                    }
                    write_report_text(*variant, report, out).map_err(Error::Output)?;
                }
            }
        }
        OutputMode::Ledger => {
            let variant = single_variant(spec)?;
            let signal = impulse(&x, variant);
            let ledger = run_backtest(&x, signal.colors(), &config)?;
            write_ledger_csv(&records, ledger.trades(), out).map_err(Error::Output)?;
        }
        OutputMode::Series => {
            let variant = single_variant(spec)?;
            write_series_csv(&records, &x, variant, out).map_err(Error::Output)?;
        }
    }
    Ok(())
}
