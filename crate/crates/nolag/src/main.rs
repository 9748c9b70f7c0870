use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use nolag::cli::{run, OutputMode, RunSpec, VariantArg};
use nolag::indicators::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantOpt {
    Classic,
    #[value(name = "no_lag")]
    NoLag,
    Nyquist,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeOpt {
    Report,
    Ledger,
    Series,
}

/// Zero-lag technical indicators and a simple daily-bar backtester.
#[derive(Debug, Parser)]
#[command(name = "nolag", version)]
struct Args {
    /// Input CSV with a `date,close` header and ISO-8601 dates
    #[arg(long)]
    input: PathBuf,

    /// Indicator variant to run
    #[arg(long, value_enum, default_value_t = VariantOpt::All)]
    variant: VariantOpt,

    /// What to emit: the metrics report, the trade ledger, or per-bar series
    #[arg(long, value_enum, default_value_t = ModeOpt::Report)]
    mode: ModeOpt,

    /// Transaction cost in dollars per entry and per exit
    #[arg(long, default_value_t = 3.0)]
    cost: f64,

    /// Dollars of pnl per index point per contract
    #[arg(long, default_value_t = 50.0)]
    multiplier: f64,

    /// Keep positions open until the final bar instead of closing one bar early
    #[arg(long)]
    no_force_close: bool,

    /// Emit the report as a JSON object (report mode only)
    #[arg(long)]
    json: bool,
}

fn main() {
    let args = Args::parse();
    let spec = RunSpec {
        input: args.input,
        variant: match args.variant {
            VariantOpt::Classic => VariantArg::One(Variant::Classic),
            VariantOpt::NoLag => VariantArg::One(Variant::NoLag),
            VariantOpt::Nyquist => VariantArg::One(Variant::Nyquist),
            VariantOpt::All => VariantArg::All,
        },
        mode: match args.mode {
            ModeOpt::Report => OutputMode::Report,
            ModeOpt::Ledger => OutputMode::Ledger,
            ModeOpt::Series => OutputMode::Series,
        },
        cost_per_side: args.cost,
        contract_multiplier: args.multiplier,
        close_before_end: !args.no_force_close,
        json: args.json,
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(err) = run(&spec, &mut out) {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
