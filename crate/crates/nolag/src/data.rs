//! CSV ingestion of daily close prices.
//!
//! Input format: a `date,close` header, then one row per bar with an
//! ISO-8601 date and a positive close. Dates must be strictly increasing.

use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::series::Series;

/// One bar of input data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceRecord {
    pub date: NaiveDate,
    pub close: f64,
}

fn malformed(path: &Path, line: u64, msg: impl Into<String>) -> Error {
    Error::MalformedRecord {
        path: path.display().to_string(),
        line,
        msg: msg.into(),
    }
}

/// Load and validate a `date,close` CSV file.
pub fn load_csv(path: &Path) -> Result<Vec<PriceRecord>> {
    let path_str = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(|source| Error::Csv {
            path: path_str.clone(),
            source,
        })?;

    {
        let headers = reader.headers().map_err(|source| Error::Csv {
            path: path_str.clone(),
            source,
        })?;
        let ok = headers.len() == 2
            && headers.get(0).map(|h| h.trim().eq_ignore_ascii_case("date")) == Some(true)
            && headers.get(1).map(|h| h.trim().eq_ignore_ascii_case("close")) == Some(true);
        if !ok {
            return Err(Error::BadHeader { path: path_str });
        }
    }

    let mut records = Vec::new();
    for result in reader.records() {
        let record = result.map_err(|source| Error::Csv {
            path: path_str.clone(),
            source,
        })?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or(records.len() as u64 + 2);
        if record.len() != 2 {
            return Err(malformed(
                path,
                line,
                format!("expected 2 fields, got {}", record.len()),
            ));
        }
        let date_field = record.get(0).unwrap_or("").trim();
        let close_field = record.get(1).unwrap_or("").trim();
        let date: NaiveDate = date_field
            .parse()
            .map_err(|_| malformed(path, line, format!("invalid date '{date_field}'")))?;
        let close: f64 = close_field
            .parse()
            .map_err(|_| malformed(path, line, format!("invalid close '{close_field}'")))?;
        if !close.is_finite() || close <= 0.0 {
            return Err(malformed(
                path,
                line,
                format!("close must be finite and > 0, got {close_field}"),
            ));
        }
        if let Some(prev) = records.last() {
            let prev: &PriceRecord = prev;
            if date <= prev.date {
                return Err(malformed(
                    path,
                    line,
                    format!(
                        "date {date} does not increase over previous date {}",
                        prev.date
                    ),
                ));
            }
        }
        records.push(PriceRecord { date, close });
    }
    if records.is_empty() {
        return Err(Error::NoRecords { path: path_str });
    }
    Ok(records)
}

/// Close prices as a series with `tau = 1` bar.
pub fn series_from_records(records: &[PriceRecord]) -> Result<Series> {
    Series::with_unit_tau(records.iter().map(|r| r.close).collect())
}
