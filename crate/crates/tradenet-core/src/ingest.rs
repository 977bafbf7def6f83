//! Trade-record parsing, validation, and commodity filtering.
//!
//! This is the single entry point for trade streams, whether exported from a
//! real venue or produced by the built-in simulator. Parsing is streaming:
//! one record is materialized at a time, so memory use does not grow with
//! file length. Malformed rows are skipped and counted; rows where the buyer
//! and seller are the same participant are dropped and counted, which makes
//! "no self-loop" a guarantee the graph builder can rely on.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Column order of the canonical CSV format.
pub const CSV_HEADER: &str = "seq,timestamp_ms,commodity,buyer,seller,volume,price";

/// One matched trade between two participants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TradeRecord {
    /// Index of this record within its (cleaned) stream, assigned by the parser.
    pub seq: u64,
    /// Match time in milliseconds since epoch. Only ordinality is used
    /// downstream; ties are broken by `seq`.
    pub timestamp_ms: i64,
    /// Commodity symbol, e.g. "cu".
    pub commodity: String,
    /// Participant ID of the buying side.
    pub buyer: String,
    /// Participant ID of the selling side.
    pub seller: String,
    /// Matched volume in contracts, >= 1.
    pub volume: u32,
    /// Trade price in ticks, >= 1.
    pub price: u32,
}

/// Column mapping for the seven required fields of the input CSV.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecordFormat {
    pub seq: usize,
    pub timestamp_ms: usize,
    pub commodity: usize,
    pub buyer: usize,
    pub seller: usize,
    pub volume: usize,
    pub price: usize,
}

impl RecordFormat {
    /// The canonical column order of [`CSV_HEADER`].
    pub fn standard() -> Self {
        RecordFormat {
            seq: 0,
            timestamp_ms: 1,
            commodity: 2,
            buyer: 3,
            seller: 4,
            volume: 5,
            price: 6,
        }
    }

    /// Derive the mapping from a header row. Column order is free; extra
    /// columns are ignored; a missing required column is a fatal error.
    pub fn from_header(header: &str) -> Result<Self> {
        let names: Vec<&str> = header.trim_end().split(',').map(|s| s.trim()).collect();
        let find = |name: &str| -> Result<usize> {
            names
                .iter()
                .position(|&n| n == name)
                .ok_or_else(|| Error::Format(format!("missing required column `{name}`")))
        };
        Ok(RecordFormat {
            seq: find("seq")?,
            timestamp_ms: find("timestamp_ms")?,
            commodity: find("commodity")?,
            buyer: find("buyer")?,
            seller: find("seller")?,
            volume: find("volume")?,
            price: find("price")?,
        })
    }

    fn max_index(&self) -> usize {
        *[
            self.seq,
            self.timestamp_ms,
            self.commodity,
            self.buyer,
            self.seller,
            self.volume,
            self.price,
        ]
        .iter()
        .max()
        .unwrap()
    }
}

/// Row accounting for one parsed stream.
///
/// Invariant: `accepted + malformed + self_match_dropped` equals the number
/// of non-empty data rows seen.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub accepted: u64,
    pub malformed: u64,
    pub self_match_dropped: u64,
}

impl IngestReport {
    pub fn total_rows(&self) -> u64 {
        self.accepted + self.malformed + self.self_match_dropped
    }
}

/// Streaming record iterator over a CSV source.
///
/// Yields cleaned records in file order with `seq` assigned `0..n-1`.
/// `Err` items are fatal I/O failures; malformed and self-match rows are
/// counted in the report instead of being yielded.
pub struct RecordStream<R: BufRead> {
    reader: R,
    format: RecordFormat,
    buf: String,
    next_seq: u64,
    report: IngestReport,
    done: bool,
}

impl<R: BufRead> RecordStream<R> {
    /// Counts accumulated so far; final once the stream is exhausted.
    pub fn report(&self) -> IngestReport {
        self.report
    }

    fn parse_row(&mut self) -> Option<TradeRecord> {
        let line = self.buf.trim_end_matches(['\n', '\r']);
        if line.is_empty() {
            return None; // blank line, not counted
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() <= self.format.max_index() {
            self.report.malformed += 1;
            return None;
        }
        let f = &self.format;
        let timestamp_ms: i64 = match fields[f.timestamp_ms].trim().parse() {
            Ok(v) => v,
            Err(_) => {
                self.report.malformed += 1;
                return None;
            }
        };
        let volume: u32 = match fields[f.volume].trim().parse() {
            Ok(v) if v >= 1 => v,
            _ => {
                self.report.malformed += 1;
                return None;
            }
        };
        let price: u32 = match fields[f.price].trim().parse() {
            Ok(v) if v >= 1 => v,
            _ => {
                self.report.malformed += 1;
                return None;
            }
        };
        let commodity = fields[f.commodity].trim();
        let buyer = fields[f.buyer].trim();
        let seller = fields[f.seller].trim();
        if commodity.is_empty() || buyer.is_empty() || seller.is_empty() {
            self.report.malformed += 1;
            return None;
        }
        if buyer == seller {
            self.report.self_match_dropped += 1;
            return None;
        }
        let seq = self.next_seq;
        self.next_seq += 1;
        self.report.accepted += 1;
        Some(TradeRecord {
            seq,
            timestamp_ms,
            commodity: commodity.to_string(),
            buyer: buyer.to_string(),
            seller: seller.to_string(),
            volume,
            price,
        })
    }
}

impl<R: BufRead> Iterator for RecordStream<R> {
    type Item = Result<TradeRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => {
                    self.done = true;
                    return None;
                }
                Ok(_) => {
                    if let Some(rec) = self.parse_row() {
                        return Some(Ok(rec));
                    }
                }
                Err(e) => {
                    self.done = true;
                    return Some(Err(Error::Io(e)));
                }
            }
        }
        None
    }
}

/// Open a record stream, deriving the column mapping from the header row.
pub fn parse_records<R: BufRead>(mut source: R) -> Result<RecordStream<R>> {
    let mut header = String::new();
    let n = source.read_line(&mut header)?;
    if n == 0 {
        return Err(Error::Format("empty input: header row required".into()));
    }
    let format = RecordFormat::from_header(&header)?;
    Ok(parse_records_with(source, format))
}

/// Open a record stream with an explicit column mapping. The header row is
/// assumed to have been consumed already.
pub fn parse_records_with<R: BufRead>(source: R, format: RecordFormat) -> RecordStream<R> {
    RecordStream {
        reader: source,
        format,
        buf: String::new(),
        next_seq: 0,
        report: IngestReport::default(),
        done: false,
    }
}

/// Open a record stream over a file on disk.
pub fn open_records<P: AsRef<Path>>(path: P) -> Result<RecordStream<BufReader<File>>> {
    let file = File::open(path)?;
    parse_records(BufReader::new(file))
}

/// Commodity selection applied to a record stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommodityFilter {
    /// Keep everything.
    All,
    /// Copper, aluminum, zinc, gold.
    Metal,
    /// Natural rubber.
    Rubber,
    /// Fuel oil.
    Oil,
    /// Caller-supplied symbol set (must be non-empty).
    Custom(BTreeSet<String>),
}

/// Symbols covered by the metal group.
pub const METAL_SYMBOLS: [&str; 4] = ["cu", "al", "zn", "au"];
/// Symbol for natural rubber.
pub const RUBBER_SYMBOL: &str = "ru";
/// Symbol for fuel oil.
pub const OIL_SYMBOL: &str = "fu";

impl CommodityFilter {
    /// Build a custom filter; rejects an empty symbol set.
    pub fn custom<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let set: BTreeSet<String> = symbols.into_iter().map(Into::into).collect();
        if set.is_empty() {
            return Err(Error::InvalidParameter(
                "custom commodity filter requires a non-empty symbol set".into(),
            ));
        }
        Ok(CommodityFilter::Custom(set))
    }

    pub fn matches(&self, commodity: &str) -> bool {
        match self {
            CommodityFilter::All => true,
            CommodityFilter::Metal => METAL_SYMBOLS.contains(&commodity),
            CommodityFilter::Rubber => commodity == RUBBER_SYMBOL,
            CommodityFilter::Oil => commodity == OIL_SYMBOL,
            CommodityFilter::Custom(set) => set.contains(commodity),
        }
    }
}

/// Keep the records whose commodity matches the filter, preserving order.
pub fn filter_records<I>(records: I, filter: &CommodityFilter) -> impl Iterator<Item = TradeRecord> + '_
where
    I: IntoIterator<Item = TradeRecord>,
    I::IntoIter: 'static,
{
    records.into_iter().filter(move |r| filter.matches(&r.commodity))
}

/// Write records in the canonical CSV format, header included.
pub fn write_records_csv<W: Write, I>(mut w: W, records: I) -> Result<()>
where
    I: IntoIterator<Item = TradeRecord>,
{
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.seq, r.timestamp_ms, r.commodity, r.buyer, r.seller, r.volume, r.price
        )?;
    }
    Ok(())
}

/// Format one record as a canonical CSV row (no trailing newline).
pub fn record_csv_row(r: &TradeRecord) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        r.seq, r.timestamp_ms, r.commodity, r.buyer, r.seller, r.volume, r.price
    )
}
