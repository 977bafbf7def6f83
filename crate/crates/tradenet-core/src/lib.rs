//! Analytics for participant trading networks built from matched-trade logs.
//!
//! The crate covers the full pipeline: streaming ingest of trade records,
//! construction of the undirected weighted participant graph, heavy-tail
//! distribution fitting with goodness-of-fit testing, topology metrics
//! (clustering, path statistics, betweenness, assortativity), matched
//! Erdős–Rényi baselines, temporal densification analysis over a growing
//! stream, and a synthetic exchange that produces trade logs with realistic
//! network signatures.

pub mod error;
pub mod graph;
pub mod ingest;
pub mod math;
#[doc(hidden)]
pub mod testkit;

pub use error::{Error, Result};
pub use graph::{GraphBuilder, GraphDelta, NodeId, TradingNetwork};
pub use ingest::{CommodityFilter, IngestReport, RecordFormat, TradeRecord};
