//! Multidegree statistics over every connected graph of one order.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::bipoly::{BiPoly, PolyError};
use crate::engine::{multidegree, EngineError};
use crate::graph::{
    generate_connected, parse_graph6, to_graph6, EnumerationError, Graph, Graph6Error,
};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("line {line}: graph has {found} vertices but earlier lines have {expected}")]
    MixedOrders { line: usize, expected: usize, found: usize },
    #[error("no graphs to summarize")]
    Empty,
    #[error("records mix orders {0} and {1}")]
    MixedRecords(usize, usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("cannot start worker pool: {0}")]
    Workers(String),
}

#[derive(Clone, Debug)]
pub enum CensusSource {
    /// Built-in enumeration of connected graphs, orders `1..=7`.
    Builtin(usize),
    /// One graph6 string per line, all of one order.
    Graph6File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub codim: i64,
    pub multidegree: BiPoly,
    pub multiplicity_free: bool,
    pub leading_coeff: BigInt,
}

impl CensusRecord {
    pub fn compute(graph6: String, g: &Graph) -> Result<Self, CensusError> {
        let md = multidegree(g)?;
        Ok(CensusRecord {
            graph6,
            n: g.order(),
            codim: md.codim,
            multiplicity_free: md.poly.is_multiplicity_free()?,
            leading_coeff: md.poly.leading_coefficient()?,
            multidegree: md.poly,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub n: usize,
    pub total: usize,
    pub multiplicity_free: usize,
    pub leading_1: usize,
    pub leading_2: usize,
    pub leading_3: usize,
    /// Leading coefficients of 4 and above, keyed by the coefficient.
    pub leading_other: BTreeMap<String, usize>,
}

impl CensusSummary {
    /// `(total, multiplicity-free, leading 2, leading 3)`, the reported table columns.
    pub fn row(&self) -> (usize, usize, usize, usize) {
        (self.total, self.multiplicity_free, self.leading_2, self.leading_3)
    }
}

pub fn summarize(records: &[CensusRecord]) -> Result<CensusSummary, CensusError> {
    let first = records.first().ok_or(CensusError::Empty)?;
    let mut s = CensusSummary { n: first.n, ..CensusSummary::default() };
    for r in records {
        if r.n != s.n {
            return Err(CensusError::MixedRecords(s.n, r.n));
        }
        s.total += 1;
        s.multiplicity_free += r.multiplicity_free as usize;
        match r.leading_coeff.to_u64() {
            Some(1) => s.leading_1 += 1,
            Some(2) => s.leading_2 += 1,
            Some(3) => s.leading_3 += 1,
            _ => *s.leading_other.entry(r.leading_coeff.to_string()).or_default() += 1,
        }
    }
    Ok(s)
}

/// Reads graph6 lines, skipping blank ones. All graphs must share one order.
pub fn read_graph6_file(path: &Path) -> Result<Vec<(String, Graph)>, CensusError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CensusError::Io { path: path.to_path_buf(), source })?;
    parse_graph6_lines(&text)
}

pub fn parse_graph6_lines(text: &str) -> Result<Vec<(String, Graph)>, CensusError> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| CensusError::Parse { line: idx + 1, source })?;
        if let Some((_, first)) = out.first() {
            if first.order() != g.order() {
                return Err(CensusError::MixedOrders {
                    line: idx + 1,
                    expected: first.order(),
                    found: g.order(),
                });
            }
        }
        out.push((line.trim_start_matches(">>graph6<<").to_string(), g));
    }
    Ok(out)
}

fn load(source: &CensusSource) -> Result<Vec<(String, Graph)>, CensusError> {
    match source {
        CensusSource::Builtin(n) => {
            Ok(generate_connected(*n)?.into_iter().map(|g| (to_graph6(&g), g)).collect())
        }
        CensusSource::Graph6File(path) => read_graph6_file(path),
    }
}

/// Computes one record per graph, sorted by graph6 string.
///
/// `workers` sets the thread count when the `parallel` feature is on
/// (0 picks the default); otherwise it is ignored.
pub fn compute_records(
    graphs: Vec<(String, Graph)>,
    workers: usize,
) -> Result<Vec<CensusRecord>, CensusError> {
    let mut records = compute_all(graphs, workers)?;
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(records)
}

#[cfg(feature = "parallel")]
fn compute_all(
    graphs: Vec<(String, Graph)>,
    workers: usize,
) -> Result<Vec<CensusRecord>, CensusError> {
    use rayon::prelude::*;
    if workers == 1 {
        return graphs.into_iter().map(|(s, g)| CensusRecord::compute(s, &g)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CensusError::Workers(e.to_string()))?;
    pool.install(|| graphs.into_par_iter().map(|(s, g)| CensusRecord::compute(s, &g)).collect())
}

#[cfg(not(feature = "parallel"))]
fn compute_all(
    graphs: Vec<(String, Graph)>,
    _workers: usize,
) -> Result<Vec<CensusRecord>, CensusError> {
    graphs.into_iter().map(|(s, g)| CensusRecord::compute(s, &g)).collect()
}

pub fn run_census(
    source: &CensusSource,
    workers: usize,
) -> Result<(Vec<CensusRecord>, CensusSummary), CensusError> {
    let records = compute_records(load(source)?, workers)?;
    let summary = summarize(&records)?;
    Ok((records, summary))
}
