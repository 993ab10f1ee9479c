//! Exact twin-width of every isomorphism class on `n` vertices.

use std::fmt::Write;

use thiserror::Error;

use crate::certificate::ContractionCertificate;
use crate::enumerate::{enumerate_graphs_with, EnumerationError, DEFAULT_MAX_ORDER};
use crate::io::emit_graph6;
use crate::par::{self, Execution};
use crate::solver::{Solver, SolverConfig};

pub const CENSUS_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census supports 1..={CENSUS_MAX_ORDER} vertices, got {0}")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub graph6: String,
    pub order: usize,
    pub twin_width: u32,
    pub certificate: ContractionCertificate,
    pub states_expanded: u64,
    /// A structural rule claimed a smaller bound than the exact value.
    pub bound_violation: bool,
}

#[derive(Debug, Clone)]
pub struct CensusReport {
    pub order: usize,
    pub connected_only: bool,
    pub max_twin_width: u32,
    /// One row per class, in ascending canonical-key order.
    pub records: Vec<CensusRecord>,
}

impl CensusReport {
    /// First class (in record order) whose twin-width is at least `n/2`.
    pub fn ahko_counterexample(&self) -> Option<&CensusRecord> {
        self.records.iter().find(|r| 2 * r.twin_width as usize >= self.order)
    }

    /// No class reaches twin-width `n/2`.
    pub fn ahko_holds(&self) -> bool {
        self.ahko_counterexample().is_none()
    }

    /// Classes attaining the maximum.
    pub fn witnesses(&self) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(move |r| r.twin_width == self.max_twin_width)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("graph6\ttww\tstates_expanded\n");
        for r in &self.records {
            writeln!(out, "{}\t{}\t{}", r.graph6, r.twin_width, r.states_expanded).unwrap();
        }
        out
    }

    pub fn summary_line(&self) -> String {
        format!("max_tww {} classes {}", self.max_twin_width, self.records.len())
    }

    pub fn ahko_line(&self) -> String {
        match self.ahko_counterexample() {
            Some(r) => format!("ahko_counterexample {}", r.graph6),
            None => "ahko_counterexample none".to_string(),
        }
    }
}

pub fn census_max_tww(order: usize, connected_only: bool) -> Result<CensusReport, CensusError> {
    census_with(order, connected_only, Execution::default(), &SolverConfig::default())
}

/// Solves each class with its own solver and memo table, so records do not
/// depend on how classes are spread across workers.
pub fn census_with(
    order: usize,
    connected_only: bool,
    exec: Execution,
    config: &SolverConfig,
) -> Result<CensusReport, CensusError> {
    if order == 0 || order > CENSUS_MAX_ORDER {
        return Err(CensusError::OrderOutOfRange(order));
    }
    let graphs = enumerate_graphs_with(order, connected_only, DEFAULT_MAX_ORDER, exec)?;
    let records = par::map_collect(exec, graphs, |g| {
        let result = Solver::new(config.clone()).twin_width(&g);
        CensusRecord {
            graph6: emit_graph6(&g).expect("enumerated graphs are plain and small"),
            order,
            twin_width: result.twin_width,
            bound_violation: result.violates_structural_bound(),
            states_expanded: result.stats.states_expanded,
            certificate: result.certificate,
        }
    });
    let max_twin_width = records.iter().map(|r| r.twin_width).max().unwrap_or(0);
    Ok(CensusReport { order, connected_only, max_twin_width, records })
}
