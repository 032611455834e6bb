//! Exhaustive ground truth: isomorph-free enumeration of `{P_k, K_m}`-free
//! graphs, exact `ex` / `ex_con`, disintegration, and verification sweeps.

mod blocks;
mod disintegrate;
mod enumerate;
mod verify;

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::canon::CanonicalCode;
use crate::detect::classify::ClassifyError;
use crate::detect::count_cliques;
use crate::formulas::FormulaError;
use crate::graph::GraphError;
use crate::Clique;

pub use blocks::g3_block_family;
pub use disintegrate::{disintegrate, DisintegrationTrace};
pub use enumerate::{enumerate, Enumeration, EnumerationStats};
pub use verify::{
    compare_extremal, theorem_family, verify_classification, verify_classification_with,
    verify_theorem, verify_theorem_with, ClassificationReport, ExtremalComparison, LevelHistogram,
};

/// Largest order the enumerator accepts.
pub const MAX_ORDER: usize = 10;

/// Largest order accepted when neither a path nor a clique is forbidden.
pub const MAX_UNCONSTRAINED_ORDER: usize = 9;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("time budget exhausted after {} ms ({} classes in the last finished level)", .stats.elapsed_ms, .stats.per_level.last().copied().unwrap_or(0))]
    BudgetExceeded { stats: EnumerationStats },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, OracleError>;

/// What to enumerate. Built with [`EnumerationConfig::new`] and the
/// chained setters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub n: usize,
    pub forbid_path: Option<usize>,
    pub forbid_clique: Option<usize>,
    pub connected_only: bool,
    /// Keep only graphs where every added edge would create a forbidden subgraph.
    pub edge_maximal_only: bool,
    pub min_degree: Option<usize>,
    /// Order cap, at most [`MAX_ORDER`].
    pub cap: usize,
    pub budget: Option<Duration>,
}

impl EnumerationConfig {
    pub fn new(n: usize) -> Self {
        EnumerationConfig {
            n,
            forbid_path: None,
            forbid_clique: None,
            connected_only: false,
            edge_maximal_only: false,
            min_degree: None,
            cap: MAX_ORDER,
            budget: None,
        }
    }

    pub fn forbid_path(mut self, k: usize) -> Self {
        self.forbid_path = Some(k);
        self
    }

    pub fn forbid_clique(mut self, m: usize) -> Self {
        self.forbid_clique = Some(m);
        self
    }

    pub fn forbid(mut self, k: Option<usize>, m: Option<usize>) -> Self {
        self.forbid_path = k;
        self.forbid_clique = m;
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn edge_maximal(mut self, yes: bool) -> Self {
        self.edge_maximal_only = yes;
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn budget(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.cap > MAX_ORDER {
            return Err(OracleError::InvalidConfig(format!(
                "cap {} is above the hard limit {MAX_ORDER}",
                self.cap
            )));
        }
        if self.n > self.cap {
            return Err(OracleError::CapExceeded {
                n: self.n,
                cap: self.cap,
            });
        }
        if self.forbid_path == Some(0) || self.forbid_clique == Some(0) {
            return Err(OracleError::InvalidConfig(
                "forbidden path and clique orders must be positive".into(),
            ));
        }
        if self.forbid_path.is_none()
            && self.forbid_clique.is_none()
            && self.n > MAX_UNCONSTRAINED_ORDER
        {
            return Err(OracleError::InvalidConfig(format!(
                "without a forbidden path or clique n is limited to {MAX_UNCONSTRAINED_ORDER}"
            )));
        }
        Ok(())
    }
}

/// Exact maximum of `N_r` over an enumerated class.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub r: usize,
    pub value: Clique,
    /// Edge-maximal classes attaining `value`, sorted.
    pub extremal: Vec<CanonicalCode>,
    /// The same classes as graph6 strings.
    pub witness_graphs: Vec<String>,
    pub stats: EnumerationStats,
}

/// `ex(n, K_r, F)` (or `ex_con` with `connected_only`) for
/// `F ⊆ {P_k, K_m}`.
pub fn ex_oracle(
    n: usize,
    r: usize,
    forbid_path: Option<usize>,
    forbid_clique: Option<usize>,
    connected_only: bool,
) -> Result<ExtremalResult> {
    let config = EnumerationConfig::new(n)
        .forbid(forbid_path, forbid_clique)
        .connected(connected_only);
    ex_oracle_with(&config, r)
}

/// As [`ex_oracle`] with an explicit configuration. Only edge-maximal graphs
/// are scored: adding an edge never lowers `N_r`, so the maximum is unchanged.
pub fn ex_oracle_with(config: &EnumerationConfig, r: usize) -> Result<ExtremalResult> {
    if r < 2 {
        return Err(OracleError::InvalidConfig(format!("needs r >= 2, got {r}")));
    }
    let config = config.clone().edge_maximal(true);
    let found = enumerate(&config)?;
    let scored: Vec<(Clique, &CanonicalCode)> = found
        .codes
        .iter()
        .map(|c| (count_cliques(&c.to_graph(), r), c))
        .collect();
    let value = scored.iter().map(|s| s.0).max().unwrap_or(0);
    let extremal: Vec<CanonicalCode> = scored
        .iter()
        .filter(|s| s.0 == value)
        .map(|s| s.1.clone())
        .collect();
    Ok(ExtremalResult {
        n: config.n,
        r,
        value,
        witness_graphs: extremal.iter().map(|c| c.to_graph().to_graph6()).collect(),
        extremal,
        stats: found.stats,
    })
}
