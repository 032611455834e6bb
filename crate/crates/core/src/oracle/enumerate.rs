use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{EnumerationConfig, OracleError, Result};
use crate::canon::{canonical, CanonicalCode};
use crate::detect::{cliques::has_clique_within, has_path, is_edge_maximal_free};
use crate::graph::Graph;

/// One representative per isomorphism class, sorted by canonical code.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub codes: Vec<CanonicalCode>,
    pub stats: EnumerationStats,
}

impl Enumeration {
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.codes.iter().map(CanonicalCode::to_graph)
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    /// Classes kept at each completed order, starting from 0.
    pub per_level: Vec<usize>,
    /// One-vertex extensions examined.
    pub candidates: u64,
    pub elapsed_ms: u64,
}

/// Builds order `j + 1` from order `j` by adding a vertex with every possible
/// neighbourhood. Both constraints are inherited by induced subgraphs, so
/// every free graph arises from a free parent; connected graphs always have a
/// vertex whose removal leaves them connected.
pub fn enumerate(config: &EnumerationConfig) -> Result<Enumeration> {
    config.validate()?;
    let start = Instant::now();
    let deadline = config.budget.map(|b| start + b);
    let abort = AtomicBool::new(false);
    let candidates = AtomicU64::new(0);
    let mut stats = EnumerationStats::default();

    let mut level = vec![canonical(&Graph::empty(0)?)];
    stats.per_level.push(1);
    for _ in 0..config.n {
        let next = extend(&level, config, deadline, &abort, &candidates);
        if abort.load(Ordering::Relaxed) {
            stats.candidates = candidates.load(Ordering::Relaxed);
            stats.elapsed_ms = start.elapsed().as_millis() as u64;
            return Err(OracleError::BudgetExceeded { stats });
        }
        level = next.into_iter().collect();
        level.sort_unstable();
        stats.per_level.push(level.len());
    }

    let needs_filter = config.min_degree.is_some() || config.edge_maximal_only;
    if needs_filter {
        level = level
            .into_par_iter()
            .filter(|code| {
                let g = code.to_graph();
                config
                    .min_degree
                    .is_none_or(|d| g.min_degree().unwrap_or(0) >= d)
                    && (!config.edge_maximal_only
                        || is_edge_maximal_free(&g, config.forbid_path, config.forbid_clique))
            })
            .collect();
    }
    stats.candidates = candidates.load(Ordering::Relaxed);
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(Enumeration {
        codes: level,
        stats,
    })
}

fn extend(
    level: &[CanonicalCode],
    config: &EnumerationConfig,
    deadline: Option<Instant>,
    abort: &AtomicBool,
    candidates: &AtomicU64,
) -> HashSet<CanonicalCode> {
    level
        .par_iter()
        .fold(HashSet::new, |mut acc, code| {
            if abort.load(Ordering::Relaxed) {
                return acc;
            }
            if deadline.is_some_and(|d| Instant::now() >= d) {
                abort.store(true, Ordering::Relaxed);
                return acc;
            }
            let g = code.to_graph();
            let j = g.order();
            let first = u64::from(config.connected_only && j > 0);
            let mut examined = 0;
            for mask in first..(1u64 << j) {
                examined += 1;
                if let Some(m) = config.forbid_clique {
                    if has_clique_within(&g, mask, m - 1) {
                        continue;
                    }
                }
                let child = g.with_vertex(mask).expect("order stays below the cap");
                if let Some(k) = config.forbid_path {
                    if has_path(&child, k) {
                        continue;
                    }
                }
                acc.insert(canonical(&child));
            }
            candidates.fetch_add(examined, Ordering::Relaxed);
            acc
        })
        .reduce(HashSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::double_star;

    fn codes(config: EnumerationConfig) -> Vec<Graph> {
        enumerate(&config).unwrap().graphs().collect()
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate(&EnumerationConfig::new(n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn examples() {
        let tri_free = codes(EnumerationConfig::new(4).forbid_clique(3).connected(true));
        assert_eq!(tri_free.len(), 3);
        for h in [Graph::path(4), Graph::star(4), Graph::cycle(4)] {
            let h = h.unwrap();
            assert!(tri_free.iter().any(|g| are_isomorphic(g, &h)));
        }
        let p3_free = codes(EnumerationConfig::new(3).forbid_path(3));
        assert_eq!(p3_free.len(), 2);
        assert!(p3_free.iter().all(|g| g.size() <= 1));
        let connected_5 = codes(EnumerationConfig::new(5).connected(true));
        assert_eq!(connected_5.len(), 21);
        let trees = codes(
            EnumerationConfig::new(6)
                .forbid_clique(3)
                .forbid_path(5)
                .connected(true),
        );
        assert!(trees
            .iter()
            .any(|g| are_isomorphic(g, &double_star(3, 3).unwrap())));
    }

    #[test]
    fn limits() {
        assert!(matches!(
            enumerate(&EnumerationConfig::new(11).forbid_clique(3)),
            Err(OracleError::CapExceeded { n: 11, cap: 10 })
        ));
        assert!(matches!(
            enumerate(&EnumerationConfig::new(7).forbid_clique(3).cap(6)),
            Err(OracleError::CapExceeded { n: 7, cap: 6 })
        ));
        assert!(matches!(
            enumerate(&EnumerationConfig::new(10)),
            Err(OracleError::InvalidConfig(_))
        ));
        let tight = EnumerationConfig::new(9).budget(std::time::Duration::ZERO);
        assert!(matches!(
            enumerate(&tight),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }
}
