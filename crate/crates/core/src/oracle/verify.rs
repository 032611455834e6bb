use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate, ex_oracle_with, EnumerationConfig, OracleError, Result};
use crate::canon::{canonical, CanonicalCode};
use crate::constructions::{double_star, h_extremal, h_minus_variants, turan_union};
use crate::detect::classify::{classify_structure_with, ClassTag};
use crate::formulas::{
    delta_k, has_h_minus, predicted_ex, predicted_ex_con, threshold_case, CaseTag, TheoremParams,
};
use crate::report::{Match, Scope, Status, VerificationRow};
use crate::Clique;

/// Oracle extremal classes set against a predicted family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalComparison {
    /// `None` when the family is empty.
    pub kind: Option<Match>,
    pub matched: Vec<CanonicalCode>,
    pub extra: Vec<CanonicalCode>,
    pub missing: Vec<CanonicalCode>,
}

pub fn compare_extremal(oracle: &[CanonicalCode], family: &[CanonicalCode]) -> ExtremalComparison {
    let o: BTreeSet<&CanonicalCode> = oracle.iter().collect();
    let f: BTreeSet<&CanonicalCode> = family.iter().collect();
    let matched: Vec<CanonicalCode> = o.intersection(&f).map(|c| (*c).clone()).collect();
    let extra: Vec<CanonicalCode> = o.difference(&f).map(|c| (*c).clone()).collect();
    let missing: Vec<CanonicalCode> = f.difference(&o).map(|c| (*c).clone()).collect();
    let kind = (!f.is_empty()).then_some(match (extra.is_empty(), missing.is_empty()) {
        (true, true) => Match::Exact,
        (false, true) => Match::Superset,
        (true, false) => Match::Subset,
        _ if matched.is_empty() => Match::Disjoint,
        _ => Match::Overlap,
    });
    ExtremalComparison {
        kind,
        matched,
        extra,
        missing,
    }
}

/// Extremal graphs named by the theorems for `n` vertices: `H_n(m, k)`,
/// `H_n^-(m, k)` where defined, the double stars for `(k, m, r) = (5, 3, 2)`,
/// and for the unrestricted threshold-failing case the disjoint Turán union
/// when `(k − 1) | n`. Empty when nothing is predicted.
pub fn theorem_family(
    params: &TheoremParams,
    n: usize,
    scope: Scope,
) -> Result<Vec<CanonicalCode>> {
    let (k, m, r) = (params.k(), params.m(), params.r());
    let mut h_family = vec![canonical(&h_extremal(n, m, k)?)];
    if has_h_minus(m, k) && n >= delta_k(k) + 4 {
        h_family.extend(h_minus_variants(n, m, k)?.iter().map(canonical));
    }
    if (k, m, r) == (5, 3, 2) {
        for a in 1..=n / 2 {
            h_family.push(canonical(&double_star(a, n - a)?));
        }
    }
    let mut family = match scope {
        Scope::Connected => h_family,
        Scope::All => {
            let case = threshold_case::<Clique>(params)?;
            match case.tag {
                CaseTag::Case1 => h_family,
                CaseTag::Case2 => {
                    let mut f = Vec::new();
                    if n.is_multiple_of(k - 1) {
                        f.push(canonical(&turan_union(n, k, m)?));
                        if case.is_tie() {
                            f.extend(h_family);
                        }
                    }
                    f
                }
            }
        }
    };
    family.sort_unstable();
    family.dedup();
    Ok(family)
}

/// One row per `n`: exact oracle value against the predicted value, plus the
/// extremal-class comparison.
pub fn verify_theorem(
    params: &TheoremParams,
    n_range: RangeInclusive<usize>,
    scope: Scope,
) -> Result<Vec<VerificationRow>> {
    verify_theorem_with(params, n_range, scope, &EnumerationConfig::new(0))
}

/// As [`verify_theorem`], taking the cap and budget from `limits`.
pub fn verify_theorem_with(
    params: &TheoremParams,
    n_range: RangeInclusive<usize>,
    scope: Scope,
    limits: &EnumerationConfig,
) -> Result<Vec<VerificationRow>> {
    let (k, m, r) = (params.k(), params.m(), params.r());
    let case = threshold_case::<Clique>(params)?;
    let mut rows = Vec::new();
    for n in n_range {
        let started = Instant::now();
        if n < delta_k(k) + 2 {
            return Err(OracleError::InvalidConfig(format!(
                "n = {n} is below δ_k + 2 = {}",
                delta_k(k) + 2
            )));
        }
        let mut config = limits.clone();
        config.n = n;
        let config = config
            .forbid(Some(k), Some(m))
            .connected(scope == Scope::Connected);
        let oracle = ex_oracle_with(&config, r)?;
        let (predicted, exact) = match scope {
            Scope::Connected => (predicted_ex_con::<Clique>(n, params)?, true),
            Scope::All => {
                let p = predicted_ex::<Clique>(n, params)?;
                (p.value, p.exact)
            }
        };
        let status = match oracle.value.cmp(&predicted) {
            std::cmp::Ordering::Greater => Status::OracleGreater,
            std::cmp::Ordering::Equal if exact => Status::Equal,
            _ if !exact => Status::BoundRespected,
            _ => Status::OracleLess,
        };
        let family = theorem_family(params, n, scope)?;
        let comparison = compare_extremal(&oracle.extremal, &family);
        rows.push(VerificationRow {
            k,
            m,
            r,
            n,
            scope,
            oracle_value: oracle.value,
            predicted_value: predicted,
            case_tag: case.tag.to_string(),
            status,
            extremal_match: comparison.kind,
            runtime_ms: started.elapsed().as_millis() as u64,
            witnesses: oracle.witness_graphs,
        });
    }
    Ok(rows)
}

/// Class counts for one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelHistogram {
    pub n: usize,
    pub total: usize,
    /// `(class, count)` for every class seen, in case order.
    pub histogram: Vec<(ClassTag, usize)>,
    /// graph6 of every graph that fit no case.
    pub unclassified: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub k: usize,
    pub m: usize,
    pub levels: Vec<LevelHistogram>,
}

impl ClassificationReport {
    pub fn unclassified_count(&self) -> usize {
        self.levels.iter().map(|l| l.unclassified.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.unclassified_count() == 0
    }

    pub fn count(&self, tag: ClassTag) -> usize {
        self.levels
            .iter()
            .flat_map(|l| &l.histogram)
            .filter(|(t, _)| *t == tag)
            .map(|(_, c)| c)
            .sum()
    }
}

/// Classifies every connected `{P_k, K_m}`-free graph with minimum degree at
/// least `δ_k` on each order in `n_range`.
pub fn verify_classification(
    k: usize,
    m: usize,
    n_range: RangeInclusive<usize>,
) -> Result<ClassificationReport> {
    verify_classification_with(k, m, n_range, &EnumerationConfig::new(0), &[])
}

/// As [`verify_classification`] with explicit limits and some classes
/// switched off (used to exercise the failure path).
pub fn verify_classification_with(
    k: usize,
    m: usize,
    n_range: RangeInclusive<usize>,
    limits: &EnumerationConfig,
    disabled: &[ClassTag],
) -> Result<ClassificationReport> {
    if k < 4 || m < 2 {
        return Err(OracleError::InvalidConfig(format!(
            "needs k >= 4 and m >= 2, got k={k}, m={m}"
        )));
    }
    if *n_range.start() < k {
        return Err(OracleError::InvalidConfig(format!(
            "orders must be at least k = {k}"
        )));
    }
    let d = delta_k(k);
    let mut levels = Vec::new();
    for n in n_range {
        let mut config = limits.clone();
        config.n = n;
        let config = config
            .forbid(Some(k), Some(m))
            .connected(true)
            .min_degree(d);
        let graphs = enumerate(&config)?;
        let outcomes: Vec<ClassTag> = graphs
            .codes
            .par_iter()
            .map(|c| classify_structure_with(&c.to_graph(), k, m, disabled).map(|o| o.class_tag))
            .collect::<std::result::Result<_, _>>()?;
        let histogram = ClassTag::ALL
            .into_iter()
            .map(|t| (t, outcomes.iter().filter(|&&o| o == t).count()))
            .filter(|(_, c)| *c > 0)
            .collect();
        let unclassified = graphs
            .codes
            .iter()
            .zip(&outcomes)
            .filter(|(_, &t)| t == ClassTag::Unclassified)
            .map(|(c, _)| c.to_graph().to_graph6())
            .collect();
        levels.push(LevelHistogram {
            n,
            total: outcomes.len(),
            histogram,
            unclassified,
        });
    }
    Ok(ClassificationReport { k, m, levels })
}
