use std::collections::BTreeMap;

use super::{enumerate, EnumerationConfig, OracleError, Result};
use crate::canon::canonical_form_colored;
use crate::detect::{has_clique, is_2connected};
use crate::formulas::delta_k;
use crate::graph::Graph;

/// Every block that can replace a `K_{δ_k+1}` of `G_1`: 2-connected,
/// `K_m`-free graphs on `δ_k + 2` vertices whose vertices other than the
/// attach vertex have degree at least `δ_k`. One graph per rooted
/// isomorphism class, attach vertex relabeled to 0.
pub fn g3_block_family(k: usize, m: usize) -> Result<Vec<Graph>> {
    if k < 4 || k.is_multiple_of(2) {
        return Err(OracleError::InvalidConfig(format!(
            "needs odd k >= 5, got {k}"
        )));
    }
    let d = delta_k(k);
    if m < d + 2 {
        return Err(OracleError::InvalidConfig(format!(
            "needs m >= δ_k + 2 = {}, got {m}",
            d + 2
        )));
    }
    if d > 4 {
        return Err(OracleError::InvalidConfig(format!(
            "block search is limited to δ_k <= 4, got {d}"
        )));
    }
    let order = d + 2;
    let all = enumerate(&EnumerationConfig::new(order).connected(true))?;
    let mut rooted = BTreeMap::new();
    for b in all.graphs() {
        if !is_2connected(&b) || has_clique(&b, m) {
            continue;
        }
        for root in 0..order {
            if (0..order).any(|v| v != root && b.degree(v) < d) {
                continue;
            }
            let mut colors = vec![1; order];
            colors[root] = 0;
            let form = canonical_form_colored(&b, &colors);
            rooted.entry(form.code).or_insert_with(|| {
                let mut perm = vec![root];
                perm.extend((0..order).filter(|&v| v != root));
                b.relabel(&perm).expect("permutation of 0..order")
            });
        }
    }
    Ok(rooted.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn examples() {
        let f = g3_block_family(5, 4).unwrap();
        assert_eq!(f, vec![Graph::complete(3).unwrap()]);

        let f = g3_block_family(7, 5).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let k4e = k4.without_edge(0, 1).unwrap();
        assert!(f.iter().any(|b| are_isomorphic(b, &c4)));
        assert!(f.iter().any(|b| are_isomorphic(b, &k4)));
        // K_4 − e rooted at a degree-2 or a degree-3 vertex
        assert_eq!(f.iter().filter(|b| are_isomorphic(b, &k4e)).count(), 2);
        assert_eq!(f.len(), 4);

        assert!(!g3_block_family(7, 4)
            .unwrap()
            .iter()
            .any(|b| are_isomorphic(b, &k4)));
        assert!(g3_block_family(6, 5).is_err());
        assert!(g3_block_family(7, 3).is_err());
    }
}
