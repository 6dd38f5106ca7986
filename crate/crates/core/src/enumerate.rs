//! Exhaustive small-graph census: one representative per isomorphism class.
//!
//! Built by vertex extension: every class on k+1 vertices arises from some
//! class on k vertices by attaching a new vertex with one of the 2^k possible
//! neighborhoods, so extending every representative by every neighborhood and
//! deduplicating on the canonical key covers each class exactly once. Capped
//! at n = 7; larger censuses arrive via graph6 files.

use crate::graph::Graph;
use crate::iso::canonical_key;
use std::collections::BTreeMap;
use thiserror::Error;

pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("built-in enumeration supports 1..={max} vertices, got {n}", max = MAX_ENUMERATION_ORDER)]
pub struct UnsupportedEnumeration {
    pub n: usize,
}

/// All pairwise non-isomorphic graphs on `n` vertices, in canonical-key order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, UnsupportedEnumeration> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(UnsupportedEnumeration { n });
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..(1 << k) {
                let mut h = Graph::empty(k + 1);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..k {
                    if mask & (1 << u) != 0 {
                        h.add_edge(u, k);
                    }
                }
                next.entry(canonical_key(&h)).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    // Number of graphs on n unlabeled vertices, n = 1..=7.
    const CLASS_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

    #[test]
    fn class_counts() {
        for (i, &want) in CLASS_COUNTS.iter().enumerate() {
            assert_eq!(
                enumerate_graphs(i + 1).unwrap().len(),
                want,
                "n = {}",
                i + 1
            );
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(enumerate_graphs(0), Err(UnsupportedEnumeration { n: 0 }));
        assert_eq!(enumerate_graphs(8), Err(UnsupportedEnumeration { n: 8 }));
    }

    #[test]
    fn pairwise_non_isomorphic_up_to_5() {
        for n in 1..=5 {
            let graphs = enumerate_graphs(n).unwrap();
            for i in 0..graphs.len() {
                for j in i + 1..graphs.len() {
                    assert!(
                        are_isomorphic(&graphs[i], &graphs[j]).is_none(),
                        "classes {i} and {j} at n={n} collide"
                    );
                }
            }
        }
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_graphs(6).unwrap();
        let b = enumerate_graphs(6).unwrap();
        assert_eq!(a, b);
    }
}
