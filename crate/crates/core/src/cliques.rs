//! Maximal clique enumeration (Bron-Kerbosch with pivoting on bitmasks).
//!
//! In closure outputs every vertex lies in at most two maximal cliques, so
//! the enumeration is cheap there; this is still a complete enumeration for
//! arbitrary graphs.

use crate::graph::{Graph, VertexSet};

/// All maximal cliques, sorted by their ascending member lists. Isolated
/// vertices appear as singleton cliques. The empty graph has none.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        expand(
            g,
            VertexSet::EMPTY,
            g.vertex_set(),
            VertexSet::EMPTY,
            &mut out,
        );
    }
    out.sort_by_key(|c| c.to_vec());
    out
}

fn expand(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (p & g.neighbors(u)).len())
        .expect("p | x nonempty");
    for v in (p - g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        expand(g, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}
