//! Isomorphism testing and canonical forms.
//!
//! `are_isomorphic` runs joint color refinement (degree partition, iterated
//! neighbor-multiset splitting) and then backtracks over color-compatible
//! assignments. Exact, aimed at the desk-scale orders used here (n <= 12 or
//! so); no external canonical-labeling dependency.

use crate::graph::Graph;

/// Finds an adjacency-preserving bijection from `g` onto `h`.
/// Returns `perm` with `perm[v]` the image of `v`, or `None`.
/// Deterministic for fixed inputs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let (cg, ch) = refine_jointly(g, h)?;

    // Assign small color classes first; within a class, lowest index first.
    let mut class_size = vec![0usize; n];
    for &c in &cg {
        class_size[c as usize] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[cg[v] as usize], cg[v], v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = 0u64;
    let matcher = Matcher {
        g,
        h,
        cg: &cg,
        ch: &ch,
        order: &order,
    };
    if matcher.extend(0, &mut mapping, &mut used) {
        debug_assert!(witness_valid(g, h, &mapping));
        Some(mapping)
    } else {
        None
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [u32],
    ch: &'a [u32],
    order: &'a [usize],
}

/// Checks that `perm` maps edges to edges and non-edges to non-edges.
pub fn witness_valid(g: &Graph, h: &Graph, perm: &[usize]) -> bool {
    if perm.len() != g.n() || g.n() != h.n() {
        return false;
    }
    let mut seen = 0u64;
    for &w in perm {
        if w >= h.n() || seen & (1 << w) != 0 {
            return false;
        }
        seen |= 1 << w;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) != h.has_edge(perm[u], perm[v]) {
                return false;
            }
        }
    }
    true
}

impl Matcher<'_> {
    fn extend(&self, pos: usize, mapping: &mut [usize], used: &mut u64) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        for w in 0..self.h.n() {
            if *used & (1 << w) != 0 || self.ch[w] != self.cg[v] {
                continue;
            }
            let consistent = self.order[..pos]
                .iter()
                .all(|&u| self.g.has_edge(v, u) == self.h.has_edge(w, mapping[u]));
            if !consistent {
                continue;
            }
            mapping[v] = w;
            *used |= 1 << w;
            if self.extend(pos + 1, mapping, used) {
                return true;
            }
            mapping[v] = usize::MAX;
            *used &= !(1 << w);
        }
        false
    }
}

/// Refines vertex colors of both graphs against a shared signature table so
/// the final color ids are comparable across the two graphs. Returns `None`
/// as soon as the per-color histograms disagree.
fn refine_jointly(g: &Graph, h: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n();
    let mut cg: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut ch: Vec<u32> = (0..n).map(|v| h.degree(v) as u32).collect();
    loop {
        if !same_histogram(&cg, &ch) {
            return None;
        }
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(2 * n);
        for v in 0..n {
            sigs.push(signature(g, &cg, v));
        }
        for v in 0..n {
            sigs.push(signature(h, &ch, v));
        }
        let mut table = sigs.clone();
        table.sort();
        table.dedup();
        let rank = |s: &(u32, Vec<u32>)| table.binary_search(s).expect("in table") as u32;
        let next_g: Vec<u32> = sigs[..n].iter().map(rank).collect();
        let next_h: Vec<u32> = sigs[n..].iter().map(rank).collect();
        let grew = distinct(&next_g) > distinct(&cg);
        cg = next_g;
        ch = next_h;
        if !grew {
            break;
        }
    }
    if same_histogram(&cg, &ch) {
        Some((cg, ch))
    } else {
        None
    }
}

fn signature(g: &Graph, colors: &[u32], v: usize) -> (u32, Vec<u32>) {
    let mut ns: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
    ns.sort_unstable();
    (colors[v], ns)
}

fn distinct(colors: &[u32]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn same_histogram(a: &[u32], b: &[u32]) -> bool {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    sa == sb
}

/// Canonical labeling key: the minimum, over all vertex orderings, of the
/// upper-triangle adjacency bits packed most-significant-first in the pair
/// order (0,1),(0,2),(1,2),(0,3),... Two graphs on the same vertex count are
/// isomorphic iff their keys agree. Backtracking with prefix pruning;
/// intended for the n <= 7 enumeration (requires n*(n-1)/2 <= 64).
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    let total = n * (n - 1) / 2;
    assert!(total <= 64, "canonical_key supports n <= 11");
    if total == 0 {
        return 0;
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut best = key_of_order(g, &identity);
    let mut perm = vec![usize::MAX; n];
    let mut used = 0u64;
    minimize(g, 0, &mut perm, &mut used, 0u64, 0, &mut best);
    best
}

fn key_of_order(g: &Graph, perm: &[usize]) -> u64 {
    let mut acc = 0u64;
    let mut t = 0u32;
    for k in 1..perm.len() {
        for i in 0..k {
            if g.has_edge(perm[i], perm[k]) {
                acc |= 1u64 << (63 - t);
            }
            t += 1;
        }
    }
    acc
}

fn prefix_mask(bits: u32) -> u64 {
    if bits == 0 {
        0
    } else {
        !0u64 << (64 - bits)
    }
}

fn minimize(
    g: &Graph,
    level: usize,
    perm: &mut [usize],
    used: &mut u64,
    acc: u64,
    bits: u32,
    best: &mut u64,
) {
    let n = g.n();
    if level == n {
        if acc < *best {
            *best = acc;
        }
        return;
    }
    for w in 0..n {
        if *used & (1 << w) != 0 {
            continue;
        }
        let mut next = acc;
        let mut t = bits;
        for &placed in &perm[..level] {
            if g.has_edge(placed, w) {
                next |= 1u64 << (63 - t);
            }
            t += 1;
        }
        if next & prefix_mask(t) > *best & prefix_mask(t) {
            continue;
        }
        perm[level] = w;
        *used |= 1 << w;
        minimize(g, level + 1, perm, used, next, t, best);
        *used &= !(1 << w);
    }
}
