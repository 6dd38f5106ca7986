//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitmask row per vertex, so neighborhood
//! intersections, clique tests and connectivity sweeps are all word-parallel.
//! Census loops dominate the runtime of everything built on top of this type,
//! which is why the representation is capped at one machine word: the graph6
//! single-byte format tops out at 62 vertices and every exact search in this
//! crate is desk-scale.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Hard upper bound on the number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n` of some host graph, as a bitmask.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    /// Members in ascending order, collected.
    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Invariants: the adjacency relation is symmetric and irreflexive, and rows
/// never carry bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > 64`.
    pub fn empty(n: usize) -> Graph {
        assert!(
            n <= MAX_VERTICES,
            "at most {MAX_VERTICES} vertices supported"
        );
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            g.rows[v] = full & !(1 << v);
        }
        g
    }

    /// Cycle `0-1-...-(n-1)-0`. Panics if `n < 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u] & (1 << v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n);
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = self.rows[u] & !VertexSet::full(u + 1).bits();
            for v in VertexSet(above).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// Number of edges with both ends in `set`.
    pub fn edge_count_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.rows[v] & set.bits()).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset_of(VertexSet(self.rows[v])))
    }

    /// Subgraph induced on `set`, with `map[new] = old` in ascending old order.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mask = within.bits();
        let mut reached = 1u64 << start;
        loop {
            let mut next = reached;
            for v in VertexSet(reached).iter() {
                next |= self.rows[v] & mask;
            }
            if next == reached {
                return VertexSet(reached);
            }
            reached = next;
        }
    }

    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.min() {
            None => true,
            Some(s) => self.reachable_within(s, set) == set,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set())
    }

    /// Connected components of the subgraph induced on `set`, each as a
    /// vertex set, ordered by smallest member.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = set;
        while let Some(s) = rest.min() {
            let comp = self.reachable_within(s, rest);
            out.push(comp);
            rest = rest - comp;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// True iff `n >= 3`, the graph is connected, and no vertex is an
    /// articulation vertex (DFS lowpoint scan).
    pub fn is_2_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        // Iterative Tarjan lowpoint from vertex 0.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut timer = 0usize;
        let mut root_children = 0usize;
        let mut stack = vec![(0usize, Bits(self.rows[0]))];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some((v, it)) = stack.last_mut() {
            let v = *v;
            if let Some(w) = it.next() {
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, Bits(self.rows[w])));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if u != 0 && low[v] >= disc[u] {
                        return false; // u is an articulation vertex
                    }
                }
            }
        }
        root_children < 2
    }

    /// Line graph: one vertex per edge (in lexicographic edge order), adjacent
    /// iff the edges share an endpoint. Isolated vertices do not contribute.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut lg = Graph::empty(edges.len());
        for i in 0..edges.len() {
            let (a, b) = edges[i];
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    lg.add_edge(i, j);
                }
            }
        }
        lg
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 3, 5]);
        assert_eq!(s.min(), Some(0));
        assert_eq!((s - VertexSet::singleton(0)).to_vec(), vec![3, 5]);
        assert!(VertexSet::full(64).len() == 64);
    }

    #[test]
    fn edges_and_degrees() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.degree(3), 0);
        assert_eq!(g.degree_sequence(), vec![0, 2, 2, 2]);
        assert_eq!(
            (0..g.n()).map(|v| g.degree(v)).sum::<usize>(),
            2 * g.edge_count()
        );
    }

    #[test]
    fn clique_and_induced() {
        let g = Graph::complete(5);
        assert!(g.is_clique(VertexSet::full(5)));
        let (h, map) = g.induced([1, 3, 4].into_iter().collect());
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(map, vec![1, 3, 4]);
    }

    #[test]
    fn connectivity() {
        let mut g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 2);
        g.add_edge(2, 3);
        assert!(g.is_connected());
    }

    #[test]
    fn two_connectivity() {
        assert!(Graph::cycle(5).is_2_connected());
        assert!(!Graph::path(4).is_2_connected());
        assert!(!Graph::empty(1).is_2_connected());
        assert!(!Graph::empty(3).is_2_connected());
        assert!(Graph::complete(3).is_2_connected());
        // Two triangles sharing a vertex: the shared vertex cuts.
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert!(!bowtie.is_2_connected());
    }

    #[test]
    fn line_graph_small() {
        // L(P3) = K2, L(K_{1,3}) = C3.
        assert_eq!(Graph::path(3).line_graph(), Graph::complete(2));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(claw.line_graph(), Graph::complete(3));
    }
}
