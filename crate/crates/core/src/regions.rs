//! Region decomposition of a claw-o-heavy graph: the maximal cliques of the
//! closure mapped back onto the original graph, with interior/frontier
//! classification and executable checks of the two structural region lemmas.

use crate::cliques::maximal_cliques;
use crate::graph::{Graph, VertexSet};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Violations here follow from closedness, so any of them signals a closure
/// bug rather than bad input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RegionError {
    #[error("closed graph is missing edge ({u},{v}) of the original")]
    NotSupergraph { u: usize, v: usize },
    #[error("vertex {vertex} lies in {count} regions; must be 1 or 2")]
    MembershipCount { vertex: usize, count: usize },
    #[error("regions {a} and {b} share {shared} vertices; at most one allowed")]
    RegionOverlap { a: usize, b: usize, shared: usize },
    #[error("edge ({u},{v}) of the closure lies in {count} regions; must be exactly one")]
    EdgeCover { u: usize, v: usize, count: usize },
}

/// Maximal cliques of the closure, as vertex sets of the original graph.
/// Every vertex lies in one region (interior) or two (frontier).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDecomposition {
    regions: Vec<VertexSet>,
    membership: Vec<Vec<usize>>,
}

impl RegionDecomposition {
    pub fn regions(&self) -> &[VertexSet] {
        &self.regions
    }

    pub fn membership(&self, v: usize) -> &[usize] {
        &self.membership[v]
    }

    pub fn is_interior(&self, v: usize) -> bool {
        self.membership[v].len() == 1
    }

    pub fn is_frontier(&self, v: usize) -> bool {
        self.membership[v].len() == 2
    }

    pub fn interior_vertices(&self) -> VertexSet {
        (0..self.membership.len())
            .filter(|&v| self.is_interior(v))
            .collect()
    }

    pub fn frontier_vertices(&self) -> VertexSet {
        (0..self.membership.len())
            .filter(|&v| self.is_frontier(v))
            .collect()
    }

    /// Interior vertices of region `r` (I_R).
    pub fn interior_of(&self, r: usize) -> VertexSet {
        self.regions[r] & self.interior_vertices()
    }

    /// Frontier vertices of region `r` (F_R).
    pub fn frontier_of(&self, r: usize) -> VertexSet {
        self.regions[r] & self.frontier_vertices()
    }

    /// True iff some region contains both `u` and `v`.
    pub fn are_associated(&self, u: usize, v: usize) -> bool {
        self.membership[u]
            .iter()
            .any(|r| self.membership[v].contains(r))
    }
}

impl Serialize for RegionDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RegionDecomposition", 3)?;
        let regions: Vec<Vec<usize>> = self.regions.iter().map(|r| r.to_vec()).collect();
        s.serialize_field("regions", &regions)?;
        s.serialize_field("interior", &self.interior_vertices().to_vec())?;
        s.serialize_field("frontier", &self.frontier_vertices().to_vec())?;
        s.end()
    }
}

/// Decomposes `g` along the maximal cliques of `closed`, which must be the
/// o-closure of `g`. Regions are sorted by their ascending member lists.
pub fn decompose(g: &Graph, closed: &Graph) -> Result<RegionDecomposition, RegionError> {
    for (u, v) in g.edges() {
        if !closed.has_edge(u, v) {
            return Err(RegionError::NotSupergraph { u, v });
        }
    }
    let regions = maximal_cliques(closed);
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); closed.n()];
    for (i, r) in regions.iter().enumerate() {
        for v in r.iter() {
            membership[v].push(i);
        }
    }
    for (v, m) in membership.iter().enumerate() {
        if m.is_empty() || m.len() > 2 {
            return Err(RegionError::MembershipCount {
                vertex: v,
                count: m.len(),
            });
        }
    }
    for a in 0..regions.len() {
        for b in a + 1..regions.len() {
            let shared = (regions[a] & regions[b]).len();
            if shared > 1 {
                return Err(RegionError::RegionOverlap { a, b, shared });
            }
        }
    }
    for (u, v) in closed.edges() {
        let count = membership[u]
            .iter()
            .filter(|r| membership[v].contains(r))
            .count();
        if count != 1 {
            return Err(RegionError::EdgeCover { u, v, count });
        }
    }
    Ok(RegionDecomposition {
        regions,
        membership,
    })
}

/// Dissociated pair with degree sum at least n in the closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma1Violation {
    pub u: usize,
    pub v: usize,
    pub degree_sum: usize,
}

/// Every pair of dissociated vertices must have closure degree sum below n
/// (the closure dominates the original degrees, so the statement for `g`
/// follows).
pub fn check_lemma1_3(
    g: &Graph,
    closed: &Graph,
    d: &RegionDecomposition,
) -> Result<(), Lemma1Violation> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if !d.are_associated(u, v) {
                let degree_sum = closed.degree(u) + closed.degree(v);
                if degree_sum >= n {
                    return Err(Lemma1Violation { u, v, degree_sum });
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Lemma2Violation {
    /// Part 1: the region induces a separable subgraph of g.
    Separable { region: usize },
    /// Part 2: a frontier vertex with no interior neighbor, in a region that
    /// is not a complete interior-free one.
    FrontierWithoutInteriorNeighbor { region: usize, vertex: usize },
    /// Part 3: no path between two region vertices through I_R.
    NoInteriorPath { region: usize, u: usize, v: usize },
    /// Part 4: a heavy pair inside the region with fewer than two common
    /// interior neighbors.
    HeavyPairShortOnCommonNeighbors {
        region: usize,
        u: usize,
        v: usize,
        common: usize,
    },
}

/// Structural checks on every region: (1) nonseparable; (2) frontier
/// vertices keep an interior neighbor unless the region is complete with no
/// interior; (3) any two region vertices are joined by an induced path of g
/// whose internal vertices are interior to the region; (4) heavy pairs
/// inside a region have two common interior neighbors.
pub fn check_lemma2(
    g: &Graph,
    _closed: &Graph,
    d: &RegionDecomposition,
) -> Result<(), Lemma2Violation> {
    let n = g.n();
    for (r, &region) in d.regions().iter().enumerate() {
        let interior = d.interior_of(r);
        let (sub, _) = g.induced(region);
        let nonseparable = match sub.n() {
            0 | 1 => true,
            2 => sub.is_connected(),
            _ => sub.is_2_connected(),
        };
        if !nonseparable {
            return Err(Lemma2Violation::Separable { region: r });
        }
        let complete_no_interior = interior.is_empty() && g.is_clique(region);
        for v in d.frontier_of(r).iter() {
            if (g.neighbors(v) & interior).is_empty() && !complete_no_interior {
                return Err(Lemma2Violation::FrontierWithoutInteriorNeighbor {
                    region: r,
                    vertex: v,
                });
            }
        }
        let members: Vec<usize> = region.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                let allowed = interior.with(u).with(v);
                match induced_path_within(g, allowed, u, v) {
                    Some(path) => debug_assert!(path_is_induced(g, &path)),
                    None => return Err(Lemma2Violation::NoInteriorPath { region: r, u, v }),
                }
                if !g.has_edge(u, v) && g.degree(u) + g.degree(v) >= n {
                    let common = (g.neighbors(u) & g.neighbors(v) & interior).len();
                    if common < 2 {
                        return Err(Lemma2Violation::HeavyPairShortOnCommonNeighbors {
                            region: r,
                            u,
                            v,
                            common,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Shortest path from `u` to `v` through `allowed` only. A shortest path in
/// an induced subgraph has no chords, so the result is an induced path of g.
fn induced_path_within(g: &Graph, allowed: VertexSet, u: usize, v: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut frontier = VertexSet::singleton(u);
    let mut seen = frontier;
    while !frontier.is_empty() && !seen.contains(v) {
        let mut next = VertexSet::EMPTY;
        for w in frontier.iter() {
            for x in ((g.neighbors(w) & allowed) - seen).iter() {
                parent[x] = w;
                next.insert(x);
            }
        }
        seen = seen | next;
        frontier = next;
    }
    if !seen.contains(v) {
        return None;
    }
    let mut path = vec![v];
    while *path.last().unwrap() != u {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

fn path_is_induced(g: &Graph, path: &[usize]) -> bool {
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            let adjacent = g.has_edge(path[i], path[j]);
            if adjacent != (j == i + 1) {
                return false;
            }
        }
    }
    true
}
