//! Named pattern graphs (claw, paths, triangle, Z_i, bull, net, wounded) and
//! the localized degree conditions evaluated over their induced copies.
//!
//! All predicates work on vertex subsets of the host: a subset matches when
//! the induced subgraph on it is isomorphic to the pattern, so free-ness,
//! o-heaviness and f-heaviness depend only on subset-intrinsic adjacency and
//! distances. Degree thresholds are compared as `2*d >= n`; no fractions.

use crate::closure::is_heavy;
use crate::graph::{Graph, VertexSet};
use crate::iso::are_isomorphic;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern parameter must be at least 1, got {given}")]
    InvalidParameter { given: usize },
    #[error("unknown pattern token {token:?}")]
    UnknownToken { token: String },
}

/// The pattern family: paths P_i, the triangle, Z_i (triangle plus a pendant
/// path of i edges), the bull, the net, the wounded graph, and the claw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternName {
    Claw,
    Path(usize),
    Cycle3,
    Z(usize),
    Bull,
    Net,
    Wounded,
}

impl PatternName {
    pub fn order(&self) -> usize {
        match *self {
            PatternName::Claw => 4,
            PatternName::Path(i) => i,
            PatternName::Cycle3 => 3,
            PatternName::Z(i) => i + 3,
            PatternName::Bull => 5,
            PatternName::Net | PatternName::Wounded => 6,
        }
    }

    /// Canonical construction of the pattern graph.
    pub fn build(&self) -> Result<Graph, PatternError> {
        Ok(match *self {
            PatternName::Claw => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]),
            PatternName::Path(i) => {
                if i < 1 {
                    return Err(PatternError::InvalidParameter { given: i });
                }
                Graph::path(i)
            }
            PatternName::Cycle3 => Graph::complete(3),
            PatternName::Z(i) => {
                if i < 1 {
                    return Err(PatternError::InvalidParameter { given: i });
                }
                // Triangle {0,1,2} with the path 0-3-4-...-(i+2) hung on 0.
                let mut g = Graph::from_edges(i + 3, &[(0, 1), (0, 2), (1, 2)]);
                let mut prev = 0;
                for v in 3..i + 3 {
                    g.add_edge(prev, v);
                    prev = v;
                }
                g
            }
            PatternName::Bull => Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
            PatternName::Net => {
                Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
            }
            PatternName::Wounded => {
                Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (4, 5)])
            }
        })
    }

    /// CLI token: claw, p3..p7, c3, z1..z4, bull, net, wounded.
    pub fn parse_token(token: &str) -> Result<PatternName, PatternError> {
        let unknown = || PatternError::UnknownToken {
            token: token.to_string(),
        };
        match token {
            "claw" => Ok(PatternName::Claw),
            "c3" => Ok(PatternName::Cycle3),
            "bull" => Ok(PatternName::Bull),
            "net" => Ok(PatternName::Net),
            "wounded" => Ok(PatternName::Wounded),
            _ => {
                let (kind, num) = token.split_at(1);
                let i: usize = num.parse().map_err(|_| unknown())?;
                let name = match kind {
                    "p" => PatternName::Path(i),
                    "z" => PatternName::Z(i),
                    _ => return Err(unknown()),
                };
                name.build()?;
                Ok(name)
            }
        }
    }
}

/// How induced copies are enumerated; both yield identical results in
/// identical lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ScanMode {
    /// Plain scan over all subsets of the pattern's order.
    Exhaustive,
    /// Backtracking subset growth with edge-count and degree pruning.
    Backtracking,
}

/// All vertex subsets of `g` whose induced subgraph is isomorphic to the
/// pattern, each listed once, lexicographic on sorted members.
pub fn find_induced(g: &Graph, name: PatternName) -> Vec<VertexSet> {
    let pat = name.build().expect("valid pattern");
    let mode = if g.n() > 12 {
        ScanMode::Backtracking
    } else {
        ScanMode::Exhaustive
    };
    induced_matches(g, &pat, mode)
}

pub(crate) fn induced_matches(g: &Graph, pat: &Graph, mode: ScanMode) -> Vec<VertexSet> {
    let mut out = Vec::new();
    scan_induced(g, pat, mode, &mut |s| {
        out.push(s);
        true
    });
    out
}

/// First induced copy in lexicographic order, if any.
pub(crate) fn first_induced_match(g: &Graph, pat: &Graph) -> Option<VertexSet> {
    let mut found = None;
    let mode = if g.n() > 12 {
        ScanMode::Backtracking
    } else {
        ScanMode::Exhaustive
    };
    scan_induced(g, pat, mode, &mut |s| {
        found = Some(s);
        false
    });
    found
}

/// Drives `visit` over matches in lexicographic order until it returns false.
fn scan_induced(g: &Graph, pat: &Graph, mode: ScanMode, visit: &mut dyn FnMut(VertexSet) -> bool) {
    let k = pat.n();
    if k > g.n() || k == 0 {
        return;
    }
    let pat_degseq = pat.degree_sequence();
    let pat_edges = pat.edge_count();
    let check = |set: VertexSet| -> bool {
        if g.edge_count_within(set) != pat_edges {
            return false;
        }
        let (sub, _) = g.induced(set);
        sub.degree_sequence() == pat_degseq && are_isomorphic(&sub, pat).is_some()
    };
    match mode {
        ScanMode::Exhaustive => {
            let n = g.n();
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let set: VertexSet = idx.iter().copied().collect();
                if check(set) && !visit(set) {
                    return;
                }
                // Next k-combination of 0..n in lexicographic order.
                let mut i = k;
                loop {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                    if idx[i] != i + n - k {
                        break;
                    }
                }
                if idx[i] == i + n - k {
                    return;
                }
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        ScanMode::Backtracking => {
            let max_deg = pat.degree_sequence().last().copied().unwrap_or(0);
            grow(
                g,
                pat_edges,
                max_deg,
                k,
                0,
                VertexSet::EMPTY,
                0,
                &check,
                visit,
            );
        }
    }
}

/// Extends `chosen` with vertices from `from..n`; any subset of a match
/// induces a subgraph of the pattern, so partial subsets exceeding the
/// pattern's edge count or maximum degree cannot complete.
#[allow(clippy::too_many_arguments)]
fn grow(
    g: &Graph,
    pat_edges: usize,
    max_deg: usize,
    k: usize,
    from: usize,
    chosen: VertexSet,
    edges: usize,
    check: &dyn Fn(VertexSet) -> bool,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    if chosen.len() == k {
        if check(chosen) {
            return visit(chosen);
        }
        return true;
    }
    let needed = k - chosen.len();
    for v in from..g.n() {
        if g.n() - v < needed {
            break;
        }
        let new_edges = (g.neighbors(v) & chosen).len();
        if edges + new_edges > pat_edges || new_edges > max_deg {
            continue;
        }
        let next = chosen.with(v);
        if next.iter().any(|u| (g.neighbors(u) & next).len() > max_deg) {
            continue;
        }
        if !grow(
            g,
            pat_edges,
            max_deg,
            k,
            v + 1,
            next,
            edges + new_edges,
            check,
            visit,
        ) {
            return false;
        }
    }
    true
}

pub fn is_free(g: &Graph, name: PatternName) -> bool {
    let pat = name.build().expect("valid pattern");
    first_induced_match(g, &pat).is_none()
}

/// Violation of the Ore-type condition: an induced copy of the pattern with
/// no nonadjacent vertex pair of degree sum >= n. `None` means o-heavy
/// (vacuously so when the graph is pattern-free).
pub fn o_heavy_violation(g: &Graph, name: PatternName) -> Option<VertexSet> {
    let n = g.n();
    find_induced(g, name).into_iter().find(|&members| {
        !members.iter().any(|u| {
            (members - g.neighbors(u).with(u))
                .iter()
                .any(|v| g.degree(u) + g.degree(v) >= n)
        })
    })
}

pub fn is_o_heavy(g: &Graph, name: PatternName) -> bool {
    o_heavy_violation(g, name).is_none()
}

/// Violation of the Fan-type condition: an induced copy containing a pair at
/// distance exactly 2 *within the copy* where neither endpoint is heavy.
pub fn f_heavy_violation(g: &Graph, name: PatternName) -> Option<(VertexSet, (usize, usize))> {
    for members in find_induced(g, name) {
        let (sub, map) = g.induced(members);
        for i in 0..sub.n() {
            let dist = bfs_distances(&sub, i);
            for j in i + 1..sub.n() {
                if dist[j] == 2 {
                    let (u, v) = (map[i], map[j]);
                    if !is_heavy(g, u) && !is_heavy(g, v) {
                        return Some((members, (u, v)));
                    }
                }
            }
        }
    }
    None
}

pub fn is_f_heavy(g: &Graph, name: PatternName) -> bool {
    f_heavy_violation(g, name).is_none()
}

fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[start] = 0;
    let mut frontier = VertexSet::singleton(start);
    let mut seen = frontier;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next | g.neighbors(v);
        }
        next = next - seen;
        for v in next.iter() {
            dist[v] = d;
        }
        seen = seen | next;
        frontier = next;
    }
    dist
}

/// Role labels of an induced Z_3 copy: triangle a-b-c with pendant path
/// a-a1-a2-a3. The labeling is recovered from induced degrees (a3 is the
/// unique degree-1 vertex; the only nontrivial automorphism swaps b and c,
/// so a1 is well-defined).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Z3Roles {
    pub a: usize,
    pub a1: usize,
    pub a2: usize,
    pub a3: usize,
    pub b: usize,
    pub c: usize,
}

/// Extracts roles from a vertex subset known to induce a Z_3 in `g`.
pub fn z3_roles(g: &Graph, members: VertexSet) -> Z3Roles {
    debug_assert_eq!(members.len(), 6);
    let deg_in = |v: usize| (g.neighbors(v) & members).len();
    let a3 = members
        .iter()
        .find(|&v| deg_in(v) == 1)
        .expect("Z_3 has a degree-1 tail");
    let a2 = (g.neighbors(a3) & members).min().expect("tail neighbor");
    let a1 = (g.neighbors(a2) & members)
        .without(a3)
        .min()
        .expect("middle vertex");
    let a = (g.neighbors(a1) & members)
        .without(a2)
        .min()
        .expect("attachment vertex");
    let mut rest = members;
    for v in [a, a1, a2, a3] {
        rest.remove(v);
    }
    let b = rest.min().expect("triangle vertex");
    let c = rest.without(b).min().expect("triangle vertex");
    Z3Roles {
        a,
        a1,
        a2,
        a3,
        b,
        c,
    }
}

/// Violation of Z_3-center-heaviness: an induced Z_3 whose a1 vertex is not
/// heavy in `g`.
pub fn center_heavy_z3_violation(g: &Graph) -> Option<VertexSet> {
    find_induced(g, PatternName::Z(3))
        .into_iter()
        .find(|&members| !is_heavy(g, z3_roles(g, members).a1))
}

pub fn is_center_heavy_z3(g: &Graph) -> bool {
    center_heavy_z3_violation(g).is_none()
}
