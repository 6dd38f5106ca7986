//! The o-closure of a claw-o-heavy graph: heavy vertices and pairs, eligible
//! vertices, local completion, fixed-point iteration, and the line-graph
//! structure check on the result.
//!
//! A vertex `x` is eligible when its neighborhood, after augmenting with the
//! heavy-pair edges inside it, is connected but N(x) is not yet a clique in
//! the graph itself, or when the augmented neighborhood splits into exactly
//! two cliques bridged by an outside join vertex that forms a heavy pair with
//! `x`. Degrees and heavy pairs are always evaluated in the current iterate,
//! with n fixed at the vertex count. The fixed point is order-independent,
//! preserves circumference, and is a line graph of a triangle-free graph;
//! those are tested properties, not assumptions, so `root_graph` reports
//! structural failures instead of papering over them.

use crate::cliques::maximal_cliques;
use crate::graph::{Graph, VertexSet};
use crate::patterns::{o_heavy_violation, PatternName};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Heavy vertex: `2 d(x) >= n`.
pub fn is_heavy(g: &Graph, v: usize) -> bool {
    2 * g.degree(v) >= g.n()
}

pub fn heavy_vertices(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| is_heavy(g, v)).collect()
}

/// Heavy pair: nonadjacent `x, y` with `d(x) + d(y) >= n`.
pub fn is_heavy_pair(g: &Graph, x: usize, y: usize) -> bool {
    x != y && !g.has_edge(x, y) && g.degree(x) + g.degree(y) >= g.n()
}

/// All heavy pairs `(x, y)` with `x < y`, lexicographic.
pub fn heavy_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in g.vertices() {
        for y in x + 1..g.n() {
            if is_heavy_pair(g, x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// `g` plus every heavy-pair edge inside N(x).
fn augment_neighborhood(g: &Graph, x: usize) -> Graph {
    let nx: Vec<usize> = g.neighbors(x).to_vec();
    let mut aug = g.clone();
    for (i, &u) in nx.iter().enumerate() {
        for &v in &nx[i + 1..] {
            if !g.has_edge(u, v) && g.degree(u) + g.degree(v) >= g.n() {
                aug.add_edge(u, v);
            }
        }
    }
    aug
}

/// Why a vertex is, or is not, o-eligible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Eligibility {
    /// N(x) is not a clique and the augmented neighborhood is connected.
    Connected,
    /// The augmented neighborhood is two disjoint cliques and `y` bridges
    /// them while forming a heavy pair with x.
    JoinVertex {
        y: usize,
    },
    NotEligible(IneligibleReason),
}

impl Eligibility {
    pub fn is_eligible(&self) -> bool {
        !matches!(self, Eligibility::NotEligible(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IneligibleReason {
    /// N(x) is already a clique (includes empty and singleton neighborhoods).
    NeighborhoodClique,
    /// Augmented neighborhood has two clique components but no join vertex.
    NoJoinVertex,
    /// Augmented neighborhood is disconnected but not two disjoint cliques.
    NotTwoCliques,
}

pub fn o_eligibility(g: &Graph, x: usize) -> Eligibility {
    let nx = g.neighbors(x);
    if g.is_clique(nx) {
        return Eligibility::NotEligible(IneligibleReason::NeighborhoodClique);
    }
    let aug = augment_neighborhood(g, x);
    if aug.is_connected_within(nx) {
        return Eligibility::Connected;
    }
    let comps = aug.components_within(nx);
    if comps.len() == 2 && comps.iter().all(|&c| aug.is_clique(c)) {
        let outside = g.vertex_set() - nx - VertexSet::singleton(x);
        for y in outside.iter() {
            if is_heavy_pair(g, x, y)
                && g.neighbors(y).intersects(comps[0])
                && g.neighbors(y).intersects(comps[1])
            {
                return Eligibility::JoinVertex { y };
            }
        }
        Eligibility::NotEligible(IneligibleReason::NoJoinVertex)
    } else {
        Eligibility::NotEligible(IneligibleReason::NotTwoCliques)
    }
}

pub fn is_o_eligible(g: &Graph, x: usize) -> bool {
    o_eligibility(g, x).is_eligible()
}

/// Adds every missing edge inside N(x). Vertex set unchanged.
pub fn local_completion(g: &Graph, x: usize) -> Graph {
    let nx: Vec<usize> = g.neighbors(x).to_vec();
    let mut out = g.clone();
    for (i, &u) in nx.iter().enumerate() {
        for &v in &nx[i + 1..] {
            if !out.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// One completion step: the eligible vertex processed and the edges the step
/// added. Serializes as `{"vertex": x, "added_edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClosureStep {
    pub vertex: usize,
    pub added_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct ClosureTrace {
    pub steps: Vec<ClosureStep>,
}

impl ClosureTrace {
    pub fn edges_added(&self) -> usize {
        self.steps.iter().map(|s| s.added_edges.len()).sum()
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ClosureError {
    /// The closure is only well-defined (unique) for claw-o-heavy input.
    #[error("input is not claw-o-heavy; violating claw {witness:?}")]
    NotClawOHeavy { witness: Vec<usize> },
}

/// Fixed point of local completion, processing the lowest-index eligible
/// vertex first and rescanning after every step.
pub fn compute_closure(g: &Graph) -> Result<(Graph, ClosureTrace), ClosureError> {
    closure_with_policy(g, |_| 0)
}

/// Same fixed point, but each step picks a random eligible vertex from a
/// seeded stream. Exists so the order-independence of the closure is a
/// testable property rather than a side effect of one fixed policy.
pub fn compute_closure_seeded(g: &Graph, seed: u64) -> Result<(Graph, ClosureTrace), ClosureError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    closure_with_policy(g, move |eligible| rng.random_range(0..eligible.len()))
}

fn closure_with_policy(
    g: &Graph,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<(Graph, ClosureTrace), ClosureError> {
    if let Some(witness) = o_heavy_violation(g, PatternName::Claw) {
        return Err(ClosureError::NotClawOHeavy {
            witness: witness.to_vec(),
        });
    }
    let mut cur = g.clone();
    let mut steps = Vec::new();
    loop {
        let eligible: Vec<usize> = cur.vertices().filter(|&x| is_o_eligible(&cur, x)).collect();
        if eligible.is_empty() {
            return Ok((cur, ClosureTrace { steps }));
        }
        let x = eligible[pick(&eligible)];
        let next = local_completion(&cur, x);
        let added = next
            .edges()
            .into_iter()
            .filter(|&(u, v)| !cur.has_edge(u, v))
            .collect();
        steps.push(ClosureStep {
            vertex: x,
            added_edges: added,
        });
        cur = next;
    }
}

/// True iff N(v) induces a clique or a disjoint union of two cliques — the
/// neighborhood shape every vertex of a closure output must have.
pub fn neighborhood_is_clique_or_two(g: &Graph, v: usize) -> bool {
    let nv = g.neighbors(v);
    if g.is_clique(nv) {
        return true;
    }
    let comps = g.components_within(nv);
    comps.len() == 2 && comps.iter().all(|&c| g.is_clique(c))
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RootGraphError {
    #[error("vertex {vertex} lies in {count} maximal cliques; a Krausz family allows at most two")]
    VertexCover { vertex: usize, count: usize },
    #[error("edge ({u},{v}) lies in {count} maximal cliques; a Krausz family needs exactly one")]
    EdgeCover { u: usize, v: usize, count: usize },
    #[error(
        "root graph has triangle {a}-{b}-{c}; the root of a closure output must be triangle-free"
    )]
    RootTriangle { a: usize, b: usize, c: usize },
}

/// Inverts the line-graph construction on a closure output. The maximal
/// cliques must form a Krausz family (every edge in exactly one clique,
/// every vertex in at most two); vertices lying in only one clique get a
/// pendant singleton added so each vertex of `closed` corresponds to exactly
/// one edge of the root. On success `closed` is the line graph of the
/// returned root and the root is triangle-free; any failure here signals a
/// closure bug.
pub fn root_graph(closed: &Graph) -> Result<Graph, RootGraphError> {
    let cliques = maximal_cliques(closed);
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); closed.n()];
    for (i, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            member_of[v].push(i);
        }
    }
    for (v, members) in member_of.iter().enumerate() {
        if members.is_empty() || members.len() > 2 {
            return Err(RootGraphError::VertexCover {
                vertex: v,
                count: members.len(),
            });
        }
    }
    for (u, v) in closed.edges() {
        let shared = member_of[u]
            .iter()
            .filter(|i| member_of[v].contains(i))
            .count();
        if shared != 1 {
            return Err(RootGraphError::EdgeCover {
                u,
                v,
                count: shared,
            });
        }
    }
    // Family = maximal cliques, then one pendant singleton per once-covered
    // vertex; each vertex of `closed` becomes the edge between its two
    // family members.
    let mut family_len = cliques.len();
    let mut root_edges = Vec::with_capacity(closed.n());
    for members in &member_of {
        match members.as_slice() {
            [a, b] => root_edges.push((*a, *b)),
            [a] => {
                root_edges.push((*a, family_len));
                family_len += 1;
            }
            _ => unreachable!("cover validated above"),
        }
    }
    let mut root = Graph::empty(family_len);
    for (a, b) in root_edges {
        debug_assert!(
            !root.has_edge(a, b),
            "two family members share two vertices"
        );
        root.add_edge(a, b);
    }
    for a in root.vertices() {
        for b in root.neighbors(a).iter().filter(|&b| b > a) {
            let common = root.neighbors(a) & root.neighbors(b);
            if let Some(c) = common.iter().find(|&c| c > b) {
                return Err(RootGraphError::RootTriangle { a, b, c });
            }
        }
    }
    Ok(root)
}
