//! Exact Hamiltonian-cycle search and circumference for desk-scale graphs.
//!
//! Backtracking over adjacency with two prunes: the graph induced on the
//! unvisited vertices plus both path endpoints must stay connected, and every
//! unvisited vertex must keep at least two usable neighbors. Neighbor order
//! is ascending, so witnesses are reproducible. `circumference` reuses the
//! engine with target lengths descending from n, anchoring each candidate
//! cycle at its smallest vertex to kill symmetry.

use crate::graph::{Graph, VertexSet};

/// Outcome of a cycle search. `Absent` is exact; `Undecided` only appears
/// when a node budget ran out first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleSearch {
    Found(Vec<usize>),
    Absent,
    Undecided,
}

impl CycleSearch {
    pub fn found(&self) -> Option<&[usize]> {
        match self {
            CycleSearch::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, CycleSearch::Found(_))
    }
}

/// Independent certificate check: pairwise-distinct vertices, consecutive
/// adjacency, closing edge, length at least 3.
pub fn is_valid_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &v in cycle {
        if v >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    cycle.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(cycle[cycle.len() - 1], cycle[0])
}

pub fn hamiltonian_cycle(g: &Graph) -> CycleSearch {
    hamiltonian_cycle_with_budget(g, u64::MAX)
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g).is_found()
}

/// `budget` bounds the number of search-tree nodes; exhausting it yields
/// `Undecided`, never a false `Absent`.
pub fn hamiltonian_cycle_with_budget(g: &Graph, budget: u64) -> CycleSearch {
    if g.n() < 3 || !g.is_2_connected() {
        return CycleSearch::Absent;
    }
    let mut search = Search {
        g,
        budget,
        out_of_budget: false,
    };
    let mut path = Vec::with_capacity(g.n());
    path.push(0);
    if search.extend_hamilton(&mut path, VertexSet::singleton(0)) {
        debug_assert!(is_valid_cycle(g, &path));
        if is_valid_cycle(g, &path) {
            return CycleSearch::Found(path);
        }
    }
    if search.out_of_budget {
        CycleSearch::Undecided
    } else {
        CycleSearch::Absent
    }
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    out_of_budget: bool,
}

impl Search<'_> {
    fn extend_hamilton(&mut self, path: &mut Vec<usize>, visited: VertexSet) -> bool {
        if self.budget == 0 {
            self.out_of_budget = true;
            return false;
        }
        self.budget -= 1;
        let g = self.g;
        let n = g.n();
        let last = *path.last().expect("path nonempty");
        if path.len() == n {
            return g.has_edge(last, path[0]);
        }
        let start = path[0];
        let unvisited = g.vertex_set() - visited;
        let usable = unvisited.with(start).with(last);
        if g.reachable_within(last, usable) != usable {
            return false;
        }
        // Each unvisited vertex still needs both of its cycle neighbors from
        // the usable set; the start still needs a future closing neighbor.
        if unvisited
            .iter()
            .any(|u| (g.neighbors(u) & usable).len() < 2)
        {
            return false;
        }
        if (g.neighbors(start) & unvisited).is_empty() {
            return false;
        }
        for v in (g.neighbors(last) & unvisited).iter() {
            path.push(v);
            if self.extend_hamilton(path, visited.with(v)) {
                return true;
            }
            path.pop();
            if self.out_of_budget {
                return false;
            }
        }
        false
    }

    /// Searches for a cycle of exactly `target` vertices whose minimum
    /// vertex is `path[0]`.
    fn extend_fixed(&mut self, path: &mut Vec<usize>, visited: VertexSet, target: usize) -> bool {
        let g = self.g;
        let anchor = path[0];
        let last = *path.last().expect("path nonempty");
        if path.len() == target {
            return g.has_edge(last, anchor);
        }
        let allowed = (g.vertex_set() - visited) - VertexSet::full(anchor);
        // Must still reach the anchor through unvisited vertices, with
        // enough of them left to hit the target length.
        let reach = g.reachable_within(last, allowed.with(last).with(anchor));
        if !reach.contains(anchor) || path.len() + (reach & allowed).len() < target {
            return false;
        }
        for v in (g.neighbors(last) & allowed).iter() {
            path.push(v);
            if self.extend_fixed(path, visited.with(v), target) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Length of a longest cycle plus a witness; `(0, None)` for acyclic graphs.
/// Exact search, intended for n <= 14.
pub fn circumference(g: &Graph) -> (usize, Option<Vec<usize>>) {
    let n = g.n();
    for target in (3..=n).rev() {
        for anchor in 0..=(n - target) {
            let mut search = Search {
                g,
                budget: u64::MAX,
                out_of_budget: false,
            };
            let mut path = Vec::with_capacity(target);
            path.push(anchor);
            if search.extend_fixed(&mut path, VertexSet::singleton(anchor), target) {
                debug_assert!(is_valid_cycle(g, &path));
                return (target, Some(path));
            }
        }
    }
    (0, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_graph_found_in_order() {
        assert_eq!(
            hamiltonian_cycle(&Graph::cycle(5)),
            CycleSearch::Found(vec![0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn small_and_separable_graphs_absent() {
        assert_eq!(hamiltonian_cycle(&Graph::complete(2)), CycleSearch::Absent);
        assert_eq!(hamiltonian_cycle(&Graph::path(4)), CycleSearch::Absent);
        assert_eq!(hamiltonian_cycle(&Graph::empty(0)), CycleSearch::Absent);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let g = Graph::petersen();
        assert_eq!(hamiltonian_cycle(&g), CycleSearch::Absent);
        // ... but it is hypohamiltonian-adjacent: circumference 9.
        let (len, witness) = circumference(&g);
        assert_eq!(len, 9);
        assert!(is_valid_cycle(&g, &witness.unwrap()));
    }

    #[test]
    fn budget_aborts_with_undecided() {
        let g = Graph::complete(8);
        assert_eq!(hamiltonian_cycle_with_budget(&g, 0), CycleSearch::Undecided);
        assert!(hamiltonian_cycle_with_budget(&g, 1 << 20).is_found());
    }

    #[test]
    fn circumference_examples() {
        assert_eq!(circumference(&Graph::cycle(5)).0, 5);
        assert_eq!(circumference(&Graph::path(6)), (0, None));
        assert_eq!(circumference(&Graph::empty(1)), (0, None));
        // Two triangles sharing a vertex: longest cycle is a triangle.
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        let (len, witness) = circumference(&bowtie);
        assert_eq!(len, 3);
        assert!(is_valid_cycle(&bowtie, &witness.unwrap()));
    }

    #[test]
    fn certificate_checker_rejects_junk() {
        let g = Graph::cycle(5);
        assert!(!is_valid_cycle(&g, &[0, 1]));
        assert!(!is_valid_cycle(&g, &[0, 1, 3]));
        assert!(!is_valid_cycle(&g, &[0, 1, 2, 3, 3]));
        assert!(!is_valid_cycle(&g, &[0, 1, 2, 3, 9]));
        assert!(is_valid_cycle(&g, &[0, 1, 2, 3, 4]));
    }
}
