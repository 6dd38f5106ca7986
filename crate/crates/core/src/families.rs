//! The two-triangle family P_{l1,l2,l3} and its two nine-vertex members
//! L1 = P_{T,T,T} and L2 = P_{3,T,T}.
//!
//! A member takes disjoint triangles a1-a2-a3 and b1-b2-b3 and joins each
//! pair {a_i, b_i} either by a triangle a_i-b_i-c_i (token T) or by a path
//! a_i-c_i^1-...-c_i^{k-2}-b_i on k >= 3 vertices (token k). Role labels are
//! kept on generated graphs so tests can address vertices by name.

use crate::graph::{Graph, VertexSet};
use crate::patterns::first_induced_match;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("path parameter must be at least 3, got {k}")]
    PathTooShort { k: usize },
    #[error("bad family parameter token {token:?} (expected T or an integer >= 3)")]
    BadToken { token: String },
    #[error("expected three comma-separated parameters, got {count}")]
    WrongArity { count: usize },
}

/// How one corresponding pair {a_i, b_i} is joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Link {
    Triangle,
    Path(usize),
}

impl Link {
    /// Extra vertices this link contributes beyond the two triangles.
    fn extra_vertices(&self) -> usize {
        match *self {
            Link::Triangle => 1,
            Link::Path(k) => k - 2,
        }
    }

    fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            Link::Path(k) if k < 3 => Err(FamilyError::PathTooShort { k }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Link::Triangle => write!(f, "T"),
            Link::Path(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub links: [Link; 3],
}

impl FamilyParams {
    pub fn new(links: [Link; 3]) -> Result<Self, FamilyError> {
        for link in &links {
            link.validate()?;
        }
        Ok(FamilyParams { links })
    }

    pub fn order(&self) -> usize {
        6 + self.links.iter().map(Link::extra_vertices).sum::<usize>()
    }

    /// Parses `"T,T,T"` or `"3,T,4"`.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
        if tokens.len() != 3 {
            return Err(FamilyError::WrongArity {
                count: tokens.len(),
            });
        }
        let mut links = [Link::Triangle; 3];
        for (slot, token) in links.iter_mut().zip(&tokens) {
            *slot = if token.eq_ignore_ascii_case("t") {
                Link::Triangle
            } else {
                let k: usize = token.parse().map_err(|_| FamilyError::BadToken {
                    token: token.to_string(),
                })?;
                Link::Path(k)
            };
        }
        FamilyParams::new(links)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.links[0], self.links[1], self.links[2])
    }
}

/// A family member with its role labels (`a1..a3`, `b1..b3`, `c1`, `c2^1`, ...).
#[derive(Debug, Clone)]
pub struct BrousekGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl BrousekGraph {
    pub fn vertex(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("no vertex labeled {label}"))
    }
}

/// Builds P_{l1,l2,l3}: vertices 0..=2 are a1,a2,a3; 3..=5 are b1,b2,b3; link
/// vertices follow in coordinate order.
pub fn brousek(params: &FamilyParams) -> Result<BrousekGraph, FamilyError> {
    for link in &params.links {
        link.validate()?;
    }
    let mut labels: Vec<String> = (1..=3).map(|i| format!("a{i}")).collect();
    labels.extend((1..=3).map(|i| format!("b{i}")));
    let mut g = Graph::empty(params.order());
    for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
        g.add_edge(u, v);
    }
    let mut next = 6;
    for (i, link) in params.links.iter().enumerate() {
        let (a, b) = (i, 3 + i);
        match *link {
            Link::Triangle => {
                labels.push(format!("c{}", i + 1));
                g.add_edge(a, b);
                g.add_edge(a, next);
                g.add_edge(b, next);
                next += 1;
            }
            Link::Path(k) => {
                let mut prev = a;
                for j in 1..=k - 2 {
                    labels.push(format!("c{}^{}", i + 1, j));
                    g.add_edge(prev, next);
                    prev = next;
                    next += 1;
                }
                g.add_edge(prev, b);
            }
        }
    }
    debug_assert_eq!(next, g.n());
    Ok(BrousekGraph { graph: g, labels })
}

pub fn l1() -> BrousekGraph {
    brousek(&FamilyParams {
        links: [Link::Triangle; 3],
    })
    .expect("valid parameters")
}

pub fn l2() -> BrousekGraph {
    brousek(&FamilyParams {
        links: [Link::Path(3), Link::Triangle, Link::Triangle],
    })
    .expect("valid parameters")
}

/// Finds an induced copy of some family member in `g`, trying parameter
/// triples in deterministic sorted order (T before 3 before 4 before ...).
/// The family is symmetric under coordinate permutation, so sorted triples
/// cover it. Intended for `g.n() <= 12`.
pub fn contains_brousek_member(g: &Graph) -> Option<(FamilyParams, VertexSet)> {
    let n = g.n();
    if n < 9 {
        return None;
    }
    // rank 0 = T (1 extra vertex), rank r >= 1 = Path(r + 2) (r extras).
    let link_of = |rank: usize| {
        if rank == 0 {
            Link::Triangle
        } else {
            Link::Path(rank + 2)
        }
    };
    let max_rank = n - 8; // the other two links contribute at least 1 each
    for r1 in 0..=max_rank {
        for r2 in r1..=max_rank {
            for r3 in r2..=max_rank {
                let params = FamilyParams {
                    links: [link_of(r1), link_of(r2), link_of(r3)],
                };
                if params.order() > n {
                    continue;
                }
                let member = brousek(&params).expect("ranks yield valid parameters");
                if let Some(members) = first_induced_match(g, &member.graph) {
                    return Some((params, members));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn l1_shape() {
        let l1 = l1();
        assert_eq!(l1.graph.n(), 9);
        assert_eq!(l1.graph.edge_count(), 15);
        assert_eq!(l1.graph.degree_sequence(), vec![2, 2, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(l1.vertex("c2"), 7);
        assert_eq!(l1.graph.degree(l1.vertex("c2")), 2);
    }

    #[test]
    fn l2_shape() {
        let l2 = l2();
        assert_eq!(l2.graph.n(), 9);
        assert_eq!(l2.graph.edge_count(), 14);
        // c1^1 is the middle of the 3-path: degree 2, ends not adjacent.
        let c11 = l2.vertex("c1^1");
        assert_eq!(l2.graph.degree(c11), 2);
        assert!(!l2.graph.has_edge(l2.vertex("a1"), l2.vertex("b1")));
    }

    #[test]
    fn l1_l2_not_isomorphic() {
        assert!(are_isomorphic(&l1().graph, &l2().graph).is_none());
    }

    #[test]
    fn brousek_vertex_and_edge_counts() {
        let p333 = brousek(&FamilyParams::parse("3,3,3").unwrap()).unwrap();
        assert_eq!(p333.graph.n(), 9);
        assert_eq!(p333.graph.edge_count(), 12);
        // Counts follow the construction: 6 + sum of extras vertices;
        // 6 + sum of per-link edges (T: 3, path k: k-1).
        for (text, vertices, edges) in [
            ("T,T,T", 9, 15),
            ("3,T,T", 9, 14),
            ("4,T,T", 10, 15),
            ("3,3,T", 9, 13),
            ("5,4,3", 12, 15),
        ] {
            let params = FamilyParams::parse(text).unwrap();
            let member = brousek(&params).unwrap();
            assert_eq!(member.graph.n(), vertices, "order of {text}");
            assert_eq!(member.graph.edge_count(), edges, "edges of {text}");
            assert_eq!(member.labels.len(), member.graph.n());
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            FamilyParams::parse("T,T"),
            Err(FamilyError::WrongArity { count: 2 })
        );
        assert_eq!(
            FamilyParams::parse("2,T,T"),
            Err(FamilyError::PathTooShort { k: 2 })
        );
        assert!(matches!(
            FamilyParams::parse("x,T,T"),
            Err(FamilyError::BadToken { .. })
        ));
        assert_eq!(FamilyParams::parse("T,T,T").unwrap().to_string(), "T,T,T");
    }

    #[test]
    fn member_search_finds_l1_in_itself() {
        let l1 = l1();
        let (params, members) = contains_brousek_member(&l1.graph).unwrap();
        assert_eq!(params.links, [Link::Triangle; 3]);
        assert_eq!(members, l1.graph.vertex_set());
    }

    #[test]
    fn member_search_small_graphs_empty() {
        assert!(contains_brousek_member(&Graph::cycle(5)).is_none());
        assert!(contains_brousek_member(&Graph::complete(8)).is_none());
    }
}
