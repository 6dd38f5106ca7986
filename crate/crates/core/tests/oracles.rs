//! Cross-checks against independent brute-force oracles. Each oracle here is
//! written from the relevant definition (permutation scans, per-vertex
//! deletion, subset enumeration) and stays independent of the implementation
//! path it checks.

use clawheavy::enumerate::enumerate_graphs;
use clawheavy::families::{brousek, l1, l2, FamilyParams, Link};
use clawheavy::graph::{Graph, VertexSet};
use clawheavy::hamilton::{circumference, hamiltonian_cycle, is_valid_cycle, CycleSearch};
use clawheavy::io::{parse_graph6, write_graph6};
use clawheavy::iso::{are_isomorphic, witness_valid};
use clawheavy::patterns::{find_induced, is_f_heavy, is_free, is_o_heavy, PatternName};
use clawheavy::verify::{sample_random, SampleParams};
use itertools::Itertools;

fn census_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .collect()
}

/// Brute-force isomorphism: try every bijection. The degree-sequence guard
/// is a definitional necessary condition, kept only to make the n = 9..10
/// host scans bearable.
fn iso_oracle(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    (0..g.n()).permutations(g.n()).any(|perm| {
        (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v])))
    })
}

#[test]
fn graph6_roundtrip_whole_census() {
    for g in census_up_to(7) {
        let s = write_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}

#[test]
fn isomorphism_reflexive_on_census() {
    for g in census_up_to(6) {
        let w = are_isomorphic(&g, &g).expect("graph isomorphic to itself");
        assert!(witness_valid(&g, &g, &w));
    }
}

#[test]
fn isomorphism_symmetric_on_random_pairs() {
    let graphs = enumerate_graphs(6).unwrap();
    // Deterministic pair picks; 1000 pairs.
    let mut state = 0xfeed_5eedu64;
    let mut next = |m: usize| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as usize % m
    };
    for _ in 0..1000 {
        let g = &graphs[next(graphs.len())];
        let h = &graphs[next(graphs.len())];
        let gh = are_isomorphic(g, h);
        let hg = are_isomorphic(h, g);
        assert_eq!(gh.is_some(), hg.is_some());
        if let Some(w) = gh {
            assert!(witness_valid(g, h, &w));
        }
        if let Some(w) = hg {
            assert!(witness_valid(h, g, &w));
        }
    }
}

#[test]
fn isomorphism_matches_permutation_oracle_small() {
    // Exhaustive on n <= 4 (11 classes -> 55 + 11 ordered checks), plus the
    // named pair the theorem cares about.
    let graphs = census_up_to(4);
    for g in &graphs {
        for h in &graphs {
            assert_eq!(are_isomorphic(g, h).is_some(), iso_oracle(g, h));
        }
    }
    assert!(!iso_oracle(&l1().graph, &l2().graph));
    assert!(are_isomorphic(&l1().graph, &l2().graph).is_none());
}

#[test]
fn enumeration_matches_labeled_dedup_oracle() {
    // Count classes at n = 4, 5 by deduplicating all labeled graphs with the
    // brute-force oracle.
    for (n, want) in [(4usize, 11usize), (5, 34)] {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut classes: Vec<Graph> = Vec::new();
        for mask in 0u64..(1 << pairs.len()) {
            let mut g = Graph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    g.add_edge(u, v);
                }
            }
            if !classes.iter().any(|c| iso_oracle(c, &g)) {
                classes.push(g);
            }
        }
        assert_eq!(classes.len(), want);
        assert_eq!(enumerate_graphs(n).unwrap().len(), want);
    }
}

#[test]
fn two_connectivity_matches_deletion_definition() {
    // Definition: n >= 3, connected, and g - v connected for every v.
    let deletion_oracle = |g: &Graph| -> bool {
        g.n() >= 3
            && g.is_connected()
            && g.vertices()
                .all(|v| g.is_connected_within(g.vertex_set().without(v)))
    };
    for g in census_up_to(6) {
        assert_eq!(g.is_2_connected(), deletion_oracle(&g), "{g:?}");
    }
    assert!(l1().graph.is_2_connected());
}

#[test]
fn find_induced_matches_subset_scan_oracle() {
    // Oracle: every k-subset, tested with the brute-force permutation iso.
    let patterns = [
        PatternName::Claw,
        PatternName::Cycle3,
        PatternName::Path(3),
        PatternName::Path(5),
        PatternName::Z(1),
        PatternName::Z(3),
        PatternName::Bull,
        PatternName::Net,
        PatternName::Wounded,
    ];
    for g in census_up_to(6) {
        for name in patterns {
            let pat = name.build().unwrap();
            if pat.n() > g.n() {
                assert!(find_induced(&g, name).is_empty());
                continue;
            }
            let expected: Vec<VertexSet> = (0..g.n())
                .combinations(pat.n())
                .map(|subset| subset.into_iter().collect::<VertexSet>())
                .filter(|&s| {
                    let (sub, _) = g.induced(s);
                    iso_oracle(&sub, &pat)
                })
                .collect();
            assert_eq!(find_induced(&g, name), expected, "{name:?} in {g:?}");
        }
    }
}

#[test]
fn freeness_implies_heaviness_on_census() {
    for g in census_up_to(6) {
        for name in [PatternName::Claw, PatternName::Z(3)] {
            if is_free(&g, name) {
                assert!(is_o_heavy(&g, name));
                assert!(is_f_heavy(&g, name));
            }
        }
        if is_f_heavy(&g, PatternName::Claw) {
            assert!(is_o_heavy(&g, PatternName::Claw));
        }
    }
}

/// Permutation oracle: a Hamilton cycle exists iff some vertex order starting
/// at 0 closes up.
fn hamilton_oracle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    (1..n).permutations(n - 1).any(|rest| {
        let mut cycle = vec![0];
        cycle.extend(rest);
        is_valid_cycle(g, &cycle)
    })
}

#[test]
fn hamilton_matches_permutation_oracle() {
    for g in census_up_to(7) {
        let got = hamiltonian_cycle(&g);
        assert_eq!(got.is_found(), hamilton_oracle(&g), "{g:?}");
        if let CycleSearch::Found(cycle) = got {
            assert!(is_valid_cycle(&g, &cycle));
        }
    }
}

/// Subset-and-rotation oracle for the longest cycle.
fn circumference_oracle(g: &Graph) -> usize {
    let n = g.n();
    (3..=n)
        .rev()
        .find(|&k| {
            (0..n).combinations(k).any(|subset| {
                let (sub, _) = g.induced(subset.into_iter().collect());
                hamilton_oracle(&sub)
            })
        })
        .unwrap_or(0)
}

#[test]
fn circumference_matches_subset_oracle() {
    for g in census_up_to(6) {
        let (len, witness) = circumference(&g);
        assert_eq!(len, circumference_oracle(&g), "{g:?}");
        if let Some(cycle) = witness {
            assert_eq!(cycle.len(), len);
            assert!(is_valid_cycle(&g, &cycle));
        }
    }
}

#[test]
fn hamiltonian_iff_full_circumference() {
    for g in census_up_to(7) {
        assert_eq!(
            hamiltonian_cycle(&g).is_found(),
            circumference(&g).0 == g.n()
        );
    }
    // Same equivalence on a seeded random batch at n = 8.
    let params = SampleParams {
        n: 8,
        p: 0.5,
        seed: 2024,
        count: 60,
    };
    for g in sample_random(params, &[]) {
        assert_eq!(
            hamiltonian_cycle(&g).is_found(),
            circumference(&g).0 == g.n()
        );
    }
}

#[test]
fn brousek_members_up_to_12_are_exceptional() {
    // Every family member of order <= 12 is 2-connected, claw-free, and
    // non-hamiltonian.
    let link_of = |rank: usize| {
        if rank == 0 {
            Link::Triangle
        } else {
            Link::Path(rank + 2)
        }
    };
    let mut checked = 0;
    for r1 in 0..=4usize {
        for r2 in r1..=4 {
            for r3 in r2..=4 {
                let params = FamilyParams::new([link_of(r1), link_of(r2), link_of(r3)]).unwrap();
                if params.order() > 12 {
                    continue;
                }
                let member = brousek(&params).unwrap();
                assert!(member.graph.is_2_connected(), "P_{params}");
                assert!(is_free(&member.graph, PatternName::Claw), "P_{params}");
                assert!(!hamiltonian_cycle(&member.graph).is_found(), "P_{params}");
                checked += 1;
            }
        }
    }
    assert!(
        checked >= 10,
        "expected a meaningful member sweep, got {checked}"
    );
}

#[test]
fn member_search_matches_subset_oracle() {
    use clawheavy::families::contains_brousek_member;
    // Oracle: for each member of order <= n, test every subset of that size
    // with the brute-force permutation iso. Hosts: members themselves, a few
    // supergraphs of L1, and graphs with no member.
    let mut hosts: Vec<Graph> = vec![
        l1().graph,
        l2().graph,
        Graph::petersen(),
        Graph::complete(10),
    ];
    // L1 plus one extra dominating vertex (order 10).
    let mut extended = Graph::empty(10);
    for (u, v) in l1().graph.edges() {
        extended.add_edge(u, v);
    }
    for v in 0..9 {
        extended.add_edge(v, 9);
    }
    hosts.push(extended);
    let link_of = |rank: usize| {
        if rank == 0 {
            Link::Triangle
        } else {
            Link::Path(rank + 2)
        }
    };
    for host in &hosts {
        let mut oracle_hit = None;
        'outer: for r1 in 0..=2usize {
            for r2 in r1..=2 {
                for r3 in r2..=2 {
                    let params =
                        FamilyParams::new([link_of(r1), link_of(r2), link_of(r3)]).unwrap();
                    if params.order() > host.n() {
                        continue;
                    }
                    let member = brousek(&params).unwrap().graph;
                    let found = (0..host.n()).combinations(member.n()).any(|subset| {
                        let (sub, _) = host.induced(subset.into_iter().collect());
                        iso_oracle(&sub, &member)
                    });
                    if found {
                        oracle_hit = Some(params);
                        break 'outer;
                    }
                }
            }
        }
        let got = contains_brousek_member(host);
        assert_eq!(got.is_some(), oracle_hit.is_some(), "host {host:?}");
        if let (Some((params, members)), Some(oracle_params)) = (got, oracle_hit) {
            assert_eq!(params.order(), oracle_params.order());
            let (sub, _) = host.induced(members);
            assert!(iso_oracle(&sub, &brousek(&params).unwrap().graph));
        }
    }
}
