//! Structural invariants of closure outputs across the exhaustive small
//! census and seeded random samples: neighborhoods collapse to one or two
//! cliques, traces replay exactly, and the root-graph reconstruction holds
//! on every closed graph encountered.

use clawheavy::closure::{
    compute_closure, is_o_eligible, local_completion, neighborhood_is_clique_or_two, root_graph,
};
use clawheavy::enumerate::enumerate_graphs;
use clawheavy::graph::Graph;
use clawheavy::io::write_graph6;
use clawheavy::iso::are_isomorphic;
use clawheavy::patterns::{is_o_heavy, PatternName};
use clawheavy::verify::{collect_filtered, SampleFilter};

fn claw_o_heavy_census(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| enumerate_graphs(n).unwrap())
        .filter(|g| is_o_heavy(g, PatternName::Claw))
        .collect()
}

#[test]
fn closed_graphs_have_clique_or_two_neighborhoods() {
    let mut sample = claw_o_heavy_census(6);
    sample.extend(collect_filtered(
        &[(9, 0.6), (10, 0.6), (11, 0.6)],
        0xBEEF,
        150,
        5000,
        &[SampleFilter::ClawOHeavy],
    ));
    for g in &sample {
        let (closed, _) = compute_closure(g).unwrap();
        for v in closed.vertices() {
            assert!(
                neighborhood_is_clique_or_two(&closed, v),
                "vertex {v} of the closure of {}",
                write_graph6(g).unwrap()
            );
        }
        assert!(closed.vertices().all(|v| !is_o_eligible(&closed, v)));
    }
}

#[test]
fn traces_replay_to_the_closure() {
    let sample = collect_filtered(
        &[(8, 0.55), (9, 0.55), (10, 0.55)],
        0xCAFE,
        120,
        5000,
        &[SampleFilter::ClawOHeavy],
    );
    for g in &sample {
        let (closed, trace) = compute_closure(g).unwrap();
        let mut replay = g.clone();
        for step in &trace.steps {
            assert!(is_o_eligible(&replay, step.vertex));
            for &(u, v) in &step.added_edges {
                assert!(!replay.has_edge(u, v), "edge ({u},{v}) added twice");
            }
            replay = local_completion(&replay, step.vertex);
        }
        assert_eq!(replay, closed);
        assert_eq!(
            g.edge_count() + trace.edges_added(),
            closed.edge_count(),
            "trace bookkeeping for {}",
            write_graph6(g).unwrap()
        );
    }
}

#[test]
fn root_graph_holds_on_census_closures() {
    for g in claw_o_heavy_census(7) {
        let (closed, _) = compute_closure(&g).unwrap();
        let root = root_graph(&closed)
            .unwrap_or_else(|e| panic!("root failed for {}: {e}", write_graph6(&g).unwrap()));
        assert!(are_isomorphic(&root.line_graph(), &closed).is_some());
    }
}
