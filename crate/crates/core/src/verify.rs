//! Verification harness: per-graph condition reports, censuses over graph
//! streams, and seeded random sampling.
//!
//! Counterexamples never abort a census; every graph is processed and all
//! failures are reported with their graph6 witnesses. Aggregation is
//! commutative, so running with one worker or many yields identical
//! summaries.

use crate::closure::{compute_closure, compute_closure_seeded};
use crate::families;
use crate::families::contains_brousek_member;
use crate::graph::Graph;
use crate::hamilton::{circumference, hamiltonian_cycle, CycleSearch};
use crate::io::write_graph6;
use crate::iso::are_isomorphic;
use crate::patterns::{
    center_heavy_z3_violation, f_heavy_violation, is_f_heavy, is_free, is_o_heavy,
    o_heavy_violation, PatternName,
};
use crate::regions::{check_lemma1_3, check_lemma2, decompose};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

/// Identifies the random model for reproduction: edge-independent G(n, p)
/// drawn from a ChaCha8 stream in upper-triangle column-major order.
pub const GENERATOR_ALGORITHM: &str = "gnp/chacha8/column-major";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub two_connected: bool,
    pub claw_o_heavy: bool,
    pub z3_f_heavy: bool,
    pub claw_free: bool,
    pub z3_free: bool,
    pub claw_f_heavy: bool,
}

impl Hypotheses {
    /// The main-theorem hypothesis triple.
    pub fn main_applicable(&self) -> bool {
        self.two_connected && self.claw_o_heavy && self.z3_f_heavy
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Conclusions {
    pub hamiltonian: bool,
    pub iso_l1: bool,
    pub iso_l2: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Z3FViolation {
    pub members: Vec<usize>,
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct Witnesses {
    /// Present iff hamiltonian.
    pub hamilton_cycle: Option<Vec<usize>>,
    /// Claw with no heavy nonadjacent pair, iff not claw-o-heavy.
    pub violating_claw: Option<Vec<usize>>,
    /// Z_3 copy and light distance-2 pair, iff not Z_3-f-heavy.
    pub violating_z3: Option<Z3FViolation>,
    /// Vertex map onto L1 or L2, iff one of the iso flags holds.
    pub iso_map: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClosureSummary {
    pub edges_added: usize,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct RegionSummary {
    pub regions: usize,
    pub interior: usize,
    pub frontier: usize,
}

/// Everything the main theorem talks about, evaluated on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub hypotheses: Hypotheses,
    pub conclusions: Conclusions,
    pub witnesses: Witnesses,
    /// Present iff claw-o-heavy (the closure is unique only then).
    pub closure: Option<ClosureSummary>,
    pub regions: Option<RegionSummary>,
}

pub fn analyze(g: &Graph) -> ConditionReport {
    let claw_violation = o_heavy_violation(g, PatternName::Claw);
    let z3_violation = f_heavy_violation(g, PatternName::Z(3));
    let hypotheses = Hypotheses {
        two_connected: g.is_2_connected(),
        claw_o_heavy: claw_violation.is_none(),
        z3_f_heavy: z3_violation.is_none(),
        claw_free: is_free(g, PatternName::Claw),
        z3_free: is_free(g, PatternName::Z(3)),
        claw_f_heavy: is_f_heavy(g, PatternName::Claw),
    };
    let cycle = hamiltonian_cycle(g);
    let iso_l1 = are_isomorphic(g, &families::l1().graph);
    let iso_l2 = are_isomorphic(g, &families::l2().graph);
    let conclusions = Conclusions {
        hamiltonian: cycle.is_found(),
        iso_l1: iso_l1.is_some(),
        iso_l2: iso_l2.is_some(),
    };
    let (closure, region_summary) = if hypotheses.claw_o_heavy {
        let (closed, trace) = compute_closure(g).expect("claw-o-heavy checked");
        let regions = decompose(g, &closed).ok().map(|d| RegionSummary {
            regions: d.regions().len(),
            interior: d.interior_vertices().len(),
            frontier: d.frontier_vertices().len(),
        });
        (
            Some(ClosureSummary {
                edges_added: trace.edges_added(),
                steps: trace.steps.len(),
            }),
            regions,
        )
    } else {
        (None, None)
    };
    ConditionReport {
        graph6: write_graph6(g).unwrap_or_else(|e| format!("(unencodable: {e})")),
        n: g.n(),
        edges: g.edge_count(),
        hypotheses,
        conclusions,
        witnesses: Witnesses {
            hamilton_cycle: match cycle {
                CycleSearch::Found(c) => Some(c),
                _ => None,
            },
            violating_claw: claw_violation.map(|s| s.to_vec()),
            violating_z3: z3_violation.map(|(members, pair)| Z3FViolation {
                members: members.to_vec(),
                pair,
            }),
            iso_map: iso_l1.or(iso_l2),
        },
        closure,
        regions: region_summary,
    }
}

/// Verdict of the main theorem on one graph. A counterexample would refute
/// the theorem, so it carries the full report.
#[derive(Debug, Clone, Serialize)]
pub enum MainVerdict {
    NotApplicable,
    PassHamiltonian,
    PassException,
    Counterexample(Box<ConditionReport>),
}

pub fn check_main_theorem(g: &Graph) -> MainVerdict {
    let report = analyze(g);
    if !report.hypotheses.main_applicable() {
        return MainVerdict::NotApplicable;
    }
    if report.conclusions.hamiltonian {
        MainVerdict::PassHamiltonian
    } else if report.conclusions.iso_l1 || report.conclusions.iso_l2 {
        MainVerdict::PassException
    } else {
        MainVerdict::Counterexample(Box::new(report))
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub enum Lemma3Verdict {
    NotApplicable,
    Pass,
    /// A Z_3 copy in the closure whose a1 vertex is light.
    Fail {
        members: Vec<usize>,
    },
}

/// For claw-o-heavy, Z_3-f-heavy input: the closure must be Z_3-center-heavy.
pub fn check_lemma3(g: &Graph) -> Lemma3Verdict {
    if !is_o_heavy(g, PatternName::Claw) || !is_f_heavy(g, PatternName::Z(3)) {
        return Lemma3Verdict::NotApplicable;
    }
    let (closed, _) = compute_closure(g).expect("claw-o-heavy checked");
    match center_heavy_z3_violation(&closed) {
        None => Lemma3Verdict::Pass,
        Some(members) => Lemma3Verdict::Fail {
            members: members.to_vec(),
        },
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub enum BrousekVerdict {
    NotApplicable,
    /// The found member and its vertex set.
    Pass {
        params: String,
        members: Vec<usize>,
    },
    Fail,
}

/// Every non-hamiltonian 2-connected claw-free graph must contain an induced
/// family member. Intended for n <= 12.
pub fn check_brousek_theorem(g: &Graph) -> BrousekVerdict {
    if !g.is_2_connected() || !is_free(g, PatternName::Claw) || hamiltonian_cycle(g).is_found() {
        return BrousekVerdict::NotApplicable;
    }
    match contains_brousek_member(g) {
        Some((params, members)) => BrousekVerdict::Pass {
            params: params.to_string(),
            members: members.to_vec(),
        },
        None => BrousekVerdict::Fail,
    }
}

/// One census check, named as on the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Main,
    Lemma1,
    Lemma2,
    Lemma3,
    Brousek,
    ClosureUnique,
    Circumference,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Main,
        Check::Lemma1,
        Check::Lemma2,
        Check::Lemma3,
        Check::Brousek,
        Check::ClosureUnique,
        Check::Circumference,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::Lemma1 => "lemma1",
            Check::Lemma2 => "lemma2",
            Check::Lemma3 => "lemma3",
            Check::Brousek => "brousek",
            Check::ClosureUnique => "closure-unique",
            Check::Circumference => "circumference",
        }
    }

    pub fn parse_token(token: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.token() == token)
    }
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub checks: Vec<Check>,
    /// Worker threads; 0 or 1 means sequential.
    pub jobs: usize,
    /// Base seed for the per-graph randomized orders of `ClosureUnique`.
    pub seed: u64,
    /// Graphs below this order count as not applicable for every check.
    pub min_order: usize,
}

/// One census input line: a parsed graph or a malformed-line record.
#[derive(Debug, Clone)]
pub enum CensusInput {
    Graph(Graph),
    Malformed { line: usize, message: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub report: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusSummary {
    pub checked: usize,
    pub applicable: usize,
    pub passed: usize,
    pub exceptions: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    pub skipped: usize,
    pub elapsed_ms: u64,
}

impl CensusSummary {
    pub fn all_passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Evaluation {
    applicable: bool,
    failed: bool,
    exception: Option<String>,
    failures: Vec<Value>,
}

pub fn census<I>(inputs: I, opts: &CensusOptions) -> CensusSummary
where
    I: IntoIterator<Item = CensusInput>,
{
    let started = Instant::now();
    let inputs: Vec<CensusInput> = inputs.into_iter().collect();
    let evaluate_indexed = |(idx, input): (usize, &CensusInput)| match input {
        CensusInput::Graph(g) => Some(evaluate(g, idx, opts)),
        CensusInput::Malformed { .. } => None,
    };
    let results: Vec<Option<Evaluation>> = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            inputs
                .par_iter()
                .enumerate()
                .map(evaluate_indexed)
                .collect()
        })
    } else {
        inputs.iter().enumerate().map(evaluate_indexed).collect()
    };
    let mut summary = CensusSummary {
        checked: 0,
        applicable: 0,
        passed: 0,
        exceptions: Vec::new(),
        counterexamples: Vec::new(),
        skipped: 0,
        elapsed_ms: 0,
    };
    for (input, result) in inputs.iter().zip(results) {
        match (input, result) {
            (CensusInput::Malformed { .. }, _) | (_, None) => summary.skipped += 1,
            (CensusInput::Graph(g), Some(eval)) => {
                summary.checked += 1;
                if eval.applicable {
                    summary.applicable += 1;
                    if eval.failed {
                        summary.counterexamples.push(Counterexample {
                            graph6: graph6_of(g),
                            report: Value::Array(eval.failures),
                        });
                    } else {
                        summary.passed += 1;
                        if let Some(g6) = eval.exception {
                            summary.exceptions.push(g6);
                        }
                    }
                }
            }
        }
    }
    summary.elapsed_ms = started.elapsed().as_millis() as u64;
    summary
}

fn graph6_of(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|e| format!("(unencodable: {e})"))
}

fn evaluate(g: &Graph, idx: usize, opts: &CensusOptions) -> Evaluation {
    let mut eval = Evaluation {
        applicable: false,
        failed: false,
        exception: None,
        failures: Vec::new(),
    };
    if g.n() < opts.min_order {
        return eval;
    }
    let claw_o_heavy = is_o_heavy(g, PatternName::Claw);
    let needs_closure = opts
        .checks
        .iter()
        .any(|c| matches!(c, Check::Lemma1 | Check::Lemma2 | Check::Circumference));
    let closed = if claw_o_heavy && needs_closure {
        Some(compute_closure(g).expect("claw-o-heavy checked").0)
    } else {
        None
    };
    let fail = |eval: &mut Evaluation, check: Check, detail: Value| {
        eval.failed = true;
        eval.failures
            .push(json!({ "check": check.token(), "detail": detail }));
    };
    for &check in &opts.checks {
        match check {
            Check::Main => match check_main_theorem(g) {
                MainVerdict::NotApplicable => {}
                MainVerdict::PassHamiltonian => eval.applicable = true,
                MainVerdict::PassException => {
                    eval.applicable = true;
                    eval.exception = Some(graph6_of(g));
                }
                MainVerdict::Counterexample(report) => {
                    eval.applicable = true;
                    fail(
                        &mut eval,
                        check,
                        serde_json::to_value(*report).expect("serializable"),
                    );
                }
            },
            Check::Lemma1 | Check::Lemma2 => {
                let Some(closed) = closed.as_ref() else {
                    continue;
                };
                eval.applicable = true;
                match decompose(g, closed) {
                    Err(e) => fail(&mut eval, check, json!(e.to_string())),
                    Ok(d) => {
                        if check == Check::Lemma1 {
                            if let Err(v) = check_lemma1_3(g, closed, &d) {
                                fail(
                                    &mut eval,
                                    check,
                                    serde_json::to_value(v).expect("serializable"),
                                );
                            }
                        } else if let Err(v) = check_lemma2(g, closed, &d) {
                            fail(
                                &mut eval,
                                check,
                                serde_json::to_value(v).expect("serializable"),
                            );
                        }
                    }
                }
            }
            Check::Lemma3 => match check_lemma3(g) {
                Lemma3Verdict::NotApplicable => {}
                Lemma3Verdict::Pass => eval.applicable = true,
                Lemma3Verdict::Fail { members } => {
                    eval.applicable = true;
                    fail(&mut eval, check, json!({ "members": members }));
                }
            },
            Check::Brousek => match check_brousek_theorem(g) {
                BrousekVerdict::NotApplicable => {}
                BrousekVerdict::Pass { .. } => eval.applicable = true,
                BrousekVerdict::Fail => {
                    eval.applicable = true;
                    fail(&mut eval, check, json!("no induced family member found"));
                }
            },
            Check::ClosureUnique => {
                if !claw_o_heavy {
                    continue;
                }
                eval.applicable = true;
                let seed_a = opts.seed ^ (idx as u64).wrapping_mul(0x9e3779b97f4a7c15);
                let seed_b = seed_a ^ 0x5555_5555_5555_5555;
                let (a, _) = compute_closure_seeded(g, seed_a).expect("claw-o-heavy checked");
                let (b, _) = compute_closure_seeded(g, seed_b).expect("claw-o-heavy checked");
                if a != b {
                    fail(
                        &mut eval,
                        check,
                        json!({
                            "order_a": graph6_of(&a),
                            "order_b": graph6_of(&b),
                        }),
                    );
                }
            }
            Check::Circumference => {
                let Some(closed) = closed.as_ref() else {
                    continue;
                };
                eval.applicable = true;
                let (c_g, _) = circumference(g);
                let (c_cl, _) = circumference(closed);
                let ham_equal =
                    hamiltonian_cycle(g).is_found() == hamiltonian_cycle(closed).is_found();
                if c_g != c_cl || !ham_equal {
                    fail(
                        &mut eval,
                        check,
                        json!({ "original": c_g, "closure": c_cl, "ham_equal": ham_equal }),
                    );
                }
            }
        }
    }
    eval
}

/// Seeded G(n, p) sampling parameters.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SampleParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFilter {
    TwoConnected,
    ClawOHeavy,
    Z3FHeavy,
    ClawFree,
    Z3Free,
    ClawFHeavy,
}

impl SampleFilter {
    pub const ALL: [SampleFilter; 6] = [
        SampleFilter::TwoConnected,
        SampleFilter::ClawOHeavy,
        SampleFilter::Z3FHeavy,
        SampleFilter::ClawFree,
        SampleFilter::Z3Free,
        SampleFilter::ClawFHeavy,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            SampleFilter::TwoConnected => "two-connected",
            SampleFilter::ClawOHeavy => "claw-o-heavy",
            SampleFilter::Z3FHeavy => "z3-f-heavy",
            SampleFilter::ClawFree => "claw-free",
            SampleFilter::Z3Free => "z3-free",
            SampleFilter::ClawFHeavy => "claw-f-heavy",
        }
    }

    pub fn parse_token(token: &str) -> Option<SampleFilter> {
        SampleFilter::ALL.into_iter().find(|f| f.token() == token)
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        match self {
            SampleFilter::TwoConnected => g.is_2_connected(),
            SampleFilter::ClawOHeavy => is_o_heavy(g, PatternName::Claw),
            SampleFilter::Z3FHeavy => is_f_heavy(g, PatternName::Z(3)),
            SampleFilter::ClawFree => is_free(g, PatternName::Claw),
            SampleFilter::Z3Free => is_free(g, PatternName::Z(3)),
            SampleFilter::ClawFHeavy => is_f_heavy(g, PatternName::Claw),
        }
    }
}

/// Draws exactly `params.count` graphs edge-independently with probability
/// `p` from a ChaCha8 stream, then yields those passing every filter.
/// Identical parameters yield identical graphs.
pub fn sample_random(
    params: SampleParams,
    filters: &[SampleFilter],
) -> impl Iterator<Item = Graph> + '_ {
    assert!((0.0..=1.0).contains(&params.p), "p must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut remaining = params.count;
    std::iter::from_fn(move || {
        while remaining > 0 {
            remaining -= 1;
            let g = draw_gnp(&mut rng, params.n, params.p);
            if filters.iter().all(|f| f.accepts(&g)) {
                return Some(g);
            }
        }
        None
    })
}

fn draw_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Collects `target` filtered samples from a deterministic (n, p) grid,
/// drawing at most `max_draws_per_cell` per cell (cell seeds derive from
/// `seed`). Returns fewer than `target` only when the whole grid is
/// exhausted, which in tests signals miscalibrated parameters.
pub fn collect_filtered(
    grid: &[(usize, f64)],
    seed: u64,
    target: usize,
    max_draws_per_cell: usize,
    filters: &[SampleFilter],
) -> Vec<Graph> {
    let mut out = Vec::with_capacity(target);
    for (cell, &(n, p)) in grid.iter().enumerate() {
        let params = SampleParams {
            n,
            p,
            seed: seed.wrapping_add(cell as u64),
            count: max_draws_per_cell,
        };
        for g in sample_random(params, filters) {
            out.push(g);
            if out.len() == target {
                return out;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_graphs;
    use crate::io::parse_graph6;

    fn k33() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
    }

    #[test]
    fn analyze_k33() {
        let report = analyze(&k33());
        assert!(report.hypotheses.two_connected);
        assert!(report.hypotheses.claw_o_heavy);
        assert!(report.hypotheses.z3_f_heavy);
        assert!(!report.hypotheses.claw_free);
        assert!(report.hypotheses.z3_free);
        assert!(report.conclusions.hamiltonian);
        assert!(report.witnesses.hamilton_cycle.is_some());
        let closure = report.closure.unwrap();
        assert_eq!(closure.edges_added, 6);
        assert_eq!(report.regions.unwrap().regions, 1);
    }

    #[test]
    fn analyze_petersen() {
        let report = analyze(&Graph::petersen());
        assert!(report.hypotheses.two_connected);
        assert!(!report.hypotheses.claw_o_heavy);
        assert!(report.witnesses.violating_claw.is_some());
        assert!(report.closure.is_none());
        assert!(matches!(
            check_main_theorem(&Graph::petersen()),
            MainVerdict::NotApplicable
        ));
    }

    #[test]
    fn main_theorem_verdicts() {
        assert!(matches!(
            check_main_theorem(&k33()),
            MainVerdict::PassHamiltonian
        ));
        assert!(matches!(
            check_main_theorem(&families::l2().graph),
            MainVerdict::PassException
        ));
        assert!(matches!(
            check_main_theorem(&Graph::path(4)),
            MainVerdict::NotApplicable
        ));
    }

    #[test]
    fn lemma3_examples() {
        assert_eq!(check_lemma3(&k33()), Lemma3Verdict::Pass);
        assert_eq!(
            check_lemma3(&Graph::petersen()),
            Lemma3Verdict::NotApplicable
        );
    }

    #[test]
    fn brousek_examples() {
        assert!(matches!(
            check_brousek_theorem(&families::l1().graph),
            BrousekVerdict::Pass { .. }
        ));
        assert!(matches!(
            check_brousek_theorem(&Graph::complete(5)),
            BrousekVerdict::NotApplicable
        ));
    }

    #[test]
    fn census_over_small_enumeration() {
        let inputs: Vec<CensusInput> = enumerate_graphs(5)
            .unwrap()
            .into_iter()
            .map(CensusInput::Graph)
            .collect();
        let opts = CensusOptions {
            checks: vec![Check::Main],
            ..CensusOptions::default()
        };
        let summary = census(inputs, &opts);
        assert_eq!(summary.checked, 34);
        assert!(summary.all_passed());
        assert!(summary.counterexamples.is_empty());
        assert_eq!(summary.applicable, summary.passed);
    }

    #[test]
    fn census_counts_malformed() {
        let inputs = vec![
            CensusInput::Graph(Graph::cycle(4)),
            CensusInput::Malformed {
                line: 2,
                message: "bad".into(),
            },
        ];
        let opts = CensusOptions {
            checks: vec![Check::Main],
            ..Default::default()
        };
        let summary = census(inputs, &opts);
        assert_eq!(summary.checked, 1);
        assert_eq!(summary.skipped, 1);
    }

    #[test]
    fn census_parallel_matches_sequential() {
        let inputs: Vec<CensusInput> = enumerate_graphs(6)
            .unwrap()
            .into_iter()
            .map(CensusInput::Graph)
            .collect();
        let mut opts = CensusOptions {
            checks: vec![Check::Main, Check::Lemma1, Check::Lemma2],
            seed: 7,
            ..Default::default()
        };
        let sequential = census(inputs.clone(), &opts);
        opts.jobs = 4;
        let parallel = census(inputs, &opts);
        assert_eq!(sequential.checked, parallel.checked);
        assert_eq!(sequential.applicable, parallel.applicable);
        assert_eq!(sequential.passed, parallel.passed);
        assert_eq!(sequential.exceptions, parallel.exceptions);
        assert_eq!(
            serde_json::to_value(&sequential.counterexamples).unwrap(),
            serde_json::to_value(&parallel.counterexamples).unwrap()
        );
    }

    #[test]
    fn min_order_marks_not_applicable() {
        let inputs = vec![CensusInput::Graph(k33())];
        let opts = CensusOptions {
            checks: vec![Check::Main],
            min_order: 10,
            ..Default::default()
        };
        let summary = census(inputs, &opts);
        assert_eq!(summary.checked, 1);
        assert_eq!(summary.applicable, 0);
    }

    #[test]
    fn sampling_is_deterministic() {
        let params = SampleParams {
            n: 10,
            p: 0.5,
            seed: 42,
            count: 20,
        };
        let a: Vec<String> = sample_random(params, &[])
            .map(|g| write_graph6(&g).unwrap())
            .collect();
        let b: Vec<String> = sample_random(params, &[])
            .map(|g| write_graph6(&g).unwrap())
            .collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        for s in &a {
            assert_eq!(parse_graph6(s).unwrap().n(), 10);
        }
    }

    #[test]
    fn sampling_extremes() {
        let complete = SampleParams {
            n: 8,
            p: 1.0,
            seed: 1,
            count: 3,
        };
        for g in sample_random(complete, &[]) {
            assert_eq!(g, Graph::complete(8));
        }
        let empty = SampleParams {
            n: 8,
            p: 0.0,
            seed: 1,
            count: 3,
        };
        assert_eq!(
            sample_random(empty, &[SampleFilter::TwoConnected]).count(),
            0
        );
    }

    #[test]
    fn summary_serialization_shape() {
        let summary = census(
            vec![CensusInput::Graph(k33())],
            &CensusOptions {
                checks: vec![Check::Main],
                ..Default::default()
            },
        );
        let json = serde_json::to_value(&summary).unwrap();
        for key in [
            "checked",
            "applicable",
            "passed",
            "exceptions",
            "counterexamples",
            "skipped",
            "elapsed_ms",
        ] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
    }
}
