//! Command-line front end: every library operation behind a subcommand, with
//! graph6/edge-list input, human or JSON output, and the exit-status contract
//! 0 = pass/success, 1 = counterexample found, 2 = usage/parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use clawheavy::closure::compute_closure;
use clawheavy::enumerate::enumerate_graphs;
use clawheavy::families::{brousek, FamilyParams};
use clawheavy::graph::Graph;
use clawheavy::hamilton::{circumference, hamiltonian_cycle_with_budget, CycleSearch};
use clawheavy::io::{parse_edge_list, parse_graph6, write_graph6};
use clawheavy::patterns::{
    find_induced, is_f_heavy, is_free as is_pattern_free, is_o_heavy, PatternName,
};
use clawheavy::regions::decompose;
use clawheavy::verify::{
    analyze, census, sample_random, CensusInput, CensusOptions, CensusSummary, Check, SampleFilter,
    SampleParams, GENERATOR_ALGORITHM,
};
use serde_json::json;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "clawheavy",
    version,
    about = "Heavy-subgraph hamiltonicity toolkit: closures, regions, exact cycle search, censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate hypothesis and conclusion flags for each input graph
    Analyze(AnalyzeCmd),
    /// Compute the o-closure and its completion trace
    Closure(ClosureCmd),
    /// Region decomposition of the closure, mapped back onto the input
    Regions(RegionsCmd),
    /// Exact Hamiltonian-cycle search (or longest cycle with --circumference)
    Hamilton(HamiltonCmd),
    /// Generate a member of the two-triangle family P_{l1,l2,l3}
    Family(FamilyCmd),
    /// Run one named theorem/lemma check over a graph stream
    Verify(VerifyCmd),
    /// Run several checks over a graph stream and summarize
    Census(CensusCmd),
    /// Seeded G(n,p) sampling, filtered, as graph6 lines
    Sample(SampleCmd),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

/// Exactly one input source per invocation (the "source" group is mutually
/// exclusive; presence is enforced in `load`).
#[derive(Args)]
struct InputArgs {
    /// Literal graph6 string
    #[arg(long, value_name = "G6", group = "source")]
    graph6: Option<String>,
    /// Read graphs from a file (one graph6 line each, or one edge list)
    #[arg(long, value_name = "PATH", group = "source")]
    file: Option<String>,
    /// Read graphs from standard input
    #[arg(long, group = "source")]
    stdin: bool,
    /// Built-in census: all non-isomorphic graphs on N vertices (N <= 7)
    #[arg(long, value_name = "N", group = "source")]
    enumerate: Option<usize>,
    /// Input format for --file / --stdin
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

impl InputArgs {
    /// Reads all inputs, keeping malformed lines as records (for censuses).
    fn load(&self) -> Result<Vec<CensusInput>, String> {
        if self.graph6.is_none() && self.file.is_none() && !self.stdin && self.enumerate.is_none() {
            return Err("one of --graph6, --file, --stdin, --enumerate required".into());
        }
        if let Some(g6) = &self.graph6 {
            let g = parse_graph6(g6).map_err(|e| e.to_string())?;
            return Ok(vec![CensusInput::Graph(g)]);
        }
        if let Some(n) = self.enumerate {
            let graphs = enumerate_graphs(n).map_err(|e| e.to_string())?;
            return Ok(graphs.into_iter().map(CensusInput::Graph).collect());
        }
        let text = if let Some(path) = &self.file {
            fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
        } else {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        };
        match self.format {
            Format::EdgeList => {
                let g = parse_edge_list(&text).map_err(|e| e.to_string())?;
                Ok(vec![CensusInput::Graph(g)])
            }
            Format::Graph6 => Ok(text
                .lines()
                .enumerate()
                .filter(|(_, line)| !line.trim().is_empty())
                .map(|(idx, line)| match parse_graph6(line) {
                    Ok(g) => CensusInput::Graph(g),
                    Err(e) => CensusInput::Malformed {
                        line: idx + 1,
                        message: e.to_string(),
                    },
                })
                .collect()),
        }
    }

    /// Reads inputs for the per-graph commands, where a malformed line is a
    /// usage error rather than a census statistic.
    fn load_strict(&self) -> Result<Vec<Graph>, String> {
        let mut graphs = Vec::new();
        for input in self.load()? {
            match input {
                CensusInput::Graph(g) => graphs.push(g),
                CensusInput::Malformed { line, message } => {
                    return Err(format!("line {line}: {message}"));
                }
            }
        }
        Ok(graphs)
    }
}

#[derive(Args)]
struct AnalyzeCmd {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Output::Human)]
    output: Output,
    /// Also evaluate free/o-heavy/f-heavy for these patterns
    /// (claw, p3..p7, c3, z1..z4, bull, net, wounded; comma-separated)
    #[arg(long, value_delimiter = ',')]
    pattern: Vec<String>,
}

#[derive(Args)]
struct ClosureCmd {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Output::Human)]
    output: Output,
}

#[derive(Args)]
struct RegionsCmd {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Output::Human)]
    output: Output,
}

#[derive(Args)]
struct HamiltonCmd {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Report the longest cycle instead of deciding hamiltonicity
    #[arg(long)]
    circumference: bool,
    /// Search-node budget; exhausting it reports "undecided"
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct FamilyCmd {
    /// Family parameters, e.g. T,T,T or 3,T,4
    #[arg(long, value_name = "L1,L2,L3")]
    params: String,
    #[arg(long, value_enum, default_value_t = FamilyOut::Graph6)]
    out: FamilyOut,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyOut {
    Graph6,
    Json,
}

#[derive(Args)]
struct VerifyCmd {
    /// Which check to run: main, lemma1, lemma2, lemma3, brousek,
    /// closure-unique, or circumference
    #[arg(long, value_name = "THEOREM")]
    theorem: String,
    #[command(flatten)]
    source: StreamSource,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Worker threads for the stream
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Graphs below this order count as not applicable
    #[arg(long, default_value_t = 0)]
    min_order: usize,
}

/// Input stream for verify/census: a graph source or a seeded generator
/// (the "stream" group is mutually exclusive; presence enforced in `load`).
#[derive(Args)]
struct StreamSource {
    /// Literal graph6 string
    #[arg(long, value_name = "G6", group = "stream")]
    graph6: Option<String>,
    /// Read graphs from a file
    #[arg(long, value_name = "PATH", group = "stream")]
    file: Option<String>,
    /// Read graphs from standard input
    #[arg(long, group = "stream")]
    stdin: bool,
    /// Built-in census of all graphs on N vertices (N <= 7)
    #[arg(long, value_name = "N", group = "stream")]
    enumerate: Option<usize>,
    /// Input format for --file / --stdin
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Generator: vertex count (requires --p, --seed, --count)
    #[arg(long, value_name = "N", group = "stream", requires_all = ["p", "seed", "count"])]
    n: Option<usize>,
    /// Generator: edge probability
    #[arg(long)]
    p: Option<f64>,
    /// Seed for the generator and for randomized closure orders
    #[arg(long)]
    seed: Option<u64>,
    /// Generator: number of draws
    #[arg(long)]
    count: Option<usize>,
    /// Generator: keep only graphs passing these filters (comma-separated)
    #[arg(long, value_delimiter = ',')]
    filter: Vec<String>,
}

impl StreamSource {
    fn load(&self) -> Result<Vec<CensusInput>, String> {
        if self.graph6.is_none()
            && self.file.is_none()
            && !self.stdin
            && self.enumerate.is_none()
            && self.n.is_none()
        {
            return Err("one of --graph6, --file, --stdin, --enumerate, --n required".into());
        }
        if let Some(n) = self.n {
            let p = self.p.expect("clap requires --p");
            if !(0.0..=1.0).contains(&p) {
                return Err(format!("--p {p} outside [0, 1]"));
            }
            let params = SampleParams {
                n,
                p,
                seed: self.seed.expect("clap requires --seed"),
                count: self.count.expect("clap requires --count"),
            };
            let filters = parse_filters(&self.filter)?;
            return Ok(sample_random(params, &filters)
                .map(CensusInput::Graph)
                .collect());
        }
        let input = InputArgs {
            graph6: self.graph6.clone(),
            file: self.file.clone(),
            stdin: self.stdin,
            enumerate: self.enumerate,
            format: self.format,
        };
        input.load()
    }
}

#[derive(Args)]
struct CensusCmd {
    /// Comma-separated checks (default: main)
    #[arg(long, value_delimiter = ',', default_value = "main")]
    checks: Vec<String>,
    #[command(flatten)]
    source: StreamSource,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    min_order: usize,
}

#[derive(Args)]
struct SampleCmd {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    /// Explicit seed; there is no silent entropy
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    count: usize,
    /// Keep only graphs passing these filters (comma-separated)
    #[arg(long, value_delimiter = ',')]
    filter: Vec<String>,
    #[arg(long, value_enum, default_value_t = Output::Human)]
    output: Output,
}

fn parse_filters(tokens: &[String]) -> Result<Vec<SampleFilter>, String> {
    tokens
        .iter()
        .map(|t| {
            SampleFilter::parse_token(t).ok_or_else(|| {
                let known: Vec<&str> = SampleFilter::ALL.iter().map(|f| f.token()).collect();
                format!("unknown filter {t:?} (known: {})", known.join(", "))
            })
        })
        .collect()
}

fn parse_checks(tokens: &[String]) -> Result<Vec<Check>, String> {
    tokens
        .iter()
        .map(|t| {
            Check::parse_token(t).ok_or_else(|| {
                let known: Vec<&str> = Check::ALL.iter().map(|c| c.token()).collect();
                format!("unknown check {t:?} (known: {})", known.join(", "))
            })
        })
        .collect()
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn summary_exit(summary: &CensusSummary) -> ExitCode {
    if summary.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_COUNTEREXAMPLE)
    }
}

fn print_summary(summary: &CensusSummary, output: Output) {
    match output {
        Output::Json => println!(
            "{}",
            serde_json::to_string(summary).expect("summary serializes")
        ),
        Output::Human => {
            println!(
                "checked={} applicable={} passed={} exceptions={} counterexamples={} skipped={} elapsed_ms={}",
                summary.checked,
                summary.applicable,
                summary.passed,
                summary.exceptions.len(),
                summary.counterexamples.len(),
                summary.skipped,
                summary.elapsed_ms
            );
            for c in &summary.counterexamples {
                println!("counterexample: {}", c.graph6);
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(cmd) => run_analyze(cmd),
        Command::Closure(cmd) => run_closure(cmd),
        Command::Regions(cmd) => run_regions(cmd),
        Command::Hamilton(cmd) => run_hamilton(cmd),
        Command::Family(cmd) => run_family(cmd),
        Command::Verify(cmd) => run_verify(cmd),
        Command::Census(cmd) => run_census(cmd),
        Command::Sample(cmd) => run_sample(cmd),
    }
}

fn run_analyze(cmd: AnalyzeCmd) -> ExitCode {
    let graphs = match cmd.input.load_strict() {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let patterns: Vec<(String, PatternName)> = {
        let mut parsed = Vec::new();
        for token in &cmd.pattern {
            match PatternName::parse_token(token) {
                Ok(name) => parsed.push((token.clone(), name)),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        parsed
    };
    for g in &graphs {
        let report = analyze(g);
        let pattern_reports: Vec<serde_json::Value> = patterns
            .iter()
            .map(|(token, name)| {
                json!({
                    "pattern": token,
                    "copies": find_induced(g, *name).len(),
                    "free": is_pattern_free(g, *name),
                    "o_heavy": is_o_heavy(g, *name),
                    "f_heavy": is_f_heavy(g, *name),
                })
            })
            .collect();
        match cmd.output {
            Output::Json => {
                let mut doc = serde_json::to_value(&report).expect("report serializes");
                if !pattern_reports.is_empty() {
                    doc.as_object_mut().expect("report is an object").insert(
                        "patterns".into(),
                        serde_json::Value::Array(pattern_reports.clone()),
                    );
                }
                println!("{}", serde_json::to_string(&doc).expect("doc serializes"))
            }
            Output::Human => {
                let h = &report.hypotheses;
                let c = &report.conclusions;
                println!(
                    "{} n={} m={} two_connected={} claw_o_heavy={} z3_f_heavy={} claw_free={} z3_free={} claw_f_heavy={} hamiltonian={} iso_l1={} iso_l2={}",
                    report.graph6,
                    report.n,
                    report.edges,
                    h.two_connected,
                    h.claw_o_heavy,
                    h.z3_f_heavy,
                    h.claw_free,
                    h.z3_free,
                    h.claw_f_heavy,
                    c.hamiltonian,
                    c.iso_l1,
                    c.iso_l2
                );
                for p in &pattern_reports {
                    println!(
                        "  pattern {}: copies={} free={} o_heavy={} f_heavy={}",
                        p["pattern"].as_str().expect("token"),
                        p["copies"],
                        p["free"],
                        p["o_heavy"],
                        p["f_heavy"]
                    );
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_closure(cmd: ClosureCmd) -> ExitCode {
    let graphs = match cmd.input.load_strict() {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    for g in &graphs {
        let (closed, trace) = match compute_closure(g) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        let g6_in = write_graph6(g).expect("input fit in graph6");
        let g6_out = write_graph6(&closed).expect("closure fits in graph6");
        match cmd.output {
            Output::Json => println!(
                "{}",
                json!({
                    "input": g6_in,
                    "closure": g6_out,
                    "edges_added": trace.edges_added(),
                    "trace": trace.steps,
                })
            ),
            Output::Human => {
                println!(
                    "{g6_in} -> {g6_out} ({} edges added in {} steps)",
                    trace.edges_added(),
                    trace.steps.len()
                );
                for step in &trace.steps {
                    let edges: Vec<String> = step
                        .added_edges
                        .iter()
                        .map(|(u, v)| format!("{u}-{v}"))
                        .collect();
                    println!("  complete at {}: {}", step.vertex, edges.join(" "));
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_regions(cmd: RegionsCmd) -> ExitCode {
    let graphs = match cmd.input.load_strict() {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    for g in &graphs {
        let (closed, _) = match compute_closure(g) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        let decomposition = match decompose(g, &closed) {
            Ok(d) => d,
            Err(e) => {
                eprintln!("structural failure (closure bug): {e}");
                return ExitCode::from(EXIT_COUNTEREXAMPLE);
            }
        };
        match cmd.output {
            Output::Json => println!(
                "{}",
                json!({
                    "input": write_graph6(g).expect("input fits in graph6"),
                    "closure": write_graph6(&closed).expect("closure fits"),
                    "decomposition": decomposition,
                })
            ),
            Output::Human => {
                let regions: Vec<String> = decomposition
                    .regions()
                    .iter()
                    .map(|r| {
                        let members: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                        format!("{{{}}}", members.join(","))
                    })
                    .collect();
                println!(
                    "regions: {} interior: {:?} frontier: {:?}",
                    regions.join(" "),
                    decomposition.interior_vertices().to_vec(),
                    decomposition.frontier_vertices().to_vec()
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_hamilton(cmd: HamiltonCmd) -> ExitCode {
    let graphs = match cmd.input.load_strict() {
        Ok(g) => g,
        Err(e) => return usage_error(&e),
    };
    let budget = cmd.budget.unwrap_or(u64::MAX);
    for g in &graphs {
        if cmd.circumference {
            let (len, cycle) = circumference(g);
            match cmd.output {
                Output::Json => println!("{}", json!({ "circumference": len, "cycle": cycle })),
                Output::Human => match cycle {
                    Some(c) => println!(
                        "circumference {len}: {}",
                        c.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                    None => println!("circumference 0: acyclic"),
                },
            }
        } else {
            match hamiltonian_cycle_with_budget(g, budget) {
                CycleSearch::Found(cycle) => match cmd.output {
                    Output::Json => {
                        println!("{}", serde_json::to_string(&cycle).expect("serializes"))
                    }
                    Output::Human => println!(
                        "cycle: {}",
                        cycle
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    ),
                },
                CycleSearch::Absent => match cmd.output {
                    Output::Json => println!("null"),
                    Output::Human => println!("none"),
                },
                CycleSearch::Undecided => match cmd.output {
                    Output::Json => println!("\"undecided\""),
                    Output::Human => println!("undecided (budget exhausted)"),
                },
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_family(cmd: FamilyCmd) -> ExitCode {
    let params = match FamilyParams::parse(&cmd.params) {
        Ok(p) => p,
        Err(e) => return usage_error(&e.to_string()),
    };
    let member = brousek(&params).expect("parse validated the parameters");
    match cmd.out {
        FamilyOut::Graph6 => match write_graph6(&member.graph) {
            Ok(s) => println!("{s}"),
            Err(e) => return usage_error(&e.to_string()),
        },
        FamilyOut::Json => println!(
            "{}",
            json!({
                "params": params.to_string(),
                "n": member.graph.n(),
                "edges": member.graph.edges(),
                "labels": member.labels,
                "graph6": write_graph6(&member.graph).ok(),
            })
        ),
    }
    ExitCode::SUCCESS
}

fn run_verify(cmd: VerifyCmd) -> ExitCode {
    let checks = match parse_checks(std::slice::from_ref(&cmd.theorem)) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    let inputs = match cmd.source.load() {
        Ok(i) => i,
        Err(e) => return usage_error(&e),
    };
    let opts = CensusOptions {
        checks,
        jobs: cmd.jobs,
        seed: cmd.source.seed.unwrap_or(0),
        min_order: cmd.min_order,
    };
    let summary = census(inputs, &opts);
    print_summary(&summary, cmd.output);
    summary_exit(&summary)
}

fn run_census(cmd: CensusCmd) -> ExitCode {
    let checks = match parse_checks(&cmd.checks) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    let inputs = match cmd.source.load() {
        Ok(i) => i,
        Err(e) => return usage_error(&e),
    };
    let opts = CensusOptions {
        checks,
        jobs: cmd.jobs,
        seed: cmd.source.seed.unwrap_or(0),
        min_order: cmd.min_order,
    };
    let summary = census(inputs, &opts);
    print_summary(&summary, cmd.output);
    summary_exit(&summary)
}

fn run_sample(cmd: SampleCmd) -> ExitCode {
    if !(0.0..=1.0).contains(&cmd.p) {
        return usage_error(&format!("--p {} outside [0, 1]", cmd.p));
    }
    let filters = match parse_filters(&cmd.filter) {
        Ok(f) => f,
        Err(e) => return usage_error(&e),
    };
    let params = SampleParams {
        n: cmd.n,
        p: cmd.p,
        seed: cmd.seed,
        count: cmd.count,
    };
    let graphs: Vec<String> = sample_random(params, &filters)
        .map(|g| write_graph6(&g).expect("sample fits in graph6"))
        .collect();
    let meta = json!({
        "generator": GENERATOR_ALGORITHM,
        "n": cmd.n,
        "p": cmd.p,
        "seed": cmd.seed,
        "count": cmd.count,
        "filters": filters.iter().map(|f| f.token()).collect::<Vec<_>>(),
        "accepted": graphs.len(),
    });
    match cmd.output {
        Output::Json => println!("{}", json!({ "meta": meta, "graphs": graphs })),
        Output::Human => {
            eprintln!("{meta}");
            for g6 in graphs {
                println!("{g6}");
            }
        }
    }
    ExitCode::SUCCESS
}
