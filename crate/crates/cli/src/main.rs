// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `graphmine` command-line front end.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphmine::densest::{choose_params, density_ladder, densest_subgraph, orient_graph, write_ladder_csv};
use graphmine::enumerate::{
    amortized_enum, cage_enumerate, decompress, edge_graphlets, enum_all_graphlets, failure_leaf_report,
    ks_count_parallel, ks_enumerate, CageOutput, CountSink, EnumStats, GraphletSink,
};
use graphmine::graph::{line_graph, parse_static, parse_temporal};
use graphmine::oracle::{brute_connected_subgraphs, brute_densest, brute_k_graphlets, peel_coreness};
use graphmine::report::{emit_csv, timing_report};
use graphmine::temporal::{
    arcd_series, bucket_snapshots, build_tree, coreness_fast, falling_points, khd_cores, write_classes_csv,
    write_cores_csv, write_resilience_csv, HPolicy, DEFAULT_EPSILON_ZERO,
};
use graphmine::{Error, StaticGraph};

/// Stack for the worker thread; the recursive enumerators can go deep on
/// large sparse graphs.
const STACK_BYTES: usize = 1 << 30;

#[derive(Parser, Debug)]
#[command(name = "graphmine", version, about = "Graphlet enumeration, temporal cores and densest subgraphs")]
struct Cli {
    /// Worker threads for parallel paths; 1 forces the sequential path.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate or count k-graphlets.
    Graphlets(GraphletsArgs),
    /// Enumerate every connected induced subgraph.
    GraphletsAll(AllArgs),
    /// Enumerate connected subgraphs with exactly k edges.
    EdgeGraphlets(EdgeArgs),
    /// Core number of every vertex.
    Coreness(CorenessArgs),
    /// ARCD series over the window-size grid and falling-point classes.
    TemporalResilience(ResilienceArgs),
    /// (k,h,W)-cores of every window.
    KhdCore(KhdArgs),
    /// Approximate densest subgraph.
    Densest(DensestArgs),
    /// Brute-force reference results for small graphs.
    Oracle(OracleArgs),
    /// Expand a compressed graphlet stream.
    Decompress(DecompressArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Ks,
    Amortized,
    Cage,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Count,
    List,
    Compressed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Policy {
    One,
    Half,
    Full,
}

impl From<Policy> for HPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::One => HPolicy::One,
            Policy::Half => HPolicy::Half,
            Policy::Full => HPolicy::Full,
        }
    }
}

#[derive(Args, Debug)]
struct GraphletsArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Algo::Cage)]
    algo: Algo,
    /// Levels cut by the cage enumerator (1, 2 or 3).
    #[arg(long, default_value_t = 3)]
    depth: usize,
    #[arg(long, value_enum, default_value_t = Mode::Count)]
    mode: Mode,
    /// Solution stream destination; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AllArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Count)]
    mode: Mode,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EdgeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Mode::Count)]
    mode: Mode,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorenessArgs {
    #[arg(long)]
    input: PathBuf,
    /// CSV with columns node,coreness.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TemporalInput {
    #[arg(long)]
    input: PathBuf,
    /// Time units per snapshot.
    #[arg(long, default_value_t = 1)]
    bucket_width: u64,
}

#[derive(Args, Debug)]
struct ResilienceArgs {
    #[command(flatten)]
    temporal: TemporalInput,
    #[arg(long, value_enum, default_value_t = Policy::One)]
    h_policy: Policy,
    #[arg(long, default_value_t = DEFAULT_EPSILON_ZERO)]
    epsilon_zero: f64,
    /// Directory receiving resilience.csv and classes.csv.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KhdArgs {
    #[command(flatten)]
    temporal: TemporalInput,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    h: usize,
    /// Window length in snapshots.
    #[arg(long = "w")]
    w: usize,
    /// CSV with columns window_start,window_end,h,k,vertex.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DensestArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    epsilon: f64,
    #[arg(long)]
    b_override: Option<u32>,
    /// CSV with columns i,threshold,set_size,induced_density.
    #[arg(long)]
    emit_ladder: Option<PathBuf>,
    /// Witness vertices, one original label per line.
    #[arg(long)]
    emit_witness: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleTarget {
    Graphlets,
    GraphletsAll,
    Coreness,
    Densest,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(value_enum)]
    target: OracleTarget,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Count)]
    mode: Mode,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DecompressArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Count)]
    mode: Mode,
    #[arg(long)]
    output: Option<PathBuf>,
}

type Run = Result<Summary, Error>;

/// Values printed on the summary line after `solutions` and `time_ms`.
struct Summary {
    solutions: u64,
    extra: Vec<(&'static str, String)>,
}

impl Summary {
    fn new(solutions: u64) -> Self {
        Summary { solutions, extra: Vec::new() }
    }

    fn with(mut self, key: &'static str, value: impl ToString) -> Self {
        self.extra.push((key, value.to_string()));
        self
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn open(path: &Path) -> Result<BufReader<File>, Error> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_static(path: &Path) -> Result<StaticGraph, Error> {
    parse_static(open(path)?)
}

fn writer(path: Option<&Path>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", p.display()))))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Writes one solution per line as ascending original labels.
struct LabelSink<'a> {
    labels: &'a [u64],
    out: Box<dyn Write + 'a>,
    line: Vec<u64>,
    error: Option<io::Error>,
}

impl<'a> LabelSink<'a> {
    fn new(labels: &'a [u64], out: Box<dyn Write + 'a>) -> Self {
        LabelSink {
            labels,
            out,
            line: Vec::new(),
            error: None,
        }
    }

    fn finish(mut self) -> Result<(), Error> {
        if let Some(e) = self.error.take() {
            return Err(e.into());
        }
        self.out.flush()?;
        Ok(())
    }
}

impl GraphletSink for LabelSink<'_> {
    fn emit(&mut self, vertices: &[u32]) {
        if self.error.is_some() {
            return;
        }
        self.line.clear();
        self.line.extend(vertices.iter().map(|&v| self.labels[v as usize]));
        self.line.sort_unstable();
        let text: Vec<String> = self.line.iter().map(u64::to_string).collect();
        if let Err(e) = writeln!(self.out, "{}", text.join(" ")) {
            self.error = Some(e);
        }
    }
}

fn write_sets(out: Option<&Path>, sets: &[Vec<u64>]) -> Result<(), Error> {
    let mut w = writer(out)?;
    for set in sets {
        let text: Vec<String> = set.iter().map(u64::to_string).collect();
        writeln!(w, "{}", text.join(" "))?;
    }
    w.flush()?;
    Ok(())
}

fn reject_compressed(mode: Mode) -> Result<(), Error> {
    if mode == Mode::Compressed {
        return Err(usage("compressed mode is only available for `graphlets --algo cage --depth 3`"));
    }
    Ok(())
}

fn with_stats(stats: EnumStats) -> Summary {
    Summary::new(stats.solutions).with("calls", stats.recursive_calls)
}

fn graphlets(a: &GraphletsArgs, threads: usize) -> Run {
    if a.mode == Mode::Compressed && (a.algo != Algo::Cage || a.depth != 3) {
        return Err(usage("compressed mode requires --algo cage --depth 3"));
    }
    if a.algo != Algo::Cage && a.depth != 3 {
        return Err(usage("--depth only applies to --algo cage"));
    }
    let g = load_static(&a.input)?;
    match (a.algo, a.mode) {
        (Algo::Ks, Mode::Count) => {
            let stats = if threads > 1 {
                ks_count_parallel(&g, a.k, threads)?
            } else {
                ks_enumerate(&g, a.k, &mut CountSink)?
            };
            let report = failure_leaf_report(&stats);
            Ok(with_stats(stats)
                .with("failure_leaves", report.failure_leaves)
                .with("failure_pct", format!("{:.2}", report.failure_pct)))
        }
        (Algo::Amortized, Mode::Count) => Ok(with_stats(amortized_enum(&g, a.k, &mut CountSink)?)),
        (Algo::Cage, Mode::Count) => Ok(with_stats(cage_enumerate(&g, a.k, a.depth, CageOutput::Count { threads })?)),
        (algo, Mode::List) => {
            let mut sink = LabelSink::new(g.labels(), writer(a.output.as_deref())?);
            let stats = match algo {
                Algo::Ks => ks_enumerate(&g, a.k, &mut sink)?,
                Algo::Amortized => amortized_enum(&g, a.k, &mut sink)?,
                Algo::Cage => cage_enumerate(&g, a.k, a.depth, CageOutput::List(&mut sink))?,
            };
            sink.finish()?;
            Ok(with_stats(stats))
        }
        (_, Mode::Compressed) => {
            let mut out = writer(a.output.as_deref())?;
            let stats = cage_enumerate(&g, a.k, a.depth, CageOutput::Compressed(&mut out))?;
            out.flush()?;
            Ok(with_stats(stats))
        }
    }
}

fn graphlets_all(a: &AllArgs) -> Run {
    reject_compressed(a.mode)?;
    let g = load_static(&a.input)?;
    let count = if a.mode == Mode::List {
        let mut sink = LabelSink::new(g.labels(), writer(a.output.as_deref())?);
        let c = enum_all_graphlets(&g, &mut sink);
        sink.finish()?;
        c
    } else {
        enum_all_graphlets(&g, &mut CountSink)
    };
    Ok(Summary::new(count))
}

/// Edge solutions are printed as `u-v` label pairs.
fn edge_graphlets_cmd(a: &EdgeArgs) -> Run {
    reject_compressed(a.mode)?;
    let g = load_static(&a.input)?;
    if a.mode == Mode::Count {
        return Ok(Summary::new(edge_graphlets(&g, a.k, &mut CountSink)?));
    }
    let edges = line_graph(&g).edges;
    let mut out = writer(a.output.as_deref())?;
    let mut failed = None;
    let mut sink = |ids: &[u32]| {
        if failed.is_some() {
            return;
        }
        let mut pairs: Vec<(u64, u64)> = ids
            .iter()
            .map(|&i| {
                let (u, v) = edges[i as usize];
                let (a, b) = (g.label(u), g.label(v));
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        let text: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        if let Err(e) = writeln!(out, "{}", text.join(" ")) {
            failed = Some(e);
        }
    };
    let count = edge_graphlets(&g, a.k, &mut sink)?;
    if let Some(e) = failed {
        return Err(e.into());
    }
    out.flush()?;
    Ok(Summary::new(count))
}

fn coreness_rows(g: &StaticGraph, core: &[usize]) -> Vec<Vec<String>> {
    (0..g.num_vertices())
        .map(|v| vec![g.label(v as u32).to_string(), core[v].to_string()])
        .collect()
}

fn coreness(a: &CorenessArgs) -> Run {
    let g = load_static(&a.input)?;
    let core = coreness_fast(&g);
    if let Some(path) = &a.output {
        let mut out = writer(Some(path))?;
        emit_csv(&mut out, &["node", "coreness"], coreness_rows(&g, &core))?;
        out.flush()?;
    }
    Ok(Summary::new(g.num_vertices() as u64).with("max_core", core.iter().max().copied().unwrap_or(0)))
}

fn load_temporal(t: &TemporalInput) -> Result<graphmine::temporal::TemporalGraph, Error> {
    let raw = parse_temporal(open(&t.input)?)?;
    bucket_snapshots(&raw, t.bucket_width)
}

fn temporal_resilience(a: &ResilienceArgs) -> Run {
    let gt = load_temporal(&a.temporal)?;
    if gt.tau() < 2 {
        return Err(usage(format!("need at least 2 snapshots, got {}", gt.tau())));
    }
    let tree = build_tree(&gt)?;
    let rows = arcd_series(&tree, a.h_policy.into())?;
    let classes = falling_points(&rows, a.epsilon_zero);
    if let Some(dir) = &a.out_dir {
        std::fs::create_dir_all(dir)?;
        let mut out = writer(Some(&dir.join("resilience.csv")))?;
        write_resilience_csv(&mut out, gt.labels(), &rows)?;
        out.flush()?;
        let mut out = writer(Some(&dir.join("classes.csv")))?;
        write_classes_csv(&mut out, gt.labels(), &classes)?;
        out.flush()?;
    }
    Ok(Summary::new(rows.len() as u64).with("tau", gt.tau()))
}

fn khd_core(a: &KhdArgs) -> Run {
    let gt = load_temporal(&a.temporal)?;
    let tree = build_tree(&gt)?;
    let cores = khd_cores(&tree, a.k, a.h, a.w)?;
    if let Some(path) = &a.output {
        let mut out = writer(Some(path))?;
        write_cores_csv(&mut out, gt.labels(), a.h, a.k, &cores)?;
        out.flush()?;
    }
    let members: usize = cores.iter().map(|c| c.vertices.len()).sum();
    Ok(Summary::new(members as u64).with("windows", cores.len()).with("tau", gt.tau()))
}

fn densest(a: &DensestArgs) -> Run {
    let g = load_static(&a.input)?;
    let params = choose_params(g.num_vertices(), a.epsilon, a.b_override)?;
    if g.num_edges() == 0 {
        return Err(usage("graph has no edges"));
    }
    let state = orient_graph(&g, params);
    let estimate = state.density_estimate()?;
    let result = densest_subgraph(&state)?;
    if let Some(path) = &a.emit_ladder {
        let ladder = density_ladder(&state)?;
        let mut out = writer(Some(path))?;
        write_ladder_csv(&mut out, &state, &ladder)?;
        out.flush()?;
    }
    if let Some(path) = &a.emit_witness {
        let mut labels: Vec<u64> = result.vertices.iter().map(|&v| g.label(v)).collect();
        labels.sort_unstable();
        let mut out = writer(Some(path))?;
        for l in labels {
            writeln!(out, "{l}")?;
        }
        out.flush()?;
    }
    if result.exhausted {
        eprintln!("warning: density ladder exhausted; returning its last set");
    }
    Ok(Summary::new(result.vertices.len() as u64)
        .with("estimate", format!("{estimate:.6}"))
        .with("b", params.b)
        .with("witness_density", format!("{:.6}", result.density.value()))
        .with("ladder_exhausted", result.exhausted))
}

fn oracle(a: &OracleArgs) -> Run {
    reject_compressed(a.mode)?;
    let g = load_static(&a.input)?;
    let labelled = |sets: &mut dyn Iterator<Item = &Vec<u32>>| -> Vec<Vec<u64>> {
        sets.map(|s| {
            let mut l: Vec<u64> = s.iter().map(|&v| g.label(v)).collect();
            l.sort_unstable();
            l
        })
        .collect()
    };
    match a.target {
        OracleTarget::Graphlets | OracleTarget::GraphletsAll => {
            let result = if a.target == OracleTarget::Graphlets {
                let k = a.k.ok_or_else(|| usage("--k is required"))?;
                brute_k_graphlets(&g, k)?
            } else {
                brute_connected_subgraphs(&g)?
            };
            if a.mode == Mode::List {
                write_sets(a.output.as_deref(), &labelled(&mut result.solutions.iter()))?;
            }
            Ok(Summary::new(result.count() as u64))
        }
        OracleTarget::Coreness => {
            let core = peel_coreness(&g);
            if let Some(path) = &a.output {
                let mut out = writer(Some(path))?;
                emit_csv(&mut out, &["node", "coreness"], coreness_rows(&g, &core))?;
                out.flush()?;
            }
            Ok(Summary::new(g.num_vertices() as u64).with("max_core", core.iter().max().copied().unwrap_or(0)))
        }
        OracleTarget::Densest => {
            let (density, witness) = brute_densest(&g)?;
            if a.mode == Mode::List {
                write_sets(a.output.as_deref(), &labelled(&mut std::iter::once(&witness)))?;
            }
            Ok(Summary::new(witness.len() as u64)
                .with("density", format!("{:.6}", density.value()))
                .with("edges", density.edges))
        }
    }
}

fn decompress_cmd(a: &DecompressArgs) -> Run {
    reject_compressed(a.mode)?;
    let reader: Box<dyn BufRead> = Box::new(open(&a.input)?);
    let sets = decompress(reader)?;
    if a.mode == Mode::List {
        write_sets(a.output.as_deref(), &sets)?;
    }
    Ok(Summary::new(sets.len() as u64))
}

fn dispatch(cli: &Cli) -> Run {
    if cli.threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    match &cli.command {
        Command::Graphlets(a) => graphlets(a, cli.threads),
        Command::GraphletsAll(a) => graphlets_all(a),
        Command::EdgeGraphlets(a) => edge_graphlets_cmd(a),
        Command::Coreness(a) => coreness(a),
        Command::TemporalResilience(a) => with_pool(cli.threads, || temporal_resilience(a)),
        Command::KhdCore(a) => with_pool(cli.threads, || khd_core(a)),
        Command::Densest(a) => densest(a),
        Command::Oracle(a) => oracle(a),
        Command::Decompress(a) => decompress_cmd(a),
    }
}

/// Runs `f` inside a rayon pool capped at `threads` workers.
fn with_pool(threads: usize, f: impl FnOnce() -> Run + Send) -> Run {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Io(io::Error::other(e)))?;
    pool.install(f)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = std::thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(move || dispatch(&cli))
        .expect("spawn worker thread")
        .join();
    let result = match outcome {
        Ok(r) => r,
        Err(_) => {
            eprintln!("error: worker thread panicked");
            return ExitCode::from(1);
        }
    };
    match result {
        Ok(summary) => {
            let timing = timing_report(start.elapsed(), summary.solutions);
            let mut line = format!("solutions={} time_ms={}", summary.solutions, timing.wall_ms);
            for (k, v) in &summary.extra {
                line.push_str(&format!(" {k}={v}"));
            }
            println!("{line}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
