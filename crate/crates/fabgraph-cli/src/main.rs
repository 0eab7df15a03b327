//! Command-line experiments: dataset generation, partitioning, simulation
//! runs, the analytical model, and parameter sweeps. Reports are JSON, sweep
//! output is CSV, model breakdowns print as text tables unless `--json` is
//! given. All randomness comes from explicit `--seed` flags, so equal
//! invocations produce byte-identical outputs.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fabgraph::graph::{
    generate_layered, generate_rmat, generate_uniform, load_edge_list, save_edge_list,
    EdgeListOptions, Graph, RMAT_DEFAULT_PROBS,
};
use fabgraph::kernel::{BfsKernel, Kernel, PrKernel, WccKernel, PAGERANK_SUPERSTEPS};
use fabgraph::model::{
    self, AlgorithmParams, DatasetParams, PlatformParams,
};
use fabgraph::params::ParamFile;
use fabgraph::partition::{
    self, build_filter_bitmap, imbalance, import_partition, parse_partition_file,
    partition_greedy_edges, partition_round_robin, Level, PlacementMap,
};
use fabgraph::reference;
use fabgraph::sim::{
    run_baseline_unicast, simulate, write_trace_csv, DeliveryMode, RunReport, SimConfig,
    SimOutcome,
};

#[derive(Parser)]
#[command(name = "fabgraph", version, about = "multi-FPGA graph processing simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic graph as an edge-list file.
    Generate {
        #[command(subcommand)]
        shape: GenerateShape,
    },
    /// Partition a graph and report load balance.
    Partition(PartitionArgs),
    /// Simulate a kernel over a graph.
    Run(RunArgs),
    /// Evaluate the analytical performance model.
    Model(ModelArgs),
    /// Sweep a parameter and emit one CSV row per point.
    Sweep {
        #[command(subcommand)]
        sweep: SweepKind,
    },
}

#[derive(Subcommand)]
enum GenerateShape {
    /// Edges drawn uniformly over all vertex pairs.
    Uniform {
        #[arg(long)]
        vertices: u64,
        #[arg(long)]
        edges: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenerateCommon,
    },
    /// Recursive-quadrant scale-free generator.
    Rmat {
        #[arg(long)]
        scale: u32,
        #[arg(long)]
        edgefactor: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Quadrant probabilities a,b,c,d summing to 1.
        #[arg(long, value_delimiter = ',', num_args = 4)]
        probs: Option<Vec<f64>>,
        #[command(flatten)]
        out: GenerateCommon,
    },
    /// Root plus `depth` layers of `width` vertices; same-layer extra edges
    /// pad the degree without changing traversal depth.
    Layered {
        #[arg(long)]
        width: u64,
        #[arg(long)]
        depth: u64,
        #[arg(long, default_value_t = 1)]
        target_degree: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: GenerateCommon,
    },
}

#[derive(Args)]
struct GenerateCommon {
    /// Also store every edge's reverse.
    #[arg(long)]
    symmetrize: bool,
    /// Output file; stdout when omitted (stats then go to stderr).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PartitionArgs {
    #[arg(value_enum)]
    strategy: Strategy,
    /// FPGA-per-line partition file, required for `import`.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    fpgas: u32,
    #[arg(long, default_value_t = 1)]
    pes: u32,
    graph: PathBuf,
    /// Write the vertex→PE assignment (one global PE id per line).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Roundrobin,
    Greedy,
    Import,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelName {
    Wcc,
    Bfs,
    Pr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Broadcast,
    Unicast,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum)]
    kernel: KernelName,
    /// Traversal root for bfs.
    #[arg(long, default_value_t = 0)]
    root: u32,
    #[arg(long, default_value_t = 1)]
    fpgas: u32,
    #[arg(long, default_value_t = 1)]
    pes: u32,
    #[arg(long, value_enum, default_value_t = Strategy::Greedy)]
    partition: Strategy,
    /// FPGA-per-line file for `--partition import`.
    #[arg(long)]
    partition_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Mode::Broadcast)]
    mode: Mode,
    /// Disable the remote-neighbor filter bitmap.
    #[arg(long)]
    no_filter: bool,
    /// Scheduler seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// `key = value` timing overrides (see README for keys).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Check the final states against the reference implementation; a
    /// failure exits nonzero.
    #[arg(long)]
    verify: bool,
    /// Write the per-superstep CSV trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Dump final per-vertex states here, one per line.
    #[arg(long)]
    states: Option<PathBuf>,
    /// Report destination; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    graph: PathBuf,
}

#[derive(Args)]
struct ModelArgs {
    #[command(subcommand)]
    action: Option<ModelAction>,
    #[command(flatten)]
    predict: ModelPredictArgs,
}

#[derive(Subcommand)]
enum ModelAction {
    /// Maximize throughput over FPGA counts, then minimize PEs.
    Optimize {
        #[arg(long)]
        params: PathBuf,
        #[arg(long, default_value_t = 1)]
        min_fpgas: u32,
        #[arg(long, default_value_t = 16)]
        max_fpgas: u32,
        #[arg(long)]
        granularity_aware: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ModelPredictArgs {
    /// `key = value` parameter file with platform/algorithm/dataset values.
    #[arg(long)]
    params: Option<PathBuf>,
    #[arg(long)]
    fpgas: Option<u32>,
    #[arg(long)]
    pes: Option<u32>,
    /// Account for memory access granularity in the memory limit.
    #[arg(long)]
    granularity_aware: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum SweepKind {
    /// Uniform graphs of fixed size and varying average degree.
    Degree {
        #[arg(long)]
        vertices: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u64>,
        #[arg(long, value_enum, default_value_t = KernelName::Wcc)]
        kernel: KernelName,
        #[command(flatten)]
        sim: SweepSimArgs,
    },
    /// Layered graphs of constant size spread over more supersteps.
    Depth {
        #[arg(long)]
        total_vertices: u64,
        #[arg(long, default_value_t = 64)]
        degree: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        depths: Vec<u64>,
        #[arg(long, value_enum, default_value_t = KernelName::Bfs)]
        kernel: KernelName,
        #[command(flatten)]
        sim: SweepSimArgs,
    },
}

#[derive(Args)]
struct SweepSimArgs {
    #[arg(long, default_value_t = 1)]
    fpgas: u32,
    #[arg(long, default_value_t = 1)]
    pes: u32,
    #[arg(long, value_enum, default_value_t = Mode::Broadcast)]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = dispatch(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate { shape } => cmd_generate(shape),
        Command::Partition(args) => cmd_partition(args),
        Command::Run(args) => cmd_run(args),
        Command::Model(args) => cmd_model(args),
        Command::Sweep { sweep } => cmd_sweep(sweep),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(load_edge_list(&text, EdgeListOptions::default())
        .with_context(|| format!("parsing {}", path.display()))?)
}

fn write_or_stdout(path: Option<&Path>, contents: &str) -> Result<bool> {
    match path {
        Some(p) => {
            fs::write(p, contents).with_context(|| format!("writing {}", p.display()))?;
            Ok(true)
        }
        None => {
            print!("{contents}");
            Ok(false)
        }
    }
}

// ---------------------------------------------------------------------------

fn cmd_generate(shape: GenerateShape) -> Result<()> {
    let (graph, common) = match shape {
        GenerateShape::Uniform { vertices, edges, seed, out } => {
            (generate_uniform(vertices, edges, seed), out)
        }
        GenerateShape::Rmat { scale, edgefactor, seed, probs, out } => {
            let probs = match probs {
                Some(p) => [p[0], p[1], p[2], p[3]],
                None => RMAT_DEFAULT_PROBS,
            };
            (generate_rmat(scale, edgefactor, seed, probs)?, out)
        }
        GenerateShape::Layered { width, depth, target_degree, seed, out } => {
            (generate_layered(width, depth, target_degree, seed)?, out)
        }
    };
    let graph = if common.symmetrize { graph.symmetrized() } else { graph };
    let stats = serde_json::json!({
        "schema_version": 1,
        "num_vertices": graph.num_vertices(),
        "num_edges": graph.num_edges(),
        "degree_stats": graph.degree_stats(),
    });
    let to_file = write_or_stdout(common.output.as_deref(), &save_edge_list(&graph))?;
    let stats_text = serde_json::to_string_pretty(&stats)?;
    if to_file {
        println!("{stats_text}");
    } else {
        eprintln!("{stats_text}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------

fn make_placement(
    graph: &Graph,
    strategy: Strategy,
    file: Option<&Path>,
    fpgas: u32,
    pes: u32,
) -> Result<PlacementMap> {
    match strategy {
        Strategy::Roundrobin => Ok(partition_round_robin(graph, fpgas, pes)),
        Strategy::Greedy => Ok(partition_greedy_edges(graph, fpgas, pes)),
        Strategy::Import => {
            let path = file.context("--partition import needs a partition file")?;
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let fpga_ids = parse_partition_file(&text)?;
            Ok(import_partition(graph, &fpga_ids, pes, Some(fpgas))?)
        }
    }
}

fn cmd_partition(args: PartitionArgs) -> Result<()> {
    let graph = load_graph(&args.graph)?;
    let placement =
        make_placement(&graph, args.strategy, args.file.as_deref(), args.fpgas, args.pes)?;
    if let Some(out) = &args.output {
        let mut text = format!(
            "# vertex -> global PE id; fpgas={} pes_per_fpga={}\n",
            placement.n_fpga(),
            placement.n_pe_per_fpga()
        );
        for &pe in placement.assignment() {
            text.push_str(&format!("{pe}\n"));
        }
        fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
    }
    let report = serde_json::json!({
        "schema_version": 1,
        "n_fpga": placement.n_fpga(),
        "n_pe_per_fpga": placement.n_pe_per_fpga(),
        "pe_loads": partition::loads(&graph, &placement, Level::Pe),
        "fpga_loads": partition::loads(&graph, &placement, Level::Fpga),
        "pe_imbalance": imbalance(&graph, &placement, Level::Pe),
        "fpga_imbalance": imbalance(&graph, &placement, Level::Fpga),
        "filter_bitmap_bits": build_filter_bitmap(&graph, &placement).size_bits(graph.num_vertices()),
    });
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

// ---------------------------------------------------------------------------

fn sim_config_from(
    fpgas: u32,
    pes: u32,
    mode: Mode,
    no_filter: bool,
    seed: u64,
    config: Option<&Path>,
) -> Result<SimConfig> {
    let mut cfg = SimConfig::new(fpgas, pes);
    cfg.delivery_mode = match mode {
        Mode::Broadcast => DeliveryMode::BroadcastUpdates,
        Mode::Unicast => DeliveryMode::UnicastMessages,
    };
    cfg.filter_enabled = !no_filter;
    cfg.rng_seed = seed;
    if let Some(path) = config {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = ParamFile::parse(&text)?;
        for key in file.keys() {
            match key {
                "f_clk" | "link_bandwidth_bits_per_cycle" | "link_latency_cycles"
                | "crossbar_latency_cycles" | "scatter_memory_latency_cycles"
                | "scatter_max_outstanding" | "gather_hazard_depth_cycles"
                | "update_queue_capacity" | "channels" | "max_supersteps" => {}
                other => bail!("unknown config key `{other}`"),
            }
        }
        if file.get("f_clk").is_some() {
            cfg.f_clk_hz = file.frequency("f_clk")?;
        }
        cfg.link_bandwidth_bits_per_cycle =
            file.count_or("link_bandwidth_bits_per_cycle", cfg.link_bandwidth_bits_per_cycle.into())? as u32;
        cfg.link_latency_cycles =
            file.count_or("link_latency_cycles", cfg.link_latency_cycles.into())? as u32;
        cfg.crossbar_latency_cycles =
            file.count_or("crossbar_latency_cycles", cfg.crossbar_latency_cycles.into())? as u32;
        cfg.scatter_memory_latency_cycles = file
            .count_or("scatter_memory_latency_cycles", cfg.scatter_memory_latency_cycles.into())?
            as u32;
        cfg.scatter_max_outstanding =
            file.count_or("scatter_max_outstanding", cfg.scatter_max_outstanding.into())? as u32;
        cfg.gather_hazard_depth_cycles =
            file.count_or("gather_hazard_depth_cycles", cfg.gather_hazard_depth_cycles.into())?
                as u32;
        if file.get("update_queue_capacity").is_some() {
            cfg.update_queue_capacity = Some(file.count("update_queue_capacity")?);
        }
        cfg.channels = file.count_or("channels", cfg.channels.into())? as u32;
        cfg.max_supersteps = file.count_or("max_supersteps", cfg.max_supersteps)?;
    }
    Ok(cfg)
}

fn run_sim<K: Kernel>(
    graph: &Graph,
    placement: &PlacementMap,
    kernel: &K,
    cfg: &SimConfig,
) -> Result<SimOutcome<K::State>> {
    let out = match cfg.delivery_mode {
        DeliveryMode::BroadcastUpdates => simulate(graph, placement, kernel, cfg)?,
        DeliveryMode::UnicastMessages => run_baseline_unicast(graph, placement, kernel, cfg)?,
    };
    Ok(out)
}

fn finish_run<K: Kernel>(
    args: &RunArgs,
    kernel: &K,
    outcome: &SimOutcome<K::State>,
    verify: std::result::Result<(), String>,
) -> Result<()> {
    if let Some(path) = &args.trace {
        fs::write(path, write_trace_csv(&outcome.report))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.states {
        let mut text = String::new();
        for state in &outcome.states {
            text.push_str(&kernel.state_display(state));
            text.push('\n');
        }
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut value = serde_json::to_value(&outcome.report)?;
    if args.verify {
        value["verified"] = serde_json::Value::Bool(verify.is_ok());
    }
    let text = serde_json::to_string_pretty(&value)?;
    write_or_stdout(args.output.as_deref(), &format!("{text}\n"))?;
    if args.verify {
        if let Err(reason) = verify {
            bail!("verification failed: {reason}");
        }
    }
    Ok(())
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let graph = load_graph(&args.graph)?;
    let placement = make_placement(
        &graph,
        args.partition,
        args.partition_file.as_deref(),
        args.fpgas,
        args.pes,
    )?;
    let cfg = sim_config_from(
        args.fpgas,
        args.pes,
        args.mode,
        args.no_filter,
        args.seed,
        args.config.as_deref(),
    )?;
    match args.kernel {
        KernelName::Wcc => {
            let kernel = WccKernel::new(32);
            let out = run_sim(&graph, &placement, &kernel, &cfg)?;
            let verify = if args.verify {
                let want = reference::wcc_fixpoint_labels(&graph);
                let ok = out.states.iter().zip(&want).all(|(s, w)| s.label == *w);
                if ok { Ok(()) } else { Err("labels differ from propagation fixpoint".into()) }
            } else {
                Ok(())
            };
            finish_run(&args, &kernel, &out, verify)
        }
        KernelName::Bfs => {
            if u64::from(args.root) >= graph.num_vertices() {
                bail!("root {} out of range", args.root);
            }
            let kernel = BfsKernel::new(32, args.root);
            let out = run_sim(&graph, &placement, &kernel, &cfg)?;
            let verify = if args.verify {
                reference::check_bfs_tree(&graph, args.root, &out.states)
            } else {
                Ok(())
            };
            finish_run(&args, &kernel, &out, verify)
        }
        KernelName::Pr => {
            let kernel = PrKernel::new(32);
            let out = run_sim(&graph, &placement, &kernel, &cfg)?;
            let verify = if args.verify {
                let want = reference::pagerank_power(&graph, kernel.damping, PAGERANK_SUPERSTEPS);
                let mut bad = None;
                for (v, s) in out.states.iter().enumerate() {
                    let rel = (s.rank - want[v]).abs() / want[v].abs().max(f64::MIN_POSITIVE);
                    if rel > 1e-6 {
                        bad = Some(format!("vertex {v}: rank {} vs reference {}", s.rank, want[v]));
                        break;
                    }
                }
                match bad {
                    None => Ok(()),
                    Some(reason) => Err(reason),
                }
            } else {
                Ok(())
            };
            finish_run(&args, &kernel, &out, verify)
        }
    }
}

// ---------------------------------------------------------------------------

fn model_inputs(path: Option<&Path>) -> Result<(PlatformParams, AlgorithmParams, DatasetParams, u32, u32)> {
    // Paper-flavored defaults; a params file overrides any subset.
    let mut platform = PlatformParams {
        f_clk: 1e8,
        cpe: 1.0,
        bw_if: 1e11,
        bw_network: 2e11,
        bw_mem: 6.9e10,
        m_board: 3.4e10,
        m_memword: 128,
        n_pe_max: 9,
        n_pe_min: 1,
    };
    let mut algorithm = AlgorithmParams::default();
    let mut dataset = DatasetParams { num_vertices: 1 << 20, num_edges: 32 << 20 };
    let mut n_fpga = 4;
    let mut n_pe = platform.n_pe_max;
    if let Some(path) = path {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = ParamFile::parse(&text)?;
        for key in file.keys() {
            match key {
                "f_clk" | "cpe" | "bw_if" | "bw_network" | "bw_mem" | "m_board" | "m_memword"
                | "n_pe_max" | "n_pe_min" | "m_vertex" | "m_update" | "m_message" | "m_edge"
                | "p_msg_per_te" | "num_vertices" | "num_edges" | "n_fpga" | "n_pe" => {}
                other => bail!("unknown model parameter `{other}`"),
            }
        }
        platform.f_clk = if file.get("f_clk").is_some() {
            file.frequency("f_clk")?
        } else {
            platform.f_clk
        };
        platform.cpe = file.number_or("cpe", platform.cpe)?;
        if file.get("bw_if").is_some() {
            platform.bw_if = file.data_rate("bw_if")?;
        }
        if file.get("bw_network").is_some() {
            platform.bw_network = file.data_rate("bw_network")?;
        }
        if file.get("bw_mem").is_some() {
            platform.bw_mem = file.data_rate("bw_mem")?;
        }
        if file.get("m_board").is_some() {
            platform.m_board = file.size_bits("m_board")?;
        }
        platform.m_memword = file.count_or("m_memword", platform.m_memword.into())? as u32;
        platform.n_pe_max = file.count_or("n_pe_max", platform.n_pe_max.into())? as u32;
        platform.n_pe_min = file.count_or("n_pe_min", platform.n_pe_min.into())? as u32;
        algorithm.m_vertex = file.count_or("m_vertex", algorithm.m_vertex.into())? as u32;
        algorithm.m_update = file.count_or("m_update", algorithm.m_update.into())? as u32;
        algorithm.m_message = file.count_or("m_message", algorithm.m_message.into())? as u32;
        algorithm.m_edge = file.count_or("m_edge", algorithm.m_edge.into())? as u32;
        algorithm.p_msg_per_te = file.number_or("p_msg_per_te", algorithm.p_msg_per_te)?;
        dataset.num_vertices = file.count_or("num_vertices", dataset.num_vertices)?;
        dataset.num_edges = file.count_or("num_edges", dataset.num_edges)?;
        n_fpga = file.count_or("n_fpga", n_fpga.into())? as u32;
        n_pe = file.count_or("n_pe", platform.n_pe_max.into())? as u32;
    }
    Ok((platform, algorithm, dataset, n_fpga, n_pe))
}

fn cmd_model(args: ModelArgs) -> Result<()> {
    match args.action {
        Some(ModelAction::Optimize { params, min_fpgas, max_fpgas, granularity_aware, json }) => {
            let (platform, algorithm, dataset, _, _) = model_inputs(Some(&params))?;
            let choice = model::optimize_system(
                &platform,
                &algorithm,
                &dataset,
                min_fpgas..=max_fpgas,
                granularity_aware,
            )?;
            if json {
                println!("{}", serde_json::to_string_pretty(&choice)?);
            } else {
                println!(
                    "optimum: {} FPGA(s) x {} PE(s), t_sys = {:.4e} TEPS",
                    choice.n_fpga, choice.n_pe_per_fpga, choice.t_sys
                );
                print!("{}", model::render_table(&choice.breakdown));
            }
            Ok(())
        }
        None => {
            let p = args.predict;
            let (platform, algorithm, dataset, file_fpgas, file_pes) =
                model_inputs(p.params.as_deref())?;
            platform.validate()?;
            let n_fpga = p.fpgas.unwrap_or(file_fpgas);
            let n_pe = p.pes.unwrap_or(file_pes);
            let bd = model::predict(
                &platform,
                &algorithm,
                &dataset,
                n_fpga,
                n_pe,
                p.granularity_aware,
            )?;
            if p.json {
                println!("{}", serde_json::to_string_pretty(&bd)?);
            } else {
                print!("{}", model::render_table(&bd));
            }
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------

const SWEEP_HEADER: &str =
    "sweep,param,num_vertices,num_edges,supersteps,messages,simulated_cycles,teps,inter_fpga_payload_bits,inter_fpga_tokens\n";

fn sweep_row(kind: &str, param: u64, report: &RunReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}\n",
        kind,
        param,
        report.num_vertices,
        report.num_edges,
        report.supersteps,
        report.messages_generated,
        report.simulated_cycles,
        report.teps,
        report.inter_fpga_payload_bits,
        report.inter_fpga_tokens
    )
}

fn sweep_run(kernel: KernelName, graph: &Graph, sim: &SweepSimArgs) -> Result<RunReport> {
    let placement = partition_greedy_edges(graph, sim.fpgas, sim.pes);
    let cfg = sim_config_from(sim.fpgas, sim.pes, sim.mode, false, sim.seed, sim.config.as_deref())?;
    let report = match kernel {
        KernelName::Wcc => run_sim(graph, &placement, &WccKernel::new(32), &cfg)?.report,
        KernelName::Bfs => run_sim(graph, &placement, &BfsKernel::new(32, 0), &cfg)?.report,
        KernelName::Pr => run_sim(graph, &placement, &PrKernel::new(32), &cfg)?.report,
    };
    Ok(report)
}

fn cmd_sweep(sweep: SweepKind) -> Result<()> {
    let mut csv = String::from(SWEEP_HEADER);
    let output = match sweep {
        SweepKind::Degree { vertices, degrees, kernel, sim } => {
            for (i, &degree) in degrees.iter().enumerate() {
                let graph = generate_uniform(vertices, degree * vertices, sim.seed + i as u64);
                let report = sweep_run(kernel, &graph, &sim)?;
                csv.push_str(&sweep_row("degree", degree, &report));
            }
            sim.output
        }
        SweepKind::Depth { total_vertices, degree, depths, kernel, sim } => {
            for &depth in &depths {
                if total_vertices % depth != 0 {
                    bail!("depth {depth} does not divide total vertex count {total_vertices}");
                }
                let width = total_vertices / depth;
                let graph = generate_layered(width, depth, degree, sim.seed)?;
                let report = sweep_run(kernel, &graph, &sim)?;
                csv.push_str(&sweep_row("depth", depth, &report));
            }
            sim.output
        }
    };
    write_or_stdout(output.as_deref(), &csv)?;
    Ok(())
}
