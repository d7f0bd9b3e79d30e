//! `richclub` command line: grow synthetic topologies, analyze edge lists,
//! and compare metric reports side by side.
//!
//! Every run writes a manifest recording the invoked command line, the
//! fully resolved configuration (seed included) and the produced files, so
//! any output can be reproduced bit for bit. Exit codes: 0 success, 1 usage
//! error, 2 input/parse error, 3 I/O error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use richclub::generate::{DEFAULT_BA_M, DEFAULT_IG_P_SINGLE_HOST, DEFAULT_TARGET_NODES};
use richclub::io::REPORT_SCHEMA_VERSION;
use richclub::metrics::{DEFAULT_BIN_WIDTH, DEFAULT_CURVE_POINTS};
use richclub::{
    degree_distribution, generate_ba, generate_ig, log_rank_grid, node_node_link_distribution,
    parse_edge_list, rank_nodes, rich_club_curve, summarize, write_edge_list,
    write_metrics_report, Error, GrowthConfig, Report, ReportFormat, SummaryStats,
};

const EXIT_USAGE: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(name = "richclub", version, about = "Power-law topology generation and rich-club analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow a synthetic topology and write its canonical edge list
    Generate {
        /// Growth model
        #[arg(value_enum)]
        model: Model,
        /// Total number of nodes
        #[arg(long)]
        nodes: Option<usize>,
        /// Links per new node (ba)
        #[arg(long)]
        m: Option<usize>,
        /// Probability of the one-host branch (ig)
        #[arg(long = "ig-p-single")]
        ig_p_single: Option<f64>,
        /// RNG seed
        #[arg(long)]
        seed: Option<u64>,
        /// key=value config file; explicit flags override its values
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output edge-list path
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute the metric suite for an edge-list file
    Analyze {
        /// Input edge list
        input: PathBuf,
        /// Output directory for the report files
        #[arg(long)]
        out: PathBuf,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Rich-club rank grid: log:<count> or list:<r1,r2,...>
        #[arg(long, default_value = "log:50")]
        rgrid: String,
        /// Rank-bin width for the node-node link distribution
        #[arg(long, default_value_t = DEFAULT_BIN_WIDTH)]
        bin_width: f64,
    },
    /// Compare two or more JSON metric reports
    Compare {
        /// Report files produced by `analyze --format json`
        #[arg(required = true, num_args = 2..)]
        reports: Vec<PathBuf>,
        /// Optional CSV destination for the comparison table
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Ba,
    Ig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

#[derive(Serialize)]
struct RunManifest {
    schema_version: String,
    command: String,
    argv: Vec<String>,
    tool_version: String,
    config: serde_json::Value,
    inputs: Vec<String>,
    outputs: Vec<String>,
    duration_ms: u64,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let started = Instant::now();
    let argv: Vec<String> = std::env::args().collect();
    match cli.command {
        Command::Generate {
            model,
            nodes,
            m,
            ig_p_single,
            seed,
            config,
            out,
        } => cmd_generate(model, nodes, m, ig_p_single, seed, config, out, argv, started),
        Command::Analyze {
            input,
            out,
            format,
            rgrid,
            bin_width,
        } => cmd_analyze(input, out, format, rgrid, bin_width, argv, started),
        Command::Compare { reports, out } => cmd_compare(reports, out, argv, started),
    }
}

fn resolve_growth_config(
    nodes: Option<usize>,
    m: Option<usize>,
    ig_p_single: Option<f64>,
    seed: Option<u64>,
    config: Option<&Path>,
) -> Result<GrowthConfig, CliError> {
    let mut cfg = match config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            GrowthConfig::from_key_value_text(&text)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?
        }
        None => GrowthConfig::new(DEFAULT_TARGET_NODES, 0),
    };
    if let Some(nodes) = nodes {
        cfg.target_nodes = nodes;
    }
    if let Some(m) = m {
        cfg.ba_m = m;
    }
    if let Some(p) = ig_p_single {
        cfg.ig_p_single_host = p;
    }
    if let Some(seed) = seed {
        cfg.rng_seed = seed;
    }
    cfg.validate().map_err(|e| CliError::usage(e.to_string()))?;
    Ok(cfg)
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    model: Model,
    nodes: Option<usize>,
    m: Option<usize>,
    ig_p_single: Option<f64>,
    seed: Option<u64>,
    config: Option<PathBuf>,
    out: PathBuf,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), CliError> {
    let cfg = resolve_growth_config(nodes, m, ig_p_single, seed, config.as_deref())?;
    let (graph, diagnostics) = match model {
        Model::Ba => {
            let g = generate_ba(&cfg).map_err(|e| CliError::usage(e.to_string()))?;
            (g, serde_json::json!({}))
        }
        Model::Ig => {
            let outcome = generate_ig(&cfg).map_err(|e| CliError::usage(e.to_string()))?;
            let skipped = outcome.skipped_peer_links;
            (
                outcome.graph,
                serde_json::json!({ "skipped_peer_links": skipped }),
            )
        }
    };
    let text = write_edge_list(&graph, None);
    richclub::io::write_atomic(&out, &text).map_err(io_error)?;

    let manifest = RunManifest {
        schema_version: REPORT_SCHEMA_VERSION.to_string(),
        command: "generate".into(),
        argv,
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: serde_json::json!({
            "model": match model { Model::Ba => "ba", Model::Ig => "ig" },
            "target_nodes": cfg.target_nodes,
            "ba_m": cfg.ba_m,
            "ig_p_single_host": cfg.ig_p_single_host,
            "rng_seed": cfg.rng_seed,
            "diagnostics": diagnostics,
        }),
        inputs: Vec::new(),
        outputs: vec![out.display().to_string()],
        duration_ms: started.elapsed().as_millis() as u64,
    };
    write_manifest(&manifest_path_for(&out), &manifest)?;

    println!(
        "generated {} nodes, {} links -> {}",
        graph.node_count(),
        graph.link_count(),
        out.display()
    );
    Ok(())
}

fn cmd_analyze(
    input: PathBuf,
    out: PathBuf,
    format: Format,
    rgrid: String,
    bin_width: f64,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), CliError> {
    let text = fs::read_to_string(&input)
        .map_err(|e| CliError::input(format!("{}: {e}", input.display())))?;
    let (graph, _labels, diag) = parse_edge_list(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", input.display())))?;

    let ranked = rank_nodes(&graph).map_err(|e| CliError::input(e.to_string()))?;
    let grid = parse_rgrid(&rgrid, graph.node_count())?;
    let curve = rich_club_curve(&graph, &ranked, &grid)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let matrix = node_node_link_distribution(&graph, &ranked, bin_width)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let dd = degree_distribution(&graph).map_err(|e| CliError::input(e.to_string()))?;
    let stats = summarize(&graph).map_err(|e| CliError::input(e.to_string()))?;

    let report_format = match format {
        Format::Csv => ReportFormat::Csv,
        Format::Json => ReportFormat::Json,
    };
    let written = write_metrics_report(&stats, &dd, &curve, &matrix, report_format, &out)
        .map_err(io_error)?;

    let manifest = RunManifest {
        schema_version: REPORT_SCHEMA_VERSION.to_string(),
        command: "analyze".into(),
        argv,
        tool_version: env!("CARGO_PKG_VERSION").into(),
        config: serde_json::json!({
            "input": input.display().to_string(),
            "out": out.display().to_string(),
            "format": match format { Format::Csv => "csv", Format::Json => "json" },
            "rgrid": rgrid,
            "rgrid_points": grid.len(),
            "bin_width": bin_width,
            "parse_diagnostics": {
                "total_lines": diag.total_lines,
                "comment_or_blank": diag.comment_or_blank,
                "edges_added": diag.edges_added,
                "duplicate_edges": diag.duplicate_edges,
                "self_loops": diag.self_loops,
            },
        }),
        inputs: vec![input.display().to_string()],
        outputs: written.iter().map(|p| p.display().to_string()).collect(),
        duration_ms: started.elapsed().as_millis() as u64,
    };
    write_manifest(&out.join("manifest.json"), &manifest)?;

    println!(
        "analyzed {}: n={} l={} k_average={:.4} phi_1pct={:.4}",
        input.display(),
        stats.n,
        stats.l,
        stats.k_average,
        stats.phi_1pct
    );
    for path in &written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_compare(
    reports: Vec<PathBuf>,
    out: Option<PathBuf>,
    argv: Vec<String>,
    started: Instant,
) -> Result<(), CliError> {
    let mut loaded: Vec<(String, SummaryStats)> = Vec::with_capacity(reports.len());
    for path in &reports {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let report = Report::from_json_str(&text)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        loaded.push((name, report.stats));
    }

    let table = comparison_table(&loaded);
    print!("{}", table.text);

    let mut outputs = Vec::new();
    if let Some(out) = &out {
        richclub::io::write_atomic(out, &table.csv).map_err(io_error)?;
        outputs.push(out.display().to_string());
        let manifest = RunManifest {
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            command: "compare".into(),
            argv,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            config: serde_json::json!({
                "reports": reports.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            }),
            inputs: reports.iter().map(|p| p.display().to_string()).collect(),
            outputs: outputs.clone(),
            duration_ms: started.elapsed().as_millis() as u64,
        };
        write_manifest(&manifest_path_for(out), &manifest)?;
        println!("wrote {}", out.display());
    }
    Ok(())
}

struct ComparisonTable {
    text: String,
    csv: String,
}

/// Side-by-side summary-statistics table: one value column per report in
/// input order, then absolute differences against the first report.
fn comparison_table(reports: &[(String, SummaryStats)]) -> ComparisonTable {
    let fields: Vec<(&str, Vec<String>, Vec<String>)> = vec![
        row_usize("n", reports, |s| s.n),
        row_usize("l", reports, |s| s.l),
        row_f64("k_average", reports, |s| s.k_average),
        row_usize("k_max", reports, |s| s.k_max),
        row_f64("phi_1pct", reports, |s| s.phi_1pct),
        row_f64("link_share_top5", reports, |s| s.link_share_top5),
        row_f64("link_share_within_top5", reports, |s| s.link_share_within_top5),
        row_f64("p1", reports, |s| s.p1),
        row_f64("p2", reports, |s| s.p2),
        row_f64("p3", reports, |s| s.p3),
    ];

    fn row_usize(
        name: &str,
        reports: &[(String, SummaryStats)],
        get: impl Fn(&SummaryStats) -> usize,
    ) -> (&str, Vec<String>, Vec<String>) {
        let values: Vec<usize> = reports.iter().map(|(_, s)| get(s)).collect();
        let deltas = values[1..]
            .iter()
            .map(|v| v.abs_diff(values[0]).to_string())
            .collect();
        (name, values.iter().map(usize::to_string).collect(), deltas)
    }

    fn row_f64(
        name: &str,
        reports: &[(String, SummaryStats)],
        get: impl Fn(&SummaryStats) -> f64,
    ) -> (&str, Vec<String>, Vec<String>) {
        let values: Vec<f64> = reports.iter().map(|(_, s)| get(s)).collect();
        let deltas = values[1..]
            .iter()
            .map(|v| format!("{:?}", (v - values[0]).abs()))
            .collect();
        (name, values.iter().map(|v| format!("{v:?}")).collect(), deltas)
    }

    let names: Vec<&str> = reports.iter().map(|(n, _)| n.as_str()).collect();

    let mut text = String::new();
    let width = 16usize;
    let _ = write!(text, "{:<24}", "field");
    for name in &names {
        let _ = write!(text, "{name:>width$}");
    }
    for name in &names[1..] {
        let _ = write!(text, "{:>width$}", format!("|d {name}|"));
    }
    text.push('\n');
    for (field, values, deltas) in &fields {
        let _ = write!(text, "{field:<24}");
        for v in values {
            let _ = write!(text, "{v:>width$}");
        }
        for d in deltas {
            let _ = write!(text, "{d:>width$}");
        }
        text.push('\n');
    }

    let mut csv = String::from("field");
    for name in &names {
        let _ = write!(csv, ",{name}");
    }
    for name in &names[1..] {
        let _ = write!(csv, ",delta_{name}");
    }
    csv.push('\n');
    for (field, values, deltas) in &fields {
        let _ = write!(csv, "{field}");
        for v in values {
            let _ = write!(csv, ",{v}");
        }
        for d in deltas {
            let _ = write!(csv, ",{d}");
        }
        csv.push('\n');
    }

    ComparisonTable { text, csv }
}

fn parse_rgrid(spec: &str, node_count: usize) -> Result<Vec<f64>, CliError> {
    if let Some(count) = spec.strip_prefix("log:") {
        let points: usize = count
            .parse()
            .map_err(|_| CliError::usage(format!("bad rank grid point count {count:?}")))?;
        if points == 0 {
            return Err(CliError::usage("rank grid needs at least one point"));
        }
        return Ok(log_rank_grid(node_count, points));
    }
    if let Some(list) = spec.strip_prefix("list:") {
        let mut grid = Vec::new();
        for item in list.split(',') {
            let r: f64 = item
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad rank value {item:?}")))?;
            if !(r.is_finite() && r > 0.0 && r <= 1.0) {
                return Err(CliError::usage(format!(
                    "rank value {r} outside (0, 1]"
                )));
            }
            grid.push(r);
        }
        if grid.is_empty() {
            return Err(CliError::usage("rank grid needs at least one point"));
        }
        return Ok(grid);
    }
    Err(CliError::usage(format!(
        "rank grid must be log:<count> or list:<r1,r2,...>, got {spec:?}"
    )))
}

fn manifest_path_for(output: &Path) -> PathBuf {
    let mut name = output
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    name.push_str(".manifest.json");
    output.with_file_name(name)
}

fn write_manifest(path: &Path, manifest: &RunManifest) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(manifest)
        .map_err(|e| CliError::io(e.to_string()))?
        + "\n";
    richclub::io::write_atomic(path, &text).map_err(io_error)
}

fn io_error(e: Error) -> CliError {
    CliError::io(e.to_string())
}

// default values referenced by help text and the README
const _: [(); DEFAULT_TARGET_NODES - 11122] = [];
const _: [(); DEFAULT_BA_M - 3] = [];
const _: () = assert!(DEFAULT_IG_P_SINGLE_HOST == 0.4);
const _: () = assert!(DEFAULT_CURVE_POINTS == 50);
