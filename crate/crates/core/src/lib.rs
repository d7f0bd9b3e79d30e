//! Synthetic power-law topology generation and rich-club analysis.
//!
//! The crate grows scale-free graphs with two models (plain preferential
//! attachment and interactive growth), ingests measured AS-level edge
//! lists, and computes the metric suite used to compare their structure:
//! degree distribution, rich-club connectivity over node rank, node-node
//! link distribution over rank bins, and a summary statistics table.

pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod metrics;

pub use error::Error;
pub use generate::{
    generate_ba, generate_ig, preferential_sample, GrowthConfig, IgOutcome, PreferenceSampler,
};
pub use graph::{Graph, NodeId};
pub use io::{
    parse_edge_list, write_edge_list, write_metrics_report, LabelMap, ParseDiagnostics, Report,
    ReportFormat,
};
pub use metrics::{
    degree_distribution, link_share_with_top, link_share_within_top, log_rank_grid,
    node_node_link_distribution, rank_nodes, rich_club_connectivity, rich_club_curve,
    summarize, DegreeDistribution, LinkBinMatrix, RankedNodes, RichClubCurve, RichClubSample,
    SummaryStats,
};
