//! Edge-list ingestion and on-disk report formats.
//!
//! Edge lists are UTF-8 text: one edge per line as two whitespace-separated
//! labels, with `#`-prefixed comments and blank lines skipped. Labels are
//! opaque strings (AS numbers, synthetic ids, anything) mapped to dense node
//! ids in first-seen order. Metric reports are written either as CSV files
//! (one per metric, plot-facing) or as a single JSON document with a
//! top-level `schema_version` (machine-facing). All files are written
//! atomically via a temp file renamed into place.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, NodeId};
use crate::metrics::{DegreeDistribution, LinkBinMatrix, RichClubCurve, RichClubSample, SummaryStats};

pub const REPORT_SCHEMA_VERSION: &str = "1.0.0";

/// Bijective map between external node labels and dense node ids,
/// assigned in first-seen order.
#[derive(Debug, Clone, Default)]
pub struct LabelMap {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl LabelMap {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Returns the id for `label`, allocating the next dense id if new.
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }

    pub fn id_of(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn label_of(&self, id: NodeId) -> Option<&str> {
        self.labels.get(id).map(String::as_str)
    }
}

/// Per-parse accounting; every input line lands in exactly one bucket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseDiagnostics {
    pub total_lines: usize,
    pub comment_or_blank: usize,
    pub edges_added: usize,
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

/// Parses an edge list. Duplicate edges and self-loops are dropped but
/// counted; their labels still register in the [`LabelMap`].
pub fn parse_edge_list(text: &str) -> Result<(Graph, LabelMap, ParseDiagnostics), Error> {
    let mut labels = LabelMap::default();
    let mut pairs: Vec<(NodeId, NodeId)> = Vec::new();
    let mut diag = ParseDiagnostics::default();
    for (idx, raw) in text.lines().enumerate() {
        diag.total_lines += 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            diag.comment_or_blank += 1;
            continue;
        }
        let mut tokens = line.split_whitespace();
        let a = tokens.next().expect("non-blank line has a token");
        let b = tokens.next().ok_or_else(|| Error::Parse {
            line: idx + 1,
            message: "expected two whitespace-separated labels, found one".into(),
        })?;
        // trailing tokens (weights, relationship tags) are ignored
        pairs.push((labels.intern(a), labels.intern(b)));
    }
    let mut g = Graph::new(labels.len());
    for (u, v) in pairs {
        if u == v {
            diag.self_loops += 1;
        } else if g.add_edge(u, v)? {
            diag.edges_added += 1;
        } else {
            diag.duplicate_edges += 1;
        }
    }
    if diag.edges_added == 0 {
        return Err(Error::EmptyEdgeList);
    }
    Ok((g, labels, diag))
}

/// Renders the canonical edge list: per line the two endpoint labels with
/// the smaller label first, lines sorted lexicographically. Without a
/// label map, decimal node ids serve as labels.
pub fn write_edge_list(g: &Graph, labels: Option<&LabelMap>) -> String {
    let mut lines: Vec<String> = g
        .edges()
        .map(|(u, v)| {
            let a = label_or_id(labels, u);
            let b = label_or_id(labels, v);
            if a <= b {
                format!("{a} {b}")
            } else {
                format!("{b} {a}")
            }
        })
        .collect();
    lines.sort_unstable();
    if lines.is_empty() {
        String::new()
    } else {
        lines.join("\n") + "\n"
    }
}

fn label_or_id(labels: Option<&LabelMap>, id: NodeId) -> String {
    labels
        .and_then(|m| m.label_of(id))
        .map(str::to_string)
        .unwrap_or_else(|| id.to_string())
}

/// Report output flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub k: usize,
    pub p_k: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkBinCell {
    pub bin_i: usize,
    pub bin_j: usize,
    pub fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkBinReport {
    pub bin_width: f64,
    pub cells: Vec<LinkBinCell>,
}

/// Serializable bundle of every metric computed from one graph. Numeric
/// fields are rounded to 9 significant digits when the report is built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub stats: SummaryStats,
    pub degree_distribution: Vec<DegreeEntry>,
    pub rich_club_curve: Vec<RichClubSample>,
    pub link_bin_matrix: LinkBinReport,
}

impl Report {
    pub fn new(
        stats: &SummaryStats,
        dd: &DegreeDistribution,
        curve: &RichClubCurve,
        matrix: &LinkBinMatrix,
    ) -> Self {
        let mut stats = stats.clone();
        stats.k_average = round_sig9(stats.k_average);
        stats.phi_1pct = round_sig9(stats.phi_1pct);
        stats.link_share_top5 = round_sig9(stats.link_share_top5);
        stats.link_share_within_top5 = round_sig9(stats.link_share_within_top5);
        stats.p1 = round_sig9(stats.p1);
        stats.p2 = round_sig9(stats.p2);
        stats.p3 = round_sig9(stats.p3);

        let degree_distribution = dd
            .iter()
            .map(|(k, p_k)| DegreeEntry {
                k,
                p_k: round_sig9(p_k),
            })
            .collect();

        let rich_club_curve = curve
            .samples
            .iter()
            .map(|s| RichClubSample {
                r: round_sig9(s.r),
                phi: round_sig9(s.phi),
                club_size: s.club_size,
                club_links: s.club_links,
            })
            .collect();

        let bins = matrix.bin_count();
        let mut cells = Vec::with_capacity(bins * (bins + 1) / 2);
        for i in 0..bins {
            for j in i..bins {
                cells.push(LinkBinCell {
                    bin_i: i,
                    bin_j: j,
                    fraction: round_sig9(matrix.fraction(i, j)),
                });
            }
        }

        Report {
            schema_version: REPORT_SCHEMA_VERSION.to_string(),
            stats,
            degree_distribution,
            rich_club_curve,
            link_bin_matrix: LinkBinReport {
                bin_width: round_sig9(matrix.bin_width()),
                cells,
            },
        }
    }

    pub fn to_json_string(&self) -> Result<String, Error> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// Parses a report and rejects any schema version this build does not
    /// understand.
    pub fn from_json_str(text: &str) -> Result<Self, Error> {
        let report: Report = serde_json::from_str(text)?;
        if report.schema_version != REPORT_SCHEMA_VERSION {
            return Err(Error::SchemaMismatch {
                expected: REPORT_SCHEMA_VERSION.to_string(),
                found: report.schema_version,
            });
        }
        Ok(report)
    }
}

/// Rounds to 9 significant digits so rendered reports stay stable across
/// platforms without padding integral values.
pub fn round_sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(8 - magnitude);
    (x * factor).round() / factor
}

fn fmt_float(x: f64) -> String {
    format!("{x:?}")
}

fn summary_csv(stats: &SummaryStats) -> String {
    let rows: Vec<(&str, String)> = vec![
        ("n", stats.n.to_string()),
        ("l", stats.l.to_string()),
        ("k_average", fmt_float(stats.k_average)),
        ("k_max", stats.k_max.to_string()),
        ("phi_1pct", fmt_float(stats.phi_1pct)),
        ("link_share_top5", fmt_float(stats.link_share_top5)),
        (
            "link_share_within_top5",
            fmt_float(stats.link_share_within_top5),
        ),
        ("p1", fmt_float(stats.p1)),
        ("p2", fmt_float(stats.p2)),
        ("p3", fmt_float(stats.p3)),
    ];
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["field", "value"]).expect("in-memory csv");
    for (field, value) in rows {
        w.write_record([field, &value]).expect("in-memory csv");
    }
    csv_into_string(w)
}

fn csv_into_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

/// Writes the metric report files into `dir`, returning the paths written.
///
/// CSV mode produces `summary.csv`, `degree_distribution.csv`,
/// `rich_club.csv` and `link_bin_matrix.csv`; JSON mode produces a single
/// `report.json`. Files are staged as temp files first and renamed only
/// after every one of them has been written.
pub fn write_metrics_report(
    stats: &SummaryStats,
    dd: &DegreeDistribution,
    curve: &RichClubCurve,
    matrix: &LinkBinMatrix,
    format: ReportFormat,
    dir: &Path,
) -> Result<Vec<PathBuf>, Error> {
    let report = Report::new(stats, dd, curve, matrix);
    let mut files: Vec<(PathBuf, String)> = Vec::new();
    match format {
        ReportFormat::Json => {
            files.push((dir.join("report.json"), report.to_json_string()?));
        }
        ReportFormat::Csv => {
            files.push((dir.join("summary.csv"), summary_csv(&report.stats)));

            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["k", "p_k"]).expect("in-memory csv");
            for entry in &report.degree_distribution {
                w.write_record([entry.k.to_string(), fmt_float(entry.p_k)])
                    .expect("in-memory csv");
            }
            files.push((dir.join("degree_distribution.csv"), csv_into_string(w)));

            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["r", "phi"]).expect("in-memory csv");
            for s in &report.rich_club_curve {
                w.write_record([fmt_float(s.r), fmt_float(s.phi)])
                    .expect("in-memory csv");
            }
            files.push((dir.join("rich_club.csv"), csv_into_string(w)));

            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["bin_i", "bin_j", "fraction"])
                .expect("in-memory csv");
            for cell in &report.link_bin_matrix.cells {
                w.write_record([
                    cell.bin_i.to_string(),
                    cell.bin_j.to_string(),
                    fmt_float(cell.fraction),
                ])
                .expect("in-memory csv");
            }
            files.push((dir.join("link_bin_matrix.csv"), csv_into_string(w)));
        }
    }
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    write_files_atomically(&files)?;
    Ok(files.into_iter().map(|(path, _)| path).collect())
}

/// Stages every file as `.{name}.tmp`, then renames each into place, so a
/// failure never leaves a partially written report behind.
fn write_files_atomically(files: &[(PathBuf, String)]) -> Result<(), Error> {
    let mut temps: Vec<(PathBuf, &PathBuf)> = Vec::with_capacity(files.len());
    for (path, contents) in files {
        let tmp = temp_path(path)?;
        if let Err(e) = fs::write(&tmp, contents) {
            for (written, _) in &temps {
                let _ = fs::remove_file(written);
            }
            return Err(Error::io(&*tmp, e));
        }
        temps.push((tmp, path));
    }
    for (tmp, path) in temps {
        fs::rename(&tmp, path).map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}

/// Atomically writes a single file via temp-then-rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), Error> {
    write_files_atomically(&[(path.to_path_buf(), contents.to_string())])
}

fn temp_path(path: &Path) -> Result<PathBuf, Error> {
    let name = path.file_name().ok_or_else(|| {
        Error::io(
            path,
            std::io::Error::new(std::io::ErrorKind::InvalidInput, "path has no file name"),
        )
    })?;
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    Ok(parent.join(format!(".{}.tmp", name.to_string_lossy())))
}
