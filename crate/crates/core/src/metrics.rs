//! Degree distribution, node rank, rich-club connectivity, node-node link
//! distribution and the summary statistics table.
//!
//! All operations are read-only over an immutable [`Graph`]. Fractions are
//! plain `f64`; counts stay integral so callers can compare them exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, NodeId};

/// Bin width used by the node-node link distribution in the summary table.
pub const DEFAULT_BIN_WIDTH: f64 = 0.05;
/// Points in the default logarithmic rich-club rank grid.
pub const DEFAULT_CURVE_POINTS: usize = 50;
/// Normalized rank of the club reported as `phi_1pct`.
pub const SUMMARY_PHI_RANK: f64 = 0.01;
/// Normalized rank of the club used for the link-share summary fields.
pub const SUMMARY_TOP_RANK: f64 = 0.05;

/// Nodes sorted by decreasing degree, ties broken by ascending node id.
#[derive(Debug, Clone)]
pub struct RankedNodes {
    order: Vec<NodeId>,
    degrees: Vec<usize>,
    positions: Vec<usize>,
}

impl RankedNodes {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Node ids from best- to worst-connected.
    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    /// Degree of the node at sorted position `pos`.
    pub fn degree_at(&self, pos: usize) -> usize {
        self.degrees[pos]
    }

    /// Sorted position of node `id`.
    pub fn position_of(&self, id: NodeId) -> usize {
        self.positions[id]
    }

    /// Normalized rank of the node at `pos`: `(pos + 1) / N`, in `(0, 1]`.
    pub fn normalized_rank(&self, pos: usize) -> f64 {
        (pos + 1) as f64 / self.order.len() as f64
    }

    /// Number of nodes whose normalized rank does not exceed `r`.
    pub fn club_size(&self, r: f64) -> usize {
        (r * self.order.len() as f64).floor() as usize
    }
}

/// Sorts nodes by `(degree desc, id asc)`; deterministic for a given graph.
pub fn rank_nodes(g: &Graph) -> Result<RankedNodes, Error> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut order: Vec<NodeId> = (0..n).collect();
    order.sort_unstable_by_key(|&id| (std::cmp::Reverse(g.adj(id).len()), id));
    let degrees = order.iter().map(|&id| g.adj(id).len()).collect();
    let mut positions = vec![0usize; n];
    for (pos, &id) in order.iter().enumerate() {
        positions[id] = pos;
    }
    Ok(RankedNodes {
        order,
        degrees,
        positions,
    })
}

/// Fraction of nodes per occurring degree.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeDistribution {
    counts: BTreeMap<usize, usize>,
    node_count: usize,
}

impl DegreeDistribution {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// P(k); zero for degrees that do not occur.
    pub fn fraction(&self, k: usize) -> f64 {
        self.counts
            .get(&k)
            .map_or(0.0, |&c| c as f64 / self.node_count as f64)
    }

    /// `(degree, node count)` pairs in increasing degree order.
    pub fn iter_counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// `(degree, fraction)` pairs in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        let n = self.node_count as f64;
        self.counts.iter().map(move |(&k, &c)| (k, c as f64 / n))
    }

    pub fn mean_degree(&self) -> f64 {
        let sum: usize = self.counts.iter().map(|(&k, &c)| k * c).sum();
        sum as f64 / self.node_count as f64
    }
}

pub fn degree_distribution(g: &Graph) -> Result<DegreeDistribution, Error> {
    if g.node_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_insert(0) += 1;
    }
    Ok(DegreeDistribution {
        counts,
        node_count: g.node_count(),
    })
}

fn check_rank(r: f64) -> Result<(), Error> {
    if r.is_finite() && r > 0.0 && r <= 1.0 {
        Ok(())
    } else {
        Err(Error::RankOutOfRange { r })
    }
}

fn club_link_count(g: &Graph, ranked: &RankedNodes, club_size: usize) -> usize {
    let mut in_club = vec![false; g.node_count()];
    for &id in &ranked.order()[..club_size] {
        in_club[id] = true;
    }
    let mut links = 0usize;
    for &u in &ranked.order()[..club_size] {
        for &v in g.adj(u) {
            if u < v && in_club[v] {
                links += 1;
            }
        }
    }
    links
}

/// Rich-club connectivity at normalized rank `r`: the links present among
/// the `floor(r * N)` best-connected nodes over the maximum possible.
/// Clubs of fewer than two nodes have connectivity 0 by convention.
pub fn rich_club_connectivity(g: &Graph, ranked: &RankedNodes, r: f64) -> Result<f64, Error> {
    check_rank(r)?;
    let size = ranked.club_size(r);
    if size < 2 {
        return Ok(0.0);
    }
    let links = club_link_count(g, ranked, size);
    Ok(links as f64 / (size * (size - 1) / 2) as f64)
}

/// One point of a rich-club curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RichClubSample {
    pub r: f64,
    pub phi: f64,
    pub club_size: usize,
    pub club_links: usize,
}

/// Rich-club connectivity sampled over a rank grid, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct RichClubCurve {
    pub samples: Vec<RichClubSample>,
}

/// `points` logarithmically spaced ranks from `1/n` to `1`.
pub fn log_rank_grid(n: usize, points: usize) -> Vec<f64> {
    assert!(n >= 1 && points >= 1);
    if points == 1 {
        return vec![1.0];
    }
    let lo = (1.0 / n as f64).ln();
    (0..points)
        .map(|i| {
            let t = i as f64 / (points - 1) as f64;
            (lo * (1.0 - t)).exp()
        })
        .collect()
}

pub fn rich_club_curve(
    g: &Graph,
    ranked: &RankedNodes,
    r_values: &[f64],
) -> Result<RichClubCurve, Error> {
    if r_values.is_empty() {
        return Err(Error::EmptyRankGrid);
    }
    let mut samples = Vec::with_capacity(r_values.len());
    for &r in r_values {
        check_rank(r)?;
        let club_size = ranked.club_size(r);
        let club_links = if club_size < 2 {
            0
        } else {
            club_link_count(g, ranked, club_size)
        };
        let phi = if club_size < 2 {
            0.0
        } else {
            club_links as f64 / (club_size * (club_size - 1) / 2) as f64
        };
        samples.push(RichClubSample {
            r,
            phi,
            club_size,
            club_links,
        });
    }
    Ok(RichClubCurve { samples })
}

/// Upper-triangular link counts over equal rank bins.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkBinMatrix {
    bin_width: f64,
    bin_count: usize,
    link_count: usize,
    counts: BTreeMap<(usize, usize), usize>,
}

impl LinkBinMatrix {
    pub fn bin_width(&self) -> f64 {
        self.bin_width
    }

    pub fn bin_count(&self) -> usize {
        self.bin_count
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }

    /// Links whose endpoints fall in rank bins `(i, j)`, `i <= j`.
    pub fn count(&self, bin_i: usize, bin_j: usize) -> usize {
        self.counts.get(&(bin_i, bin_j)).copied().unwrap_or(0)
    }

    /// Fraction of all links in cell `(i, j)`.
    pub fn fraction(&self, bin_i: usize, bin_j: usize) -> f64 {
        self.count(bin_i, bin_j) as f64 / self.link_count as f64
    }

    /// Occupied cells as `((bin_i, bin_j), count)`, ordered by bin pair.
    pub fn iter_counts(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&cell, &c)| (cell, c))
    }
}

fn bin_count_for(bin_width: f64) -> Result<usize, Error> {
    if !(bin_width > 0.0 && bin_width <= 1.0) || !bin_width.is_finite() {
        return Err(Error::InvalidBinWidth { bin_width });
    }
    let bins = (1.0 / bin_width).round();
    if bins < 1.0 || ((1.0 / bin_width) - bins).abs() > 1e-9 {
        return Err(Error::InvalidBinWidth { bin_width });
    }
    Ok(bins as usize)
}

// floor(position / (N * bin_width)) computed exactly in integer arithmetic,
// clamped to the last bin.
fn bin_of_position(pos: usize, n: usize, bins: usize) -> usize {
    (pos * bins / n).min(bins - 1)
}

/// Distributes every link into the rank-bin cell of its endpoints; the cell
/// of a link `{u, v}` is `(min(bu, bv), max(bu, bv))`.
pub fn node_node_link_distribution(
    g: &Graph,
    ranked: &RankedNodes,
    bin_width: f64,
) -> Result<LinkBinMatrix, Error> {
    let bins = bin_count_for(bin_width)?;
    if g.link_count() == 0 {
        return Err(Error::NoLinks);
    }
    let n = g.node_count();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in g.edges() {
        let bu = bin_of_position(ranked.position_of(u), n, bins);
        let bv = bin_of_position(ranked.position_of(v), n, bins);
        let cell = (bu.min(bv), bu.max(bv));
        *counts.entry(cell).or_insert(0) += 1;
    }
    Ok(LinkBinMatrix {
        bin_width,
        bin_count: bins,
        link_count: g.link_count(),
        counts,
    })
}

/// Fraction of links with at least one endpoint among the `floor(r * N)`
/// best-connected nodes.
pub fn link_share_with_top(g: &Graph, ranked: &RankedNodes, r: f64) -> Result<f64, Error> {
    link_share(g, ranked, r, false)
}

/// Fraction of links with both endpoints among the `floor(r * N)`
/// best-connected nodes.
pub fn link_share_within_top(g: &Graph, ranked: &RankedNodes, r: f64) -> Result<f64, Error> {
    link_share(g, ranked, r, true)
}

fn link_share(g: &Graph, ranked: &RankedNodes, r: f64, both: bool) -> Result<f64, Error> {
    check_rank(r)?;
    if g.link_count() == 0 {
        return Err(Error::NoLinks);
    }
    let size = ranked.club_size(r);
    let mut in_club = vec![false; g.node_count()];
    for &id in &ranked.order()[..size] {
        in_club[id] = true;
    }
    let mut hits = 0usize;
    for (u, v) in g.edges() {
        let touching = if both {
            in_club[u] && in_club[v]
        } else {
            in_club[u] || in_club[v]
        };
        if touching {
            hits += 1;
        }
    }
    Ok(hits as f64 / g.link_count() as f64)
}

/// Headline statistics of a graph, mirroring the standard comparison table:
/// size, average/maximum degree, rich-club connectivity at the 1% rank, the
/// link shares touching and inside the top 5%, and P(1)..P(3).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n: usize,
    pub l: usize,
    pub k_average: f64,
    pub k_max: usize,
    pub phi_1pct: f64,
    pub link_share_top5: f64,
    pub link_share_within_top5: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

pub fn summarize(g: &Graph) -> Result<SummaryStats, Error> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::TooFewNodes {
            node_count: n,
            minimum: 2,
        });
    }
    let l = g.link_count();
    if l == 0 {
        return Err(Error::NoLinks);
    }
    let ranked = rank_nodes(g)?;
    let dd = degree_distribution(g)?;
    Ok(SummaryStats {
        n,
        l,
        k_average: 2.0 * l as f64 / n as f64,
        k_max: g.degrees().max().unwrap_or(0),
        phi_1pct: rich_club_connectivity(g, &ranked, SUMMARY_PHI_RANK)?,
        link_share_top5: link_share_with_top(g, &ranked, SUMMARY_TOP_RANK)?,
        link_share_within_top5: link_share_within_top(g, &ranked, SUMMARY_TOP_RANK)?,
        p1: dd.fraction(1),
        p2: dd.fraction(2),
        p3: dd.fraction(3),
    })
}
