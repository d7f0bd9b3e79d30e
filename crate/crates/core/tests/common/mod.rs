//! Brute-force reference implementations and shared test helpers.
//!
//! Everything here recomputes metrics from a plain `(n, edge list)` pair
//! with naive enumeration, deliberately sharing no code with the library
//! paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Edge = (usize, usize);

/// Degrees per node by scanning the edge list.
pub fn oracle_degrees(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut degrees = vec![0usize; n];
    for &(u, v) in edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    degrees
}

/// Node ids sorted by decreasing degree, ties by ascending id.
pub fn oracle_rank(n: usize, edges: &[Edge]) -> Vec<usize> {
    let degrees = oracle_degrees(n, edges);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
    order
}

fn is_edge(edges: &[Edge], a: usize, b: usize) -> bool {
    edges
        .iter()
        .any(|&(u, v)| (u == a && v == b) || (u == b && v == a))
}

/// Links among the club of the `floor(r * n)` top-ranked nodes, counted by
/// checking every node pair against the edge list.
pub fn oracle_club_links(n: usize, edges: &[Edge], r: f64) -> (usize, usize) {
    let order = oracle_rank(n, edges);
    let club_size = (r * n as f64).floor() as usize;
    let club = &order[..club_size];
    let mut links = 0usize;
    for i in 0..club.len() {
        for j in (i + 1)..club.len() {
            if is_edge(edges, club[i], club[j]) {
                links += 1;
            }
        }
    }
    (club_size, links)
}

pub fn oracle_phi(n: usize, edges: &[Edge], r: f64) -> f64 {
    let (club_size, links) = oracle_club_links(n, edges, r);
    if club_size < 2 {
        return 0.0;
    }
    links as f64 / (club_size * (club_size - 1) / 2) as f64
}

/// Degree histogram as `(degree, node count)`.
pub fn oracle_degree_counts(n: usize, edges: &[Edge]) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for d in oracle_degrees(n, edges) {
        *counts.entry(d).or_insert(0) += 1;
    }
    counts
}

/// Link counts per upper-triangular rank-bin cell.
pub fn oracle_link_bins(n: usize, edges: &[Edge], bins: usize) -> BTreeMap<(usize, usize), usize> {
    let order = oracle_rank(n, edges);
    let mut position = vec![0usize; n];
    for (pos, &id) in order.iter().enumerate() {
        position[id] = pos;
    }
    let bin = |id: usize| (position[id] * bins / n).min(bins - 1);
    let mut cells = BTreeMap::new();
    for &(u, v) in edges {
        let (bu, bv) = (bin(u), bin(v));
        let cell = (bu.min(bv), bu.max(bv));
        *cells.entry(cell).or_insert(0) += 1;
    }
    cells
}

/// Links with one (or, when `both`, two) endpoints among the top `floor(r*n)`
/// ranked nodes.
pub fn oracle_link_share(n: usize, edges: &[Edge], r: f64, both: bool) -> usize {
    let order = oracle_rank(n, edges);
    let club_size = (r * n as f64).floor() as usize;
    let club = &order[..club_size];
    edges
        .iter()
        .filter(|&&(u, v)| {
            let cu = club.contains(&u);
            let cv = club.contains(&v);
            if both {
                cu && cv
            } else {
                cu || cv
            }
        })
        .count()
}

/// Deterministic random simple graph as `(n, deduplicated edge list)`, with
/// at least one edge.
pub fn random_edge_list(seed: u64, max_nodes: usize) -> (usize, Vec<Edge>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=max_nodes);
    let attempts = rng.random_range(1..(3 * n + 2));
    let mut edges: Vec<Edge> = Vec::new();
    for _ in 0..attempts {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && !is_edge(&edges, u, v) {
            edges.push((u.min(v), u.max(v)));
        }
    }
    if edges.is_empty() {
        edges.push((0, 1));
    }
    (n, edges)
}

/// Ordinary least squares slope of `y` against `x`.
pub fn ols_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Log-log OLS slope of a degree distribution over degrees supported by at
/// least `min_support` nodes.
pub fn degree_slope(counts: &BTreeMap<usize, usize>, n: usize, min_support: usize) -> f64 {
    let points: Vec<(f64, f64)> = counts
        .iter()
        .filter(|&(_, &c)| c >= min_support)
        .map(|(&k, &c)| ((k as f64).ln(), (c as f64 / n as f64).ln()))
        .collect();
    ols_slope(&points)
}

/// Chi-square goodness-of-fit p-value of observed counts against expected
/// probabilities (categories with zero expectation are rejected).
pub fn chi_square_p(observed: &[usize], expected_probs: &[f64]) -> f64 {
    use statrs::distribution::{ChiSquared, ContinuousCDF};

    assert_eq!(observed.len(), expected_probs.len());
    let total: usize = observed.iter().sum();
    let mut chi2 = 0.0;
    for (&obs, &p) in observed.iter().zip(expected_probs) {
        assert!(p > 0.0, "zero-probability category");
        let exp = p * total as f64;
        chi2 += (obs as f64 - exp) * (obs as f64 - exp) / exp;
    }
    let dof = (observed.len() - 1) as f64;
    let dist = ChiSquared::new(dof).expect("valid dof");
    1.0 - dist.cdf(chi2)
}
