//! Undirected simple graph on dense integer node ids.
//!
//! The adjacency-set representation gives O(1) edge-membership tests and
//! O(deg) neighbor iteration, which is what the rich-club pair counting
//! needs. Graphs are append-only: nodes and edges are added, never removed.

use std::collections::HashSet;

use crate::error::Error;

/// Dense node index in `[0, node_count)`.
pub type NodeId = usize;

/// Undirected simple graph: no self-loops, no duplicate edges.
///
/// Mutation is single-writer; once construction finishes the graph is
/// immutable and safe to read from many threads.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<HashSet<NodeId>>,
    link_count: usize,
}

impl Graph {
    /// Creates a graph with `node_count` isolated nodes and zero links.
    pub fn new(node_count: usize) -> Self {
        Graph {
            adjacency: vec![HashSet::new(); node_count],
            link_count: 0,
        }
    }

    /// Builds a graph from an edge iterator. Self-loops and duplicates are
    /// silently skipped; out-of-range endpoints are an error.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut g = Graph::new(node_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }

    fn check_node(&self, i: NodeId) -> Result<(), Error> {
        if i < self.adjacency.len() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: i,
                node_count: self.adjacency.len(),
            })
        }
    }

    /// Inserts the undirected edge `{i, j}`.
    ///
    /// Returns `true` if the edge was inserted, `false` if it was a self-loop
    /// or already present (the graph is unchanged in both cases).
    pub fn add_edge(&mut self, i: NodeId, j: NodeId) -> Result<bool, Error> {
        self.check_node(i)?;
        self.check_node(j)?;
        if i == j || self.adjacency[i].contains(&j) {
            return Ok(false);
        }
        self.adjacency[i].insert(j);
        self.adjacency[j].insert(i);
        self.link_count += 1;
        Ok(true)
    }

    /// Number of links incident to node `i`.
    pub fn degree(&self, i: NodeId) -> Result<usize, Error> {
        self.check_node(i)?;
        Ok(self.adjacency[i].len())
    }

    pub fn has_edge(&self, i: NodeId, j: NodeId) -> Result<bool, Error> {
        self.check_node(i)?;
        self.check_node(j)?;
        Ok(self.adjacency[i].contains(&j))
    }

    pub fn neighbors(&self, i: NodeId) -> Result<impl Iterator<Item = NodeId> + '_, Error> {
        self.check_node(i)?;
        Ok(self.adjacency[i].iter().copied())
    }

    /// Unchecked neighbor set access for in-crate metric loops.
    pub(crate) fn adj(&self, i: NodeId) -> &HashSet<NodeId> {
        &self.adjacency[i]
    }

    /// Degrees in node-id order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(HashSet::len)
    }

    /// All links, each reported once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Full-scan structural check: no self-loops, symmetric adjacency, and a
    /// link count equal to half the sum of adjacency-set sizes.
    pub fn validate(&self) -> Result<(), Error> {
        let mut degree_sum = 0usize;
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            degree_sum += nbrs.len();
            for &j in nbrs {
                if i == j {
                    return Err(Error::InvariantViolation(format!("self-loop at node {i}")));
                }
                if j >= self.adjacency.len() {
                    return Err(Error::InvariantViolation(format!(
                        "neighbor {j} of node {i} out of range"
                    )));
                }
                if !self.adjacency[j].contains(&i) {
                    return Err(Error::InvariantViolation(format!(
                        "edge {i}-{j} missing its reverse entry"
                    )));
                }
            }
        }
        if degree_sum != 2 * self.link_count {
            return Err(Error::InvariantViolation(format!(
                "degree sum {degree_sum} != 2 * link count {}",
                self.link_count
            )));
        }
        Ok(())
    }
}
