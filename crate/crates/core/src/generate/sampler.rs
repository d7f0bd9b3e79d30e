//! Degree-proportional node sampling.
//!
//! A Fenwick tree holds the cumulative degree weights, so a single draw,
//! a weight update, and a temporary exclusion are all O(log N). Sampling
//! without replacement is a sequence of draws where each drawn node's
//! weight is zeroed until the call finishes, which renormalizes the
//! remaining probabilities over the still-eligible nodes.

use rand::Rng;

use crate::error::Error;
use crate::graph::{Graph, NodeId};

/// Samples nodes with probability proportional to their degree.
///
/// Nodes with zero weight (isolated nodes, excluded nodes, nodes already
/// drawn in the current call) can never be returned.
#[derive(Debug, Clone)]
pub struct PreferenceSampler {
    tree: Vec<u64>,
    weights: Vec<u64>,
    total: u64,
    mask: usize,
}

impl PreferenceSampler {
    /// Builds a sampler whose weights are the current node degrees of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_weights(g.degrees().map(|d| d as u64).collect())
    }

    fn from_weights(weights: Vec<u64>) -> Self {
        let n = weights.len();
        let mut tree = vec![0u64; n + 1];
        for (i, &w) in weights.iter().enumerate() {
            let idx = i + 1;
            tree[idx] += w;
            let parent = idx + (idx & idx.wrapping_neg());
            if parent <= n {
                tree[parent] = tree[parent] + tree[idx];
            }
        }
        let total = weights.iter().sum();
        let mut mask = 1usize;
        while mask * 2 <= n {
            mask *= 2;
        }
        PreferenceSampler {
            tree,
            weights,
            total,
            mask,
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total_weight(&self) -> u64 {
        self.total
    }

    pub fn weight(&self, node: NodeId) -> u64 {
        self.weights[node]
    }

    /// Sets the weight of `node`. Panics if `node` is out of range.
    pub fn set_weight(&mut self, node: NodeId, weight: u64) {
        let delta = weight as i64 - self.weights[node] as i64;
        if delta == 0 {
            return;
        }
        self.weights[node] = weight;
        self.total = self.total.checked_add_signed(delta).expect("weight overflow");
        let mut idx = node + 1;
        while idx < self.tree.len() {
            self.tree[idx] = self.tree[idx].checked_add_signed(delta).expect("weight overflow");
            idx += idx & idx.wrapping_neg();
        }
    }

    /// Adds `delta` to the weight of `node`.
    pub fn add_weight(&mut self, node: NodeId, delta: u64) {
        self.set_weight(node, self.weights[node] + delta);
    }

    /// Node holding the `x`-th unit of cumulative weight; requires `x < total`.
    fn locate(&self, mut x: u64) -> NodeId {
        debug_assert!(x < self.total);
        let mut pos = 0usize;
        let mut step = self.mask;
        while step > 0 {
            let next = pos + step;
            if next < self.tree.len() && self.tree[next] <= x {
                x -= self.tree[next];
                pos = next;
            }
            step >>= 1;
        }
        pos
    }

    /// Draws exactly `count` distinct non-excluded nodes, each draw
    /// proportional to its weight among the nodes still eligible.
    ///
    /// Fails with the observed shortfall if fewer than `count` nodes carry
    /// positive weight.
    pub fn sample_distinct<R, I>(
        &mut self,
        count: usize,
        excluded: I,
        rng: &mut R,
    ) -> Result<Vec<NodeId>, Error>
    where
        R: Rng,
        I: IntoIterator<Item = NodeId>,
    {
        let (drawn, eligible_exhausted) = self.draw(count, excluded, rng)?;
        if drawn.len() < count {
            debug_assert!(eligible_exhausted);
            return Err(Error::InfeasibleSample {
                requested: count,
                eligible: drawn.len(),
            });
        }
        Ok(drawn)
    }

    /// Like [`sample_distinct`](Self::sample_distinct) but stops quietly when
    /// the eligible nodes run out, returning however many were drawn.
    pub fn sample_up_to<R, I>(
        &mut self,
        count: usize,
        excluded: I,
        rng: &mut R,
    ) -> Result<Vec<NodeId>, Error>
    where
        R: Rng,
        I: IntoIterator<Item = NodeId>,
    {
        Ok(self.draw(count, excluded, rng)?.0)
    }

    fn draw<R, I>(&mut self, count: usize, excluded: I, rng: &mut R) -> Result<(Vec<NodeId>, bool), Error>
    where
        R: Rng,
        I: IntoIterator<Item = NodeId>,
    {
        let mut stash: Vec<(NodeId, u64)> = Vec::new();
        let mut bad_id = None;
        for id in excluded {
            if id >= self.weights.len() {
                bad_id = Some(id);
                break;
            }
            let w = self.weights[id];
            // Zero-weight nodes are already invisible; skipping them also
            // makes duplicate exclusion entries harmless.
            if w > 0 {
                stash.push((id, w));
                self.set_weight(id, 0);
            }
        }
        let mut drawn = Vec::with_capacity(count);
        let mut exhausted = false;
        if bad_id.is_none() {
            for _ in 0..count {
                if self.total == 0 {
                    exhausted = true;
                    break;
                }
                let x = rng.random_range(0..self.total);
                let id = self.locate(x);
                stash.push((id, self.weights[id]));
                self.set_weight(id, 0);
                drawn.push(id);
            }
        }
        for (id, w) in stash {
            self.set_weight(id, w);
        }
        if let Some(node) = bad_id {
            return Err(Error::NodeOutOfRange {
                node,
                node_count: self.weights.len(),
            });
        }
        Ok((drawn, exhausted))
    }
}

/// Draws `count` distinct nodes from `g` with the linear degree preference,
/// renormalized over the non-excluded nodes after each draw.
pub fn preferential_sample<R, I>(
    g: &Graph,
    count: usize,
    excluded: I,
    rng: &mut R,
) -> Result<Vec<NodeId>, Error>
where
    R: Rng,
    I: IntoIterator<Item = NodeId>,
{
    PreferenceSampler::from_graph(g).sample_distinct(count, excluded, rng)
}
