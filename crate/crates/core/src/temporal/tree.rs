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

use crate::error::{Error, Result};
use crate::graph::StaticGraph;

use super::snapshots::check_window;
use super::{key_edge, TemporalGraph};

/// Heap-shaped tree over the snapshots. Node 1 is the root, leaves start at
/// `leaf_base` (a power of two), and every node stores the multiset sum of
/// the edges below it as sorted `(edge key, count)` pairs.
#[derive(Clone, Debug)]
pub struct SnapshotTree {
    nodes: Vec<Vec<(u64, u32)>>,
    leaf_base: usize,
    tau: usize,
    labels: Vec<u64>,
}

fn merge(a: &[(u64, u32)], b: &[(u64, u32)]) -> Vec<(u64, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Builds the tree bottom-up.
pub fn build_tree(gt: &TemporalGraph) -> Result<SnapshotTree> {
    let tau = gt.tau();
    if tau == 0 {
        return Err(Error::usage("temporal graph has no snapshots"));
    }
    let leaf_base = tau.next_power_of_two();
    let mut nodes = vec![Vec::new(); 2 * leaf_base];
    for i in 0..tau {
        nodes[leaf_base + i] = gt.snapshot_keys(i).iter().map(|&k| (k, 1)).collect();
    }
    for i in (1..leaf_base).rev() {
        nodes[i] = merge(&nodes[2 * i], &nodes[2 * i + 1]);
    }
    Ok(SnapshotTree {
        nodes,
        leaf_base,
        tau,
        labels: gt.labels().to_vec(),
    })
}

impl SnapshotTree {
    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn leaf_base(&self) -> usize {
        self.leaf_base
    }

    pub fn root(&self) -> &[(u64, u32)] {
        &self.nodes[1]
    }

    /// `(edge, count)` pairs stored at `node`.
    pub fn node_edges(&self, node: usize) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.nodes[node].iter().map(|&(k, c)| (key_edge(k), c))
    }

    /// Inclusive leaf interval under `node`.
    pub fn covered(&self, node: usize) -> (usize, usize) {
        assert!(node >= 1 && node < 2 * self.leaf_base);
        let level = node.ilog2();
        let span = self.leaf_base >> level;
        let lo = (node - (1 << level)) * span;
        (lo, lo + span - 1)
    }

    /// Maximal nodes whose leaf intervals partition `[a, b]`, ordered left
    /// to right.
    pub fn cover_nodes(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if a > b || b >= self.tau {
            return Err(Error::usage(format!("window [{a}, {b}] outside [0, {})", self.tau)));
        }
        let (mut l, mut r) = (a + self.leaf_base, b + self.leaf_base + 1);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        while l < r {
            if l & 1 == 1 {
                left.push(l);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                right.push(r);
            }
            l >>= 1;
            r >>= 1;
        }
        left.extend(right.into_iter().rev());
        Ok(left)
    }

    /// Edges appearing in at least `h` snapshots of `[a, b]`.
    pub fn window_edges(&self, a: usize, b: usize, h: usize) -> Result<Vec<(u32, u32)>> {
        check_window(self.tau, a, b, h)?;
        let cover = self.cover_nodes(a, b)?;
        let mut acc: Vec<(u64, u32)> = Vec::new();
        for node in cover {
            acc = merge(&acc, &self.nodes[node]);
        }
        Ok(acc
            .into_iter()
            .filter(|&(_, c)| c as usize >= h)
            .map(|(k, _)| key_edge(k))
            .collect())
    }

    /// The h-filtered window graph over the full vertex universe.
    pub fn window_graph(&self, a: usize, b: usize, h: usize) -> Result<StaticGraph> {
        let edges = self.window_edges(a, b, h)?;
        Ok(StaticGraph::from_edges(self.num_vertices(), edges).with_labels(self.labels.clone()))
    }
}
