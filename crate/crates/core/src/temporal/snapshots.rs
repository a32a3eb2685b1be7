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
use crate::graph::{StaticGraph, TemporalEdgeList};

use super::{edge_key, key_edge};

/// A sequence of `tau` simple snapshots over a shared vertex universe.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TemporalGraph {
    /// Sorted, deduplicated edge keys per snapshot.
    snapshots: Vec<Vec<u64>>,
    labels: Vec<u64>,
}

impl TemporalGraph {
    /// Builds a temporal graph from explicit per-snapshot edge lists.
    /// Self-loops are dropped and repeated edges collapse.
    pub fn from_snapshots(n: usize, snapshots: Vec<Vec<(u32, u32)>>) -> Self {
        let snapshots = snapshots
            .into_iter()
            .map(|edges| {
                let mut keys: Vec<u64> = edges
                    .into_iter()
                    .inspect(|&(u, v)| assert!((u as usize) < n && (v as usize) < n, "edge out of range"))
                    .filter(|&(u, v)| u != v)
                    .map(|(u, v)| edge_key(u, v))
                    .collect();
                keys.sort_unstable();
                keys.dedup();
                keys
            })
            .collect();
        TemporalGraph {
            snapshots,
            labels: (0..n as u64).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<u64>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    pub fn tau(&self) -> usize {
        self.snapshots.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Edges `(u, v)` with `u < v` of snapshot `i`, ascending.
    pub fn snapshot(&self, i: usize) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.snapshots[i].iter().map(|&k| key_edge(k))
    }

    pub(crate) fn snapshot_keys(&self, i: usize) -> &[u64] {
        &self.snapshots[i]
    }

    /// Window graph by folding the snapshots one by one. Reference for the
    /// tree-backed query.
    pub fn window_graph_naive(&self, a: usize, b: usize, h: usize) -> Result<StaticGraph> {
        check_window(self.tau(), a, b, h)?;
        let mut keys: Vec<u64> = self.snapshots[a..=b].iter().flatten().copied().collect();
        keys.sort_unstable();
        let mut kept = Vec::new();
        for run in keys.chunk_by(|x, y| x == y) {
            if run.len() >= h {
                kept.push(key_edge(run[0]));
            }
        }
        Ok(StaticGraph::from_edges(self.num_vertices(), kept).with_labels(self.labels.clone()))
    }
}

pub(crate) fn check_window(tau: usize, a: usize, b: usize, h: usize) -> Result<()> {
    if a > b || b >= tau {
        return Err(Error::usage(format!("window [{a}, {b}] outside [0, {tau})")));
    }
    if h == 0 || h > b - a + 1 {
        return Err(Error::usage(format!("h = {h} outside [1, {}]", b - a + 1)));
    }
    Ok(())
}

/// Groups raw timestamped edges into snapshots of `bucket_width` time units,
/// counted from the earliest timestamp.
pub fn bucket_snapshots(raw: &TemporalEdgeList, bucket_width: u64) -> Result<TemporalGraph> {
    if bucket_width == 0 {
        return Err(Error::usage("bucket width must be positive"));
    }
    let n = raw.num_vertices();
    let Some(t_min) = raw.edges.iter().map(|e| e.t).min() else {
        return Ok(TemporalGraph {
            snapshots: Vec::new(),
            labels: raw.labels.clone(),
        });
    };
    let t_max = raw.edges.iter().map(|e| e.t).max().unwrap_or(t_min);
    let tau = ((t_max - t_min) / bucket_width + 1) as usize;
    let mut snapshots = vec![Vec::new(); tau];
    for e in &raw.edges {
        snapshots[((e.t - t_min) / bucket_width) as usize].push((e.u, e.v));
    }
    Ok(TemporalGraph::from_snapshots(n, snapshots).with_labels(raw.labels.clone()))
}
