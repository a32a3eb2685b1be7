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

use super::Adjacency;

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Vertex ids are dense in `0..n`; `labels` keeps the identifiers the graph
/// was read with so results can be reported in the caller's vocabulary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaticGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    labels: Vec<u64>,
    max_degree: usize,
}

impl StaticGraph {
    /// Builds a simple graph on `n` vertices. Self-loops are dropped and
    /// repeated edges collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for {n} vertices"
            );
            if u != v {
                pairs.push((u, v));
                pairs.push((v, u));
            }
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets: Vec<u32> = pairs.into_iter().map(|(_, v)| v).collect();
        let max_degree = (0..n).map(|v| offsets[v + 1] - offsets[v]).max().unwrap_or(0);
        StaticGraph {
            offsets,
            targets,
            labels: (0..n as u64).collect(),
            max_degree,
        }
    }

    /// Replaces the output labels. `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Self {
        assert_eq!(labels.len(), self.num_vertices());
        self.labels = labels;
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn label(&self, v: u32) -> u64 {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.num_vertices() as u32).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &[u32]) -> usize {
        let mut inside = vec![false; self.num_vertices()];
        for &v in set {
            inside[v as usize] = true;
        }
        set.iter()
            .map(|&v| self.neighbors(v).iter().filter(|&&w| inside[w as usize]).count())
            .sum::<usize>()
            / 2
    }

    /// Whether `set` induces a connected subgraph. The empty set is not
    /// considered connected.
    pub fn is_connected_subset(&self, set: &[u32]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut inside = vec![false; self.num_vertices()];
        for &v in set {
            inside[v as usize] = true;
        }
        let mut seen = vec![false; self.num_vertices()];
        let mut stack = vec![set[0]];
        seen[set[0] as usize] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if inside[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == set.len()
    }

    /// Subgraph induced by `set` (ids renumbered in the order given, labels
    /// carried over).
    pub fn induced_subgraph(&self, set: &[u32]) -> StaticGraph {
        let mut index = vec![u32::MAX; self.num_vertices()];
        for (i, &v) in set.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let edges = set.iter().flat_map(|&v| {
            let index = &index;
            self.neighbors(v)
                .iter()
                .filter(move |&&w| index[w as usize] != u32::MAX)
                .map(move |&w| (index[v as usize], index[w as usize]))
        });
        let labels = set.iter().map(|&v| self.label(v)).collect();
        StaticGraph::from_edges(set.len(), edges.collect::<Vec<_>>()).with_labels(labels)
    }
}

impl Adjacency for StaticGraph {
    fn vertex_count(&self) -> usize {
        self.num_vertices()
    }

    fn is_alive(&self, v: u32) -> bool {
        (v as usize) < self.num_vertices()
    }

    fn neighbors_of(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.neighbors(v).iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degrees() {
        let g = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 2);
        let degrees: Vec<_> = (0..3).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![1, 2, 1]);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn loops_and_duplicates_dropped() {
        let g = StaticGraph::from_edges(2, [(0, 0), (0, 1), (1, 0), (0, 1)]);
        assert_eq!(g.num_edges(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn connectivity_of_subsets() {
        let g = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert!(g.is_connected_subset(&[0, 1, 2]));
        assert!(!g.is_connected_subset(&[0, 2]));
        assert!(!g.is_connected_subset(&[]));
        assert_eq!(g.induced_edge_count(&[0, 1, 2, 3]), 3);
    }
}
