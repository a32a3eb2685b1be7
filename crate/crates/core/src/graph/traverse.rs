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
use crate::error::{Error, Result};

/// Reusable BFS scratch space. Visited marks are epoch-stamped so starting a
/// new traversal costs O(1) instead of O(n).
#[derive(Clone, Debug)]
pub struct Traversal {
    mark: Vec<u32>,
    epoch: u32,
    queue: Vec<u32>,
}

impl Traversal {
    pub fn new(n: usize) -> Self {
        Traversal {
            mark: vec![0; n],
            epoch: 0,
            queue: Vec::new(),
        }
    }

    fn begin(&mut self, n: usize) {
        if self.mark.len() < n {
            self.mark.resize(n, 0);
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.fill(0);
            self.epoch = 1;
        }
        self.queue.clear();
    }

    #[inline]
    fn visit(&mut self, v: u32) -> bool {
        let slot = &mut self.mark[v as usize];
        if *slot == self.epoch {
            false
        } else {
            *slot = self.epoch;
            true
        }
    }

    /// Counts vertices reachable from `r` (including `r`) while ignoring
    /// `skip`, stopping as soon as `k` have been discovered.
    pub fn truncated_bfs<G: Adjacency>(&mut self, g: &G, r: u32, k: usize, skip: Option<u32>) -> Result<usize> {
        if !g.is_alive(r) {
            return Err(Error::usage(format!("vertex {r} is not alive")));
        }
        if skip == Some(r) {
            return Err(Error::usage("skip vertex must differ from the root"));
        }
        Ok(self.bounded_reach(g, r, k, skip))
    }

    /// Unchecked variant used on hot paths.
    pub(crate) fn bounded_reach<G: Adjacency>(&mut self, g: &G, r: u32, k: usize, skip: Option<u32>) -> usize {
        if k == 0 {
            return 0;
        }
        self.begin(g.vertex_count());
        if let Some(x) = skip {
            self.visit(x);
        }
        self.visit(r);
        let mut found = 1;
        if found >= k {
            return found;
        }
        self.queue.push(r);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for w in g.neighbors_of(v) {
                if self.visit(w) {
                    found += 1;
                    if found >= k {
                        return found;
                    }
                    self.queue.push(w);
                }
            }
        }
        found
    }

    /// Size of the connected component of `r`.
    pub fn component_size<G: Adjacency>(&mut self, g: &G, r: u32) -> usize {
        self.bounded_reach(g, r, usize::MAX, None)
    }

    /// Vertices of the component of `r`, in BFS order.
    pub fn component<G: Adjacency>(&mut self, g: &G, r: u32) -> Vec<u32> {
        self.bounded_reach(g, r, usize::MAX, None);
        self.queue.clone()
    }
}

/// One-shot form of [`Traversal::truncated_bfs`].
pub fn truncated_bfs<G: Adjacency>(g: &G, r: u32, k: usize, skip: Option<u32>) -> Result<usize> {
    Traversal::new(g.vertex_count()).truncated_bfs(g, r, k, skip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StaticGraph;

    #[test]
    fn triangle_fully_reachable() {
        let g = StaticGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(truncated_bfs(&g, 0, 3, None).unwrap(), 3);
    }

    #[test]
    fn skipping_middle_of_path_isolates_end() {
        let g = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(truncated_bfs(&g, 0, 3, Some(1)).unwrap(), 1);
    }

    #[test]
    fn stops_early_on_cycle() {
        let g = StaticGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        for r in 0..5 {
            assert_eq!(truncated_bfs(&g, r, 3, None).unwrap(), 3);
        }
    }

    #[test]
    fn rejects_bad_root() {
        let g = StaticGraph::from_edges(2, [(0, 1)]);
        assert!(truncated_bfs(&g, 5, 2, None).unwrap_err().is_usage());
        assert!(truncated_bfs(&g, 0, 2, Some(0)).unwrap_err().is_usage());
    }
}
