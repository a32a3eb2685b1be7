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

//! Enumeration of every connected induced subgraph, of any size.

use super::GraphletSink;
use crate::graph::{MutableGraph, StaticGraph};

struct AllSubgraphs<'a> {
    g: MutableGraph,
    s: Vec<u32>,
    scratch: Vec<u32>,
    count: u64,
    sink: &'a mut dyn GraphletSink,
}

impl AllSubgraphs<'_> {
    fn grow(&mut self, r: u32) {
        let Some(v) = self.g.first_neighbor(r) else {
            self.count += 1;
            if self.sink.materialize() {
                self.scratch.clear();
                self.scratch.extend_from_slice(&self.s);
                self.scratch.sort_unstable();
                self.sink.emit(&self.scratch);
            }
            return;
        };
        let depth = self.g.depth();
        self.g.contract_unchecked(r, v);
        self.s.push(v);
        self.grow(r);
        self.s.pop();
        self.g.undo_to(depth);
        self.g.delete_unchecked(v);
        self.grow(r);
        self.g.undo_to(depth);
    }
}

/// Reports every connected vertex set once and returns how many there were.
/// Each leaf of the include/exclude recursion is a distinct solution.
pub fn enum_all_graphlets(g: &StaticGraph, sink: &mut dyn GraphletSink) -> u64 {
    let mut e = AllSubgraphs {
        g: MutableGraph::from_static(g),
        s: Vec::new(),
        scratch: Vec::new(),
        count: 0,
        sink,
    };
    for v in 0..g.num_vertices() as u32 {
        e.s.push(v);
        e.grow(v);
        e.s.clear();
        e.g.delete_unchecked(v);
    }
    e.count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{CollectSink, CountSink};
    use crate::oracle::brute_connected_subgraphs;

    #[test]
    fn toy_counts() {
        let edge = StaticGraph::from_edges(2, [(0, 1)]);
        assert_eq!(enum_all_graphlets(&edge, &mut CountSink), 3);
        let tri = StaticGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(enum_all_graphlets(&tri, &mut CountSink), 7);
        let path = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(enum_all_graphlets(&path, &mut CountSink), 6);
    }

    #[test]
    fn matches_subset_scan() {
        let g = StaticGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]);
        let mut sink = CollectSink::default();
        enum_all_graphlets(&g, &mut sink);
        let got: std::collections::BTreeSet<_> = sink.sets.into_iter().collect();
        assert_eq!(got, brute_connected_subgraphs(&g).unwrap().solutions);
    }
}
