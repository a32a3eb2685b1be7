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

//! Edge k-graphlets: connected subgraphs made of exactly k edges.

use super::{amortized_enum, GraphletSink};
use crate::error::{Error, Result};
use crate::graph::{line_graph, StaticGraph};

/// Enumerates edge k-graphlets as k-graphlets of the line graph. The sink
/// receives, per solution, the ascending ids of its edges in `g.edges()`
/// order. Returns the number of solutions.
pub fn edge_graphlets(g: &StaticGraph, k: usize, sink: &mut dyn GraphletSink) -> Result<u64> {
    let lg = line_graph(g);
    let m = lg.graph.num_vertices();
    if k == 0 || k > m {
        return Err(Error::usage(format!("k = {k} outside [1, {m}] edges")));
    }
    Ok(amortized_enum(&lg.graph, k, sink)?.solutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{CollectSink, CountSink};

    #[test]
    fn toy_counts() {
        let tri = StaticGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(edge_graphlets(&tri, 2, &mut CountSink).unwrap(), 3);
        let path = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(edge_graphlets(&path, 2, &mut CountSink).unwrap(), 1);
        let star = StaticGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let mut sink = CollectSink::default();
        assert_eq!(edge_graphlets(&star, 3, &mut sink).unwrap(), 1);
        assert_eq!(sink.sets, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_too_many_edges() {
        let path = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(edge_graphlets(&path, 3, &mut CountSink).unwrap_err().is_usage());
    }
}
