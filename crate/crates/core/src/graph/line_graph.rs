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

use super::StaticGraph;

/// Line graph together with the edge each of its vertices stands for.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: StaticGraph,
    /// `edges[i]` is the edge of the source graph represented by vertex `i`.
    pub edges: Vec<(u32, u32)>,
}

/// One vertex per edge of `g`; two vertices are adjacent when their edges
/// share an endpoint.
pub fn line_graph(g: &StaticGraph) -> LineGraph {
    let edges: Vec<(u32, u32)> = g.edges().collect();
    // incident[v] lists the ids of edges touching v
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); g.num_vertices()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        incident[u as usize].push(id as u32);
        incident[v as usize].push(id as u32);
    }
    let mut pairs = Vec::new();
    for ids in &incident {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                pairs.push((a, b));
            }
        }
    }
    let graph = StaticGraph::from_edges(edges.len(), pairs);
    LineGraph { graph, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_becomes_single_edge() {
        let lg = line_graph(&StaticGraph::from_edges(3, [(0, 1), (1, 2)]));
        assert_eq!(lg.graph.num_vertices(), 2);
        assert_eq!(lg.graph.num_edges(), 1);
    }

    #[test]
    fn star_becomes_triangle() {
        let lg = line_graph(&StaticGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]));
        assert_eq!((lg.graph.num_vertices(), lg.graph.num_edges()), (3, 3));
    }

    #[test]
    fn four_cycle_is_self_dual() {
        let lg = line_graph(&StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]));
        assert_eq!((lg.graph.num_vertices(), lg.graph.num_edges()), (4, 4));
        assert!((0..4).all(|v| lg.graph.degree(v) == 2));
    }
}
