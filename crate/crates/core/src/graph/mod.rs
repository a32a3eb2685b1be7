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

//! Graph representations shared by every algorithm family.

mod line_graph;
mod mutable;
mod parse;
mod static_graph;
mod traverse;
mod vertex_set;

pub use line_graph::{line_graph, LineGraph};
pub use mutable::{Mutation, MutableGraph};
pub use parse::{parse_edge_list, parse_static, parse_temporal, ParsedGraph, TemporalEdge, TemporalEdgeList};
pub use static_graph::StaticGraph;
pub use traverse::{truncated_bfs, Traversal};
pub use vertex_set::VertexSet;

/// Read access to the live part of a graph.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    fn is_alive(&self, v: u32) -> bool;

    fn neighbors_of(&self, v: u32) -> impl Iterator<Item = u32> + '_;
}
