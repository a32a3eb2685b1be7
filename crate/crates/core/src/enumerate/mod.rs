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

//! k-graphlet enumeration: the binary-partition baseline, the amortized
//! enumerator with mandatory-vertex absorption, the cache-aware variant
//! with a combinatorial base case, and unbounded-size / edge variants.

mod amortized;
mod baseline;
mod cage;
mod compressed;
mod edge;
mod frontier;
mod neighbor_index;
mod push_out;

use std::ops::AddAssign;

pub use amortized::{amortized_enum, amortized_enum_audited, fruitful, linear_enum, mark_mandatory, removable, AmortizedAudit};
pub use baseline::{failure_leaf_report, ks_count_parallel, ks_enumerate, FailureLeafReport};
pub use cage::{base_case_count, cage_enumerate, peak_frontier, CageOutput, CaseCounts};
pub use compressed::{decompress, decompress_line, CompressedRecord, RecordCase};
pub use edge::edge_graphlets;
pub use neighbor_index::NeighborIndex;
pub use push_out::enum_all_graphlets;

use crate::error::{Error, Result};
use crate::graph::StaticGraph;

/// Receives enumerated graphlets as ascending vertex-id slices.
pub trait GraphletSink {
    /// Whether solutions must be materialized. Counting sinks return false
    /// and enumerators then skip building the vertex lists.
    fn materialize(&self) -> bool {
        true
    }

    fn emit(&mut self, vertices: &[u32]);
}

/// Discards solutions; totals are read from [`EnumStats`].
#[derive(Clone, Copy, Debug, Default)]
pub struct CountSink;

impl GraphletSink for CountSink {
    fn materialize(&self) -> bool {
        false
    }

    fn emit(&mut self, _: &[u32]) {}
}

/// Keeps every solution in memory.
#[derive(Clone, Debug, Default)]
pub struct CollectSink {
    pub sets: Vec<Vec<u32>>,
}

impl GraphletSink for CollectSink {
    fn emit(&mut self, vertices: &[u32]) {
        self.sets.push(vertices.to_vec());
    }
}

impl<F: FnMut(&[u32])> GraphletSink for F {
    fn emit(&mut self, vertices: &[u32]) {
        self(vertices)
    }
}

/// Recursion-tree counters.
///
/// For the plain binary-partition enumerators every success leaf is one
/// solution. The cache-aware variant counts a base case that completes at
/// least one graphlet as a single success leaf.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub solutions: u64,
    pub success_leaves: u64,
    pub failure_leaves: u64,
    pub recursive_calls: u64,
}

impl AddAssign for EnumStats {
    fn add_assign(&mut self, o: Self) {
        self.solutions += o.solutions;
        self.success_leaves += o.success_leaves;
        self.failure_leaves += o.failure_leaves;
        self.recursive_calls += o.recursive_calls;
    }
}

pub(crate) fn check_k(g: &StaticGraph, k: usize) -> Result<()> {
    let n = g.num_vertices();
    if k == 0 || k > n {
        return Err(Error::usage(format!("k = {k} outside [1, {n}]")));
    }
    Ok(())
}

/// n choose r for r <= 3.
#[inline]
pub(crate) fn choose(n: u64, r: u32) -> u64 {
    match r {
        0 => 1,
        1 => n,
        2 => n * n.saturating_sub(1) / 2,
        3 => n * n.saturating_sub(1) * n.saturating_sub(2) / 6,
        _ => unreachable!("only small binomials are needed"),
    }
}
