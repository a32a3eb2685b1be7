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

//! Cache-aware enumeration: the binary-partition recursion stops when
//! `depth` vertices are still missing and the completions are counted (or
//! listed) directly from the frontier and its outer neighbourhoods.

use std::io::Write;

use rayon::prelude::*;

use super::compressed::RecordWriter;
use super::frontier::{FrontierState, Output};
use super::{check_k, EnumStats, GraphletSink, NeighborIndex};
use crate::error::{Error, Result};
use crate::graph::StaticGraph;

pub use super::frontier::CaseCounts;

pub enum CageOutput<'a> {
    /// Count only; the start-vertex loop may use several workers.
    Count { threads: usize },
    /// Explicit graphlets, ascending vertex ids.
    List(&'a mut dyn GraphletSink),
    /// One record per completion family (depth 3 only).
    Compressed(&'a mut dyn Write),
}

/// Enumerates k-graphlets with the base case at |S| = k - depth.
///
/// Depths above k - 1 are lowered to k - 1; for k = 1 this degenerates to
/// listing the vertices.
pub fn cage_enumerate(g: &StaticGraph, k: usize, depth: usize, output: CageOutput<'_>) -> Result<EnumStats> {
    if !(1..=3).contains(&depth) {
        return Err(Error::usage(format!("depth must be 1, 2 or 3, got {depth}")));
    }
    check_k(g, k)?;
    let depth = depth.min(k - 1);
    let index = (depth == 3).then(|| NeighborIndex::build(g));
    let n = g.num_vertices() as u32;
    match output {
        CageOutput::Count { threads } if threads > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Error::usage(format!("cannot start {threads} workers: {e}")))?;
            Ok(pool.install(|| {
                (0..n)
                    .into_par_iter()
                    .fold(
                        || FrontierState::new(g, index.as_ref(), k, depth),
                        |mut state, v| {
                            state.run_from(v, &mut Output::Count);
                            state
                        },
                    )
                    .map(|state| state.stats)
                    .reduce(EnumStats::default, |mut a, b| {
                        a += b;
                        a
                    })
            }))
        }
        CageOutput::Count { .. } => Ok(run(g, index.as_ref(), k, depth, &mut Output::Count).0),
        CageOutput::List(sink) => Ok(run(g, index.as_ref(), k, depth, &mut Output::List(sink)).0),
        CageOutput::Compressed(out) => {
            if depth != 3 {
                return Err(Error::usage("compressed output needs depth 3 and k >= 4"));
            }
            let mut writer = RecordWriter::new(g.labels(), out);
            let stats = run(g, index.as_ref(), k, depth, &mut Output::Records(&mut writer)).0;
            writer.finish()?;
            Ok(stats)
        }
    }
}

/// Sequential run; also reports the largest frontier seen.
pub(crate) fn run(
    g: &StaticGraph,
    index: Option<&NeighborIndex>,
    k: usize,
    depth: usize,
    out: &mut Output<'_>,
) -> (EnumStats, usize) {
    let mut state = FrontierState::new(g, index, k, depth);
    for v in 0..g.num_vertices() as u32 {
        state.run_from(v, out);
    }
    (state.stats, state.peak_frontier)
}

/// Largest number of frontier slots held at once by a sequential run.
pub fn peak_frontier(g: &StaticGraph, k: usize, depth: usize) -> Result<usize> {
    check_k(g, k)?;
    let depth = depth.min(k - 1);
    let index = (depth == 3).then(|| NeighborIndex::build(g));
    Ok(run(g, index.as_ref(), k, depth, &mut Output::Count).1)
}

/// Three-vertex completions of the connected set `s`, treating every vertex
/// below `min(s)` as excluded.
pub fn base_case_count(g: &StaticGraph, s: &[u32]) -> Result<CaseCounts> {
    if s.is_empty() || s.iter().any(|&v| v as usize >= g.num_vertices()) {
        return Err(Error::usage("base case needs a non-empty set of valid vertices"));
    }
    if !g.is_connected_subset(s) {
        return Err(Error::usage("base case set must induce a connected subgraph"));
    }
    let index = NeighborIndex::build(g);
    let mut state = FrontierState::new(g, Some(&index), s.len() + 3, 3);
    state.load(s);
    let (lo, end) = state.live_range();
    Ok(state.count_three(lo, end))
}
