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

//! Binary-partition k-graphlet enumeration with the early-break pruning
//! rule: once a child finds nothing, no later sibling can either.

use rayon::prelude::*;

use super::frontier::{FrontierState, Output};
use super::{check_k, EnumStats, GraphletSink};
use crate::error::{Error, Result};
use crate::graph::StaticGraph;

/// Enumerates every k-graphlet of `g` exactly once. Start vertices are
/// scanned in ascending id order and each graphlet is reported from its
/// smallest vertex.
pub fn ks_enumerate(g: &StaticGraph, k: usize, sink: &mut dyn GraphletSink) -> Result<EnumStats> {
    check_k(g, k)?;
    let mut state = FrontierState::new(g, None, k, 0);
    let mut out = Output::List(sink);
    for v in 0..g.num_vertices() as u32 {
        state.run_from(v, &mut out);
    }
    Ok(state.stats)
}

/// Count-only enumeration with the start-vertex loop split across
/// `threads` workers. Totals do not depend on the worker count.
pub fn ks_count_parallel(g: &StaticGraph, k: usize, threads: usize) -> Result<EnumStats> {
    check_k(g, k)?;
    if threads <= 1 {
        return ks_enumerate(g, k, &mut super::CountSink);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::usage(format!("cannot start {threads} workers: {e}")))?;
    Ok(pool.install(|| {
        (0..g.num_vertices() as u32)
            .into_par_iter()
            .fold(
                || FrontierState::new(g, None, k, 0),
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

/// Leaf statistics of a completed run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FailureLeafReport {
    pub total_leaves: u64,
    pub failure_leaves: u64,
    /// Share of failure leaves among all leaves, in percent, two decimals.
    pub failure_pct: f64,
}

pub fn failure_leaf_report(stats: &EnumStats) -> FailureLeafReport {
    let total = stats.success_leaves + stats.failure_leaves;
    let pct = if total == 0 {
        0.0
    } else {
        (stats.failure_leaves as f64 / total as f64 * 10_000.0).round() / 100.0
    };
    FailureLeafReport {
        total_leaves: total,
        failure_leaves: stats.failure_leaves,
        failure_pct: pct,
    }
}
