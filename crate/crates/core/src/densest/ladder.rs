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

use std::io::Write;

use crate::error::{Error, Result};
use crate::oracle::Density;
use crate::report::emit_csv;

use super::OrientedMultigraph;

/// `T_i`: vertices whose outdegree reaches `threshold`.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderStep {
    pub i: usize,
    pub threshold: f64,
    pub vertices: Vec<u32>,
}

/// Thresholds `Δ·(1 + η/b)^{-i}` for `i = 0 ..= ⌈ε⁻¹ log₂ n⌉` and the
/// nested vertex sets they cut out.
pub fn density_ladder(state: &OrientedMultigraph) -> Result<Vec<LadderStep>> {
    if state.inserted_edges() == 0 {
        return Err(Error::usage("no edges inserted"));
    }
    let p = state.params();
    let top = state.max_outdegree() as f64;
    let steps = ((state.num_vertices().max(2) as f64).log2() / p.epsilon).ceil() as usize;
    let ratio = 1.0 + p.eta / p.b as f64;
    // vertices by descending outdegree so each T_i is a prefix
    let mut order: Vec<u32> = (0..state.num_vertices() as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(state.outdegree(v)), v));
    let mut ladder = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let threshold = top / ratio.powi(i as i32);
        let len = order.partition_point(|&v| state.outdegree(v) as f64 >= threshold);
        let mut vertices = order[..len].to_vec();
        vertices.sort_unstable();
        ladder.push(LadderStep { i, threshold, vertices });
    }
    Ok(ladder)
}

/// Edges of the inserted simple graph with both ends in `set` (sorted).
fn induced_density(state: &OrientedMultigraph, set: &[u32]) -> Density {
    let edges = state
        .edges()
        .into_iter()
        .filter(|(u, v)| set.binary_search(u).is_ok() && set.binary_search(v).is_ok())
        .count();
    Density {
        edges: edges as u64,
        vertices: set.len() as u64,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensestResult {
    /// Ascending vertex ids.
    pub vertices: Vec<u32>,
    /// Density of the returned set in the simple graph.
    pub density: Density,
    /// Ladder index of the returned set.
    pub index: usize,
    /// True when no ladder step met the stopping rule and the last set was
    /// returned instead.
    pub exhausted: bool,
}

/// Returns `T_{k+1}` for the smallest `k` with `|T_{k+1}| < (1+γ)|T_k|`.
pub fn densest_subgraph(state: &OrientedMultigraph) -> Result<DensestResult> {
    let ladder = density_ladder(state)?;
    let gamma = state.params().gamma;
    let pick = ladder
        .windows(2)
        .find(|w| (w[1].vertices.len() as f64) < (1.0 + gamma) * w[0].vertices.len() as f64)
        .map(|w| &w[1]);
    let (step, exhausted) = match pick {
        Some(s) => (s, false),
        None => (ladder.last().expect("ladder is never empty"), true),
    };
    Ok(DensestResult {
        density: induced_density(state, &step.vertices),
        vertices: step.vertices.clone(),
        index: step.i,
        exhausted,
    })
}

/// CSV with columns i,threshold,set_size,induced_density.
pub fn write_ladder_csv(out: &mut dyn Write, state: &OrientedMultigraph, ladder: &[LadderStep]) -> Result<()> {
    emit_csv(
        out,
        &["i", "threshold", "set_size", "induced_density"],
        ladder.iter().map(|s| {
            vec![
                s.i.to_string(),
                format!("{:.6}", s.threshold),
                s.vertices.len().to_string(),
                format!("{:.6}", induced_density(state, &s.vertices).value()),
            ]
        }),
    )
}
