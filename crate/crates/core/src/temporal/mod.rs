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

//! Temporal graphs: snapshot bucketing, the multiplicity tree for window
//! queries, (k,h,W)-cores and the resilience series built on them.

mod cores;
mod resilience;
mod snapshots;
mod tree;

pub use cores::{coreness_fast, khd_cores, window_record, WindowCore, WindowCoreRecord};
pub use resilience::{
    arcd_series, falling_points, rcd, w_grid, write_classes_csv, write_cores_csv, write_resilience_csv, ArcdRow,
    FallingPoint, HPolicy, DEFAULT_EPSILON_ZERO,
};
pub use snapshots::{bucket_snapshots, TemporalGraph};
pub use tree::{build_tree, SnapshotTree};

/// Packs an undirected edge `u < v` into one sortable key.
#[inline]
pub(crate) fn edge_key(u: u32, v: u32) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (a as u64) << 32 | b as u64
}

#[inline]
pub(crate) fn key_edge(key: u64) -> (u32, u32) {
    ((key >> 32) as u32, key as u32)
}
