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

//! Approximate densest subgraph through a dynamically maintained
//! out-orientation of the graph with every edge copied `b` times.

mod ladder;
mod orientation;
mod params;

pub use ladder::{density_ladder, densest_subgraph, write_ladder_csv, DensestResult, LadderStep};
pub use orientation::{bucket_index, orient_graph, OrientationStats, OrientedMultigraph};
pub use params::{choose_params, OrientationParams, ETA};
