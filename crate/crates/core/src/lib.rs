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

//! Graph mining toolkit: k-graphlet enumeration (binary partition, amortized
//! and cache-aware variants), temporal (k,h,W)-cores over a snapshot
//! aggregation tree, and approximate densest subgraphs through a dynamic
//! out-orientation.
//!
//! Every algorithm has a brute-force counterpart in [`oracle`] that the test
//! suites use as ground truth.

pub mod densest;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod temporal;

pub use error::{Error, Result};
pub use graph::{MutableGraph, StaticGraph, VertexSet};
