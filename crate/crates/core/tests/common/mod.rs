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

//! Graph generators and corpus loading shared by the integration tests.
#![allow(dead_code)]

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use graphmine::graph::parse_static;
use graphmine::temporal::TemporalGraph;
use graphmine::StaticGraph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// G(n, p) with `p` itself drawn from [0.15, 0.7].
pub fn random_graph(rng: &mut StdRng, n: usize) -> StaticGraph {
    let p: f64 = rng.gen_range(0.15..0.7);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::from_edges(n, edges)
}

pub fn path(n: usize) -> StaticGraph {
    StaticGraph::from_edges(n, (1..n as u32).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

pub fn cycle(n: usize) -> StaticGraph {
    StaticGraph::from_edges(n, (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect::<Vec<_>>())
}

pub fn clique(n: usize) -> StaticGraph {
    StaticGraph::from_edges(
        n,
        (0..n as u32).flat_map(|i| (i + 1..n as u32).map(move |j| (i, j))).collect::<Vec<_>>(),
    )
}

pub fn star(leaves: usize) -> StaticGraph {
    StaticGraph::from_edges(leaves + 1, (1..=leaves as u32).map(|i| (0, i)).collect::<Vec<_>>())
}

/// Paths, cycles, cliques and stars with 3 to 12 vertices.
pub fn toys() -> Vec<(String, StaticGraph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("path{n}"), path(n)));
        out.push((format!("cycle{n}"), cycle(n)));
        out.push((format!("clique{n}"), clique(n)));
        out.push((format!("star{}", n - 1), star(n - 1)));
    }
    out
}

/// Toys plus `count` random graphs with 3 to 12 vertices.
pub fn small_graphs(seed: u64, count: usize) -> Vec<(String, StaticGraph)> {
    let mut r = rng(seed);
    let mut out = toys();
    for i in 0..count {
        let n = r.gen_range(3..=12);
        out.push((format!("random{i}"), random_graph(&mut r, n)));
    }
    out
}

pub fn random_temporal(rng: &mut StdRng, n: usize, tau: usize) -> TemporalGraph {
    let p: f64 = rng.gen_range(0.05..0.4);
    let snapshots = (0..tau)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        })
        .collect();
    TemporalGraph::from_snapshots(n, snapshots)
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn load(path: &PathBuf) -> StaticGraph {
    parse_static(BufReader::new(File::open(path).expect("readable graph"))).expect("valid edge list")
}

/// The bundled small graphs.
pub fn corpus() -> Vec<(String, StaticGraph)> {
    ["karate", "lesmis", "florentine", "davis"]
        .iter()
        .map(|name| (name.to_string(), load(&data_dir().join(format!("{name}.txt")))))
        .collect()
}

/// Finds an external dataset under `$GRAPHMINE_DATA` whose file name
/// contains `needle` (case-insensitive).
pub fn external(needle: &str) -> Option<PathBuf> {
    let dir = std::env::var_os("GRAPHMINE_DATA")?;
    let needle = needle.to_lowercase();
    std::fs::read_dir(dir)
        .ok()?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .find(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.to_lowercase().contains(&needle))
        })
}
