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

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::StaticGraph;

use super::SnapshotTree;

/// Core numbers by bucket peeling in O(n + m).
pub fn coreness_fast(g: &StaticGraph) -> Vec<usize> {
    let n = g.num_vertices();
    let md = g.max_degree();
    let mut deg: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    // bin[d] = first position of degree d in `vert`
    let mut bin = vec![0usize; md + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for d in 0..=md {
        bin[d + 1] += bin[d];
    }
    let mut pos = vec![0usize; n];
    let mut vert = vec![0u32; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[deg[v]];
            vert[pos[v]] = v as u32;
            next[deg[v]] += 1;
        }
    }
    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbors(v) {
            let du = deg[u as usize];
            if du > deg[v as usize] {
                // swap u with the first vertex of its bin, then shrink the bin
                let pu = pos[u as usize];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert.swap(pu, pw);
                    pos[u as usize] = pw;
                    pos[w as usize] = pu;
                }
                bin[du] += 1;
                deg[u as usize] -= 1;
            }
        }
    }
    deg
}

/// Coreness and distinct-neighbour degree of every vertex in one window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCoreRecord {
    pub start: usize,
    pub end: usize,
    pub h: usize,
    pub coreness: Vec<usize>,
    pub degree: Vec<usize>,
}

pub fn window_record(tree: &SnapshotTree, a: usize, b: usize, h: usize) -> Result<WindowCoreRecord> {
    let g = tree.window_graph(a, b, h)?;
    Ok(WindowCoreRecord {
        start: a,
        end: b,
        h,
        coreness: coreness_fast(&g),
        degree: (0..g.num_vertices() as u32).map(|v| g.degree(v)).collect(),
    })
}

/// The k-core of one window, as ascending vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCore {
    pub start: usize,
    pub end: usize,
    pub vertices: Vec<u32>,
}

/// (k,h,W)-cores: the k-core of the h-filtered graph of every window of
/// length `w`. Windows with an empty core are kept.
pub fn khd_cores(tree: &SnapshotTree, k: usize, h: usize, w: usize) -> Result<Vec<WindowCore>> {
    let tau = tree.tau();
    if w == 0 || w > tau {
        return Err(Error::usage(format!("W = {w} outside [1, {tau}]")));
    }
    if h == 0 || h > w {
        return Err(Error::usage(format!("h = {h} outside [1, {w}]")));
    }
    (0..=tau - w)
        .into_par_iter()
        .map(|a| {
            let b = a + w - 1;
            let g = tree.window_graph(a, b, h)?;
            let core = coreness_fast(&g);
            let vertices = (0..g.num_vertices() as u32).filter(|&v| core[v as usize] >= k).collect();
            Ok(WindowCore { start: a, end: b, vertices })
        })
        .collect()
}
