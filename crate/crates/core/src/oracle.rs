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

//! Brute-force reference implementations. They enumerate subsets directly
//! and share no code with the algorithms they check.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::StaticGraph;

/// Largest vertex count the subset oracles accept by default.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Canonical (sorted) solution sets found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub solutions: BTreeSet<Vec<u32>>,
}

impl OracleResult {
    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

fn adjacency_masks(g: &StaticGraph, limit: usize) -> Result<Vec<u64>> {
    let n = g.num_vertices();
    if n > limit || n > 63 {
        return Err(Error::usage(format!(
            "oracle refuses graphs with {n} vertices (limit {})",
            limit.min(63)
        )));
    }
    Ok((0..n as u32)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect())
}

fn mask_connected(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return false;
    }
    let mut reached = mask & mask.wrapping_neg();
    loop {
        let mut grown = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            grown |= adj[v] & mask;
        }
        if grown == reached {
            return reached == mask;
        }
        reached = grown;
    }
}

fn mask_to_vec(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
    out
}

/// All k-subsets whose induced subgraph is connected.
pub fn brute_k_graphlets(g: &StaticGraph, k: usize) -> Result<OracleResult> {
    brute_k_graphlets_with_limit(g, k, DEFAULT_SUBSET_LIMIT)
}

pub fn brute_k_graphlets_with_limit(g: &StaticGraph, k: usize, limit: usize) -> Result<OracleResult> {
    let adj = adjacency_masks(g, limit)?;
    let n = g.num_vertices();
    if k == 0 || k > n {
        return Err(Error::usage(format!("k = {k} outside [1, {n}]")));
    }
    let mut solutions = BTreeSet::new();
    // Gosper's hack over all k-subsets of n bits
    let mut mask: u64 = (1u64 << k) - 1;
    let end = 1u64 << n;
    while mask < end {
        if mask_connected(&adj, mask) {
            solutions.insert(mask_to_vec(mask));
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    Ok(OracleResult { solutions })
}

/// Every connected induced subgraph of any size.
pub fn brute_connected_subgraphs(g: &StaticGraph) -> Result<OracleResult> {
    let adj = adjacency_masks(g, DEFAULT_SUBSET_LIMIT)?;
    let n = g.num_vertices();
    let solutions = (1u64..(1u64 << n))
        .filter(|&m| mask_connected(&adj, m))
        .map(mask_to_vec)
        .collect();
    Ok(OracleResult { solutions })
}

/// Coreness by repeatedly removing a minimum-degree vertex, taking the
/// running maximum of removal degrees. Quadratic; reference only.
pub fn peel_coreness(g: &StaticGraph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut degree: Vec<usize> = (0..n as u32).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut core = vec![0; n];
    let mut level = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| degree[v])
            .expect("a vertex remains");
        level = level.max(degree[v]);
        core[v] = level;
        removed[v] = true;
        for &w in g.neighbors(v as u32) {
            if !removed[w as usize] {
                degree[w as usize] -= 1;
            }
        }
    }
    core
}

/// Exact density |E(S)| / |S| kept as a fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    pub edges: u64,
    pub vertices: u64,
}

impl Density {
    pub fn value(&self) -> f64 {
        if self.vertices == 0 {
            0.0
        } else {
            self.edges as f64 / self.vertices as f64
        }
    }
}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.edges as u128 * other.vertices as u128).cmp(&(other.edges as u128 * self.vertices as u128))
    }
}

/// Maximum-density vertex subset by exhaustive search. Ties go to the
/// smallest set, then the lexicographically smallest sorted vertex list.
pub fn brute_densest(g: &StaticGraph) -> Result<(Density, Vec<u32>)> {
    let adj = adjacency_masks(g, DEFAULT_SUBSET_LIMIT)?;
    let n = g.num_vertices();
    if n == 0 {
        return Err(Error::usage("graph has no vertices"));
    }
    let size = 1usize << n;
    let mut edges = vec![0u32; size];
    let mut best = Density { edges: 0, vertices: 1 };
    let mut witness = vec![0u32];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        edges[mask] = edges[rest] + (adj[low] & rest as u64).count_ones();
        let d = Density {
            edges: edges[mask] as u64,
            vertices: mask.count_ones() as u64,
        };
        let better = match d.cmp(&best) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => {
                let cand = mask_to_vec(mask as u64);
                (cand.len(), &cand) < (witness.len(), &witness)
            }
        };
        if better {
            best = d;
            witness = mask_to_vec(mask as u64);
        }
    }
    Ok((best, witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(u32, u32)]) -> StaticGraph {
        StaticGraph::from_edges(n, edges.iter().copied())
    }

    fn sets(r: &OracleResult) -> Vec<Vec<u32>> {
        r.solutions.iter().cloned().collect()
    }

    #[test]
    fn graphlets_of_small_shapes() {
        let tri = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(sets(&brute_k_graphlets(&tri, 3).unwrap()), vec![vec![0, 1, 2]]);
        let path = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            sets(&brute_k_graphlets(&path, 3).unwrap()),
            vec![vec![0, 1, 2], vec![1, 2, 3]]
        );
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(brute_k_graphlets(&c5, 3).unwrap().count(), 5);
    }

    #[test]
    fn refuses_large_graphs() {
        let big = StaticGraph::from_edges(21, (0..20).map(|i| (i, i + 1)));
        assert!(brute_k_graphlets(&big, 2).unwrap_err().is_usage());
        assert!(brute_k_graphlets_with_limit(&big, 2, 30).is_ok());
    }

    #[test]
    fn coreness_examples() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(peel_coreness(&k4), vec![3; 4]);
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(peel_coreness(&p5), vec![1; 5]);
        let k4p = g(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(peel_coreness(&k4p), vec![3, 3, 3, 3, 1]);
    }

    #[test]
    fn densest_examples() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let (d, w) = brute_densest(&k4).unwrap();
        assert_eq!((d.edges, d.vertices), (6, 4));
        assert_eq!(w, vec![0, 1, 2, 3]);

        let tri_pendant = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let (d, w) = brute_densest(&tri_pendant).unwrap();
        assert_eq!(d.value(), 1.0);
        assert_eq!(w, vec![0, 1, 2]);

        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let (d, w) = brute_densest(&bowtie).unwrap();
        assert_eq!((d.edges, d.vertices), (6, 5));
        assert_eq!(w, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn all_connected_subgraphs_of_path() {
        let path = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(brute_connected_subgraphs(&path).unwrap().count(), 6);
    }
}
