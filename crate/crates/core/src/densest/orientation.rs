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

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::StaticGraph;

use super::OrientationParams;

/// Bucket of a vertex with outdegree `d`: 0 for `d = 0`, otherwise
/// `1 + ⌊log_{1+λ} d⌋`.
pub fn bucket_index(d: u32, lambda: f64) -> u32 {
    if d == 0 {
        0
    } else {
        1 + ((d as f64).ln() / lambda.ln_1p()).floor() as u32
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OrientationStats {
    pub copies_inserted: u64,
    pub reversals: u64,
    pub longest_chain: u64,
    /// Cascades stopped by the chain-length cap.
    pub chain_cap_hits: u64,
}

/// Orientation of the b-fold multigraph. Each vertex keeps its outdegree,
/// its out-neighbours with copy counts, and its in-neighbours ordered by
/// their outdegree bucket.
#[derive(Clone, Debug)]
pub struct OrientedMultigraph {
    params: OrientationParams,
    outdeg: Vec<u32>,
    out: Vec<BTreeMap<u32, u32>>,
    in_buckets: Vec<BTreeSet<(u32, u32)>>,
    inserted_edges: u64,
    chain_cap: u64,
    stats: OrientationStats,
}

impl OrientedMultigraph {
    pub fn new(n: usize, params: OrientationParams) -> Self {
        let log_n = (n.max(2) as f64).ln();
        OrientedMultigraph {
            params,
            outdeg: vec![0; n],
            out: vec![BTreeMap::new(); n],
            in_buckets: vec![BTreeSet::new(); n],
            inserted_edges: 0,
            chain_cap: (64.0 / params.lambda * log_n).ceil() as u64,
            stats: OrientationStats::default(),
        }
    }

    /// Builds a state directly from `(u, v, copies)` triples, skipping the
    /// insertion procedure. Every listed pair's copies must total `b`.
    pub fn from_copies(n: usize, params: OrientationParams, copies: &[(u32, u32, u32)]) -> Result<Self> {
        let mut g = OrientedMultigraph::new(n, params);
        let mut total: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for &(u, v, c) in copies {
            if u == v || u as usize >= n || v as usize >= n {
                return Err(Error::usage(format!("bad pair ({u}, {v})")));
            }
            *total.entry((u.min(v), u.max(v))).or_default() += c;
            for _ in 0..c {
                g.add_copy(u, v);
            }
        }
        if total.values().any(|&c| c != params.b) {
            return Err(Error::usage("copies per edge must total b"));
        }
        g.inserted_edges = total.len() as u64;
        Ok(g)
    }

    pub fn params(&self) -> &OrientationParams {
        &self.params
    }

    pub fn num_vertices(&self) -> usize {
        self.outdeg.len()
    }

    pub fn outdegree(&self, v: u32) -> u32 {
        self.outdeg[v as usize]
    }

    pub fn outdegrees(&self) -> &[u32] {
        &self.outdeg
    }

    pub fn max_outdegree(&self) -> u32 {
        self.outdeg.iter().copied().max().unwrap_or(0)
    }

    pub fn inserted_edges(&self) -> u64 {
        self.inserted_edges
    }

    pub fn stats(&self) -> OrientationStats {
        self.stats
    }

    /// Copies currently directed `u -> v`.
    pub fn copies(&self, u: u32, v: u32) -> u32 {
        self.out[u as usize].get(&v).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.copies(u, v) + self.copies(v, u) > 0
    }

    /// Undirected edges `u < v` inserted so far.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut e: Vec<(u32, u32)> = (0..self.num_vertices() as u32)
            .flat_map(|u| self.out[u as usize].keys().map(move |&v| (u.min(v), u.max(v))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Inserts `{u, v}` as `b` copies, each directed away from the endpoint
    /// with the smaller outdegree (ties `u -> v`) and followed by the
    /// reversal cascade.
    pub fn insert_edge(&mut self, u: u32, v: u32) -> Result<()> {
        let n = self.num_vertices();
        if u == v || u as usize >= n || v as usize >= n {
            return Err(Error::usage(format!("bad edge ({u}, {v})")));
        }
        if self.has_edge(u, v) {
            return Err(Error::usage(format!("edge ({u}, {v}) already inserted")));
        }
        for _ in 0..self.params.b {
            if self.outdeg[u as usize] <= self.outdeg[v as usize] {
                self.insert_directed(u, v);
            } else {
                self.insert_directed(v, u);
            }
        }
        self.inserted_edges += 1;
        Ok(())
    }

    fn insert_directed(&mut self, mut u: u32, mut v: u32) {
        self.stats.copies_inserted += 1;
        let quarter = (self.params.b / 4) as f64;
        let mut chain = 0u64;
        loop {
            self.add_copy(u, v);
            let x = self.argmin_out(u);
            let (du, dx) = (self.outdeg[u as usize], self.outdeg[x as usize]);
            let violated = du as f64 > ((1.0 + self.params.lambda) * dx as f64).max(quarter) && du >= dx + 2;
            if !violated {
                break;
            }
            if chain == self.chain_cap {
                self.stats.chain_cap_hits += 1;
                break;
            }
            self.remove_copy(u, x);
            self.stats.reversals += 1;
            chain += 1;
            (u, v) = (x, u);
        }
        self.stats.longest_chain = self.stats.longest_chain.max(chain);
    }

    /// Out-neighbour of minimum outdegree, smallest id on ties.
    fn argmin_out(&self, u: u32) -> u32 {
        *self.out[u as usize]
            .keys()
            .min_by_key(|&&w| (self.outdeg[w as usize], w))
            .expect("u has just gained an out-edge")
    }

    fn set_outdeg(&mut self, u: u32, d: u32) {
        let old = bucket_index(self.outdeg[u as usize], self.params.lambda);
        let new = bucket_index(d, self.params.lambda);
        self.outdeg[u as usize] = d;
        if old != new {
            for &w in self.out[u as usize].keys() {
                let b = &mut self.in_buckets[w as usize];
                b.remove(&(old, u));
                b.insert((new, u));
            }
        }
    }

    fn add_copy(&mut self, u: u32, v: u32) {
        self.set_outdeg(u, self.outdeg[u as usize] + 1);
        let c = self.out[u as usize].entry(v).or_insert(0);
        *c += 1;
        if *c == 1 {
            let j = bucket_index(self.outdeg[u as usize], self.params.lambda);
            self.in_buckets[v as usize].insert((j, u));
        }
    }

    fn remove_copy(&mut self, u: u32, x: u32) {
        let c = self.out[u as usize].get_mut(&x).expect("copy present");
        *c -= 1;
        if *c == 0 {
            self.out[u as usize].remove(&x);
            let j = bucket_index(self.outdeg[u as usize], self.params.lambda);
            self.in_buckets[x as usize].remove(&(j, u));
        }
        self.set_outdeg(u, self.outdeg[u as usize] - 1);
    }

    /// Directed pairs `(u, v)` with `d⁺(u) > max{(1 + η/b)·d⁺(v), ⌊b/2⌋}`.
    pub fn check_invariant_theta_prime(&self) -> Vec<(u32, u32)> {
        let b = self.params.b as f64;
        let floor_half = (self.params.b / 2) as f64;
        let mut bad = Vec::new();
        for (u, outs) in self.out.iter().enumerate() {
            let du = self.outdeg[u] as f64;
            for &v in outs.keys() {
                let dv = self.outdeg[v as usize] as f64;
                if du > ((1.0 + self.params.eta / b) * dv).max(floor_half) {
                    bad.push((u as u32, v));
                }
            }
        }
        bad
    }

    /// Vertices whose in-neighbour buckets disagree with current outdegrees
    /// or with the out-neighbour maps.
    pub fn check_buckets(&self) -> Vec<u32> {
        let lambda = self.params.lambda;
        (0..self.num_vertices() as u32)
            .filter(|&v| {
                let expected: BTreeSet<(u32, u32)> = (0..self.num_vertices() as u32)
                    .filter(|&w| self.copies(w, v) > 0)
                    .map(|w| (bucket_index(self.outdeg[w as usize], lambda), w))
                    .collect();
                expected != self.in_buckets[v as usize]
            })
            .collect()
    }

    /// True when outdegrees sum to `b · edges` and each edge's copies total `b`.
    pub fn check_conservation(&self) -> bool {
        let b = self.params.b as u64;
        let sum: u64 = self.outdeg.iter().map(|&d| d as u64).sum();
        let per_vertex = self
            .out
            .iter()
            .enumerate()
            .all(|(u, o)| o.values().sum::<u32>() == self.outdeg[u]);
        let edges = self.edges();
        sum == b * self.inserted_edges
            && per_vertex
            && edges.len() as u64 == self.inserted_edges
            && edges.iter().all(|&(u, v)| (self.copies(u, v) + self.copies(v, u)) as u64 == b)
    }

    /// `max d⁺ / b`, which lies in `[ρ, (1+ε)ρ]`.
    pub fn density_estimate(&self) -> Result<f64> {
        if self.inserted_edges == 0 {
            return Err(Error::usage("no edges inserted"));
        }
        Ok(self.max_outdegree() as f64 / self.params.b as f64)
    }
}

/// Inserts the edges of `g` in ascending order.
pub fn orient_graph(g: &StaticGraph, params: OrientationParams) -> OrientedMultigraph {
    let mut o = OrientedMultigraph::new(g.num_vertices(), params);
    for (u, v) in g.edges() {
        o.insert_edge(u, v).expect("simple graph edges are distinct");
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densest::choose_params;

    fn params(n: usize, b: u32) -> OrientationParams {
        choose_params(n, 0.5, Some(b)).unwrap()
    }

    #[test]
    fn two_vertices_split_evenly() {
        let mut o = OrientedMultigraph::new(2, choose_params(2, 0.5, None).unwrap());
        o.insert_edge(0, 1).unwrap();
        assert_eq!(o.outdegree(0) + o.outdegree(1), 38);
        assert!(o.max_outdegree() <= 19 + 1);
        assert!(o.check_invariant_theta_prime().is_empty());
        assert!(o.insert_edge(1, 0).unwrap_err().is_usage());
    }

    #[test]
    fn triangle_conservation() {
        let mut o = OrientedMultigraph::new(3, params(3, 12));
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            o.insert_edge(u, v).unwrap();
        }
        assert_eq!(o.outdegrees().iter().sum::<u32>(), 36);
        assert!(o.check_conservation());
        assert!(o.check_buckets().is_empty());
    }

    #[test]
    fn star_invariant() {
        let mut o = OrientedMultigraph::new(5, params(5, 20));
        for leaf in 1..5 {
            o.insert_edge(0, leaf).unwrap();
        }
        assert!(o.check_invariant_theta_prime().is_empty());
        assert!(o.check_conservation());
        for leaf in 1..5 {
            assert!(o.outdegree(leaf) >= 5);
        }
    }

    #[test]
    fn hand_built_violation() {
        let p = params(2, 8);
        assert!(OrientedMultigraph::new(2, p).check_invariant_theta_prime().is_empty());
        let o = OrientedMultigraph::from_copies(2, p, &[(0, 1, 8)]).unwrap();
        assert_eq!(o.check_invariant_theta_prime(), vec![(0, 1)]);
        assert!(OrientedMultigraph::from_copies(2, p, &[(0, 1, 7)]).is_err());
    }

    #[test]
    fn estimate_needs_edges() {
        let o = OrientedMultigraph::new(3, params(3, 4));
        assert!(o.density_estimate().unwrap_err().is_usage());
    }
}
