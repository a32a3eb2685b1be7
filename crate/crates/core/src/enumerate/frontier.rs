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

//! Recursion state shared by the binary-partition baseline and the
//! cache-aware enumerator.
//!
//! `frontier` holds N(S) restricted to vertices above the start vertex, in
//! discovery order. A call owns the live range `lo..end`; entries before
//! `lo` were excluded by earlier siblings, vertices below the start vertex
//! are excluded implicitly. `cover[w]` counts members of S adjacent to `w`
//! plus one if `w` is itself in S, so `cover[w] > 0` means `w` is in N[S].

use super::compressed::CompletionVisitor;
use super::{choose, EnumStats, GraphletSink, NeighborIndex};
use crate::graph::StaticGraph;

pub(crate) enum Output<'a> {
    Count,
    List(&'a mut dyn GraphletSink),
    Records(&'a mut dyn CompletionVisitor),
}

/// Breakdown of the three-vertex completions of one base case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CaseCounts {
    /// Three vertices from N(S)\X.
    pub case1: u64,
    /// One vertex of N(S)\X with two of its outer neighbours.
    pub case2: u64,
    /// Two frontier vertices sharing the outer vertex, counted from both
    /// sides (always even).
    pub case3a_duplicated: u64,
    /// Two frontier vertices, the outer vertex adjacent to exactly one.
    pub case3b: u64,
    /// A path leaving S through one frontier vertex.
    pub case4: u64,
}

impl CaseCounts {
    pub fn total(&self) -> u64 {
        self.case1 + self.case2 + self.case3a_duplicated / 2 + self.case3b + self.case4
    }
}

pub(crate) struct FrontierState<'g> {
    g: &'g StaticGraph,
    index: Option<&'g NeighborIndex>,
    k: usize,
    depth: usize,
    start: u32,
    s: Vec<u32>,
    cover: Vec<u32>,
    frontier: Vec<u32>,
    scratch: Vec<u32>,
    pub(crate) stats: EnumStats,
    pub(crate) peak_frontier: usize,
}

impl<'g> FrontierState<'g> {
    /// `depth` is the number of vertices completed combinatorially at the
    /// base case (0 means plain binary partition down to |S| = k).
    pub(crate) fn new(g: &'g StaticGraph, index: Option<&'g NeighborIndex>, k: usize, depth: usize) -> Self {
        debug_assert!(depth < k || (depth == 0 && k >= 1));
        debug_assert!(depth < 3 || index.is_some());
        FrontierState {
            g,
            index,
            k,
            depth,
            start: 0,
            s: Vec::with_capacity(k),
            cover: vec![0; g.num_vertices()],
            frontier: Vec::new(),
            scratch: Vec::with_capacity(k),
            stats: EnumStats::default(),
            peak_frontier: 0,
        }
    }

    /// Enumerates the graphlets whose smallest vertex is `v`.
    pub(crate) fn run_from(&mut self, v: u32, out: &mut Output<'_>) {
        self.start = v;
        self.frontier.clear();
        self.s.push(v);
        self.cover[v as usize] += 1;
        for &w in self.g.neighbors(v) {
            if w > v {
                self.frontier.push(w);
            }
            self.cover[w as usize] += 1;
        }
        self.recurse(0, out);
        for &w in self.g.neighbors(v) {
            self.cover[w as usize] -= 1;
        }
        self.cover[v as usize] -= 1;
        self.s.pop();
    }

    /// Prepares S = `set` (connected, smallest member acts as start) for a
    /// direct base-case evaluation.
    pub(crate) fn load(&mut self, set: &[u32]) {
        self.start = *set.iter().min().expect("non-empty set");
        self.frontier.clear();
        self.s.clear();
        self.cover.fill(0);
        for &u in set {
            self.s.push(u);
            self.cover[u as usize] += 1;
        }
        for &u in set {
            for &w in self.g.neighbors(u) {
                if self.cover[w as usize] == 0 && w > self.start {
                    self.frontier.push(w);
                }
                self.cover[w as usize] += 1;
            }
        }
    }

    fn push(&mut self, u: u32) {
        self.s.push(u);
        self.cover[u as usize] += 1;
        for &w in self.g.neighbors(u) {
            if self.cover[w as usize] == 0 && w > self.start {
                self.frontier.push(w);
            }
            self.cover[w as usize] += 1;
        }
        self.peak_frontier = self.peak_frontier.max(self.frontier.len());
    }

    fn pop(&mut self, u: u32, end: usize) {
        for &w in self.g.neighbors(u) {
            self.cover[w as usize] -= 1;
        }
        self.cover[u as usize] -= 1;
        self.s.pop();
        self.frontier.truncate(end);
    }

    fn recurse(&mut self, lo: usize, out: &mut Output<'_>) -> bool {
        self.stats.recursive_calls += 1;
        if self.depth == 0 && self.s.len() == self.k {
            self.stats.success_leaves += 1;
            self.stats.solutions += 1;
            if let Output::List(sink) = out {
                if sink.materialize() {
                    self.scratch.clear();
                    self.scratch.extend_from_slice(&self.s);
                    self.scratch.sort_unstable();
                    sink.emit(&self.scratch);
                }
            }
            return true;
        }
        let end = self.frontier.len();
        if lo == end {
            self.stats.failure_leaves += 1;
            return false;
        }
        if self.depth > 0 && self.s.len() == self.k - self.depth {
            let found = self.base_case(lo, end, out);
            self.stats.solutions += found;
            if found > 0 {
                self.stats.success_leaves += 1;
            }
            return found > 0;
        }
        let mut found = false;
        for i in lo..end {
            let u = self.frontier[i];
            self.push(u);
            let ok = self.recurse(i + 1, out);
            self.pop(u, end);
            if !ok {
                break;
            }
            found = true;
        }
        found
    }

    #[inline]
    fn outer(&self, w: u32) -> bool {
        self.cover[w as usize] == 0 && w > self.start
    }

    fn base_case(&mut self, lo: usize, end: usize, out: &mut Output<'_>) -> u64 {
        match self.depth {
            1 => self.base_one(lo, end, out),
            2 => self.base_two(lo, end, out),
            3 => match out {
                Output::Count => self.count_three(lo, end).total(),
                Output::List(sink) => {
                    if sink.materialize() {
                        let mut expand = ExpandToSink { sink: &mut **sink, buf: Vec::new() };
                        self.visit_three(lo, end, &mut expand)
                    } else {
                        self.count_three(lo, end).total()
                    }
                }
                Output::Records(visitor) => self.visit_three(lo, end, &mut **visitor),
            },
            _ => unreachable!("depth is validated by the caller"),
        }
    }

    fn emit_with(&mut self, extra: &[u32], sink: &mut dyn GraphletSink) {
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.s);
        self.scratch.extend_from_slice(extra);
        self.scratch.sort_unstable();
        sink.emit(&self.scratch);
    }

    fn base_one(&mut self, lo: usize, end: usize, out: &mut Output<'_>) -> u64 {
        if let Output::List(sink) = out {
            if sink.materialize() {
                for i in lo..end {
                    let u = self.frontier[i];
                    self.emit_with(&[u], &mut **sink);
                }
            }
        }
        (end - lo) as u64
    }

    fn base_two(&mut self, lo: usize, end: usize, out: &mut Output<'_>) -> u64 {
        let mut count = choose((end - lo) as u64, 2);
        let g = self.g;
        for i in lo..end {
            let u = self.frontier[i];
            count += g.neighbors(u).iter().filter(|&&w| self.outer(w)).count() as u64;
        }
        if let Output::List(sink) = out {
            if sink.materialize() {
                for i in lo..end {
                    for j in i + 1..end {
                        let pair = [self.frontier[i], self.frontier[j]];
                        self.emit_with(&pair, &mut **sink);
                    }
                    let u = self.frontier[i];
                    for &w in g.neighbors(u) {
                        if self.outer(w) {
                            self.emit_with(&[u, w], &mut **sink);
                        }
                    }
                }
            }
        }
        count
    }

    /// Counts the completions of S by three vertices, following the
    /// frontier -> N(u) -> N(z) loop nesting so membership probes hit the
    /// table that was just scanned.
    pub(crate) fn count_three(&self, lo: usize, end: usize) -> CaseCounts {
        let index = self.index.expect("depth-3 base case needs a neighbour index");
        let g = self.g;
        let live = &self.frontier[lo..end];
        let mut c = CaseCounts {
            case1: choose(live.len() as u64, 3),
            ..CaseCounts::default()
        };
        for &u in live {
            let mut udeg = 0u64;
            for &z in g.neighbors(u) {
                if !self.outer(z) {
                    continue;
                }
                udeg += 1;
                for &w in g.neighbors(z) {
                    if self.outer(w) && !index.contains(u, w) {
                        c.case4 += 1;
                    }
                }
                for &v in live {
                    if v == u {
                        continue;
                    }
                    if index.contains(z, v) {
                        c.case3a_duplicated += 1;
                    } else {
                        c.case3b += 1;
                    }
                }
            }
            c.case2 += choose(udeg, 2);
        }
        debug_assert!(c.case3a_duplicated.is_multiple_of(2));
        c
    }

    /// Same traversal as [`Self::count_three`], reporting each family of
    /// completions instead of counting. Returns the number of graphlets.
    fn visit_three(&self, lo: usize, end: usize, visitor: &mut dyn CompletionVisitor) -> u64 {
        let index = self.index.expect("depth-3 base case needs a neighbour index");
        let g = self.g;
        let live = &self.frontier[lo..end];
        let s = &self.s;
        let mut total = 0u64;
        if live.len() >= 3 {
            visitor.case1(s, live);
            total += choose(live.len() as u64, 3);
        }
        let mut zs = Vec::new();
        for &u in live {
            zs.clear();
            for &z in g.neighbors(u) {
                if !self.outer(z) {
                    continue;
                }
                zs.push(z);
                for &w in g.neighbors(z) {
                    if self.outer(w) && !index.contains(u, w) {
                        visitor.case4(s, u, z, w);
                        total += 1;
                    }
                }
                for &v in live {
                    if v == u {
                        continue;
                    }
                    // a shared outer neighbour is reported once, from the smaller side
                    if !index.contains(z, v) || u < v {
                        visitor.case3(s, u, v, z);
                        total += 1;
                    }
                }
            }
            if zs.len() >= 2 {
                visitor.case2(s, u, &zs);
                total += choose(zs.len() as u64, 2);
            }
        }
        total
    }

    pub(crate) fn live_range(&self) -> (usize, usize) {
        (0, self.frontier.len())
    }
}

/// Expands completion families into explicit graphlets.
struct ExpandToSink<'a> {
    sink: &'a mut dyn GraphletSink,
    buf: Vec<u32>,
}

impl ExpandToSink<'_> {
    fn emit(&mut self, s: &[u32], extra: &[u32]) {
        self.buf.clear();
        self.buf.extend_from_slice(s);
        self.buf.extend_from_slice(extra);
        self.buf.sort_unstable();
        self.sink.emit(&self.buf);
    }
}

impl CompletionVisitor for ExpandToSink<'_> {
    fn case1(&mut self, s: &[u32], live: &[u32]) {
        for i in 0..live.len() {
            for j in i + 1..live.len() {
                for l in j + 1..live.len() {
                    self.emit(s, &[live[i], live[j], live[l]]);
                }
            }
        }
    }

    fn case2(&mut self, s: &[u32], u: u32, zs: &[u32]) {
        for i in 0..zs.len() {
            for j in i + 1..zs.len() {
                self.emit(s, &[u, zs[i], zs[j]]);
            }
        }
    }

    fn case3(&mut self, s: &[u32], u: u32, v: u32, z: u32) {
        self.emit(s, &[u, v, z]);
    }

    fn case4(&mut self, s: &[u32], u: u32, z: u32, w: u32) {
        self.emit(s, &[u, z, w]);
    }
}
