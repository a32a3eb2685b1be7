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

//! Amortized k-graphlet enumeration.
//!
//! Every recursive call either reports a graphlet or spawns two productive
//! children. Forced neighbours are absorbed into the root by contraction;
//! otherwise the recursion branches on a removable neighbour, and when
//! neither of two probed neighbours is removable the remaining component is
//! small and the linear-time variant with mandatory-vertex absorption takes
//! over.
//!
//! Sizes passed to [`fruitful`], [`removable`] and [`mark_mandatory`] count
//! the root itself. Inside the recursion `k_rem` is the number of vertices
//! still to be added, so the root must reach `k_rem + 1` vertices.

use super::{check_k, EnumStats, GraphletSink};
use crate::error::{Error, Result};
use crate::graph::{MutableGraph, StaticGraph, Traversal, VertexSet};

/// True iff at least `k` vertices (counting `r`) are reachable from `r`.
pub fn fruitful(g: &MutableGraph, r: u32, k: usize) -> bool {
    g.is_alive(r) && Traversal::new(g.num_vertices()).bounded_reach(g, r, k, None) >= k
}

/// True iff `r` still reaches `k` vertices once `x` is removed.
pub fn removable(g: &MutableGraph, r: u32, x: u32, k: usize) -> bool {
    x != r && g.is_alive(r) && Traversal::new(g.num_vertices()).bounded_reach(g, r, k, Some(x)) >= k
}

/// Vertices whose removal leaves fewer than `k` vertices connected to `r`.
pub fn mark_mandatory(g: &MutableGraph, r: u32, k: usize) -> Result<VertexSet> {
    if !fruitful(g, r, k) {
        return Err(Error::usage(format!("fewer than {k} vertices reachable from {r}")));
    }
    let mut marker = MandatoryMarker::new(g.num_vertices());
    marker.mark(g, r, k);
    let mut set = VertexSet::new(g.num_vertices());
    for &v in &marker.order {
        if marker.is_mandatory(v) {
            set.insert(v);
        }
    }
    Ok(set)
}

/// Counters for the structural claims the recursion relies on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AmortizedAudit {
    /// Times the recursion handed over to the linear-time variant.
    pub linear_switches: u64,
    /// Switches where r's component had 2 * k_rem vertices or more.
    pub small_graph_violations: u64,
    /// Reported sets that had the wrong size or were disconnected.
    pub bad_emissions: u64,
    /// Calls that ended without reporting anything.
    pub unproductive_calls: u64,
}

/// Lowpoint DFS that finds, for every vertex of r's component, how many
/// vertices its removal cuts off from r.
struct MandatoryMarker {
    seen: Vec<u32>,
    epoch: u32,
    disc: Vec<u32>,
    low: Vec<u32>,
    size: Vec<u32>,
    cut_off: Vec<u32>,
    parent: Vec<u32>,
    stack: Vec<(u32, u32)>,
    order: Vec<u32>,
    mandatory: Vec<u32>,
    component: u32,
    need: u32,
}

impl MandatoryMarker {
    fn new(n: usize) -> Self {
        MandatoryMarker {
            seen: vec![0; n],
            epoch: 0,
            disc: vec![0; n],
            low: vec![0; n],
            size: vec![0; n],
            cut_off: vec![0; n],
            parent: vec![u32::MAX; n],
            stack: Vec::new(),
            order: Vec::new(),
            mandatory: vec![0; n],
            component: 0,
            need: 0,
        }
    }

    fn mark(&mut self, g: &MutableGraph, r: u32, need: usize) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.seen.fill(0);
            self.mandatory.fill(0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.order.clear();
        self.stack.clear();
        let mut time = 0u32;
        self.open(r, u32::MAX, time);
        self.stack.push((r, g.arc_begin(r)));
        while let Some(top) = self.stack.last_mut() {
            let (v, arc) = *top;
            if arc != v {
                top.1 = g.arc_next(arc);
                let w = g.arc_target(arc);
                if self.seen[w as usize] != epoch {
                    time += 1;
                    self.open(w, v, time);
                    self.stack.push((w, g.arc_begin(w)));
                } else if w != self.parent[v as usize] {
                    let d = self.disc[w as usize];
                    let l = &mut self.low[v as usize];
                    *l = (*l).min(d);
                }
            } else {
                self.stack.pop();
                let p = self.parent[v as usize];
                if p != u32::MAX {
                    let (lv, sv) = (self.low[v as usize], self.size[v as usize]);
                    self.low[p as usize] = self.low[p as usize].min(lv);
                    self.size[p as usize] += sv;
                    if lv >= self.disc[p as usize] {
                        self.cut_off[p as usize] += sv;
                    }
                }
            }
        }
        self.component = self.size[r as usize];
        self.need = need as u32;
        for &x in &self.order[1..] {
            let left = self.component - 1 - self.cut_off[x as usize];
            if left < self.need {
                self.mandatory[x as usize] = epoch;
            }
        }
    }

    fn open(&mut self, v: u32, parent: u32, time: u32) {
        let i = v as usize;
        self.seen[i] = self.epoch;
        self.disc[i] = time;
        self.low[i] = time;
        self.size[i] = 1;
        self.cut_off[i] = 0;
        self.parent[i] = parent;
        self.order.push(v);
    }

    #[inline]
    fn is_mandatory(&self, v: u32) -> bool {
        self.mandatory[v as usize] == self.epoch && self.seen[v as usize] == self.epoch
    }
}

struct Enumerator<'a> {
    g: MutableGraph,
    bfs: Traversal,
    marker: MandatoryMarker,
    k: usize,
    s: Vec<u32>,
    scratch: Vec<u32>,
    stats: EnumStats,
    sink: &'a mut dyn GraphletSink,
    audit: Option<(AmortizedAudit, &'a StaticGraph)>,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a StaticGraph, k: usize, sink: &'a mut dyn GraphletSink, audit: bool) -> Self {
        let n = g.num_vertices();
        Enumerator {
            g: MutableGraph::from_static(g),
            bfs: Traversal::new(n),
            marker: MandatoryMarker::new(n),
            k,
            s: Vec::with_capacity(k),
            scratch: Vec::with_capacity(k),
            stats: EnumStats::default(),
            sink,
            audit: audit.then(|| (AmortizedAudit::default(), g)),
        }
    }

    fn emit(&mut self) {
        self.stats.solutions += 1;
        self.stats.success_leaves += 1;
        let check = self.audit.is_some();
        if check || self.sink.materialize() {
            self.scratch.clear();
            self.scratch.extend_from_slice(&self.s);
            self.scratch.sort_unstable();
        }
        if let Some((audit, reference)) = &mut self.audit {
            let distinct = self.scratch.windows(2).all(|w| w[0] < w[1]);
            if self.scratch.len() != self.k || !distinct || !reference.is_connected_subset(&self.scratch) {
                audit.bad_emissions += 1;
            }
        }
        if self.sink.materialize() {
            self.sink.emit(&self.scratch);
        }
    }

    fn reach(&mut self, r: u32, need: usize, skip: Option<u32>) -> usize {
        self.bfs.bounded_reach(&self.g, r, need, skip)
    }

    fn run(&mut self) {
        let n = self.g.num_vertices() as u32;
        for v in 0..n {
            if self.reach(v, self.k, None) >= self.k {
                self.s.push(v);
                self.enumerate(v, self.k - 1);
                self.s.clear();
            }
            self.g.delete_unchecked(v);
        }
    }

    /// Absorbs `v` into `r`; returns true when that completed a graphlet.
    fn absorb(&mut self, r: u32, v: u32, k_rem: &mut usize) -> bool {
        self.g.contract_unchecked(r, v);
        self.s.push(v);
        *k_rem -= 1;
        if *k_rem == 0 {
            self.emit();
            true
        } else {
            false
        }
    }

    fn enumerate(&mut self, r: u32, k_rem: usize) {
        self.stats.recursive_calls += 1;
        if k_rem == 0 {
            self.emit();
            return;
        }
        let (depth, s_len) = (self.g.depth(), self.s.len());
        let mut k_rem = k_rem;
        let mut done = false;
        while self.g.degree(r) == 1 {
            let v = self.g.first_neighbor(r).unwrap();
            if self.absorb(r, v, &mut k_rem) {
                done = true;
                break;
            }
        }
        if !done {
            let mut nbrs = self.g.neighbors(r);
            match (nbrs.next(), nbrs.next()) {
                (Some(x), Some(y)) => {
                    let need = k_rem + 1;
                    if self.reach(r, need, Some(x)) >= need {
                        self.branch(r, x, k_rem, Self::enumerate);
                    } else if self.reach(r, need, Some(y)) >= need {
                        self.branch(r, y, k_rem, Self::enumerate);
                    } else {
                        if let Some((audit, _)) = &mut self.audit {
                            audit.linear_switches += 1;
                            if self.bfs.component_size(&self.g, r) >= 2 * k_rem {
                                audit.small_graph_violations += 1;
                            }
                        }
                        self.linear(r, k_rem);
                    }
                }
                _ => {
                    // unreachable when the caller checked fruitfulness
                    self.stats.failure_leaves += 1;
                    if let Some((audit, _)) = &mut self.audit {
                        audit.unproductive_calls += 1;
                    }
                }
            }
        }
        self.g.undo_to(depth);
        self.s.truncate(s_len);
    }

    /// Include-`x` child, then exclude-`x` child.
    fn branch(&mut self, r: u32, x: u32, k_rem: usize, child: fn(&mut Self, u32, usize)) {
        let depth = self.g.depth();
        self.g.contract_unchecked(r, x);
        self.s.push(x);
        child(self, r, k_rem - 1);
        self.s.pop();
        self.g.undo_to(depth);
        self.g.delete_unchecked(x);
        child(self, r, k_rem);
        self.g.undo_to(depth);
    }

    fn linear(&mut self, r: u32, k_rem: usize) {
        self.stats.recursive_calls += 1;
        if k_rem == 0 {
            self.emit();
            return;
        }
        let (depth, s_len) = (self.g.depth(), self.s.len());
        let mut k_rem = k_rem;
        self.marker.mark(&self.g, r, k_rem + 1);
        let mut done = false;
        'absorb: loop {
            let mut nbrs = self.g.neighbors(r);
            let forced = nbrs.find(|&u| self.marker.is_mandatory(u));
            match forced {
                Some(u) => {
                    if self.absorb(r, u, &mut k_rem) {
                        done = true;
                        break 'absorb;
                    }
                }
                None => break 'absorb,
            }
        }
        if !done {
            match self.g.first_neighbor(r) {
                Some(z) => self.branch(r, z, k_rem, Self::linear),
                None => {
                    self.stats.failure_leaves += 1;
                    if let Some((audit, _)) = &mut self.audit {
                        audit.unproductive_calls += 1;
                    }
                }
            }
        }
        self.g.undo_to(depth);
        self.s.truncate(s_len);
    }
}

/// Enumerates every k-graphlet exactly once; start vertices in ascending id
/// order, each deleted after its subtree.
pub fn amortized_enum(g: &StaticGraph, k: usize, sink: &mut dyn GraphletSink) -> Result<EnumStats> {
    check_k(g, k)?;
    let mut e = Enumerator::new(g, k, sink, false);
    e.run();
    Ok(e.stats)
}

/// [`amortized_enum`] with every emission and size switch checked.
pub fn amortized_enum_audited(
    g: &StaticGraph,
    k: usize,
    sink: &mut dyn GraphletSink,
) -> Result<(EnumStats, AmortizedAudit)> {
    check_k(g, k)?;
    let mut e = Enumerator::new(g, k, sink, true);
    e.run();
    let audit = e.audit.map(|(a, _)| a).unwrap_or_default();
    Ok((e.stats, audit))
}

/// Enumerates the k-graphlets of `g` that contain `r` using only the
/// linear-time variant (mandatory absorption plus binary partition).
pub fn linear_enum(g: &StaticGraph, r: u32, k: usize, sink: &mut dyn GraphletSink) -> Result<EnumStats> {
    check_k(g, k)?;
    if r as usize >= g.num_vertices() {
        return Err(Error::usage(format!("vertex {r} out of range")));
    }
    let mut e = Enumerator::new(g, k, sink, false);
    if e.reach(r, k, None) < k {
        return Err(Error::usage(format!("fewer than {k} vertices reachable from {r}")));
    }
    e.s.push(r);
    e.linear(r, k - 1);
    Ok(e.stats)
}
