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

use super::{Adjacency, StaticGraph};
use crate::error::{Error, Result};

const NIL: u32 = u32::MAX;

/// A mutation recorded on the undo stack.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    Delete(u32),
    /// `(r, v)`: `v` was merged into `r`.
    Contract(u32, u32),
}

#[derive(Clone, Copy, Debug)]
enum Step {
    /// Arc removed from its owner's list.
    Unlink(u32),
    /// Arc pair appended by a contraction; the value is the first arc.
    Alloc(u32),
    Kill(u32),
    Represent { v: u32, previous: u32 },
}

/// Undirected graph with threaded doubly-linked adjacency lists supporting
/// vertex deletion and edge contraction with exact LIFO undo.
///
/// Every undirected edge is a pair of arcs, one in each endpoint's list.
/// Arcs `0..n` are list sentinels. Deleting a vertex unlinks the twins of
/// its arcs from the neighbours' lists but leaves its own list intact, so
/// undoing relinks every entry at its former position.
#[derive(Clone, Debug)]
pub struct MutableGraph {
    n: usize,
    next: Vec<u32>,
    prev: Vec<u32>,
    head: Vec<u32>,
    twin: Vec<u32>,
    degree: Vec<u32>,
    alive: Vec<bool>,
    representative: Vec<u32>,
    steps: Vec<Step>,
    undo_log: Vec<(Mutation, usize)>,
    stamp: Vec<u32>,
    epoch: u32,
    live: usize,
}

impl MutableGraph {
    pub fn from_static(g: &StaticGraph) -> Self {
        let n = g.num_vertices();
        let arcs = n + 2 * g.num_edges();
        let mut mg = MutableGraph {
            n,
            next: (0..n as u32).collect(),
            prev: (0..n as u32).collect(),
            head: (0..n as u32).collect(),
            twin: vec![NIL; n],
            degree: vec![0; n],
            alive: vec![true; n],
            representative: (0..n as u32).collect(),
            steps: Vec::new(),
            undo_log: Vec::new(),
            stamp: vec![0; n],
            epoch: 0,
            live: n,
        };
        mg.next.reserve(arcs);
        for (u, v) in g.edges() {
            mg.push_arc_pair(u, v);
        }
        mg
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    /// Number of vertices not deleted or merged away.
    pub fn live_vertices(&self) -> usize {
        self.live
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.degree[v as usize] as usize
    }

    #[inline]
    pub fn is_alive(&self, v: u32) -> bool {
        self.alive[v as usize]
    }

    /// Vertex that `v` was merged into, or `v` itself.
    pub fn representative(&self, v: u32) -> u32 {
        self.representative[v as usize]
    }

    pub fn neighbors(&self, v: u32) -> Neighbors<'_> {
        Neighbors {
            g: self,
            sentinel: v,
            arc: self.next[v as usize],
        }
    }

    /// First neighbour in list order.
    #[inline]
    pub fn first_neighbor(&self, v: u32) -> Option<u32> {
        let a = self.next[v as usize];
        (a != v).then(|| self.head[a as usize])
    }

    /// Number of mutations that can still be undone.
    pub fn depth(&self) -> usize {
        self.undo_log.len()
    }

    pub fn last_mutation(&self) -> Option<Mutation> {
        self.undo_log.last().map(|&(m, _)| m)
    }

    pub fn delete_vertex(&mut self, v: u32) -> Result<()> {
        if (v as usize) >= self.n || !self.alive[v as usize] {
            return Err(Error::usage(format!("vertex {v} is not alive")));
        }
        self.delete_unchecked(v);
        Ok(())
    }

    /// Undoes the most recent mutation, which must be the deletion of `v`.
    pub fn restore_vertex(&mut self, v: u32) -> Result<()> {
        match self.last_mutation() {
            Some(Mutation::Delete(w)) if w == v => {
                self.undo();
                Ok(())
            }
            other => Err(Error::usage(format!(
                "cannot restore {v}: most recent mutation is {other:?}"
            ))),
        }
    }

    /// Merges `v` into `r`. `r` becomes adjacent to every former neighbour
    /// of either endpoint; duplicate adjacencies collapse.
    pub fn contract_edge(&mut self, r: u32, v: u32) -> Result<()> {
        let ok = (r as usize) < self.n
            && (v as usize) < self.n
            && r != v
            && self.alive[r as usize]
            && self.alive[v as usize]
            && self.neighbors(r).any(|w| w == v);
        if !ok {
            return Err(Error::usage(format!("{{{r}, {v}}} is not a live edge")));
        }
        self.contract_unchecked(r, v);
        Ok(())
    }

    /// Undoes the most recent mutation.
    pub fn undo(&mut self) -> Option<Mutation> {
        let (m, start) = self.undo_log.pop()?;
        while self.steps.len() > start {
            match self.steps.pop().unwrap() {
                Step::Unlink(a) => self.relink(a),
                Step::Alloc(a) => {
                    self.unlink(a + 1);
                    self.unlink(a);
                    self.pop_arc_pair(a);
                }
                Step::Kill(v) => {
                    self.alive[v as usize] = true;
                    self.live += 1;
                }
                Step::Represent { v, previous } => self.representative[v as usize] = previous,
            }
        }
        Some(m)
    }

    /// Undoes mutations until only `depth` remain.
    pub fn undo_to(&mut self, depth: usize) {
        while self.undo_log.len() > depth {
            self.undo();
        }
    }

    /// Adjacency lists of live vertices in list order, for comparisons.
    pub fn snapshot(&self) -> Vec<Option<Vec<u32>>> {
        (0..self.n as u32)
            .map(|v| self.alive[v as usize].then(|| self.neighbors(v).collect()))
            .collect()
    }

    /// First arc of `v`'s list; equals `v` when the list is empty.
    #[inline]
    pub(crate) fn arc_begin(&self, v: u32) -> u32 {
        self.next[v as usize]
    }

    #[inline]
    pub(crate) fn arc_next(&self, a: u32) -> u32 {
        self.next[a as usize]
    }

    #[inline]
    pub(crate) fn arc_target(&self, a: u32) -> u32 {
        self.head[a as usize]
    }

    pub(crate) fn delete_unchecked(&mut self, v: u32) {
        self.undo_log.push((Mutation::Delete(v), self.steps.len()));
        let mut a = self.next[v as usize];
        while a != v {
            let t = self.twin[a as usize];
            self.unlink(t);
            self.steps.push(Step::Unlink(t));
            a = self.next[a as usize];
        }
        self.alive[v as usize] = false;
        self.live -= 1;
        self.steps.push(Step::Kill(v));
    }

    pub(crate) fn contract_unchecked(&mut self, r: u32, v: u32) {
        self.undo_log.push((Mutation::Contract(r, v), self.steps.len()));
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let mut a = self.next[r as usize];
        while a != r {
            self.stamp[self.head[a as usize] as usize] = self.epoch;
            a = self.next[a as usize];
        }
        let mut a = self.next[v as usize];
        while a != v {
            let w = self.head[a as usize];
            let t = self.twin[a as usize];
            self.unlink(t);
            self.steps.push(Step::Unlink(t));
            if w != r && self.stamp[w as usize] != self.epoch {
                let pair = self.push_arc_pair(r, w);
                self.steps.push(Step::Alloc(pair));
            }
            a = self.next[a as usize];
        }
        self.alive[v as usize] = false;
        self.live -= 1;
        self.steps.push(Step::Kill(v));
        self.steps.push(Step::Represent {
            v,
            previous: self.representative[v as usize],
        });
        self.representative[v as usize] = r;
    }

    /// Appends arcs `u -> v` and `v -> u` at the tails of both lists and
    /// returns the id of the first.
    fn push_arc_pair(&mut self, u: u32, v: u32) -> u32 {
        let a = self.next.len() as u32;
        let b = a + 1;
        for (arc, owner, target, twin) in [(a, u, v, b), (b, v, u, a)] {
            let tail = self.prev[owner as usize];
            self.next.push(owner);
            self.prev.push(tail);
            self.head.push(target);
            self.twin.push(twin);
            self.next[tail as usize] = arc;
            self.prev[owner as usize] = arc;
            self.degree[owner as usize] += 1;
        }
        a
    }

    fn pop_arc_pair(&mut self, a: u32) {
        debug_assert_eq!(a as usize + 2, self.next.len());
        for v in [&mut self.next, &mut self.prev, &mut self.head, &mut self.twin] {
            v.truncate(a as usize);
        }
    }

    #[inline]
    fn owner(&self, a: u32) -> u32 {
        self.head[self.twin[a as usize] as usize]
    }

    #[inline]
    fn unlink(&mut self, a: u32) {
        let (p, nx) = (self.prev[a as usize], self.next[a as usize]);
        self.next[p as usize] = nx;
        self.prev[nx as usize] = p;
        let o = self.owner(a);
        self.degree[o as usize] -= 1;
    }

    #[inline]
    fn relink(&mut self, a: u32) {
        let (p, nx) = (self.prev[a as usize], self.next[a as usize]);
        self.next[p as usize] = a;
        self.prev[nx as usize] = a;
        let o = self.owner(a);
        self.degree[o as usize] += 1;
    }
}

pub struct Neighbors<'a> {
    g: &'a MutableGraph,
    sentinel: u32,
    arc: u32,
}

impl Iterator for Neighbors<'_> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.arc == self.sentinel {
            return None;
        }
        let w = self.g.head[self.arc as usize];
        self.arc = self.g.next[self.arc as usize];
        Some(w)
    }
}

impl Adjacency for MutableGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn is_alive(&self, v: u32) -> bool {
        (v as usize) < self.n && self.alive[v as usize]
    }

    fn neighbors_of(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.neighbors(v)
    }
}
