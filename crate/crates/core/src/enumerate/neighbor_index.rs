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

/// Per-vertex open-addressing hash tables over the adjacency lists, packed
/// into one array so each table is a contiguous, scannable run of slots.
#[derive(Clone, Debug)]
pub struct NeighborIndex {
    offsets: Vec<usize>,
    slots: Vec<u32>,
}

const EMPTY: u32 = u32::MAX;

#[inline]
fn slot_of(v: u32, mask: usize) -> usize {
    ((v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 32) as usize & mask
}

impl NeighborIndex {
    pub fn build(g: &crate::graph::StaticGraph) -> Self {
        let n = g.num_vertices();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for v in 0..n as u32 {
            let size = (2 * g.degree(v)).max(2).next_power_of_two();
            offsets.push(offsets[v as usize] + size);
        }
        let mut slots = vec![EMPTY; offsets[n]];
        for v in 0..n as u32 {
            let base = offsets[v as usize];
            let mask = offsets[v as usize + 1] - base - 1;
            for &w in g.neighbors(v) {
                let mut i = slot_of(w, mask);
                while slots[base + i] != EMPTY {
                    i = (i + 1) & mask;
                }
                slots[base + i] = w;
            }
        }
        NeighborIndex { offsets, slots }
    }

    /// Whether `w` is a neighbour of `v`.
    #[inline]
    pub fn contains(&self, v: u32, w: u32) -> bool {
        let base = self.offsets[v as usize];
        let mask = self.offsets[v as usize + 1] - base - 1;
        let mut i = slot_of(w, mask);
        loop {
            let s = self.slots[base + i];
            if s == w {
                return true;
            }
            if s == EMPTY {
                return false;
            }
            i = (i + 1) & mask;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::StaticGraph;

    #[test]
    fn agrees_with_adjacency() {
        let edges: Vec<(u32, u32)> = (0..40u32).flat_map(|i| [(i, (i * 7 + 3) % 40), (i, (i * 13 + 1) % 40)]).collect();
        let g = StaticGraph::from_edges(40, edges);
        let idx = NeighborIndex::build(&g);
        for u in 0..40 {
            for v in 0..40 {
                assert_eq!(idx.contains(u, v), g.has_edge(u, v), "{u} {v}");
            }
        }
    }
}
