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

/// Ordered set of vertex ids with constant-time membership.
#[derive(Clone, Debug)]
pub struct VertexSet {
    members: Vec<u32>,
    membership: Vec<bool>,
}

impl VertexSet {
    /// Empty set over the universe `0..n`.
    pub fn new(n: usize) -> Self {
        VertexSet {
            members: Vec::new(),
            membership: vec![false; n],
        }
    }

    /// Inserts `v`; returns false when it was already present.
    pub fn insert(&mut self, v: u32) -> bool {
        if self.membership[v as usize] {
            return false;
        }
        self.membership[v as usize] = true;
        self.members.push(v);
        true
    }

    /// Removes the most recently inserted member.
    pub fn pop(&mut self) -> Option<u32> {
        let v = self.members.pop()?;
        self.membership[v as usize] = false;
        Some(v)
    }

    /// Drops members until only `len` remain.
    pub fn truncate(&mut self, len: usize) {
        while self.members.len() > len {
            self.pop();
        }
    }

    #[inline]
    pub fn contains(&self, v: u32) -> bool {
        self.membership.get(v as usize).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn to_sorted_vec(&self) -> Vec<u32> {
        let mut out = self.members.clone();
        out.sort_unstable();
        out
    }

    pub fn clear(&mut self) {
        self.truncate(0);
    }
}
