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

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::report::emit_csv;

use super::{window_record, SnapshotTree, WindowCore};

/// ARCD at or below this value counts as zero.
pub const DEFAULT_EPSILON_ZERO: f64 = 1e-9;

/// Windows summed per parallel batch. Fixed so the floating-point
/// summation order does not depend on the worker count.
const BATCH: usize = 64;

/// √(coreness · degree).
pub fn rcd(coreness: usize, degree: usize) -> f64 {
    ((coreness as f64) * (degree as f64)).sqrt()
}

/// How the multiplicity threshold follows the window size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HPolicy {
    One,
    Half,
    Full,
}

impl HPolicy {
    pub fn resolve(self, w: usize) -> usize {
        match self {
            HPolicy::One => 1,
            HPolicy::Half => (w / 2).max(1),
            HPolicy::Full => w.max(1),
        }
    }
}

/// Window sizes 1, 2, 4, ... up to `tau - 1`, plus `tau - 1` itself.
pub fn w_grid(tau: usize) -> Result<Vec<usize>> {
    if tau < 2 {
        return Err(Error::usage(format!("need at least 2 snapshots, got {tau}")));
    }
    let top = tau - 1;
    let mut grid: Vec<usize> = std::iter::successors(Some(1usize), |&w| w.checked_mul(2))
        .take_while(|&w| w <= top)
        .collect();
    if grid.last() != Some(&top) {
        grid.push(top);
    }
    Ok(grid)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcdRow {
    pub node: u32,
    pub w: usize,
    pub h: usize,
    pub arcd: f64,
}

/// Mean RCD of every vertex over all windows of each grid size. Rows are
/// ordered by window size, then vertex id.
pub fn arcd_series(tree: &SnapshotTree, policy: HPolicy) -> Result<Vec<ArcdRow>> {
    let tau = tree.tau();
    let n = tree.num_vertices();
    let mut rows = Vec::new();
    for w in w_grid(tau)? {
        let h = policy.resolve(w);
        let windows = tau - w + 1;
        let mut sum = vec![0.0f64; n];
        let starts: Vec<usize> = (0..windows).collect();
        for batch in starts.chunks(BATCH) {
            let parts: Vec<Vec<f64>> = batch
                .par_iter()
                .map(|&a| {
                    let rec = window_record(tree, a, a + w - 1, h)?;
                    Ok(rec.coreness.iter().zip(&rec.degree).map(|(&c, &d)| rcd(c, d)).collect())
                })
                .collect::<Result<_>>()?;
            for part in parts {
                for (s, x) in sum.iter_mut().zip(part) {
                    *s += x;
                }
            }
        }
        rows.extend(sum.into_iter().enumerate().map(|(v, s)| ArcdRow {
            node: v as u32,
            w,
            h,
            arcd: s / windows as f64,
        }));
    }
    Ok(rows)
}

/// Smallest window size at which a vertex's ARCD drops to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FallingPoint {
    At(usize),
    Never,
}

impl fmt::Display for FallingPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FallingPoint::At(w) => write!(f, "{w}"),
            FallingPoint::Never => f.write_str("inf"),
        }
    }
}

pub fn falling_points(series: &[ArcdRow], epsilon_zero: f64) -> BTreeMap<u32, FallingPoint> {
    let mut out: BTreeMap<u32, FallingPoint> = BTreeMap::new();
    for row in series {
        let entry = out.entry(row.node).or_insert(FallingPoint::Never);
        if row.arcd <= epsilon_zero {
            *entry = (*entry).min(FallingPoint::At(row.w));
        }
    }
    out
}

pub fn write_resilience_csv(out: &mut dyn Write, labels: &[u64], rows: &[ArcdRow]) -> Result<()> {
    emit_csv(
        out,
        &["node", "W", "h", "arcd"],
        rows.iter().map(|r| {
            vec![
                labels[r.node as usize].to_string(),
                r.w.to_string(),
                r.h.to_string(),
                format!("{:.6}", r.arcd),
            ]
        }),
    )
}

pub fn write_cores_csv(out: &mut dyn Write, labels: &[u64], h: usize, k: usize, cores: &[WindowCore]) -> Result<()> {
    emit_csv(
        out,
        &["window_start", "window_end", "h", "k", "vertex"],
        cores.iter().flat_map(|c| {
            c.vertices.iter().map(move |&v| {
                vec![
                    c.start.to_string(),
                    c.end.to_string(),
                    h.to_string(),
                    k.to_string(),
                    labels[v as usize].to_string(),
                ]
            })
        }),
    )
}

pub fn write_classes_csv(out: &mut dyn Write, labels: &[u64], classes: &BTreeMap<u32, FallingPoint>) -> Result<()> {
    emit_csv(
        out,
        &["node", "falling_W"],
        classes.iter().map(|(&v, c)| vec![labels[v as usize].to_string(), c.to_string()]),
    )
}
