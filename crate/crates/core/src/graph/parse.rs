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

use std::io::BufRead;

use super::StaticGraph;
use crate::error::{Error, Result};

/// A timestamped undirected edge over compacted vertex ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalEdge {
    pub u: u32,
    pub v: u32,
    pub t: u64,
}

/// Raw temporal edge stream as read from disk. Every occurrence is kept;
/// grouping into snapshots happens in [`crate::temporal::bucket_snapshots`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TemporalEdgeList {
    pub labels: Vec<u64>,
    pub edges: Vec<TemporalEdge>,
}

impl TemporalEdgeList {
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }
}

#[derive(Clone, Debug)]
pub enum ParsedGraph {
    Static(StaticGraph),
    Temporal(TemporalEdgeList),
}

/// Reads a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are skipped. Static lines carry `u v`, temporal lines `u v t`.
pub fn parse_edge_list<R: BufRead>(reader: R, temporal: bool) -> Result<ParsedGraph> {
    if temporal {
        parse_temporal(reader).map(ParsedGraph::Temporal)
    } else {
        parse_static(reader).map(ParsedGraph::Static)
    }
}

pub fn parse_static<R: BufRead>(reader: R) -> Result<StaticGraph> {
    let rows = read_rows(reader, 2)?;
    let (labels, index) = compact(rows.iter().flat_map(|r| [r[0], r[1]]));
    let edges = rows.iter().map(|r| (index(r[0]), index(r[1])));
    Ok(StaticGraph::from_edges(labels.len(), edges.collect::<Vec<_>>()).with_labels(labels))
}

pub fn parse_temporal<R: BufRead>(reader: R) -> Result<TemporalEdgeList> {
    let rows = read_rows(reader, 3)?;
    let (labels, index) = compact(rows.iter().filter(|r| r[0] != r[1]).flat_map(|r| [r[0], r[1]]));
    let edges = rows
        .iter()
        .filter(|r| r[0] != r[1])
        .map(|r| TemporalEdge {
            u: index(r[0]),
            v: index(r[1]),
            t: r[2],
        })
        .collect();
    Ok(TemporalEdgeList { labels, edges })
}

fn read_rows<R: BufRead>(reader: R, arity: usize) -> Result<Vec<[u64; 3]>> {
    let mut rows = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != arity {
            return Err(Error::Format {
                line: lineno,
                expected: arity,
                found: tokens.len(),
            });
        }
        let mut row = [0u64; 3];
        for (slot, tok) in row.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("`{tok}` is not a non-negative integer"),
            })?;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Sorted unique labels plus a lookup closure from label to dense id.
fn compact(labels: impl Iterator<Item = u64>) -> (Vec<u64>, impl Fn(u64) -> u32) {
    let mut sorted: Vec<u64> = labels.collect();
    sorted.sort_unstable();
    sorted.dedup();
    let lookup = sorted.clone();
    let index = move |label: u64| lookup.binary_search(&label).expect("label was collected") as u32;
    (sorted, index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_edge_path() {
        let g = parse_static("0 1\n1 2\n".as_bytes()).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (3, 2));
        assert_eq!((0..3).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![1, 2, 1]);
    }

    #[test]
    fn self_loop_and_duplicate_removed() {
        let g = parse_static("0 0\n0 1\n0 1\n".as_bytes()).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (2, 1));
    }

    #[test]
    fn ids_compacted_with_label_map() {
        let g = parse_static("# comment\n\n100 7\n7 42\n".as_bytes()).unwrap();
        assert_eq!(g.labels(), &[7, 42, 100]);
        assert!(g.has_edge(0, 2) && g.has_edge(0, 1));
    }

    #[test]
    fn temporal_keeps_multiplicity() {
        let parsed = parse_edge_list("0 1 5\n0 1 7\n".as_bytes(), true).unwrap();
        let ParsedGraph::Temporal(list) = parsed else {
            panic!("expected temporal")
        };
        assert_eq!(list.num_vertices(), 2);
        let times: Vec<u64> = list.edges.iter().map(|e| e.t).collect();
        assert_eq!(times, vec![5, 7]);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_static("0 1\nx 2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn temporal_line_in_static_mode_rejected() {
        let err = parse_static("0 1\n1 2 3\n".as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            Error::Format {
                line: 2,
                expected: 2,
                found: 3
            }
        ));
    }

    #[test]
    fn negative_timestamp_rejected() {
        assert!(parse_temporal("0 1 -4\n".as_bytes()).is_err());
    }
}
