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

//! Compressed output for the depth-3 base case. One record describes a
//! family of graphlets sharing the recursion prefix S:
//!
//! ```text
//! F s1 .. sj | C1 a1 .. ap     S plus any 3 of a1..ap
//! F s1 .. sj | C2 u z1 .. zq   S plus u plus any 2 of z1..zq
//! F s1 .. sj | C3 u v z        S plus {u, v, z}
//! F s1 .. sj | C4 u z w        S plus {u, z, w}
//! ```

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};

/// Receives the completion families found by a depth-3 base case.
pub trait CompletionVisitor {
    fn case1(&mut self, s: &[u32], live: &[u32]);
    fn case2(&mut self, s: &[u32], u: u32, zs: &[u32]);
    fn case3(&mut self, s: &[u32], u: u32, v: u32, z: u32);
    fn case4(&mut self, s: &[u32], u: u32, z: u32, w: u32);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordCase {
    C1,
    C2,
    C3,
    C4,
}

/// A parsed record, in output labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedRecord {
    pub fixed: Vec<u64>,
    pub case: RecordCase,
    pub choice: Vec<u64>,
}

impl CompressedRecord {
    /// Explicit graphlets described by the record, each sorted ascending.
    pub fn expand(&self) -> Vec<Vec<u64>> {
        let c = &self.choice;
        let mut extras: Vec<[u64; 3]> = Vec::new();
        match self.case {
            RecordCase::C1 => {
                for i in 0..c.len() {
                    for j in i + 1..c.len() {
                        for l in j + 1..c.len() {
                            extras.push([c[i], c[j], c[l]]);
                        }
                    }
                }
            }
            RecordCase::C2 => {
                let zs = &c[1..];
                for i in 0..zs.len() {
                    for j in i + 1..zs.len() {
                        extras.push([c[0], zs[i], zs[j]]);
                    }
                }
            }
            RecordCase::C3 | RecordCase::C4 => extras.push([c[0], c[1], c[2]]),
        }
        extras
            .into_iter()
            .map(|extra| {
                let mut set = self.fixed.clone();
                set.extend_from_slice(&extra);
                set.sort_unstable();
                set
            })
            .collect()
    }
}

pub fn decompress_line(line: &str) -> Result<CompressedRecord> {
    let bad = |msg: &str| Error::Parse {
        line: 0,
        message: format!("{msg}: `{line}`"),
    };
    let (left, right) = line.split_once('|').ok_or_else(|| bad("missing `|`"))?;
    let mut left = left.split_whitespace();
    if left.next() != Some("F") {
        return Err(bad("record must start with `F`"));
    }
    let numbers = |it: std::str::SplitWhitespace<'_>| -> Result<Vec<u64>> {
        it.map(|t| t.parse::<u64>().map_err(|_| bad("bad vertex label")))
            .collect()
    };
    let fixed = numbers(left)?;
    let mut right = right.split_whitespace();
    let case = match right.next() {
        Some("C1") => RecordCase::C1,
        Some("C2") => RecordCase::C2,
        Some("C3") => RecordCase::C3,
        Some("C4") => RecordCase::C4,
        _ => return Err(bad("unknown case tag")),
    };
    let choice = numbers(right)?;
    let arity_ok = match case {
        RecordCase::C1 => choice.len() >= 3,
        RecordCase::C2 => choice.len() >= 3,
        RecordCase::C3 | RecordCase::C4 => choice.len() == 3,
    };
    if !arity_ok {
        return Err(bad("wrong number of choice vertices"));
    }
    Ok(CompressedRecord { fixed, case, choice })
}

/// Expands a whole compressed stream. Blank lines are skipped.
pub fn decompress<R: BufRead>(reader: R) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = decompress_line(&line).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { line: i + 1, message },
            other => other,
        })?;
        out.extend(record.expand());
    }
    Ok(out)
}

/// Writes records using the graph's output labels. The first I/O error is
/// kept and reported by [`RecordWriter::finish`].
pub(crate) struct RecordWriter<'a> {
    labels: &'a [u64],
    out: &'a mut dyn Write,
    error: Option<io::Error>,
    line: String,
    sorted: Vec<u64>,
}

impl<'a> RecordWriter<'a> {
    pub(crate) fn new(labels: &'a [u64], out: &'a mut dyn Write) -> Self {
        RecordWriter {
            labels,
            out,
            error: None,
            line: String::new(),
            sorted: Vec::new(),
        }
    }

    pub(crate) fn finish(self) -> Result<()> {
        match self.error {
            Some(e) => Err(e.into()),
            None => Ok(()),
        }
    }

    fn write(&mut self, s: &[u32], tag: &str, choice: &[u32]) {
        use std::fmt::Write as _;
        if self.error.is_some() {
            return;
        }
        self.sorted.clear();
        self.sorted.extend(s.iter().map(|&v| self.labels[v as usize]));
        self.sorted.sort_unstable();
        self.line.clear();
        self.line.push('F');
        for l in &self.sorted {
            let _ = write!(self.line, " {l}");
        }
        let _ = write!(self.line, " | {tag}");
        for &v in choice {
            let _ = write!(self.line, " {}", self.labels[v as usize]);
        }
        self.line.push('\n');
        if let Err(e) = self.out.write_all(self.line.as_bytes()) {
            self.error = Some(e);
        }
    }
}

impl CompletionVisitor for RecordWriter<'_> {
    fn case1(&mut self, s: &[u32], live: &[u32]) {
        self.write(s, "C1", live);
    }

    fn case2(&mut self, s: &[u32], u: u32, zs: &[u32]) {
        let mut choice = Vec::with_capacity(zs.len() + 1);
        choice.push(u);
        choice.extend_from_slice(zs);
        self.write(s, "C2", &choice);
    }

    fn case3(&mut self, s: &[u32], u: u32, v: u32, z: u32) {
        self.write(s, "C3", &[u, v, z]);
    }

    fn case4(&mut self, s: &[u32], u: u32, z: u32, w: u32) {
        self.write(s, "C4", &[u, z, w]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case1_record_expands_to_triples() {
        let r = decompress_line("F 1 2 | C1 5 7 9 11").unwrap();
        assert_eq!(r.fixed, vec![1, 2]);
        let sets = r.expand();
        assert_eq!(sets.len(), 4);
        assert!(sets.contains(&vec![1, 2, 5, 7, 9]));
    }

    #[test]
    fn case4_record_is_single_graphlet() {
        let r = decompress_line("F 3 | C4 8 1 6").unwrap();
        assert_eq!(r.expand(), vec![vec![1, 3, 6, 8]]);
    }

    #[test]
    fn case2_record_pairs_outer_vertices() {
        let r = decompress_line("F 0 | C2 4 5 6").unwrap();
        assert_eq!(r.expand(), vec![vec![0, 4, 5, 6]]);
        let r = decompress_line("F 0 | C2 4 5 6 7").unwrap();
        assert_eq!(r.expand().len(), 3);
    }

    #[test]
    fn malformed_records_rejected() {
        assert!(decompress_line("F 1 2 C1 3 4 5").is_err());
        assert!(decompress_line("G 1 | C1 3 4 5").is_err());
        assert!(decompress_line("F 1 | C9 3 4 5").is_err());
        assert!(decompress_line("F 1 | C3 3 4").is_err());
        let err = decompress("F 1 | C3 2 3 4\nbogus\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn writer_uses_labels() {
        let labels = [10, 20, 30, 40, 50];
        let mut buf = Vec::new();
        let mut w = RecordWriter::new(&labels, &mut buf);
        w.case1(&[1, 0], &[2, 3, 4]);
        w.case3(&[0], 1, 2, 3);
        w.finish().unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "F 10 20 | C1 30 40 50\nF 10 | C3 20 30 40\n");
    }
}
