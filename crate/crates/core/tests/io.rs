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

use graphmine::graph::{parse_edge_list, parse_static, ParsedGraph};
use graphmine::report::emit_csv;
use graphmine::Error;
use proptest::prelude::*;

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    (header, rows)
}

proptest! {
    #[test]
    fn csv_round_trip(rows in proptest::collection::vec(proptest::collection::vec("[a-z0-9.]{1,6}", 3), 0..20)) {
        let mut buf = Vec::new();
        emit_csv(&mut buf, &["x", "y", "z"], rows.clone()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        prop_assert!(text.ends_with('\n'));
        let (header, back) = parse_csv(&text);
        prop_assert_eq!(header, vec!["x", "y", "z"]);
        prop_assert_eq!(back, rows);
    }

    #[test]
    fn edge_list_round_trip(edges in proptest::collection::vec((0u64..1000, 0u64..1000), 1..60)) {
        let text: String = edges.iter().map(|(u, v)| format!("{u}\t{v}\n")).collect();
        let g = parse_static(text.as_bytes()).unwrap();
        let mut want: Vec<(u64, u64)> = edges
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        want.sort_unstable();
        want.dedup();
        let mut got: Vec<(u64, u64)> = g.edges().map(|(u, v)| (g.label(u), g.label(v))).collect();
        got.sort_unstable();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn empty_csv_is_header_only() {
    let mut buf = Vec::new();
    emit_csv(&mut buf, &["node", "W", "h", "arcd"], Vec::<Vec<String>>::new()).unwrap();
    assert_eq!(buf, b"node,W,h,arcd\n");
}

#[test]
fn malformed_lines_report_their_position() {
    match parse_static("0 1\n# note\n1 x\n".as_bytes()) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
    match parse_edge_list("0 1 5\n0 1\n".as_bytes(), true) {
        Err(Error::Format { line, expected, found }) => assert_eq!((line, expected, found), (2, 3, 2)),
        other => panic!("unexpected {other:?}"),
    }
    match parse_edge_list("0 1 5\n0 1 7\n".as_bytes(), true).unwrap() {
        ParsedGraph::Temporal(t) => assert_eq!(t.edges.len(), 2),
        ParsedGraph::Static(_) => panic!("expected temporal"),
    }
}
