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

//! CSV output and timing summaries shared by the library and the CLI.

use std::io::Write;
use std::time::Duration;

use crate::error::Result;

/// Writes a header line and one comma-separated line per row.
pub fn emit_csv<I>(out: &mut dyn Write, header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = Vec<String>>,
{
    writeln!(out, "{}", header.join(","))?;
    for row in rows {
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimingReport {
    pub wall_ms: u128,
    pub solutions: u64,
    pub solutions_per_sec: f64,
}

pub fn timing_report(elapsed: Duration, solutions: u64) -> TimingReport {
    let secs = elapsed.as_secs_f64();
    TimingReport {
        wall_ms: elapsed.as_millis(),
        solutions,
        solutions_per_sec: if secs > 0.0 { solutions as f64 / secs } else { 0.0 },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_lines() {
        let mut buf = Vec::new();
        emit_csv(&mut buf, &["a", "b"], vec![vec!["1".into(), "2".into()]]).unwrap();
        assert_eq!(buf, b"a,b\n1,2\n");
    }

    #[test]
    fn rate() {
        let t = timing_report(Duration::from_millis(500), 10);
        assert_eq!(t.wall_ms, 500);
        assert!((t.solutions_per_sec - 20.0).abs() < 1e-9);
        assert_eq!(timing_report(Duration::ZERO, 3).solutions_per_sec, 0.0);
    }
}
