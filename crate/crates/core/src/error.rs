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

use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A line of an edge list could not be understood.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A line has the wrong number of tokens for the selected format.
    #[error("line {line}: expected {expected} tokens, found {found}")]
    Format {
        line: usize,
        expected: usize,
        found: usize,
    },

    /// Caller violated an operation's precondition.
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// True for errors caused by bad arguments rather than bad data or I/O.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Usage(_))
    }
}
