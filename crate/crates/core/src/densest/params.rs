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

use crate::error::{Error, Result};

/// Smoothness slack in the maintained invariant.
pub const ETA: f64 = 3.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientationParams {
    pub epsilon: f64,
    pub gamma: f64,
    pub eta: f64,
    /// Copies per edge.
    pub b: u32,
    pub lambda: f64,
    /// Set when `b` was supplied by the caller instead of the formula.
    pub b_override: Option<u32>,
    /// Vertex count the parameters were chosen for.
    pub n: usize,
}

/// b = ⌈γ⁻¹ η log_{1+γ} n⌉ with γ = ε/2, unless `b_override` is given.
pub fn choose_params(n: usize, epsilon: f64, b_override: Option<u32>) -> Result<OrientationParams> {
    if n < 2 {
        return Err(Error::usage(format!("need at least 2 vertices, got {n}")));
    }
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::usage(format!("epsilon = {epsilon} outside (0, 1]")));
    }
    if matches!(b_override, Some(b) if b < 2) {
        return Err(Error::usage("b must be at least 2"));
    }
    let gamma = epsilon / 2.0;
    let formula = (ETA / gamma * (n as f64).ln() / (1.0 + gamma).ln()).ceil() as u32;
    let b = b_override.unwrap_or(formula.max(2));
    Ok(OrientationParams {
        epsilon,
        gamma,
        eta: ETA,
        b,
        lambda: ETA / (b as f64 * 64.0),
        b_override,
        n,
    })
}
