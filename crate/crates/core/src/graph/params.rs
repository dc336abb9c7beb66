use serde::Serialize;

use crate::error::{Error, Result};

/// Exact binomial coefficient. Panics on overflow of `u128`, which does not
/// happen for the `k <= 3` uses in this crate at any `n` that fits in `u32`.
pub fn binom(n: u128, k: u32) -> u128 {
    if (k as u128) > n {
        return 0;
    }
    let k = k.min((n - k as u128) as u32);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) is divisible by (i + 1) after the multiply
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// Ground-set size of G(n,3,1) together with its global counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphParams {
    pub n: u32,
    /// |V_n| = C(n,3)
    pub vertex_count: u128,
    /// d_n = 3·C(n-3,2); the graph is regular.
    pub degree: u128,
    /// |E_n| = d_n·|V_n| / 2
    pub total_edges: u128,
}

impl GraphParams {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "n must be at least 3, got {n}"
            )));
        }
        let nn = n as u128;
        let vertex_count = binom(nn, 3);
        let c2 = binom(nn - 3, 2);
        let degree = 3 * c2;
        // (3/2)·C(n-3,2)·C(n,3); degree·vertex_count is always even
        let total_edges = degree * vertex_count / 2;
        Ok(GraphParams {
            n,
            vertex_count,
            degree,
            total_edges,
        })
    }
}

/// Convenience wrapper matching the library's operation naming.
pub fn make_params(n: u32) -> Result<GraphParams> {
    GraphParams::new(n)
}
