//! Inputs shared by the benchmarks.

use g31_core::{Vertex, VertexSet};

/// Every `stride`-th vertex of V_n in colex order.
pub fn strided_set(n: u32, stride: u64) -> VertexSet {
    let all = VertexSet::full(n).expect("small n");
    VertexSet::from_vertices(n, all.iter().step_by(stride as usize)).expect("valid vertices")
}

pub fn as_vec(set: &VertexSet) -> Vec<Vertex> {
    set.to_vec()
}
