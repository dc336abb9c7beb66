use std::collections::HashMap;

use rayon::prelude::*;

use crate::graph::params::GraphParams;
use crate::graph::set::VertexSet;
use crate::graph::vertex::{adjacent, Vertex};

/// Neighbors of `v` in colex order. Each neighbor keeps one element of `v`
/// and adds two elements from outside it.
pub fn neighbors(params: &GraphParams, v: &Vertex) -> Vec<Vertex> {
    let outside: Vec<u32> = (1..=params.n).filter(|e| !v.contains(*e)).collect();
    let mut out = Vec::with_capacity(params.degree as usize);
    for &keep in &v.elems() {
        for (i, &p) in outside.iter().enumerate() {
            for &q in &outside[i + 1..] {
                out.push(Vertex::new(keep, p, q).expect("distinct labels"));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Edges induced on a vertex list by grouping on shared elements.
///
/// Two distinct triples meet in 0, 1 or 2 elements. Summing C(c_e,2) over
/// element multiplicities counts each pair once per shared element, and
/// summing C(c_p,2) over 2-subset multiplicities counts exactly the pairs
/// meeting in two elements. The difference S1 - 2·S2 is the number of pairs
/// meeting in exactly one. Duplicates in `vertices` are not allowed.
pub fn count_edges_grouped(vertices: &[Vertex]) -> u128 {
    let mut elem: HashMap<u32, u64> = HashMap::new();
    let mut pair: HashMap<(u32, u32), u64> = HashMap::new();
    for v in vertices {
        for e in v.elems() {
            *elem.entry(e).or_default() += 1;
        }
        for p in v.pairs() {
            *pair.entry(p).or_default() += 1;
        }
    }
    let choose2 = |c: u64| (c as u128) * (c as u128).saturating_sub(1) / 2;
    let s1: u128 = elem.values().map(|&c| choose2(c)).sum();
    let s2: u128 = pair.values().map(|&c| choose2(c)).sum();
    s1 - 2 * s2
}

/// Reference path: test every unordered pair directly.
pub fn count_edges_pairwise(vertices: &[Vertex]) -> u128 {
    vertices
        .par_iter()
        .enumerate()
        .map(|(i, u)| vertices[i + 1..].iter().filter(|w| adjacent(u, w)).count() as u128)
        .sum()
}

/// r(W): number of edges of G(n,3,1) with both ends in `set`.
pub fn count_induced_edges(params: &GraphParams, set: &VertexSet) -> u128 {
    assert_eq!(params.n, set.n(), "vertex set built for a different n");
    count_edges_grouped(&set.to_vec())
}

/// r(W) through the O(|W|²) pairwise path.
pub fn count_induced_edges_pairwise(params: &GraphParams, set: &VertexSet) -> u128 {
    assert_eq!(params.n, set.n(), "vertex set built for a different n");
    count_edges_pairwise(&set.to_vec())
}
