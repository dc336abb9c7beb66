//! Canonical representation of G(n,3,1): vertices are 3-subsets of
//! `{1..n}`, joined when they share exactly one element. Adjacency is always
//! computed from the triples, never stored.

mod colex;
mod edges;
mod params;
mod set;
pub mod setfile;
mod vertex;

pub use colex::{all_vertices, colex_rank, colex_unrank, vertex_count_u64};
pub use edges::{
    count_edges_grouped, count_edges_pairwise, count_induced_edges, count_induced_edges_pairwise,
    neighbors,
};
pub use params::{binom, make_params, GraphParams};
pub use set::{VertexSet, MAX_INDEX_BITS};
pub use vertex::{adjacent, Vertex};
