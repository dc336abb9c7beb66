//! Induced subgraphs of the distance graph G(n,3,1).
//!
//! Vertices are the 3-element subsets of `{1..n}`; two are adjacent when
//! they share exactly one element.
//!
//! The crate counts edges inside vertex sets and builds explicit sparse
//! sets for `l` between `n` and `n³`. Lower bounds live in [`bounds`];
//! exact minima for small `n` come from branch and bound in [`oracle`].

pub mod bits;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod independence;
pub mod oracle;
pub mod search;

pub use constructions::{BuildOptions, ConstructionReport};
pub use error::{Error, Result};
pub use graph::{
    adjacent, colex_rank, colex_unrank, count_induced_edges, make_params, neighbors, GraphParams,
    Vertex, VertexSet,
};
pub use independence::{AlphaMode, AlphaValue};
pub use search::{ExactResult, SearchStatus};
