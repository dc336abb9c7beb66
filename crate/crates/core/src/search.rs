//! Shared machinery for the exact searches, built around a bitset
//! adjacency view of G(n,3,1) for small n.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bits::{SmallSet, SMALL_CAPACITY};
use crate::error::{Error, Result};
use crate::graph::{adjacent, all_vertices, GraphParams, Vertex, VertexSet};

/// Largest n whose vertex set fits a [`SmallSet`] (C(12,3) = 220).
pub const MAX_SEARCH_N: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Exact,
    BudgetExceeded,
}

/// Outcome of an exact search. With `BudgetExceeded` the value is the best
/// found so far (a lower bound on α, an upper bound on r(l)).
#[derive(Clone, Debug)]
pub struct ExactResult {
    pub value: u64,
    pub witness: VertexSet,
    pub status: SearchStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl ExactResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }
}

/// Wall-clock limit checked every few thousand nodes.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Deadline {
    start: Instant,
    limit: Option<Instant>,
    pub nodes: u64,
    pub expired: bool,
}

impl Deadline {
    pub fn new(budget: Duration) -> Self {
        let start = Instant::now();
        Deadline {
            start,
            limit: start.checked_add(budget),
            nodes: 0,
            expired: false,
        }
    }

    /// Counts a node; returns true once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        if !self.expired && self.nodes & 0xfff == 0 {
            if let Some(limit) = self.limit {
                self.expired = Instant::now() >= limit;
            }
        }
        self.expired
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

/// G(n,3,1) for `n <= 12` with vertices indexed by colex rank.
#[derive(Clone, Debug)]
pub struct SmallGraph {
    pub n: u32,
    pub vertices: Vec<Vertex>,
    /// Neighborhoods in G.
    pub adj: Vec<SmallSet>,
    /// Neighborhoods in the complement of G (excluding the vertex itself).
    pub compat: Vec<SmallSet>,
}

impl SmallGraph {
    pub fn new(params: &GraphParams) -> Result<Self> {
        if params.n > MAX_SEARCH_N {
            return Err(Error::InvalidParameter(format!(
                "exact search supports n <= {MAX_SEARCH_N}, got {}",
                params.n
            )));
        }
        let vertices: Vec<Vertex> = all_vertices(params.n).collect();
        let len = vertices.len();
        debug_assert!(len <= SMALL_CAPACITY);
        let mut adj = vec![SmallSet::EMPTY; len];
        let mut compat = vec![SmallSet::EMPTY; len];
        for i in 0..len {
            for j in 0..len {
                if i == j {
                    continue;
                }
                if adjacent(&vertices[i], &vertices[j]) {
                    adj[i].insert(j);
                } else {
                    compat[i].insert(j);
                }
            }
        }
        Ok(SmallGraph {
            n: params.n,
            vertices,
            adj,
            compat,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn all(&self) -> SmallSet {
        SmallSet::prefix(self.len())
    }

    pub fn to_vertex_set(&self, s: &SmallSet) -> VertexSet {
        VertexSet::from_ranks(self.n, s.iter().map(|i| i as u64)).expect("indices are colex ranks")
    }

    pub fn edges_within(&self, s: &SmallSet) -> u64 {
        s.iter()
            .map(|i| self.adj[i].and(s).len() as u64)
            .sum::<u64>()
            / 2
    }

    /// Number of cliques of G in a greedy cover of `p`, taking vertices in
    /// index order. Upper-bounds the independence number of G[p].
    pub fn greedy_clique_cover(&self, p: &SmallSet) -> usize {
        let mut rest = *p;
        let mut cliques = 0;
        while let Some(v) = rest.first() {
            cliques += 1;
            // grow a clique from v, keeping only common neighbors
            let mut cand = rest.and(&self.adj[v]);
            rest.remove(v);
            while let Some(u) = cand.first() {
                rest.remove(u);
                cand = cand.and(&self.adj[u]);
            }
        }
        cliques
    }
}
