//! Ground truth at small n: the exact minimum r(l) of induced edges over
//! all l-vertex sets, and exhaustive enumeration of maximal independent sets.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;

use crate::bits::{SmallSet, SMALL_CAPACITY};
use crate::bounds::turan_lb;
use crate::error::{Error, Result};
use crate::graph::{GraphParams, VertexSet};
use crate::independence::max_independent_set;
use crate::search::{Deadline, ExactResult, SearchStatus, SmallGraph};

/// Regression values `n<TAB>l<TAB>min_edges` for n = 6 and 7, every l.
pub const MIN_EDGES_FIXTURE: &str = include_str!("../fixtures/min_edges.tsv");

/// Which side of the identity r(W) = |E_n| − d_n·|V∖W| + r(V∖W) to search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchSide {
    /// Complement when it is the smaller side.
    #[default]
    Auto,
    Direct,
    Complement,
}

/// r(l) with a witness, searching whichever side is smaller.
pub fn exact_min_edges(params: &GraphParams, l: u64, budget: Duration) -> Result<ExactResult> {
    exact_min_edges_on(params, l, budget, SearchSide::Auto)
}

/// r(l) by branch and bound over vertices in colex order.
///
/// A node is pruned when its partial edge count, plus the smallest possible
/// edges from the remaining picks into the chosen set, plus the Turán bound
/// for the remaining picks among themselves, cannot beat the incumbent. The
/// reported witness is the lexicographically smallest optimal set by colex
/// rank, on either side.
pub fn exact_min_edges_on(
    params: &GraphParams,
    l: u64,
    budget: Duration,
    side: SearchSide,
) -> Result<ExactResult> {
    if l as u128 > params.vertex_count {
        return Err(Error::InvalidParameter(format!(
            "l = {l} exceeds |V_n| = {}",
            params.vertex_count
        )));
    }
    let g = SmallGraph::new(params)?;
    let total = g.len() as u64;
    let complement = match side {
        SearchSide::Auto => total - l < l,
        SearchSide::Direct => false,
        SearchSide::Complement => true,
    };
    let target = if complement { total - l } else { l };

    let mut deadline = Deadline::new(budget);
    // the pruning bound needs an upper bound on α
    let alpha = {
        let mis = max_independent_set(params, budget)?;
        if mis.is_exact() {
            mis.value
        } else {
            g.greedy_clique_cover(&g.all()) as u64
        }
    };

    let (heuristic, heuristic_set) = local_search(&g, target as usize);
    let mut search = MinEdgeSearch {
        g: &g,
        target: target as usize,
        alpha: alpha as u128,
        include_first: true,
        force_first: target > 0,
        stop_at_first: false,
        found: false,
        max_degree: params.degree as usize,
        total_edges: params.total_edges,
        degree: params.degree,
        // one above the heuristic value, so every optimal set beats it
        best: heuristic + 1,
        best_set: SmallSet::EMPTY,
        deadline: &mut deadline,
    };
    // Value pass. The symmetric group on {1..n} moves any vertex to {1,2,3},
    // so some optimal set contains vertex 0 and the search may insist on it.
    search.start();
    let mut inner = heuristic;
    let mut inner_set = heuristic_set;
    if search.best <= heuristic {
        inner = search.best;
        inner_set = search.best_set;
    }
    // Witness pass: the first set in colex order (lexicographically smallest
    // final witness) reaching the optimum, stopping as soon as it is seen.
    if !search.deadline.expired {
        search.include_first = !complement;
        search.force_first = false;
        search.stop_at_first = true;
        search.found = false;
        search.best = inner + 1;
        search.start();
        if search.found {
            inner_set = search.best_set;
        } else {
            debug_assert!(
                search.deadline.expired,
                "witness pass must reach the optimum"
            );
        }
    }
    let expired = deadline.expired;

    let (value, witness) = if complement {
        let removed = target as u128;
        let value = params.total_edges + inner as u128 - params.degree * removed;
        (value as u64, g.all().and_not(&inner_set))
    } else {
        (inner, inner_set)
    };
    debug_assert_eq!(g.edges_within(&witness), value);

    Ok(ExactResult {
        value,
        witness: g.to_vertex_set(&witness),
        status: if expired {
            SearchStatus::BudgetExceeded
        } else {
            SearchStatus::Exact
        },
        nodes_explored: deadline.nodes,
        elapsed: deadline.elapsed(),
    })
}

/// Greedy fill by fewest edges into the current set, then single swaps
/// until none improves.
fn local_search(g: &SmallGraph, size: usize) -> (u64, SmallSet) {
    let mut chosen = SmallSet::EMPTY;
    for _ in 0..size {
        let v = g
            .all()
            .and_not(&chosen)
            .iter()
            .min_by_key(|&v| g.adj[v].and(&chosen).len())
            .expect("size <= vertex count");
        chosen.insert(v);
    }
    let mut edges = g.edges_within(&chosen);
    loop {
        let mut improved = false;
        'swap: for out in chosen.iter().collect::<Vec<_>>() {
            let mut rest = chosen;
            rest.remove(out);
            let lose = g.adj[out].and(&rest).len() as u64;
            for inn in g.all().and_not(&chosen).iter() {
                let gain = g.adj[inn].and(&rest).len() as u64;
                if gain < lose {
                    rest.insert(inn);
                    chosen = rest;
                    edges = edges - lose + gain;
                    improved = true;
                    break 'swap;
                }
            }
        }
        if !improved {
            return (edges, chosen);
        }
    }
}

struct MinEdgeSearch<'a> {
    g: &'a SmallGraph,
    target: usize,
    alpha: u128,
    include_first: bool,
    /// Only the branch containing vertex 0 is explored.
    force_first: bool,
    stop_at_first: bool,
    found: bool,
    max_degree: usize,
    total_edges: u128,
    degree: u128,
    best: u64,
    best_set: SmallSet,
    deadline: &'a mut Deadline,
}

impl MinEdgeSearch<'_> {
    fn start(&mut self) {
        let mut into_chosen = [0; SMALL_CAPACITY];
        let mut into_excluded = [0; SMALL_CAPACITY];
        self.run(
            0,
            SmallSet::EMPTY,
            0,
            0,
            0,
            &mut into_chosen,
            &mut into_excluded,
        );
    }

    fn finished(&self) -> bool {
        self.deadline.expired || (self.stop_at_first && self.found)
    }

    /// `partial` counts edges inside the chosen set, `dropped` edges inside
    /// the excluded prefix `{0..idx} ∖ chosen`. `into_chosen[v]` and
    /// `into_excluded[v]` hold the neighbors of `v` on each side.
    #[allow(clippy::too_many_arguments)]
    fn run(
        &mut self,
        idx: usize,
        chosen: SmallSet,
        count: usize,
        partial: u64,
        dropped: u64,
        into_chosen: &mut [u16; SMALL_CAPACITY],
        into_excluded: &mut [u16; SMALL_CAPACITY],
    ) {
        if self.deadline.tick() || self.finished() {
            return;
        }
        let need = self.target - count;
        if need == 0 {
            if partial < self.best {
                self.best = partial;
                self.best_set = chosen;
                self.found = true;
            }
            return;
        }
        let n = self.g.len();
        if n - idx < need {
            return;
        }
        let drop_more = (n - idx) - need;
        // Direct side: edges of the final set are the partial count, the
        // remaining picks' edges into the chosen set, and their own edges.
        let direct = partial as u128
            + smallest_sum(&into_chosen[idx..n], need, self.max_degree) as u128
            + turan_lb(need as u128, self.alpha);
        // Excluded side: the final set has |E_n| − d·|R| + |E(R)| edges for
        // the removed set R, which contains the excluded prefix.
        let removed_edges = dropped as u128
            + smallest_sum(&into_excluded[idx..n], drop_more, self.max_degree) as u128
            + turan_lb(drop_more as u128, self.alpha);
        let removed = (n - self.target) as u128;
        let complement = (self.total_edges + removed_edges).saturating_sub(self.degree * removed);
        if direct.max(complement) >= self.best as u128 {
            return;
        }

        let added = into_chosen[idx] as u64;
        let lost = into_excluded[idx] as u64;
        let neighbors = self.g.adj[idx];
        let mut with = chosen;
        with.insert(idx);
        let passes = if self.force_first && idx == 0 { 1 } else { 2 };
        for pass in 0..passes {
            let include = (pass == 0) == (self.include_first || self.force_first && idx == 0);
            if include {
                neighbors.iter().for_each(|v| into_chosen[v] += 1);
                self.run(
                    idx + 1,
                    with,
                    count + 1,
                    partial + added,
                    dropped,
                    into_chosen,
                    into_excluded,
                );
                neighbors.iter().for_each(|v| into_chosen[v] -= 1);
            } else {
                neighbors.iter().for_each(|v| into_excluded[v] += 1);
                self.run(
                    idx + 1,
                    chosen,
                    count,
                    partial,
                    dropped + lost,
                    into_chosen,
                    into_excluded,
                );
                neighbors.iter().for_each(|v| into_excluded[v] -= 1);
            }
        }
    }
}

/// Sum of the `k` smallest entries; every entry is at most `max`.
fn smallest_sum(xs: &[u16], k: usize, max: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let mut hist = [0u16; SMALL_CAPACITY];
    for &x in xs {
        hist[x as usize] += 1;
    }
    let mut left = k as u64;
    let mut sum = 0;
    for (value, &count) in hist[..=max].iter().enumerate() {
        let take = left.min(count as u64);
        sum += take * value as u64;
        left -= take;
        if left == 0 {
            break;
        }
    }
    sum
}

/// All maximal independent sets with at least `min_size` vertices, in
/// lexicographic order of their colex rank sequences.
///
/// Bron–Kerbosch with pivoting on the complement of G; exhaustive, meant
/// for n ≤ 7.
pub fn enumerate_independent_sets(params: &GraphParams, min_size: usize) -> Result<Vec<VertexSet>> {
    let g = SmallGraph::new(params)?;
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(&g, &mut r, g.all(), SmallSet::EMPTY, min_size, &mut found);
    found.sort();
    Ok(found
        .into_iter()
        .map(|ranks| {
            let mut s = SmallSet::EMPTY;
            for v in ranks {
                s.insert(v);
            }
            g.to_vertex_set(&s)
        })
        .collect())
}

fn bron_kerbosch(
    g: &SmallGraph,
    r: &mut Vec<usize>,
    mut p: SmallSet,
    mut x: SmallSet,
    min_size: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if r.len() + p.len() < min_size {
        return;
    }
    let px = p.or(&x);
    let Some(pivot) = px
        .iter()
        .max_by_key(|&u| (p.and(&g.compat[u]).len(), std::cmp::Reverse(u)))
    else {
        out.push(r.clone());
        return;
    };
    for v in p.and_not(&g.compat[pivot]).iter() {
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.and(&g.compat[v]),
            x.and(&g.compat[v]),
            min_size,
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Parses `n<TAB>l<TAB>min_edges` rows keyed by `(n, l)`.
pub fn parse_min_edges_table(text: &str) -> Result<BTreeMap<(u32, u64), u64>> {
    let mut out = BTreeMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        let [n, l, v] = fields[..] else {
            return Err(bad(format!(
                "expected 3 tab-separated fields, got {line:?}"
            )));
        };
        let n = n.parse().map_err(|e| bad(format!("bad n: {e}")))?;
        let l = l.parse().map_err(|e| bad(format!("bad l: {e}")))?;
        let v = v.parse().map_err(|e| bad(format!("bad min_edges: {e}")))?;
        out.insert((n, l), v);
    }
    Ok(out)
}

pub fn format_min_edges_table(rows: &BTreeMap<(u32, u64), u64>) -> String {
    let mut s = String::from("# n\tl\tmin_edges\n");
    for ((n, l), v) in rows {
        s.push_str(&format!("{n}\t{l}\t{v}\n"));
    }
    s
}
