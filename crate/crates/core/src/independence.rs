//! Independent sets of G(n,3,1): verification, exact α_n for small n, the
//! α reference used by the bounds, and the type-1/2/3 block decomposition.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::bits::SmallSet;
use crate::error::{Error, Result};
use crate::graph::{count_edges_grouped, GraphParams, Vertex, VertexSet};
use crate::search::{Deadline, ExactResult, SearchStatus, SmallGraph};

/// Exact α_n for n = 3..=12, regenerated by the `alpha_fixture` test and
/// by `g31 oracle alpha --fixture`.
pub const ALPHA_FIXTURE: &str = include_str!("../fixtures/alpha.tsv");

pub fn is_independent(set: &VertexSet) -> bool {
    count_edges_grouped(&set.to_vec()) == 0
}

/// Exact maximum independent set by branch and bound.
///
/// A first pass finds α with a coloring-ordered clique search on the
/// complement (each color class is a clique of G, so the class count
/// bounds α). A second pass branches include-first over vertices in colex
/// order with target α, which returns the lexicographically smallest
/// maximum independent set. Running out of budget is reported in the status.
pub fn max_independent_set(params: &GraphParams, budget: Duration) -> Result<ExactResult> {
    let g = SmallGraph::new(params)?;
    let mut deadline = Deadline::new(budget);

    let mut best: Vec<usize> = Vec::new();
    let mut current = Vec::new();
    expand_max(&g, &mut current, g.all(), &mut best, &mut deadline);

    let alpha = best.len();
    let mut witness: SmallSet = SmallSet::EMPTY;
    for &v in &best {
        witness.insert(v);
    }

    let mut status = SearchStatus::Exact;
    if deadline.expired {
        status = SearchStatus::BudgetExceeded;
    } else {
        let mut chosen = SmallSet::EMPTY;
        if lex_first(&g, &mut chosen, 0, g.all(), alpha, &mut deadline) {
            witness = chosen;
        } else {
            status = SearchStatus::BudgetExceeded;
        }
    }

    Ok(ExactResult {
        value: alpha as u64,
        witness: g.to_vertex_set(&witness),
        status,
        nodes_explored: deadline.nodes,
        elapsed: deadline.elapsed(),
    })
}

/// Greedy coloring of `p` in the compatibility graph. Returns vertices
/// grouped by color class with their 1-based color.
fn color_classes(g: &SmallGraph, p: &SmallSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(p.len());
    let mut uncolored = *p;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            q.remove(v);
            q = q.and_not(&g.compat[v]);
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

fn expand_max(
    g: &SmallGraph,
    current: &mut Vec<usize>,
    mut p: SmallSet,
    best: &mut Vec<usize>,
    deadline: &mut Deadline,
) {
    if deadline.tick() {
        return;
    }
    let order = color_classes(g, &p);
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return;
        }
        current.push(v);
        let next = p.and(&g.compat[v]);
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_max(g, current, next, best, deadline);
        }
        current.pop();
        p.remove(v);
        if deadline.expired {
            return;
        }
    }
}

fn lex_first(
    g: &SmallGraph,
    chosen: &mut SmallSet,
    size: usize,
    mut p: SmallSet,
    target: usize,
    deadline: &mut Deadline,
) -> bool {
    loop {
        if size == target {
            return true;
        }
        if deadline.tick() || size + p.len() < target {
            return false;
        }
        if size + g.greedy_clique_cover(&p) < target {
            return false;
        }
        let Some(v) = p.first() else {
            return false;
        };
        chosen.insert(v);
        if lex_first(g, chosen, size + 1, p.and(&g.compat[v]), target, deadline) {
            return true;
        }
        chosen.remove(v);
        if deadline.expired {
            return false;
        }
        p.remove(v);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaMode {
    Exact,
    Asymptotic,
}

impl fmt::Display for AlphaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphaMode::Exact => "exact",
            AlphaMode::Asymptotic => "asymptotic",
        })
    }
}

/// An independence number together with where it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaValue {
    pub n: u32,
    pub value: u64,
    pub mode: AlphaMode,
}

/// Parses `n<TAB>alpha` rows; `#` lines are comments.
pub fn parse_alpha_table(text: &str) -> Result<BTreeMap<u32, u64>> {
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
        let (n, a) = line
            .split_once('\t')
            .ok_or_else(|| bad(format!("expected n<TAB>alpha, got {line:?}")))?;
        let n: u32 = n.trim().parse().map_err(|e| bad(format!("bad n: {e}")))?;
        let a: u64 = a
            .trim()
            .parse()
            .map_err(|e| bad(format!("bad alpha: {e}")))?;
        out.insert(n, a);
    }
    Ok(out)
}

pub fn format_alpha_table(rows: &BTreeMap<u32, u64>) -> String {
    let mut s = String::from("# n\talpha\n");
    for (n, a) in rows {
        s.push_str(&format!("{n}\t{a}\n"));
    }
    s
}

/// Cached exact α_n, if known.
pub fn exact_alpha(n: u32) -> Option<u64> {
    parse_alpha_table(ALPHA_FIXTURE)
        .expect("bundled alpha fixture parses")
        .get(&n)
        .copied()
}

/// α_n as used downstream: the cached exact value, or the asymptotic proxy
/// α_n ≈ n.
pub fn alpha_reference(n: u32, mode: AlphaMode) -> Result<AlphaValue> {
    let value = match mode {
        AlphaMode::Exact => exact_alpha(n).ok_or(Error::MissingExactAlpha(n))?,
        AlphaMode::Asymptotic => n as u64,
    };
    Ok(AlphaValue { n, value, mode })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BlockKind {
    /// At least 3 vertices through the common pair.
    Type1 { pair: [u32; 2] },
    /// At least 2 vertices inside the 4-element envelope.
    Type2 { envelope: [u32; 4] },
    /// Pairwise disjoint vertices.
    Type3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    #[serde(flatten)]
    pub kind: BlockKind,
    /// Colex order.
    pub vertices: Vec<Vertex>,
    pub support: BTreeSet<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n: u32,
    pub blocks: Vec<Block>,
}

impl Decomposition {
    /// Checks each block and the disjointness of supports, then that
    /// the blocks partition `original`.
    pub fn verify(&self, original: &VertexSet) -> Result<()> {
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        let mut seen = BTreeSet::new();
        let mut support_owner: HashMap<u32, usize> = HashMap::new();
        for (bi, block) in self.blocks.iter().enumerate() {
            let support: BTreeSet<u32> = block.vertices.iter().flat_map(|v| v.elems()).collect();
            if support != block.support {
                return fail(format!(
                    "block {bi}: stored support differs from its vertices"
                ));
            }
            match &block.kind {
                BlockKind::Type1 { pair } => {
                    if block.vertices.len() < 3 {
                        return fail(format!(
                            "block {bi}: type-1 block with fewer than 3 vertices"
                        ));
                    }
                    if !block
                        .vertices
                        .iter()
                        .all(|v| v.contains(pair[0]) && v.contains(pair[1]))
                    {
                        return fail(format!("block {bi}: vertex missing the pair {pair:?}"));
                    }
                }
                BlockKind::Type2 { envelope } => {
                    if block.vertices.len() < 2 {
                        return fail(format!(
                            "block {bi}: type-2 block with fewer than 2 vertices"
                        ));
                    }
                    if !block
                        .vertices
                        .iter()
                        .all(|v| v.elems().iter().all(|e| envelope.contains(e)))
                    {
                        return fail(format!("block {bi}: vertex outside envelope {envelope:?}"));
                    }
                }
                BlockKind::Type3 => {
                    for (i, u) in block.vertices.iter().enumerate() {
                        if block.vertices[i + 1..]
                            .iter()
                            .any(|w| u.intersection_size(w) != 0)
                        {
                            return fail(format!(
                                "block {bi}: type-3 vertices not pairwise disjoint"
                            ));
                        }
                    }
                }
            }
            for &e in &block.support {
                if let Some(other) = support_owner.insert(e, bi) {
                    return fail(format!(
                        "supports of blocks {other} and {bi} share element {e}"
                    ));
                }
            }
            for v in &block.vertices {
                if !original.contains(v) {
                    return fail(format!("block {bi}: vertex {v} is not in the input set"));
                }
                if !seen.insert(*v) {
                    return fail(format!("vertex {v} appears in two blocks"));
                }
            }
        }
        if seen.len() as u64 != original.len() {
            return fail(format!(
                "blocks cover {} of {} vertices",
                seen.len(),
                original.len()
            ));
        }
        Ok(())
    }
}

/// Splits an independent set into type-1, type-2 and type-3 blocks with
/// pairwise disjoint supports.
///
/// In an independent set any two vertices meet in 0 or 2 elements. Vertices
/// are joined when they share a pair; each joined component either lies on
/// one common pair (type 1 when it has at least 3 vertices) or inside one
/// 4-set (type 2). Components of one vertex are collected into a single
/// type-3 block. Different components meet in no element, so supports are
/// disjoint. A component matching neither shape is returned as
/// [`Error::DecompositionFailed`].
pub fn decompose_independent(set: &VertexSet) -> Result<Decomposition> {
    if !is_independent(set) {
        return Err(Error::NotIndependent);
    }
    let vertices = set.to_vec();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }

    let mut by_pair: HashMap<(u32, u32), usize> = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        for p in v.pairs() {
            if let Some(&j) = by_pair.get(&p) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            } else {
                by_pair.insert(p, i);
            }
        }
    }

    // component roots are their smallest member, so BTreeMap keeps colex order
    let mut components: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        let root = find(&mut parent, i);
        components.entry(root).or_default().push(*v);
    }

    let mut blocks = Vec::new();
    let mut singles = Vec::new();
    for (_, comp) in components {
        if comp.len() == 1 {
            singles.push(comp[0]);
            continue;
        }
        let support: BTreeSet<u32> = comp.iter().flat_map(|v| v.elems()).collect();
        let common: Vec<u32> = comp[0]
            .elems()
            .into_iter()
            .filter(|e| comp.iter().all(|v| v.contains(*e)))
            .collect();
        let kind = if comp.len() >= 3 && common.len() == 2 {
            BlockKind::Type1 {
                pair: [common[0], common[1]],
            }
        } else if support.len() == 4 {
            let e: Vec<u32> = support.iter().copied().collect();
            BlockKind::Type2 {
                envelope: [e[0], e[1], e[2], e[3]],
            }
        } else {
            return Err(Error::DecompositionFailed { vertices: comp });
        };
        blocks.push(Block {
            kind,
            vertices: comp,
            support,
        });
    }
    if !singles.is_empty() {
        let support = singles.iter().flat_map(|v| v.elems()).collect();
        blocks.push(Block {
            kind: BlockKind::Type3,
            vertices: singles,
            support,
        });
    }

    let decomposition = Decomposition { n: set.n(), blocks };
    decomposition.verify(set)?;
    Ok(decomposition)
}
