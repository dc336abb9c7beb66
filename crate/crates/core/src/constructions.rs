//! Explicit sparse vertex sets for the three growth ranges of `l`.
//!
//! Each builder derives integer parameters from `(n, l)` or `(n, c)` and
//! gives the set size and induced edge count in closed form. Sets small
//! enough to materialize are also built and counted directly; a mismatch
//! is returned as [`Error::InvariantViolation`].
//!
//! * regime 1 (`n ≪ l ≪ n²`): disjoint pairs `{p_j, q_j}` above a prefix
//!   `{1..x}`, every prefix element joined with every pair.
//! * regime 2 (`l = Θ(n²)`): a star `{1,2,i}` plus pairs hung on each `i`.
//! * regime 3 (`n² ≪ l ≪ n³`): blocks `A1 × P_i` for pairwise disjoint
//!   perfect matchings `P_i` of the complement `A2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{count_edges_grouped, count_edges_pairwise, Vertex, VertexSet};

pub const DEFAULT_MAX_MATERIALIZE: u64 = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Build the set and count its edges directly when within limits.
    pub materialize: bool,
    /// Largest set (in vertices) that will be materialized.
    pub max_materialize: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            materialize: true,
            max_materialize: DEFAULT_MAX_MATERIALIZE,
        }
    }
}

impl BuildOptions {
    pub fn formula_only() -> Self {
        BuildOptions {
            materialize: false,
            ..Default::default()
        }
    }

    fn should_materialize(&self, n: u32, size: u64) -> bool {
        self.materialize && size <= self.max_materialize && VertexSet::can_materialize(n)
    }
}

fn undefined(msg: String) -> Error {
    Error::ConstructionUndefined(msg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct C1Params {
    /// ⌊n²/l⌋
    pub a: u64,
    /// ⌊ln a⌋
    pub b: u64,
    /// n − ⌊n/b⌋, the size of the prefix `{1..x}`
    pub x: u64,
    /// ⌊2l/x⌋
    pub y: u64,
    /// ⌊y/2⌋, the number of pairs above the prefix
    pub pairs: u64,
}

impl C1Params {
    pub fn derive(n: u32, l: u64) -> Result<Self> {
        if l == 0 {
            return Err(undefined("regime 1 needs l >= 1".into()));
        }
        let n64 = n as u64;
        let a = ((n64 as u128 * n64 as u128) / l as u128) as u64;
        if a == 0 {
            return Err(undefined(format!("a = ⌊n²/l⌋ = 0 for n = {n}, l = {l}")));
        }
        let b = (a as f64).ln().floor() as u64;
        if b == 0 {
            return Err(undefined(format!("b = ⌊ln {a}⌋ = 0")));
        }
        let x = n64 - n64 / b;
        if x == 0 {
            return Err(undefined(format!("x = n − ⌊n/b⌋ = 0 (b = {b})")));
        }
        let y = 2 * l / x;
        let pairs = y / 2;
        if x + 2 * pairs > n64 {
            return Err(undefined(format!(
                "x + 2⌊y/2⌋ = {} exceeds n = {n}",
                x + 2 * pairs
            )));
        }
        Ok(C1Params { a, b, x, y, pairs })
    }

    pub fn size(&self) -> u64 {
        self.x * self.pairs
    }

    /// ⌊y/2⌋·x·(⌊y/2⌋ − 1)/2: each prefix element carries a clique on its
    /// ⌊y/2⌋ vertices, and there are no other edges.
    pub fn edges(&self) -> u128 {
        let h = self.pairs as u128;
        h * self.x as u128 * h.saturating_sub(1) / 2
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let x = self.x as u32;
        let mut out = Vec::with_capacity(self.size() as usize);
        for i in 1..=x {
            for j in 1..=self.pairs as u32 {
                out.push(Vertex::new(i, x + 2 * j - 1, x + 2 * j).expect("distinct labels"));
            }
        }
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct C2Params {
    pub c: f64,
    /// ⌊n/4⌋
    pub k: u64,
    /// ⌊c·k⌋, the star spans `{1,2,i}` for i = 3..=m
    pub m: u64,
    /// ⌊(n − m)/2⌋, pairs above m
    pub j: u64,
}

/// 4 − 1/ln n.
pub fn default_c2_parameter(n: u32) -> f64 {
    4.0 - 1.0 / (n as f64).ln()
}

impl C2Params {
    pub fn derive(n: u32, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0 && c < 4.0) {
            return Err(undefined(format!("c must lie in (0, 4), got {c}")));
        }
        let n64 = n as u64;
        let k = n64 / 4;
        let m = (c * k as f64).floor() as u64;
        if m < 3 {
            return Err(undefined(format!(
                "m = ⌊c·k⌋ = {m} < 3 leaves the star empty"
            )));
        }
        if m > n64 {
            return Err(undefined(format!("m = {m} exceeds n = {n}")));
        }
        let j = (n64 - m) / 2;
        Ok(C2Params { c, k, m, j })
    }

    pub fn size(&self) -> u64 {
        (self.m - 2) * (1 + self.j)
    }

    /// (m−2)·j + (m−2)·j·(j−1)/2: every hung vertex meets exactly one star
    /// vertex, and vertices hung on the same `i` form a clique.
    pub fn edges(&self) -> u128 {
        let s = (self.m - 2) as u128;
        let j = self.j as u128;
        s * j + s * j * j.saturating_sub(1) / 2
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let m = self.m as u32;
        let mut out = Vec::with_capacity(self.size() as usize);
        for i in 3..=m {
            out.push(Vertex::new(1, 2, i).expect("distinct labels"));
            for j in 1..=self.j as u32 {
                out.push(Vertex::new(i, m + 2 * j - 1, m + 2 * j).expect("distinct labels"));
            }
        }
        out.sort_unstable();
        out
    }
}

/// The root c = 2 + √(4 − 2l/k²) of c(4−c)k²/2 = l closest to 4.
pub fn solve_c2_parameter(n: u32, l: u64) -> Result<f64> {
    let k = (n / 4) as f64;
    if k == 0.0 {
        return Err(Error::UnreachableCardinality {
            l,
            reason: format!("k = ⌊n/4⌋ = 0 for n = {n}"),
        });
    }
    let disc = 4.0 - 2.0 * l as f64 / (k * k);
    if disc < 0.0 {
        return Err(Error::UnreachableCardinality {
            l,
            reason: format!("l exceeds 2k² = {}", 2.0 * k * k),
        });
    }
    Ok(2.0 + disc.sqrt())
}

/// `t` pairwise disjoint perfect matchings of the complete graph on
/// `{1..m}` by the circle method: `m` stays fixed while `{1..m-1}` rotates.
///
/// Round `r` pairs `m` with `p = m−1−r` and `p ± i` (mod m−1) for
/// i = 1..m/2−1. Pairs are `(low, high)` and each matching is sorted.
pub fn one_factorization(m: u32, t: u32) -> Result<Vec<Vec<(u32, u32)>>> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "m must be positive and even, got {m}"
        )));
    }
    if t > m - 1 {
        return Err(Error::InvalidParameter(format!(
            "K_{m} has only {} disjoint perfect matchings, asked for {t}",
            m - 1
        )));
    }
    let ring = m - 1;
    let label = |x: u32| x + 1;
    let mut out = Vec::with_capacity(t as usize);
    for r in 0..t {
        let p = (ring - 1 + ring - r % ring) % ring;
        let mut matching = vec![(label(p), m)];
        for i in 1..m / 2 {
            let u = (p + i) % ring;
            let v = (p + ring - i % ring) % ring;
            matching.push((label(u.min(v)), label(u.max(v))));
        }
        matching.sort_unstable();
        out.push(matching);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C3Params {
    /// |A1|; A1 = {1..a}
    pub a: u64,
    /// |A2| (even); A2 = {a+1..n}
    pub a2: u64,
    /// Block size |A1|·|A2|/2
    pub block_size: u64,
    /// Number of full blocks
    pub k: u64,
    /// Vertices taken from block k+1
    pub remainder: u64,
    /// Neighbors a vertex has in another full block:
    /// (|A2|/2 − 2) + 2(|A1| − 1)
    pub cross_degree: u64,
}

impl C3Params {
    pub fn derive(n: u32, l: u64) -> Result<Self> {
        let n64 = n as u64;
        let quarter = n64 / 4;
        // A1 = {1..2q + (n mod 4)}, leaving |A2| = 2⌊n/4⌋
        let a2 = 2 * quarter;
        let a = n64 - a2;
        if a2 < 2 {
            return Err(undefined(format!("|A2| = {a2} has no perfect matching")));
        }
        let block_size = a * a2 / 2;
        let k = l / block_size;
        let remainder = l - k * block_size;
        if k + 1 > a2 - 1 {
            return Err(undefined(format!(
                "needs k + 1 = {} disjoint matchings of A2, only {} exist",
                k + 1,
                a2 - 1
            )));
        }
        let half = a2 / 2;
        let cross_degree = if half >= 2 { half - 2 + 2 * (a - 1) } else { 0 };
        Ok(C3Params {
            a,
            a2,
            block_size,
            k,
            remainder,
            cross_degree,
        })
    }

    pub fn size(&self) -> u64 {
        self.k * self.block_size + self.remainder
    }

    /// Closed-form edge tallies for the blocks and the partial block U,
    /// where U is the first `remainder` vertices of block k+1 in colex order.
    pub fn pieces(&self) -> C3Tally {
        let k = self.k as u128;
        let w = self.block_size as u128;
        let half = (self.a2 / 2) as u128;
        let cd = self.cross_degree as u128;
        let r = self.remainder as u128;
        let a = self.a as u128;
        // colex order runs pair by pair, A1 element fastest
        let (q, extra) = (r / a, r % a);
        let choose2 = |t: u128| t * t.saturating_sub(1) / 2;
        C3Tally {
            within_blocks: k * w * (half - 1) / 2,
            cross_blocks: choose2(k) * w * cd,
            remainder_internal: extra * choose2(q + 1) + (a - extra) * choose2(q),
            remainder_to_blocks: r * k * cd,
        }
    }

    /// The full blocks followed by U, as two colex-sorted lists.
    pub fn blocks(&self) -> Result<(Vec<Vec<Vertex>>, Vec<Vertex>)> {
        let a = self.a as u32;
        let matchings = one_factorization(self.a2 as u32, self.k as u32 + 1)?;
        let mut blocks: Vec<Vec<Vertex>> = matchings
            .iter()
            .map(|matching| {
                let mut block: Vec<Vertex> = matching
                    .iter()
                    .flat_map(|&(y, z)| {
                        (1..=a).map(move |x| Vertex::new(x, a + y, a + z).expect("distinct labels"))
                    })
                    .collect();
                block.sort_unstable();
                block
            })
            .collect();
        let mut last = blocks.pop().expect("k + 1 >= 1 matchings");
        last.truncate(self.remainder as usize);
        Ok((blocks, last))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct C3Tally {
    pub within_blocks: u128,
    pub cross_blocks: u128,
    pub remainder_internal: u128,
    pub remainder_to_blocks: u128,
}

impl C3Tally {
    pub fn total(&self) -> u128 {
        self.within_blocks + self.cross_blocks + self.remainder_internal + self.remainder_to_blocks
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ConstructionParams {
    C1(C1Params),
    C2(C2Params),
    C3(C3Params),
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub regime: u8,
    pub n: u32,
    /// Requested cardinality (for regime 2 built from `c`, the set size).
    pub l: u64,
    pub params: ConstructionParams,
    #[serde(skip)]
    pub set: Option<VertexSet>,
    pub size_predicted: u64,
    pub size_actual: Option<u64>,
    pub edges_predicted: u128,
    pub edges_actual: Option<u128>,
    /// Regime 3 only.
    pub pieces_predicted: Option<C3Tally>,
    pub pieces_actual: Option<C3Tally>,
    /// Asymptotic edge target for the regime with α_n ≈ n.
    pub target: f64,
    /// edges_predicted / target
    pub target_ratio: Option<f64>,
}

impl ConstructionReport {
    fn new(regime: u8, n: u32, l: u64, params: ConstructionParams, size: u64, edges: u128) -> Self {
        let nf = n as f64;
        let lf = l as f64;
        let target = match regime {
            3 => 5.0 * lf * lf / nf,
            _ => lf * lf / (2.0 * nf),
        };
        ConstructionReport {
            regime,
            n,
            l,
            params,
            set: None,
            size_predicted: size,
            size_actual: None,
            edges_predicted: edges,
            edges_actual: None,
            pieces_predicted: None,
            pieces_actual: None,
            target,
            target_ratio: (target > 0.0).then(|| edges as f64 / target),
        }
    }

    fn attach(&mut self, vertices: Vec<Vertex>) -> Result<()> {
        self.edges_actual = Some(count_edges_grouped(&vertices));
        let set = VertexSet::from_vertices(self.n, vertices)?;
        self.size_actual = Some(set.len());
        self.set = Some(set);
        self.check()
    }

    pub fn is_materialized(&self) -> bool {
        self.set.is_some()
    }

    /// Fails when a direct count disagrees with its closed form.
    pub fn check(&self) -> Result<()> {
        if let Some(size) = self.size_actual {
            if size != self.size_predicted {
                return Err(Error::InvariantViolation(format!(
                    "regime {} (n = {}, l = {}): size {size} != predicted {}",
                    self.regime, self.n, self.l, self.size_predicted
                )));
            }
        }
        if let Some(edges) = self.edges_actual {
            if edges != self.edges_predicted {
                return Err(Error::InvariantViolation(format!(
                    "regime {} (n = {}, l = {}): edges {edges} != predicted {}",
                    self.regime, self.n, self.l, self.edges_predicted
                )));
            }
        }
        if let (Some(p), Some(a)) = (self.pieces_predicted, self.pieces_actual) {
            if p != a {
                return Err(Error::InvariantViolation(format!(
                    "regime 3 (n = {}, l = {}): piece tallies {a:?} != predicted {p:?}",
                    self.n, self.l
                )));
            }
        }
        Ok(())
    }

    /// Recounts the materialized set through the pairwise reference path.
    pub fn verify_pairwise(&self) -> Result<()> {
        let Some(set) = &self.set else {
            return Ok(());
        };
        let edges = count_edges_pairwise(&set.to_vec());
        if edges != self.edges_predicted {
            return Err(Error::InvariantViolation(format!(
                "regime {} (n = {}, l = {}): pairwise count {edges} != predicted {}",
                self.regime, self.n, self.l, self.edges_predicted
            )));
        }
        Ok(())
    }
}

pub fn build_c1(n: u32, l: u64, opts: BuildOptions) -> Result<ConstructionReport> {
    let p = C1Params::derive(n, l)?;
    let mut report =
        ConstructionReport::new(1, n, l, ConstructionParams::C1(p), p.size(), p.edges());
    if opts.should_materialize(n, p.size()) {
        report.attach(p.vertices())?;
    }
    Ok(report)
}

/// Regime 2 with an explicit `c`; the report's `l` is the set size.
pub fn build_c2(n: u32, c: f64, opts: BuildOptions) -> Result<ConstructionReport> {
    let p = C2Params::derive(n, c)?;
    build_c2_with(n, p.size(), p, opts)
}

/// Regime 2 aimed at cardinality `l`, with `c` from [`solve_c2_parameter`].
pub fn build_c2_for(n: u32, l: u64, opts: BuildOptions) -> Result<ConstructionReport> {
    let c = solve_c2_parameter(n, l)?;
    let p = C2Params::derive(n, c)?;
    build_c2_with(n, l, p, opts)
}

fn build_c2_with(n: u32, l: u64, p: C2Params, opts: BuildOptions) -> Result<ConstructionReport> {
    let mut report =
        ConstructionReport::new(2, n, l, ConstructionParams::C2(p), p.size(), p.edges());
    if opts.should_materialize(n, p.size()) {
        report.attach(p.vertices())?;
    }
    Ok(report)
}

pub fn build_c3(n: u32, l: u64, opts: BuildOptions) -> Result<ConstructionReport> {
    let p = C3Params::derive(n, l)?;
    let tally = p.pieces();
    let mut report = ConstructionReport::new(
        3,
        n,
        l,
        ConstructionParams::C3(p.clone()),
        p.size(),
        tally.total(),
    );
    report.pieces_predicted = Some(tally);
    if opts.should_materialize(n, p.size()) {
        let (blocks, rest) = p.blocks()?;
        let within: u128 = blocks.iter().map(|b| count_edges_grouped(b)).sum();
        let mut all: Vec<Vertex> = blocks.into_iter().flatten().collect();
        let full = count_edges_grouped(&all);
        let remainder_internal = count_edges_grouped(&rest);
        all.extend(rest);
        let total = count_edges_grouped(&all);
        report.pieces_actual = Some(C3Tally {
            within_blocks: within,
            cross_blocks: full - within,
            remainder_internal,
            remainder_to_blocks: total - full - remainder_internal,
        });
        all.sort_unstable();
        report.attach(all)?;
    }
    Ok(report)
}
