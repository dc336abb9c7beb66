//! Lower bounds and asymptotic targets for r(l).
//!
//! Every integer bound is rounded up and clamped at zero. A bound is only
//! labeled rigorous when the α it consumed is an exact independence number
//! (or it does not depend on α at all).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{binom, GraphParams};
use crate::independence::{AlphaMode, AlphaValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rigor {
    Rigorous,
    AsymptoticOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    /// m²/(2α) − m/2, for l between n and Θ(n²).
    Turan,
    /// l²/α, for n² ≪ l ≪ n³.
    Regime3,
    /// |E_n| − d_n·|V∖W| + Turán(|V∖W|), for l = Θ(n³).
    Regime4Chain,
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaId::Turan => "turan",
            FormulaId::Regime3 => "regime3",
            FormulaId::Regime4Chain => "regime4-chain",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: u32,
    pub l: u64,
    pub alpha_used: u64,
    pub alpha_mode: AlphaMode,
    pub lower_bound: u128,
    pub formula_id: FormulaId,
    pub asymptotic_target: f64,
    pub rigor: Rigor,
}

fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

/// Fewest edges any `m` vertices can span in a graph whose independence
/// number is at most `alpha`: ⌈m(m − α)/(2α)⌉, or 0 when m ≤ α.
///
/// Complement form of Turán's theorem: the extremal configuration is α
/// disjoint near-equal cliques, whose edge count is at least m²/(2α) − m/2.
pub fn turan_lb(m: u128, alpha: u128) -> u128 {
    assert!(alpha >= 1, "alpha must be positive");
    if m <= alpha {
        return 0;
    }
    ceil_div(m * (m - alpha), 2 * alpha)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Regime3Bounds {
    /// ⌈l²/α⌉; holds only asymptotically.
    pub lower: u128,
    /// 5·l²/α, the growth of the block construction.
    pub upper_target: f64,
    pub rigor: Rigor,
}

pub fn regime3_bounds(l: u64, alpha: u64) -> Regime3Bounds {
    assert!(alpha >= 1, "alpha must be positive");
    let l = l as u128;
    let a = alpha as u128;
    Regime3Bounds {
        lower: ceil_div(l * l, a),
        upper_target: 5.0 * (l as f64) * (l as f64) / alpha as f64,
        rigor: Rigor::AsymptoticOnly,
    }
}

/// Lower bound for r(l) from the complement: every edge missing from W
/// touches a removed vertex, so |E(W)| = |E_n| − d_n·|R| + |E(R)| for the
/// removed set R, and |E(R)| is at least the Turán bound.
pub fn regime4_lb(params: &GraphParams, l: u64, alpha: AlphaValue) -> Result<BoundReport> {
    if l as u128 > params.vertex_count {
        return Err(Error::InvalidParameter(format!(
            "l = {l} exceeds |V_n| = {}",
            params.vertex_count
        )));
    }
    if alpha.value == 0 {
        return Err(Error::InvalidParameter("alpha must be positive".into()));
    }
    let removed = params.vertex_count - l as u128;
    let kept = params.total_edges + turan_lb(removed, alpha.value as u128);
    let lost = params.degree * removed;
    let lower_bound = kept.saturating_sub(lost);
    Ok(BoundReport {
        n: params.n,
        l,
        alpha_used: alpha.value,
        alpha_mode: alpha.mode,
        lower_bound,
        formula_id: FormulaId::Regime4Chain,
        asymptotic_target: asymptotic_targets(params.n, l)?.regime4,
        rigor: rigor_for(alpha.mode),
    })
}

/// Real-valued growth targets used for ratio reporting, with α_n ≈ n.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticTargets {
    /// c = 1 − l/C(n,3)
    pub c: f64,
    /// l²/(2n)
    pub half_turan: f64,
    /// l²/n
    pub regime3: f64,
    /// 5·l²/n
    pub regime3_upper: f64,
    /// n⁵·(1/8 − c/4 + c²/72), clamped at 0
    pub regime4: f64,
}

/// 1/8 − c/4 + c²/72; strictly decreasing on [0, 1].
pub fn regime4_polynomial(c: f64) -> f64 {
    1.0 / 8.0 - c / 4.0 + c * c / 72.0
}

pub fn asymptotic_targets(n: u32, l: u64) -> Result<AsymptoticTargets> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 3, got {n}"
        )));
    }
    let total = binom(n as u128, 3);
    if l as u128 > total {
        return Err(Error::InvalidParameter(format!(
            "l = {l} exceeds C({n},3) = {total}"
        )));
    }
    let nf = n as f64;
    let lf = l as f64;
    let c = 1.0 - lf / total as f64;
    let sq = lf * lf;
    Ok(AsymptoticTargets {
        c,
        half_turan: sq / (2.0 * nf),
        regime3: sq / nf,
        regime3_upper: 5.0 * sq / nf,
        regime4: (nf.powi(5) * regime4_polynomial(c)).max(0.0),
    })
}

fn rigor_for(mode: AlphaMode) -> Rigor {
    match mode {
        AlphaMode::Exact => Rigor::Rigorous,
        AlphaMode::Asymptotic => Rigor::AsymptoticOnly,
    }
}

/// The bound belonging to a growth regime (1..=4) as one report.
///
/// Regimes 1 and 2 use the Turán bound with target l²/(2α); regime 3 the
/// l²/α bound with target 5l²/α; regime 4 the complement chain with the
/// n⁵ polynomial as target.
pub fn bound_for_regime(
    params: &GraphParams,
    l: u64,
    regime: u8,
    alpha: AlphaValue,
) -> Result<BoundReport> {
    if l as u128 > params.vertex_count {
        return Err(Error::InvalidParameter(format!(
            "l = {l} exceeds |V_n| = {}",
            params.vertex_count
        )));
    }
    if alpha.value == 0 {
        return Err(Error::InvalidParameter("alpha must be positive".into()));
    }
    let a = alpha.value as f64;
    let lf = l as f64;
    let report = |lower_bound, formula_id, asymptotic_target, rigor| BoundReport {
        n: params.n,
        l,
        alpha_used: alpha.value,
        alpha_mode: alpha.mode,
        lower_bound,
        formula_id,
        asymptotic_target,
        rigor,
    };
    match regime {
        1 | 2 => Ok(report(
            turan_lb(l as u128, alpha.value as u128),
            FormulaId::Turan,
            lf * lf / (2.0 * a),
            rigor_for(alpha.mode),
        )),
        3 => {
            let b = regime3_bounds(l, alpha.value);
            Ok(report(b.lower, FormulaId::Regime3, b.upper_target, b.rigor))
        }
        4 => regime4_lb(params, l, alpha),
        other => Err(Error::InvalidParameter(format!(
            "regime must be 1..=4, got {other}"
        ))),
    }
}
