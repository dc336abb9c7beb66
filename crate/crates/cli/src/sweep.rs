//! Cardinality schedules and rows for `g31 sweep`.

use std::str::FromStr;

use g31_core::bounds::{asymptotic_targets, regime4_lb, turan_lb};
use g31_core::constructions::{build_c1, build_c2, build_c2_for, build_c3, default_c2_parameter};
use g31_core::graph::binom;
use g31_core::{make_params, AlphaValue, BuildOptions, Error, Result};

/// `l(n) = ⌊coef · n^(half_exp/2)⌋`, evaluated in integers.
///
/// Accepted forms: `n^p` and `<coef>*n^p` where `p` is a multiple of 1/2
/// and `coef` a plain decimal, e.g. `n^1.5`, `0.25*n^2`, `0.01*n^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LExpr {
    num: u128,
    den: u128,
    half_exp: u32,
}

fn parse_decimal(s: &str) -> Option<(u128, u128)> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 18 {
        return None;
    }
    let digits: u128 = format!("{int}{frac}").parse().ok()?;
    Some((digits, 10u128.pow(frac.len() as u32)))
}

impl FromStr for LExpr {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("unrecognized l-expression {s:?}; expected n^p or c*n^p");
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (coef, power) = match compact.split_once('*') {
            Some((c, p)) => (c, p),
            None => ("1", compact.as_str()),
        };
        let exp = power.strip_prefix("n^").ok_or_else(bad)?;
        let (num, den) = parse_decimal(coef).ok_or_else(bad)?;
        let (e_num, e_den) = parse_decimal(exp).ok_or_else(bad)?;
        if (2 * e_num) % e_den != 0 {
            return Err(format!("exponent in {s:?} must be a multiple of 0.5"));
        }
        let half_exp = u32::try_from(2 * e_num / e_den).map_err(|_| bad())?;
        if num == 0 {
            return Err(format!("coefficient in {s:?} must be positive"));
        }
        Ok(LExpr { num, den, half_exp })
    }
}

impl LExpr {
    pub fn eval(&self, n: u32) -> Result<u64> {
        let overflow = || Error::InvalidParameter(format!("l-expression overflows at n = {n}"));
        let n = n as u128;
        let power = |e: u32| n.checked_pow(e).ok_or_else(overflow);
        let l = if self.half_exp.is_multiple_of(2) {
            self.num
                .checked_mul(power(self.half_exp / 2)?)
                .ok_or_else(overflow)?
                / self.den
        } else {
            // ⌊√(num²·n^e)⌋ / den = ⌊num·n^(e/2) / den⌋
            let radicand = self
                .num
                .checked_mul(self.num)
                .and_then(|sq| sq.checked_mul(power(self.half_exp).ok()?))
                .ok_or_else(overflow)?;
            radicand.isqrt() / self.den
        };
        u64::try_from(l).map_err(|_| overflow())
    }
}

/// Parses `START:STOP:FACTOR` into the geometric schedule of n values.
pub fn geometric(schedule: &str) -> std::result::Result<Vec<u32>, String> {
    let parts: Vec<&str> = schedule.split(':').collect();
    let [start, stop, factor] = parts[..] else {
        return Err(format!("expected START:STOP:FACTOR, got {schedule:?}"));
    };
    let start: u32 = start.parse().map_err(|e| format!("bad start: {e}"))?;
    let stop: u32 = stop.parse().map_err(|e| format!("bad stop: {e}"))?;
    let factor: f64 = factor.parse().map_err(|e| format!("bad factor: {e}"))?;
    if start == 0 || factor.is_nan() || factor <= 1.0 {
        return Err("need start >= 1 and factor > 1".into());
    }
    let mut out = Vec::new();
    let mut x = start as f64;
    while x.round() <= stop as f64 {
        let n = x.round() as u32;
        if out.last() != Some(&n) {
            out.push(n);
        }
        x *= factor;
    }
    Ok(out)
}

pub const HEADER: &str =
    "n,l,regime,size_actual,edges_formula,edges_actual,lb_turan,lb_regime4,target,ratio";

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: u32,
    pub l: u64,
    pub regime: u8,
    pub size_actual: Option<u64>,
    pub edges_formula: Option<u128>,
    pub edges_actual: Option<u128>,
    pub lb_turan: Option<u128>,
    pub lb_regime4: Option<u128>,
    pub target: f64,
    pub ratio: Option<f64>,
}

fn cell<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        use crate::output::csv_float;
        [
            self.n.to_string(),
            self.l.to_string(),
            self.regime.to_string(),
            cell(self.size_actual),
            cell(self.edges_formula),
            cell(self.edges_actual),
            cell(self.lb_turan),
            cell(self.lb_regime4),
            csv_float(self.target),
            self.ratio.map(csv_float).unwrap_or_default(),
        ]
        .join(",")
    }
}

pub struct SweepPoint {
    pub regime: u8,
    pub n: u32,
    pub l: Option<u64>,
    pub c: Option<f64>,
}

/// One row; a construction that is undefined at this point leaves its
/// columns empty and is reported through `warn`.
pub fn row(
    point: &SweepPoint,
    alpha: AlphaValue,
    opts: BuildOptions,
    warn: &mut dyn FnMut(String),
) -> Result<SweepRow> {
    let SweepPoint { regime, n, l, c } = *point;
    let built = match (regime, l) {
        (1, Some(l)) => Some(build_c1(n, l, opts)),
        (2, _) if c.is_some() || l.is_none() => Some(build_c2(
            n,
            c.unwrap_or_else(|| default_c2_parameter(n)),
            opts,
        )),
        (2, Some(l)) => Some(build_c2_for(n, l, opts)),
        (3, Some(l)) => Some(build_c3(n, l, opts)),
        (4, Some(_)) => None,
        (1..=4, None) => {
            return Err(Error::InvalidParameter(format!(
                "regime {regime} sweep needs --l-expr"
            )))
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "regime must be 1..=4, got {regime}"
            )))
        }
    };
    let report = match built {
        Some(Ok(r)) => Some(r),
        Some(Err(e @ (Error::ConstructionUndefined(_) | Error::UnreachableCardinality { .. }))) => {
            warn(format!("n = {n}: {e}"));
            None
        }
        Some(Err(e)) => return Err(e),
        None => None,
    };
    let l = report
        .as_ref()
        .map_or_else(|| l.expect("checked above"), |r| r.l);
    let params = make_params(n)?;
    let in_range = l as u128 <= params.vertex_count;
    if !in_range {
        warn(format!(
            "n = {n}: l = {l} exceeds C(n,3) = {}",
            binom(n as u128, 3)
        ));
    }
    let target = if in_range {
        let t = asymptotic_targets(n, l)?;
        match regime {
            3 => t.regime3_upper,
            4 => t.regime4,
            _ => t.half_turan,
        }
    } else {
        f64::NAN
    };
    let edges_formula = report.as_ref().map(|r| r.edges_predicted);
    Ok(SweepRow {
        n,
        l,
        regime,
        size_actual: report
            .as_ref()
            .map(|r| r.size_actual.unwrap_or(r.size_predicted)),
        edges_formula,
        edges_actual: report.as_ref().and_then(|r| r.edges_actual),
        lb_turan: in_range.then(|| turan_lb(l as u128, alpha.value as u128)),
        lb_regime4: if in_range {
            Some(regime4_lb(&params, l, alpha)?.lower_bound)
        } else {
            None
        },
        target,
        ratio: edges_formula
            .filter(|_| target > 0.0)
            .map(|e| e as f64 / target),
    })
}
