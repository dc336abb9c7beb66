//! Colexicographic ranking of 3-subsets.
//!
//! rank({e1<e2<e3}) = C(e3-1,3) + C(e2-1,2) + C(e1-1,1)

use crate::error::{Error, Result};
use crate::graph::params::binom;
use crate::graph::vertex::Vertex;

#[inline]
fn c3(t: u64) -> u64 {
    if t < 3 {
        0
    } else {
        ((t as u128 * (t as u128 - 1) * (t as u128 - 2)) / 6) as u64
    }
}

#[inline]
fn c2(t: u64) -> u64 {
    if t < 2 {
        0
    } else {
        t * (t - 1) / 2
    }
}

/// Number of vertices C(n,3) as `u64`; errors if it does not fit.
pub fn vertex_count_u64(n: u32) -> Result<u64> {
    u64::try_from(binom(n as u128, 3))
        .map_err(|_| Error::InvalidParameter(format!("C({n},3) exceeds the rank range")))
}

/// Rank without validation against an ambient n.
#[inline]
pub(crate) fn rank_unchecked(v: &Vertex) -> u64 {
    let [a, b, c] = v.elems();
    c3(c as u64 - 1) + c2(b as u64 - 1) + (a as u64 - 1)
}

/// Inverse of [`rank_unchecked`] for any rank representable in `u64`.
pub(crate) fn unrank_unchecked(r: u64) -> Vertex {
    // largest t with C(t,3) <= r, then e3 = t + 1
    let mut t = (6.0 * r as f64).cbrt() as u64 + 2;
    while c3(t) > r {
        t -= 1;
    }
    while c3(t + 1) <= r {
        t += 1;
    }
    let r = r - c3(t);
    let mut s = ((2.0 * r as f64).sqrt() as u64) + 1;
    while c2(s) > r {
        s -= 1;
    }
    while c2(s + 1) <= r {
        s += 1;
    }
    let r = r - c2(s);
    Vertex::from_sorted(r as u32 + 1, s as u32 + 1, t as u32 + 1)
}

pub fn colex_rank(v: &Vertex, n: u32) -> Result<u64> {
    v.validate(n)?;
    Ok(rank_unchecked(v))
}

pub fn colex_unrank(r: u64, n: u32) -> Result<Vertex> {
    let count = vertex_count_u64(n)?;
    if r >= count {
        return Err(Error::RankOutOfRange { rank: r, n, count });
    }
    Ok(unrank_unchecked(r))
}

/// All vertices of G(n,3,1) in colex order.
pub fn all_vertices(n: u32) -> impl Iterator<Item = Vertex> {
    (3..=n).flat_map(move |c| {
        (2..c).flat_map(move |b| (1..b).map(move |a| Vertex::from_sorted(a, b, c)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent enumeration: lexicographic triples, then sorted into colex
    /// order by (e3, e2, e1) keys.
    fn colex_enumeration(n: u32) -> Vec<[u32; 3]> {
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    out.push([a, b, c]);
                }
            }
        }
        out.sort_by_key(|e| (e[2], e[1], e[0]));
        out
    }

    #[test]
    fn rank_examples() {
        let v = |a, b, c| Vertex::new(a, b, c).unwrap();
        assert_eq!(colex_rank(&v(1, 2, 3), 3).unwrap(), 0);
        assert_eq!(colex_rank(&v(1, 2, 4), 6).unwrap(), 1);
        assert_eq!(colex_rank(&v(4, 5, 6), 6).unwrap(), 19);
        assert!(colex_rank(&v(4, 5, 7), 6).is_err());
        assert_eq!(colex_unrank(0, 6).unwrap(), v(1, 2, 3));
        assert_eq!(colex_unrank(1, 6).unwrap(), v(1, 2, 4));
        assert_eq!(colex_unrank(19, 6).unwrap(), v(4, 5, 6));
        assert!(matches!(
            colex_unrank(20, 6),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn rank_matches_enumeration_up_to_12() {
        for n in 3..=12 {
            let expected = colex_enumeration(n);
            for (i, e) in expected.iter().enumerate() {
                let v = Vertex::new(e[0], e[1], e[2]).unwrap();
                assert_eq!(colex_rank(&v, n).unwrap(), i as u64);
                assert_eq!(colex_unrank(i as u64, n).unwrap(), v);
            }
            let all: Vec<[u32; 3]> = all_vertices(n).map(|v| v.elems()).collect();
            assert_eq!(all, expected);
        }
    }

    #[test]
    fn unrank_at_large_n() {
        let n = 1_000_000;
        let count = vertex_count_u64(n).unwrap();
        for r in [0, 1, count / 3, count / 2, count - 2, count - 1] {
            let v = colex_unrank(r, n).unwrap();
            assert_eq!(colex_rank(&v, n).unwrap(), r);
        }
        assert_eq!(
            colex_unrank(count - 1, n).unwrap().elems(),
            [n - 2, n - 1, n]
        );
    }
}
