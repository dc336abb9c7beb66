use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A 3-element subset of the ground set `{1..n}`, stored ascending.
///
/// Ordering is colexicographic: compare the largest element first. This is
/// the canonical order of every iteration in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Vertex([u32; 3]);

impl Vertex {
    /// Builds a vertex from three distinct positive labels in any order.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        let mut e = [a, b, c];
        e.sort_unstable();
        if e[0] == 0 || e[0] == e[1] || e[1] == e[2] {
            return Err(Error::InvalidVertex {
                vertex: [a, b, c],
                n: 0,
            });
        }
        Ok(Vertex(e))
    }

    /// Like [`Vertex::new`], additionally requiring every label to be at most `n`.
    pub fn checked(a: u32, b: u32, c: u32, n: u32) -> Result<Self> {
        let v = Vertex::new(a, b, c).map_err(|_| Error::InvalidVertex {
            vertex: [a, b, c],
            n,
        })?;
        v.validate(n)?;
        Ok(v)
    }

    /// Caller guarantees `a < b < c` and `a >= 1`.
    pub(crate) const fn from_sorted(a: u32, b: u32, c: u32) -> Self {
        Vertex([a, b, c])
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        if self.0[2] > n {
            return Err(Error::InvalidVertex { vertex: self.0, n });
        }
        Ok(())
    }

    pub fn elems(&self) -> [u32; 3] {
        self.0
    }

    pub fn max_elem(&self) -> u32 {
        self.0[2]
    }

    pub fn contains(&self, e: u32) -> bool {
        self.0.contains(&e)
    }

    pub fn intersection_size(&self, other: &Vertex) -> usize {
        // both sorted: merge
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j, mut k) = (0, 0, 0);
        while i < 3 && j < 3 {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    k += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        k
    }

    /// The three 2-element subsets, each ascending.
    pub fn pairs(&self) -> [(u32, u32); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0[2], self.0[1], self.0[0]).cmp(&(other.0[2], other.0[1], other.0[0]))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

/// Edge relation of G(n,3,1): the triples share exactly one element.
#[inline]
pub fn adjacent(u: &Vertex, w: &Vertex) -> bool {
    u.intersection_size(w) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: u32, b: u32, c: u32) -> Vertex {
        Vertex::new(a, b, c).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&v(1, 2, 3), &v(3, 4, 5)));
        assert!(!adjacent(&v(1, 2, 3), &v(1, 2, 4)));
        assert!(!adjacent(&v(1, 2, 3), &v(4, 5, 6)));
        assert!(!adjacent(&v(1, 2, 3), &v(1, 2, 3)));
    }

    #[test]
    fn construction_sorts_and_rejects() {
        assert_eq!(v(3, 1, 2).elems(), [1, 2, 3]);
        assert!(Vertex::new(1, 1, 2).is_err());
        assert!(Vertex::new(0, 1, 2).is_err());
        assert!(Vertex::checked(1, 2, 7, 6).is_err());
        assert!(Vertex::checked(1, 2, 6, 6).is_ok());
    }

    #[test]
    fn colex_order() {
        let mut vs = vec![v(1, 2, 4), v(4, 5, 6), v(1, 2, 3), v(1, 3, 4), v(2, 3, 4)];
        vs.sort();
        assert_eq!(
            vs,
            vec![v(1, 2, 3), v(1, 2, 4), v(1, 3, 4), v(2, 3, 4), v(4, 5, 6)]
        );
    }
}
