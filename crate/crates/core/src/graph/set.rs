use std::fmt;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::graph::colex::{rank_unchecked, unrank_unchecked, vertex_count_u64};
use crate::graph::vertex::Vertex;

/// Largest index space a [`VertexSet`] will allocate (bits). C(1600,3) fits.
pub const MAX_INDEX_BITS: u64 = 1 << 32;

/// A subset of V_n stored as a bit vector indexed by colex rank.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: u32,
    members: BitVec,
    size: u64,
}

impl VertexSet {
    pub fn empty(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "n must be at least 3, got {n}"
            )));
        }
        let count = vertex_count_u64(n)?;
        if count > MAX_INDEX_BITS {
            return Err(Error::InvalidParameter(format!(
                "C({n},3) = {count} exceeds the materialization limit of {MAX_INDEX_BITS} vertices"
            )));
        }
        Ok(VertexSet {
            n,
            members: BitVec::zeros(count),
            size: 0,
        })
    }

    /// Whether a set over ground size `n` can be allocated.
    pub fn can_materialize(n: u32) -> bool {
        n >= 3 && vertex_count_u64(n).is_ok_and(|c| c <= MAX_INDEX_BITS)
    }

    /// The whole vertex set V_n.
    pub fn full(n: u32) -> Result<Self> {
        let mut s = VertexSet::empty(n)?;
        for r in 0..s.members.len() {
            s.members.set(r);
        }
        s.size = s.members.len();
        Ok(s)
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: u32, vertices: I) -> Result<Self> {
        let mut s = VertexSet::empty(n)?;
        for v in vertices {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn from_ranks<I: IntoIterator<Item = u64>>(n: u32, ranks: I) -> Result<Self> {
        let mut s = VertexSet::empty(n)?;
        let count = s.members.len();
        for r in ranks {
            if r >= count {
                return Err(Error::RankOutOfRange { rank: r, n, count });
            }
            if !s.members.set(r) {
                s.size += 1;
            }
        }
        Ok(s)
    }

    /// Inserts `v`; returns whether it was newly added.
    pub fn insert(&mut self, v: Vertex) -> Result<bool> {
        v.validate(self.n)?;
        let fresh = !self.members.set(rank_unchecked(&v));
        self.size += fresh as u64;
        Ok(fresh)
    }

    pub fn remove(&mut self, v: &Vertex) -> bool {
        if v.max_elem() > self.n {
            return false;
        }
        let was = self.members.clear(rank_unchecked(v));
        self.size -= was as u64;
        was
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        v.max_elem() <= self.n && self.members.get(rank_unchecked(v))
    }

    pub fn contains_rank(&self, r: u64) -> bool {
        r < self.members.len() && self.members.get(r)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Colex ranks of members, ascending.
    pub fn ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.ones()
    }

    /// Members in colex order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.ones().map(unrank_unchecked)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Members not in `self`, over the same ground set.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet {
            n: self.n,
            members: BitVec::zeros(self.members.len()),
            size: 0,
        };
        for r in 0..self.members.len() {
            if !self.members.get(r) {
                out.members.set(r);
                out.size += 1;
            }
        }
        out
    }

    /// Recomputes the cardinality from the bit vector.
    pub fn popcount(&self) -> u64 {
        self.members.count_ones()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VertexSet")
            .field("n", &self.n)
            .field("size", &self.size)
            .field("members", &self.iter().take(16).collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_keeps_size_in_sync() {
        let mut s = VertexSet::empty(6).unwrap();
        let a = Vertex::new(1, 2, 3).unwrap();
        let b = Vertex::new(4, 5, 6).unwrap();
        assert!(s.insert(a).unwrap());
        assert!(!s.insert(a).unwrap());
        assert!(s.insert(b).unwrap());
        assert_eq!(s.len(), 2);
        assert_eq!(s.popcount(), 2);
        assert!(s.remove(&a));
        assert!(!s.remove(&a));
        assert_eq!(s.len(), s.popcount());
        assert!(s.insert(Vertex::new(1, 2, 7).unwrap()).is_err());
        assert!(!s.contains(&Vertex::new(1, 2, 7).unwrap()));
    }

    #[test]
    fn full_and_complement() {
        let full = VertexSet::full(7).unwrap();
        assert_eq!(full.len(), 35);
        let mut s = VertexSet::empty(7).unwrap();
        s.insert(Vertex::new(2, 3, 7).unwrap()).unwrap();
        let c = s.complement();
        assert_eq!(c.len(), 34);
        assert!(!c.contains(&Vertex::new(2, 3, 7).unwrap()));
        let ordered: Vec<_> = full.iter().collect();
        let mut sorted = ordered.clone();
        sorted.sort();
        assert_eq!(ordered, sorted);
    }

    #[test]
    fn too_large_ground_set_is_rejected() {
        assert!(VertexSet::empty(100_000).is_err());
        assert!(!VertexSet::can_materialize(100_000));
        assert!(VertexSet::can_materialize(1000));
    }
}
