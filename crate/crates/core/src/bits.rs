//! Packed bit storage.
//!
//! [`BitVec`] is the heap-backed membership vector behind `VertexSet`.
//! [`SmallSet`] is a fixed 256-bit set used by the exact searches, where
//! every graph has at most C(12,3) = 220 vertices and copies must be cheap.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: u64,
}

impl BitVec {
    pub fn zeros(len: u64) -> Self {
        let words = len.div_ceil(64) as usize;
        BitVec {
            words: vec![0; words],
            len,
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        self.words[(i >> 6) as usize] >> (i & 63) & 1 == 1
    }

    /// Sets bit `i`, returning its previous value.
    #[inline]
    pub fn set(&mut self, i: u64) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[(i >> 6) as usize];
        let mask = 1u64 << (i & 63);
        let old = *w & mask != 0;
        *w |= mask;
        old
    }

    /// Clears bit `i`, returning its previous value.
    #[inline]
    pub fn clear(&mut self, i: u64) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[(i >> 6) as usize];
        let mask = 1u64 << (i & 63);
        let old = *w & mask != 0;
        *w &= !mask;
        old
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Indices of set bits in increasing order.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as u64;
                self.current &= self.current - 1;
                return Some(self.word_idx as u64 * 64 + tz);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}

pub const SMALL_CAPACITY: usize = 256;

/// A copyable set of indices below [`SMALL_CAPACITY`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SmallSet([u64; 4]);

impl SmallSet {
    pub const EMPTY: SmallSet = SmallSet([0; 4]);

    /// The set `{0, .., len-1}`.
    pub fn prefix(len: usize) -> Self {
        assert!(len <= SMALL_CAPACITY);
        let mut s = SmallSet::EMPTY;
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = w * 64;
            if len >= lo + 64 {
                *word = u64::MAX;
            } else if len > lo {
                *word = (1u64 << (len - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    #[inline]
    pub fn and(&self, other: &SmallSet) -> SmallSet {
        SmallSet(std::array::from_fn(|i| self.0[i] & other.0[i]))
    }

    #[inline]
    pub fn and_not(&self, other: &SmallSet) -> SmallSet {
        SmallSet(std::array::from_fn(|i| self.0[i] & !other.0[i]))
    }

    #[inline]
    pub fn or(&self, other: &SmallSet) -> SmallSet {
        SmallSet(std::array::from_fn(|i| self.0[i] | other.0[i]))
    }

    /// Elements strictly greater than `i`.
    pub fn above(&self, i: usize) -> SmallSet {
        self.and_not(&SmallSet::prefix(i + 1))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + tz)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_set_clear_count() {
        let mut b = BitVec::zeros(130);
        assert!(!b.set(0));
        assert!(!b.set(64));
        assert!(!b.set(129));
        assert!(b.set(129));
        assert_eq!(b.count_ones(), 3);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert!(b.clear(64));
        assert!(!b.get(64));
        assert_eq!(b.count_ones(), 2);
    }

    #[test]
    fn small_set_ops() {
        let p = SmallSet::prefix(70);
        assert_eq!(p.len(), 70);
        assert_eq!(SmallSet::prefix(256).len(), 256);
        let above = p.above(63);
        assert_eq!(
            above.iter().collect::<Vec<_>>(),
            (64..70).collect::<Vec<_>>()
        );
        assert_eq!(above.first(), Some(64));
        let mut s = SmallSet::EMPTY;
        s.insert(200);
        s.insert(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 200]);
        assert!(s.and(&p).contains(3) && !s.and(&p).contains(200));
        s.remove(3);
        assert_eq!(s.first(), Some(200));
    }
}
