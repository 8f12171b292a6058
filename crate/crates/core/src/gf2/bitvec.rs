use std::cmp::Ordering;
use std::fmt;

/// A vector over the two-element field, stored as packed 64-bit words.
///
/// Bit `i` lives in word `i / 64` at position `i % 64`. Trailing bits of the
/// last word are kept zero so that weight and equality can work word-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// All-ones vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        if value {
            self.words[i / 64] |= 1u64 << (i % 64);
        } else {
            self.words[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Addition over the two-element field.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor_assign");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Ascending indices of set bits.
    pub fn support(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            OnesIter { word: w, base }
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Restriction to a set of positions: bits outside `keep` are cleared.
    pub fn masked(&self, keep: &BitVector) -> Self {
        assert_eq!(self.len, keep.len, "length mismatch in masked");
        let words = self
            .words
            .iter()
            .zip(&keep.words)
            .map(|(a, b)| a & b)
            .collect();
        Self::from_words(self.len, words)
    }
}

struct OnesIter {
    word: u64,
    base: usize,
}

impl Iterator for OnesIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let bit = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + bit)
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending support sequence, used to break
/// ties between equal-weight witnesses deterministically.
impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter_ones()
            .cmp(other.iter_ones())
            .then(self.len.cmp(&other.len))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector(len={}, support={:?})", self.len, self.support())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_flip() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert!(v.get(0) && v.get(64) && v.get(129));
        assert_eq!(v.weight(), 3);
        v.flip(64);
        assert!(!v.get(64));
        assert_eq!(v.support(), vec![0, 129]);
    }

    #[test]
    fn xor_is_symmetric_difference() {
        let a = BitVector::from_support(10, &[1, 3, 5]);
        let b = BitVector::from_support(10, &[3, 4, 5]);
        assert_eq!(a.xor(&b).support(), vec![1, 4]);
    }

    #[test]
    fn support_order_is_lexicographic() {
        let a = BitVector::from_support(6, &[0, 3]);
        let b = BitVector::from_support(6, &[1, 2]);
        assert!(a < b);
    }

    #[test]
    fn masked_clears_outside() {
        let v = BitVector::from_support(8, &[1, 2, 6]);
        let keep = BitVector::from_support(8, &[2, 6, 7]);
        assert_eq!(v.masked(&keep).support(), vec![2, 6]);
    }
}
