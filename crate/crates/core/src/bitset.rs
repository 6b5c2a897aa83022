//! Fixed-capacity vertex sets backed by packed `u64` words.
//!
//! Interval tables store thousands of these sets contiguously, so the word
//! level helpers in [`words`] operate on plain slices and [`VertexSet`] is a
//! thin owning wrapper around one such slice.

use std::fmt;

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

/// Slice-level bit operations shared by [`VertexSet`] and the interval tables.
pub(crate) mod words {
    #[inline]
    pub fn contains(words: &[u64], v: usize) -> bool {
        words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(words: &mut [u64], v: usize) {
        words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn count(words: &[u64]) -> usize {
        words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn union_into(dst: &mut [u64], src: &[u64]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d |= s;
        }
    }

    #[inline]
    pub fn difference_into(dst: &mut [u64], src: &[u64]) {
        for (d, s) in dst.iter_mut().zip(src) {
            *d &= !s;
        }
    }

    /// `|a \ b|`
    #[inline]
    pub fn count_difference(a: &[u64], b: &[u64]) -> usize {
        a.iter().zip(b).map(|(x, y)| (x & !y).count_ones() as usize).sum()
    }

    /// `|a ∪ b ∪ c|`
    #[inline]
    pub fn count_union3(a: &[u64], b: &[u64], c: &[u64]) -> usize {
        a.iter()
            .zip(b)
            .zip(c)
            .map(|((x, y), z)| (x | y | z).count_ones() as usize)
            .sum()
    }

    pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
        words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

/// A set of vertex ids drawn from `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set able to hold vertices `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            words: vec![0; words_for(capacity)],
        }
    }

    /// The set `{0, 1, ..., capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        let mut set = Self::new(capacity);
        for v in 0..capacity {
            set.insert(v);
        }
        set
    }

    /// Builds a set from vertex ids.
    ///
    /// # Panics
    ///
    /// Panics if any id is `>= capacity`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Self {
        let mut set = Self::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub(crate) fn from_words(capacity: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(capacity));
        Self {
            capacity,
            words: words.to_vec(),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        words::count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && words::contains(&self.words, v)
    }

    /// Adds `v`, returning `true` if it was not already present.
    ///
    /// # Panics
    ///
    /// Panics if `v >= capacity`.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range 0..{}", self.capacity);
        let fresh = !words::contains(&self.words, v);
        words::insert(&mut self.words, v);
        fresh
    }

    /// Removes `v`, returning `true` if it was present.
    pub fn remove(&mut self, v: usize) -> bool {
        if !self.contains(v) {
            return false;
        }
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        true
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        words::union_into(&mut self.words, &other.words);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        words::difference_into(&mut self.words, &other.words);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d &= s;
        }
    }

    /// Number of members of `self` that are not in `other`.
    pub fn difference_len(&self, other: &VertexSet) -> usize {
        words::count_difference(&self.words, &other.words)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        words::ones(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Box<dyn Iterator<Item = usize> + 'a>;

    fn into_iter(self) -> Self::IntoIter {
        Box::new(self.iter())
    }
}
