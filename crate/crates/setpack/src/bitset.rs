//! Fixed-width bit-vector sets. Elements are 0-indexed internally; the JSON
//! boundary (see [`crate::json`]) converts to the 1-indexed external format.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// A subset of a universe `0..width`, backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    width: usize,
    words: Vec<u64>,
}

fn words_for(width: usize) -> usize {
    width.div_ceil(64)
}

impl BitSet {
    pub fn new(width: usize) -> Self {
        BitSet {
            width,
            words: vec![0; words_for(width)],
        }
    }

    /// The full universe of the given width.
    pub fn full(width: usize) -> Self {
        let mut s = BitSet {
            width,
            words: vec![!0u64; words_for(width)],
        };
        s.trim();
        s
    }

    pub fn from_elems(width: usize, elems: &[usize]) -> Result<Self> {
        let mut s = Self::new(width);
        for &e in elems {
            if e >= width {
                return Err(Error::Range(format!(
                    "element {e} outside universe of width {width}"
                )));
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Builds a set of width <= 64 from its mask representation.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= 64, "mask construction requires width <= 64");
        let mut s = Self::new(width);
        if width > 0 {
            s.words[0] = mask;
            s.trim();
        }
        s
    }

    /// Mask representation; requires width <= 64.
    pub fn to_mask(&self) -> u64 {
        assert!(self.width <= 64, "mask view requires width <= 64");
        self.words.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        let bits = self.words.len() * 64;
        if bits > self.width && !self.words.is_empty() {
            let last = self.words.len() - 1;
            self.words[last] &= !0u64 >> (bits - self.width);
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.width, "element {e} out of width {}", self.width);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.width && (self.words[e / 64] >> (e % 64)) & 1 == 1
    }

    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_width(&self, other: &BitSet) {
        assert_eq!(self.width, other.width, "bitset width mismatch");
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        self.check_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        BitSet {
            width: self.width,
            words,
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        self.check_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        BitSet {
            width: self.width,
            words,
        }
    }

    pub fn xor(&self, other: &BitSet) -> BitSet {
        self.check_width(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        BitSet {
            width: self.width,
            words,
        }
    }

    pub fn union_inplace(&mut self, other: &BitSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn xor_inplace(&mut self, other: &BitSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// `self` is a subset of `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Complement under the full universe `0..width`.
    pub fn complement(&self) -> BitSet {
        let mut s = BitSet {
            width: self.width,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    /// Restriction to a contiguous block, re-based to block coordinates.
    pub fn restrict(&self, block: Range<usize>) -> Result<BitSet> {
        if block.start > block.end || block.end > self.width {
            return Err(Error::Range(format!(
                "block {}..{} outside universe of width {}",
                block.start, block.end, self.width
            )));
        }
        let mut out = BitSet::new(block.len());
        for e in block.clone() {
            if self.contains(e) {
                out.insert(e - block.start);
            }
        }
        Ok(out)
    }

    /// Places all elements of `sub` into `self` shifted by `offset`.
    pub fn overlay(&mut self, sub: &BitSet, offset: usize) {
        assert!(offset + sub.width <= self.width, "overlay out of range");
        for e in sub.iter() {
            self.insert(offset + e);
        }
    }

    /// Iterates over the elements in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn elems(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lowest element, if any.
    pub fn min_elem(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSet(w={})", self.width)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
