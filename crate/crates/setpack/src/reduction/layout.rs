//! Placement of the per-vertex gadget copies inside the composite universe.

use std::collections::HashMap;
use std::ops::Range;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::pattern::OrderedPattern;

/// One gadget copy. `Chain(i)` is the copy linking position `i` to its
/// cyclic successor; `Edge(i, j)` is the copy owned by position `i` for its
/// neighbor at position `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Chain(usize),
    Edge(usize, usize),
}

/// Maps each slot to a contiguous block of `n_elems` universe indices. The
/// blocks tile `[0, (l + 2k) * n_elems)` exactly: for each position, first
/// the chain slot, then one edge slot per neighbor in ascending position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetLayout {
    n_elems: usize,
    slots: Vec<Slot>,
    index: HashMap<Slot, usize>,
}

impl GadgetLayout {
    pub fn new(pattern: &OrderedPattern, n_elems: usize) -> Self {
        let mut slots = Vec::new();
        for i in 1..=pattern.len() {
            slots.push(Slot::Chain(i));
            for &j in pattern.neighbor_positions(i) {
                slots.push(Slot::Edge(i, j));
            }
        }
        let index = slots.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        GadgetLayout {
            n_elems,
            slots,
            index,
        }
    }

    pub fn n_elems(&self) -> usize {
        self.n_elems
    }

    pub fn universe_size(&self) -> usize {
        self.slots.len() * self.n_elems
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn block_range(&self, slot: Slot) -> Result<Range<usize>> {
        let k = *self
            .index
            .get(&slot)
            .ok_or_else(|| Error::Range(format!("no block for slot {slot:?}")))?;
        Ok(k * self.n_elems..(k + 1) * self.n_elems)
    }

    /// Union of all chain blocks (the U0 region).
    pub fn chain_region(&self) -> BitSet {
        self.region(|s| matches!(s, Slot::Chain(_)))
    }

    /// Union of all edge blocks (the U1 region).
    pub fn edge_region(&self) -> BitSet {
        self.region(|s| matches!(s, Slot::Edge(..)))
    }

    fn region(&self, pred: impl Fn(Slot) -> bool) -> BitSet {
        let mut out = BitSet::new(self.universe_size());
        for (k, &slot) in self.slots.iter().enumerate() {
            if pred(slot) {
                for e in k * self.n_elems..(k + 1) * self.n_elems {
                    out.insert(e);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn blocks_tile_the_universe() {
        let k3 = Graph::complete(3);
        let pat = OrderedPattern::identity(k3).unwrap();
        let layout = GadgetLayout::new(&pat, 6);
        let (l, k) = (3, 3);
        assert_eq!(layout.universe_size(), (l + 2 * k) * 6);
        assert_eq!(layout.slots().len(), l + 2 * k);

        let mut covered = BitSet::new(layout.universe_size());
        for &slot in layout.slots() {
            let range = layout.block_range(slot).unwrap();
            assert_eq!(range.len(), 6);
            for e in range {
                assert!(!covered.contains(e), "blocks overlap at {e}");
                covered.insert(e);
            }
        }
        assert_eq!(covered, BitSet::full(layout.universe_size()));

        assert_eq!(layout.chain_region().cardinality(), l * 6);
        assert_eq!(layout.edge_region().cardinality(), 2 * k * 6);
    }

    #[test]
    fn missing_slot_is_an_error() {
        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        let pat = OrderedPattern::identity(edge).unwrap();
        let layout = GadgetLayout::new(&pat, 4);
        assert!(layout.block_range(Slot::Edge(1, 1)).is_err());
    }
}
