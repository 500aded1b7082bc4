//! Set families over a shared universe, problem instances, witnesses, and
//! the witness validity predicates.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Provenance tag attached to a reduction-produced set. `alpha`/`beta` are
/// G-vertices, `i`/`j` are pattern positions (all 1-indexed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetLabel {
    VSet { alpha: usize, i: usize, beta: usize },
    ESet { alpha: usize, beta: usize, i: usize, j: usize },
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SetLabel::VSet { alpha, i, beta } => write!(f, "S[{alpha} -> v{i}, {beta}]"),
            SetLabel::ESet { alpha, beta, i, j } => {
                write!(f, "S[({alpha},{beta}) -> (v{i},v{j})]")
            }
        }
    }
}

/// An ordered family of sets over a universe of `universe_size` elements.
/// Order is insertion order, so serialization is reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe_size: usize,
    sets: Vec<BitSet>,
    labels: Option<Vec<SetLabel>>,
}

impl SetFamily {
    pub fn new(universe_size: usize) -> Self {
        SetFamily {
            universe_size,
            sets: Vec::new(),
            labels: None,
        }
    }

    pub fn from_sets(universe_size: usize, sets: Vec<BitSet>) -> Result<Self> {
        for (i, s) in sets.iter().enumerate() {
            if s.width() != universe_size {
                return Err(Error::InvalidArgument(format!(
                    "set {i} has width {} but universe size is {universe_size}",
                    s.width()
                )));
            }
        }
        Ok(SetFamily {
            universe_size,
            sets,
            labels: None,
        })
    }

    pub fn from_labeled_sets(
        universe_size: usize,
        sets: Vec<BitSet>,
        labels: Vec<SetLabel>,
    ) -> Result<Self> {
        if labels.len() != sets.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} sets",
                labels.len(),
                sets.len()
            )));
        }
        let mut fam = Self::from_sets(universe_size, sets)?;
        fam.labels = Some(labels);
        Ok(fam)
    }

    pub fn push(&mut self, set: BitSet) -> Result<()> {
        if set.width() != self.universe_size {
            return Err(Error::InvalidArgument(format!(
                "set width {} does not match universe size {}",
                set.width(),
                self.universe_size
            )));
        }
        self.sets.push(set);
        Ok(())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, i: usize) -> Option<&BitSet> {
        self.sets.get(i)
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn labels(&self) -> Option<&[SetLabel]> {
        self.labels.as_deref()
    }
}

/// Decision instance of parameterized set packing: is there an r-packing?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PspInstance {
    pub family: SetFamily,
    pub r: usize,
}

impl PspInstance {
    pub fn new(family: SetFamily, r: usize) -> Result<Self> {
        if r > family.len() {
            return Err(Error::InvalidArgument(format!(
                "target packing size {r} exceeds family size {}",
                family.len()
            )));
        }
        Ok(PspInstance { family, r })
    }
}

/// Decision instance of exact r-covering: is there a partition of the
/// universe into at most r sets of the family?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XcoverInstance {
    pub family: SetFamily,
    pub r: usize,
}

impl XcoverInstance {
    pub fn new(family: SetFamily, r: usize) -> Result<Self> {
        if r > family.len() {
            return Err(Error::InvalidArgument(format!(
                "cover budget {r} exceeds family size {}",
                family.len()
            )));
        }
        Ok(XcoverInstance { family, r })
    }
}

/// A set of positions into `family.sets`, kept sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingWitness {
    indices: Vec<usize>,
}

impl PackingWitness {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "witness indices are not distinct".into(),
            ));
        }
        Ok(PackingWitness { indices })
    }

    pub fn empty() -> Self {
        PackingWitness {
            indices: Vec::new(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

fn chosen_union(family: &SetFamily, w: &PackingWitness) -> Result<Option<BitSet>> {
    let mut acc = BitSet::new(family.universe_size());
    for &i in w.indices() {
        let s = family
            .set(i)
            .ok_or_else(|| Error::Range(format!("witness index {i} out of range")))?;
        if !acc.is_disjoint(s) {
            return Ok(None);
        }
        acc.union_inplace(s);
    }
    Ok(Some(acc))
}

/// True iff the chosen sets are pairwise disjoint.
pub fn is_packing(family: &SetFamily, w: &PackingWitness) -> Result<bool> {
    Ok(chosen_union(family, w)?.is_some())
}

/// True iff the chosen sets are pairwise disjoint and their union is the
/// whole universe.
pub fn is_exact_cover(family: &SetFamily, w: &PackingWitness) -> Result<bool> {
    Ok(match chosen_union(family, w)? {
        Some(u) => u == BitSet::full(family.universe_size()),
        None => false,
    })
}
