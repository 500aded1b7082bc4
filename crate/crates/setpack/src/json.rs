//! Serialized forms of every artifact the CLI reads or writes. Universe
//! elements are 1-indexed on disk (matching the written conventions for set
//! systems) and 0-indexed in memory; witness indices are 0-indexed in both.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iss::IssPair;
use crate::setsystem::{PspInstance, SetFamily, SetLabel, XcoverInstance};
use crate::solvers::VectorSumInstance;

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

pub fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

fn set_to_elems(s: &BitSet) -> Vec<usize> {
    s.iter().map(|e| e + 1).collect()
}

fn elems_to_set(universe_size: usize, elems: &[usize]) -> Result<BitSet> {
    let mut s = BitSet::new(universe_size);
    for &e in elems {
        if e < 1 || e > universe_size {
            return Err(Error::Range(format!(
                "element {e} outside universe 1..={universe_size}"
            )));
        }
        s.insert(e - 1);
    }
    Ok(s)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().to_vec(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edges)
    }
}

/// A set family with optional decision budget and provenance labels; used
/// for both packing and exact-cover instances.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub universe_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub sets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<SetLabel>>,
}

impl InstanceDoc {
    pub fn from_family(family: &SetFamily, r: Option<usize>) -> Self {
        InstanceDoc {
            universe_size: family.universe_size(),
            r,
            sets: family.sets().iter().map(set_to_elems).collect(),
            labels: family.labels().map(|l| l.to_vec()),
        }
    }

    pub fn to_family(&self) -> Result<SetFamily> {
        let sets = self
            .sets
            .iter()
            .map(|s| elems_to_set(self.universe_size, s))
            .collect::<Result<Vec<_>>>()?;
        match &self.labels {
            Some(labels) => {
                SetFamily::from_labeled_sets(self.universe_size, sets, labels.clone())
            }
            None => SetFamily::from_sets(self.universe_size, sets),
        }
    }

    pub fn to_psp(&self, r_override: Option<usize>) -> Result<PspInstance> {
        let r = r_override.or(self.r).ok_or_else(|| {
            Error::InvalidArgument("instance has no r; pass one explicitly".into())
        })?;
        PspInstance::new(self.to_family()?, r)
    }

    pub fn to_xcover(&self, r_override: Option<usize>) -> Result<XcoverInstance> {
        let r = r_override.or(self.r).ok_or_else(|| {
            Error::InvalidArgument("instance has no r; pass one explicitly".into())
        })?;
        XcoverInstance::new(self.to_family()?, r)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IssPairDoc {
    pub n_elems: usize,
    pub m_sets: usize,
    pub s_a: Vec<Vec<usize>>,
    pub s_b: Vec<Vec<usize>>,
}

impl IssPairDoc {
    pub fn from_pair(pair: &IssPair) -> Self {
        IssPairDoc {
            n_elems: pair.n_elems,
            m_sets: pair.m_sets(),
            s_a: pair.s_a.iter().map(set_to_elems).collect(),
            s_b: pair.s_b.iter().map(set_to_elems).collect(),
        }
    }

    pub fn to_pair(&self) -> Result<IssPair> {
        let conv = |rows: &[Vec<usize>]| -> Result<Vec<BitSet>> {
            rows.iter().map(|s| elems_to_set(self.n_elems, s)).collect()
        };
        let pair = IssPair {
            n_elems: self.n_elems,
            s_a: conv(&self.s_a)?,
            s_b: conv(&self.s_b)?,
        };
        if pair.m_sets() != self.m_sets || pair.s_b.len() != self.m_sets {
            return Err(Error::InvalidArgument(format!(
                "declared m_sets {} does not match {} stored sets",
                self.m_sets,
                pair.m_sets()
            )));
        }
        Ok(pair)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VecSumDoc {
    pub dim: usize,
    pub r: usize,
    pub target: Vec<usize>,
    pub vectors: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<SetLabel>>,
}

impl VecSumDoc {
    pub fn from_instance(inst: &VectorSumInstance) -> Self {
        VecSumDoc {
            dim: inst.dim,
            r: inst.r,
            target: set_to_elems(&inst.target),
            vectors: inst.vectors.iter().map(set_to_elems).collect(),
            labels: inst.labels.clone(),
        }
    }

    pub fn to_instance(&self, r_override: Option<usize>) -> Result<VectorSumInstance> {
        VectorSumInstance::new(
            self.dim,
            self.vectors
                .iter()
                .map(|v| elems_to_set(self.dim, v))
                .collect::<Result<Vec<_>>>()?,
            self.labels.clone(),
            elems_to_set(self.dim, &self.target)?,
            r_override.unwrap_or(self.r),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubIsoDoc {
    pub g: GraphDoc,
    pub h: GraphDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDoc {
    /// 0-indexed positions into the instance's set (or vector) list.
    pub indices: Vec<usize>,
}

/// Written alongside the per-ordering instance files by `reduce`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestDoc {
    pub target: String,
    pub mode: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub n_elems: usize,
    pub r: usize,
    pub universe_size: usize,
    pub set_count: usize,
    pub compactness_ratio: f64,
    pub orderings: Vec<Vec<usize>>,
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::generate_random_psp;
    use crate::iss::build_compatible_iss;

    #[test]
    fn family_round_trip() {
        let inst = generate_random_psp(9, 12, 0.4, 5).unwrap();
        let doc = InstanceDoc::from_family(&inst.family, Some(inst.r));
        let back = doc.to_psp(None).unwrap();
        assert_eq!(back, inst);
        // serialized form round-trips byte-identically
        let text = serde_json::to_string(&doc).unwrap();
        let doc2: InstanceDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&doc2).unwrap(), text);
    }

    #[test]
    fn elements_are_one_indexed() {
        let fam = SetFamily::from_sets(
            3,
            vec![BitSet::from_elems(3, &[0, 2]).unwrap()],
        )
        .unwrap();
        let doc = InstanceDoc::from_family(&fam, None);
        assert_eq!(doc.sets, vec![vec![1, 3]]);
    }

    #[test]
    fn rejects_out_of_range_elements() {
        let doc = InstanceDoc {
            universe_size: 2,
            r: None,
            sets: vec![vec![3]],
            labels: None,
        };
        assert!(doc.to_family().is_err());
        let doc0 = InstanceDoc {
            universe_size: 2,
            r: None,
            sets: vec![vec![0]],
            labels: None,
        };
        assert!(doc0.to_family().is_err());
    }

    #[test]
    fn iss_round_trip() {
        let pair = build_compatible_iss(6).unwrap();
        let doc = IssPairDoc::from_pair(&pair);
        assert_eq!(doc.to_pair().unwrap(), pair);
    }

    #[test]
    fn graph_round_trip() {
        let g = Graph::new(4, &[(1, 2), (3, 4), (2, 3)]).unwrap();
        assert_eq!(GraphDoc::from_graph(&g).to_graph().unwrap(), g);
    }
}
