//! Reduction from subgraph isomorphism to compact set packing: per-ordering
//! gadget instances, witness embedding for the yes direction, and witness
//! lifting for the no direction. The same construction doubles as an exact
//! r-covering instance and, after the characteristic-vector lift, as an
//! r-vector-sum instance.

mod layout;
mod pattern;

pub use layout::{GadgetLayout, Slot};
pub use pattern::{
    enumerate_orderings, sort_pattern_for, OrderedPattern, Orderings, DEFAULT_MAX_ORDERING_L,
};

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result, SoundnessCheck};
use crate::graph::{is_injective_homomorphism, Isomorphism, SubIsoInstance};
use crate::iss::{binomial, build_compatible_iss, IssPair};
use crate::setsystem::{
    is_packing, PackingWitness, PspInstance, SetFamily, SetLabel, XcoverInstance,
};
use crate::solvers::VectorSumInstance;

/// How the gadget universe size is chosen from `n = |V_G|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetMode {
    /// `N = 2 * ceil(log2(n + 1)) + 2`.
    Paper,
    /// Smallest even `N` with `C(N, N/2) / 2 >= n`.
    Tight,
}

impl std::fmt::Display for GadgetMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GadgetMode::Paper => "paper",
            GadgetMode::Tight => "tight",
        })
    }
}

fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Gadget universe size for a host graph with `n` vertices. Both modes
/// guarantee the gadget holds at least `n` sets.
pub fn base_gadget_size(n: usize, mode: GadgetMode) -> usize {
    match mode {
        GadgetMode::Paper => 2 * ceil_log2(n + 1) + 2,
        GadgetMode::Tight => {
            let mut cand = 2;
            while binomial(cand, cand / 2) / 2 < n as u128 {
                cand += 2;
            }
            cand
        }
    }
}

/// A reduced instance with full provenance: the packing instance itself plus
/// everything needed to re-materialize any set from its label and to lift
/// witnesses back to vertex maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPspInstance {
    pub inst: PspInstance,
    pub layout: GadgetLayout,
    pub pattern: OrderedPattern,
    pub gadget: IssPair,
    pub mode: GadgetMode,
}

impl ReducedPspInstance {
    /// The same family under exact-cover semantics.
    pub fn xcover(&self) -> XcoverInstance {
        XcoverInstance {
            family: self.inst.family.clone(),
            r: self.inst.r,
        }
    }

    pub fn labels(&self) -> &[SetLabel] {
        self.inst
            .family
            .labels()
            .expect("reduced instances always carry labels")
    }

    /// Rebuilds the bit-vector a label denotes. Used to verify label
    /// faithfulness of serialized instances.
    pub fn materialize_label(&self, label: SetLabel) -> Result<BitSet> {
        materialize(&self.layout, &self.pattern, &self.gadget, label)
    }
}

fn materialize(
    layout: &GadgetLayout,
    pattern: &OrderedPattern,
    gadget: &IssPair,
    label: SetLabel,
) -> Result<BitSet> {
    let mut out = BitSet::new(layout.universe_size());
    let straight = |alpha: usize| -> Result<&BitSet> {
        gadget
            .s_a
            .get(alpha - 1)
            .ok_or_else(|| Error::Internal(format!("gadget has no set for vertex {alpha}")))
    };
    let flipped = |alpha: usize| -> Result<&BitSet> {
        gadget
            .s_b
            .get(alpha - 1)
            .ok_or_else(|| Error::Internal(format!("gadget has no set for vertex {alpha}")))
    };
    match label {
        SetLabel::VSet { alpha, i, beta } => {
            let chain = layout.block_range(Slot::Chain(i))?;
            out.overlay(straight(alpha)?, chain.start);
            for &j in pattern.neighbor_positions(i) {
                let block = layout.block_range(Slot::Edge(i, j))?;
                out.overlay(straight(alpha)?, block.start);
            }
            let next = layout.block_range(Slot::Chain(pattern.succ(i)))?;
            out.overlay(flipped(beta)?, next.start);
        }
        SetLabel::ESet { alpha, beta, i, j } => {
            let fwd = layout.block_range(Slot::Edge(i, j))?;
            out.overlay(flipped(alpha)?, fwd.start);
            let rev = layout.block_range(Slot::Edge(j, i))?;
            out.overlay(flipped(beta)?, rev.start);
        }
    }
    Ok(out)
}

/// Builds the packing instance for one ordering of the pattern. V-sets tie
/// each host vertex choice to the cyclic successor position; E-sets place
/// complement gadget sets on both endpoints of a host edge.
pub fn build_psp_instance(
    si: &SubIsoInstance,
    pattern: &OrderedPattern,
    mode: GadgetMode,
) -> Result<ReducedPspInstance> {
    if pattern.h() != &si.h {
        return Err(Error::InvalidArgument(
            "ordering belongs to a different pattern graph".into(),
        ));
    }
    let n = si.g.n();
    let l = si.h.n();
    let k = si.h.edge_count();
    let n_elems = base_gadget_size(n, mode);
    let gadget = build_compatible_iss(n_elems)?;
    if gadget.m_sets() < n {
        return Err(Error::Internal(format!(
            "gadget holds {} sets but the host graph has {n} vertices",
            gadget.m_sets()
        )));
    }
    let layout = GadgetLayout::new(pattern, n_elems);

    let mut labels = Vec::new();
    for i in 1..=l {
        for alpha in 1..=n {
            let betas: Box<dyn Iterator<Item = usize>> = if i < l {
                Box::new(alpha + 1..=n)
            } else {
                Box::new(1..alpha)
            };
            for beta in betas {
                labels.push(SetLabel::VSet { alpha, i, beta });
            }
        }
    }
    for (i, j) in pattern.edge_positions() {
        for &(u, v) in si.g.edges() {
            labels.push(SetLabel::ESet {
                alpha: u,
                beta: v,
                i,
                j,
            });
            labels.push(SetLabel::ESet {
                alpha: v,
                beta: u,
                i,
                j,
            });
        }
    }

    let mut sets = Vec::with_capacity(labels.len());
    let mut seen: HashSet<BitSet> = HashSet::with_capacity(labels.len());
    for &label in &labels {
        let set = materialize(&layout, pattern, &gadget, label)?;
        assert!(
            seen.insert(set.clone()),
            "distinct labels produced the same set: {label}"
        );
        sets.push(set);
    }

    let family = SetFamily::from_labeled_sets(layout.universe_size(), sets, labels)?;
    Ok(ReducedPspInstance {
        inst: PspInstance::new(family, k + l)?,
        layout,
        pattern: pattern.clone(),
        gadget,
        mode,
    })
}

/// Identical construction read under exact-cover semantics with budget
/// `r = k + l`; pair with [`ReducedPspInstance::xcover`] when solving.
pub fn build_xcover_instance(
    si: &SubIsoInstance,
    pattern: &OrderedPattern,
    mode: GadgetMode,
) -> Result<ReducedPspInstance> {
    build_psp_instance(si, pattern, mode)
}

/// The explicit packing realizing an injective homomorphism: one V-set per
/// position chaining the sorted images, one E-set per pattern edge. Requires
/// the instance's ordering to sort the image (see [`sort_pattern_for`]).
pub fn embed_isomorphism_as_packing(
    red: &ReducedPspInstance,
    phi: &Isomorphism,
) -> Result<PackingWitness> {
    if phi.map().len() != red.pattern.len() {
        return Err(Error::InvalidArgument(format!(
            "map has length {} for pattern with {} vertices",
            phi.map().len(),
            red.pattern.len()
        )));
    }
    if !phi.is_injective() {
        return Err(Error::InvalidArgument("map is not injective".into()));
    }
    let l = red.pattern.len();
    let alpha_at = |i: usize| phi.image(red.pattern.vertex_at(i));
    let by_label: HashMap<SetLabel, usize> = red
        .labels()
        .iter()
        .enumerate()
        .map(|(idx, &lab)| (lab, idx))
        .collect();
    let lookup = |label: SetLabel| -> Result<usize> {
        by_label
            .get(&label)
            .copied()
            .ok_or_else(|| Error::WitnessNotFound(label.to_string()))
    };

    let mut indices = Vec::with_capacity(red.inst.r);
    for i in 1..=l {
        indices.push(lookup(SetLabel::VSet {
            alpha: alpha_at(i),
            i,
            beta: alpha_at(red.pattern.succ(i)),
        })?);
    }
    for (i, j) in red.pattern.edge_positions() {
        indices.push(lookup(SetLabel::ESet {
            alpha: alpha_at(i),
            beta: alpha_at(j),
            i,
            j,
        })?);
    }
    PackingWitness::new(indices)
}

/// Recovers the injective homomorphism encoded by an r-packing, checking on
/// the way every conclusion the construction guarantees: exactly `l` V-sets
/// and `k` E-sets, full coverage, strictly increasing extracted vertices,
/// and finally that the extracted map really is an injective homomorphism.
pub fn lift_packing_to_isomorphism(
    red: &ReducedPspInstance,
    w: &PackingWitness,
) -> Result<Isomorphism> {
    if w.len() != red.inst.r {
        return Err(Error::InvalidArgument(format!(
            "witness has {} indices, expected r = {}",
            w.len(),
            red.inst.r
        )));
    }
    if !is_packing(&red.inst.family, w)? {
        return Err(Error::InvalidArgument(
            "witness is not a packing".into(),
        ));
    }
    let l = red.pattern.len();
    let k = red.pattern.h().edge_count();
    let labels = red.labels();

    let mut v_sets: Vec<(usize, usize)> = Vec::new(); // (position, alpha)
    let mut e_count = 0usize;
    for &idx in w.indices() {
        match labels[idx] {
            SetLabel::VSet { alpha, i, .. } => v_sets.push((i, alpha)),
            SetLabel::ESet { .. } => e_count += 1,
        }
    }
    if v_sets.len() != l || e_count != k {
        return Err(Error::Soundness {
            check: SoundnessCheck::PartitionSizes,
            detail: format!(
                "witness has {} V-sets and {e_count} E-sets, expected {l} and {k}",
                v_sets.len()
            ),
        });
    }

    let mut union = BitSet::new(red.inst.family.universe_size());
    for &idx in w.indices() {
        union.union_inplace(&red.inst.family.sets()[idx]);
    }
    if union != BitSet::full(red.inst.family.universe_size()) {
        return Err(Error::Soundness {
            check: SoundnessCheck::Coverage,
            detail: format!(
                "witness covers {} of {} elements",
                union.cardinality(),
                red.inst.family.universe_size()
            ),
        });
    }

    v_sets.sort_unstable();
    if let Some(pos) = v_sets.windows(2).position(|p| p[0].0 == p[1].0) {
        return Err(Error::Soundness {
            check: SoundnessCheck::PartitionSizes,
            detail: format!("two V-sets claim position {}", v_sets[pos].0),
        });
    }
    let alphas: Vec<usize> = v_sets.iter().map(|&(_, a)| a).collect();
    if alphas.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::Soundness {
            check: SoundnessCheck::VertexOrdering,
            detail: format!("extracted vertices {alphas:?} are not strictly increasing"),
        });
    }

    let mut map = vec![0usize; l];
    for (i, &alpha) in alphas.iter().enumerate() {
        map[red.pattern.vertex_at(i + 1) - 1] = alpha;
    }
    let phi = Isomorphism::from_map(map);
    // the instance does not carry the host graph, but every pattern edge the
    // map must realize is named by an E-set label in the witness, so check
    // against those
    if !verify_lifted_map(red, w, &phi) {
        return Err(Error::Soundness {
            check: SoundnessCheck::Homomorphism,
            detail: format!("extracted map {:?} is not an injective homomorphism", phi.map()),
        });
    }
    Ok(phi)
}

// Every pattern edge (i, j) must be realized by an E-set in the witness
// whose host edge matches the extracted images at positions i and j.
fn verify_lifted_map(red: &ReducedPspInstance, w: &PackingWitness, phi: &Isomorphism) -> bool {
    if !phi.is_injective() {
        return false;
    }
    let labels = red.labels();
    let mut realized: HashSet<(usize, usize, usize, usize)> = HashSet::new();
    for &idx in w.indices() {
        if let SetLabel::ESet { alpha, beta, i, j } = labels[idx] {
            realized.insert((i, j, alpha, beta));
        }
    }
    red.pattern.edge_positions().iter().all(|&(i, j)| {
        let a = phi.image(red.pattern.vertex_at(i));
        let b = phi.image(red.pattern.vertex_at(j));
        realized.contains(&(i, j, a, b)) || realized.contains(&(i, j, b, a))
    })
}

/// Checks a lifted map against the original host graph. Callers that still
/// hold `G` should prefer this over the label-based internal check.
pub fn lift_and_verify(
    si: &SubIsoInstance,
    red: &ReducedPspInstance,
    w: &PackingWitness,
) -> Result<Isomorphism> {
    let phi = lift_packing_to_isomorphism(red, w)?;
    if !is_injective_homomorphism(si, &phi) {
        return Err(Error::Soundness {
            check: SoundnessCheck::Homomorphism,
            detail: format!(
                "lifted map {:?} is not an injective homomorphism into the host graph",
                phi.map()
            ),
        });
    }
    Ok(phi)
}

/// Characteristic-vector lift: each set becomes its indicator vector over
/// the universe plus one V-indicator bit (per position) or two E-indicator
/// bits (at degree-prefix offsets given by the neighbor ranks). The target
/// is the all-ones vector.
pub fn vectorize_instance(red: &ReducedPspInstance) -> Result<VectorSumInstance> {
    let u = red.inst.family.universe_size();
    let l = red.pattern.len();
    let k = red.pattern.h().edge_count();
    let d = u + l + 2 * k;
    let labels = red
        .inst
        .family
        .labels()
        .ok_or_else(|| Error::InvalidArgument("instance carries no labels".into()))?;

    // prefix degree sums in ordering positions: deg_prefix[i-1] = sum of
    // degrees of positions 1..i-1
    let mut deg_prefix = vec![0usize; l + 1];
    for i in 1..=l {
        deg_prefix[i] = deg_prefix[i - 1] + red.pattern.degree_at(i);
    }

    let mut vectors = Vec::with_capacity(labels.len());
    for (set, &label) in red.inst.family.sets().iter().zip(labels) {
        let mut v = BitSet::new(d);
        v.overlay(set, 0);
        match label {
            SetLabel::VSet { i, .. } => {
                v.insert(u + i - 1);
            }
            SetLabel::ESet { i, j, .. } => {
                let gi = red.pattern.neighbor_rank(i, j).ok_or_else(|| {
                    Error::Internal(format!("positions {i},{j} are not pattern neighbors"))
                })?;
                let gj = red.pattern.neighbor_rank(j, i).ok_or_else(|| {
                    Error::Internal(format!("positions {j},{i} are not pattern neighbors"))
                })?;
                v.insert(u + l + deg_prefix[i - 1] + gi - 1);
                v.insert(u + l + deg_prefix[j - 1] + gj - 1);
            }
        }
        vectors.push(v);
    }
    VectorSumInstance::new(
        d,
        vectors,
        Some(labels.to_vec()),
        BitSet::full(d),
        red.inst.r,
    )
}
