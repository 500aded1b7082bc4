//! End-to-end equivalence harness: for a subgraph isomorphism question,
//! check that the brute-force answer, the packing answer, the exact-cover
//! answer, and the vector-sum answer all agree across every vertex
//! ordering, with every witness lifted or embedded and re-verified.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, SubIsoInstance};
use crate::reduction::{
    build_psp_instance, embed_isomorphism_as_packing, enumerate_orderings, lift_and_verify,
    sort_pattern_for, vectorize_instance, GadgetMode, OrderedPattern,
};
use crate::setsystem::{is_exact_cover, is_packing, PackingWitness};
use crate::solvers::{
    solve_exact_cover_bnb, solve_set_packing_bnb, solve_subiso_bruteforce, solve_vector_sum,
    SolveBudget,
};

/// Answers for one ordering's reduced instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderingOutcome {
    pub ordering: Vec<usize>,
    pub psp_found: bool,
    pub xcover_found: bool,
    pub vecsum_found: bool,
}

/// One (G, H) pair's full comparison. The three reduction answers are ORs
/// over the orderings actually run; `consistent` requires all four to agree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub g_edges: Vec<(usize, usize)>,
    pub h_edges: Vec<(usize, usize)>,
    pub mode: GadgetMode,
    pub subiso_answer: bool,
    pub psp_answer: bool,
    pub xcover_answer: bool,
    pub vecsum_answer: bool,
    pub orderings_checked: usize,
    pub lift_checks_passed: usize,
    pub embed_checks_passed: usize,
    pub per_ordering: Vec<OrderingOutcome>,
}

impl EquivalenceReport {
    pub fn consistent(&self) -> bool {
        self.subiso_answer == self.psp_answer
            && self.subiso_answer == self.xcover_answer
            && self.subiso_answer == self.vecsum_answer
    }
}

struct OrderingRun {
    outcome: OrderingOutcome,
    lift_checks: usize,
}

fn run_ordering(
    si: &SubIsoInstance,
    pattern: &OrderedPattern,
    mode: GadgetMode,
    budget: &SolveBudget,
) -> Result<OrderingRun> {
    let red = build_psp_instance(si, pattern, mode)?;
    let mut lift_checks = 0;

    let (psp_found, psp_w) = solve_set_packing_bnb(&red.inst, budget)?;
    if let Some(w) = &psp_w {
        lift_and_verify(si, &red, w)?;
        lift_checks += 1;
    }
    let (xcover_found, cov_w) = solve_exact_cover_bnb(&red.xcover(), budget)?;
    if let Some(w) = &cov_w {
        if !is_exact_cover(&red.inst.family, w)? {
            return Err(Error::Equivalence(
                "cover solver returned a non-cover".into(),
            ));
        }
        lift_and_verify(si, &red, w)?;
        lift_checks += 1;
    }
    let vs = vectorize_instance(&red)?;
    let (vecsum_found, vec_sol) = solve_vector_sum(&vs, budget)?;
    if let Some(indices) = vec_sol {
        // a vector solution must be an exact cover of the set instance
        let w = PackingWitness::new(indices)?;
        if !is_exact_cover(&red.inst.family, &w)? {
            return Err(Error::Equivalence(
                "vector-sum solution is not an exact cover of the originating instance".into(),
            ));
        }
        lift_and_verify(si, &red, &w)?;
        lift_checks += 1;
    }
    Ok(OrderingRun {
        outcome: OrderingOutcome {
            ordering: pattern.order().to_vec(),
            psp_found,
            xcover_found,
            vecsum_found,
        },
        lift_checks,
    })
}

/// Runs all four decision procedures and cross-checks every witness. With
/// `full`, every ordering is solved (in parallel); otherwise orderings are
/// processed in sequence and processing stops once all three reduction
/// answers are positive. Any disagreement is an error carrying the inputs.
pub fn verify_equivalence(
    si: &SubIsoInstance,
    mode: GadgetMode,
    budget: &SolveBudget,
    full: bool,
) -> Result<EquivalenceReport> {
    let subiso = solve_subiso_bruteforce(si)?;
    let mut embed_checks = 0;
    if let Some(phi) = &subiso {
        // the yes direction: the found map embeds as a packing that covers
        let pattern = sort_pattern_for(si, phi)?;
        let red = build_psp_instance(si, &pattern, mode)?;
        let w = embed_isomorphism_as_packing(&red, phi)?;
        if !is_packing(&red.inst.family, &w)? || !is_exact_cover(&red.inst.family, &w)? {
            return Err(Error::Equivalence(format!(
                "embedded witness for map {:?} is not a packing-and-cover (G edges {:?}, H edges {:?})",
                phi.map(),
                si.g.edges(),
                si.h.edges()
            )));
        }
        embed_checks += 1;
    }

    let runs: Vec<OrderingRun> = if full {
        let patterns: Vec<OrderedPattern> = enumerate_orderings(&si.h)?.collect();
        patterns
            .par_iter()
            .map(|p| run_ordering(si, p, mode, budget))
            .collect::<Result<_>>()?
    } else {
        let mut out = Vec::new();
        for p in enumerate_orderings(&si.h)? {
            let run = run_ordering(si, &p, mode, budget)?;
            let done = run.outcome.psp_found
                && run.outcome.xcover_found
                && run.outcome.vecsum_found;
            out.push(run);
            if done {
                break;
            }
        }
        out
    };

    let report = EquivalenceReport {
        n: si.g.n(),
        g_edges: si.g.edges().to_vec(),
        h_edges: si.h.edges().to_vec(),
        mode,
        subiso_answer: subiso.is_some(),
        psp_answer: runs.iter().any(|r| r.outcome.psp_found),
        xcover_answer: runs.iter().any(|r| r.outcome.xcover_found),
        vecsum_answer: runs.iter().any(|r| r.outcome.vecsum_found),
        orderings_checked: runs.len(),
        lift_checks_passed: runs.iter().map(|r| r.lift_checks).sum(),
        embed_checks_passed: embed_checks,
        per_ordering: runs.into_iter().map(|r| r.outcome).collect(),
    };
    if !report.consistent() {
        return Err(Error::Equivalence(format!(
            "answers disagree (subiso {}, psp {}, xcover {}, vecsum {}) on G edges {:?}, H edges {:?}, mode {}",
            report.subiso_answer,
            report.psp_answer,
            report.xcover_answer,
            report.vecsum_answer,
            report.g_edges,
            report.h_edges,
            report.mode
        )));
    }
    Ok(report)
}

/// Maximum host size for the exhaustive all-graphs sweep (2^C(5,2) = 1024
/// host graphs).
pub const MAX_SWEEP_N: usize = 5;

/// Runs [`verify_equivalence`] on every labeled graph over `n` vertices, in
/// ascending order of the edge-subset encoding. Graphs are processed in
/// parallel; the report order is deterministic.
pub fn sweep_exhaustive(
    n: usize,
    h: &Graph,
    mode: GadgetMode,
    budget: &SolveBudget,
    full: bool,
) -> Result<Vec<EquivalenceReport>> {
    if n > MAX_SWEEP_N {
        return Err(Error::Budget(format!(
            "exhaustive sweep capped at {MAX_SWEEP_N} host vertices, got {n}"
        )));
    }
    let all_edges: Vec<(usize, usize)> = Graph::complete(n).edges().to_vec();
    let masks: Vec<u64> = (0..1u64 << all_edges.len()).collect();
    masks
        .par_iter()
        .map(|&mask| {
            let edges: Vec<(usize, usize)> = all_edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges)?;
            let si = SubIsoInstance::new(g, h.clone())?;
            verify_equivalence(&si, mode, budget, full)
        })
        .collect()
}

/// Instance size measurements for host cliques of growing order; pure
/// construction, no solving.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompactnessRecord {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub n_elems: usize,
    pub r: usize,
    pub universe_size: usize,
    pub set_count: usize,
    /// universe_size / (r * log2(set_count)) — the compactness figure.
    pub ratio: f64,
}

// hosts this small are cheap enough to actually construct, so the closed
// forms are cross-checked against a real build
const COMPACTNESS_BUILD_CHECK_N: usize = 12;

pub fn compactness_sweep(
    n_values: &[usize],
    h: &Graph,
    mode: GadgetMode,
) -> Result<Vec<CompactnessRecord>> {
    let pattern = OrderedPattern::identity(h.clone())?;
    n_values
        .iter()
        .map(|&n| {
            let (l, k) = (h.n(), h.edge_count());
            let m = n * n.saturating_sub(1) / 2;
            let n_elems = crate::reduction::base_gadget_size(n, mode);
            let universe_size = (l + 2 * k) * n_elems;
            let r = k + l;
            let set_count = l * n * n.saturating_sub(1) / 2 + 2 * m * k;
            if n <= COMPACTNESS_BUILD_CHECK_N {
                let si = SubIsoInstance::new(Graph::complete(n), h.clone())?;
                let red = build_psp_instance(&si, &pattern, mode)?;
                if red.inst.family.universe_size() != universe_size
                    || red.inst.family.len() != set_count
                    || red.inst.r != r
                {
                    return Err(Error::Internal(format!(
                        "closed-form sizes disagree with a built instance at n = {n}"
                    )));
                }
            }
            Ok(CompactnessRecord {
                n,
                m,
                k,
                l,
                n_elems,
                r,
                universe_size,
                set_count,
                ratio: universe_size as f64 / (r as f64 * (set_count as f64).log2()),
            })
        })
        .collect()
}
