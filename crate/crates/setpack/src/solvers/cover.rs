//! Minimum exact cover by breadth-first search over universe masks, and a
//! branch-and-bound decision solver for universes too large for masks.

use std::collections::VecDeque;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::setsystem::{PackingWitness, XcoverInstance};

use super::{NodeMeter, SolveBudget};

/// Minimum-cardinality exact cover, or `None` if the universe cannot be
/// partitioned by family sets. BFS over masks from the empty set toward the
/// full set, where each edge adds one disjoint set. Expansions only try sets
/// containing the lowest uncovered element: every exact cover can be built
/// in that order, so shortest distances to the full mask are preserved
/// while the branching factor collapses.
pub fn solve_exact_cover_bfs(
    inst: &XcoverInstance,
    budget: &SolveBudget,
) -> Result<Option<(usize, PackingWitness)>> {
    let u = inst.family.universe_size();
    if u > budget.max_universe_for_dp {
        return Err(Error::Budget(format!(
            "universe size {u} exceeds mask-table cap {}; use the branch-and-bound solver",
            budget.max_universe_for_dp
        )));
    }
    let full: u64 = if u == 0 { 0 } else { (1u64 << u) - 1 };
    let masks: Vec<u64> = inst.family.sets().iter().map(|s| s.to_mask()).collect();
    let mut by_elem: Vec<Vec<usize>> = vec![Vec::new(); u];
    for (i, &m) in masks.iter().enumerate() {
        for (e, list) in by_elem.iter_mut().enumerate() {
            if m >> e & 1 == 1 {
                list.push(i);
            }
        }
    }

    // parent[mask] = set index used to reach mask; usize::MAX = unvisited,
    // usize::MAX - 1 = start
    const UNSEEN: usize = usize::MAX;
    const START: usize = usize::MAX - 1;
    let mut parent = vec![UNSEEN; 1usize << u];
    parent[0] = START;
    let mut queue = VecDeque::from([0u64]);
    while let Some(mask) = queue.pop_front() {
        if mask == full {
            break;
        }
        let e = mask.trailing_ones() as usize;
        for &i in &by_elem[e] {
            if mask & masks[i] == 0 {
                let next = mask | masks[i];
                if parent[next as usize] == UNSEEN {
                    parent[next as usize] = i;
                    queue.push_back(next);
                }
            }
        }
    }
    if parent[full as usize] == UNSEEN {
        return Ok(None);
    }
    let mut indices = Vec::new();
    let mut mask = full;
    while parent[mask as usize] != START {
        let i = parent[mask as usize];
        indices.push(i);
        mask ^= masks[i];
    }
    let size = indices.len();
    Ok(Some((size, PackingWitness::new(indices)?)))
}

/// Decision form on arbitrary universes: is there an exact cover of size at
/// most `r`? Branches on which set covers the lowest uncovered element.
pub fn solve_exact_cover_bnb(
    inst: &XcoverInstance,
    budget: &SolveBudget,
) -> Result<(bool, Option<PackingWitness>)> {
    let u = inst.family.universe_size();
    let sets = inst.family.sets();
    let mut by_elem: Vec<Vec<usize>> = vec![Vec::new(); u];
    for (i, s) in sets.iter().enumerate() {
        for e in s.iter() {
            by_elem[e].push(i);
        }
    }
    let max_card = sets.iter().map(|s| s.cardinality()).max().unwrap_or(0);
    let mut meter = NodeMeter::new(budget);
    let mut covered = BitSet::new(u);
    let mut chosen = Vec::new();
    if dfs_cover(
        sets, &by_elem, max_card, inst.r, &mut covered, &mut chosen, &mut meter,
    )? {
        let w = PackingWitness::new(chosen)?;
        Ok((true, Some(w)))
    } else {
        Ok((false, None))
    }
}

fn dfs_cover(
    sets: &[BitSet],
    by_elem: &[Vec<usize>],
    max_card: usize,
    r: usize,
    covered: &mut BitSet,
    chosen: &mut Vec<usize>,
    meter: &mut NodeMeter,
) -> Result<bool> {
    meter.tick("exact-cover branch and bound")?;
    let uncovered = covered.width() - covered.cardinality();
    if uncovered == 0 {
        return Ok(true);
    }
    let slots = r - chosen.len();
    if slots == 0 || uncovered > slots * max_card {
        return Ok(false);
    }
    let e = covered
        .complement()
        .min_elem()
        .expect("uncovered element exists");
    for &i in &by_elem[e] {
        if covered.is_disjoint(&sets[i]) {
            covered.union_inplace(&sets[i]);
            chosen.push(i);
            if dfs_cover(sets, by_elem, max_card, r, covered, chosen, meter)? {
                return Ok(true);
            }
            chosen.pop();
            covered.xor_inplace(&sets[i]);
        }
    }
    Ok(false)
}
