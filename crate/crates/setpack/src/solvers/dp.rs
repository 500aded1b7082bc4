//! Maximum set packing by dynamic programming over all 2^|U| universe
//! subsets. Equivalent to longest path in the subset DAG (see
//! [`super::reference`]) but without materializing edges.

use crate::error::{Error, Result};
use crate::setsystem::{PackingWitness, PspInstance, SetFamily};

use super::SolveBudget;

/// `best[mask]` = largest number of pairwise-disjoint nonempty family sets
/// whose union is exactly `mask`, or -1 if no selection realizes `mask`.
/// Empty sets never change a union, so they are excluded here and accounted
/// for by callers.
pub fn packing_union_table(family: &SetFamily) -> Result<Vec<i8>> {
    let u = family.universe_size();
    if u > 60 {
        return Err(Error::Budget(format!(
            "mask table needs 2^{u} entries; universe too large"
        )));
    }
    let masks: Vec<u64> = family
        .sets()
        .iter()
        .map(|s| s.to_mask())
        .filter(|&m| m != 0)
        .collect();
    let mut best = vec![-1i8; 1usize << u];
    best[0] = 0;
    for mask in 0..best.len() {
        let cur = best[mask];
        if cur < 0 {
            continue;
        }
        for &s in &masks {
            if mask as u64 & s == 0 {
                let next = mask | s as usize;
                if best[next] < cur + 1 {
                    best[next] = cur + 1;
                }
            }
        }
    }
    Ok(best)
}

// in place: out[mask] = max over submasks of mask of table[submask]
fn max_over_submasks(mut table: Vec<i8>, width: usize) -> Vec<i8> {
    for bit in 0..width {
        let step = 1usize << bit;
        for mask in 0..table.len() {
            if mask & step != 0 {
                table[mask] = table[mask].max(table[mask ^ step]);
            }
        }
    }
    table
}

/// Exact maximum packing size with a witness attaining it. Among all
/// maximum packings the lexicographically smallest index set is returned.
pub fn solve_set_packing_dp(
    inst: &PspInstance,
    budget: &SolveBudget,
) -> Result<(usize, PackingWitness)> {
    let u = inst.family.universe_size();
    if u > budget.max_universe_for_dp {
        return Err(Error::Budget(format!(
            "universe size {u} exceeds mask-table cap {}; use the branch-and-bound solver",
            budget.max_universe_for_dp
        )));
    }
    let best = packing_union_table(&inst.family)?;
    let within = max_over_submasks(best, u);
    let full: u64 = if u == 0 { 0 } else { (1u64 << u) - 1 };
    let nonempty_max = within[full as usize] as usize;

    // lex-smallest witness: every maximum packing contains every empty set
    // (adding one never breaks disjointness), and for nonempty sets a greedy
    // scan keeps index i iff a maximum packing extends the current choice
    // with it — any completion avoids skipped indices, since a completion
    // through a skipped j would have justified keeping j at its own turn
    let mut chosen = Vec::new();
    let mut cur: u64 = 0;
    let mut picked = 0usize;
    for (i, s) in inst.family.sets().iter().enumerate() {
        if s.is_empty() {
            chosen.push(i);
            continue;
        }
        if picked == nonempty_max {
            continue;
        }
        let m = s.to_mask();
        if cur & m != 0 {
            continue;
        }
        let rest = full & !(cur | m);
        if picked + 1 + within[rest as usize].max(0) as usize >= nonempty_max {
            chosen.push(i);
            cur |= m;
            picked += 1;
        }
    }
    debug_assert_eq!(picked, nonempty_max);
    let empties = chosen.len() - picked;
    Ok((nonempty_max + empties, PackingWitness::new(chosen)?))
}
