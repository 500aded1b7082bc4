//! Branch-and-bound decision solver for set packing on universes beyond the
//! mask-table cap.

use crate::bitset::BitSet;
use crate::error::Result;
use crate::setsystem::{PackingWitness, PspInstance};

use super::{NodeMeter, SolveBudget};

/// Is there a packing of `r` pairwise-disjoint sets? Depth-first over sets
/// in index order; at each node the candidate list is filtered to sets
/// disjoint from the current union, and a branch dies as soon as chosen +
/// remaining candidates cannot reach `r`. Exhaustive, hence exact.
pub fn solve_set_packing_bnb(
    inst: &PspInstance,
    budget: &SolveBudget,
) -> Result<(bool, Option<PackingWitness>)> {
    if inst.r == 0 {
        return Ok((true, Some(PackingWitness::empty())));
    }
    let sets = inst.family.sets();
    let cands: Vec<usize> = (0..sets.len()).collect();
    let mut meter = NodeMeter::new(budget);
    let mut union = BitSet::new(inst.family.universe_size());
    let mut chosen = Vec::with_capacity(inst.r);
    if dfs(sets, &cands, inst.r, &mut union, &mut chosen, &mut meter)? {
        let w = PackingWitness::new(chosen)?;
        Ok((true, Some(w)))
    } else {
        Ok((false, None))
    }
}

fn dfs(
    sets: &[BitSet],
    cands: &[usize],
    r: usize,
    union: &mut BitSet,
    chosen: &mut Vec<usize>,
    meter: &mut NodeMeter,
) -> Result<bool> {
    meter.tick("set-packing branch and bound")?;
    if chosen.len() == r {
        return Ok(true);
    }
    let need = r - chosen.len();
    for (pos, &i) in cands.iter().enumerate() {
        if cands.len() - pos < need {
            break;
        }
        union.union_inplace(&sets[i]);
        chosen.push(i);
        let rest: Vec<usize> = cands[pos + 1..]
            .iter()
            .copied()
            .filter(|&j| union.is_disjoint(&sets[j]))
            .collect();
        if rest.len() >= need - 1 && dfs(sets, &rest, r, union, chosen, meter)? {
            return Ok(true);
        }
        chosen.pop();
        union.xor_inplace(&sets[i]);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setsystem::{is_packing, SetFamily};
    use crate::solvers::solve_set_packing_dp;

    fn family(width: usize, sets: &[&[usize]]) -> SetFamily {
        let sets = sets
            .iter()
            .map(|s| {
                let zero: Vec<usize> = s.iter().map(|e| e - 1).collect();
                BitSet::from_elems(width, &zero).unwrap()
            })
            .collect();
        SetFamily::from_sets(width, sets).unwrap()
    }

    #[test]
    fn r_zero_is_trivially_yes() {
        let inst = PspInstance::new(SetFamily::new(4), 0).unwrap();
        let (found, w) = solve_set_packing_bnb(&inst, &SolveBudget::default()).unwrap();
        assert!(found);
        assert!(w.unwrap().is_empty());
    }

    #[test]
    fn decision_examples() {
        let fam = family(3, &[&[1, 2], &[2, 3], &[3], &[1]]);
        // max packing is 2, e.g. {1,2} with {3}
        for (r, expect) in [(1, true), (2, true), (3, false), (4, false)] {
            let inst = PspInstance::new(fam.clone(), r).unwrap();
            let (found, w) = solve_set_packing_bnb(&inst, &SolveBudget::default()).unwrap();
            assert_eq!(found, expect, "r={r}");
            if let Some(w) = w {
                assert_eq!(w.len(), r);
                assert!(is_packing(&fam, &w).unwrap());
            }
        }
    }

    #[test]
    fn agrees_with_dp_on_hand_instances() {
        let fams = [
            family(4, &[&[1], &[2], &[3], &[4], &[1, 2, 3, 4]]),
            family(5, &[&[1, 3], &[2, 4], &[5], &[1, 2], &[3, 4, 5], &[]]),
            family(2, &[&[], &[], &[1, 2]]),
        ];
        for fam in fams {
            let (max, _) = solve_set_packing_dp(
                &PspInstance::new(fam.clone(), 0).unwrap(),
                &SolveBudget::default(),
            )
            .unwrap();
            for r in 0..=fam.len() {
                let inst = PspInstance::new(fam.clone(), r).unwrap();
                let (found, _) = solve_set_packing_bnb(&inst, &SolveBudget::default()).unwrap();
                assert_eq!(found, r <= max, "r={r} max={max}");
            }
        }
    }
}
