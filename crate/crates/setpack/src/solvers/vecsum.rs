//! GF(2) vector-sum decision: do at most `r` of the given vectors XOR to
//! the target?

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::setsystem::SetLabel;

use super::{NodeMeter, SolveBudget};

/// Vectors over GF(2)^dim with an optional provenance label per vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSumInstance {
    pub dim: usize,
    pub vectors: Vec<BitSet>,
    pub labels: Option<Vec<SetLabel>>,
    pub target: BitSet,
    pub r: usize,
}

impl VectorSumInstance {
    pub fn new(
        dim: usize,
        vectors: Vec<BitSet>,
        labels: Option<Vec<SetLabel>>,
        target: BitSet,
        r: usize,
    ) -> Result<Self> {
        if target.width() != dim {
            return Err(Error::InvalidArgument(format!(
                "target has width {} but dim is {dim}",
                target.width()
            )));
        }
        if let Some(bad) = vectors.iter().position(|v| v.width() != dim) {
            return Err(Error::InvalidArgument(format!(
                "vector {bad} has width {} but dim is {dim}",
                vectors[bad].width()
            )));
        }
        if let Some(labels) = &labels {
            if labels.len() != vectors.len() {
                return Err(Error::InvalidArgument(format!(
                    "{} labels for {} vectors",
                    labels.len(),
                    vectors.len()
                )));
            }
        }
        Ok(VectorSumInstance {
            dim,
            vectors,
            labels,
            target,
            r,
        })
    }
}

/// True with an index set iff some subset of at most `r` vectors sums to
/// the target. Branches on the lowest still-unsatisfied coordinate: some
/// chosen vector must have that bit, and trying each such candidate while
/// banning the ones already tried at this level enumerates every subset
/// exactly once. A branch dies when the residual has more set bits than the
/// remaining picks could ever clear.
pub fn solve_vector_sum(
    inst: &VectorSumInstance,
    budget: &SolveBudget,
) -> Result<(bool, Option<Vec<usize>>)> {
    if inst.r > budget.max_vector_sum_r {
        return Err(Error::Budget(format!(
            "target subset size {} exceeds enumerator cap {}",
            inst.r, budget.max_vector_sum_r
        )));
    }
    let mut by_bit: Vec<Vec<usize>> = vec![Vec::new(); inst.dim];
    for (i, v) in inst.vectors.iter().enumerate() {
        for b in v.iter() {
            by_bit[b].push(i);
        }
    }
    let max_pop = inst
        .vectors
        .iter()
        .map(|v| v.cardinality())
        .max()
        .unwrap_or(0);
    let mut meter = NodeMeter::new(budget);
    let mut residual = inst.target.clone();
    let mut banned = vec![false; inst.vectors.len()];
    let mut chosen = Vec::new();
    if dfs(
        &inst.vectors,
        &by_bit,
        max_pop,
        inst.r,
        &mut residual,
        &mut banned,
        &mut chosen,
        &mut meter,
    )? {
        chosen.sort_unstable();
        Ok((true, Some(chosen)))
    } else {
        Ok((false, None))
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    vectors: &[BitSet],
    by_bit: &[Vec<usize>],
    max_pop: usize,
    r: usize,
    residual: &mut BitSet,
    banned: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    meter: &mut NodeMeter,
) -> Result<bool> {
    meter.tick("vector-sum enumeration")?;
    if residual.is_empty() {
        return Ok(true);
    }
    let picks_left = r - chosen.len();
    if picks_left == 0 || residual.cardinality() > picks_left * max_pop {
        return Ok(false);
    }
    let b = residual.min_elem().expect("residual is nonempty");
    let cands: Vec<usize> = by_bit[b].iter().copied().filter(|&i| !banned[i]).collect();
    for &i in &cands {
        // branch: i is in the solution, and no candidate tried before it is
        banned[i] = true;
        residual.xor_inplace(&vectors[i]);
        chosen.push(i);
        if dfs(
            vectors, by_bit, max_pop, r, residual, banned, chosen, meter,
        )? {
            return Ok(true);
        }
        chosen.pop();
        residual.xor_inplace(&vectors[i]);
    }
    for &i in &cands {
        banned[i] = false;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(dim: usize, rows: &[&[usize]]) -> Vec<BitSet> {
        rows.iter()
            .map(|r| BitSet::from_elems(dim, r).unwrap())
            .collect()
    }

    #[test]
    fn basis_or_single_vector() {
        let inst = VectorSumInstance::new(
            3,
            vecs(3, &[&[0], &[1], &[2], &[0, 1, 2]]),
            None,
            BitSet::full(3),
            3,
        )
        .unwrap();
        let (found, sol) = solve_vector_sum(&inst, &SolveBudget::default()).unwrap();
        assert!(found);
        let sol = sol.unwrap();
        assert!(sol == vec![3] || sol == vec![0, 1, 2]);
        let mut acc = BitSet::new(3);
        for &i in &sol {
            acc.xor_inplace(&inst.vectors[i]);
        }
        assert_eq!(acc, inst.target);
    }

    #[test]
    fn zero_target_is_empty_sum() {
        let inst =
            VectorSumInstance::new(3, vecs(3, &[&[0, 1]]), None, BitSet::new(3), 1).unwrap();
        let (found, sol) = solve_vector_sum(&inst, &SolveBudget::default()).unwrap();
        assert!(found);
        assert!(sol.unwrap().is_empty());
    }

    #[test]
    fn infeasible_target() {
        let inst = VectorSumInstance::new(
            3,
            vecs(3, &[&[0, 1], &[1, 2]]),
            None,
            BitSet::full(3),
            2,
        )
        .unwrap();
        let (found, _) = solve_vector_sum(&inst, &SolveBudget::default()).unwrap();
        assert!(!found);
    }

    #[test]
    fn cardinality_bound_is_respected() {
        // {0},{1},{2} sum to 111 but only with 3 picks
        let inst =
            VectorSumInstance::new(3, vecs(3, &[&[0], &[1], &[2]]), None, BitSet::full(3), 2)
                .unwrap();
        let (found, _) = solve_vector_sum(&inst, &SolveBudget::default()).unwrap();
        assert!(!found);
    }

    #[test]
    fn r_above_cap_is_budget_error() {
        let inst = VectorSumInstance::new(1, vecs(1, &[&[0]]), None, BitSet::full(1), 9).unwrap();
        assert!(matches!(
            solve_vector_sum(&inst, &SolveBudget::default()),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn matches_exhaustive_on_small_random() {
        // brute force over all subsets of <= r vectors
        let rows: Vec<&[usize]> = vec![&[0, 2], &[1], &[2, 3], &[0, 1, 3], &[3], &[1, 2]];
        let vectors = vecs(4, &rows);
        for target_mask in 0u64..16 {
            let target = BitSet::from_mask(4, target_mask);
            for r in 0..=3usize {
                let mut expect = false;
                for pick in 0u32..1 << vectors.len() {
                    if (pick.count_ones() as usize) > r {
                        continue;
                    }
                    let mut acc = BitSet::new(4);
                    for (i, v) in vectors.iter().enumerate() {
                        if pick >> i & 1 == 1 {
                            acc.xor_inplace(v);
                        }
                    }
                    if acc == target {
                        expect = true;
                        break;
                    }
                }
                let inst = VectorSumInstance::new(
                    4,
                    vectors.clone(),
                    None,
                    target.clone(),
                    r,
                )
                .unwrap();
                let (found, _) = solve_vector_sum(&inst, &SolveBudget::default()).unwrap();
                assert_eq!(found, expect, "target={target_mask:b} r={r}");
            }
        }
    }
}
