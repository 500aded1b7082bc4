//! Test-only reference for the mask dynamic program: materialize the subset
//! DAG explicitly (one vertex per universe subset, one edge per disjoint set
//! addition) and compute longest paths from the empty subset. Kept separate
//! so the production solver can be checked against the definitional
//! construction.

use crate::error::{Error, Result};
use crate::setsystem::SetFamily;

/// Explicit subset DAG. Vertex `mask` is the universe subset with that
/// characteristic mask; edge `(from, to, i)` exists when set `i` is
/// nonempty, disjoint from `from`, and `from | set_i == to`.
#[derive(Debug, Clone)]
pub struct PackingDag {
    pub n_masks: usize,
    pub edges: Vec<(u32, u32, u32)>,
}

const MAX_DAG_UNIVERSE: usize = 20;

pub fn build_packing_dag(family: &SetFamily) -> Result<PackingDag> {
    let u = family.universe_size();
    if u > MAX_DAG_UNIVERSE {
        return Err(Error::Budget(format!(
            "explicit DAG capped at universe size {MAX_DAG_UNIVERSE}, got {u}"
        )));
    }
    let masks: Vec<u64> = family
        .sets()
        .iter()
        .map(|s| s.to_mask())
        .filter(|&m| m != 0)
        .collect();
    let n_masks = 1usize << u;
    let mut edges = Vec::new();
    for from in 0..n_masks as u64 {
        for (i, &m) in masks.iter().enumerate() {
            if from & m == 0 {
                edges.push((from as u32, (from | m) as u32, i as u32));
            }
        }
    }
    Ok(PackingDag { n_masks, edges })
}

/// Longest path length from the empty-subset vertex to every vertex;
/// -1 marks unreachable. Edges always go to a numerically larger mask, and
/// they are generated in ascending source order, so one pass relaxes the
/// whole DAG.
pub fn dag_longest_paths(dag: &PackingDag) -> Vec<i32> {
    let mut dist = vec![-1i32; dag.n_masks];
    dist[0] = 0;
    for &(from, to, _) in &dag.edges {
        let d = dist[from as usize];
        if d >= 0 && dist[to as usize] < d + 1 {
            dist[to as usize] = d + 1;
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::BitSet;
    use crate::solvers::packing_union_table;

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

    fn assert_matches_dp(fam: &SetFamily) {
        let dag = build_packing_dag(fam).unwrap();
        let dist = dag_longest_paths(&dag);
        let table = packing_union_table(fam).unwrap();
        assert_eq!(dist.len(), table.len());
        for (mask, (&d, &t)) in dist.iter().zip(&table).enumerate() {
            assert_eq!(d, t as i32, "mask {mask:b}");
        }
    }

    #[test]
    fn dag_equals_mask_table_on_hand_instances() {
        assert_matches_dp(&family(2, &[&[1], &[2], &[1, 2]]));
        assert_matches_dp(&family(4, &[&[1, 2], &[3], &[2, 3], &[4], &[1, 4]]));
        assert_matches_dp(&family(3, &[&[], &[1, 2, 3]]));
        assert_matches_dp(&family(1, &[]));
    }

    #[test]
    fn edge_count_is_per_disjoint_pair() {
        // {1} is disjoint from 2 of the 4 masks over a 2-element universe
        let dag = build_packing_dag(&family(2, &[&[1]])).unwrap();
        assert_eq!(dag.edges.len(), 2);
    }

    #[test]
    fn dag_universe_cap() {
        assert!(matches!(
            build_packing_dag(&SetFamily::new(21)),
            Err(Error::Budget(_))
        ));
    }
}
