//! Vertex orderings of the pattern graph and the neighbor ranks they induce.

use crate::error::{Error, Result};
use crate::graph::{Graph, Isomorphism};

/// Cap on pattern sizes for full ordering enumeration (8! = 40320 orderings).
pub const DEFAULT_MAX_ORDERING_L: usize = 8;

/// A pattern graph together with a vertex ordering `p`. Position `i`
/// (1-indexed) holds the vertex `order[i-1]`; `pos` is the inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedPattern {
    h: Graph,
    order: Vec<usize>,
    pos: Vec<usize>,
    // per position: positions of the vertex's neighbors, ascending
    nbr_pos: Vec<Vec<usize>>,
}

impl OrderedPattern {
    pub fn new(h: Graph, order: Vec<usize>) -> Result<Self> {
        let l = h.n();
        if order.len() != l {
            return Err(Error::InvalidArgument(format!(
                "ordering has length {} for {} vertices",
                order.len(),
                l
            )));
        }
        let mut pos = vec![0usize; l + 1];
        for (idx, &v) in order.iter().enumerate() {
            if v < 1 || v > l || pos[v] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "ordering {order:?} is not a permutation of 1..={l}"
                )));
            }
            pos[v] = idx + 1;
        }
        let nbr_pos = (1..=l)
            .map(|i| {
                let v = order[i - 1];
                let mut ps: Vec<usize> = h.neighbors(v).iter().map(|&w| pos[w]).collect();
                ps.sort_unstable();
                ps
            })
            .collect();
        Ok(OrderedPattern {
            h,
            order,
            pos,
            nbr_pos,
        })
    }

    pub fn identity(h: Graph) -> Result<Self> {
        let order = (1..=h.n()).collect();
        Self::new(h, order)
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Vertex at 1-indexed position `i`.
    pub fn vertex_at(&self, i: usize) -> usize {
        self.order[i - 1]
    }

    /// 1-indexed position of vertex `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Positions of the neighbors of the vertex at position `i`, ascending.
    pub fn neighbor_positions(&self, i: usize) -> &[usize] {
        &self.nbr_pos[i - 1]
    }

    pub fn degree_at(&self, i: usize) -> usize {
        self.nbr_pos[i - 1].len()
    }

    /// Rank (1-indexed) of the neighbor at position `j` among the neighbors
    /// of the vertex at position `i`, under the ordering-induced order.
    pub fn neighbor_rank(&self, i: usize, j: usize) -> Option<usize> {
        self.nbr_pos[i - 1].binary_search(&j).ok().map(|x| x + 1)
    }

    /// Cyclic successor position.
    pub fn succ(&self, i: usize) -> usize {
        if i == self.len() {
            1
        } else {
            i + 1
        }
    }

    /// Pattern edges as position pairs `(i, j)` with `i < j`, ascending.
    pub fn edge_positions(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .h
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.pos[u], self.pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Lazily yields all `l!` orderings in lexicographic order of the position
/// sequence, starting from the identity.
pub struct Orderings {
    h: Graph,
    cur: Option<Vec<usize>>,
}

impl Iterator for Orderings {
    type Item = OrderedPattern;

    fn next(&mut self) -> Option<OrderedPattern> {
        let cur = self.cur.take()?;
        let pat = OrderedPattern::new(self.h.clone(), cur.clone())
            .expect("generated permutation is valid");
        self.cur = next_permutation(cur);
        Some(pat)
    }
}

fn next_permutation(mut v: Vec<usize>) -> Option<Vec<usize>> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// Streams every ordering of the pattern's vertices.
pub fn enumerate_orderings(h: &Graph) -> Result<Orderings> {
    if h.n() > DEFAULT_MAX_ORDERING_L {
        return Err(Error::Budget(format!(
            "pattern has {} vertices; ordering enumeration capped at {}",
            h.n(),
            DEFAULT_MAX_ORDERING_L
        )));
    }
    Ok(Orderings {
        h: h.clone(),
        cur: Some((1..=h.n()).collect()),
    })
}

/// The ordering under which the images of `phi` are strictly increasing.
pub fn sort_pattern_for(
    inst: &crate::graph::SubIsoInstance,
    phi: &Isomorphism,
) -> Result<OrderedPattern> {
    if phi.map().len() != inst.h.n() {
        return Err(Error::InvalidArgument(format!(
            "map has length {} for pattern with {} vertices",
            phi.map().len(),
            inst.h.n()
        )));
    }
    if !phi.is_injective() {
        return Err(Error::InvalidArgument("map is not injective".into()));
    }
    let mut order: Vec<usize> = (1..=inst.h.n()).collect();
    order.sort_by_key(|&v| phi.image(v));
    OrderedPattern::new(inst.h.clone(), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SubIsoInstance;

    #[test]
    fn ordering_counts() {
        let k3 = Graph::complete(3);
        assert_eq!(enumerate_orderings(&k3).unwrap().count(), 6);
        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(enumerate_orderings(&edge).unwrap().count(), 2);
        let k4 = Graph::complete(4);
        let pats: Vec<_> = enumerate_orderings(&k4).unwrap().collect();
        assert_eq!(pats.len(), 24);
        assert_eq!(pats[0].order(), &[1, 2, 3, 4]);
        assert_eq!(pats[23].order(), &[4, 3, 2, 1]);
    }

    #[test]
    fn ordering_cap() {
        let big = Graph::complete(9);
        assert!(matches!(
            enumerate_orderings(&big),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn sort_pattern_examples() {
        let g = Graph::complete(3);
        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        let inst = SubIsoInstance::new(g.clone(), edge).unwrap();

        // phi = (v1 -> 3, v2 -> 1): v2 comes first
        let pat = sort_pattern_for(&inst, &Isomorphism::from_map(vec![3, 1])).unwrap();
        assert_eq!(pat.order(), &[2, 1]);
        assert_eq!(pat.position_of(2), 1);
        assert_eq!(pat.position_of(1), 2);

        let inst3 = SubIsoInstance::new(g.clone(), Graph::complete(3)).unwrap();
        let pat = sort_pattern_for(&inst3, &Isomorphism::from_map(vec![1, 2, 3])).unwrap();
        assert_eq!(pat.order(), &[1, 2, 3]);

        let edge_inst = SubIsoInstance::new(g, Graph::new(2, &[(1, 2)]).unwrap()).unwrap();
        assert!(sort_pattern_for(&edge_inst, &Isomorphism::from_map(vec![2, 2])).is_err());
    }

    #[test]
    fn neighbor_ranks_follow_ordering() {
        // P3 as 1-2-3, ordering [3,2,1]: position of 3 is 1, of 2 is 2, of 1 is 3
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let pat = OrderedPattern::new(p3, vec![3, 2, 1]).unwrap();
        // vertex at position 2 is 2, its neighbors are 1 (pos 3) and 3 (pos 1)
        assert_eq!(pat.neighbor_positions(2), &[1, 3]);
        assert_eq!(pat.neighbor_rank(2, 1), Some(1));
        assert_eq!(pat.neighbor_rank(2, 3), Some(2));
        assert_eq!(pat.neighbor_rank(2, 2), None);
    }
}
