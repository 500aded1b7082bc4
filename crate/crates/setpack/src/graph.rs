//! Simple undirected graphs with 1-indexed vertices, the subgraph
//! isomorphism instance type, and candidate vertex maps.

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `1..=n`. Edges are stored normalized
/// `(u, v)` with `u < v` and sorted, so two graphs with the same edge set
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if u < 1 || v < 1 || u > n || v > n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) outside vertex range 1..={n}"
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("duplicate edge".into()));
        }
        let mut adjacency = vec![Vec::new(); n + 1];
        for &(u, v) in &norm {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adjacency,
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }
}

/// A subgraph isomorphism question: does `g` contain a (not necessarily
/// induced) copy of the pattern `h`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubIsoInstance {
    pub g: Graph,
    pub h: Graph,
}

impl SubIsoInstance {
    pub fn new(g: Graph, h: Graph) -> Result<Self> {
        if h.edge_count() == 0 {
            return Err(Error::InvalidArgument(
                "pattern graph must have at least one edge".into(),
            ));
        }
        if let Some(v) = (1..=h.n()).find(|&v| h.degree(v) == 0) {
            return Err(Error::InvalidArgument(format!(
                "pattern vertex {v} is isolated"
            )));
        }
        Ok(SubIsoInstance { g, h })
    }
}

/// A candidate map from pattern vertices to host vertices: `map[i]` is the
/// image of pattern vertex `i + 1`. Injectivity is checked by consumers, so
/// deliberately non-injective candidates can be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    map: Vec<usize>,
}

impl Isomorphism {
    pub fn from_map(map: Vec<usize>) -> Self {
        Isomorphism { map }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v - 1]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// True iff `phi` maps every pattern vertex to a distinct host vertex and
/// every pattern edge to a host edge.
pub fn is_injective_homomorphism(inst: &SubIsoInstance, phi: &Isomorphism) -> bool {
    if phi.map().len() != inst.h.n() {
        return false;
    }
    if phi.map().iter().any(|&a| a < 1 || a > inst.g.n()) {
        return false;
    }
    if !phi.is_injective() {
        return false;
    }
    inst.h
        .edges()
        .iter()
        .all(|&(u, v)| inst.g.has_edge(phi.image(u), phi.image(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::complete(3)
    }

    fn path3() -> Graph {
        Graph::new(3, &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(Graph::new(3, &[(1, 1)]).is_err());
        assert!(Graph::new(3, &[(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(2, &[(1, 3)]).is_err());
    }

    #[test]
    fn rejects_isolated_pattern_vertices() {
        let h = Graph::new(3, &[(1, 2)]).unwrap();
        assert!(SubIsoInstance::new(k3(), h).is_err());
    }

    #[test]
    fn homomorphism_examples() {
        let inst = SubIsoInstance::new(k3(), k3()).unwrap();
        assert!(is_injective_homomorphism(
            &inst,
            &Isomorphism::from_map(vec![1, 2, 3])
        ));

        let inst2 = SubIsoInstance::new(path3(), k3()).unwrap();
        for m in [[1, 2, 3], [2, 3, 1], [3, 1, 2]] {
            assert!(!is_injective_homomorphism(
                &inst2,
                &Isomorphism::from_map(m.to_vec())
            ));
        }

        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        let inst3 = SubIsoInstance::new(k3(), edge).unwrap();
        assert!(!is_injective_homomorphism(
            &inst3,
            &Isomorphism::from_map(vec![1, 1])
        ));
    }
}
