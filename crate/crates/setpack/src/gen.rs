//! Seeded instance and graph generators plus the built-in pattern library.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::setsystem::{PspInstance, SetFamily};

/// Random set family: each element lands in each set independently with
/// probability `density`. Deterministic for a fixed seed. The instance's
/// `r` is set to the family size; decision callers narrow it.
pub fn generate_random_psp(
    universe_size: usize,
    set_count: usize,
    density: f64,
    seed: u64,
) -> Result<PspInstance> {
    if !(density > 0.0 && density < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "density must lie strictly between 0 and 1, got {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::with_capacity(set_count);
    for _ in 0..set_count {
        let mut s = BitSet::new(universe_size);
        for e in 0..universe_size {
            if rng.gen_bool(density) {
                s.insert(e);
            }
        }
        sets.push(s);
    }
    PspInstance::new(SetFamily::from_sets(universe_size, sets)?, set_count)
}

/// Erdos–Renyi graph: each of the C(n,2) edges present with probability
/// `edge_prob`. Deterministic for a fixed seed.
pub fn random_graph(n: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidArgument(format!(
            "edge probability must lie in [0, 1], got {edge_prob}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Named small patterns: `edge`, `p3`, `k3`, `c4`, and `paw` (a triangle
/// with a pendant edge).
pub fn builtin_pattern(name: &str) -> Result<Graph> {
    match name {
        "edge" => Graph::new(2, &[(1, 2)]),
        "p3" => Graph::new(3, &[(1, 2), (2, 3)]),
        "k3" => Ok(Graph::complete(3)),
        "c4" => Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]),
        "paw" => Graph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]),
        other => Err(Error::InvalidArgument(format!(
            "unknown pattern '{other}' (expected edge, p3, k3, c4, or paw)"
        ))),
    }
}
