//! Exact solvers: the 2^|U| mask dynamic program and BFS exact-cover search
//! for small universes, branch-and-bound counterparts for large ones, a
//! GF(2) vector-sum enumerator, and the brute-force subgraph isomorphism
//! oracle. All solvers are exhaustive and deterministic.

mod bnb;
mod cover;
mod dp;
mod reference;
mod subiso;
mod vecsum;

pub use bnb::solve_set_packing_bnb;
pub use cover::{solve_exact_cover_bfs, solve_exact_cover_bnb};
pub use dp::{packing_union_table, solve_set_packing_dp};
pub use reference::{build_packing_dag, dag_longest_paths, PackingDag};
pub use subiso::solve_subiso_bruteforce;
pub use vecsum::{solve_vector_sum, VectorSumInstance};

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Per-call resource limits. Exceeding one aborts the call with a budget
/// error rather than returning a wrong answer.
#[derive(Debug, Clone)]
pub struct SolveBudget {
    /// Universe sizes above this are rejected by the mask-table solvers.
    pub max_universe_for_dp: usize,
    /// Node cap for the branching solvers.
    pub max_subsets_enumerated: u64,
    /// Cap on `r` for the vector-sum enumerator.
    pub max_vector_sum_r: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_universe_for_dp: 25,
            max_subsets_enumerated: 500_000_000,
            max_vector_sum_r: 8,
            time_limit: None,
        }
    }
}

/// Node counter shared by the branching solvers; checks the wall clock only
/// every few thousand nodes to keep the hot loop cheap.
pub(crate) struct NodeMeter {
    nodes: u64,
    cap: u64,
    deadline: Option<Instant>,
}

impl NodeMeter {
    pub(crate) fn new(budget: &SolveBudget) -> Self {
        NodeMeter {
            nodes: 0,
            cap: budget.max_subsets_enumerated,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
        }
    }

    pub(crate) fn tick(&mut self, what: &str) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::Budget(format!(
                "{what}: explored {} nodes, cap {}",
                self.nodes, self.cap
            )));
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::Budget(format!(
                        "{what}: time limit hit after {} nodes",
                        self.nodes
                    )));
                }
            }
        }
        Ok(())
    }
}
