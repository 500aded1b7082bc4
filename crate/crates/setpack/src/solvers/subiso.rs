//! Ground-truth subgraph isomorphism oracle: plain backtracking over
//! injective maps, small scales only.

use crate::error::{Error, Result};
use crate::graph::{is_injective_homomorphism, Isomorphism, SubIsoInstance};

const MAX_PATTERN: usize = 8;
const MAX_HOST: usize = 12;

/// First injective homomorphism from the pattern into the host in
/// lexicographic order of the image tuple, or `None`. Exhaustive.
pub fn solve_subiso_bruteforce(inst: &SubIsoInstance) -> Result<Option<Isomorphism>> {
    let l = inst.h.n();
    let n = inst.g.n();
    if l > MAX_PATTERN || n > MAX_HOST {
        return Err(Error::Budget(format!(
            "oracle scale is pattern <= {MAX_PATTERN}, host <= {MAX_HOST}; got {l} and {n}"
        )));
    }
    let mut map = Vec::with_capacity(l);
    let mut used = vec![false; n + 1];
    if extend(inst, &mut map, &mut used) {
        let phi = Isomorphism::from_map(map);
        debug_assert!(is_injective_homomorphism(inst, &phi));
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

fn extend(inst: &SubIsoInstance, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    let v = map.len() + 1; // pattern vertex to place next
    if v > inst.h.n() {
        return true;
    }
    'image: for a in 1..=inst.g.n() {
        if used[a] {
            continue;
        }
        for &w in inst.h.neighbors(v) {
            if w < v && !inst.g.has_edge(map[w - 1], a) {
                continue 'image;
            }
        }
        map.push(a);
        used[a] = true;
        if extend(inst, map, used) {
            return true;
        }
        used[a] = false;
        map.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k3_in_k3_is_identity() {
        let inst = SubIsoInstance::new(Graph::complete(3), Graph::complete(3)).unwrap();
        let phi = solve_subiso_bruteforce(&inst).unwrap().unwrap();
        assert_eq!(phi.map(), &[1, 2, 3]);
    }

    #[test]
    fn p3_in_c4() {
        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let inst = SubIsoInstance::new(c4, p3).unwrap();
        let phi = solve_subiso_bruteforce(&inst).unwrap().unwrap();
        assert!(is_injective_homomorphism(&inst, &phi));
    }

    #[test]
    fn no_triangle_in_path() {
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        let inst = SubIsoInstance::new(p3, Graph::complete(3)).unwrap();
        assert!(solve_subiso_bruteforce(&inst).unwrap().is_none());
    }

    #[test]
    fn scale_guard() {
        let inst = SubIsoInstance::new(Graph::complete(13), Graph::complete(3)).unwrap();
        assert!(matches!(
            solve_subiso_bruteforce(&inst),
            Err(Error::Budget(_))
        ));
    }
}
