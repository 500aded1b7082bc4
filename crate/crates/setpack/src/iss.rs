//! Compatible intersecting set system pairs: greedy construction over the
//! half-size subsets of an even universe, plus the brute-force property
//! checker used to validate any candidate pair.

use std::collections::HashSet;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Default cap on the gadget universe size. The reduction only ever needs
/// `m_sets >= n`, which even small `N` provides; larger universes are
/// rejected instead of silently allocating hundreds of millions of sets.
pub const DEFAULT_MAX_N: usize = 32;

/// A compatible pair of intersecting set systems over `n_elems` elements.
/// The complement bijection is positional: `s_b[i]` is the complement of
/// `s_a[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IssPair {
    pub n_elems: usize,
    pub s_a: Vec<BitSet>,
    pub s_b: Vec<BitSet>,
}

impl IssPair {
    pub fn m_sets(&self) -> usize {
        self.s_a.len()
    }
}

/// Exact binomial coefficient in wide integers.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Lexicographic enumeration of the k-subsets of `1..=n` as ascending
/// element tuples.
struct Combinations {
    n: usize,
    k: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let cur = (k <= n).then(|| (1..=k).collect());
        Combinations { n, k, cur }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let out = cur.clone();
        // advance: rightmost index that can still move up
        let mut next = cur;
        let mut i = self.k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            if next[i - 1] < self.n - (self.k - i) {
                next[i - 1] += 1;
                for j in i..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
            i -= 1;
        }
        Some(out)
    }
}

/// Greedy construction of a compatible (M, N)-ISS pair for even `n_elems`:
/// walk the half-size subsets in lexicographic order, keep the first of each
/// complement pair for `s_a`, and pair it with its complement in `s_b`.
pub fn build_compatible_iss(n_elems: usize) -> Result<IssPair> {
    build_compatible_iss_capped(n_elems, DEFAULT_MAX_N)
}

pub fn build_compatible_iss_capped(n_elems: usize, max_n: usize) -> Result<IssPair> {
    if n_elems < 2 || !n_elems.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "gadget universe size must be even and >= 2, got {n_elems}"
        )));
    }
    if n_elems > max_n {
        return Err(Error::InvalidArgument(format!(
            "gadget universe size {n_elems} exceeds cap {max_n}"
        )));
    }
    let half = n_elems / 2;
    let full = if n_elems == 64 {
        !0u64
    } else {
        (1u64 << n_elems) - 1
    };
    let mut marked: HashSet<u64> = HashSet::new();
    let mut s_a = Vec::new();
    let mut s_b = Vec::new();
    for combo in Combinations::new(n_elems, half) {
        let mask = combo.iter().fold(0u64, |m, &e| m | 1 << (e - 1));
        if marked.contains(&mask) {
            continue;
        }
        let comp = full ^ mask;
        marked.insert(mask);
        marked.insert(comp);
        s_a.push(BitSet::from_mask(n_elems, mask));
        s_b.push(BitSet::from_mask(n_elems, comp));
    }
    debug_assert_eq!(s_a.len() as u128, binomial(n_elems, half) / 2);
    Ok(IssPair {
        n_elems,
        s_a,
        s_b,
    })
}

/// True iff every pair of distinct sets intersects (vacuous for <= 1 set).
pub fn is_intersecting_family(sets: &[BitSet]) -> Result<bool> {
    if let Some(first) = sets.first() {
        if let Some(bad) = sets.iter().find(|s| s.width() != first.width()) {
            return Err(Error::InvalidArgument(format!(
                "mixed widths {} and {}",
                first.width(),
                bad.width()
            )));
        }
    }
    for (i, s) in sets.iter().enumerate() {
        for t in &sets[i + 1..] {
            if s.is_disjoint(t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One checked property with the index of the first counterexample, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    pub first_failure: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<PropertyCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failure(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name && !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (c.passed, c.first_failure) {
                (true, _) => writeln!(f, "{}: pass", c.name)?,
                (false, Some(i)) => writeln!(f, "{}: FAIL at index {i}", c.name)?,
                (false, None) => writeln!(f, "{}: FAIL", c.name)?,
            }
        }
        Ok(())
    }
}

fn first_non_intersecting(masks: &[u64]) -> Option<usize> {
    for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if a & b == 0 {
                return Some(i);
            }
        }
    }
    None
}

// index i such that the family with position i swapped for `swapped[i]`
// stops being intersecting
fn first_exchange_failure(base: &[u64], swapped: &[u64]) -> Option<usize> {
    for (i, &sw) in swapped.iter().enumerate() {
        for (j, &b) in base.iter().enumerate() {
            if j != i && sw & b == 0 {
                return Some(i);
            }
        }
    }
    None
}

/// Brute-force verification of every compatible-pair property. Failures are
/// report entries, never errors, so deliberately broken pairs can be probed.
pub fn check_compatible_pair(pair: &IssPair) -> ValidationReport {
    let mut checks = Vec::new();
    let shape_ok = pair.s_a.len() == pair.s_b.len()
        && pair
            .s_a
            .iter()
            .chain(&pair.s_b)
            .all(|s| s.width() == pair.n_elems && pair.n_elems <= 64);
    checks.push(PropertyCheck {
        name: "pair_shape",
        passed: shape_ok,
        first_failure: None,
    });
    if !shape_ok {
        return ValidationReport { checks };
    }

    let a: Vec<u64> = pair.s_a.iter().map(|s| s.to_mask()).collect();
    let b: Vec<u64> = pair.s_b.iter().map(|s| s.to_mask()).collect();

    let fa = first_non_intersecting(&a);
    checks.push(PropertyCheck {
        name: "s_a_intersecting",
        passed: fa.is_none(),
        first_failure: fa,
    });
    let fb = first_non_intersecting(&b);
    checks.push(PropertyCheck {
        name: "s_b_intersecting",
        passed: fb.is_none(),
        first_failure: fb,
    });
    let fd = (0..a.len()).find(|&i| a[i] & b[i] != 0);
    checks.push(PropertyCheck {
        name: "complement_disjointness",
        passed: fd.is_none(),
        first_failure: fd,
    });
    // exchange: (S_A \ {s_a[i]}) u {s_b[i]} stays intersecting, and the
    // symmetric statement for S_B
    let fxa = first_exchange_failure(&a, &b);
    checks.push(PropertyCheck {
        name: "exchange_into_a",
        passed: fxa.is_none(),
        first_failure: fxa,
    });
    let fxb = first_exchange_failure(&b, &a);
    checks.push(PropertyCheck {
        name: "exchange_into_b",
        passed: fxb.is_none(),
        first_failure: fxb,
    });
    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(width: usize, elems1: &[usize]) -> BitSet {
        let zero: Vec<usize> = elems1.iter().map(|e| e - 1).collect();
        BitSet::from_elems(width, &zero).unwrap()
    }

    #[test]
    fn build_n2() {
        let pair = build_compatible_iss(2).unwrap();
        assert_eq!(pair.s_a, vec![set(2, &[1])]);
        assert_eq!(pair.s_b, vec![set(2, &[2])]);
        assert_eq!(pair.m_sets(), 1);
    }

    #[test]
    fn build_n4_matches_hand_run() {
        // greedy over all C(4,2)=6 half-size subsets in lex order
        let pair = build_compatible_iss(4).unwrap();
        assert_eq!(
            pair.s_a,
            vec![set(4, &[1, 2]), set(4, &[1, 3]), set(4, &[1, 4])]
        );
        assert_eq!(
            pair.s_b,
            vec![set(4, &[3, 4]), set(4, &[2, 4]), set(4, &[2, 3])]
        );
    }

    #[test]
    fn build_n6_count() {
        let pair = build_compatible_iss(6).unwrap();
        assert_eq!(pair.m_sets() as u128, binomial(6, 3) / 2);
        assert_eq!(pair.m_sets(), 10);
        assert!(pair.m_sets() >= 1 << (6 / 2 - 1));
        assert!(is_intersecting_family(&pair.s_a).unwrap());
    }

    #[test]
    fn rejects_odd_or_oversized() {
        assert!(build_compatible_iss(3).is_err());
        assert!(build_compatible_iss(0).is_err());
        assert!(build_compatible_iss_capped(10, 8).is_err());
    }

    #[test]
    fn intersecting_family_examples() {
        let fam = vec![set(4, &[1, 2]), set(4, &[1, 3]), set(4, &[1, 4])];
        assert!(is_intersecting_family(&fam).unwrap());
        assert!(!is_intersecting_family(&[set(2, &[1]), set(2, &[2])]).unwrap());
        assert!(is_intersecting_family(&[]).unwrap());
        let mixed = vec![set(2, &[1]), set(4, &[1])];
        assert!(is_intersecting_family(&mixed).is_err());
    }

    #[test]
    fn check_passes_on_built_pair() {
        let pair = build_compatible_iss(8).unwrap();
        let report = check_compatible_pair(&pair);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn check_flags_broken_disjointness() {
        let mut pair = build_compatible_iss(4).unwrap();
        pair.s_b[0] = pair.s_a[0].clone();
        let report = check_compatible_pair(&pair);
        let fail = report.failure("complement_disjointness").unwrap();
        assert_eq!(fail.first_failure, Some(0));
    }

    #[test]
    fn check_flags_complementary_pair_in_s_a() {
        let pair = IssPair {
            n_elems: 4,
            s_a: vec![set(4, &[1, 2]), set(4, &[3, 4])],
            s_b: vec![set(4, &[3, 4]), set(4, &[1, 2])],
        };
        let report = check_compatible_pair(&pair);
        assert!(report.failure("s_a_intersecting").is_some());
    }

    #[test]
    fn exchange_brute_check() {
        // complement of each s_a[i] intersects every other s_a[j]
        let pair = build_compatible_iss(10).unwrap();
        for (i, sb) in pair.s_b.iter().enumerate() {
            for (j, sa) in pair.s_a.iter().enumerate() {
                if i != j {
                    assert!(!sb.is_disjoint(sa));
                }
            }
        }
    }

    #[test]
    fn deterministic_construction() {
        let a = build_compatible_iss(8).unwrap();
        let b = build_compatible_iss(8).unwrap();
        assert_eq!(a, b);
    }
}
