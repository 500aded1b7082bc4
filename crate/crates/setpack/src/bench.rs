//! Timing comparison of the mask DP against branch-and-bound: the DP's cost
//! is governed by 2^|U| and indifferent to |S|, while branch-and-bound
//! scales with the family size. Qualitative output; the only hard claim is
//! that the two solvers agree on every row.

use std::io::Write;
use std::time::Instant;

use crate::error::Result;
use crate::gen::generate_random_psp;
use crate::setsystem::PspInstance;
use crate::solvers::{solve_set_packing_bnb, solve_set_packing_dp, SolveBudget};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub universe: usize,
    pub sets: usize,
    pub r: usize,
    pub dp_ms: f64,
    pub bnb_ms: f64,
    pub agree: bool,
}

pub const CSV_HEADER: &str = "universe,sets,r,dp_ms,bnb_ms,agree";

const FIXED_R: usize = 4;
const DENSITY: f64 = 0.25;
/// Repeat a measurement until it has accumulated this much wall time, so
/// sub-millisecond runs still produce stable averages.
const MIN_SAMPLE_MS: f64 = 50.0;

fn time_ms(mut f: impl FnMut()) -> f64 {
    let mut reps = 0u32;
    let start = Instant::now();
    loop {
        f();
        reps += 1;
        let total = start.elapsed().as_secs_f64() * 1e3;
        if total >= MIN_SAMPLE_MS || reps >= 10_000 {
            return total / reps as f64;
        }
    }
}

fn run_point(universe: usize, sets: usize, seed: u64, budget: &SolveBudget) -> Result<BenchRow> {
    // singletons for every element first, random sets after: with all
    // singletons present every universe subset is realizable, so the DP
    // table is fully exercised and its cost tracks 2^|U| cleanly
    let gen = generate_random_psp(universe, sets.saturating_sub(universe), DENSITY, seed)?;
    let mut family = crate::setsystem::SetFamily::new(universe);
    for e in 0..universe.min(sets) {
        family.push(crate::bitset::BitSet::from_elems(universe, &[e])?)?;
    }
    for s in gen.family.sets() {
        family.push(s.clone())?;
    }
    let inst = PspInstance::new(family, FIXED_R)?;
    let mut dp_max = 0usize;
    let dp_ms = time_ms(|| {
        dp_max = solve_set_packing_dp(&inst, budget).expect("within dp budget").0;
    });
    let mut bnb_found = false;
    let bnb_ms = time_ms(|| {
        bnb_found = solve_set_packing_bnb(&inst, budget)
            .expect("within bnb budget")
            .0;
    });
    Ok(BenchRow {
        universe,
        sets,
        r: FIXED_R,
        dp_ms,
        bnb_ms,
        agree: bnb_found == (dp_max >= FIXED_R),
    })
}

/// Two sweeps at fixed `r`: universe growth at a fixed family size (the DP's
/// exponential axis), then family growth at a fixed universe (the axis the
/// DP ignores and branch-and-bound feels).
pub fn bench_dichotomy(seed: u64, budget: &SolveBudget) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let mut point = 0u64;
    for universe in 10..=19 {
        rows.push(run_point(universe, 64, seed.wrapping_add(point), budget)?);
        point += 1;
    }
    for exp in 6..=14 {
        rows.push(run_point(16, 1 << exp, seed.wrapping_add(point), budget)?);
        point += 1;
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], mut out: W) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{:.4},{:.4},{}",
            r.universe, r.sets, r.r, r.dp_ms, r.bnb_ms, r.agree
        )?;
    }
    Ok(())
}

/// Least-squares slope of log2(dp_ms) against |U| over the fixed-|S| rows.
/// A pure 2^|U| law gives slope 1.
pub fn dp_log_slope(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.sets == 64 && r.dp_ms > 0.0)
        .map(|r| (r.universe as f64, r.dp_ms.log2()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let (sx, sy): (f64, f64) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0, a.1 + p.1));
    let (sxx, sxy): (f64, f64) = pts
        .iter()
        .fold((0.0, 0.0), |a, p| (a.0 + p.0 * p.0, a.1 + p.0 * p.1));
    Some((n * sxy - sx * sy) / (n * sxx - sx * sx))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_format() {
        let rows = vec![BenchRow {
            universe: 10,
            sets: 64,
            r: 4,
            dp_ms: 1.5,
            bnb_ms: 0.25,
            agree: true,
        }];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("universe,sets,r,dp_ms,bnb_ms,agree"));
        assert_eq!(lines.next(), Some("10,64,4,1.5000,0.2500,true"));
    }

    #[test]
    fn slope_of_exact_doubling_is_one() {
        let rows: Vec<BenchRow> = (10..16)
            .map(|u| BenchRow {
                universe: u,
                sets: 64,
                r: 4,
                dp_ms: (1u64 << u) as f64,
                bnb_ms: 1.0,
                agree: true,
            })
            .collect();
        let slope = dp_log_slope(&rows).unwrap();
        assert!((slope - 1.0).abs() < 1e-9);
    }

    #[test]
    fn single_point_agrees() {
        let row = run_point(10, 16, 1, &SolveBudget::default()).unwrap();
        assert!(row.agree);
    }
}
