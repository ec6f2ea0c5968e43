//! `prop38-scan`: exhaustive search for equations `a χ = b` (or `χ a = b`)
//! that are solvable but have no solution in the group of units.

use std::thread;

use serde::Serialize;

use idinf::oracle::{oracle_solve, solve_bound, Side};
use idinf::sample::enumerate_bounded;
use idinf::solvers::{left_family, right_family, SolutionFamily};
use idinf::{PartialIsometry, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: String,
    pub b: String,
    pub solutions: usize,
    /// Whether the exhaustive pointwise search agrees that the solution set is
    /// nonempty and contains no unit.
    pub oracle_confirms: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub side: &'static str,
    pub coord_bound: i64,
    pub elements: usize,
    pub pairs: u64,
    pub solvable: u64,
    pub solvable_without_unit: u64,
    pub max_unit_solutions: u64,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Default)]
struct Tally {
    solvable: u64,
    without_unit: u64,
    max_units: u64,
    first: Option<(usize, usize, usize)>,
}

fn family(side: Side, a: &PartialIsometry, b: &PartialIsometry) -> Result<Option<SolutionFamily>> {
    match side {
        Side::Right => right_family(a, b),
        Side::Left => left_family(a, b),
    }
}

fn tally_rows(side: Side, all: &[PartialIsometry], rows: std::ops::Range<usize>) -> Result<Tally> {
    let mut t = Tally::default();
    for i in rows {
        for (j, b) in all.iter().enumerate() {
            if let Some(f) = family(side, &all[i], b)? {
                t.solvable += 1;
                let units = f.iter().filter(PartialIsometry::is_unit).count() as u64;
                t.max_units = t.max_units.max(units);
                if units == 0 {
                    t.without_unit += 1;
                    if t.first.is_none() {
                        t.first = Some((i, j, 1 << f.log2_len()));
                    }
                }
            }
        }
    }
    Ok(t)
}

/// Scans every pair of elements with shift in `[-bound, bound]` and excluded
/// set inside `[-bound, bound]`.
pub fn scan(side: Side, bound: i64) -> Result<ScanReport> {
    let all = enumerate_bounded(bound, bound);
    let threads = thread::available_parallelism().map_or(1, |n| n.get()).min(all.len().max(1));
    let chunk = all.len().div_ceil(threads).max(1);
    let tallies: Vec<Result<Tally>> = thread::scope(|s| {
        let handles: Vec<_> = (0..all.len())
            .step_by(chunk)
            .map(|start| {
                let rows = start..(start + chunk).min(all.len());
                let all = &all;
                s.spawn(move || tally_rows(side, all, rows))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan thread panicked")).collect()
    });

    let mut total = Tally::default();
    for t in tallies {
        let t = t?;
        total.solvable += t.solvable;
        total.without_unit += t.without_unit;
        total.max_units = total.max_units.max(t.max_units);
        // chunks are in row order, so the first chunk with a hit has the
        // lexicographically first counterexample
        if total.first.is_none() {
            total.first = t.first;
        }
    }

    let first_counterexample = match total.first {
        None => None,
        Some((i, j, solutions)) => {
            let (a, b) = (&all[i], &all[j]);
            let found = oracle_solve(a, b, side, &solve_bound(a, b, side)?)?;
            Some(Counterexample {
                a: a.to_string(),
                b: b.to_string(),
                solutions,
                oracle_confirms: !found.is_empty() && !found.iter().any(PartialIsometry::is_unit),
            })
        }
    };

    Ok(ScanReport {
        side: match side {
            Side::Right => "right",
            Side::Left => "left",
        },
        coord_bound: bound,
        elements: all.len(),
        pairs: (all.len() as u64).pow(2),
        solvable: total.solvable,
        solvable_without_unit: total.without_unit,
        max_unit_solutions: total.max_units,
        first_counterexample,
    })
}
