//! Invariant factors of sparse integer matrices.
//!
//! Unit pivots are eliminated first while the matrix is still sparse; each
//! such step is a unimodular change of basis that splits off a `1` from the
//! Smith form. The remaining core is small and handed to the dense routine.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use super::smith::invariant_factors_dense;
use super::{IntMatrix, SparseMatrix};

/// Nonzero invariant factors `d_1 | ... | d_r` of `m`.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    match eliminate_units(m) {
        Some((units, core)) => {
            let mut out = vec![BigInt::one(); units];
            out.extend(invariant_factors_dense(&core));
            out
        }
        // entries outgrew machine words; redo everything densely
        None => invariant_factors_dense(&m.to_dense()),
    }
}

/// Rank over the rationals.
pub fn rank_over_q(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

type Row = BTreeMap<usize, i64>;

/// Returns the number of unit pivots removed and the dense remainder, or
/// `None` on word overflow.
fn eliminate_units(m: &SparseMatrix) -> Option<(usize, IntMatrix)> {
    let mut rows: Vec<Option<Row>> = m
        .row_lists()
        .into_iter()
        .map(|r| Some(r.into_iter().collect()))
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (i, row) in rows.iter().enumerate() {
        for &j in row.as_ref().expect("fresh").keys() {
            col_rows[j].insert(i);
        }
    }

    let mut units = 0;
    loop {
        // cheapest unit pivot: shortest row, then shortest column
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in rows.iter().enumerate() {
            let Some(row) = row else { continue };
            if best.is_some_and(|(_, _, cost)| row.len() > cost) {
                continue;
            }
            for (&j, &v) in row {
                if v.abs() == 1 {
                    let cost = row.len() * col_rows[j].len();
                    if best.is_none_or(|(_, _, c)| cost < c) {
                        best = Some((i, j, cost));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };

        let pivot_row = rows[pi].take().expect("active");
        for &j in pivot_row.keys() {
            col_rows[j].remove(&pi);
        }
        let pv = pivot_row[&pj];
        let targets: Vec<usize> = col_rows[pj].iter().copied().collect();
        for i in targets {
            let row = rows[i].as_mut().expect("active");
            // row -= (a / pv) * pivot_row, and 1 / pv = pv for units
            let factor = row[&pj].checked_mul(pv)?;
            for (&j, &pvj) in &pivot_row {
                let delta = factor.checked_mul(pvj)?;
                let entry = row.entry(j).or_insert(0);
                let was_zero = *entry == 0;
                *entry = entry.checked_sub(delta)?;
                if *entry == 0 {
                    row.remove(&j);
                    col_rows[j].remove(&i);
                } else if was_zero {
                    col_rows[j].insert(i);
                }
            }
        }
        units += 1;
    }

    let live_rows: Vec<&Row> = rows.iter().flatten().filter(|r| !r.is_empty()).collect();
    let live_cols: BTreeSet<usize> = live_rows.iter().flat_map(|r| r.keys().copied()).collect();
    let col_index: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let mut core = IntMatrix::zeros(live_rows.len(), live_cols.len());
    for (i, row) in live_rows.iter().enumerate() {
        for (j, &v) in row.iter() {
            core.set(i, col_index[j], BigInt::from(v));
        }
    }
    Some((units, core))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_dense() {
        let dense = IntMatrix::from_rows(
            &[vec![1, 1, 0, 0], vec![0, 2, 2, 0], vec![3, 0, 0, 6], vec![0, 0, 4, 4]],
            4,
        );
        let sparse = SparseMatrix::from_dense(&dense);
        assert_eq!(invariant_factors(&sparse), invariant_factors_dense(&dense));
    }

    #[test]
    fn torsion_only_core() {
        let m = SparseMatrix::from_dense(&IntMatrix::from_rows(&[vec![3, 0], vec![0, 0]], 2));
        assert_eq!(invariant_factors(&m), vec![BigInt::from(3)]);
        assert_eq!(rank_over_q(&m), 1);
        assert_eq!(rank_over_q(&SparseMatrix::new(4, 0)), 0);
    }
}
