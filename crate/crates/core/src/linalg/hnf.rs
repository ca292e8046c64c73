use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `rows`: returns
/// the nonzero rows, each with a positive leading entry strictly to the right
/// of the previous one, and entries above every pivot reduced into
/// `0..pivot`.
pub fn hnf_rows(rows: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let mut out: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for col in 0..width {
        // Euclid on the column among the remaining rows
        loop {
            let mut nonzero: Vec<usize> = (0..work.len()).filter(|&i| !work[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&i| work[i][col].abs());
            let pivot = work[nonzero[0]].clone();
            for &i in &nonzero[1..] {
                let q = work[i][col].div_floor(&pivot[col]);
                for (x, y) in work[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..work.len()).find(|&i| !work[i][col].is_zero()) {
            let mut row = work.swap_remove(i);
            if row[col].is_negative() {
                row.iter_mut().for_each(|v| *v = -std::mem::take(v));
            }
            out.push((col, row));
        }
        work.retain(|r| r.iter().any(|v| !v.is_zero()));
    }
    // reduce above pivots, bottom-up so later reductions do not disturb earlier ones
    for k in (0..out.len()).rev() {
        let (pc, pivot) = out[k].clone();
        for (_, row) in out.iter_mut().take(k) {
            let q = row[pc].div_floor(&pivot[pc]);
            if !q.is_zero() {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
    }
    out.into_iter().map(|(_, r)| r).collect()
}

/// Canonical representative of `v` modulo the lattice with the given HNF
/// basis: each pivot coordinate lands in `0..pivot`.
pub fn reduce_against(v: &[BigInt], hnf: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for row in hnf {
        let pc = row.iter().position(|x| !x.is_zero()).expect("nonzero hnf row");
        let q = out[pc].div_floor(&row[pc]);
        if !q.is_zero() {
            for (x, y) in out.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn lattice_with_modulus() {
        // lattice generated by (2, 1) and 4Z^2
        let h = hnf_rows(&big(&[&[2, 1], &[4, 0], &[0, 4]]), 2);
        assert_eq!(h, big(&[&[2, 1], &[0, 2]]));
        let r = reduce_against(&big(&[&[5, 7]])[0], &h);
        // (5,7) - 2*(2,1) = (1,5) -> (1,5) - 2*(0,2) = (1,1)
        assert_eq!(r, big(&[&[1, 1]])[0]);
    }

    #[test]
    fn canonical_representatives_agree() {
        let h = hnf_rows(&big(&[&[3, 0, 1], &[0, 3, 0], &[0, 0, 3], &[3, 0, 0]]), 3);
        let a = reduce_against(&big(&[&[1, 2, 2]])[0], &h);
        let b = reduce_against(&big(&[&[4, -1, 3]])[0], &h);
        assert_eq!(a, b);
    }
}
