use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Result of a Smith normal form computation: `u * m * v = d`.
///
/// `u` and `v` are only present when transforms were requested.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Option<IntMatrix>,
    pub d: IntMatrix,
    pub v: Option<IntMatrix>,
    pub rank: usize,
}

impl Smith {
    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_rank`, all positive.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Runs the elimination. With `track` the unimodular transforms are
    /// accumulated, and in debug builds `u * m * v = d` is re-checked.
    pub fn compute(m: &IntMatrix, track: bool) -> Smith {
        let (rows, cols) = (m.rows(), m.cols());
        let mut a = m.clone();
        let mut u = track.then(|| IntMatrix::identity(rows));
        let mut v = track.then(|| IntMatrix::identity(cols));

        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                break;
            };
            swap_rows(&mut a, &mut u, t, pi);
            swap_cols(&mut a, &mut v, t, pj);

            loop {
                let pivot = a.get(t, t).clone();
                let mut dirty = false;
                for i in t + 1..rows {
                    if a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = nearest_quotient(a.get(i, t), &pivot);
                    let k = -q;
                    a.add_row_multiple(i, t, &k, t);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(i, t, &k, 0);
                    }
                    dirty |= !a.get(i, t).is_zero();
                }
                for j in t + 1..cols {
                    if a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = nearest_quotient(a.get(t, j), &pivot);
                    let k = -q;
                    a.add_col_multiple(j, t, &k, t);
                    if let Some(v) = v.as_mut() {
                        v.add_col_multiple(j, t, &k, 0);
                    }
                    dirty |= !a.get(t, j).is_zero();
                }
                if dirty {
                    // a remainder smaller than the pivot survived: promote it
                    let (pi, pj) = min_abs_in_cross(&a, t);
                    swap_rows(&mut a, &mut u, t, pi);
                    swap_cols(&mut a, &mut v, t, pj);
                    continue;
                }
                // row and column are clear; enforce divisibility of the rest
                let offender = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !a.get(i, j).is_zero() && !a.get(i, j).is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => {
                        let one = BigInt::one();
                        a.add_row_multiple(t, i, &one, t);
                        if let Some(u) = u.as_mut() {
                            u.add_row_multiple(t, i, &one, 0);
                        }
                    }
                    None => break,
                }
            }
            if a.get(t, t).is_negative() {
                a.negate_row(t);
                if let Some(u) = u.as_mut() {
                    u.negate_row(t);
                }
            }
            t += 1;
        }

        let smith = Smith {
            u,
            d: a,
            v,
            rank: t,
        };
        if cfg!(debug_assertions) {
            smith.check(m);
        }
        smith
    }

    fn check(&self, m: &IntMatrix) {
        let d = &self.d;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j || i >= self.rank {
                    assert!(d.get(i, j).is_zero(), "off-diagonal entry at ({i}, {j})");
                }
            }
        }
        for i in 1..self.rank {
            assert!(
                d.get(i, i).is_multiple_of(d.get(i - 1, i - 1)),
                "divisibility chain broken at {i}"
            );
        }
        if let (Some(u), Some(v)) = (&self.u, &self.v) {
            assert_eq!(&u.mul(m).mul(v), d, "U * M * V != D");
        }
    }
}

/// `(U, D, V)` with `U * m * V = D`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let s = Smith::compute(m, true);
    (s.u.expect("tracked"), s.d, s.v.expect("tracked"))
}

/// Nonzero invariant factors of a dense matrix, without transforms.
pub fn invariant_factors_dense(m: &IntMatrix) -> Vec<BigInt> {
    Smith::compute(m, false).diagonal()
}

fn swap_rows(a: &mut IntMatrix, u: &mut Option<IntMatrix>, x: usize, y: usize) {
    a.swap_rows(x, y);
    if let Some(u) = u.as_mut() {
        u.swap_rows(x, y);
    }
}

fn swap_cols(a: &mut IntMatrix, v: &mut Option<IntMatrix>, x: usize, y: usize) {
    a.swap_cols(x, y);
    if let Some(v) = v.as_mut() {
        v.swap_cols(x, y);
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                let unit = abs.is_one();
                best = Some(((i, j), abs));
                if unit {
                    return best.map(|(pos, _)| pos);
                }
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn min_abs_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = ((t, t), a.get(t, t).abs());
    for i in t + 1..a.rows() {
        let v = a.get(i, t);
        if !v.is_zero() && v.abs() < best.1 {
            best = ((i, t), v.abs());
        }
    }
    for j in t + 1..a.cols() {
        let v = a.get(t, j);
        if !v.is_zero() && v.abs() < best.1 {
            best = ((t, j), v.abs());
        }
    }
    best.0
}

/// Quotient rounded to the nearest integer, which keeps remainders at most
/// half the divisor in absolute value.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = if b.is_negative() { (-a, -b) } else { (a.clone(), b.clone()) };
    let num: BigInt = a * 2 + &b;
    num.div_floor(&(b * 2))
}
