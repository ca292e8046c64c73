//! Row reduction over the prime field `F_p`, with `p < 2^32` so products
//! fit in a `u64`.

use super::SparseMatrix;

#[inline]
pub fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

pub fn inverse(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow(a, p - 2, p)
}

pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Incrementally built echelon form. Each stored row has a leading 1 at its
/// pivot column and zeros at the pivot columns of all earlier rows, so rows
/// can be reduced against the stored ones in insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    width: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<u64>>,
    is_pivot: Vec<bool>,
}

impl Echelon {
    pub fn new(p: u64, width: usize) -> Self {
        assert!((2..(1 << 32)).contains(&p), "modulus out of range");
        Echelon {
            p,
            width,
            pivots: Vec::new(),
            rows: Vec::new(),
            is_pivot: vec![false; width],
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place against the stored rows.
    pub fn reduce_vec(&self, v: &mut [u64]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f == 0 {
                continue;
            }
            let f = p - f;
            for (x, &r) in v.iter_mut().zip(row).skip(pc) {
                if r != 0 {
                    *x = (*x + f * r) % p;
                }
            }
        }
    }

    /// Inserts a row; returns its pivot column if it was independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<usize> {
        debug_assert_eq!(v.len(), self.width);
        self.reduce_vec(&mut v);
        let pc = v.iter().position(|&x| x != 0)?;
        let inv = inverse(v[pc], self.p);
        for x in v.iter_mut().skip(pc) {
            *x = *x * inv % self.p;
        }
        self.pivots.push(pc);
        self.rows.push(v);
        self.is_pivot[pc] = true;
        Some(pc)
    }

    /// Some `x` with `row_k · x = rhs_k` for every stored row, free
    /// variables set to the supplied values.
    fn back_substitute(&self, rhs: &[u64], free: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut x = free.to_vec();
        for (k, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate().rev() {
            x[pc] = 0;
            let mut acc = rhs[k];
            for (j, &r) in row.iter().enumerate().skip(pc + 1) {
                if r != 0 && x[j] != 0 {
                    acc = (acc + (p - r) * x[j]) % p;
                }
            }
            x[pc] = acc;
        }
        x
    }

    /// A basis of the null space of the stored rows.
    pub fn null_space(&self) -> Vec<Vec<u64>> {
        self.null_space_in(self.width)
    }

    /// Null space of the stored rows restricted to the first `cols` columns
    /// (later coordinates pinned to 0). Valid when no pivot lies at or beyond
    /// `cols`, as for a consistent augmented system.
    pub fn null_space_in(&self, cols: usize) -> Vec<Vec<u64>> {
        debug_assert!(self.pivots.iter().all(|&pc| pc < cols));
        let zero = vec![0u64; self.rank()];
        (0..cols)
            .filter(|&j| !self.is_pivot[j])
            .map(|f| {
                let mut free = vec![0u64; self.width];
                free[f] = 1;
                let mut x = self.back_substitute(&zero, &free);
                x.truncate(cols);
                x
            })
            .collect()
    }

    /// Treating column `cols` as the right-hand side of a consistent system,
    /// a solution with all free variables 0.
    pub fn augmented_solution(&self, cols: usize) -> Vec<u64> {
        debug_assert_eq!(cols + 1, self.width);
        let rhs: Vec<u64> = self.rows.iter().map(|r| r[cols]).collect();
        let mut x = self.back_substitute(&rhs, &vec![0; self.width]);
        x.truncate(cols);
        x
    }
}

/// Rank of a sparse integer matrix modulo `p`.
pub fn rank_sparse(m: &SparseMatrix, p: u64) -> usize {
    // reduce the shorter vectors: columns of length rows, or rows of length cols
    let (vectors, width) = if m.rows() <= m.cols() {
        (
            (0..m.cols()).map(|j| m.column(j).to_vec()).collect::<Vec<_>>(),
            m.rows(),
        )
    } else {
        (m.row_lists(), m.cols())
    };
    let mut ech = Echelon::new(p, width);
    for v in vectors {
        if ech.rank() == width {
            break;
        }
        let mut dense = vec![0u64; width];
        for (i, a) in v {
            dense[i] = reduce(a, p);
        }
        ech.insert(dense);
    }
    ech.rank()
}

/// Solves `A x = b` over `F_p` for `A` given by rows. Free variables are 0.
pub fn solve(rows: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let width = rows.first().map_or(0, Vec::len);
    // augmented rows [A_i | b_i]; a pivot in the last column means inconsistency
    let mut ech = Echelon::new(p, width + 1);
    for (row, &bi) in rows.iter().zip(b) {
        let mut v = row.clone();
        v.push(bi % p);
        if ech.insert(v) == Some(width) {
            return None;
        }
    }
    Some(ech.augmented_solution(width))
}

/// Null space basis over `F_p` of the matrix with the given rows.
pub fn null_space(rows: &[Vec<u64>], width: usize, p: u64) -> Vec<Vec<u64>> {
    let mut ech = Echelon::new(p, width);
    for row in rows {
        ech.insert(row.clone());
    }
    ech.null_space()
}
