use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Chain, ChainError, Cochain, CochainLike, Complex, Ring};
use crate::linalg::{
    hnf_rows, invariant_factors, is_prime, kernel_mod, modp, quotient_group, reduce_against, solve_mod,
    AbelianGroup, IntMatrix, LinalgError, SparseMatrix,
};

fn torsion_of(factors: &[BigInt]) -> Result<Vec<u64>, ChainError> {
    factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| ChainError::Linalg(LinalgError::Overflow(d.to_string())))
        })
        .collect()
}

/// `H_n = ker ∂_n / im ∂_{n+1}` from ranks and invariant factors.
pub fn homology(complex: &Complex, n: usize) -> Result<AbelianGroup, ChainError> {
    let dim = complex.dim(n)?;
    let r_n = invariant_factors(&complex.boundary_matrix(n)?).len();
    let f_up = invariant_factors(&complex.boundary_matrix(n + 1)?);
    Ok(AbelianGroup::from_cyclic(dim - r_n - f_up.len(), &torsion_of(&f_up)?))
}

/// Same group through an explicit kernel lattice and `quotient_group`.
pub fn homology_via_quotient(complex: &Complex, n: usize) -> Result<AbelianGroup, ChainError> {
    let kernel = kernel_mod(&complex.boundary_matrix(n)?.to_dense(), 0);
    let image = complex.boundary_matrix(n + 1)?.to_dense();
    Ok(quotient_group(&kernel, &image)?)
}

/// `H^n = ker δ^n / im δ^{n−1}` with coefficients in `ring`, where
/// `δ^n = ∂_{n+1}^T`.
///
/// Over `Z` the free rank comes from ranks and the torsion from the
/// invariant factors of `∂_n`; over a prime field only ranks mod `p` are
/// needed; any other modulus goes through [`cohomology_via_quotient`].
pub fn cohomology(complex: &Complex, ring: Ring, n: usize) -> Result<AbelianGroup, ChainError> {
    let dim = complex.dim(n)?;
    let down = complex.boundary_matrix(n)?;
    let up = complex.boundary_matrix(n + 1)?;
    match ring {
        Ring::Integers => {
            let f_down = invariant_factors(&down);
            let r_up = invariant_factors(&up).len();
            Ok(AbelianGroup::from_cyclic(dim - r_up - f_down.len(), &torsion_of(&f_down)?))
        }
        Ring::Mod(p) if is_prime(p) && p < (1 << 32) => {
            let k = dim - modp::rank_sparse(&up, p) - modp::rank_sparse(&down, p);
            Ok(AbelianGroup::from_cyclic(0, &vec![p; k]))
        }
        Ring::Mod(_) => cohomology_via_quotient(complex, ring, n),
    }
}

/// Cohomology as the quotient of the kernel lattice of `δ^n` mod `m` by
/// `im δ^{n−1} + m·Z^{C_n}`.
pub fn cohomology_via_quotient(complex: &Complex, ring: Ring, n: usize) -> Result<AbelianGroup, ChainError> {
    let m = ring.modulus();
    let dim = complex.dim(n)?;
    let delta_n = complex.boundary_matrix(n + 1)?.transpose().to_dense();
    let delta_prev = complex.boundary_matrix(n)?.transpose().to_dense();
    let kernel = kernel_mod(&delta_n, m);
    let image = if m == 0 {
        delta_prev
    } else {
        let scaled: Vec<Vec<BigInt>> = (0..dim)
            .map(|i| {
                let mut e = vec![BigInt::zero(); dim];
                e[i] = BigInt::from(m);
                e
            })
            .collect();
        delta_prev.hstack(&IntMatrix::from_columns(&scaled, dim))
    };
    Ok(quotient_group(&kernel, &image)?)
}

/// Result of [`express_class`]: `target = Σ c_i basis_i + Δ·witness` modulo
/// the modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    /// Canonical coefficients: reduced against every relation among the
    /// basis classes, so equal classes give equal coefficient vectors.
    pub coefficients: Vec<BigInt>,
    pub witness: Vec<BigInt>,
    /// Generators of the relation module on the coefficients, in Hermite form.
    pub relations: Vec<Vec<BigInt>>,
    pub modulus: u64,
}

impl Expression {
    pub fn coefficients_i64(&self) -> Vec<i64> {
        self.coefficients.iter().map(|c| c.to_i64().expect("small coefficient")).collect()
    }
}

/// Finds `c` and `w` with `target ≡ Σ c_i basis_i + Δ w (mod modulus)`, where
/// the columns of `delta` span the boundaries (or coboundaries) and modulus 0
/// means over `Z`. `None` when `target` is not in the span.
pub fn express_class(
    delta: &SparseMatrix,
    target: &[BigInt],
    basis: &[Vec<BigInt>],
    modulus: u64,
) -> Result<Option<Expression>, ChainError> {
    let rows = delta.rows();
    if target.len() != rows || basis.iter().any(|b| b.len() != rows) {
        return Err(ChainError::Linalg(LinalgError::Dimension(
            "target and basis vectors must match the rows of the boundary matrix".into(),
        )));
    }
    let k = basis.len();
    let w = delta.cols();

    let (solution, relations) = if modulus != 0 && is_prime(modulus) && modulus < (1 << 32) {
        match express_prime(delta, target, basis, modulus, true) {
            Some(pair) => pair,
            None => return Ok(None),
        }
    } else {
        let mut a = delta.to_dense();
        if k > 0 {
            a = a.hstack(&IntMatrix::from_columns(basis, rows));
        }
        let Some(x) = solve_mod(&a, target, modulus)? else {
            return Ok(None);
        };
        let kernel = kernel_mod(&a, modulus);
        let rel = (0..kernel.cols())
            .map(|j| kernel.column(j)[w..].to_vec())
            .collect();
        (x, rel)
    };

    let mut lattice: Vec<Vec<BigInt>> = relations;
    if modulus != 0 {
        for i in 0..k {
            let mut e = vec![BigInt::zero(); k];
            e[i] = BigInt::from(modulus);
            lattice.push(e);
        }
    }
    let hnf = hnf_rows(&lattice, k);
    let coefficients = reduce_against(&solution[w..], &hnf);

    // the canonical coefficients differ from the first solution by a
    // relation, so the remainder is again a (co)boundary
    let mut rest = target.to_vec();
    for (b, c) in basis.iter().zip(&coefficients) {
        for (r, bi) in rest.iter_mut().zip(b) {
            *r -= c * bi;
        }
    }
    let witness = solve_sparse(delta, &rest, modulus)?.expect("canonical coefficients remain solvable");
    Ok(Some(Expression {
        coefficients,
        witness,
        relations: hnf,
        modulus,
    }))
}

type PrimeSolution = (Vec<BigInt>, Vec<Vec<BigInt>>);

/// Row reduction of `[Δ | B | t]` over `F_p`, streamed row by row from the
/// sparse matrix.
fn express_prime(
    delta: &SparseMatrix,
    target: &[BigInt],
    basis: &[Vec<BigInt>],
    p: u64,
    with_relations: bool,
) -> Option<PrimeSolution> {
    let w = delta.cols();
    let k = basis.len();
    let width = w + k;
    let pb = BigInt::from(p);
    let residue = |v: &BigInt| v.mod_floor(&pb).to_u64().expect("residue");
    let mut ech = modp::Echelon::new(p, width + 1);
    for (i, row) in delta.row_lists().into_iter().enumerate() {
        let mut v = vec![0u64; width + 1];
        for (j, a) in row {
            v[j] = modp::reduce(a, p);
        }
        for (j, b) in basis.iter().enumerate() {
            v[w + j] = residue(&b[i]);
        }
        v[width] = residue(&target[i]);
        if ech.insert(v) == Some(width) {
            return None;
        }
    }
    let x = ech.augmented_solution(width).into_iter().map(BigInt::from).collect();
    if !with_relations {
        return Some((x, Vec::new()));
    }
    let rel = ech
        .null_space_in(width)
        .into_iter()
        .map(|v| v[w..].iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    Some((x, rel))
}

fn solve_sparse(delta: &SparseMatrix, rhs: &[BigInt], modulus: u64) -> Result<Option<Vec<BigInt>>, ChainError> {
    if modulus != 0 && is_prime(modulus) && modulus < (1 << 32) {
        return Ok(express_prime(delta, rhs, &[], modulus, false).map(|(x, _)| x));
    }
    Ok(solve_mod(&delta.to_dense(), rhs, modulus)?)
}

impl Complex {
    /// Expresses a cocycle class in terms of given cocycle classes, with
    /// coefficients in the cochains' ring.
    pub fn express_cocycle(&self, target: &Cochain, basis: &[Cochain]) -> Result<Option<Expression>, ChainError> {
        let n = target.degree();
        for b in basis {
            if b.ring() != target.ring() {
                return Err(ChainError::RingMismatch(target.ring(), b.ring()));
            }
            if b.degree() != n {
                return Err(ChainError::DegreeMismatch {
                    expected: n,
                    got: b.degree(),
                });
            }
        }
        let delta = self.boundary_matrix(n)?.transpose();
        let t = target.to_vector(self)?;
        let bs = basis.iter().map(|b| b.to_vector(self)).collect::<Result<Vec<_>, _>>()?;
        express_class(&delta, &t, &bs, target.ring().modulus())
    }

    /// Expresses a cycle class in terms of given cycle classes; modulus 0
    /// works in integral homology.
    pub fn express_cycle(&self, target: &Chain, basis: &[Chain], modulus: u64) -> Result<Option<Expression>, ChainError> {
        let n = target.degree();
        for b in basis {
            if b.degree() != n {
                return Err(ChainError::DegreeMismatch {
                    expected: n,
                    got: b.degree(),
                });
            }
        }
        let delta = self.boundary_matrix(n + 1)?;
        let t = self.chain_to_vector(target)?;
        let bs = basis.iter().map(|b| self.chain_to_vector(b)).collect::<Result<Vec<_>, _>>()?;
        express_class(&delta, &t, &bs, modulus)
    }
}
