use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp;
use super::smith::Smith;
use super::{AbelianGroup, IntMatrix, LinalgError};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn to_residues(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let pb = BigInt::from(p);
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| v.mod_floor(&pb).to_u64().expect("residue fits"))
                .collect()
        })
        .collect()
}

/// Some `x` with `m x ≡ b (mod modulus)`, where modulus 0 means equality over
/// `Z`. Complete: `None` only when no solution exists.
///
/// Prime moduli use row reduction over `F_p`; every other modulus goes through
/// the Smith form `U m V = D`, reducing to the diagonal congruences
/// `d_i y_i ≡ (U b)_i` and setting `x = V y`.
pub fn solve_mod(m: &IntMatrix, b: &[BigInt], modulus: u64) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::Dimension(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let x = if is_prime(modulus) && modulus < (1 << 32) {
        let pb = BigInt::from(modulus);
        let rhs: Vec<u64> = b.iter().map(|v| v.mod_floor(&pb).to_u64().expect("residue")).collect();
        if m.cols() == 0 {
            rhs.iter().all(|&v| v == 0).then(Vec::new)
        } else {
            modp::solve(&to_residues(m, modulus), &rhs, modulus)
                .map(|x| x.into_iter().map(BigInt::from).collect())
        }
    } else {
        solve_via_smith(m, b, modulus)
    };
    if let Some(x) = &x {
        let mb = m.mul_vec(x);
        let ok = mb.iter().zip(b).all(|(l, r)| {
            let diff = l - r;
            if modulus == 0 {
                diff.is_zero()
            } else {
                diff.is_multiple_of(&BigInt::from(modulus))
            }
        });
        assert!(ok, "solver returned a non-solution");
    }
    Ok(x)
}

fn solve_via_smith(m: &IntMatrix, b: &[BigInt], modulus: u64) -> Option<Vec<BigInt>> {
    let s = Smith::compute(m, true);
    let (u, v) = (s.u.as_ref().expect("tracked"), s.v.as_ref().expect("tracked"));
    let c = u.mul_vec(b);
    let big_m = BigInt::from(modulus);
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank {
            let d = s.d.get(i, i);
            if modulus == 0 {
                let (q, r) = ci.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            } else {
                // d y ≡ c (mod M) is solvable iff g = gcd(d, M) divides c
                let g = d.gcd(&big_m);
                if !ci.is_multiple_of(&g) {
                    return None;
                }
                let reduced_mod = &big_m / &g;
                let dg = (d / &g).mod_floor(&reduced_mod);
                let cg = (ci / &g).mod_floor(&reduced_mod);
                y[i] = if reduced_mod.is_one() {
                    BigInt::zero()
                } else {
                    (cg * mod_inverse(&dg, &reduced_mod)).mod_floor(&reduced_mod)
                };
            }
        } else {
            let zero_ok = if modulus == 0 {
                ci.is_zero()
            } else {
                ci.is_multiple_of(&big_m)
            };
            if !zero_ok {
                return None;
            }
        }
    }
    let mut x = v.mul_vec(&y);
    if modulus != 0 {
        x.iter_mut().for_each(|xi| *xi = xi.mod_floor(&big_m));
    }
    Some(x)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Generators (as columns) of `{x : m x ≡ 0 (mod modulus)}`. For a nonzero
/// modulus the returned set generates the kernel as a submodule of `Z^n`,
/// so it always contains `modulus · Z^n`.
pub fn kernel_mod(m: &IntMatrix, modulus: u64) -> IntMatrix {
    let n = m.cols();
    if modulus != 0 && is_prime(modulus) && modulus < (1 << 32) {
        let basis = modp::null_space(&to_residues(m, modulus), n, modulus);
        let mut cols: Vec<Vec<BigInt>> = basis
            .into_iter()
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .collect();
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::from(modulus);
            cols.push(e);
        }
        return IntMatrix::from_columns(&cols, n);
    }
    let s = Smith::compute(m, true);
    let v = s.v.as_ref().expect("tracked");
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let scale = if i < s.rank {
            if modulus == 0 {
                continue;
            }
            let g = s.d.get(i, i).gcd(&BigInt::from(modulus));
            BigInt::from(modulus) / g
        } else {
            BigInt::one()
        };
        cols.push(v.column(i).into_iter().map(|x| x * &scale).collect());
    }
    IntMatrix::from_columns(&cols, n)
}

/// Structure of `L_K / L_I` where `L_K`, `L_I` are the lattices spanned by
/// the columns of `ker_basis` and `im_basis`. Columns of `ker_basis` need not
/// be independent. Fails when `L_I` is not contained in `L_K`.
pub fn quotient_group(ker_basis: &IntMatrix, im_basis: &IntMatrix) -> Result<AbelianGroup, LinalgError> {
    if ker_basis.rows() != im_basis.rows() {
        return Err(LinalgError::Dimension(format!(
            "kernel vectors have length {} but image vectors have length {}",
            ker_basis.rows(),
            im_basis.rows()
        )));
    }
    // U K V = D, so L_K has basis U^{-1} d_i e_i and x ∈ L_K iff (U x)_i ≡ 0 mod d_i
    let s = Smith::compute(ker_basis, true);
    let u = s.u.as_ref().expect("tracked");
    let r = s.rank;
    let mut coords = IntMatrix::zeros(r, im_basis.cols());
    for j in 0..im_basis.cols() {
        let y = u.mul_vec(&im_basis.column(j));
        if y[r..].iter().any(|v| !v.is_zero()) {
            return Err(LinalgError::NotInSpan(j));
        }
        for (i, yi) in y[..r].iter().enumerate() {
            let (q, rem) = yi.div_rem(s.d.get(i, i));
            if !rem.is_zero() {
                return Err(LinalgError::NotInLattice(j));
            }
            coords.set(i, j, q);
        }
    }
    let sub = Smith::compute(&coords, false);
    let mut torsion = Vec::new();
    for d in sub.diagonal() {
        if !d.is_one() {
            torsion.push(d.abs().to_u64().ok_or_else(|| LinalgError::Overflow(d.to_string()))?);
        }
    }
    Ok(AbelianGroup::from_cyclic(r - sub.rank, &torsion))
}
