//! Named cocycles and cycles over the dihedral quandles `R_p` and the
//! tetrahedral quandle `S4`, plus the name registry used by the CLI.
//!
//! Every cocycle is gated by [`is_cocycle`] and every cycle by `∂ = 0` when
//! it is built, so a transcription error surfaces as a construction error.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::chain::{is_cocycle, pullback_sigma, Chain, ChainError, Cochain, Complex, Generator, Ring, SigmaPullback};
use crate::linalg::{is_prime, modp};
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Error)]
pub enum CocycleError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("unknown cocycle or cycle name {0:?}")]
    UnknownName(String),
    #[error("{0} failed its construction check")]
    Gate(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// Whether a named cochain is expected to be a cocycle. The witness cochain
/// `f` is an ordinary 2-cochain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Cocycle,
    Witness,
}

#[derive(Clone, Debug)]
pub struct NamedCocycle {
    pub name: String,
    pub quandle: Quandle,
    pub cochain: Cochain,
    pub role: Role,
    pub description: String,
}

impl NamedCocycle {
    fn gated(name: String, quandle: Quandle, cochain: Cochain, role: Role, description: &str) -> Result<Self, CocycleError> {
        if role == Role::Cocycle && !is_cocycle(&cochain, &Complex::plain(&quandle))? {
            return Err(CocycleError::Gate(name));
        }
        Ok(NamedCocycle {
            name,
            quandle,
            cochain,
            role,
            description: description.to_string(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct NamedCycle {
    pub name: String,
    pub quandle: Quandle,
    pub chain: Chain,
}

impl NamedCycle {
    fn gated(name: String, quandle: Quandle, chain: Chain) -> Result<Self, CocycleError> {
        if !Complex::plain(&quandle).boundary(&chain)?.is_zero() {
            return Err(CocycleError::Gate(name));
        }
        Ok(NamedCycle { name, quandle, chain })
    }
}

impl fmt::Display for NamedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.name, self.chain)
    }
}

fn check_odd_prime(p: u64) -> Result<(), CocycleError> {
    if p == 2 || !is_prime(p) || p >= (1 << 31) {
        return Err(CocycleError::NotOddPrime(p));
    }
    Ok(())
}

/// `((2y − x)^p + x^p − 2y^p) / p mod p` by exact integer division, with
/// `x, y` taken as their representatives in `0..p`.
pub fn chi_exact(p: u64, x: u64, y: u64) -> Result<u64, CocycleError> {
    check_odd_prime(p)?;
    let (x, y) = (BigInt::from(x % p), BigInt::from(y % p));
    let e = p as usize;
    let pb = BigInt::from(p);
    let two_y: BigInt = &y * 2;
    let num: BigInt = num_traits::pow(two_y - &x, e) + num_traits::pow(x, e) - num_traits::pow(y, e) * 2;
    let (q, r) = num.div_rem(&pb);
    assert!(r.is_zero(), "numerator not divisible by p");
    Ok(q.mod_floor(&pb).to_u64().expect("residue"))
}

/// The same value from the binomial expansion:
/// `−Σ_{i=1}^{p−1} i^{−1} x^i (2y)^{p−i} + ((2^p − 2)/p) y^p (mod p)`.
pub fn chi_sum(p: u64, x: u64, y: u64) -> Result<u64, CocycleError> {
    check_odd_prime(p)?;
    let (x, y) = (x % p, y % p);
    let two_y = 2 * y % p;
    let mut acc = 0u64;
    for i in 1..p {
        let term = modp::inverse(i, p) * modp::pow(x, i, p) % p * modp::pow(two_y, p - i, p) % p;
        acc = (acc + term) % p;
    }
    let fermat = ((BigInt::one() << p as usize) - 2u32) / BigInt::from(p);
    let fermat = fermat.mod_floor(&BigInt::from(p)).to_u64().expect("residue");
    Ok((p - acc + fermat * modp::pow(y, p, p)) % p)
}

/// `χ` on all of `R_p × R_p`, both routes cross-asserted.
#[derive(Clone, Debug)]
pub struct ChiTable {
    p: u64,
    values: Vec<u64>,
}

impl ChiTable {
    pub fn new(p: u64) -> Result<Self, CocycleError> {
        check_odd_prime(p)?;
        let mut values = Vec::with_capacity((p * p) as usize);
        for x in 0..p {
            for y in 0..p {
                let a = chi_exact(p, x, y)?;
                let b = chi_sum(p, x, y)?;
                assert_eq!(a, b, "χ routes disagree at p={p}, x={x}, y={y}");
                values.push(a);
            }
        }
        Ok(ChiTable { p, values })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Arguments are reduced mod `p` first, so differences may be negative.
    pub fn get(&self, x: i64, y: i64) -> u64 {
        let p = self.p as i64;
        self.values[(x.rem_euclid(p) * p + y.rem_euclid(p)) as usize]
    }
}

fn dihedral(p: u64) -> Result<(Quandle, ChiTable), CocycleError> {
    let chi = ChiTable::new(p)?;
    Ok((Quandle::dihedral(p as usize)?, chi))
}

fn at(xs: &[usize]) -> Vec<i64> {
    xs.iter().map(|&x| x as i64).collect()
}

/// Mochizuki's 3-cocycle `θ(x, y, z) = (x − y) χ(y, z)` over `Z_p`.
pub fn theta(p: u64) -> Result<NamedCocycle, CocycleError> {
    let (q, chi) = dihedral(p)?;
    let ring = Ring::Mod(p);
    let c = Cochain::from_fn_plain(&q, 3, ring, |xs| {
        let t = at(xs);
        (t[0] - t[1]) * chi.get(t[1], t[2]) as i64
    });
    NamedCocycle::gated(format!("theta@R{p}"), q, c, Role::Cocycle, "(x − y)·χ(y, z)")
}

/// `ψ0(x, y, z, w) = −θ(x − w, y − w, z − w)`.
pub fn psi0(p: u64) -> Result<NamedCocycle, CocycleError> {
    let (q, chi) = dihedral(p)?;
    let c = Cochain::from_fn_plain(&q, 4, Ring::Mod(p), |xs| {
        let t = at(xs);
        let (x, y, z) = (t[0] - t[3], t[1] - t[3], t[2] - t[3]);
        -((x - y) * chi.get(y, z) as i64)
    });
    NamedCocycle::gated(format!("psi0@R{p}"), q, c, Role::Cocycle, "−θ(x − w, y − w, z − w)")
}

/// `ψ1(x, y, z, w) = χ(z − x, y − x) χ(z, w)`.
pub fn psi1(p: u64) -> Result<NamedCocycle, CocycleError> {
    let (q, chi) = dihedral(p)?;
    let c = Cochain::from_fn_plain(&q, 4, Ring::Mod(p), |xs| {
        let t = at(xs);
        (chi.get(t[2] - t[0], t[1] - t[0]) * chi.get(t[2], t[3])) as i64
    });
    NamedCocycle::gated(format!("psi1@R{p}"), q, c, Role::Cocycle, "χ(z − x, y − x)·χ(z, w)")
}

const PHI: &[(&[usize], i64)] = &[
    (&[0, 1], 2),
    (&[0, 2], 2),
    (&[1, 0], 2),
    (&[1, 2], 2),
    (&[2, 0], 2),
    (&[2, 1], 2),
];

const ETA1: &[(&[usize], i64)] = &[
    (&[0, 1, 0], 2),
    (&[0, 2, 1], 2),
    (&[0, 2, 3], 2),
    (&[0, 3, 0], 2),
    (&[0, 3, 1], 2),
    (&[0, 3, 2], 2),
    (&[1, 0, 1], 2),
    (&[1, 0, 3], 2),
    (&[1, 2, 0], 2),
    (&[1, 3, 1], 2),
    (&[2, 0, 3], 2),
    (&[2, 1, 0], 2),
    (&[2, 1, 3], 2),
    (&[2, 3, 2], 2),
];

const ETA2: &[(&[usize], i64)] = &[
    (&[0, 1, 2], 1),
    (&[0, 1, 3], -1),
    (&[0, 2, 1], -1),
    (&[0, 3, 0], 1),
    (&[0, 3, 1], 1),
    (&[0, 3, 2], -1),
    (&[1, 0, 1], 2),
    (&[1, 0, 2], 1),
    (&[1, 0, 3], 1),
    (&[1, 2, 0], -1),
    (&[1, 3, 2], 1),
    (&[2, 0, 1], 1),
    (&[2, 0, 2], 1),
    (&[2, 0, 3], 1),
    (&[2, 1, 3], 1),
    (&[3, 0, 1], 1),
    (&[3, 0, 2], 1),
    (&[3, 0, 3], 1),
    (&[3, 1, 3], 1),
];

const ETA11: &[(&[usize], i64)] = &[
    (&[0, 1, 0], -1),
    (&[0, 1, 3], -1),
    (&[0, 3, 1], 1),
    (&[0, 3, 2], 1),
    (&[1, 0, 1], -1),
    (&[1, 0, 2], -1),
    (&[1, 0, 3], -1),
    (&[1, 2, 0], 1),
    (&[1, 2, 1], -1),
    (&[1, 3, 0], 1),
    (&[1, 3, 1], 1),
    (&[1, 3, 2], 1),
    (&[2, 0, 3], 1),
    (&[2, 1, 0], -1),
    (&[3, 0, 2], -1),
    (&[3, 2, 3], 1),
];

const F: &[(&[usize], i64)] = &[(&[0, 3], 2), (&[1, 0], 2), (&[2, 3], 2)];

fn s4_named(name: &str, degree: usize, table: &[(&[usize], i64)], role: Role, description: &str) -> Result<NamedCocycle, CocycleError> {
    let q = Quandle::tetrahedral();
    let c = Cochain::plain(degree, Ring::Mod(4), table);
    NamedCocycle::gated(format!("{name}@S4"), q, c, role, description)
}

pub fn phi() -> Result<NamedCocycle, CocycleError> {
    s4_named("phi", 2, PHI, Role::Cocycle, "2-cocycle generating H²(S4; Z4)")
}

pub fn eta1() -> Result<NamedCocycle, CocycleError> {
    s4_named("eta1", 3, ETA1, Role::Cocycle, "3-cocycle of order 2")
}

pub fn eta2() -> Result<NamedCocycle, CocycleError> {
    s4_named("eta2", 3, ETA2, Role::Cocycle, "3-cocycle of order 4")
}

pub fn eta11() -> Result<NamedCocycle, CocycleError> {
    s4_named("eta11", 3, ETA11, Role::Cocycle, "3-cocycle of order 2")
}

/// The 2-cochain whose coboundary is `σ^♯φ − η1 − 2η2`.
pub fn f_witness() -> Result<NamedCocycle, CocycleError> {
    s4_named("f", 2, F, Role::Witness, "witness 2-cochain, not a cocycle")
}

pub fn s4_cocycles() -> Result<Vec<NamedCocycle>, CocycleError> {
    Ok(vec![phi()?, eta1()?, eta2()?, eta11()?, f_witness()?])
}

fn rp_chain(degree: usize, terms: impl IntoIterator<Item = (Vec<usize>, i64)>) -> Chain {
    let mut c = Chain::zero(degree);
    for (xs, k) in terms {
        c.add_term(Generator::plain(&xs), k);
    }
    c
}

/// `z = Σ_{i=1}^{p−2} ((0,i,i+1) − (i,i+1,0) + (0,i+1,i) − (i+1,i,0))`.
pub fn cycle_z(p: u64) -> Result<NamedCycle, CocycleError> {
    check_odd_prime(p)?;
    let n = p as usize;
    let c = rp_chain(
        3,
        (1..n - 1).flat_map(|i| {
            let j = (i + 1) % n;
            [
                (vec![0, i, j], 1),
                (vec![i, j, 0], -1),
                (vec![0, j, i], 1),
                (vec![j, i, 0], -1),
            ]
        }),
    );
    NamedCycle::gated(format!("z@R{p}"), Quandle::dihedral(n)?, c)
}

/// `z0 = Σ_{i=1}^{p−1} (0, i, i+1)`, indices mod `p`.
pub fn cycle_z0(p: u64) -> Result<NamedCycle, CocycleError> {
    check_odd_prime(p)?;
    let n = p as usize;
    let c = rp_chain(3, (1..n).map(|i| (vec![0, i, (i + 1) % n], 1)));
    NamedCycle::gated(format!("z0@R{p}"), Quandle::dihedral(n)?, c)
}

/// `w = −Σ_{i=1}^{p−2} ((0,i,i+1,0) + (0,i+1,i,0))`.
pub fn cycle_w(p: u64) -> Result<NamedCycle, CocycleError> {
    check_odd_prime(p)?;
    let n = p as usize;
    let c = rp_chain(
        4,
        (1..n - 1).flat_map(|i| {
            let j = (i + 1) % n;
            [(vec![0, i, j, 0], -1), (vec![0, j, i, 0], -1)]
        }),
    );
    NamedCycle::gated(format!("w@R{p}"), Quandle::dihedral(n)?, c)
}

fn s4_cycle(name: &str, degree: usize, terms: &[(&[usize], i64)]) -> Result<NamedCycle, CocycleError> {
    NamedCycle::gated(format!("{name}@S4"), Quandle::tetrahedral(), Chain::plain(degree, terms))
}

pub fn cycle_z1() -> Result<NamedCycle, CocycleError> {
    s4_cycle("z1", 2, &[(&[0, 3], 1), (&[3, 1], 1), (&[1, 0], 1)])
}

pub fn cycle_z2() -> Result<NamedCycle, CocycleError> {
    s4_cycle("z2", 2, &[(&[0, 3], 1), (&[0, 1], -1), (&[3, 0], 1), (&[3, 2], -1)])
}

pub fn cycle_w1() -> Result<NamedCycle, CocycleError> {
    s4_cycle("w1", 3, &[(&[0, 3, 1], 1), (&[0, 1, 0], 1)])
}

pub fn cycle_w2() -> Result<NamedCycle, CocycleError> {
    s4_cycle("w2", 3, &[(&[1, 0, 1], -1), (&[0, 3, 0], 1), (&[0, 3, 2], -1)])
}

/// Basis over `F_p` of the plain `n`-cocycles of `q` (degenerate values 0).
pub fn cocycle_basis(q: &Quandle, n: usize, p: u64) -> Result<Vec<Cochain>, CocycleError> {
    let complex = Complex::plain(q);
    let basis = complex.basis(n)?;
    let d = complex.boundary_matrix(n + 1)?;
    let rows: Vec<Vec<u64>> = (0..d.cols())
        .map(|j| {
            let mut v = vec![0u64; basis.len()];
            for &(i, a) in d.column(j) {
                v[i] = modp::reduce(a, p);
            }
            v
        })
        .collect();
    let null = if rows.is_empty() {
        (0..basis.len())
            .map(|i| {
                let mut v = vec![0u64; basis.len()];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        modp::null_space(&rows, basis.len(), p)
    };
    Ok(null
        .into_iter()
        .map(|v| {
            Cochain::from_entries(
                n,
                Ring::Mod(p),
                basis.iter().zip(v).filter(|(_, a)| *a != 0).map(|(g, a)| (g.clone(), a as i64)),
            )
        })
        .collect())
}

/// Splits `"name@R5"` into `("name", "R5")`; a bare `@Rp` takes `default_p`.
fn split_name(name: &str, default_p: u64) -> Result<(String, Option<u64>), CocycleError> {
    let unknown = || CocycleError::UnknownName(name.to_string());
    let (base, q) = name.split_once('@').ok_or_else(unknown)?;
    match q {
        "S4" => Ok((base.to_string(), None)),
        "Rp" => Ok((base.to_string(), Some(default_p))),
        _ => {
            let p = q.strip_prefix('R').and_then(|s| s.parse::<u64>().ok()).ok_or_else(unknown)?;
            Ok((base.to_string(), Some(p)))
        }
    }
}

/// Looks up a registry cocycle. `"shift:<name>"` returns `σ^♯` of the named
/// cocycle, tabulated on the full basis.
pub fn lookup_cocycle(name: &str, default_p: u64) -> Result<NamedCocycle, CocycleError> {
    if let Some(inner) = name.strip_prefix("shift:") {
        let base = lookup_cocycle(inner, default_p)?;
        let complex = Complex::plain(&base.quandle);
        let shifted = pullback_sigma(&base.cochain, &complex)?;
        let role = base.role;
        return NamedCocycle::gated(
            format!("shift:{}", base.name),
            base.quandle,
            shifted,
            role,
            &format!("σ^♯ of {}", base.name),
        );
    }
    let (base, p) = split_name(name, default_p)?;
    match (base.as_str(), p) {
        ("theta", Some(p)) => theta(p),
        ("psi0", Some(p)) => psi0(p),
        ("psi1", Some(p)) => psi1(p),
        ("phi", None) => phi(),
        ("eta1", None) => eta1(),
        ("eta2", None) => eta2(),
        ("eta11", None) => eta11(),
        ("f", None) => f_witness(),
        _ => Err(CocycleError::UnknownName(name.to_string())),
    }
}

pub fn lookup_cycle(name: &str, default_p: u64) -> Result<NamedCycle, CocycleError> {
    let (base, p) = split_name(name, default_p)?;
    match (base.as_str(), p) {
        ("z", Some(p)) => cycle_z(p),
        ("z0", Some(p)) => cycle_z0(p),
        ("w", Some(p)) => cycle_w(p),
        ("z1", None) => cycle_z1(),
        ("z2", None) => cycle_z2(),
        ("w1", None) => cycle_w1(),
        ("w2", None) => cycle_w2(),
        _ => Err(CocycleError::UnknownName(name.to_string())),
    }
}

pub const COCYCLE_NAMES: &[&str] = &[
    "theta@Rp", "psi0@Rp", "psi1@Rp", "phi@S4", "eta1@S4", "eta2@S4", "eta11@S4", "f@S4",
];

pub const CYCLE_NAMES: &[&str] = &["z@Rp", "z0@Rp", "w@Rp", "z1@S4", "z2@S4", "w1@S4", "w2@S4"];

/// `σ^♯φ` as a lazy cochain, for callers that only evaluate it.
pub fn shifted(phi: &Cochain) -> SigmaPullback<'_, Cochain> {
    SigmaPullback { phi }
}

/// Signed representative in `(−m/2, m/2]` of a ring value, for display.
pub fn signed(v: i64, ring: Ring) -> i64 {
    match ring {
        Ring::Integers => v,
        Ring::Mod(m) => {
            let m = m as i64;
            let v = v.rem_euclid(m);
            if 2 * v > m {
                v - m
            } else {
                v
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{evaluate, CochainLike};

    #[test]
    fn chi_routes_and_special_values() {
        for p in [3u64, 5, 7, 11, 13] {
            let t = ChiTable::new(p).unwrap();
            let fermat = ((1u64 << p) - 2) / p % p;
            for x in 0..p as i64 {
                assert_eq!(t.get(x, 0), 0);
                assert_eq!(t.get(x, x), 0);
                // χ(0, y) is the Fermat quotient times y, not zero
                assert_eq!(t.get(0, x), fermat * x as u64 % p);
            }
        }
        assert_eq!(chi_exact(3, 1, 1).unwrap(), 0);
        assert!(matches!(chi_exact(9, 1, 1), Err(CocycleError::NotOddPrime(9))));
        assert!(matches!(chi_sum(2, 1, 1), Err(CocycleError::NotOddPrime(2))));
    }

    #[test]
    fn dihedral_pairings() {
        for p in [3u64, 5, 7] {
            let m = p as i64;
            let th = theta(p).unwrap();
            let z = cycle_z(p).unwrap();
            let z0 = cycle_z0(p).unwrap();
            let w = cycle_w(p).unwrap();
            assert_eq!(evaluate(&th.cochain, &z.chain).unwrap(), (-2i64).rem_euclid(m));
            assert_eq!(evaluate(&th.cochain, &z0.chain).unwrap(), (-1i64).rem_euclid(m));
            assert_eq!(evaluate(&psi0(p).unwrap().cochain, &w.chain).unwrap(), (-2i64).rem_euclid(m));
            assert_eq!(evaluate(&psi1(p).unwrap().cochain, &w.chain).unwrap(), 0);
            let plain = Complex::plain(&w.quandle);
            assert_eq!(plain.sigma(&w.chain).unwrap(), -&z.chain);
        }
    }

    #[test]
    fn s4_pairings() {
        let ev = |c: &NamedCocycle, z: &NamedCycle| evaluate(&c.cochain, &z.chain).unwrap();
        let (z1, z2, w1, w2) = (cycle_z1().unwrap(), cycle_z2().unwrap(), cycle_w1().unwrap(), cycle_w2().unwrap());
        let phi = phi().unwrap();
        assert_eq!((ev(&phi, &z1), ev(&phi, &z2)), (2, 2));
        assert_eq!((ev(&eta1().unwrap(), &w1), ev(&eta1().unwrap(), &w2)), (0, 2));
        assert_eq!((ev(&eta2().unwrap(), &w1), ev(&eta2().unwrap(), &w2)), (1, 0));
        assert_eq!((ev(&eta11().unwrap(), &w1), ev(&eta11().unwrap(), &w2)), (0, 0));
        let s = shifted(&phi.cochain);
        assert_eq!((evaluate(&s, &w1.chain).unwrap(), evaluate(&s, &w2.chain).unwrap()), (2, 2));
        let plain = Complex::plain(&phi.quandle);
        assert_eq!(plain.sigma(&w1.chain).unwrap(), z1.chain);
        assert_ne!(plain.sigma(&w2.chain).unwrap(), z2.chain);
    }

    #[test]
    fn registry_round_trip() {
        for name in COCYCLE_NAMES {
            let c = lookup_cocycle(name, 3).unwrap();
            assert!(c.name.ends_with("@R3") || c.name.ends_with("@S4"));
        }
        for name in CYCLE_NAMES {
            lookup_cycle(name, 5).unwrap();
        }
        let s = lookup_cocycle("shift:phi@S4", 3).unwrap();
        assert_eq!(s.cochain.degree(), 3);
        assert_eq!(lookup_cocycle("theta@R7", 3).unwrap().name, "theta@R7");
        assert!(lookup_cocycle("theta@R9", 3).is_err());
        assert!(lookup_cocycle("phi@R3", 3).is_err());
        assert!(lookup_cycle("nope", 3).is_err());
    }

    #[test]
    fn cocycle_basis_dimensions() {
        // Z¹(R3; F3) is the constants; Z¹(T2; F2) is every function
        assert_eq!(cocycle_basis(&Quandle::dihedral(3).unwrap(), 1, 3).unwrap().len(), 1);
        assert_eq!(cocycle_basis(&Quandle::trivial(2).unwrap(), 1, 2).unwrap().len(), 2);
        let q = Quandle::dihedral(3).unwrap();
        for c in cocycle_basis(&q, 2, 3).unwrap() {
            assert!(is_cocycle(&c, &Complex::plain(&q)).unwrap());
        }
    }
}
