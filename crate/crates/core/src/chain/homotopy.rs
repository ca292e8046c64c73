//! Generator-by-generator verification of the boundary identities, the
//! chain-map laws and three explicit chain homotopies.
//!
//! Complexes over the infinite X-set `Z` are checked on a finite window of
//! integer coordinates. Each identity is linear in the integer coordinate
//! `a` of a generator (both sides are affine in `a` with integer
//! coefficients), so agreement on two or more consecutive values of `a`
//! already forces agreement for every `a`; the window used by the test
//! suite is `{-1, 0, 1, 2}`.

// failures carry both chains for the report; they are the cold path
#![allow(clippy::result_large_err)]

use std::fmt;

use super::{pushforward_xmap, Chain, ChainError, Complex, Generator};
use crate::quandle::{Point, Quandle, XMap, XSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomotopyKind {
    /// `P_n = (−1)^n n · id` between `σ` and `σ̃` on the plain complex.
    ShiftPair,
    /// `P_n(a, x_0; x) = a · (x_0, x)` on the complex over `Z × X`.
    Shadow,
    /// `P_n(a; x) = (−1)^n a · (x)` on the complex over `Z`.
    Null,
}

impl HomotopyKind {
    pub const ALL: [HomotopyKind; 3] = [HomotopyKind::ShiftPair, HomotopyKind::Shadow, HomotopyKind::Null];
}

impl fmt::Display for HomotopyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HomotopyKind::ShiftPair => "shift-pair",
            HomotopyKind::Shadow => "shadow",
            HomotopyKind::Null => "null",
        };
        write!(f, "{s}")
    }
}

/// The first generator on which an identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyFailure {
    pub identity: String,
    pub generator: Generator,
    pub lhs: Chain,
    pub rhs: Chain,
}

impl fmt::Display for HomotopyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails on {}: left side {} but right side {}",
            self.identity, self.generator, self.lhs, self.rhs
        )
    }
}

/// Generators of `C_n`, enumerating an infinite X-set through `window`.
fn generators(complex: &Complex, n: usize, window: &[i64]) -> Vec<Generator> {
    if complex.is_plain() && n == 0 {
        return Vec::new();
    }
    let ys = complex.yset().window(window);
    let tuples = complex.tuples(n);
    ys.iter()
        .flat_map(|y| tuples.iter().map(move |xs| Generator::new(y.clone(), xs.clone())))
        .collect()
}

fn expect_eq(identity: &str, g: &Generator, lhs: Chain, rhs: Chain) -> Result<(), HomotopyFailure> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(HomotopyFailure {
            identity: identity.to_string(),
            generator: g.clone(),
            lhs,
            rhs,
        })
    }
}

fn internal(e: ChainError) -> HomotopyFailure {
    panic!("chain operation failed during verification: {e}")
}

/// Chains in plain degree 0 are zero.
fn plain_truncate(c: Chain) -> Chain {
    if c.degree() == 0 {
        Chain::zero(0)
    } else {
        c
    }
}

/// `∂∂ = 0`, `∂⁰∂⁰ = 0`, `∂¹∂¹ = 0` and `∂⁰∂¹ + ∂¹∂⁰ = 0` on every generator of
/// degree `2..=max_degree`.
pub fn check_boundary_identities(complex: &Complex, max_degree: usize, window: &[i64]) -> Result<usize, HomotopyFailure> {
    let mut checked = 0;
    for n in 2..=max_degree {
        for g in generators(complex, n, window) {
            let c = Chain::generator(g.clone());
            let d0 = complex.boundary0(&c).map_err(internal)?;
            let d1 = complex.boundary1(&c).map_err(internal)?;
            let d = complex.boundary(&c).map_err(internal)?;
            let zero = Chain::zero(n - 2);
            expect_eq("∂∂ = 0", &g, complex.boundary(&d).map_err(internal)?, zero.clone())?;
            expect_eq("∂⁰∂⁰ = 0", &g, complex.boundary0(&d0).map_err(internal)?, zero.clone())?;
            expect_eq("∂¹∂¹ = 0", &g, complex.boundary1(&d1).map_err(internal)?, zero.clone())?;
            let mixed = &complex.boundary0(&d1).map_err(internal)? + &complex.boundary1(&d0).map_err(internal)?;
            expect_eq("∂⁰∂¹ + ∂¹∂⁰ = 0", &g, mixed, zero)?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// Chain-map laws up to `max_degree`: `σ` and `σ̃` commute with `∂` on the
/// plain complex, `ι` commutes with `∂`, and the maps `p_♯` induced by the
/// projections of `Z × X` and the map to a point are chain maps and compose
/// functorially.
pub fn check_chain_map_laws(q: &Quandle, max_degree: usize, window: &[i64]) -> Result<usize, HomotopyFailure> {
    let plain = Complex::plain(q);
    let over_x = Complex::generalized(&XSet::itself(q));
    let z = XSet::integers(q);
    let zx = XSet::product(&z, &XSet::itself(q));
    let over_zx = Complex::generalized(&zx);
    let p = XMap::projection(&zx, 1).map_err(|e| internal(e.into()))?;
    let qx = XMap::to_singleton(&XSet::itself(q));
    let qp = XMap::compose(&qx, &p);
    let singleton = Complex::generalized(&XSet::singleton(q));
    let over_x_target = Complex::generalized(p.target());
    let mut checked = 0;

    for n in 1..=max_degree {
        for g in generators(&plain, n, window) {
            let c = Chain::generator(g.clone());
            let d = plain.boundary(&c).map_err(internal)?;
            let lhs = plain.boundary(&plain.sigma(&c).map_err(internal)?).map_err(internal)?;
            let rhs = plain_truncate(plain.sigma(&d).map_err(internal)?);
            expect_eq("∂σ = σ∂", &g, plain_truncate(lhs), rhs)?;
            let lhs = plain.boundary(&plain.sigma_tilde(&c).map_err(internal)?).map_err(internal)?;
            let rhs = plain_truncate(plain.sigma_tilde(&d).map_err(internal)?);
            expect_eq("∂σ̃ = σ̃∂", &g, plain_truncate(lhs), rhs)?;
            checked += 1;
        }
    }

    for n in 0..=max_degree.saturating_sub(1) {
        for g in generators(&over_x, n, window) {
            let c = Chain::generator(g.clone());
            let lhs = plain.boundary(&over_x.iota(&c).map_err(internal)?).map_err(internal)?;
            let rhs = if n == 0 {
                Chain::zero(0)
            } else {
                over_x.iota(&over_x.boundary(&c).map_err(internal)?).map_err(internal)?
            };
            expect_eq("∂ι = ι∂", &g, plain_truncate(lhs), rhs)?;
            checked += 1;
        }
    }

    for n in 0..=max_degree {
        for g in generators(&over_zx, n, window) {
            let c = Chain::generator(g.clone());
            let d = over_zx.boundary(&c).map_err(internal)?;
            let push = |m: &XMap, ch: &Chain| pushforward_xmap(m, ch).map_err(internal);
            expect_eq(
                "∂p_♯ = p_♯∂",
                &g,
                over_x_target.boundary(&push(&p, &c)?).map_err(internal)?,
                push(&p, &d)?,
            )?;
            expect_eq(
                "∂q_♯ = q_♯∂",
                &g,
                singleton.boundary(&push(&qp, &c)?).map_err(internal)?,
                push(&qp, &d)?,
            )?;
            expect_eq("(q∘p)_♯ = q_♯∘p_♯", &g, push(&qp, &c)?, push(&qx, &push(&p, &c)?)?)?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// Checks `P∂ + ∂P = (the kind's right-hand side)` on every generator of
/// degree `0..=max_degree`; returns the number of generators checked.
pub fn verify_homotopy(
    kind: HomotopyKind,
    q: &Quandle,
    max_degree: usize,
    window: &[i64],
) -> Result<usize, HomotopyFailure> {
    let plain = Complex::plain(q);
    let mut checked = 0;
    match kind {
        HomotopyKind::ShiftPair => {
            let p = |c: &Chain| {
                let n = c.degree() as i64;
                let s = if n % 2 == 0 { 1 } else { -1 };
                c.scale(s * n)
            };
            for n in 1..=max_degree {
                for g in generators(&plain, n, window) {
                    let c = Chain::generator(g.clone());
                    let d = plain.boundary(&c).map_err(internal)?;
                    let lhs = &p(&d) + &plain.boundary(&p(&c)).map_err(internal)?;
                    let rhs = &plain.sigma(&c).map_err(internal)? - &plain.sigma_tilde(&c).map_err(internal)?;
                    expect_eq("P∂ + ∂P = σ − σ̃", &g, plain_truncate(lhs), plain_truncate(rhs))?;
                    checked += 1;
                }
            }
        }
        HomotopyKind::Shadow => {
            let x = XSet::itself(q);
            let zx = XSet::product(&XSet::integers(q), &x);
            let over_zx = Complex::generalized(&zx);
            let over_x = Complex::generalized(&x);
            let proj = XMap::projection(&zx, 1).map_err(|e| internal(e.into()))?;
            let to_pt = XMap::to_singleton(&x);
            // P(a, x0; x) = a · (x0, x)
            let p = |c: &Chain| {
                c.map_linear(c.degree() + 1, |g, k, out| {
                    let Point::Pair(a, x0) = &g.y else { unreachable!() };
                    let (Point::Int(a), Point::Elem(x0)) = (&**a, &**x0) else {
                        unreachable!()
                    };
                    let mut xs = vec![*x0];
                    xs.extend_from_slice(&g.xs);
                    out.add_term(Generator::plain(&xs), k * a);
                })
            };
            for n in 0..=max_degree {
                for g in generators(&over_zx, n, window) {
                    let c = Chain::generator(g.clone());
                    let d = over_zx.boundary(&c).map_err(internal)?;
                    let p_d = if n == 0 { Chain::zero(0) } else { p(&d) };
                    let lhs = &plain_truncate(p_d) + &plain_truncate(plain.boundary(&p(&c)).map_err(internal)?);
                    let pc = pushforward_xmap(&proj, &c).map_err(internal)?;
                    let qpc = plain_truncate(to_plain(pushforward_xmap(&to_pt, &pc).map_err(internal)?));
                    let shifted = plain.sigma_tilde(&over_x.iota(&pc).map_err(internal)?).map_err(internal)?;
                    let rhs = &qpc - &plain_truncate(shifted);
                    expect_eq("P∂ + ∂P = q_♯p_♯ − (σ̃∘ι)p_♯", &g, plain_truncate(lhs), rhs)?;
                    checked += 1;
                }
            }
        }
        HomotopyKind::Null => {
            let z = XSet::integers(q);
            let over_z = Complex::generalized(&z);
            let to_pt = XMap::to_singleton(&z);
            // P(a; x) = (−1)^n a · (x)
            let p = |c: &Chain| {
                let n = c.degree();
                let s = if n.is_multiple_of(2) { 1 } else { -1 };
                c.map_linear(n, |g, k, out| {
                    let Point::Int(a) = g.y else { unreachable!() };
                    out.add_term(Generator::plain(&g.xs), s * k * a);
                })
            };
            for n in 0..=max_degree {
                for g in generators(&over_z, n, window) {
                    let c = Chain::generator(g.clone());
                    let d = over_z.boundary(&c).map_err(internal)?;
                    let p_d = if n == 0 { Chain::zero(0) } else { p(&d) };
                    let lhs = &plain_truncate(p_d) + &plain_truncate(plain.boundary(&plain_truncate(p(&c))).map_err(internal)?);
                    let qc = plain_truncate(to_plain(pushforward_xmap(&to_pt, &c).map_err(internal)?));
                    let rhs = plain.sigma_tilde(&qc).map_err(internal)?;
                    expect_eq("P∂ + ∂P = σ̃∘q_♯", &g, plain_truncate(lhs), plain_truncate(rhs))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// Chains over the singleton X-set are plain chains already; this only
/// normalizes the degree-0 convention.
fn to_plain(c: Chain) -> Chain {
    plain_truncate(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    const WINDOW: [i64; 4] = [-1, 0, 1, 2];

    #[test]
    fn identities_over_r3() {
        let q = Quandle::dihedral(3).unwrap();
        for kind in HomotopyKind::ALL {
            verify_homotopy(kind, &q, 3, &WINDOW).unwrap_or_else(|f| panic!("{kind}: {f}"));
        }
        check_boundary_identities(&Complex::plain(&q), 4, &WINDOW).unwrap();
        check_chain_map_laws(&q, 3, &WINDOW).unwrap();
    }

    #[test]
    fn wrong_homotopy_is_caught() {
        // P_n = n · id (sign dropped) must fail somewhere
        let q = Quandle::dihedral(3).unwrap();
        let plain = Complex::plain(&q);
        let g = Chain::plain(2, &[(&[0, 1], 1)]);
        let d = plain.boundary(&g).unwrap();
        let lhs = &d.scale(1) + &plain.boundary(&g.scale(2)).unwrap();
        let rhs = &plain.sigma(&g).unwrap() - &plain.sigma_tilde(&g).unwrap();
        assert_ne!(lhs, rhs);
    }
}
