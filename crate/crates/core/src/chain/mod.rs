//! The quandle chain complex `C_*^Q(X)_Y` of a quandle `X` with coefficients
//! twisted by an X-set `Y`, together with the shifting maps, the inclusion
//! `ι` and induced chain maps.
//!
//! The plain complex is the case `Y = {y0}` with `C_0 = 0`; its generators
//! carry `Point::Unit` in the `y` slot. Degenerate generators (two equal
//! adjacent entries) are identified with zero as soon as they are produced.

mod cochain;
mod homology;
mod homotopy;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::linalg::{LinalgError, SparseMatrix};
use crate::quandle::{Direction, Point, Quandle, QuandleError, QuandleHom, XMap, XSet, XSetKind};

pub use cochain::{
    coboundary, evaluate, is_cocycle, pullback_sigma, Cochain, CochainLike, IotaPullback, Ring, SigmaPullback,
    XMapPullback,
};
pub use homology::{
    cohomology, cohomology_via_quotient, express_class, homology, homology_via_quotient, Expression,
};
pub use homotopy::{
    check_boundary_identities, check_chain_map_laws, verify_homotopy, HomotopyFailure, HomotopyKind,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("the x-set {0} is infinite and cannot be enumerated")]
    InfiniteXSet(String),
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("operation requires the plain complex")]
    NotPlain,
    #[error("operation requires the x-set {expected}, got {got}")]
    WrongXSet { expected: String, got: String },
    #[error("generator {0} is not a basis element of this complex")]
    ForeignGenerator(Generator),
    #[error("malformed chain or cochain data: {0}")]
    Malformed(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// `(y; x_1, ..., x_n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub y: Point,
    pub xs: Vec<usize>,
}

impl Generator {
    pub fn new(y: Point, xs: Vec<usize>) -> Self {
        Generator { y, xs }
    }

    /// A generator of the plain complex.
    pub fn plain(xs: &[usize]) -> Self {
        Generator {
            y: Point::Unit,
            xs: xs.to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.xs.len()
    }

    pub fn is_degenerate(&self) -> bool {
        self.xs.windows(2).any(|w| w[0] == w[1])
    }

    /// Comma-joined tuple, prefixed by `y;` unless `y` is the unit.
    pub fn key(&self) -> String {
        let xs = self.xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match &self.y {
            Point::Unit => xs,
            y => format!("{y};{xs}"),
        }
    }

    pub fn parse_key(key: &str, kind: &XSetKind) -> Result<Generator, ChainError> {
        let bad = || ChainError::Malformed(format!("bad generator key `{key}`"));
        let (y, xs) = match key.split_once(';') {
            Some((y, xs)) => {
                let y = y.trim();
                let y = match kind {
                    XSetKind::QuandleItself => Point::Elem(y.parse().map_err(|_| bad())?),
                    XSetKind::Integers => Point::Int(y.parse().map_err(|_| bad())?),
                    _ => return Err(bad()),
                };
                (y, xs)
            }
            None if *kind == XSetKind::Singleton => (Point::Unit, key),
            None => return Err(bad()),
        };
        let xs = if xs.trim().is_empty() {
            Vec::new()
        } else {
            xs.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(Generator { y, xs })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = self.xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match &self.y {
            Point::Unit => write!(f, "({xs})"),
            y => write!(f, "({y}; {xs})"),
        }
    }
}

/// A finitely supported integer combination of non-degenerate generators of
/// a single degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Generator, i64>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(g: Generator) -> Self {
        let mut c = Chain::zero(g.degree());
        c.add_term(g, 1);
        c
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut c = Chain::zero(degree);
        for (g, k) in terms {
            c.add_term(g, k);
        }
        c
    }

    /// Plain chain from `(tuple, coefficient)` pairs.
    pub fn plain(degree: usize, terms: &[(&[usize], i64)]) -> Self {
        Chain::from_terms(degree, terms.iter().map(|(xs, k)| (Generator::plain(xs), *k)))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `k · g`; degenerate generators are dropped.
    pub fn add_term(&mut self, g: Generator, k: i64) {
        assert_eq!(g.degree(), self.degree, "generator {g} has the wrong degree");
        if k == 0 || g.is_degenerate() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, g: &Generator) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.terms.iter().map(|(g, &k)| (g, k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Chain {
        Chain::from_terms(self.degree, self.iter().map(|(g, c)| (g.clone(), c * k)))
    }

    /// Applies a linear map given on generators.
    pub fn map_linear(&self, degree: usize, mut f: impl FnMut(&Generator, i64, &mut Chain)) -> Chain {
        let mut out = Chain::zero(degree);
        for (g, k) in self.iter() {
            f(g, k, &mut out);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let values: Map<String, Value> = self
            .terms
            .iter()
            .map(|(g, &k)| (g.key(), Value::from(k)))
            .collect();
        serde_json::json!({ "degree": self.degree, "values": values })
    }

    pub fn from_json(v: &Value, kind: &XSetKind) -> Result<Chain, ChainError> {
        let degree = v["degree"]
            .as_u64()
            .ok_or_else(|| ChainError::Malformed("missing degree".into()))? as usize;
        let values = v["values"]
            .as_object()
            .ok_or_else(|| ChainError::Malformed("missing values".into()))?;
        let mut c = Chain::zero(degree);
        for (key, k) in values {
            let g = Generator::parse_key(key, kind)?;
            if g.degree() != degree {
                return Err(ChainError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            let k = k
                .as_i64()
                .ok_or_else(|| ChainError::Malformed(format!("coefficient of {key} is not an integer")))?;
            c.add_term(g, k);
        }
        Ok(c)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, k)) in self.iter().enumerate() {
            let sign = match (i, k < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            match k.abs() {
                1 => write!(f, "{sign}{g}")?,
                mag => write!(f, "{sign}{mag}{g}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&Chain> for Chain {
    fn add_assign(&mut self, rhs: &Chain) {
        assert_eq!(self.degree, rhs.degree, "adding chains of different degrees");
        for (g, k) in rhs.iter() {
            self.add_term(g.clone(), k);
        }
    }
}

impl Add<&Chain> for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Chain> for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        let mut out = self.clone();
        out += &rhs.scale(-1);
        out
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scale(-1)
    }
}

impl Mul<&Chain> for i64 {
    type Output = Chain;
    fn mul(self, rhs: &Chain) -> Chain {
        rhs.scale(self)
    }
}

#[inline]
fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The complex `C_*^Q(X)_Y`. Immutable once built.
#[derive(Clone, Debug)]
pub struct Complex {
    quandle: Quandle,
    yset: XSet,
    plain: bool,
    y_index: Option<HashMap<Point, usize>>,
    y_elements: Option<Vec<Point>>,
}

impl Complex {
    /// The ordinary quandle complex: `Y` a singleton and `C_0 = 0`.
    pub fn plain(q: &Quandle) -> Self {
        Complex::build(q, XSet::singleton(q), true)
    }

    /// The generalized complex with coefficients in the X-set `y`.
    pub fn generalized(y: &XSet) -> Self {
        Complex::build(y.quandle(), y.clone(), false)
    }

    fn build(q: &Quandle, yset: XSet, plain: bool) -> Self {
        let y_elements = yset.elements();
        let y_index = y_elements
            .as_ref()
            .map(|els| els.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect());
        Complex {
            quandle: q.clone(),
            yset,
            plain,
            y_index,
            y_elements,
        }
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    pub fn yset(&self) -> &XSet {
        &self.yset
    }

    pub fn is_plain(&self) -> bool {
        self.plain
    }

    fn require_plain(&self) -> Result<(), ChainError> {
        if self.plain {
            Ok(())
        } else {
            Err(ChainError::NotPlain)
        }
    }

    fn y_elements(&self) -> Result<&[Point], ChainError> {
        self.y_elements
            .as_deref()
            .ok_or_else(|| ChainError::InfiniteXSet(self.yset.kind().to_string()))
    }

    /// Number of non-degenerate tuples of length `n`.
    pub fn tuple_count(&self, n: usize) -> usize {
        let k = self.quandle.size();
        if n == 0 {
            1
        } else {
            k * (k - 1).pow(n as u32 - 1)
        }
    }

    /// Rank of `C_n`.
    pub fn dim(&self, n: usize) -> Result<usize, ChainError> {
        if self.plain && n == 0 {
            return Ok(0);
        }
        Ok(self.y_elements()?.len() * self.tuple_count(n))
    }

    /// Non-degenerate tuples of length `n` in lexicographic order.
    pub fn tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let k = self.quandle.size();
        let mut out = Vec::with_capacity(self.tuple_count(n));
        let mut cur = Vec::with_capacity(n);
        fn rec(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for x in 0..k {
                if cur.last() != Some(&x) {
                    cur.push(x);
                    rec(k, n, cur, out);
                    cur.pop();
                }
            }
        }
        rec(k, n, &mut cur, &mut out);
        out
    }

    /// Basis of `C_n`, ordered lexicographically on `(y, x_1, ..., x_n)`.
    pub fn basis(&self, n: usize) -> Result<Vec<Generator>, ChainError> {
        if self.plain && n == 0 {
            return Ok(Vec::new());
        }
        let ys = self.y_elements()?;
        let tuples = self.tuples(n);
        Ok(ys
            .iter()
            .flat_map(|y| tuples.iter().map(move |xs| Generator::new(y.clone(), xs.clone())))
            .collect())
    }

    /// Position of `g` in [`Complex::basis`], by mixed-radix arithmetic.
    pub fn index(&self, g: &Generator) -> Result<usize, ChainError> {
        let foreign = || ChainError::ForeignGenerator(g.clone());
        if g.is_degenerate() || (self.plain && g.degree() == 0) {
            return Err(foreign());
        }
        let k = self.quandle.size();
        let yi = *self
            .y_index
            .as_ref()
            .ok_or_else(|| ChainError::InfiniteXSet(self.yset.kind().to_string()))?
            .get(&g.y)
            .ok_or_else(foreign)?;
        let mut t = 0usize;
        for (i, &x) in g.xs.iter().enumerate() {
            if x >= k {
                return Err(foreign());
            }
            t = if i == 0 {
                x
            } else {
                let prev = g.xs[i - 1];
                t * (k - 1) + if x < prev { x } else { x - 1 }
            };
        }
        Ok(yi * self.tuple_count(g.degree()) + t)
    }

    fn check_generator(&self, g: &Generator) -> Result<(), ChainError> {
        let n = self.quandle.size();
        if g.xs.iter().any(|&x| x >= n) || !self.yset.contains(&g.y) {
            return Err(ChainError::ForeignGenerator(g.clone()));
        }
        Ok(())
    }

    /// Adds `k · ∂⁰(g)` to `out`.
    fn boundary0_gen(&self, g: &Generator, k: i64, out: &mut Chain) {
        let n = g.degree();
        if n == 0 || (self.plain && n == 1) {
            return;
        }
        for i in 1..=n {
            let mut xs = g.xs.clone();
            xs.remove(i - 1);
            out.add_term(Generator::new(g.y.clone(), xs), k * sign(i));
        }
    }

    /// Adds `k · ∂¹(g)` to `out`.
    fn boundary1_gen(&self, g: &Generator, k: i64, out: &mut Chain) {
        let n = g.degree();
        if n == 0 || (self.plain && n == 1) {
            return;
        }
        let q = &self.quandle;
        for i in 1..=n {
            let xi = g.xs[i - 1];
            let y = self.yset.act(&g.y, xi, Direction::Forward);
            let xs: Vec<usize> = g.xs[..i - 1]
                .iter()
                .map(|&x| q.op(x, xi))
                .chain(g.xs[i..].iter().copied())
                .collect();
            out.add_term(Generator::new(y, xs), k * sign(i));
        }
    }

    fn lowered(c: &Chain) -> usize {
        c.degree().saturating_sub(1)
    }

    fn checked(&self, c: &Chain) -> Result<(), ChainError> {
        c.iter().try_for_each(|(g, _)| self.check_generator(g))
    }

    pub fn boundary0(&self, c: &Chain) -> Result<Chain, ChainError> {
        self.checked(c)?;
        Ok(c.map_linear(Self::lowered(c), |g, k, out| self.boundary0_gen(g, k, out)))
    }

    pub fn boundary1(&self, c: &Chain) -> Result<Chain, ChainError> {
        self.checked(c)?;
        Ok(c.map_linear(Self::lowered(c), |g, k, out| self.boundary1_gen(g, k, out)))
    }

    /// `∂ = ∂⁰ − ∂¹`.
    pub fn boundary(&self, c: &Chain) -> Result<Chain, ChainError> {
        self.checked(c)?;
        Ok(c.map_linear(Self::lowered(c), |g, k, out| {
            self.boundary0_gen(g, k, out);
            self.boundary1_gen(g, -k, out);
        }))
    }

    /// `σ_n = (−1)^n ∂⁰_n` on the plain complex.
    pub fn sigma(&self, c: &Chain) -> Result<Chain, ChainError> {
        self.require_plain()?;
        Ok(self.boundary0(c)?.scale(sign(c.degree())))
    }

    /// `σ̃_n = (−1)^n ∂¹_n` on the plain complex.
    pub fn sigma_tilde(&self, c: &Chain) -> Result<Chain, ChainError> {
        self.require_plain()?;
        Ok(self.boundary1(c)?.scale(sign(c.degree())))
    }

    /// `ι_n(x_0; x) = (−1)^n (x_0, x)`, from the complex over `Y = X` into
    /// the plain complex. Must be called on a complex over `X` itself.
    pub fn iota(&self, c: &Chain) -> Result<Chain, ChainError> {
        if self.plain || *self.yset.kind() != XSetKind::QuandleItself {
            return Err(ChainError::WrongXSet {
                expected: XSetKind::QuandleItself.to_string(),
                got: self.yset.kind().to_string(),
            });
        }
        self.checked(c)?;
        let n = c.degree();
        Ok(c.map_linear(n + 1, |g, k, out| {
            let Point::Elem(x0) = g.y else {
                unreachable!("checked above")
            };
            let mut xs = Vec::with_capacity(n + 1);
            xs.push(x0);
            xs.extend_from_slice(&g.xs);
            out.add_term(Generator::plain(&xs), k * sign(n));
        }))
    }

    /// Sparse matrix of `∂_n : C_n → C_{n−1}` in the basis order.
    pub fn boundary_matrix(&self, n: usize) -> Result<SparseMatrix, ChainError> {
        let rows = if n == 0 { 0 } else { self.dim(n - 1)? };
        let basis = self.basis(n)?;
        let mut columns = Vec::with_capacity(basis.len());
        for g in &basis {
            let mut image = Chain::zero(n.saturating_sub(1));
            if n > 0 {
                self.boundary0_gen(g, 1, &mut image);
                self.boundary1_gen(g, -1, &mut image);
            }
            let mut col = Vec::with_capacity(image.len());
            for (h, k) in image.iter() {
                col.push((self.index(h)?, k));
            }
            columns.push(col);
        }
        Ok(SparseMatrix::from_columns(rows, columns))
    }

    /// Coordinates of `c` in the basis of its degree.
    pub fn chain_to_vector(&self, c: &Chain) -> Result<Vec<BigInt>, ChainError> {
        let mut v = vec![BigInt::zero(); self.dim(c.degree())?];
        for (g, k) in c.iter() {
            v[self.index(g)?] += k;
        }
        Ok(v)
    }

    pub fn vector_to_chain(&self, n: usize, v: &[BigInt]) -> Result<Chain, ChainError> {
        let basis = self.basis(n)?;
        if v.len() != basis.len() {
            return Err(ChainError::Malformed(format!(
                "vector of length {} for a basis of size {}",
                v.len(),
                basis.len()
            )));
        }
        let mut c = Chain::zero(n);
        for (g, k) in basis.into_iter().zip(v) {
            let k = k
                .to_i64()
                .ok_or_else(|| ChainError::Malformed(format!("coefficient {k} exceeds 64 bits")))?;
            c.add_term(g, k);
        }
        Ok(c)
    }
}

/// `p_♯(y; x) = (p(y); x)`.
pub fn pushforward_xmap(p: &XMap, c: &Chain) -> Result<Chain, ChainError> {
    for (g, _) in c.iter() {
        if !p.source().contains(&g.y) {
            return Err(ChainError::ForeignGenerator(g.clone()));
        }
    }
    Ok(c.map_linear(c.degree(), |g, k, out| {
        out.add_term(Generator::new(p.apply(&g.y), g.xs.clone()), k)
    }))
}

/// `f_♯` for a quandle homomorphism: applies `f` to every tuple entry and to
/// quandle elements in the `y` slot.
pub fn pushforward_hom(f: &QuandleHom, c: &Chain) -> Result<Chain, ChainError> {
    fn map_point(f: &QuandleHom, p: &Point) -> Point {
        match p {
            Point::Elem(x) => Point::Elem(f.apply(*x)),
            Point::Pair(l, r) => Point::pair(map_point(f, l), map_point(f, r)),
            other => other.clone(),
        }
    }
    let n = f.source().size();
    for (g, _) in c.iter() {
        if g.xs.iter().any(|&x| x >= n) {
            return Err(ChainError::ForeignGenerator(g.clone()));
        }
    }
    Ok(c.map_linear(c.degree(), |g, k, out| {
        let xs = g.xs.iter().map(|&x| f.apply(x)).collect();
        out.add_term(Generator::new(map_point(f, &g.y), xs), k)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> Quandle {
        Quandle::dihedral(3).unwrap()
    }

    #[test]
    fn degree_two_boundary() {
        let cx = Complex::plain(&r3());
        let d = cx.boundary(&Chain::plain(2, &[(&[0, 1], 1)])).unwrap();
        assert_eq!(d, Chain::plain(1, &[(&[0], 1), (&[2], -1)]));
        let t2 = Complex::plain(&Quandle::trivial(2).unwrap());
        assert!(t2.boundary(&Chain::plain(2, &[(&[0, 1], 1)])).unwrap().is_zero());
    }

    #[test]
    fn plain_boundary_vanishes_in_degree_one() {
        let cx = Complex::plain(&r3());
        assert!(cx.boundary(&Chain::plain(1, &[(&[2], 5)])).unwrap().is_zero());
        assert!(cx.sigma(&Chain::plain(1, &[(&[2], 5)])).unwrap().is_zero());
    }

    #[test]
    fn generalized_degree_one_over_integers() {
        let q = r3();
        let cx = Complex::generalized(&XSet::integers(&q));
        let g = Generator::new(Point::Int(5), vec![1]);
        let d = cx.boundary(&Chain::generator(g)).unwrap();
        let expected = Chain::from_terms(
            0,
            [(Generator::new(Point::Int(5), vec![]), -1), (Generator::new(Point::Int(6), vec![]), 1)],
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn sigma_in_degree_two() {
        let cx = Complex::plain(&r3());
        let s = cx.sigma(&Chain::plain(2, &[(&[0, 1], 1)])).unwrap();
        assert_eq!(s, Chain::plain(1, &[(&[1], -1), (&[0], 1)]));
    }

    #[test]
    fn iota_signs_and_degeneracy() {
        let q = r3();
        let cx = Complex::generalized(&XSet::itself(&q));
        let g = |y: usize, xs: &[usize]| Chain::generator(Generator::new(Point::Elem(y), xs.to_vec()));
        assert_eq!(cx.iota(&g(0, &[1])).unwrap(), Chain::plain(2, &[(&[0, 1], -1)]));
        assert_eq!(cx.iota(&g(0, &[1, 2])).unwrap(), Chain::plain(3, &[(&[0, 1, 2], 1)]));
        assert!(cx.iota(&g(1, &[1])).unwrap().is_zero());
        assert!(Complex::plain(&q).iota(&Chain::plain(1, &[(&[0], 1)])).is_err());
    }

    #[test]
    fn degenerate_terms_vanish() {
        let mut c = Chain::plain(3, &[(&[0, 0, 1], 4), (&[0, 1, 0], 2)]);
        assert_eq!(c.len(), 1);
        c.add_term(Generator::plain(&[0, 1, 0]), -2);
        assert!(c.is_zero());
    }

    #[test]
    fn basis_and_index_agree() {
        let s4 = Quandle::tetrahedral();
        let cx = Complex::plain(&s4);
        for n in 1..=4 {
            let basis = cx.basis(n).unwrap();
            assert_eq!(basis.len(), cx.dim(n).unwrap());
            let mut sorted = basis.clone();
            sorted.sort();
            assert_eq!(sorted, basis, "basis is lexicographic");
            for (i, g) in basis.iter().enumerate() {
                assert_eq!(cx.index(g).unwrap(), i);
            }
        }
        let zx = Complex::generalized(&XSet::product(&XSet::itself(&s4), &XSet::itself(&s4)));
        for (i, g) in zx.basis(2).unwrap().iter().enumerate() {
            assert_eq!(zx.index(g).unwrap(), i);
        }
    }

    #[test]
    fn pushforwards() {
        let q = r3();
        let z = XSet::integers(&q);
        let qmap = XMap::to_singleton(&z);
        let c = Chain::generator(Generator::new(Point::Int(3), vec![0, 1]));
        assert_eq!(pushforward_xmap(&qmap, &c).unwrap(), Chain::plain(2, &[(&[0, 1], 1)]));

        let zx = XSet::product(&z, &XSet::itself(&q));
        let p = XMap::projection(&zx, 1).unwrap();
        let c = Chain::generator(Generator::new(Point::pair(Point::Int(2), Point::Elem(1)), vec![0, 2]));
        assert_eq!(
            pushforward_xmap(&p, &c).unwrap(),
            Chain::generator(Generator::new(Point::Elem(1), vec![0, 2]))
        );
        let id = XMap::identity(&zx);
        assert_eq!(pushforward_xmap(&id, &c).unwrap(), c);

        let t1 = Quandle::trivial(1).unwrap();
        let collapse = QuandleHom::new(q.clone(), t1, vec![0, 0, 0]).unwrap();
        assert!(pushforward_hom(&collapse, &Chain::plain(2, &[(&[0, 1], 1)])).unwrap().is_zero());
        let c = Chain::plain(2, &[(&[0, 1], 3)]);
        assert_eq!(pushforward_hom(&QuandleHom::identity(&q), &c).unwrap(), c);
    }

    #[test]
    fn json_round_trip() {
        let c = Chain::plain(3, &[(&[0, 3, 1], 1), (&[0, 1, 0], -2)]);
        let v = c.to_json();
        assert_eq!(v["values"]["0,1,0"], -2);
        assert_eq!(Chain::from_json(&v, &XSetKind::Singleton).unwrap(), c);
        let g = Chain::generator(Generator::new(Point::Elem(2), vec![0, 1]));
        assert_eq!(Chain::from_json(&g.to_json(), &XSetKind::QuandleItself).unwrap(), g);
        assert!(Chain::from_json(&g.to_json(), &XSetKind::Singleton).is_err());
    }

    #[test]
    fn display() {
        let c = Chain::plain(2, &[(&[0, 3], 1), (&[3, 2], -1)]);
        assert_eq!(c.to_string(), "(0,3) - (3,2)");
        assert_eq!(Chain::plain(2, &[(&[1, 0], -2)]).to_string(), "-2(1,0)");
        assert_eq!(Chain::zero(2).to_string(), "0");
    }

    #[test]
    fn boundary_matrix_shape() {
        let cx = Complex::plain(&Quandle::tetrahedral());
        let d3 = cx.boundary_matrix(3).unwrap();
        assert_eq!((d3.rows(), d3.cols()), (12, 36));
        assert_eq!(cx.boundary_matrix(1).unwrap().rows(), 0);
        // every column has at most 2n entries
        assert!((0..d3.cols()).all(|j| d3.column(j).len() <= 6));
    }
}
