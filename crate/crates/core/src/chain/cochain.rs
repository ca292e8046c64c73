use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{sign, Chain, ChainError, Complex, Generator};
use crate::quandle::{Point, Quandle, XMap, XSetKind};

/// Coefficient ring of a cochain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Ring {
    Integers,
    Mod(u64),
}

impl Ring {
    /// Canonical representative: `0..m` for `Z_m`.
    pub fn reduce(&self, v: i128) -> i64 {
        match *self {
            Ring::Integers => i64::try_from(v).expect("integer cochain value exceeds 64 bits"),
            Ring::Mod(m) => v.rem_euclid(m as i128) as i64,
        }
    }

    /// 0 for the integers, `m` for `Z_m`.
    pub fn modulus(&self) -> u64 {
        match *self {
            Ring::Integers => 0,
            Ring::Mod(m) => m,
        }
    }

    pub fn eq_elements(&self, a: i64, b: i64) -> bool {
        self.reduce(a as i128) == self.reduce(b as i128)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(m) => write!(f, "Z{m}"),
        }
    }
}

impl FromStr for Ring {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        let digits = s
            .strip_prefix("Z_")
            .or_else(|| s.strip_prefix('Z'))
            .ok_or_else(|| format!("unknown ring `{s}`"))?;
        match digits.parse::<u64>() {
            Ok(m) if m >= 2 => Ok(Ring::Mod(m)),
            _ => Err(format!("unknown ring `{s}`; expected Z or Zm with m >= 2")),
        }
    }
}

impl From<Ring> for String {
    fn from(r: Ring) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for Ring {
    type Error = String;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Anything that assigns ring values to generators of one degree.
pub trait CochainLike {
    fn degree(&self) -> usize;
    fn ring(&self) -> Ring;
    /// Canonical ring value on `g` (degenerate generators included).
    fn value(&self, g: &Generator) -> i64;
}

/// A sparse table of values, default 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    ring: Ring,
    values: BTreeMap<Generator, i64>,
}

impl Cochain {
    pub fn zero(degree: usize, ring: Ring) -> Self {
        Cochain {
            degree,
            ring,
            values: BTreeMap::new(),
        }
    }

    /// Builds a table from explicit entries. Entries on degenerate
    /// generators are kept so that [`is_cocycle`] can reject them.
    pub fn from_entries(degree: usize, ring: Ring, entries: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut c = Cochain::zero(degree, ring);
        for (g, v) in entries {
            let v = c.ring.reduce(c.value(&g) as i128 + v as i128);
            c.set(g, v);
        }
        c
    }

    /// Plain cochain from `(tuple, value)` pairs.
    pub fn plain(degree: usize, ring: Ring, entries: &[(&[usize], i64)]) -> Self {
        Cochain::from_entries(degree, ring, entries.iter().map(|(xs, v)| (Generator::plain(xs), *v)))
    }

    /// Evaluates a formula on every tuple of length `degree` over `q`,
    /// degenerate ones included.
    pub fn from_fn_plain(q: &Quandle, degree: usize, ring: Ring, f: impl Fn(&[usize]) -> i64) -> Self {
        let n = q.size();
        let mut c = Cochain::zero(degree, ring);
        let total = n.pow(degree as u32);
        let mut xs = vec![0usize; degree];
        for mut code in 0..total {
            for slot in xs.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            let v = ring.reduce(f(&xs) as i128);
            c.set(Generator::plain(&xs), v);
        }
        c
    }

    /// Copies any cochain onto the basis of `complex` in degree `degree`.
    pub fn materialize(complex: &Complex, phi: &(impl CochainLike + ?Sized)) -> Result<Self, ChainError> {
        let mut c = Cochain::zero(phi.degree(), phi.ring());
        for g in complex.basis(phi.degree())? {
            let v = phi.value(&g);
            c.set(g, v);
        }
        Ok(c)
    }

    pub fn set(&mut self, g: Generator, v: i64) {
        assert_eq!(g.degree(), self.degree, "generator {g} has the wrong degree");
        let v = self.ring.reduce(v as i128);
        if v == 0 {
            self.values.remove(&g);
        } else {
            self.values.insert(g, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.values.iter().map(|(g, &v)| (g, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    fn check_compatible(&self, other: &Cochain) -> Result<(), ChainError> {
        if self.ring != other.ring {
            return Err(ChainError::RingMismatch(self.ring, other.ring));
        }
        if self.degree != other.degree {
            return Err(ChainError::DegreeMismatch {
                expected: self.degree,
                got: other.degree,
            });
        }
        Ok(())
    }

    /// `self + k · other`; mixed rings are rejected.
    pub fn add_scaled(&self, other: &Cochain, k: i64) -> Result<Cochain, ChainError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (g, v) in other.iter() {
            let sum = out.ring.reduce(out.value(g) as i128 + k as i128 * v as i128);
            out.set(g.clone(), sum);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Cochain {
        Cochain::from_entries(self.degree, self.ring, self.iter().map(|(g, v)| (g.clone(), v * k)))
    }

    /// Values as a vector over the basis of `complex`.
    pub fn to_vector(&self, complex: &Complex) -> Result<Vec<BigInt>, ChainError> {
        complex
            .basis(self.degree)?
            .iter()
            .map(|g| Ok(BigInt::from(self.value(g))))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let values: Map<String, Value> = self.iter().map(|(g, v)| (g.key(), Value::from(v))).collect();
        serde_json::json!({ "degree": self.degree, "ring": self.ring.to_string(), "values": values })
    }

    pub fn from_json(v: &Value, kind: &XSetKind) -> Result<Cochain, ChainError> {
        let degree = v["degree"]
            .as_u64()
            .ok_or_else(|| ChainError::Malformed("missing degree".into()))? as usize;
        let ring: Ring = v["ring"]
            .as_str()
            .ok_or_else(|| ChainError::Malformed("missing ring".into()))?
            .parse()
            .map_err(ChainError::Malformed)?;
        let values = v["values"]
            .as_object()
            .ok_or_else(|| ChainError::Malformed("missing values".into()))?;
        let mut c = Cochain::zero(degree, ring);
        for (key, val) in values {
            let g = Generator::parse_key(key, kind)?;
            if g.degree() != degree {
                return Err(ChainError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            let val = val
                .as_i64()
                .ok_or_else(|| ChainError::Malformed(format!("value at {key} is not an integer")))?;
            c.set(g, val);
        }
        Ok(c)
    }
}

impl CochainLike for Cochain {
    fn degree(&self) -> usize {
        self.degree
    }
    fn ring(&self) -> Ring {
        self.ring
    }
    fn value(&self, g: &Generator) -> i64 {
        self.values.get(g).copied().unwrap_or(0)
    }
}

/// `σ^♯φ = φ ∘ σ`, evaluated on demand. Only meaningful on plain generators.
pub struct SigmaPullback<'a, C: CochainLike + ?Sized> {
    pub phi: &'a C,
}

impl<C: CochainLike + ?Sized> CochainLike for SigmaPullback<'_, C> {
    fn degree(&self) -> usize {
        self.phi.degree() + 1
    }
    fn ring(&self) -> Ring {
        self.phi.ring()
    }
    fn value(&self, g: &Generator) -> i64 {
        // σ_n(x) = (−1)^n Σ_i (−1)^i (x with the i-th entry deleted)
        let n = g.degree();
        if n <= 1 {
            return 0;
        }
        let mut acc: i128 = 0;
        for i in 1..=n {
            let mut xs = g.xs.clone();
            xs.remove(i - 1);
            let h = Generator::new(g.y.clone(), xs);
            if !h.is_degenerate() {
                acc += (sign(n) * sign(i)) as i128 * self.phi.value(&h) as i128;
            }
        }
        self.ring().reduce(acc)
    }
}

/// `p^♯φ = φ ∘ p_♯`.
pub struct XMapPullback<'a, C: CochainLike + ?Sized> {
    pub phi: &'a C,
    pub map: &'a XMap,
}

impl<C: CochainLike + ?Sized> CochainLike for XMapPullback<'_, C> {
    fn degree(&self) -> usize {
        self.phi.degree()
    }
    fn ring(&self) -> Ring {
        self.phi.ring()
    }
    fn value(&self, g: &Generator) -> i64 {
        self.phi.value(&Generator::new(self.map.apply(&g.y), g.xs.clone()))
    }
}

/// `ι^♯φ = φ ∘ ι`, a cochain over `Y = X` of one degree less than `φ`.
pub struct IotaPullback<'a, C: CochainLike + ?Sized> {
    pub phi: &'a C,
}

impl<C: CochainLike + ?Sized> CochainLike for IotaPullback<'_, C> {
    fn degree(&self) -> usize {
        self.phi.degree() - 1
    }
    fn ring(&self) -> Ring {
        self.phi.ring()
    }
    fn value(&self, g: &Generator) -> i64 {
        let Point::Elem(x0) = g.y else {
            panic!("ι^♯ evaluated on {g}, whose y is not a quandle element")
        };
        let mut xs = Vec::with_capacity(g.degree() + 1);
        xs.push(x0);
        xs.extend_from_slice(&g.xs);
        let h = Generator::plain(&xs);
        if h.is_degenerate() {
            return 0;
        }
        self.ring().reduce(sign(g.degree()) as i128 * self.phi.value(&h) as i128)
    }
}

/// Kronecker pairing `⟨φ, c⟩`.
pub fn evaluate(phi: &(impl CochainLike + ?Sized), c: &Chain) -> Result<i64, ChainError> {
    if phi.degree() != c.degree() {
        return Err(ChainError::DegreeMismatch {
            expected: phi.degree(),
            got: c.degree(),
        });
    }
    let acc: i128 = c.iter().map(|(g, k)| k as i128 * phi.value(g) as i128).sum();
    Ok(phi.ring().reduce(acc))
}

/// `δφ = φ ∘ ∂`, tabulated on the basis of `complex` one degree up.
pub fn coboundary(phi: &(impl CochainLike + ?Sized), complex: &Complex) -> Result<Cochain, ChainError> {
    let n = phi.degree() + 1;
    let mut out = Cochain::zero(n, phi.ring());
    for g in complex.basis(n)? {
        let v = evaluate(phi, &complex.boundary(&Chain::generator(g.clone()))?)?;
        out.set(g, v);
    }
    Ok(out)
}

/// `σ^♯φ` tabulated on the plain complex.
pub fn pullback_sigma(phi: &(impl CochainLike + ?Sized), complex: &Complex) -> Result<Cochain, ChainError> {
    complex.require_plain()?;
    Cochain::materialize(complex, &SigmaPullback { phi })
}

/// True iff `φ` vanishes on degenerate generators and `δφ = 0`.
pub fn is_cocycle(phi: &(impl CochainLike + ?Sized), complex: &Complex) -> Result<bool, ChainError> {
    let k = phi.degree();
    let n = complex.quandle().size();
    let ys = complex.yset().elements().ok_or_else(|| ChainError::InfiniteXSet(complex.yset().kind().to_string()))?;
    let mut xs = vec![0usize; k];
    for code in 0..n.pow(k as u32) {
        let mut c = code;
        for slot in xs.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        if xs.windows(2).any(|w| w[0] == w[1]) {
            for y in &ys {
                if phi.value(&Generator::new(y.clone(), xs.clone())) != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(coboundary(phi, complex)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::XSet;

    #[test]
    fn ring_parsing_and_reduction() {
        assert_eq!("Z".parse::<Ring>().unwrap(), Ring::Integers);
        assert_eq!("Z4".parse::<Ring>().unwrap(), Ring::Mod(4));
        assert_eq!("Z_3".parse::<Ring>().unwrap(), Ring::Mod(3));
        assert!("Z1".parse::<Ring>().is_err());
        assert!("Q".parse::<Ring>().is_err());
        assert_eq!(Ring::Mod(3).reduce(-2), 1);
        assert_eq!(Ring::Integers.reduce(-2), -2);
        assert_eq!(Ring::Mod(4).to_string(), "Z4");
    }

    #[test]
    fn coboundary_of_one_cochain() {
        let q = Quandle::dihedral(3).unwrap();
        let cx = Complex::plain(&q);
        let kappa = Cochain::plain(1, Ring::Mod(3), &[(&[0], 1), (&[1], 2)]);
        let d = coboundary(&kappa, &cx).unwrap();
        for g in cx.basis(2).unwrap() {
            let (x, y) = (g.xs[0], g.xs[1]);
            let expected = kappa.value(&Generator::plain(&[x])) - kappa.value(&Generator::plain(&[q.op(x, y)]));
            assert!(Ring::Mod(3).eq_elements(d.value(&g), expected));
        }
    }

    #[test]
    fn constant_cochain_is_not_a_cocycle() {
        let q = Quandle::dihedral(3).unwrap();
        let cx = Complex::plain(&q);
        let one = Cochain::from_fn_plain(&q, 2, Ring::Mod(3), |_| 1);
        assert!(!is_cocycle(&one, &cx).unwrap());
        assert!(is_cocycle(&Cochain::zero(2, Ring::Mod(3)), &cx).unwrap());
    }

    #[test]
    fn sigma_pullback_formula() {
        let s4 = Quandle::tetrahedral();
        let cx = Complex::plain(&s4);
        let phi = Cochain::from_fn_plain(&s4, 2, Ring::Integers, |xs| {
            if xs[0] == xs[1] {
                0
            } else {
                (3 * xs[0] + 7 * xs[1]) as i64
            }
        });
        let shifted = pullback_sigma(&phi, &cx).unwrap();
        for g in cx.basis(3).unwrap() {
            let (x, y, z) = (g.xs[0], g.xs[1], g.xs[2]);
            let f = |a: usize, b: usize| phi.value(&Generator::plain(&[a, b]));
            assert_eq!(shifted.value(&g), f(y, z) - f(x, z) + f(x, y));
        }
        let lazy = SigmaPullback { phi: &phi };
        assert_eq!(lazy.value(&Generator::plain(&[1, 1, 1])), 0);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let phi = Cochain::zero(2, Ring::Mod(4));
        assert!(evaluate(&phi, &Chain::zero(3)).is_err());
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = Cochain::zero(2, Ring::Mod(4));
        let b = Cochain::zero(2, Ring::Mod(3));
        assert!(matches!(a.add_scaled(&b, 1), Err(ChainError::RingMismatch(..))));
    }

    #[test]
    fn xmap_and_iota_pullbacks() {
        let q = Quandle::dihedral(3).unwrap();
        let theta = Cochain::from_fn_plain(&q, 3, Ring::Mod(3), |xs| (xs[0] + 2 * xs[1] + xs[2]) as i64);
        let iota = IotaPullback { phi: &theta };
        let g = Generator::new(Point::Elem(2), vec![0, 1]);
        assert_eq!(iota.value(&g), theta.value(&Generator::plain(&[2, 0, 1])));
        assert_eq!(iota.degree(), 2);

        let z = XSet::integers(&q);
        let to_pt = XMap::to_singleton(&z);
        let phi = Cochain::plain(2, Ring::Mod(3), &[(&[0, 1], 2)]);
        let pulled = XMapPullback { phi: &phi, map: &to_pt };
        assert_eq!(pulled.value(&Generator::new(Point::Int(-4), vec![0, 1])), 2);
    }

    #[test]
    fn json_round_trip() {
        let phi = Cochain::plain(2, Ring::Mod(4), &[(&[0, 1], 2), (&[1, 0], 6)]);
        let v = phi.to_json();
        assert_eq!(v["ring"], "Z4");
        assert_eq!(v["values"]["1,0"], 2);
        assert_eq!(Cochain::from_json(&v, &XSetKind::Singleton).unwrap(), phi);
    }
}
