use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A finitely generated abelian group `Z^r ⊕ Z_{d1} ⊕ ... ⊕ Z_{dk}` in
/// invariant-factor form: every `d_i ≥ 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Deserialize)]
struct RawGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl TryFrom<RawGroup> for AbelianGroup {
    type Error = String;

    fn try_from(raw: RawGroup) -> Result<Self, Self::Error> {
        let g = AbelianGroup::from_cyclic(raw.free_rank, &raw.torsion);
        if g.torsion != raw.torsion {
            return Err(format!(
                "torsion {:?} is not in invariant-factor form (expected {:?})",
                raw.torsion, g.torsion
            ));
        }
        Ok(g)
    }
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Normalizes an arbitrary direct sum of cyclic groups `Z_{n_i}` into
    /// invariant-factor form. Orders 0 count as free summands, orders 1 vanish.
    pub fn from_cyclic(free_rank: usize, orders: &[u64]) -> Self {
        let mut free_rank = free_rank;
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                free_rank += 1;
                continue;
            }
            for (p, pk) in prime_power_parts(n) {
                by_prime.entry(p).or_default().push(pk);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            // largest powers go to the last factors
            for (slot, pk) in torsion.iter_mut().rev().zip(powers.iter().rev()) {
                *slot *= pk;
            }
        }
        AbelianGroup { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of a finite group, `None` when there is a free part.
    pub fn order(&self) -> Option<u128> {
        (self.free_rank == 0).then(|| self.torsion.iter().map(|&d| d as u128).product())
    }

    /// Number of elements of `G ⊗ Z_m`, finite whenever `m ≥ 1`.
    pub fn tensor_order(&self, m: u64) -> u128 {
        let mut n = (m as u128).pow(self.free_rank as u32);
        for &d in &self.torsion {
            n *= num_integer::gcd(d, m) as u128;
        }
        n
    }

    /// Number of elements of `Hom(G, Z_m)`; equals [`Self::tensor_order`].
    pub fn hom_order(&self, m: u64) -> u128 {
        self.tensor_order(m)
    }

    /// Number of elements of `Ext(G, Z_m)`.
    pub fn ext_order(&self, m: u64) -> u128 {
        self.torsion
            .iter()
            .map(|&d| num_integer::gcd(d, m) as u128)
            .product()
    }
}

fn prime_power_parts(mut n: u64) -> Vec<(u64, u64)> {
    let mut parts = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut pk = 1;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            parts.push((p, pk));
        }
        p += 1;
    }
    if n > 1 {
        parts.push((n, n));
    }
    parts
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&e| e == d).count();
            parts.push(if run == 1 {
                format!("Z{d}")
            } else {
                format!("Z{d}^{run}")
            });
            i += run;
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        assert_eq!(AbelianGroup::from_cyclic(0, &[4, 2]).torsion, vec![2, 4]);
        assert_eq!(AbelianGroup::from_cyclic(0, &[2, 3]).torsion, vec![6]);
        assert_eq!(AbelianGroup::from_cyclic(0, &[6, 4]).torsion, vec![2, 12]);
        assert_eq!(AbelianGroup::from_cyclic(0, &[1, 1]), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::from_cyclic(1, &[0]).free_rank, 2);
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::from_cyclic(0, &[2, 4]).to_string(), "Z2 ⊕ Z4");
        assert_eq!(AbelianGroup::from_cyclic(0, &[3, 3]).to_string(), "Z3^2");
        assert_eq!(AbelianGroup::from_cyclic(0, &[2, 2, 4]).to_string(), "Z2^2 ⊕ Z4");
        assert_eq!(AbelianGroup::from_cyclic(1, &[5]).to_string(), "Z ⊕ Z5");
    }

    #[test]
    fn json() {
        let g = AbelianGroup::from_cyclic(1, &[2, 4]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"free_rank":1,"torsion":[2,4]}"#);
        assert_eq!(serde_json::from_str::<AbelianGroup>(&s).unwrap(), g);
        assert!(serde_json::from_str::<AbelianGroup>(r#"{"free_rank":0,"torsion":[4,2]}"#).is_err());
    }

    #[test]
    fn coefficient_orders() {
        let g = AbelianGroup::from_cyclic(1, &[2, 4]);
        assert_eq!(g.tensor_order(4), 4 * 2 * 4);
        assert_eq!(g.ext_order(4), 8);
        assert_eq!(g.ext_order(3), 1);
        assert_eq!(g.order(), None);
        assert_eq!(AbelianGroup::from_cyclic(0, &[3]).order(), Some(3));
    }
}
