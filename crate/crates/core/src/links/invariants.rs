//! Colorings, shadow colorings and the cocycle state sums.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::{Diagram, LinkError};
use crate::chain::{Chain, CochainLike, Generator, Ring, SigmaPullback};
use crate::quandle::{Point, Quandle};

/// Arc colors, indexed by arc.
pub type Coloring = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowColoring {
    pub arcs: Coloring,
    pub regions: Vec<usize>,
    pub base_value: usize,
}

/// Every coloring of `d` by `q`, in lexicographic order of arc colors.
pub fn colorings(d: &Diagram, q: &Quandle) -> Vec<Coloring> {
    let a = d.arc_count();
    // check each relation as soon as its last arc has been colored
    let mut due: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); a];
    for c in d.crossings() {
        let (src, dst) = c.relation();
        let last = src.max(dst).max(c.over_arc);
        due[last].push((src, c.over_arc, dst));
    }

    fn extend(q: &Quandle, due: &[Vec<(usize, usize, usize)>], colors: &mut Coloring, out: &mut Vec<Coloring>) {
        let k = colors.len();
        if k == due.len() {
            out.push(colors.clone());
            return;
        }
        for x in 0..q.size() {
            colors.push(x);
            if due[k].iter().all(|&(s, o, t)| q.op(colors[s], colors[o]) == colors[t]) {
                extend(q, due, colors, out);
            }
            colors.pop();
        }
    }

    (0..q.size())
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut colors = vec![first];
            if due[0].iter().all(|&(s, o, t)| q.op(colors[s], colors[o]) == colors[t]) {
                extend(q, &due, &mut colors, &mut out);
            }
            out
        })
        .collect()
}

/// Region colors propagated from `base` on the base region; consistency is
/// checked across every edge.
pub fn shadow_coloring(d: &Diagram, q: &Quandle, arcs: &Coloring, base: usize) -> Result<ShadowColoring, LinkError> {
    let r = d.region_count();
    let mut regions: Vec<Option<usize>> = vec![None; r];
    regions[d.base_region()] = Some(base);
    let edges: Vec<(usize, usize, usize)> = d.edges().collect();
    // a sweep per round; each round colors at least one new region
    loop {
        let mut changed = false;
        for &(arc, left, right) in &edges {
            let a = arcs[arc];
            match (regions[left], regions[right]) {
                (None, Some(x)) => {
                    regions[left] = Some(q.op(x, a));
                    changed = true;
                }
                (Some(y), None) => {
                    regions[right] = Some(q.inv_op(y, a));
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    for (e, &(arc, left, right)) in edges.iter().enumerate() {
        match (regions[left], regions[right]) {
            (Some(y), Some(x)) if q.op(x, arcs[arc]) == y => {}
            _ => return Err(LinkError::Inconsistent(e)),
        }
    }
    Ok(ShadowColoring {
        arcs: arcs.clone(),
        regions: regions.into_iter().map(|x| x.expect("connected diagram")).collect(),
        base_value: base,
    })
}

pub fn shadow_colorings(d: &Diagram, q: &Quandle, base: usize) -> Result<Vec<ShadowColoring>, LinkError> {
    colorings(d, q).iter().map(|c| shadow_coloring(d, q, c, base)).collect()
}

/// A multiset of ring values: the state sum over all colorings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSum {
    pub ring: Ring,
    pub counts: BTreeMap<i64, usize>,
}

impl StateSum {
    pub fn from_values(ring: Ring, values: impl IntoIterator<Item = i64>) -> Self {
        let mut counts = BTreeMap::new();
        for v in values {
            *counts.entry(ring.reduce(v as i128)).or_default() += 1;
        }
        StateSum { ring, counts }
    }

    pub fn colorings(&self) -> usize {
        self.counts.values().sum()
    }

    /// All colorings contribute 0.
    pub fn is_trivial(&self) -> bool {
        self.counts.keys().all(|&v| v == 0)
    }

    pub fn to_json(&self) -> Value {
        let inv: Map<String, Value> = self.counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        json!({"invariant": inv, "ring": self.ring.to_string(), "colorings": self.colorings()})
    }
}

impl fmt::Display for StateSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        write!(f, "{{{}}} over {}", parts.join(", "), self.ring)
    }
}

fn check_degree(phi: &(impl CochainLike + ?Sized), degree: usize) -> Result<(), LinkError> {
    if phi.degree() != degree {
        return Err(LinkError::Mismatch(format!(
            "expected a {degree}-cochain, got degree {}",
            phi.degree()
        )));
    }
    Ok(())
}

/// `Φ_φ`: for each coloring, `Σ ε(τ) φ(x_τ, y_τ)` with `x_τ` the under-arc
/// facing the specified region and `y_τ` the over-arc.
pub fn cocycle_invariant(d: &Diagram, q: &Quandle, phi: &(impl CochainLike + Sync + ?Sized)) -> Result<StateSum, LinkError> {
    check_degree(phi, 2)?;
    let values: Vec<i64> = colorings(d, q)
        .par_iter()
        .map(|c| {
            d.crossings()
                .iter()
                .map(|t| t.sign as i64 * phi.value(&Generator::plain(&[c[t.facing_arc()], c[t.over_arc]])))
                .sum()
        })
        .collect();
    Ok(StateSum::from_values(phi.ring(), values))
}

/// `Φ^x_θ`: for each shadow coloring with base value `base`,
/// `Σ ε(τ) θ(ρ(r_τ), x_τ, y_τ)`.
pub fn shadow_invariant(
    d: &Diagram,
    q: &Quandle,
    theta: &(impl CochainLike + Sync + ?Sized),
    base: usize,
) -> Result<StateSum, LinkError> {
    check_degree(theta, 3)?;
    let shadows = shadow_colorings(d, q, base)?;
    let values: Vec<i64> = shadows
        .par_iter()
        .map(|s| {
            d.crossings()
                .iter()
                .map(|t| {
                    let g = Generator::plain(&[s.regions[t.specified_region], s.arcs[t.facing_arc()], s.arcs[t.over_arc]]);
                    t.sign as i64 * theta.value(&g)
                })
                .sum()
        })
        .collect();
    Ok(StateSum::from_values(theta.ring(), values))
}

/// The 2-cocycle invariant of `σ^♯κ` for a 1-cochain `κ`.
pub fn cocycle_invariant_1(d: &Diagram, q: &Quandle, kappa: &(impl CochainLike + Sync + ?Sized)) -> Result<StateSum, LinkError> {
    check_degree(kappa, 1)?;
    cocycle_invariant(d, q, &SigmaPullback { phi: kappa })
}

/// `Σ ε(τ) (ρ(r_τ); x_τ, y_τ)`, a 2-chain over `Y = X`.
pub fn fundamental_cycle(d: &Diagram, s: &ShadowColoring) -> Chain {
    let mut c = Chain::zero(2);
    for t in d.crossings() {
        let g = Generator::new(
            Point::Elem(s.regions[t.specified_region]),
            vec![s.arcs[t.facing_arc()], s.arcs[t.over_arc]],
        );
        c.add_term(g, t.sign as i64);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::{builtin, parse_pd};

    #[test]
    fn coloring_counts() {
        let r3 = Quandle::dihedral(3).unwrap();
        assert_eq!(colorings(&builtin("trefoil").unwrap(), &r3).len(), 9);
        assert_eq!(colorings(&builtin("figure8").unwrap(), &r3).len(), 3);
        assert_eq!(colorings(&builtin("unknot").unwrap(), &r3).len(), 3);
        let r5 = Quandle::dihedral(5).unwrap();
        assert_eq!(colorings(&builtin("figure8").unwrap(), &r5).len(), 25);
        assert_eq!(colorings(&builtin("torus(2,5)").unwrap(), &r5).len(), 25);
    }

    #[test]
    fn brute_force_agrees() {
        let d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap();
        let q = Quandle::tetrahedral();
        let mut brute = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let col = vec![a, b, c];
                    if d.crossings().iter().all(|t| {
                        let (s, e) = t.relation();
                        q.op(col[s], col[t.over_arc]) == col[e]
                    }) {
                        brute.push(col);
                    }
                }
            }
        }
        assert_eq!(colorings(&d, &q), brute);
    }

    #[test]
    fn unknot_shadow() {
        let q = Quandle::dihedral(5).unwrap();
        let d = builtin("unknot").unwrap();
        for base in 0..5 {
            let s = shadow_colorings(&d, &q, base).unwrap();
            assert_eq!(s.len(), 5);
            for sc in s {
                assert_eq!(sc.regions[1], q.op(base, sc.arcs[0]));
            }
        }
    }

    #[test]
    fn state_sum_json() {
        let s = StateSum::from_values(Ring::Mod(4), [0, 2, 2, 6, 0, 0, 2, 2, 2]);
        assert_eq!(
            s.to_json(),
            serde_json::json!({"invariant": {"0": 3, "2": 6}, "ring": "Z4", "colorings": 9})
        );
        assert!(!s.is_trivial());
    }
}
