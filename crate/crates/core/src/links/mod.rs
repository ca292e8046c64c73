//! Oriented classical link diagrams given as planar-diagram (PD) codes.
//!
//! A crossing `X[a, b, c, d]` lists its four edge labels counterclockwise,
//! starting at the incoming under-strand. Slots are numbered the same way:
//! 0 is the incoming under-strand, 2 the outgoing one, 1 and 3 the over
//! strand. Picture the under-strand running from south (slot 0) to north
//! (slot 2); slot 1 is then east and slot 3 west.
//!
//! The normal of an arc points to the left of its direction of travel.
//! Crossing an arc of color `a` along its normal sends a region color `r` to
//! `r * a`, and at a crossing the under-arc behind the over-arc's normal,
//! acted on by the over color, gives the under-arc in front of it.

mod builtin;
mod invariants;

use std::collections::BTreeMap;
use std::fmt;

use regex::Regex;
use thiserror::Error;

use crate::chain::ChainError;

pub use builtin::{braid_closure_pd, builtin, builtin_variants, BUILTIN_NAMES};
pub use invariants::{
    cocycle_invariant, cocycle_invariant_1, colorings, fundamental_cycle, shadow_coloring, shadow_colorings, shadow_invariant,
    Coloring, ShadowColoring, StateSum,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("malformed PD code: {0}")]
    Parse(String),
    #[error("edge label {label} appears {count} time(s); every label must appear exactly twice")]
    EdgeCount { label: i64, count: usize },
    #[error("the rotation system is not planar: V − E + F = {v} − {e} + {f} ≠ 2")]
    NonPlanar { v: usize, e: usize, f: usize },
    #[error("cannot orient the diagram: {0}")]
    Orientation(String),
    #[error("unknown built-in link {0:?}")]
    UnknownBuiltin(String),
    #[error("region {0} does not exist")]
    NoSuchRegion(usize),
    #[error("region colors are inconsistent around edge {0}")]
    Inconsistent(usize),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// One crossing with everything the state sums need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Edge ids at slots 0..4.
    pub edges: [usize; 4],
    /// `+1` when the over-strand enters at slot 3, `−1` when it enters at slot 1.
    pub sign: i8,
    pub over_arc: usize,
    pub under_in_arc: usize,
    pub under_out_arc: usize,
    /// The region both normals point away from.
    pub specified_region: usize,
}

impl Crossing {
    /// The under-arc adjacent to the specified region.
    pub fn facing_arc(&self) -> usize {
        if self.sign > 0 {
            self.under_in_arc
        } else {
            self.under_out_arc
        }
    }

    /// `(source, target)` of the coloring relation `source * over = target`.
    pub fn relation(&self) -> (usize, usize) {
        if self.sign > 0 {
            (self.under_in_arc, self.under_out_arc)
        } else {
            (self.under_out_arc, self.under_in_arc)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    labels: Vec<i64>,
    edge_arc: Vec<usize>,
    edge_left: Vec<usize>,
    edge_right: Vec<usize>,
    arc_count: usize,
    region_count: usize,
    components: usize,
    base_region: usize,
}

impl Diagram {
    /// The crossingless unknot: one arc, two regions. Region 0 lies to the
    /// right of the arc, region 1 to its left.
    pub fn unknot() -> Self {
        Diagram {
            crossings: Vec::new(),
            labels: vec![1],
            edge_arc: vec![0],
            edge_left: vec![1],
            edge_right: vec![0],
            arc_count: 1,
            region_count: 2,
            components: 1,
            base_region: 0,
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn region_count(&self) -> usize {
        self.region_count
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn base_region(&self) -> usize {
        self.base_region
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn signs(&self) -> Vec<i8> {
        self.crossings.iter().map(|c| c.sign).collect()
    }

    /// `(arc, left region, right region)` of every edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.labels.len()).map(|e| (self.edge_arc[e], self.edge_left[e], self.edge_right[e]))
    }

    pub fn with_base_region(mut self, region: usize) -> Result<Self, LinkError> {
        if region >= self.region_count {
            return Err(LinkError::NoSuchRegion(region));
        }
        self.base_region = region;
        Ok(self)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} crossing(s), {} arc(s), {} region(s), {} component(s), writhe {}",
            self.crossings.len(),
            self.arc_count,
            self.region_count,
            self.components,
            self.writhe()
        )
    }
}

/// Endpoint of an edge: (crossing, slot).
type End = (usize, usize);

struct Disjoint(Vec<usize>);

impl Disjoint {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn parse_crossings(text: &str) -> Result<Vec<[i64; 4]>, LinkError> {
    let x = Regex::new(r"X\[([^\]]*)\]").expect("static regex");
    let mut out = Vec::new();
    for cap in x.captures_iter(text) {
        let labels: Vec<i64> = cap[1]
            .split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|_| LinkError::Parse(format!("bad label {:?}", s.trim()))))
            .collect::<Result<_, _>>()?;
        let arr: [i64; 4] = labels
            .try_into()
            .map_err(|v: Vec<i64>| LinkError::Parse(format!("crossing with {} labels", v.len())))?;
        out.push(arr);
    }
    let rest = x.replace_all(text, "");
    let rest = rest.trim();
    let rest = rest.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')).unwrap_or(rest);
    if rest.chars().any(|c| !(c.is_whitespace() || c == ',')) {
        return Err(LinkError::Parse(format!("unexpected text {:?}", rest.trim())));
    }
    Ok(out)
}

/// Parses a PD code such as `"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"`. The empty
/// code is the crossingless unknot. The base region defaults to the face on
/// the right of the edge with the smallest label.
pub fn parse_pd(text: &str) -> Result<Diagram, LinkError> {
    let raw = parse_crossings(text)?;
    if raw.is_empty() {
        return Ok(Diagram::unknot());
    }
    let n = raw.len();

    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    for x in &raw {
        for &l in x {
            *count.entry(l).or_default() += 1;
        }
    }
    if let Some((&label, &count)) = count.iter().find(|(_, &c)| c != 2) {
        return Err(LinkError::EdgeCount { label, count });
    }
    let labels: Vec<i64> = count.keys().copied().collect();
    let edge_of = |l: i64| labels.binary_search(&l).expect("known label");
    let m = labels.len();

    let slots: Vec<[usize; 4]> = raw.iter().map(|x| x.map(edge_of)).collect();
    let mut ends: Vec<Vec<End>> = vec![Vec::new(); m];
    for (c, s) in slots.iter().enumerate() {
        for (k, &e) in s.iter().enumerate() {
            ends[e].push((c, k));
        }
    }
    let other = |e: usize, end: End| if ends[e][0] == end { ends[e][1] } else { ends[e][0] };

    // head[e]: the endpoint where e enters a crossing
    let mut head: Vec<Option<End>> = vec![None; m];
    let set_head = |head: &mut Vec<Option<End>>, e: usize, h: End| -> Result<bool, LinkError> {
        match head[e] {
            Some(old) if old == h => Ok(false),
            Some(_) => Err(LinkError::Orientation(format!("edge {} is directed both ways", labels[e]))),
            None => {
                head[e] = Some(h);
                Ok(true)
            }
        }
    };
    for (c, s) in slots.iter().enumerate() {
        set_head(&mut head, s[0], (c, 0))?;
        let e2 = s[2];
        set_head(&mut head, e2, other(e2, (c, 2)))?;
    }
    // over pairs: exactly one of slots 1 and 3 is entering
    loop {
        let mut changed = false;
        for (c, s) in slots.iter().enumerate() {
            for (a, b) in [(1, 3), (3, 1)] {
                if let Some(h) = head[s[a]] {
                    let a_enters = h == (c, a);
                    let eb = s[b];
                    let hb = if a_enters { other(eb, (c, b)) } else { (c, b) };
                    changed |= set_head(&mut head, eb, hb)?;
                }
            }
        }
        if changed {
            continue;
        }
        // components without under-crossings: follow the labels
        let Some((c, s)) = slots
            .iter()
            .enumerate()
            .find(|(_, s)| head[s[1]].is_none() && head[s[3]].is_none())
        else {
            break;
        };
        let (j, l) = (labels[s[1]], labels[s[3]]);
        let enters_at_3 = j - l == 1 || l - j > 1;
        let (e, slot) = if enters_at_3 { (s[3], 3) } else { (s[1], 1) };
        set_head(&mut head, e, (c, slot))?;
    }
    let head: Vec<End> = head.into_iter().map(|h| h.expect("every edge oriented")).collect();
    let tail: Vec<End> = (0..m).map(|e| other(e, head[e])).collect();

    // components, following the strand straight through each crossing
    let next_edge = |e: usize| {
        let (c, s) = head[e];
        slots[c][(s + 2) % 4]
    };
    let mut seen = vec![false; m];
    let mut components = 0;
    for start in 0..m {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            e = next_edge(e);
        }
    }

    // arcs: edges joined through over-crossings
    let mut arcs = Disjoint((0..m).collect());
    for (e, &(_, slot)) in head.iter().enumerate() {
        if slot % 2 == 1 {
            arcs.union(e, next_edge(e));
        }
    }
    let mut arc_id: BTreeMap<usize, usize> = BTreeMap::new();
    let edge_arc: Vec<usize> = (0..m)
        .map(|e| {
            let root = arcs.find(e);
            let next = arc_id.len();
            *arc_id.entry(root).or_insert(next)
        })
        .collect();

    // faces: corner (c, k) lies between slots k and k + 1
    let mut face = vec![usize::MAX; 4 * n];
    let mut faces = 0;
    for start in 0..4 * n {
        if face[start] != usize::MAX {
            continue;
        }
        let mut corner = start;
        while face[corner] == usize::MAX {
            face[corner] = faces;
            let (c, k) = (corner / 4, corner % 4);
            let s = (k + 1) % 4;
            let (c2, s2) = other(slots[c][s], (c, s));
            corner = 4 * c2 + s2;
        }
        faces += 1;
    }
    if n + faces != m + 2 {
        return Err(LinkError::NonPlanar { v: n, e: m, f: faces });
    }
    let corner_face = |c: usize, k: usize| face[4 * c + k % 4];
    let edge_left: Vec<usize> = (0..m).map(|e| corner_face(tail[e].0, tail[e].1)).collect();
    let edge_right: Vec<usize> = (0..m).map(|e| corner_face(tail[e].0, tail[e].1 + 3)).collect();

    let crossings = slots
        .iter()
        .enumerate()
        .map(|(c, s)| {
            let sign = if head[s[3]] == (c, 3) { 1 } else { -1 };
            Crossing {
                edges: *s,
                sign,
                over_arc: edge_arc[s[1]],
                under_in_arc: edge_arc[s[0]],
                under_out_arc: edge_arc[s[2]],
                specified_region: corner_face(c, if sign > 0 { 0 } else { 1 }),
            }
        })
        .collect();

    Ok(Diagram {
        crossings,
        labels,
        edge_arc,
        base_region: edge_right[0],
        edge_left,
        edge_right,
        arc_count: arc_id.len(),
        region_count: faces,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_counts() {
        let d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap();
        assert_eq!((d.arc_count(), d.region_count(), d.components()), (3, 5, 1));
        assert_eq!(d.signs(), vec![1, 1, 1]);
    }

    #[test]
    fn figure8_signs() {
        let d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
        assert_eq!(d.signs(), vec![1, 1, -1, -1]);
        assert_eq!((d.arc_count(), d.region_count()), (4, 6));
    }

    #[test]
    fn kink_is_one_arc() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!((d.arc_count(), d.region_count(), d.components()), (1, 3, 1));
        assert_eq!(d.signs(), vec![1]);
    }

    #[test]
    fn unknot_from_empty_code() {
        let d = parse_pd("  ").unwrap();
        assert_eq!((d.arc_count(), d.region_count()), (1, 2));
        assert!(parse_pd("PD[]").is_ok());
    }

    #[test]
    fn malformed_codes() {
        assert!(matches!(parse_pd("X[1,2,3,4]"), Err(LinkError::EdgeCount { .. })));
        assert!(matches!(parse_pd("X[1,2,2]"), Err(LinkError::Parse(_))));
        assert!(matches!(parse_pd("X[1,a,2,2]"), Err(LinkError::Parse(_))));
        assert!(matches!(parse_pd("Y[1,1,2,2]"), Err(LinkError::Parse(_))));
        // a non-planar rotation: the trefoil with two slots swapped
        assert!(matches!(
            parse_pd("X[1,5,4,2] X[3,1,4,6] X[5,3,6,2]"),
            Err(LinkError::NonPlanar { .. }) | Err(LinkError::Orientation(_))
        ));
    }

    #[test]
    fn base_region_override() {
        let d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").unwrap();
        assert!(d.clone().with_base_region(4).is_ok());
        assert_eq!(d.with_base_region(5), Err(LinkError::NoSuchRegion(5)));
    }
}
