//! Shipped diagrams. Most come from braid closures; the trefoil and the
//! figure-eight also have an independent PD transcription each.

use std::collections::HashMap;

use super::{parse_pd, Diagram, LinkError};

pub const BUILTIN_NAMES: &[&str] = &["unknot", "trefoil", "figure8", "hopf+", "hopf-", "torus(2,n)"];

/// PD code of the closure of a braid on `strands` strands. Generator `i`
/// (1-based) crosses strands `i` and `i + 1`; a positive letter gives a
/// positive crossing. Every strand position must take part in a crossing.
pub fn braid_closure_pd(strands: usize, word: &[i32]) -> Result<String, LinkError> {
    if strands == 0 {
        return Err(LinkError::Parse("a braid needs at least one strand".into()));
    }
    let mut used = vec![false; strands];
    let mut next = 1i64;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let bottom: Vec<i64> = (0..strands).map(|_| fresh()).collect();
    let mut current = bottom.clone();
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(LinkError::Parse(format!("braid letter {g} out of range for {strands} strands")));
        }
        let (a, b) = (current[i - 1], current[i]);
        let (c, d) = (fresh(), fresh());
        // a, b enter from below at positions i, i + 1; c, d leave above.
        // a continues to d and b to c.
        crossings.push(if g > 0 { [b, d, c, a] } else { [a, b, d, c] });
        current[i - 1] = c;
        current[i] = d;
        used[i - 1] = true;
        used[i] = true;
    }
    if let Some(pos) = used.iter().position(|u| !u) {
        return Err(LinkError::Parse(format!("strand {} takes part in no crossing", pos + 1)));
    }
    // close up: the label leaving the top of a position is the one entering its bottom
    let rename: HashMap<i64, i64> = current.iter().copied().zip(bottom).collect();
    let text = crossings
        .iter()
        .map(|x| {
            let x = x.map(|l| *rename.get(&l).unwrap_or(&l));
            format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])
        })
        .collect::<Vec<_>>()
        .join(" ");
    Ok(text)
}

fn braid(strands: usize, word: &[i32]) -> Result<Diagram, LinkError> {
    parse_pd(&braid_closure_pd(strands, word)?)
}

fn torus_word(n: i64) -> Vec<i32> {
    vec![if n > 0 { 1 } else { -1 }; n.unsigned_abs() as usize]
}

fn parse_torus(name: &str) -> Option<i64> {
    let inner = name.strip_prefix("torus(2,")?.strip_suffix(')')?;
    let n: i64 = inner.trim().parse().ok()?;
    (n != 0).then_some(n)
}

/// One of [`BUILTIN_NAMES`], with `torus(2,n)` for any nonzero `n`.
pub fn builtin(name: &str) -> Result<Diagram, LinkError> {
    match name {
        "unknot" => Ok(Diagram::unknot()),
        "trefoil" => braid(2, &[1, 1, 1]),
        "figure8" => braid(3, &[1, -2, 1, -2]),
        "hopf+" => braid(2, &[1, 1]),
        "hopf-" => braid(2, &[-1, -1]),
        _ => match parse_torus(name) {
            Some(n) => braid(2, &torus_word(n)),
            None => Err(LinkError::UnknownBuiltin(name.to_string())),
        },
    }
}

/// The built-in diagram followed by other diagrams of the same oriented link,
/// related to it by Reidemeister moves.
pub fn builtin_variants(name: &str) -> Result<Vec<(String, Diagram)>, LinkError> {
    let mut out = vec![(name.to_string(), builtin(name)?)];
    let mut add = |label: &str, d: Result<Diagram, LinkError>| -> Result<(), LinkError> {
        out.push((format!("{name} [{label}]"), d?));
        Ok(())
    };
    match name {
        "unknot" => {
            add("kink", parse_pd("X[1,1,2,2]"))?;
            add("one-crossing braid", braid(2, &[1]))?;
            add("two-crossing braid", braid(3, &[1, -2]))?;
        }
        "trefoil" => {
            add("pd", parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]"))?;
            add("stabilized", braid(3, &[1, 1, 1, 2]))?;
            add("conjugated", braid(3, &[2, 1, 1, 1, -2, 2]))?;
        }
        "figure8" => {
            add("pd", parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"))?;
            add("stabilized", braid(4, &[1, -2, 1, -2, 3]))?;
        }
        "hopf+" => add("stabilized", braid(3, &[1, 1, -2]))?,
        "hopf-" => add("stabilized", braid(3, &[-1, -1, 2]))?,
        _ => {
            let n = parse_torus(name).ok_or_else(|| LinkError::UnknownBuiltin(name.to_string()))?;
            add("stabilized", braid(3, &[torus_word(n), vec![2]].concat()))?;
            add("stabilized twice", braid(4, &[torus_word(n), vec![2, -3]].concat()))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let t = builtin("trefoil").unwrap();
        assert_eq!(t, builtin("torus(2,3)").unwrap());
        assert_eq!((t.arc_count(), t.region_count(), t.writhe()), (3, 5, 3));
        let f = builtin("figure8").unwrap();
        let mut signs = f.signs();
        signs.sort();
        assert_eq!(signs, vec![-1, -1, 1, 1]);
        assert_eq!(builtin("torus(2,5)").unwrap().crossings().len(), 5);
        assert_eq!(builtin("hopf+").unwrap().components(), 2);
        assert_eq!(builtin("hopf-").unwrap().writhe(), -2);
        assert!(matches!(builtin("granny"), Err(LinkError::UnknownBuiltin(_))));
        assert!(builtin("torus(2,0)").is_err());
    }

    #[test]
    fn variants_share_component_count() {
        for name in ["unknot", "trefoil", "figure8", "hopf+", "hopf-", "torus(2,5)"] {
            let vs = builtin_variants(name).unwrap();
            assert!(vs.len() >= 2);
            let k = vs[0].1.components();
            assert!(vs.iter().all(|(_, d)| d.components() == k), "{name}");
        }
    }

    #[test]
    fn braid_errors() {
        assert!(braid_closure_pd(3, &[1]).is_err());
        assert!(braid_closure_pd(2, &[2]).is_err());
        assert!(braid_closure_pd(2, &[0]).is_err());
    }
}
