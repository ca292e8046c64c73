//! Turning command-line names into quandles, cochains, chains and diagrams.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use qhom_core::chain::{pullback_sigma, Chain, Cochain, Complex};
use qhom_core::cocycles::{lookup_cocycle, lookup_cycle, CocycleError};
use qhom_core::links::{builtin, parse_pd, Diagram, LinkError};
use qhom_core::{Quandle, XSetKind};
use serde_json::Value;

/// A quandle given by name (`R5`, `S4`, `T2`) or by a JSON table file.
pub fn quandle(spec: &str) -> Result<Quandle> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        return serde_json::from_str(&text).with_context(|| format!("{spec} is not a quandle table"));
    }
    Quandle::by_name(spec).with_context(|| format!("unknown quandle {spec:?} (use R<n>, T<n>, S4 or a JSON table file)"))
}

pub struct NamedCochain {
    pub name: String,
    pub quandle_name: String,
    pub quandle: Quandle,
    pub cochain: Cochain,
}

fn quandle_suffix(name: &str, p: u64) -> String {
    match name.rsplit_once('@') {
        Some((_, "Rp")) => format!("R{p}"),
        Some((_, q)) => q.to_string(),
        None => String::new(),
    }
}

/// A registry name, `shift:<name>`, or a cochain JSON file. Files name their
/// quandle in a `"quandle"` field unless `quandle` is given.
pub fn cochain(spec: &str, p: u64, quandle_flag: Option<&str>) -> Result<NamedCochain> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        let v: Value = serde_json::from_str(&text).with_context(|| format!("{spec} is not JSON"))?;
        let qname = quandle_flag
            .map(str::to_string)
            .or_else(|| v["quandle"].as_str().map(str::to_string))
            .ok_or_else(|| anyhow!("{spec} names no quandle; pass --quandle"))?;
        let q = quandle(&qname)?;
        let c = Cochain::from_json(&v, &XSetKind::Singleton).with_context(|| format!("{spec} is not a cochain file"))?;
        return Ok(NamedCochain {
            name: spec.to_string(),
            quandle_name: qname,
            quandle: q,
            cochain: c,
        });
    }
    let named = lookup_cocycle(spec, p).map_err(|e| match e {
        CocycleError::UnknownName(_) => anyhow!("unknown cocycle {spec:?}; not a registry name or a file"),
        other => anyhow!(other),
    })?;
    Ok(NamedCochain {
        quandle_name: quandle_suffix(&named.name, p),
        name: named.name,
        quandle: named.quandle,
        cochain: named.cochain,
    })
}

/// A registry cycle, with `shift:` applying `σ`.
pub fn cycle(spec: &str, p: u64) -> Result<(String, Quandle, Chain)> {
    if let Some(inner) = spec.strip_prefix("shift:") {
        let (name, q, c) = cycle(inner, p)?;
        let s = Complex::plain(&q).sigma(&c)?;
        return Ok((format!("shift:{name}"), q, s));
    }
    let named = lookup_cycle(spec, p).map_err(|e| anyhow!("{e}"))?;
    Ok((named.name, named.quandle, named.chain))
}

/// Whether `spec` names a registry cycle rather than a cochain.
pub fn is_cycle_name(spec: &str, p: u64) -> bool {
    let base = spec.trim_start_matches("shift:");
    lookup_cycle(base, p).is_ok()
}

/// A built-in name, a file holding PD text, or PD text itself.
pub fn link(spec: &str, base_region: Option<usize>) -> Result<Diagram> {
    let d = match builtin(spec) {
        Ok(d) => d,
        Err(LinkError::UnknownBuiltin(_)) => {
            let text = if Path::new(spec).is_file() {
                std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?
            } else if spec.contains("X[") {
                spec.to_string()
            } else {
                bail!("unknown link {spec:?}: not a built-in name, a PD file or PD text")
            };
            parse_pd(&text)?
        }
        Err(e) => return Err(e.into()),
    };
    Ok(match base_region {
        Some(r) => d.with_base_region(r)?,
        None => d,
    })
}

/// `σ^♯` of a named cochain, tabulated.
pub fn shift(c: &NamedCochain) -> Result<Cochain> {
    Ok(pullback_sigma(&c.cochain, &Complex::plain(&c.quandle))?)
}
