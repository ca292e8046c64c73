mod config;
mod resolve;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use qhom_core::chain::{cohomology, homology, is_cocycle, CochainLike, Complex, Ring};
use qhom_core::cocycles::signed;
use qhom_core::links::{cocycle_invariant, cocycle_invariant_1, colorings, shadow_invariant, StateSum};
use qhom_core::verify::{self, Scope, VerifyOptions};
use qhom_core::{AbelianGroup, Quandle};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use config::Config;

/// Quandle homology, shift maps and cocycle invariants of links.
#[derive(Parser)]
#[command(name = "qhom", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// TOML settings file (max_degree, max_generators, primes, homotopy_degree, workers, slow).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for colorings and checks.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Prime used for registry names ending in `@Rp`.
    #[arg(long, global = true, default_value_t = 3)]
    prime: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral quandle homology H_n(X).
    Homology { quandle: String, degree: usize },
    /// Quandle cohomology H^n(X; A).
    Cohomology {
        quandle: String,
        degree: usize,
        /// Coefficients: Z or Z<m>.
        #[arg(long, default_value = "Z")]
        ring: String,
    },
    /// Cocycle invariant of a link for a 2-cocycle, or for σ^♯κ given a 1-cocycle κ.
    Invariant(InvariantArgs),
    /// Shadow cocycle invariant of a link for a 3-cocycle.
    Shadow {
        #[command(flatten)]
        inv: InvariantArgs,
        /// Color of the base region.
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Count (or list) the colorings of a link by a quandle.
    Colorings {
        #[arg(long)]
        link: String,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        list: bool,
    },
    /// Write σ^♯φ as a cochain file.
    Shift {
        cocycle: String,
        /// Quandle for cochain files that do not name one.
        #[arg(long)]
        quandle: Option<String>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run the reproduction checks; exits 1 if any fails.
    VerifyPaper {
        #[arg(long, default_value = "all", value_parser = parse_scope)]
        scope: Scope,
        /// Primes for the dihedral and conjecture checks, comma separated.
        #[arg(long = "p", visible_alias = "primes", value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Also run p = 11 and 13.
        #[arg(long)]
        slow: bool,
    },
    /// Coordinates of a (co)homology class against given classes.
    Express {
        /// Cocycle or cycle name, `shift:` allowed.
        #[arg(long)]
        target: String,
        #[arg(long, value_delimiter = ',')]
        basis: Vec<String>,
        /// Coefficients for cycle classes; cocycles use their own ring.
        #[arg(long, default_value = "Z")]
        ring: String,
    },
}

#[derive(Args)]
struct InvariantArgs {
    /// Built-in name, PD file, or PD text.
    #[arg(long)]
    link: String,
    /// Registry name, `shift:<name>`, or cochain JSON file.
    #[arg(long)]
    cocycle: String,
    /// Quandle for cochain files that do not name one.
    #[arg(long)]
    quandle: Option<String>,
    /// Region playing the unbounded face.
    #[arg(long)]
    base_region: Option<usize>,
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse()
}

struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, text: impl AsRef<str>, value: Value) -> Result<()> {
        if self.json {
            raw(&serde_json::to_string_pretty(&value)?)
        } else {
            raw(text.as_ref())
        }
    }
}

/// Writes a line to stdout; a closed pipe (as with `| head`) is not an error.
fn raw(text: &str) -> Result<()> {
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn group_json(g: &AbelianGroup) -> Value {
    json!({"free_rank": g.free_rank, "torsion": g.torsion, "display": g.to_string()})
}

fn guard(q: &Quandle, cfg: &Config, top: usize) -> Result<Complex> {
    if top > cfg.max_degree() + 1 {
        bail!("degree {} exceeds the configured bound {}", top - 1, cfg.max_degree());
    }
    let complex = Complex::plain(q);
    let dim = complex.tuple_count(top);
    if dim > cfg.max_generators() {
        bail!(
            "C_{top} has {dim} generators, over the configured budget of {}",
            cfg.max_generators()
        );
    }
    Ok(complex)
}

fn state_sum_output(out: &Output, label: &str, s: &StateSum) -> Result<()> {
    out.emit(format!("{label} = {s}, {} colorings", s.colorings()), s.to_json())
}

fn run(cli: Cli) -> Result<bool> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(n) = cli.workers.or(cfg.workers) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    let out = Output { json: cli.json };
    let p = cli.prime;

    match cli.command {
        Command::Homology { quandle, degree } => {
            let q = resolve::quandle(&quandle)?;
            let complex = guard(&q, &cfg, degree + 1)?;
            let g = homology(&complex, degree)?;
            out.emit(
                g.to_string(),
                json!({"quandle": quandle, "degree": degree, "ring": "Z", "group": group_json(&g)}),
            )?;
        }
        Command::Cohomology { quandle, degree, ring } => {
            let q = resolve::quandle(&quandle)?;
            let ring: Ring = ring.parse().map_err(anyhow::Error::msg)?;
            let complex = guard(&q, &cfg, degree + 1)?;
            let g = cohomology(&complex, ring, degree)?;
            out.emit(
                g.to_string(),
                json!({"quandle": quandle, "degree": degree, "ring": ring.to_string(), "group": group_json(&g)}),
            )?;
        }
        Command::Invariant(args) => {
            let c = resolve::cochain(&args.cocycle, p, args.quandle.as_deref())?;
            let d = resolve::link(&args.link, args.base_region)?;
            warn_if_not_cocycle(&c)?;
            let s = match c.cochain.degree() {
                2 => cocycle_invariant(&d, &c.quandle, &c.cochain)?,
                1 => cocycle_invariant_1(&d, &c.quandle, &c.cochain)?,
                k => bail!("{} has degree {k}; use a 2-cocycle, a 1-cocycle, or the shadow command for 3-cocycles", c.name),
            };
            state_sum_output(&out, &format!("Φ[{}]({})", c.name, args.link), &s)?;
        }
        Command::Shadow { inv, base } => {
            let c = resolve::cochain(&inv.cocycle, p, inv.quandle.as_deref())?;
            let d = resolve::link(&inv.link, inv.base_region)?;
            if base >= c.quandle.size() {
                bail!("base color {base} is not an element of {}", c.quandle_name);
            }
            warn_if_not_cocycle(&c)?;
            let s = shadow_invariant(&d, &c.quandle, &c.cochain, base)?;
            state_sum_output(&out, &format!("Φ^{base}[{}]({})", c.name, inv.link), &s)?;
        }
        Command::Colorings { link, quandle, list } => {
            let q = resolve::quandle(&quandle)?;
            let d = resolve::link(&link, None)?;
            let cols = colorings(&d, &q);
            let mut text = cols.len().to_string();
            if list {
                for c in &cols {
                    text.push_str(&format!("\n{c:?}"));
                }
            }
            let mut v = json!({"link": link, "quandle": quandle, "arcs": d.arc_count(), "colorings": cols.len()});
            if list {
                v["list"] = json!(cols);
            }
            out.emit(text, v)?;
        }
        Command::Shift { cocycle, quandle, output } => {
            let c = resolve::cochain(&cocycle, p, quandle.as_deref())?;
            warn_if_not_cocycle(&c)?;
            let s = resolve::shift(&c)?;
            let mut v = s.to_json();
            v["quandle"] = json!(c.quandle_name);
            let text = serde_json::to_string_pretty(&v)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
                    out.emit(format!("wrote σ^♯{} to {}", c.name, path.display()), json!({"written": path}))?;
                }
                None => raw(&text)?,
            }
        }
        Command::VerifyPaper { scope, primes, slow } => {
            let mut opts = VerifyOptions::default();
            if let Some(ps) = primes.or(cfg.primes.clone()) {
                opts.primes = ps;
            }
            if slow || cfg.slow.unwrap_or(false) {
                for extra in [11, 13] {
                    if !opts.primes.contains(&extra) {
                        opts.primes.push(extra);
                    }
                }
            }
            if let Some(d) = cfg.homotopy_degree {
                opts.max_degree = d;
            }
            let report = verify::run(scope, &opts);
            out.emit(report.to_string(), serde_json::to_value(&report)?)?;
            return Ok(report.passed());
        }
        Command::Express { target, basis, ring } => express(&out, &target, &basis, &ring, p)?,
    }
    Ok(true)
}

fn warn_if_not_cocycle(c: &resolve::NamedCochain) -> Result<()> {
    if !is_cocycle(&c.cochain, &Complex::plain(&c.quandle))? {
        eprintln!("warning: {} is not a cocycle; the result depends on the diagram", c.name);
    }
    Ok(())
}

fn express(out: &Output, target: &str, basis: &[String], ring: &str, p: u64) -> Result<()> {
    let (expr, modulus) = if resolve::is_cycle_name(target, p) {
        let ring: Ring = ring.parse().map_err(anyhow::Error::msg)?;
        let (_, q, t) = resolve::cycle(target, p)?;
        let bs = basis
            .iter()
            .map(|b| {
                let (_, bq, c) = resolve::cycle(b, p)?;
                if bq != q {
                    bail!("{b} lives over a different quandle than {target}");
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        (Complex::plain(&q).express_cycle(&t, &bs, ring.modulus())?, ring)
    } else {
        let t = resolve::cochain(target, p, None)?;
        let bs = basis
            .iter()
            .map(|b| {
                let c = resolve::cochain(b, p, None)?;
                if c.quandle != t.quandle {
                    bail!("{b} lives over a different quandle than {target}");
                }
                Ok(c.cochain)
            })
            .collect::<Result<Vec<_>>>()?;
        (Complex::plain(&t.quandle).express_cocycle(&t.cochain, &bs)?, t.cochain.ring())
    };
    match expr {
        Some(e) => {
            let coeffs: Vec<i64> = e.coefficients_i64().into_iter().map(|c| signed(c, modulus)).collect();
            let terms: Vec<String> = coeffs.iter().zip(basis).map(|(c, b)| format!("{c}·[{b}]")).collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            let relations: Vec<Vec<i64>> = e
                .relations
                .iter()
                .map(|r| r.iter().map(|x| x.to_i64().expect("small relation entry")).collect())
                .collect();
            out.emit(
                format!("[{target}] = {rhs} over {modulus}"),
                json!({
                    "target": target, "basis": basis, "ring": modulus.to_string(),
                    "expressible": true, "coefficients": coeffs, "relations": relations,
                }),
            )
        }
        None => out.emit(
            format!("[{target}] is not in the span of the given classes over {modulus}"),
            json!({"target": target, "basis": basis, "ring": modulus.to_string(), "expressible": false}),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
