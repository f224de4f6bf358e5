//! The `modfact` command line.
//!
//! Exit codes: 0 success, 1 IO or parse error, 2 mathematical failure
//! (axiom violation, unsolvable system, missing certificate, failed suite).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use modfact_core::cokfun::{cok0, cok1, lift_map, mf_from_module, periodic_resolution, stable_hom_quotient};
use modfact_core::factorization::{check_axioms, direct_sum, shift, ModuleFactorization};
use modfact_core::gamma::{from_gamma, to_gamma};
use modfact_core::homotopy::{is_p_null_homotopic, stable_hom, stable_iso_witness, syzygy, SearchBound};
use modfact_core::modules::{invariant_factors, InvariantFactorForm};
use modfact_core::{FactorRing, Matrix};

use crate::context::{AnyRing, Ring};
use crate::doc::{read_json, to_canonical_json, FactorizationDocument, LoadError, ModuleDocument, MorphismDocument};
use crate::format::{format_matrix, parse_entries};
use crate::harness::{run_suite, SuiteConfig, SUITES};
use crate::{corpus, with_ring};

#[derive(Parser, Debug)]
#[command(name = "modfact", version, about = "Module and matrix factorizations of a regular normal element")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check both factorization axioms.
    Check { file: PathBuf },
    /// Invariant factors of Cok0 = coker(d0).
    Cok0 { file: PathBuf },
    /// Invariant factors of Cok1 = Cok0 of the shift.
    Cok1 { file: PathBuf },
    /// The shifted factorization.
    Shift { file: PathBuf },
    /// Direct sum of two factorizations.
    Sum { first: PathBuf, second: PathBuf },
    /// Decide whether a morphism is p-null-homotopic and print a homotopy.
    Homotopic { file: PathBuf },
    /// Stable Hom(X, Y), on both sides of Cok0.
    StableHom { x: PathBuf, y: PathBuf },
    /// Decide stable isomorphism by bounded search.
    StableIso {
        x: PathBuf,
        y: PathBuf,
        /// Coefficient height of the search (default depends on the ring).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// The syzygy (unshift) of a factorization.
    Syzygy { file: PathBuf },
    /// Certify exactness of the 2-periodic complete resolution.
    Resolve {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
    /// A factorization whose Cok0 is the given module over A/(omega).
    FromModule { file: PathBuf },
    /// Lift a map Cok0(X) -> Cok0(Y) to a morphism X -> Y.
    Lift {
        x: PathBuf,
        y: PathBuf,
        /// Matrix of the map (n1(X) x n1(Y)): a JSON list of element strings, flat or nested, or a file holding one.
        #[arg(long)]
        map: String,
    },
    /// The Gamma-module attached to a factorization.
    Gamma { file: PathBuf },
    /// Run a verification suite and print its JSON report.
    Verify {
        /// One of theorem1, theorem3, gp-transfer, adjunctions, group-ring.
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Directory of factorization documents over one ring.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Ring when no corpus directory is given: integers:W, poly:P:W, skew:P:E or group:N:P.
        #[arg(long)]
        ring: Option<String>,
        /// Random samples (per pair for theorem1, in total otherwise).
        #[arg(long)]
        samples: Option<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Math(String),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(s) => Failure::Input(s),
            e @ LoadError::Axioms(_) => Failure::Math(e.to_string()),
        }
    }
}

impl From<modfact_core::Error> for Failure {
    fn from(e: modfact_core::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

type Out<'a> = &'a mut dyn Write;

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Input(s)) => {
            let _ = writeln!(err, "error: {s}");
            1
        }
        Err(Failure::Math(s)) => {
            let _ = writeln!(err, "error: {s}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn load_fact(path: &Path) -> Result<(AnyRing, FactorizationDocument), Failure> {
    let doc: FactorizationDocument = read_json(path)?;
    let ctx = doc.context()?;
    Ok((ctx, doc))
}

fn same_ring(a: &AnyRing, b: &AnyRing) -> Result<(), Failure> {
    if a != b {
        return Err(Failure::Input(format!("documents live over different rings: {} and {}", a.describe(), b.describe())));
    }
    Ok(())
}

fn print_doc<T: serde::Serialize>(out: Out, doc: &T) -> Result<i32, Failure> {
    out.write_all(to_canonical_json(doc).as_bytes()).map_err(io)?;
    Ok(0)
}

fn describe_factors<R: Ring>(ring: &R, f: &InvariantFactorForm<R::El>) -> String {
    if f.is_zero() {
        return "zero module".into();
    }
    let t: Vec<String> = f.torsion_factors.iter().map(|a| ring.format_el(a)).collect();
    let mut s = format!("invariant factors: [{}]", t.join(", "));
    if f.free_rank > 0 {
        s.push_str(&format!("; free rank: {}", f.free_rank));
    }
    s
}

fn describe_base<R: Ring>(ring: &R, torsion: &[<R::Base as modfact_core::RingOps>::El], free_rank: usize) -> String {
    if torsion.is_empty() && free_rank == 0 {
        return "zero".into();
    }
    let t: Vec<String> = torsion.iter().map(|b| ring.format_el(&ring.base_scalar(b))).collect();
    format!("torsion [{}], free rank {free_rank}", t.join(", "))
}

fn dispatch(cmd: Command, out: Out) -> Result<i32, Failure> {
    match cmd {
        Command::Check { file } => {
            let (ctx, doc) = load_fact(&file)?;
            with_ring!(&ctx, r => {
                let x = doc.matrices(r)?;
                let rep = check_axioms(r, &x)?;
                if rep.ok() {
                    writeln!(out, "axioms: OK").map_err(io)?;
                    Ok(0)
                } else {
                    writeln!(out, "axioms: FAILED").map_err(io)?;
                    for v in &rep.violations {
                        writeln!(out, "  {v}").map_err(io)?;
                    }
                    Ok(2)
                }
            })
        }
        Command::Cok0 { file } => cokernel(&file, false, out),
        Command::Cok1 { file } => cokernel(&file, true, out),
        Command::Shift { file } => {
            let (ctx, doc) = load_fact(&file)?;
            with_ring!(&ctx, r => {
                let x = doc.factorization(r)?;
                print_doc(out, &FactorizationDocument::from_factorization(&ctx, r, &shift(r, &x)))
            })
        }
        Command::Sum { first, second } => {
            let (ctx, a) = load_fact(&first)?;
            let (ctx2, b) = load_fact(&second)?;
            same_ring(&ctx, &ctx2)?;
            with_ring!(&ctx, r => {
                let (x, y) = (a.factorization(r)?, b.factorization(r)?);
                print_doc(out, &FactorizationDocument::from_factorization(&ctx, r, &direct_sum(r, &x, &y)))
            })
        }
        Command::Homotopic { file } => {
            let doc: MorphismDocument = read_json(&file)?;
            let ctx = doc.context()?;
            with_ring!(&ctx, r => {
                let (x, y, f) = doc.load(r)?;
                match is_p_null_homotopic(r, &x, &y, &f)? {
                    Some(h) => writeln!(
                        out,
                        "null-homotopic: yes; H1={}, H0={}",
                        format_matrix(r, &h.h1),
                        format_matrix(r, &h.h0)
                    ),
                    None => writeln!(out, "null-homotopic: no"),
                }
                .map_err(io)?;
                Ok(0)
            })
        }
        Command::StableHom { x, y } => {
            let (ctx, a) = load_fact(&x)?;
            let (ctx2, b) = load_fact(&y)?;
            same_ring(&ctx, &ctx2)?;
            with_ring!(&ctx, r => {
                let (x, y) = (a.factorization(r)?, b.factorization(r)?);
                let s = stable_hom(r, &x, &y)?;
                let q = stable_hom_quotient(r, &cok0(r, &x), &cok0(r, &y))?;
                writeln!(out, "stable Hom: {}", describe_base(r, &s.torsion, s.free_rank)).map_err(io)?;
                writeln!(out, "cokernel side: {}", describe_base(r, &q.torsion, q.free_rank)).map_err(io)?;
                for (i, f) in s.representatives.iter().enumerate() {
                    writeln!(out, "generator {}: F0={}, F1={}", i + 1, format_matrix(r, &f.f0), format_matrix(r, &f.f1))
                        .map_err(io)?;
                }
                Ok(0)
            })
        }
        Command::StableIso { x, y, bound } => {
            let (ctx, a) = load_fact(&x)?;
            let (ctx2, b) = load_fact(&y)?;
            same_ring(&ctx, &ctx2)?;
            with_ring!(&ctx, r => {
                let (x, y) = (a.factorization(r)?, b.factorization(r)?);
                let mut sb = SearchBound::default_for(&r.kind());
                if let Some(h) = bound {
                    sb.height = h;
                }
                match stable_iso_witness(r, &x, &y, sb)? {
                    Some((u, v)) => {
                        writeln!(out, "yes").map_err(io)?;
                        writeln!(out, "u: F0={}, F1={}", format_matrix(r, &u.f0), format_matrix(r, &u.f1)).map_err(io)?;
                        writeln!(out, "v: F0={}, F1={}", format_matrix(r, &v.f0), format_matrix(r, &v.f1)).map_err(io)?;
                    }
                    None => writeln!(out, "no").map_err(io)?,
                }
                Ok(0)
            })
        }
        Command::Syzygy { file } => {
            let (ctx, doc) = load_fact(&file)?;
            with_ring!(&ctx, r => {
                let x = doc.factorization(r)?;
                print_doc(out, &FactorizationDocument::from_factorization(&ctx, r, &syzygy(r, &x)))
            })
        }
        Command::Resolve { file, window } => {
            let (ctx, doc) = load_fact(&file)?;
            with_ring!(&ctx, r => {
                let x = doc.factorization(r)?;
                let res = periodic_resolution(r, &x, window)?;
                for (k, d) in res.differentials.iter().enumerate() {
                    writeln!(out, "d{k}: {}", format_matrix(r, d)).map_err(io)?;
                }
                let at: Vec<String> = res.exact_at.iter().map(|k| k.to_string()).collect();
                let probes: Vec<String> = res.hom_probes.iter().map(|k| k.to_string()).collect();
                writeln!(out, "exact at: {}", at.join(", ")).map_err(io)?;
                writeln!(out, "Hom probes (ranks): {}", probes.join(", ")).map_err(io)?;
                Ok(0)
            })
        }
        Command::FromModule { file } => {
            let doc: ModuleDocument = read_json(&file)?;
            let ctx = doc.context()?;
            with_ring!(&ctx, r => {
                let m = doc.module(r)?;
                let x = mf_from_module(r, &m)?;
                print_doc(out, &FactorizationDocument::from_factorization(&ctx, r, &x))
            })
        }
        Command::Lift { x, y, map } => {
            let (ctx, a) = load_fact(&x)?;
            let (ctx2, b) = load_fact(&y)?;
            same_ring(&ctx, &ctx2)?;
            let entries = read_map(&map)?;
            with_ring!(&ctx, r => {
                let (x, y) = (a.factorization(r)?, b.factorization(r)?);
                let g: Matrix<_> = parse_entries(r, "map", x.n1, y.n1, &entries).map_err(Failure::Input)?;
                let f = lift_map(r, &x, &y, &g)?;
                print_doc(out, &MorphismDocument::from_morphism(&ctx, r, &x, &y, &f))
            })
        }
        Command::Gamma { file } => {
            let (ctx, doc) = load_fact(&file)?;
            with_ring!(&ctx, r => {
                let x = doc.factorization(r)?;
                let view = to_gamma(&x);
                writeln!(out, "Gamma-module on (X1; X0) with n1 = {}, n0 = {}", view.n1, view.n0).map_err(io)?;
                writeln!(out, "e12 acts by x0 -> x0 * {}", format_matrix(r, &view.upper)).map_err(io)?;
                writeln!(out, "e21 omega acts by x1 -> sigma(x1) * {}", format_matrix(r, &view.lower)).map_err(io)?;
                let back: ModuleFactorization<_> = from_gamma(r, &view);
                writeln!(out, "round trip: {}", if back == x { "OK" } else { "FAILED" }).map_err(io)?;
                Ok(if back == x { 0 } else { 2 })
            })
        }
        Command::Verify { suite, seed, corpus: dir, ring, samples } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Failure::Input(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
            }
            let (ctx, entries) = match (&dir, &ring) {
                (Some(d), given) => {
                    let (ctx, entries) = corpus::load_dir(d)?;
                    if let Some(spec) = given {
                        same_ring(&AnyRing::parse_spec(spec).map_err(Failure::Input)?, &ctx)?;
                    }
                    (ctx, entries)
                }
                (None, given) => {
                    let spec = given.clone().unwrap_or_else(|| default_ring(&suite).to_string());
                    let ctx = AnyRing::parse_spec(&spec).map_err(Failure::Input)?;
                    let entries = corpus::default_for(&ctx);
                    (ctx, entries)
                }
            };
            let cfg = SuiteConfig { seed, samples: samples.unwrap_or_else(|| default_samples(&suite)) };
            let report = run_suite(&suite, &ctx, &entries, cfg).map_err(Failure::Input)?;
            print_doc(out, &report)?;
            Ok(if report.summary.pass { 0 } else { 2 })
        }
    }
}

pub fn default_ring(suite: &str) -> &'static str {
    match suite {
        "theorem3" => "integers:5",
        "gp-transfer" => "group:2:3",
        "group-ring" => "group:3:2",
        _ => "integers:6",
    }
}

pub fn default_samples(suite: &str) -> usize {
    match suite {
        "theorem1" => 3,
        "adjunctions" => 50,
        "group-ring" => 10,
        _ => 20,
    }
}

fn cokernel(file: &Path, first: bool, out: Out) -> Result<i32, Failure> {
    let (ctx, doc) = load_fact(file)?;
    with_ring!(&ctx, r => {
        let x = doc.factorization(r)?;
        let m = if first { cok1(r, &x) } else { cok0(r, &x) };
        let f = invariant_factors(r, &m)?;
        writeln!(out, "{}", describe_factors(r, &f)).map_err(io)?;
        Ok(0)
    })
}

/// The `--map` argument: inline JSON, or a path to a file holding it.
fn read_map(arg: &str) -> Result<Vec<String>, Failure> {
    let text = if Path::new(arg).is_file() { std::fs::read_to_string(arg).map_err(io)? } else { arg.to_string() };
    let v: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("--map is not JSON: {e}")))?;
    let mut out = Vec::new();
    flatten(&v, &mut out)?;
    Ok(out)
}

fn flatten(v: &serde_json::Value, out: &mut Vec<String>) -> Result<(), Failure> {
    match v {
        serde_json::Value::String(s) => out.push(s.clone()),
        serde_json::Value::Number(n) => out.push(n.to_string()),
        serde_json::Value::Array(items) => {
            for i in items {
                flatten(i, out)?;
            }
        }
        other => return Err(Failure::Input(format!("--map: unexpected {other}"))),
    }
    Ok(())
}
