//! JSON documents for factorizations, morphisms and modules.
//!
//! Matrices are row-major lists of element strings: `d0` has `n0 * n1`
//! entries, `d1` has `n1 * n0`. Saving always produces the canonical form
//! (canonical element strings, fixed field order, two-space indentation,
//! trailing newline), so `save(load(doc)) == doc` byte for byte on canonical input.

use std::fmt;
use std::path::Path;

use modfact_core::factorization::{check_axioms, ModuleFactorization, Morphism};
use modfact_core::modules::ModulePresentation;
use serde::{Deserialize, Serialize};

use crate::context::{AnyRing, Ring, RingDoc};
use crate::format::{format_entries, parse_entries};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationDocument {
    pub schema_version: u32,
    pub ring: RingDoc,
    pub omega: String,
    pub n0: usize,
    pub n1: usize,
    pub d0: Vec<String>,
    pub d1: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDocument {
    pub schema_version: u32,
    pub source: FactorizationDocument,
    pub target: FactorizationDocument,
    /// `n0(source) x n0(target)`.
    pub f0: Vec<String>,
    /// `n1(source) x n1(target)`.
    pub f1: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    pub schema_version: u32,
    pub ring: RingDoc,
    pub omega: String,
    pub over_quotient: bool,
    pub generators: usize,
    /// Number of relation rows.
    pub rows: usize,
    /// Row-major `rows x generators`.
    pub relations: Vec<String>,
}

/// Load failures. `Parse` covers IO, JSON and grammar errors; `Axioms` a
/// well-formed document whose matrices violate the factorization axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadError {
    Parse(String),
    Axioms(String),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Parse(s) => write!(f, "{s}"),
            LoadError::Axioms(s) => write!(f, "axiom violation: {s}"),
        }
    }
}

impl std::error::Error for LoadError {}

fn check_version(v: u32) -> Result<(), LoadError> {
    if v != SCHEMA_VERSION {
        return Err(LoadError::Parse(format!("unsupported schema_version {v}; this build reads {SCHEMA_VERSION}")));
    }
    Ok(())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))
}

pub fn to_canonical_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

impl FactorizationDocument {
    pub fn context(&self) -> Result<AnyRing, LoadError> {
        check_version(self.schema_version)?;
        AnyRing::from_doc(&self.ring, &self.omega).map_err(LoadError::Parse)
    }

    /// Matrices without the axiom check.
    pub fn matrices<R: Ring>(&self, ring: &R) -> Result<ModuleFactorization<R::El>, LoadError> {
        let d0 = parse_entries(ring, "d0", self.n0, self.n1, &self.d0).map_err(LoadError::Parse)?;
        let d1 = parse_entries(ring, "d1", self.n1, self.n0, &self.d1).map_err(LoadError::Parse)?;
        ModuleFactorization::from_matrices(d0, d1).map_err(|e| LoadError::Parse(e.to_string()))
    }

    /// Matrices passing both axioms.
    pub fn factorization<R: Ring>(&self, ring: &R) -> Result<ModuleFactorization<R::El>, LoadError> {
        let x = self.matrices(ring)?;
        let rep = check_axioms(ring, &x).map_err(|e| LoadError::Parse(e.to_string()))?;
        if !rep.ok() {
            return Err(LoadError::Axioms(rep.violations.join("; ")));
        }
        Ok(x)
    }

    pub fn from_factorization<R: Ring>(ctx: &AnyRing, ring: &R, x: &ModuleFactorization<R::El>) -> Self {
        let (rd, omega) = ctx.to_doc();
        FactorizationDocument {
            schema_version: SCHEMA_VERSION,
            ring: rd,
            omega,
            n0: x.n0,
            n1: x.n1,
            d0: format_entries(ring, &x.d0),
            d1: format_entries(ring, &x.d1),
        }
    }
}

impl MorphismDocument {
    pub fn context(&self) -> Result<AnyRing, LoadError> {
        check_version(self.schema_version)?;
        let a = self.source.context()?;
        if self.target.context()? != a {
            return Err(LoadError::Parse("source and target live over different rings".into()));
        }
        Ok(a)
    }

    /// Source, target and morphism; errors if the pair is not a morphism.
    #[allow(clippy::type_complexity)]
    pub fn load<R: Ring>(
        &self,
        ring: &R,
    ) -> Result<(ModuleFactorization<R::El>, ModuleFactorization<R::El>, Morphism<R::El>), LoadError> {
        let x = self.source.factorization(ring)?;
        let y = self.target.factorization(ring)?;
        let f0 = parse_entries(ring, "f0", x.n0, y.n0, &self.f0).map_err(LoadError::Parse)?;
        let f1 = parse_entries(ring, "f1", x.n1, y.n1, &self.f1).map_err(LoadError::Parse)?;
        let f = Morphism::new(f0, f1);
        let ok = modfact_core::factorization::is_morphism(ring, &x, &y, &f).map_err(|e| LoadError::Parse(e.to_string()))?;
        if !ok {
            return Err(LoadError::Axioms("(f0, f1) does not commute with the differentials".into()));
        }
        Ok((x, y, f))
    }

    pub fn from_morphism<R: Ring>(
        ctx: &AnyRing,
        ring: &R,
        x: &ModuleFactorization<R::El>,
        y: &ModuleFactorization<R::El>,
        f: &Morphism<R::El>,
    ) -> Self {
        MorphismDocument {
            schema_version: SCHEMA_VERSION,
            source: FactorizationDocument::from_factorization(ctx, ring, x),
            target: FactorizationDocument::from_factorization(ctx, ring, y),
            f0: format_entries(ring, &f.f0),
            f1: format_entries(ring, &f.f1),
        }
    }
}

impl ModuleDocument {
    pub fn context(&self) -> Result<AnyRing, LoadError> {
        check_version(self.schema_version)?;
        AnyRing::from_doc(&self.ring, &self.omega).map_err(LoadError::Parse)
    }

    pub fn module<R: Ring>(&self, ring: &R) -> Result<ModulePresentation<R::El>, LoadError> {
        let rel = parse_entries(ring, "relations", self.rows, self.generators, &self.relations).map_err(LoadError::Parse)?;
        ModulePresentation::new(ring, self.generators, rel, self.over_quotient).map_err(|e| LoadError::Parse(e.to_string()))
    }

    pub fn from_module<R: Ring>(ctx: &AnyRing, ring: &R, m: &ModulePresentation<R::El>) -> Self {
        let (rd, omega) = ctx.to_doc();
        ModuleDocument {
            schema_version: SCHEMA_VERSION,
            ring: rd,
            omega,
            over_quotient: m.over_quotient,
            generators: m.generators,
            rows: m.relations.rows(),
            relations: format_entries(ring, &m.relations),
        }
    }
}
