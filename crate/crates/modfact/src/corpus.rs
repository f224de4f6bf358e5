//! Built-in corpora and corpus directories.

use std::path::Path;

use modfact_core::factorization::{theta0, theta1};

use crate::context::AnyRing;
use crate::doc::{read_json, FactorizationDocument, LoadError};
use crate::harness::CorpusEntry;

/// `(corpus, name, document)` for every shipped corpus file.
const BUILTIN: &[(&str, &str, &str)] = &[
    ("f2x_x2", "diag_x_x2", include_str!("../../../fixtures/corpus/f2x_x2/diag_x_x2.json")),
    ("f2x_x2", "jordan", include_str!("../../../fixtures/corpus/f2x_x2/jordan.json")),
    ("f2x_x2", "x0_x2", include_str!("../../../fixtures/corpus/f2x_x2/x0_x2.json")),
    ("f2x_x2", "x1_x1", include_str!("../../../fixtures/corpus/f2x_x2/x1_x1.json")),
    ("f2x_x2", "x2_x0", include_str!("../../../fixtures/corpus/f2x_x2/x2_x0.json")),
    ("f2x_x3", "x0_x3", include_str!("../../../fixtures/corpus/f2x_x3/x0_x3.json")),
    ("f2x_x3", "x1_x2", include_str!("../../../fixtures/corpus/f2x_x3/x1_x2.json")),
    ("f2x_x3", "x2_x1", include_str!("../../../fixtures/corpus/f2x_x3/x2_x1.json")),
    ("f2x_x3", "x3_x0", include_str!("../../../fixtures/corpus/f2x_x3/x3_x0.json")),
    ("f4_skew", "diag_g_x", include_str!("../../../fixtures/corpus/f4_skew/diag_g_x.json")),
    ("f4_skew", "g_gx", include_str!("../../../fixtures/corpus/f4_skew/g_gx.json")),
    ("f4_skew", "theta0", include_str!("../../../fixtures/corpus/f4_skew/theta0.json")),
    ("f4_skew", "theta1", include_str!("../../../fixtures/corpus/f4_skew/theta1.json")),
    ("f4_skew", "upper", include_str!("../../../fixtures/corpus/f4_skew/upper.json")),
    ("z5", "diag_1_5", include_str!("../../../fixtures/corpus/z5/diag_1_5.json")),
    ("z5", "theta0", include_str!("../../../fixtures/corpus/z5/theta0.json")),
    ("z5", "theta1", include_str!("../../../fixtures/corpus/z5/theta1.json")),
    ("z5", "upper_1_2_5", include_str!("../../../fixtures/corpus/z5/upper_1_2_5.json")),
    ("z6", "d2_3", include_str!("../../../fixtures/corpus/z6/d2_3.json")),
    ("z6", "d3_2", include_str!("../../../fixtures/corpus/z6/d3_2.json")),
    ("z6", "diag_2_3", include_str!("../../../fixtures/corpus/z6/diag_2_3.json")),
    ("z6", "theta0", include_str!("../../../fixtures/corpus/z6/theta0.json")),
    ("z6", "theta1", include_str!("../../../fixtures/corpus/z6/theta1.json")),
    ("z6", "upper_2_1_3", include_str!("../../../fixtures/corpus/z6/upper_2_1_3.json")),
    ("zc2_p3", "theta0", include_str!("../../../fixtures/corpus/zc2_p3/theta0.json")),
    ("zc2_p3", "theta1", include_str!("../../../fixtures/corpus/zc2_p3/theta1.json")),
    ("zc2_p3", "two_minus_x", include_str!("../../../fixtures/corpus/zc2_p3/two_minus_x.json")),
    ("zc2_p3", "two_plus_x", include_str!("../../../fixtures/corpus/zc2_p3/two_plus_x.json")),
    ("zc3_p2", "one_minus_x_plus_x2", include_str!("../../../fixtures/corpus/zc3_p2/one_minus_x_plus_x2.json")),
    ("zc3_p2", "one_plus_x", include_str!("../../../fixtures/corpus/zc3_p2/one_plus_x.json")),
    ("zc3_p2", "theta0", include_str!("../../../fixtures/corpus/zc3_p2/theta0.json")),
    ("zc3_p2", "theta1", include_str!("../../../fixtures/corpus/zc3_p2/theta1.json")),
];

pub fn builtin_names() -> Vec<&'static str> {
    let mut v: Vec<&str> = BUILTIN.iter().map(|(c, _, _)| *c).collect();
    v.dedup();
    v
}

/// A shipped corpus by name, e.g. `z6` or `f2x_x3`.
pub fn builtin(corpus: &str) -> Result<(AnyRing, Vec<CorpusEntry>), LoadError> {
    let mut entries = Vec::new();
    for (c, name, text) in BUILTIN.iter().filter(|(c, _, _)| *c == corpus) {
        let doc: FactorizationDocument =
            serde_json::from_str(text).map_err(|e| LoadError::Parse(format!("{c}/{name}: {e}")))?;
        entries.push(CorpusEntry { name: name.to_string(), doc });
    }
    if entries.is_empty() {
        return Err(LoadError::Parse(format!("no built-in corpus {corpus:?}; available: {}", builtin_names().join(", "))));
    }
    let ctx = common_ring(&entries)?;
    Ok((ctx, entries))
}

/// Every `*.json` factorization document in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<(AnyRing, Vec<CorpusEntry>), LoadError> {
    let rd = std::fs::read_dir(dir).map_err(|e| LoadError::Parse(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<_> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut entries = Vec::new();
    for p in paths {
        let doc: FactorizationDocument = read_json(&p)?;
        let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        entries.push(CorpusEntry { name, doc });
    }
    if entries.is_empty() {
        return Err(LoadError::Parse(format!("{}: no .json documents", dir.display())));
    }
    let ctx = common_ring(&entries)?;
    Ok((ctx, entries))
}

fn common_ring(entries: &[CorpusEntry]) -> Result<AnyRing, LoadError> {
    let ctx = entries[0].doc.context()?;
    for e in &entries[1..] {
        if e.doc.context()? != ctx {
            return Err(LoadError::Parse(format!("corpus mixes rings: {} differs from {}", e.name, entries[0].name)));
        }
    }
    Ok(ctx)
}

/// The shipped corpus over the given ring, if there is one.
pub fn builtin_for(ctx: &AnyRing) -> Option<Vec<CorpusEntry>> {
    builtin_names().into_iter().find_map(|c| match builtin(c) {
        Ok((r, entries)) if r == *ctx => Some(entries),
        _ => None,
    })
}

/// `theta0`, `theta1` in ranks 1 and 2, for rings without a shipped corpus.
pub fn generic(ctx: &AnyRing) -> Vec<CorpusEntry> {
    crate::with_ring!(ctx, r => {
        let mut v = Vec::new();
        for n in 1..=2 {
            for (name, x) in [("theta0", theta0(r, n)), ("theta1", theta1(r, n))] {
                let doc = FactorizationDocument::from_factorization(ctx, r, &x);
                v.push(CorpusEntry { name: format!("{name}_{n}"), doc });
            }
        }
        v
    })
}

/// The shipped corpus over `ctx`, or [`generic`] when there is none.
pub fn default_for(ctx: &AnyRing) -> Vec<CorpusEntry> {
    builtin_for(ctx).unwrap_or_else(|| generic(ctx))
}
