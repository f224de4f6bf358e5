//! Desk-scale verification suites and their JSON reports.
//!
//! Every suite is deterministic in `(corpus, seed)`: each instance draws from
//! its own ChaCha8 stream keyed by the seed and the instance id. Instances run
//! in parallel and are reported in corpus order.
//!
//! Random data follows one distribution everywhere: integer entries uniform
//! in `[-5, 5]`, polynomial entries of degree at most 3 with uniform
//! coefficients, group-ring entries with every coefficient in `[-5, 5]`.

use modfact_core::adjoint::{check_adjunction, Adjunction, AdjunctionSample, ALL_ADJUNCTIONS};
use modfact_core::cokfun::{
    cok0, cok0_factors_through_projective, cok0_on_morphism, lift_map, maps_agree, mf_from_module, pd_over_a,
    periodic_resolution, random_projective_map, random_quotient_map, stable_hom_quotient, PdCertificate,
};
use modfact_core::factorization::{check_axioms, identity, is_morphism, theta0, theta1, ModuleFactorization, Morphism};
use modfact_core::homotopy::{
    homotopy_image, is_p_null_homotopic, is_projective_object, random_morphism, stable_hom, stable_iso, Homotopy,
    SearchBound,
};
use modfact_core::modules::{
    base_invariants, expanded_relations, free_cover_step, invariant_factors, is_gorenstein_projective,
    is_projective_over_quotient, ModulePresentation,
};
use modfact_core::normal_form::{left_kernel, smith};
use modfact_core::{Error, FactorRing, MatOps, Matrix, RingKind, TwistOps};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::context::{AnyRing, Ring, RingDoc};
use crate::doc::FactorizationDocument;
use crate::format::format_matrix;

pub const VERDICT_PASS: &str = "no counterexample in corpus";
pub const VERDICT_FAIL: &str = "counterexample found";
pub const SCOPE_NOTE: &str = "The Verdier-quotient equivalence has no suite of its own; only its ingredient functors \
     theta0, theta1 and pr1 are exercised, through the adjunctions suite. Passing checks mean no counterexample \
     was found in this corpus, nothing more.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: &str) -> Check {
        Check { name: name.into(), status: Status::Pass, witness: None }
    }
    pub fn fail(name: &str, witness: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Fail, witness: Some(witness.into()) }
    }
    pub fn skip(name: &str, reason: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Skip, witness: Some(reason.into()) }
    }
    /// Pass when `ok`, otherwise fail with the witness produced lazily.
    pub fn expect(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness())
        }
    }
    fn from_result(name: &str, r: Result<bool, Error>, witness: impl FnOnce() -> String) -> Check {
        match r {
            Ok(ok) => Check::expect(name, ok, witness),
            Err(e @ Error::SearchBoundExceeded(_)) => Check::skip(name, e.to_string()),
            Err(e) => Check::fail(name, format!("{}: {e}", witness())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub id: String,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingReport {
    #[serde(flatten)]
    pub ring: RingDoc,
    pub omega: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: bool,
    pub verdict: String,
    pub instances: usize,
    pub checks: usize,
    pub failed: usize,
    pub skipped: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub ring: RingReport,
    pub seed: u64,
    pub scope: String,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

impl Report {
    fn new(suite: &str, ctx: &AnyRing, seed: u64, instances: Vec<Instance>, notes: Vec<String>) -> Report {
        let checks = instances.iter().map(|i| i.checks.len()).sum();
        let count = |s: Status| instances.iter().flat_map(|i| &i.checks).filter(|c| c.status == s).count();
        let (failed, skipped) = (count(Status::Fail), count(Status::Skip));
        let (ring, omega) = ctx.to_doc();
        Report {
            suite: suite.into(),
            ring: RingReport { ring, omega },
            seed,
            scope: SCOPE_NOTE.into(),
            summary: Summary {
                pass: failed == 0,
                verdict: if failed == 0 { VERDICT_PASS } else { VERDICT_FAIL }.into(),
                instances: instances.len(),
                checks,
                failed,
                skipped,
                notes,
            },
            instances,
        }
    }

    pub fn failures(&self) -> Vec<(String, Check)> {
        self.instances
            .iter()
            .flat_map(|i| i.checks.iter().filter(|c| c.status == Status::Fail).map(move |c| (i.id.clone(), c.clone())))
            .collect()
    }
}

/// A named corpus document.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub doc: FactorizationDocument,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random samples per instance (maps, morphisms) or random instances per suite.
    pub samples: usize,
}

pub const SUITES: [&str; 5] = ["theorem1", "theorem3", "gp-transfer", "adjunctions", "group-ring"];

/// Entry bound for seeded random data.
pub fn sample_bound(kind: &RingKind) -> usize {
    match kind {
        RingKind::Integers | RingKind::GroupRingZCn { .. } => 5,
        RingKind::PolyOverPrimeField { .. } | RingKind::SkewPolyOverGF { .. } => 4,
    }
}

/// The per-instance stream: FNV-1a of the id mixed into the seed.
pub fn instance_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

pub fn random_matrix<R: FactorRing>(ring: &R, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix<R::El> {
    let b = sample_bound(&ring.kind());
    Matrix::from_fn(rows, cols, |_, _| ring.random_element(rng, b))
}

/// A module over the quotient with one or two generators and up to two random relations.
pub fn random_quotient_module<R: FactorRing>(ring: &R, rng: &mut ChaCha8Rng) -> ModulePresentation<R::El> {
    let g = rng.gen_range(1..=2);
    let k = rng.gen_range(0..=2);
    let rel = random_matrix(ring, k, g, rng);
    ModulePresentation::new(ring, g, rel, true).expect("shape is consistent")
}

/// Parses the corpus; entries with axiom violations are kept as `Err` so the
/// suite can report them and carry on.
#[allow(clippy::type_complexity)]
fn load_corpus<R: Ring>(ring: &R, corpus: &[CorpusEntry]) -> Vec<(String, Result<ModuleFactorization<R::El>, String>)> {
    corpus
        .iter()
        .map(|e| {
            let x = e.doc.matrices(ring).map_err(|err| err.to_string()).and_then(|x| {
                let rep = check_axioms(ring, &x).map_err(|err| err.to_string())?;
                if rep.ok() {
                    Ok(x)
                } else {
                    Err(rep.violations.join("; "))
                }
            });
            (e.name.clone(), x)
        })
        .collect()
}

fn axiom_check<E>(x: &Result<ModuleFactorization<E>, String>) -> Check {
    match x {
        Ok(_) => Check::pass("axioms"),
        Err(e) => Check::fail("axioms", e.clone()),
    }
}

fn valid<E: Clone>(loaded: &[(String, Result<ModuleFactorization<E>, String>)]) -> Vec<(String, ModuleFactorization<E>)> {
    loaded.iter().filter_map(|(n, x)| x.as_ref().ok().map(|x| (n.clone(), x.clone()))).collect()
}

/// Equivalence of the stable factorization category with the stable
/// category of Gorenstein projective quotient modules, checked through
/// density, fullness, faithfulness and the Gorenstein projectivity of `Cok0`.
pub fn verify_theorem1<R: Ring>(ctx: &AnyRing, ring: &R, corpus: &[CorpusEntry], cfg: SuiteConfig) -> Report {
    let loaded = load_corpus(ring, corpus);
    let objs = valid(&loaded);
    let mut instances: Vec<Instance> = loaded
        .par_iter()
        .map(|(name, x)| {
            let mut checks = vec![axiom_check(x)];
            if let Ok(x) = x {
                checks.extend(object_checks_t1(ring, x));
            }
            Instance { id: name.clone(), checks }
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..objs.len()).flat_map(|i| (0..objs.len()).map(move |j| (i, j))).collect();
    let pair_instances: Vec<Instance> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let id = format!("{} -> {}", objs[i].0, objs[j].0);
            let mut rng = instance_rng(cfg.seed, &id);
            let checks = pair_checks_t1(ring, &objs[i].1, &objs[j].1, cfg.samples, &mut rng);
            Instance { id, checks }
        })
        .collect();
    instances.extend(pair_instances);
    let notes = match stable_classes(ring, &objs) {
        Ok(k) => vec![format!("non-projective stable classes in corpus: {k}")],
        Err(e) => vec![format!("stable classes not determined: {e}")],
    };
    Report::new("theorem1", ctx, cfg.seed, instances, notes)
}

fn object_checks_t1<R: Ring>(ring: &R, x: &ModuleFactorization<R::El>) -> Vec<Check> {
    let n = cok0(ring, x);
    let density = mf_from_module(ring, &n).and_then(|y| {
        let a = invariant_factors(ring, &cok0(ring, &y))?;
        let b = invariant_factors(ring, &n)?;
        Ok(a == b)
    });
    vec![
        Check::from_result("density", density, || "invariant factors of Cok0(mf_from_module(Cok0 X)) differ".into()),
        Check::from_result("gorenstein_projective", is_gorenstein_projective(ring, &n), || {
            "Cok0(X) is not Gorenstein projective".into()
        }),
    ]
}

fn pair_checks_t1<R: Ring>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Check> {
    let (mx, my) = (cok0(ring, x), cok0(ring, y));
    let bound = sample_bound(&ring.kind());
    let mut checks = Vec::new();

    let mut full = Ok(true);
    let mut witness = String::new();
    for _ in 0..samples {
        let r = random_quotient_map(ring, &mx, &my, rng, bound).and_then(|g| {
            let f = lift_map(ring, x, y, &g)?;
            let back = cok0_on_morphism(ring, x, y, &f)?;
            let ok = maps_agree(ring, &my, &back.g, &g)?;
            if !ok {
                witness = format!("g = {}", format_matrix(ring, &g));
            }
            Ok(ok)
        });
        if !matches!(r, Ok(true)) {
            full = r;
            break;
        }
    }
    checks.push(Check::from_result("fullness", full, || witness.clone()));

    let mut lift_null = Ok(true);
    for _ in 0..samples {
        let r = random_projective_map(ring, &mx, &my, rng, bound).and_then(|g| {
            let f = lift_map(ring, x, y, &g)?;
            Ok(is_p_null_homotopic(ring, x, y, &f)?.is_some())
        });
        if !matches!(r, Ok(true)) {
            lift_null = r;
            break;
        }
    }
    checks.push(Check::from_result("lift_of_stably_zero_map_is_null_homotopic", lift_null, || {
        "lift of a map through a projective is not null-homotopic".into()
    }));

    let mut faithful = Ok(true);
    let mut fw = String::new();
    let mut candidates: Vec<Result<Morphism<R::El>, Error>> = Vec::new();
    for _ in 0..samples {
        candidates.push(random_morphism(ring, x, y, rng, bound));
        let h = Homotopy { h0: random_matrix(ring, x.n0, y.n1, rng), h1: random_matrix(ring, x.n1, y.n0, rng) };
        candidates.push(Ok(homotopy_image(ring, x, y, &h)));
    }
    if x == y {
        candidates.push(Ok(identity(ring, x)));
    }
    for f in candidates {
        let r = f.and_then(|f| {
            let a = is_p_null_homotopic(ring, x, y, &f)?.is_some();
            let b = cok0_factors_through_projective(ring, x, y, &f)?;
            if a != b {
                fw = format!(
                    "F0 = {}, F1 = {}: null-homotopic {a}, Cok0 through projective {b}",
                    format_matrix(ring, &f.f0),
                    format_matrix(ring, &f.f1)
                );
            }
            Ok(a == b)
        });
        if !matches!(r, Ok(true)) {
            faithful = r;
            break;
        }
    }
    checks.push(Check::from_result("faithfulness", faithful, || fw.clone()));

    let consistency = stable_hom(ring, x, y).and_then(|a| {
        let b = stable_hom_quotient(ring, &mx, &my)?;
        Ok(a.torsion == b.torsion && a.free_rank == b.free_rank)
    });
    checks.push(Check::from_result("stable_hom_matches_quotient_side", consistency, || {
        "stable Hom invariants differ between the two sides".into()
    }));
    checks
}

/// Number of stable isomorphism classes among the non-projective objects.
fn stable_classes<R: Ring>(ring: &R, objs: &[(String, ModuleFactorization<R::El>)]) -> Result<usize, Error> {
    let bound = SearchBound::default_for(&ring.kind());
    let mut reps: Vec<&ModuleFactorization<R::El>> = Vec::new();
    for (_, x) in objs {
        if is_projective_object(ring, x)? {
            continue;
        }
        let mut seen = false;
        for r in &reps {
            if stable_iso(ring, r, x, bound)? {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(x);
        }
    }
    Ok(reps.len())
}

/// Restriction to modules of projective dimension one over `A`: `pd_A Cok0 <= 1`,
/// exactness of the 2-periodic complete resolution, and density on modules with `pd_A = 1`.
pub fn verify_theorem3<R: Ring>(ctx: &AnyRing, ring: &R, corpus: &[CorpusEntry], cfg: SuiteConfig) -> Report {
    let loaded = load_corpus(ring, corpus);
    let mut instances: Vec<Instance> = loaded
        .par_iter()
        .map(|(name, x)| {
            let mut checks = vec![axiom_check(x)];
            if let Ok(x) = x {
                let pd = match pd_over_a(ring, &cok0(ring, x)) {
                    Ok(_) => Check::pass("pd_over_a_at_most_one"),
                    Err(e) => Check::fail("pd_over_a_at_most_one", e.to_string()),
                };
                checks.push(pd);
                checks.push(match periodic_resolution(ring, x, 4) {
                    Ok(res) => Check::expect("periodic_resolution_exact", res.exact_at == vec![1, 2], || {
                        format!("certified positions {:?}", res.exact_at)
                    }),
                    Err(e) => Check::fail("periodic_resolution_exact", e.to_string()),
                });
                checks.push(density_check(ring, &cok0(ring, x)));
            }
            Instance { id: name.clone(), checks }
        })
        .collect();
    let random: Vec<Instance> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let id = format!("module-{i}");
            let mut rng = instance_rng(cfg.seed, &id);
            let n = random_quotient_module(ring, &mut rng);
            Instance { id, checks: vec![density_check(ring, &n)] }
        })
        .collect();
    instances.extend(random);
    Report::new("theorem3", ctx, cfg.seed, instances, Vec::new())
}

/// `mf_from_module` succeeds and reproduces the module whenever `pd_A = 1` is certified.
fn density_check<R: Ring>(ring: &R, n: &ModulePresentation<R::El>) -> Check {
    match pd_over_a(ring, n) {
        Err(Error::NotFinitePd(e)) => Check::skip("density_pd_one", format!("projective dimension not one: {e}")),
        Err(e @ Error::SearchBoundExceeded(_)) => Check::skip("density_pd_one", e.to_string()),
        Err(e) => Check::fail("density_pd_one", e.to_string()),
        Ok(PdCertificate::Zero) => Check::pass("density_pd_one"),
        Ok(PdCertificate::One(_)) => match mf_from_module(ring, n) {
            Ok(x) => Check::expect("density_pd_one", base_invariants(ring, &cok0(ring, &x)) == base_invariants(ring, n), || {
                "Cok0 of the constructed factorization differs".into()
            }),
            Err(e) => Check::fail("density_pd_one", e.to_string()),
        },
    }
}

/// Relations of the kernel `L` of the projection `A^g -> N`, presented over `A`.
///
/// `L` is generated by the relation rows of `N` and `omega * e_i`; a base-ring
/// relation among the expanded generators `beta * rho_i` is an `A`-relation
/// with coefficients `sum_beta c_(i, beta) * beta`.
pub fn syzygy_presentation<R: FactorRing>(ring: &R, n: &ModulePresentation<R::El>) -> ModulePresentation<R::El> {
    let base = ring.base();
    let e = expanded_relations(ring, n);
    let ker = left_kernel(&smith(base, &e));
    let basis = ring.base_basis();
    let r = basis.len();
    let gens = e.rows() / r;
    let rows: Vec<Vec<R::El>> = (0..ker.rows())
        .map(|k| {
            (0..gens)
                .map(|i| {
                    (0..r).fold(ring.zero(), |acc, b| {
                        ring.add(&acc, &ring.mul(&ring.base_scalar(ker.get(k, i * r + b)), &basis[b]))
                    })
                })
                .collect()
        })
        .collect();
    ModulePresentation::new(ring, gens, Matrix::from_rows(gens, rows), false).expect("shape is consistent")
}

/// Gorenstein projectivity transfer over `Z` or `Z C_n`: every quotient
/// module is Gorenstein projective and its `A`-syzygy is a lattice.
pub fn verify_gp_transfer<R: Ring>(ctx: &AnyRing, ring: &R, cfg: SuiteConfig) -> Report {
    let kind = ring.kind();
    if !matches!(kind, RingKind::Integers | RingKind::GroupRingZCn { .. }) {
        let inst = Instance {
            id: "ring".into(),
            checks: vec![Check::fail("supported_ring", "gp-transfer runs over Z or Z C_n only")],
        };
        return Report::new("gp-transfer", ctx, cfg.seed, vec![inst], Vec::new());
    }
    let mut instances: Vec<Instance> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let id = format!("module-{i}");
            let mut rng = instance_rng(cfg.seed, &id);
            let n = random_quotient_module(ring, &mut rng);
            Instance { id, checks: gp_transfer_checks(ring, &n) }
        })
        .collect();
    // a module over A with torsion in its underlying group is not Gorenstein projective
    let torsion = ModulePresentation::new(ring, 1, ring.omega_identity(1), false).expect("1x1");
    instances.push(Instance {
        id: "negative-control".into(),
        checks: vec![Check::from_result(
            "torsion_module_rejected",
            is_gorenstein_projective(ring, &torsion).map(|gp| !gp),
            || "A/(omega) was reported Gorenstein projective over A".into(),
        )],
    });
    Report::new("gp-transfer", ctx, cfg.seed, instances, Vec::new())
}

fn gp_transfer_checks<R: Ring>(ring: &R, n: &ModulePresentation<R::El>) -> Vec<Check> {
    let mut checks = vec![Check::from_result("gorenstein_projective_over_quotient", is_gorenstein_projective(ring, n), || {
        "module over the quotient reported not Gorenstein projective".into()
    })];
    let l = syzygy_presentation(ring, n);
    checks.push(Check::from_result("syzygy_is_lattice", is_gorenstein_projective(ring, &l), || {
        let (t, _) = base_invariants(ring, &l);
        format!("underlying group of the syzygy has {} torsion factors", t.len())
    }));
    let (_, rank) = base_invariants(ring, &l);
    let full = n.generators * ring.base_rank();
    checks.push(Check::expect("syzygy_has_full_rank", rank == full, || format!("rank {rank}, expected {full}")));
    checks
}

/// All four hom-bijections on sampled `(M, X)` pairs: mutual inverses,
/// triangle identities and naturality.
pub fn verify_adjunctions<R: Ring>(ctx: &AnyRing, ring: &R, corpus: &[CorpusEntry], cfg: SuiteConfig) -> Report {
    let loaded = load_corpus(ring, corpus);
    let objs = valid(&loaded);
    let mut instances: Vec<Instance> = loaded
        .iter()
        .filter(|(_, x)| x.is_err())
        .map(|(n, x)| Instance { id: n.clone(), checks: vec![axiom_check(x)] })
        .collect();
    if objs.is_empty() {
        instances.push(Instance { id: "corpus".into(), checks: vec![Check::fail("nonempty_corpus", "no valid objects")] });
        return Report::new("adjunctions", ctx, cfg.seed, instances, Vec::new());
    }
    let sampled: Vec<Instance> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let id = format!("sample-{i}");
            let mut rng = instance_rng(cfg.seed, &id);
            let (xn, x) = &objs[rng.gen_range(0..objs.len())];
            let (_, other_x) = &objs[rng.gen_range(0..objs.len())];
            let checks = ALL_ADJUNCTIONS.iter().map(|&adj| adjunction_check(ring, adj, x, other_x, &mut rng)).collect();
            Instance { id: format!("{id} ({xn})"), checks }
        })
        .collect();
    instances.extend(sampled);
    instances.push(Instance { id: "units".into(), checks: unit_checks(ring, &objs[0].1) });
    Report::new("adjunctions", ctx, cfg.seed, instances, Vec::new())
}

fn adjunction_check<R: Ring>(
    ring: &R,
    adj: Adjunction,
    x: &ModuleFactorization<R::El>,
    other_x: &ModuleFactorization<R::El>,
    rng: &mut ChaCha8Rng,
) -> Check {
    let bound = sample_bound(&ring.kind());
    let m = rng.gen_range(1..=2);
    let other_m = rng.gen_range(1..=2);
    let (r, c) = adj.module_map_shape(m, x);
    let g = random_matrix(ring, r, c, rng);
    let f = adj.to_morphism(ring, x, &random_matrix(ring, r, c, rng));
    let (a, b) = if adj.projection_is_left() {
        (random_matrix(ring, m, other_m, rng), random_morphism(ring, other_x, x, rng, bound))
    } else {
        (random_matrix(ring, other_m, m, rng), random_morphism(ring, x, other_x, rng, bound))
    };
    let b = match b {
        Ok(b) => b,
        Err(e) => return Check::fail(adj.name(), e.to_string()),
    };
    let s = AdjunctionSample { m, x, g: &g, f: &f, other_m, a: &a, other_x, b: &b };
    match check_adjunction(ring, adj, &s) {
        Ok(c) => Check::expect(adj.name(), c.ok(), || c.failures.join("; ")),
        Err(e) => Check::fail(adj.name(), e.to_string()),
    }
}

fn unit_checks<R: Ring>(ring: &R, x: &ModuleFactorization<R::El>) -> Vec<Check> {
    let e = theta0(ring, 2);
    let unit = Adjunction::Theta0Pr0.to_module_map(&identity(ring, &e));
    let eta = Adjunction::Pr1Theta0.to_morphism(ring, x, &ring.mat_identity(x.n1));
    let expected = Morphism::new(x.d0.clone(), ring.mat_identity(x.n1));
    vec![
        Check::expect("unit_theta0_pr0_is_identity", unit == ring.mat_identity(2), || format_matrix(ring, &unit)),
        Check::from_result(
            "unit_pr1_theta0_is_morphism",
            is_morphism(ring, x, &theta0(ring, x.n1), &eta).map(|ok| ok && eta == expected),
            || format!("unit = ({}, {})", format_matrix(ring, &eta.f0), format_matrix(ring, &eta.f1)),
        ),
    ]
}

/// Over `Z C_n` with `omega = p`: `Cok0` of sampled lattice factorizations is
/// projective over `F_p C_n`. When `p | n` the trivial module is reported
/// non-projective and has no lattice factorization.
pub fn verify_group_ring<R: Ring>(ctx: &AnyRing, ring: &R, corpus: &[CorpusEntry], cfg: SuiteConfig) -> Report {
    let RingKind::GroupRingZCn { n } = ring.kind() else {
        let inst =
            Instance { id: "ring".into(), checks: vec![Check::fail("supported_ring", "group-ring runs over Z C_n only")] };
        return Report::new("group-ring", ctx, cfg.seed, vec![inst], Vec::new());
    };
    let p = match ctx {
        AnyRing::Group(g) => g.prime() as usize,
        _ => unreachable!("kind is GroupRingZCn"),
    };
    let semisimple = n % p != 0;
    let loaded = load_corpus(ring, corpus);
    let mut instances: Vec<Instance> = loaded
        .par_iter()
        .map(|(name, x)| {
            let mut checks = vec![axiom_check(x)];
            if let Ok(x) = x {
                checks.push(Check::from_result("cok0_projective", is_projective_over_quotient(ring, &cok0(ring, x)), || {
                    "Cok0 is not projective over F_p C_n".into()
                }));
            }
            Instance { id: name.clone(), checks }
        })
        .collect();
    instances.push(Instance {
        id: "theta1".into(),
        checks: vec![Check::from_result(
            "cok0_projective",
            is_projective_over_quotient(ring, &cok0(ring, &theta1(ring, 1))),
            || "Cok0(theta1) is not projective".into(),
        )],
    });
    let sampled: Vec<Instance> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| {
            let id = format!("module-{i}");
            let mut rng = instance_rng(cfg.seed, &id);
            let m = random_quotient_module(ring, &mut rng);
            Instance { id, checks: group_ring_checks(ring, &m, semisimple) }
        })
        .collect();
    instances.extend(sampled);
    if !semisimple {
        let mut rel = ring.mat_zero(1, 1);
        rel.set(0, 0, ring.sub(&ring.base_basis()[1 % n], &ring.one()));
        let trivial = ModulePresentation::new(ring, 1, rel, true).expect("1x1");
        instances.push(Instance { id: "trivial-module".into(), checks: counterexample_checks(ring, &trivial) });
    }
    let notes = vec![if semisimple {
        format!("p = {p} does not divide n = {n}: F_p C_n is semisimple")
    } else {
        format!("p = {p} divides n = {n}: F_p C_n is not semisimple")
    }];
    Report::new("group-ring", ctx, cfg.seed, instances, notes)
}

fn group_ring_checks<R: Ring>(ring: &R, m: &ModulePresentation<R::El>, semisimple: bool) -> Vec<Check> {
    let projective = is_projective_over_quotient(ring, m);
    match mf_from_module(ring, m) {
        Ok(x) => vec![
            Check::pass("lattice_factorization"),
            Check::from_result("cok0_projective", is_projective_over_quotient(ring, &cok0(ring, &x)), || {
                "Cok0 of a lattice factorization is not projective".into()
            }),
        ],
        Err(Error::NotFinitePd(e)) if !semisimple => vec![Check::from_result(
            "non_projective_has_no_lattice_factorization",
            projective.map(|p| !p),
            || format!("projective module without lattice factorization: {e}"),
        )],
        Err(e @ Error::SearchBoundExceeded(_)) => vec![Check::skip("lattice_factorization", e.to_string())],
        Err(e) => vec![Check::fail("lattice_factorization", e.to_string())],
    }
}

fn counterexample_checks<R: Ring>(ring: &R, trivial: &ModulePresentation<R::El>) -> Vec<Check> {
    vec![
        Check::from_result("trivial_module_not_projective", is_projective_over_quotient(ring, trivial).map(|p| !p), || {
            "the trivial module was reported projective".into()
        }),
        match free_cover_step(ring, trivial) {
            Err(Error::NotFinitePd(_)) => Check::pass("trivial_module_has_no_lattice_factorization"),
            Err(e) => Check::fail("trivial_module_has_no_lattice_factorization", e.to_string()),
            Ok(_) => Check::fail("trivial_module_has_no_lattice_factorization", "a free cover was produced"),
        },
    ]
}

/// Dispatches a suite by name over the ring of the corpus (or the given ring).
pub fn run_suite(suite: &str, ctx: &AnyRing, corpus: &[CorpusEntry], cfg: SuiteConfig) -> Result<Report, String> {
    Ok(crate::with_ring!(ctx, r => match suite {
        "theorem1" => verify_theorem1(ctx, r, corpus, cfg),
        "theorem3" => verify_theorem3(ctx, r, corpus, cfg),
        "gp-transfer" => verify_gp_transfer(ctx, r, cfg),
        "adjunctions" => verify_adjunctions(ctx, r, corpus, cfg),
        "group-ring" => verify_group_ring(ctx, r, corpus, cfg),
        other => return Err(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))),
    }))
}
