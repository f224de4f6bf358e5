//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.
//!
//! Oracles are brute-force enumerations written against plain `i64` and
//! bitmask polynomials, independent of the solver in `modfact-core`.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use modfact::context::{AnyRing, Ring};
use modfact::corpus::{builtin, builtin_names, default_for};
use modfact::doc::{read_json, FactorizationDocument, ModuleDocument, MorphismDocument};
use modfact::harness::{random_matrix, random_quotient_module, run_suite, syzygy_presentation, SuiteConfig};
use modfact::with_ring;
use modfact_core::cokfun::{
    cok0, cok0_on_morphism, lift_map, maps_agree, mf_from_module, periodic_resolution, random_quotient_map,
    stable_hom_quotient,
};
use modfact_core::factorization::{check_axioms, direct_sum, shift, theta0, theta1, unshift, ModuleFactorization, Morphism};
use modfact_core::gamma::{from_gamma, gamma_mul, matrix_units, to_gamma, GammaElement, GammaVector};
use modfact_core::homotopy::{is_p_null_homotopic, is_projective_object, stable_hom, stable_iso, SearchBound};
use modfact_core::modules::{base_invariants, expanded_relations, invariant_factors, is_projective_over_quotient};
use modfact_core::normal_form::smith;
use modfact_core::rings::{FpPoly, Integers, PolyFp};
use modfact_core::{EuclideanDomain, Error, FactorRing, MatOps, Matrix, RingOps, TwistOps};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;
/// Criterion 1 wall-clock limit.
const AXIOM_RUNTIME: Duration = Duration::from_secs(1);
/// Criterion 2 wall-clock limit and corpus size.
const HOMOTOPY_RUNTIME: Duration = Duration::from_secs(60);
const MIN_MORPHISMS: usize = 200;
/// Morphisms kept per ordered pair in criterion 2.
const PER_PAIR: usize = 12;
const DENSITY_SAMPLES: usize = 100;
const GAMMA_SAMPLES: usize = 500;
const ADJUNCTION_SAMPLES: usize = 50;
const GROUP_RING_SAMPLES: usize = 20;
const GP_SAMPLES: usize = 20;
/// Rings standing in for the four kinds in criteria 4 and 7.
const KINDS: [&str; 4] = ["integers:6", "poly:2:x^3", "skew:2:2", "group:3:2"];

type Outcome = Result<String, String>;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn load_all<R: Ring>(ring: &R, name: &str) -> Result<Vec<(String, ModuleFactorization<R::El>)>, String> {
    let (_, entries) = builtin(name).map_err(err)?;
    entries.iter().map(|e| Ok((e.name.clone(), e.doc.factorization(ring).map_err(|x| format!("{name}/{}: {x}", e.name))?))).collect()
}

// ---------------------------------------------------------------- criterion 1

fn axioms_for<R: Ring>(ring: &R, corpus: &str) -> Result<usize, String> {
    let mut checked = 0;
    let ok = |x: &ModuleFactorization<R::El>, what: &str| -> Result<(), String> {
        let rep = check_axioms(ring, x).map_err(err)?;
        ensure(rep.ok(), || format!("{corpus}: {what}: {}", rep.violations.join("; ")))
    };
    ensure(ring.sigma(&ring.omega()) == ring.omega(), || format!("{corpus}: sigma(omega) != omega"))?;
    for n in 1..=3 {
        ok(&theta0(ring, n), "theta0")?;
        ok(&theta1(ring, n), "theta1")?;
        checked += 2;
    }
    let objs = load_all(ring, corpus)?;
    for (name, x) in &objs {
        ok(x, name)?;
        let s = shift(ring, x);
        let u = unshift(ring, x);
        ok(&s, &format!("shift {name}"))?;
        ok(&u, &format!("unshift {name}"))?;
        ensure(shift(ring, &u) == *x, || format!("{corpus}/{name}: shift(unshift(X)) != X"))?;
        ensure(unshift(ring, &s) == *x, || format!("{corpus}/{name}: unshift(shift(X)) != X"))?;
        for (other, y) in &objs {
            ok(&direct_sum(ring, x, y), &format!("{name} + {other}"))?;
        }
        checked += 4 + objs.len();
    }
    Ok(checked)
}

fn criterion1() -> Outcome {
    let t = Instant::now();
    let mut checked = 0;
    for name in builtin_names() {
        let (ctx, _) = builtin(name).map_err(err)?;
        checked += with_ring!(&ctx, r => axioms_for(r, name))?;
    }
    for f in ["z6_23.json", "theta0_z5.json", "x1_x3.json", "x3_x1.json"] {
        let doc: FactorizationDocument = read_json(&fixtures().join(f)).map_err(err)?;
        let ctx = doc.context().map_err(err)?;
        with_ring!(&ctx, r => doc.factorization(r).map(|_| ()).map_err(|e| format!("{f}: {e}")))?;
        checked += 1;
    }
    let doc: MorphismDocument = read_json(&fixtures().join("x_x_times_x_endo.json")).map_err(err)?;
    let ctx = doc.context().map_err(err)?;
    with_ring!(&ctx, r => doc.load(r).map(|_| ()).map_err(err))?;
    let bad: FactorizationDocument = read_json(&fixtures().join("bad_axioms_z6.json")).map_err(err)?;
    let ctx = bad.context().map_err(err)?;
    ensure(with_ring!(&ctx, r => bad.factorization(r).is_err()), || "bad_axioms_z6.json was accepted".into())?;
    let dt = t.elapsed();
    ensure(dt < AXIOM_RUNTIME, || format!("took {dt:?}, limit {AXIOM_RUNTIME:?}"))?;
    Ok(format!("{checked} factorizations checked, negative control rejected, {dt:.2?}"))
}

// ---------------------------------------------------------------- criterion 2

/// Dense matrices over a small commutative ring, for the oracle.
trait Small: Copy {
    type E: Copy + Eq + std::hash::Hash;
    fn zero(self) -> Self::E;
    fn add(self, a: Self::E, b: Self::E) -> Self::E;
    fn mul(self, a: Self::E, b: Self::E) -> Self::E;
    /// Residue mod omega.
    fn reduce(self, a: Self::E) -> Self::E;
    /// `a / omega` when exact.
    fn div_omega(self, a: Self::E) -> Option<Self::E>;
    /// Representatives of `A / omega`.
    fn residues(self) -> Vec<Self::E>;
    /// The entry box morphisms are drawn from.
    fn entry_box(self) -> Vec<Self::E>;
}

/// `Z` with `omega = 6`.
#[derive(Clone, Copy)]
struct Z6;

impl Small for Z6 {
    type E = i64;
    fn zero(self) -> i64 {
        0
    }
    fn add(self, a: i64, b: i64) -> i64 {
        a + b
    }
    fn mul(self, a: i64, b: i64) -> i64 {
        a * b
    }
    fn reduce(self, a: i64) -> i64 {
        a.rem_euclid(6)
    }
    fn div_omega(self, a: i64) -> Option<i64> {
        (a % 6 == 0).then_some(a / 6)
    }
    fn residues(self) -> Vec<i64> {
        (0..6).collect()
    }
    fn entry_box(self) -> Vec<i64> {
        (-4..=4).collect()
    }
}

/// `F_2[x]` as bitmasks with `omega = x^2`.
#[derive(Clone, Copy)]
struct F2X2;

impl Small for F2X2 {
    type E = u64;
    fn zero(self) -> u64 {
        0
    }
    fn add(self, a: u64, b: u64) -> u64 {
        a ^ b
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        let mut r = 0;
        for i in 0..32 {
            if a >> i & 1 == 1 {
                r ^= b << i;
            }
        }
        r
    }
    fn reduce(self, a: u64) -> u64 {
        a & 0b11
    }
    fn div_omega(self, a: u64) -> Option<u64> {
        (a & 0b11 == 0).then_some(a >> 2)
    }
    fn residues(self) -> Vec<u64> {
        (0..4).collect()
    }
    fn entry_box(self) -> Vec<u64> {
        (0..16).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct M<E> {
    r: usize,
    c: usize,
    v: Vec<E>,
}

fn mmul<S: Small>(s: S, a: &M<S::E>, b: &M<S::E>) -> M<S::E> {
    let mut v = vec![s.zero(); a.r * b.c];
    for i in 0..a.r {
        for k in 0..a.c {
            for j in 0..b.c {
                v[i * b.c + j] = s.add(v[i * b.c + j], s.mul(a.v[i * a.c + k], b.v[k * b.c + j]));
            }
        }
    }
    M { r: a.r, c: b.c, v }
}

fn madd<S: Small>(s: S, a: &M<S::E>, b: &M<S::E>) -> M<S::E> {
    M { r: a.r, c: a.c, v: a.v.iter().zip(&b.v).map(|(x, y)| s.add(*x, *y)).collect() }
}

/// `(D0, D1)` of one oracle object.
type Obj<E> = (M<E>, M<E>);

/// Every tuple over `choices` of length `len`.
fn tuples<E: Copy>(choices: &[E], len: usize) -> Vec<Vec<E>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.iter().flat_map(|t| choices.iter().map(move |c| [t.as_slice(), &[*c]].concat())).collect();
    }
    out
}

/// Reductions mod omega of `Phi(H0, H1)` over all residue homotopies
/// (`sigma` is the identity for both oracle rings).
fn null_residues<S: Small>(s: S, x: &Obj<S::E>, y: &Obj<S::E>) -> HashSet<Vec<S::E>> {
    let (n0x, n1x, n0y, n1y) = (x.0.r, x.0.c, y.0.r, y.0.c);
    let res = s.residues();
    let mut out = HashSet::new();
    for t in tuples(&res, n0x * n1y + n1x * n0y) {
        let h0 = M { r: n0x, c: n1y, v: t[..n0x * n1y].to_vec() };
        let h1 = M { r: n1x, c: n0y, v: t[n0x * n1y..].to_vec() };
        let f0 = madd(s, &mmul(s, &x.0, &h1), &mmul(s, &h0, &y.1));
        let f1 = madd(s, &mmul(s, &h1, &y.0), &mmul(s, &x.1, &h0));
        out.insert(f0.v.iter().chain(&f1.v).map(|e| s.reduce(*e)).collect());
    }
    out
}

/// Morphisms `X -> Y` with `F1` in the entry box: `F0 = D0X F1 D1Y / omega`
/// when exact, kept when square 2 holds.
fn morphisms<S: Small>(s: S, x: &Obj<S::E>, y: &Obj<S::E>) -> Vec<(M<S::E>, M<S::E>)> {
    let (n1x, n1y) = (x.0.c, y.0.c);
    let mut out = Vec::new();
    for t in tuples(&s.entry_box(), n1x * n1y) {
        let f1 = M { r: n1x, c: n1y, v: t };
        let p = mmul(s, &mmul(s, &x.0, &f1), &y.1);
        let Some(v) = p.v.iter().map(|e| s.div_omega(*e)).collect::<Option<Vec<_>>>() else { continue };
        let f0 = M { r: p.r, c: p.c, v };
        if mmul(s, &x.1, &f0) == mmul(s, &f1, &y.1) {
            out.push((f0, f1));
        }
    }
    out
}

/// Runs the comparison over all ordered pairs; returns (morphisms, null-homotopic count).
fn compare<S: Small, R: Ring>(
    s: S,
    ring: &R,
    objs: &[(ModuleFactorization<R::El>, Obj<S::E>)],
    to_core: impl Fn(S::E) -> R::El,
) -> Result<(usize, usize), String> {
    let conv = |m: &M<S::E>| Matrix::from_fn(m.r, m.c, |i, j| to_core(m.v[i * m.c + j]));
    let (mut total, mut null) = (0, 0);
    for (a, (cx, ox)) in objs.iter().enumerate() {
        for (b, (cy, oy)) in objs.iter().enumerate() {
            let residues = null_residues(s, ox, oy);
            let all = morphisms(s, ox, oy);
            let step = (all.len() / PER_PAIR).max(1);
            for (f0, f1) in all.iter().step_by(step).take(PER_PAIR) {
                let key: Vec<S::E> = f0.v.iter().chain(&f1.v).map(|e| s.reduce(*e)).collect();
                let oracle = residues.contains(&key);
                let f = Morphism::new(conv(f0), conv(f1));
                let solver = is_p_null_homotopic(ring, cx, cy, &f).map_err(err)?.is_some();
                ensure(solver == oracle, || {
                    format!("objects {a}, {b}: solver says {solver}, enumeration says {oracle} for F1 = {:?}", f.f1)
                })?;
                total += 1;
                null += oracle as usize;
            }
        }
    }
    Ok((total, null))
}

fn z6_oracle_corpus(ring: &Integers) -> Vec<(ModuleFactorization<BigInt>, Obj<i64>)> {
    let objects: [(usize, Vec<i64>, Vec<i64>); 6] = [
        (1, vec![2], vec![3]),
        (1, vec![3], vec![2]),
        (1, vec![-2], vec![-3]),
        (2, vec![2, 0, 0, 3], vec![3, 0, 0, 2]),
        (2, vec![2, 1, 0, 3], vec![3, -1, 0, 2]),
        (2, vec![3, 1, 0, 2], vec![2, -1, 0, 3]),
    ];
    objects
        .into_iter()
        .map(|(n, d0, d1)| {
            let m = |v: &[i64]| Matrix::from_fn(n, n, |i, j| BigInt::from(v[i * n + j]));
            let x = ModuleFactorization::new(ring, m(&d0), m(&d1)).expect("oracle corpus satisfies the axioms");
            (x, (M { r: n, c: n, v: d0 }, M { r: n, c: n, v: d1 }))
        })
        .collect()
}

fn to_mask(p: &FpPoly) -> u64 {
    p.0.iter().enumerate().fold(0, |acc, (i, c)| acc | ((*c as u64 & 1) << i))
}

fn criterion2() -> Outcome {
    let t = Instant::now();
    let z = Integers::new(BigInt::from(6)).map_err(err)?;
    let zobjs = z6_oracle_corpus(&z);
    let (zn, znull) = compare(Z6, &z, &zobjs, BigInt::from)?;

    let AnyRing::Poly(f2) = builtin("f2x_x2").map_err(err)?.0 else { return Err("f2x_x2 is not a polynomial corpus".into()) };
    let fobjs: Vec<(ModuleFactorization<FpPoly>, Obj<u64>)> = load_all(&f2, "f2x_x2")?
        .into_iter()
        .map(|(_, x)| {
            let m = |a: &Matrix<FpPoly>| M { r: a.rows(), c: a.cols(), v: a.data().iter().map(to_mask).collect() };
            let o = (m(&x.d0), m(&x.d1));
            (x, o)
        })
        .collect();
    ensure(fobjs.iter().all(|(_, o)| o.0.v.iter().chain(&o.1.v).all(|e| *e < 16)), || "f2x_x2 entries exceed degree 3".into())?;
    let field = f2.field().clone();
    let (fnn, fnull) = compare(F2X2, &f2, &fobjs, |m| field.from_coeffs(&(0..6).map(|i| (m >> i & 1) as i64).collect::<Vec<_>>()))?;

    let dt = t.elapsed();
    ensure(zn >= MIN_MORPHISMS && fnn >= MIN_MORPHISMS, || format!("corpus too small: {zn} and {fnn} morphisms"))?;
    ensure(fnull > 0 && fnull < fnn, || "F_2[x] corpus does not mix null-homotopic and essential morphisms".into())?;
    ensure(dt < HOMOTOPY_RUNTIME, || format!("took {dt:?}, limit {HOMOTOPY_RUNTIME:?}"))?;
    Ok(format!(
        "(Z,6): {zn} morphisms ({znull} null-homotopic); (F2[x],x^2): {fnn} morphisms ({fnull} null-homotopic); {dt:.2?}"
    ))
}

// ---------------------------------------------------------------- criterion 3

/// `dim_F2` of stable `End(F_2[x]/x^i)` over `F_2[x]/x^n`, by enumeration:
/// all endomorphisms `1 -> c`, modulo those through `Abar`, `1 -> a -> a mod x^i`
/// with `x^i a = 0 mod x^n`.
fn stable_end_dim(i: u32, n: u32) -> u32 {
    stable_hom_dim(i, i, n)
}

/// `dim_F2` of stable `Hom(F_2[x]/x^i, F_2[x]/x^j)` over `F_2[x]/x^n`.
fn stable_hom_dim(i: u32, j: u32, n: u32) -> u32 {
    let mask = |k: u32| (1u64 << k) - 1;
    let hom = (0..1u64 << j).filter(|c| (c << i) & mask(j) == 0).count();
    let through: HashSet<u64> = (0..1u64 << n).filter(|a| (a << i) & mask(n) == 0).map(|a| a & mask(j)).collect();
    (hom / through.len()).trailing_zeros()
}

fn criterion3() -> Outcome {
    let mut lines = Vec::new();
    for n in 2..=4u32 {
        let ring = PolyFp::new(2, FpPoly::monomial(1, n as usize)).map_err(err)?;
        let obj = |i: u32| {
            let m = |k: u32| Matrix::from_rows(1, vec![vec![FpPoly::monomial(1, k as usize)]]);
            ModuleFactorization::new(&ring, m(i), m(n - i)).map_err(err)
        };
        let xs: Vec<_> = (0..=n).map(obj).collect::<Result<_, _>>()?;
        for (i, x) in xs.iter().enumerate() {
            let f = invariant_factors(&ring, &cok0(&ring, x)).map_err(err)?;
            let expected: Vec<FpPoly> = if i == 0 { vec![] } else { vec![FpPoly::monomial(1, i)] };
            ensure(f.free_rank == 0 && f.torsion_factors == expected, || format!("n={n}, i={i}: cok0 factors {f:?}"))?;
            let projective = is_projective_object(&ring, x).map_err(err)?;
            ensure(projective == (i == 0 || i == n as usize), || format!("n={n}, i={i}: projective = {projective}"))?;
            let s = stable_hom(&ring, x, x).map_err(err)?;
            let dim: usize = s.torsion.iter().map(|t| t.degree().unwrap_or(0)).sum();
            let oracle = stable_end_dim(i as u32, n) as usize;
            ensure(s.free_rank == 0 && dim == oracle, || {
                format!("n={n}, i={i}: stable End dim {dim} (free rank {}), enumeration {oracle}", s.free_rank)
            })?;
        }
        let bound = SearchBound::default_for(&ring.kind());
        for i in 1..n as usize {
            for j in 1..n as usize {
                // Distinct i give modules of distinct F_2-dimension, all
                // indecomposable and non-projective, so only i = j are isomorphic.
                let iso = stable_iso(&ring, &xs[i], &xs[j], bound).map_err(err)?;
                ensure(iso == (i == j), || format!("n={n}: stable_iso(X_{i}, X_{j}) = {iso}"))?;
            }
        }
        lines.push(format!("n={n}: {} classes separated", n - 1));
    }
    let x2 = PolyFp::new(2, FpPoly::monomial(1, 2)).map_err(err)?;
    let xx = ModuleFactorization::new(&x2, Matrix::from_rows(1, vec![vec![x2.field().x()]]), Matrix::from_rows(1, vec![vec![x2.field().x()]]))
        .map_err(err)?;
    let s = stable_hom(&x2, &xx, &xx).map_err(err)?;
    let dim: usize = s.torsion.iter().map(|t| t.degree().unwrap_or(0)).sum();
    ensure(dim == 1 && s.free_rank == 0, || format!("stable End([x],[x]) over x^2 has dimension {dim}"))?;
    Ok(format!("{}; stable End([x],[x]) over x^2 has dimension 1", lines.join(", ")))
}

// ---------------------------------------------------------------- criterion 4

fn density_for<R: Ring>(ring: &R, ctx: &AnyRing, salt: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ salt);
    let bound = modfact::harness::sample_bound(&ring.kind());
    for k in 0..DENSITY_SAMPLES {
        let n = random_quotient_module(ring, &mut rng);
        let x = mf_from_module(ring, &n).map_err(|e| format!("module {k}: {e}"))?;
        ensure(check_axioms(ring, &x).map_err(err)?.ok(), || format!("module {k}: density output violates the axioms"))?;
        let lhs = invariant_factors(ring, &cok0(ring, &x)).map_err(err)?;
        let rhs = invariant_factors(ring, &n).map_err(err)?;
        ensure(lhs == rhs, || format!("module {k}: cok0 factors {lhs:?}, module factors {rhs:?}"))?;
    }
    let objs: Vec<ModuleFactorization<R::El>> =
        default_for(ctx).iter().map(|e| e.doc.factorization(ring).map_err(err)).collect::<Result<_, _>>()?;
    for k in 0..DENSITY_SAMPLES {
        let x = &objs[rng.gen_range(0..objs.len())];
        let y = &objs[rng.gen_range(0..objs.len())];
        let (mx, my) = (cok0(ring, x), cok0(ring, y));
        let g = random_quotient_map(ring, &mx, &my, &mut rng, bound).map_err(err)?;
        let f = lift_map(ring, x, y, &g).map_err(|e| format!("map {k}: {e}"))?;
        let back = cok0_on_morphism(ring, x, y, &f).map_err(err)?;
        ensure(back.g == g, || format!("map {k}: cok0(lift(g)) != g"))?;
        ensure(maps_agree(ring, &my, &back.g, &g).map_err(err)?, || format!("map {k}: maps disagree on the cokernel"))?;

        // a matrix inducing the zero map: rows in the image of D0Y plus omega multiples
        let k0 = random_matrix(ring, x.n1, y.n0, &mut rng);
        let w = random_matrix(ring, x.n1, y.n1, &mut rng);
        let zero = ring.mat_add(&ring.mat_mul(&k0, &y.d0), &ring.mat_mul(&ring.omega_identity(x.n1), &w));
        let f0 = lift_map(ring, x, y, &zero).map_err(|e| format!("zero map {k}: {e}"))?;
        ensure(is_p_null_homotopic(ring, x, y, &f0).map_err(err)?.is_some(), || {
            format!("zero map {k}: lift is not p-null-homotopic")
        })?;
    }
    Ok(DENSITY_SAMPLES)
}

fn criterion4() -> Outcome {
    let mut parts = Vec::new();
    for (salt, spec) in KINDS.iter().enumerate() {
        let ctx = AnyRing::parse_spec(spec)?;
        let n = with_ring!(&ctx, r => density_for(r, &ctx, salt as u64)).map_err(|e| format!("{spec}: {e}"))?;
        parts.push(format!("{spec}: {n} modules, {n} maps, {n} zero lifts"));
    }
    Ok(parts.join("; "))
}

// ---------------------------------------------------------------- criterion 5

fn criterion5() -> Outcome {
    let mut total = 0;
    let mut kinds = HashSet::new();
    for name in builtin_names() {
        let (ctx, _) = builtin(name).map_err(err)?;
        kinds.insert(format!("{:?}", std::mem::discriminant(&ctx.kind())));
        let n = with_ring!(&ctx, r => {
            let objs = load_all(r, name)?;
            for (obj, x) in &objs {
                let res = periodic_resolution(r, x, 4).map_err(|e| format!("{name}/{obj}: {e}"))?;
                ensure(res.exact_at == vec![1, 2], || format!("{name}/{obj}: exact at {:?}", res.exact_at))?;
            }
            Ok::<usize, String>(objs.len())
        })?;
        total += n;
    }
    ensure(kinds.len() == 4, || format!("only {} ring kinds in the corpus", kinds.len()))?;
    Ok(format!("{total} factorizations over 4 ring kinds certified exact at terms 1 and 2"))
}

// ---------------------------------------------------------------- criterion 6

fn gamma_for<R: Ring>(ring: &R, name: &str, samples: usize, salt: u64) -> Result<usize, String> {
    let objs = load_all(ring, name)?;
    for (obj, x) in &objs {
        ensure(from_gamma(ring, &to_gamma(x)) == *x, || format!("{name}/{obj}: from_gamma(to_gamma(X)) != X"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ salt);
    let b = modfact::harness::sample_bound(&ring.kind());
    let units = matrix_units(ring);
    for k in 0..samples {
        let (obj, x) = &objs[k % objs.len()];
        let view = to_gamma(x);
        let e = &units[rng.gen_range(0..units.len())];
        let mut el = || ring.random_element(&mut rng, b);
        let g = GammaElement { a11: el(), a12: el(), a21: el(), a22: el() };
        let v = GammaVector { top: random_matrix(ring, 1, x.n1, &mut rng), bottom: random_matrix(ring, 1, x.n0, &mut rng) };
        ensure(view.act(ring, &gamma_mul(ring, e, &g), &v) == view.act(ring, e, &view.act(ring, &g, &v)), || {
            format!("{name}/{obj}: (e g) v != e (g v) at sample {k}")
        })?;
        ensure(view.act(ring, &gamma_mul(ring, &g, e), &v) == view.act(ring, &g, &view.act(ring, e, &v)), || {
            format!("{name}/{obj}: (g e) v != g (e v) at sample {k}")
        })?;
    }
    Ok(objs.len())
}

fn criterion6() -> Outcome {
    let names = builtin_names();
    let per = GAMMA_SAMPLES.div_ceil(names.len());
    let mut objects = 0;
    for (salt, name) in names.iter().enumerate() {
        let (ctx, _) = builtin(name).map_err(err)?;
        objects += with_ring!(&ctx, r => gamma_for(r, name, per, salt as u64))?;
    }
    Ok(format!("{objects} round trips exact; {} (matrix-unit, element) pairs associative", per * names.len()))
}

// ---------------------------------------------------------------- criterion 7

fn criterion7() -> Outcome {
    let mut parts = Vec::new();
    for spec in KINDS {
        let ctx = AnyRing::parse_spec(spec)?;
        let cfg = SuiteConfig { seed: SEED, samples: ADJUNCTION_SAMPLES };
        let report = run_suite("adjunctions", &ctx, &default_for(&ctx), cfg)?;
        let samples = report.instances.iter().filter(|i| i.id.starts_with("sample-")).count();
        ensure(samples == ADJUNCTION_SAMPLES, || format!("{spec}: {samples} samples"))?;
        ensure(report.summary.failed == 0 && report.summary.skipped == 0, || {
            format!("{spec}: {:?}", report.failures().first())
        })?;
        parts.push(format!("{spec}: {samples} pairs x 4 adjunctions"));
    }
    Ok(parts.join("; "))
}

// ---------------------------------------------------------------- criterion 8

fn criterion8() -> Outcome {
    let mut parts = Vec::new();
    for spec in ["group:3:2", "group:2:3"] {
        let ctx = AnyRing::parse_spec(spec)?;
        let cfg = SuiteConfig { seed: SEED, samples: GROUP_RING_SAMPLES };
        let report = run_suite("group-ring", &ctx, &default_for(&ctx), cfg)?;
        ensure(report.summary.failed == 0 && report.summary.skipped == 0, || {
            format!("{spec}: {:?}", report.failures().first())
        })?;
        let projective = report
            .instances
            .iter()
            .flat_map(|i| &i.checks)
            .filter(|c| c.name == "cok0_projective")
            .count();
        ensure(projective >= GROUP_RING_SAMPLES, || format!("{spec}: only {projective} lattice factorizations"))?;
        parts.push(format!("(n,p)={spec}: {projective} cok0 projective"));
    }

    let doc: ModuleDocument = read_json(&fixtures().join("trivial_f2c2.json")).map_err(err)?;
    let AnyRing::Group(ring) = doc.context().map_err(err)? else { return Err("trivial_f2c2.json is not over Z C_n".into()) };
    ensure(ring.order() == 2 && ring.prime() == 2, || "trivial_f2c2.json is not over (Z C_2, 2)".into())?;
    let m = doc.module(&ring).map_err(err)?;
    // Oracle: F_2 C_2 is local, so projectives are free of even F_2-dimension.
    let (torsion, free) = base_invariants(&ring, &m);
    let mut dim = 0;
    for t in &torsion {
        let mut t = t.clone();
        while t != BigInt::from(1) && &t % 2 == BigInt::from(0) {
            t /= 2;
            dim += 1;
        }
        ensure(t == BigInt::from(1), || "torsion factor is not a power of 2".into())?;
    }
    ensure(free == 0 && dim % 2 == 1, || format!("trivial module has F_2-dimension {dim}, free rank {free}"))?;
    ensure(!is_projective_over_quotient(&ring, &m).map_err(err)?, || "trivial module reported projective".into())?;
    ensure(matches!(mf_from_module(&ring, &m), Err(Error::NotFinitePd(_))), || {
        "trivial module received a lattice factorization".into()
    })?;
    parts.push(format!("(2,2) trivial module (dimension {dim}) reported non-projective"));
    Ok(parts.join("; "))
}

// ---------------------------------------------------------------- criterion 9

fn criterion9() -> Outcome {
    let mut parts = Vec::new();
    for (salt, spec) in ["group:2:3", "group:3:2"].into_iter().enumerate() {
        let AnyRing::Group(ring) = AnyRing::parse_spec(spec)? else { unreachable!() };
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (100 + salt as u64));
        for k in 0..GP_SAMPLES {
            let n = random_quotient_module(&ring, &mut rng);
            let l = syzygy_presentation(&ring, &n);
            let e = expanded_relations(&ring, &l);
            let s = smith(ring.base(), &e);
            let units = s.diag.iter().take(s.rank).all(|d| ring.base().is_unit(d));
            ensure(units, || format!("{spec} module {k}: syzygy has torsion {:?}", &s.diag[..s.rank]))?;
            let rank = e.cols() - s.rank;
            let full = n.generators * ring.base_rank();
            ensure(rank == full, || format!("{spec} module {k}: syzygy rank {rank}, expected {full}"))?;
        }
        let ctx = AnyRing::Group(ring);
        let report = run_suite("gp-transfer", &ctx, &[], SuiteConfig { seed: SEED, samples: GP_SAMPLES })?;
        ensure(report.summary.failed == 0 && report.summary.skipped == 0, || {
            format!("{spec}: {:?}", report.failures().first())
        })?;
        parts.push(format!("(n,p)={spec}: {GP_SAMPLES} syzygies torsion-free of full rank"));
    }
    Ok(parts.join("; "))
}

// ---------------------------------------------------------------- criterion 10

fn stable_pairs<R: Ring>(
    ring: &R,
    name: &str,
    oracle: impl Fn(&ModuleFactorization<R::El>, &ModuleFactorization<R::El>) -> usize,
    size: impl Fn(&[<R::Base as RingOps>::El]) -> usize,
) -> Result<usize, String> {
    let objs = load_all(ring, name)?;
    let mut pairs = 0;
    for (a, x) in &objs {
        for (b, y) in &objs {
            let s = stable_hom(ring, x, y).map_err(err)?;
            let q = stable_hom_quotient(ring, &cok0(ring, x), &cok0(ring, y)).map_err(err)?;
            ensure(s.torsion == q.torsion && s.free_rank == q.free_rank, || {
                format!("{name} ({a}, {b}): factorization side {:?}/{}, module side {:?}/{}", s.torsion, s.free_rank, q.torsion, q.free_rank)
            })?;
            // stable Hom is killed by omega, hence torsion over the base
            ensure(s.free_rank == 0, || format!("{name} ({a}, {b}): free rank {}", s.free_rank))?;
            let (got, want) = (size(&s.torsion), oracle(x, y));
            ensure(got == want, || format!("{name} ({a}, {b}): size {got}, enumeration {want}"))?;
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Whether every element of `Z/w` generates the same ideal as an idempotent,
/// i.e. `Z/w` is semisimple and all its modules are projective.
fn z_mod_semisimple(w: i64) -> bool {
    (0..w).all(|a| (0..w).any(|e| e * e % w == e && (0..w).any(|s| a * s % w == e) && (0..w).any(|s| e * s % w == a)))
}

fn criterion10() -> Outcome {
    let AnyRing::Integers(z) = builtin("z6").map_err(err)?.0 else { return Err("z6 is not over Z".into()) };
    let semisimple = z_mod_semisimple(6);
    let zp = stable_pairs(&z, "z6", |_, _| if semisimple { 0 } else { usize::MAX }, |t| t.len())?;

    let AnyRing::Poly(f2) = builtin("f2x_x3").map_err(err)?.0 else { return Err("f2x_x3 is not polynomial".into()) };
    let exponent = |x: &ModuleFactorization<FpPoly>| x.d0.get(0, 0).degree().unwrap_or(0) as u32;
    let fp = stable_pairs(
        &f2,
        "f2x_x3",
        |x, y| stable_hom_dim(exponent(x), exponent(y), 3) as usize,
        |t| t.iter().map(|p| p.degree().unwrap_or(0)).sum(),
    )?;
    Ok(format!("(Z,6): {zp} pairs, all stable Hom zero; (F2[x],x^3): {fp} pairs match enumerated dimensions"))
}

// ----------------------------------------------------------------------------

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("axiom suite", criterion1),
        ("homotopy solver vs enumeration", criterion2),
        ("desk classification over F2[x]/x^n", criterion3),
        ("density and fullness round trips", criterion4),
        ("periodic resolutions", criterion5),
        ("Gamma bridge", criterion6),
        ("adjunction identities", criterion7),
        ("group-ring example", criterion8),
        ("GP transfer", criterion9),
        ("stable Hom consistency", criterion10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let dt = t.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{dt:.2?}]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{dt:.2?}]", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
