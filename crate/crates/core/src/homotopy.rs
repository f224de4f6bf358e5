//! p-null-homotopic morphisms, stable Hom groups, stable isomorphism and syzygies.
//!
//! A homotopy `(H0, H1)` for `f: X -> Y` stores `h0: X0 -> ^{sigma^-1}(Y1)` as
//! the rule `v -> sigma^-1(v) * H0` and `h1: X1 -> Y0` as `v -> v * H1`:
//!
//! ```text
//! F0 = D0X * H1 + sigma(H0) * D1Y
//! F1 = H1 * D0Y + sigma^-1(D1X) * H0
//! ```
//!
//! Components are free, so both `h0` and `h1` trivially factor through
//! projective modules: any map between free modules factors through its
//! source. The side condition of the definition therefore never needs checking.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::RngCore;

use crate::factorization::{
    check_shapes, compose, direct_sum, identity, is_morphism, sub_morphisms, theta0, theta1, unshift, ModuleFactorization,
    Morphism,
};
use crate::linsys::{BaseEl, LinearSystem, Term};
use crate::matrix::{MatOps, Matrix, TwistOps};
use crate::normal_form::{quotient, row_basis};
use crate::ring::{EuclideanDomain, FactorRing, RingKind, RingOps, Twist};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy<E> {
    pub h0: Matrix<E>,
    pub h1: Matrix<E>,
}

/// The morphism `(F0, F1)` that a pair `(H0, H1)` is a homotopy for.
pub fn homotopy_image<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    h: &Homotopy<R::El>,
) -> Morphism<R::El> {
    let f0 = ring.mat_add(&ring.mat_mul(&x.d0, &h.h1), &ring.mat_mul(&ring.mat_sigma(&h.h0), &y.d1));
    let f1 = ring.mat_add(&ring.mat_mul(&h.h1, &y.d0), &ring.mat_mul(&ring.mat_sigma_inv(&x.d1), &h.h0));
    Morphism { f0, f1 }
}

pub fn is_p_null_homotopic<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    f: &Morphism<R::El>,
) -> crate::Result<Option<Homotopy<R::El>>> {
    check_shapes(x, y, f)?;
    let mut sys = LinearSystem::new(ring);
    let h0 = sys.add_unknown(x.n0, y.n1);
    let h1 = sys.add_unknown(x.n1, y.n0);
    sys.add_equation(
        vec![Term::left(h1, x.d0.clone()), Term::new(h0, None, Twist::Sigma, Some(y.d1.clone()))],
        f.f0.clone(),
    )?;
    sys.add_equation(
        vec![Term::right(h1, y.d0.clone()), Term::left(h0, ring.mat_sigma_inv(&x.d1))],
        f.f1.clone(),
    )?;
    let Some(mut sol) = sys.solve()? else { return Ok(None) };
    let h = Homotopy { h1: sol.pop().expect("two unknowns"), h0: sol.pop().expect("two unknowns") };
    if homotopy_image(ring, x, y, &h) != *f {
        return Err(crate::Error::InternalInconsistency("homotopy failed re-verification".into()));
    }
    Ok(Some(h))
}

/// Whether `f` and `g` agree in the stable category.
pub fn stably_equal<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    f: &Morphism<R::El>,
    g: &Morphism<R::El>,
) -> crate::Result<bool> {
    Ok(is_p_null_homotopic(ring, x, y, &sub_morphisms(ring, f, g))?.is_some())
}

/// A factorization of a null-homotopic `f` as `X -> P -> Y` through the
/// projective object `P = theta0(n0Y) + theta1(n1Y)`.
#[derive(Clone, Debug)]
pub struct ProjectiveFactorization<E> {
    pub middle: ModuleFactorization<E>,
    pub into: Morphism<E>,
    pub out: Morphism<E>,
}

/// Builds the factorization through `theta0 + theta1` from a homotopy and
/// re-verifies both maps and the composite.
pub fn factor_through_projective<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    f: &Morphism<R::El>,
    h: &Homotopy<R::El>,
) -> crate::Result<ProjectiveFactorization<R::El>> {
    let middle = direct_sum(ring, &theta0(ring, y.n0), &theta1(ring, y.n1));
    let into = Morphism {
        f0: ring.mat_mul(&x.d0, &h.h1).hstack(&ring.mat_sigma(&h.h0)),
        f1: h.h1.hstack(&ring.mat_mul(&ring.mat_sigma_inv(&x.d1), &h.h0)),
    };
    let out = Morphism {
        f0: ring.mat_identity(y.n0).vstack(&y.d1),
        f1: y.d0.vstack(&ring.mat_identity(y.n1)),
    };
    if !is_morphism(ring, x, &middle, &into)? || !is_morphism(ring, &middle, y, &out)? {
        return Err(crate::Error::InternalInconsistency("factorization maps are not morphisms".into()));
    }
    if compose(ring, &into, &out) != *f {
        return Err(crate::Error::InternalInconsistency("factorization does not compose to f".into()));
    }
    Ok(ProjectiveFactorization { middle, into, out })
}

/// Projective objects are the summands of `theta0(P) + theta1(Q)`, i.e. the
/// objects whose identity is null-homotopic.
pub fn is_projective_object<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>) -> crate::Result<bool> {
    Ok(is_p_null_homotopic(ring, x, x, &identity(ring, x))?.is_some())
}

/// The system whose homogeneous solutions are the morphisms `X -> Y`
/// (unknowns `F0`, `F1`).
fn morphism_system<'r, R: FactorRing>(
    ring: &'r R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
) -> crate::Result<LinearSystem<'r, R>> {
    let mut sys = LinearSystem::new(ring);
    let f0 = sys.add_unknown(x.n0, y.n0);
    let f1 = sys.add_unknown(x.n1, y.n1);
    sys.add_equation(
        vec![Term::left(f1, x.d0.clone()), Term::right(f0, ring.mat_neg(&y.d0))],
        ring.mat_zero(x.n0, y.n1),
    )?;
    sys.add_equation(
        vec![Term::left(f0, x.d1.clone()), Term::new(f1, None, Twist::Sigma, Some(ring.mat_neg(&y.d1)))],
        ring.mat_zero(x.n1, y.n0),
    )?;
    Ok(sys)
}

/// Base-lattice basis of `Hom(X, Y)` in the coordinates of [`morphism_system`].
fn morphism_lattice<'r, R: FactorRing>(
    ring: &'r R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
) -> crate::Result<(LinearSystem<'r, R>, Vec<Vec<BaseEl<R>>>)> {
    let sys = morphism_system(ring, x, y)?;
    let sol = sys
        .solve_affine()?
        .ok_or_else(|| crate::Error::InternalInconsistency("homogeneous system is unsolvable".into()))?;
    Ok((sys, sol.kernel))
}

fn unit_matrices<R: FactorRing>(ring: &R, rows: usize, cols: usize) -> Vec<Matrix<R::El>> {
    let basis = ring.base_basis();
    let mut out = Vec::with_capacity(rows * cols * basis.len());
    for i in 0..rows {
        for j in 0..cols {
            for b in &basis {
                let mut m = ring.mat_zero(rows, cols);
                m.set(i, j, b.clone());
                out.push(m);
            }
        }
    }
    out
}

/// `Hom(X, Y)` modulo null-homotopic morphisms, as a module over the central base.
#[derive(Clone, Debug)]
pub struct StableHomDescription<E, B> {
    /// Non-unit torsion invariant factors over the base, ascending in divisibility.
    pub torsion: Vec<B>,
    pub free_rank: usize,
    /// One morphism per torsion factor, then one per free generator.
    pub representatives: Vec<Morphism<E>>,
}

impl<E, B> StableHomDescription<E, B> {
    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

pub fn stable_hom<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
) -> crate::Result<StableHomDescription<R::El, BaseEl<R>>> {
    let base = ring.base();
    let (sys, kernel) = morphism_lattice(ring, x, y)?;
    let nvars = sys.encode(&[ring.mat_zero(x.n0, y.n0), ring.mat_zero(x.n1, y.n1)]).len();
    let m1 = Matrix::from_rows(nvars, kernel);
    let mut null_rows = Vec::new();
    for h0 in unit_matrices(ring, x.n0, y.n1) {
        let h = Homotopy { h0, h1: ring.mat_zero(x.n1, y.n0) };
        let f = homotopy_image(ring, x, y, &h);
        null_rows.push(sys.encode(&[f.f0, f.f1]));
    }
    for h1 in unit_matrices(ring, x.n1, y.n0) {
        let h = Homotopy { h0: ring.mat_zero(x.n0, y.n1), h1 };
        let f = homotopy_image(ring, x, y, &h);
        null_rows.push(sys.encode(&[f.f0, f.f1]));
    }
    let m2 = Matrix::from_rows(nvars, null_rows);
    let q = quotient(base, &row_basis(base, &m1), &m2)?;
    let representatives = q
        .representatives
        .iter()
        .map(|v| {
            let mut mats = sys.decode(v);
            let f1 = mats.pop().expect("two unknowns");
            let f0 = mats.pop().expect("two unknowns");
            Morphism { f0, f1 }
        })
        .collect();
    Ok(StableHomDescription { torsion: q.torsion, free_rank: q.free_rank, representatives })
}

/// A pseudo-random morphism `X -> Y`: a combination of a lattice basis of
/// `Hom(X, Y)` with base coefficients of size `bound`.
pub fn random_morphism<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    rng: &mut dyn RngCore,
    bound: usize,
) -> crate::Result<Morphism<R::El>> {
    let base = ring.base();
    let (sys, kernel) = morphism_lattice(ring, x, y)?;
    let mut acc = sys.encode(&[ring.mat_zero(x.n0, y.n0), ring.mat_zero(x.n1, y.n1)]);
    for row in &kernel {
        let c = ring.to_base(&ring.random_element(rng, bound)).swap_remove(0);
        for (a, r) in acc.iter_mut().zip(row) {
            *a = base.add(a, &base.mul(&c, r));
        }
    }
    let mut mats = sys.decode(&acc);
    let f1 = mats.pop().expect("two unknowns");
    let f0 = mats.pop().expect("two unknowns");
    Ok(Morphism { f0, f1 })
}

/// Search bound for [`stable_iso`] over free parts of stable Hom groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    /// Integer height `|c| <= height`, or polynomial degree `<= height`.
    pub height: usize,
    /// Maximum number of candidate morphisms examined.
    pub limit: usize,
}

impl SearchBound {
    pub fn default_for(kind: &RingKind) -> Self {
        let height = match kind {
            RingKind::Integers | RingKind::GroupRingZCn { .. } => 8,
            RingKind::PolyOverPrimeField { .. } | RingKind::SkewPolyOverGF { .. } => 4,
        };
        SearchBound { height, limit: 4096 }
    }

    fn base_bound(&self, kind: &RingKind) -> usize {
        match kind {
            RingKind::Integers | RingKind::GroupRingZCn { .. } => self.height,
            _ => self.height + 1,
        }
    }
}

/// Tries to find `v: Y -> X` with `u` then `v` stably equal to `id_X`.
fn left_inverse<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    u: &Morphism<R::El>,
) -> crate::Result<Option<Morphism<R::El>>> {
    let mut sys = LinearSystem::new(ring);
    let g0 = sys.add_unknown(y.n0, x.n0);
    let g1 = sys.add_unknown(y.n1, x.n1);
    let h0 = sys.add_unknown(x.n0, x.n1);
    let h1 = sys.add_unknown(x.n1, x.n0);
    sys.add_equation(
        vec![Term::left(g1, y.d0.clone()), Term::right(g0, ring.mat_neg(&x.d0))],
        ring.mat_zero(y.n0, x.n1),
    )?;
    sys.add_equation(
        vec![Term::left(g0, y.d1.clone()), Term::new(g1, None, Twist::Sigma, Some(ring.mat_neg(&x.d1)))],
        ring.mat_zero(y.n1, x.n0),
    )?;
    sys.add_equation(
        vec![
            Term::left(g0, u.f0.clone()),
            Term::left(h1, ring.mat_neg(&x.d0)),
            Term::new(h0, None, Twist::Sigma, Some(ring.mat_neg(&x.d1))),
        ],
        ring.mat_identity(x.n0),
    )?;
    sys.add_equation(
        vec![
            Term::left(g1, u.f1.clone()),
            Term::right(h1, ring.mat_neg(&x.d0)),
            Term::left(h0, ring.mat_neg(&ring.mat_sigma_inv(&x.d1))),
        ],
        ring.mat_identity(x.n1),
    )?;
    Ok(sys.solve()?.map(|mut s| {
        s.truncate(2);
        let g1 = s.pop().expect("unknown");
        let g0 = s.pop().expect("unknown");
        Morphism { f0: g0, f1: g1 }
    }))
}

fn same_invariants<E, B: PartialEq>(a: &StableHomDescription<E, B>, b: &StableHomDescription<E, B>) -> bool {
    a.torsion == b.torsion && a.free_rank == b.free_rank
}

/// Whether `X` and `Y` are isomorphic in the stable category.
///
/// Candidates `u` run over combinations of stable `Hom(X, Y)` representatives
/// (all residues on torsion parts, coefficients within `bound` on free parts).
/// For each one a stable left inverse is solved for; a left inverse of a
/// stable isomorphism is its inverse, so one solution per `u` suffices.
pub fn stable_iso<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    bound: SearchBound,
) -> crate::Result<bool> {
    Ok(stable_iso_witness(ring, x, y, bound)?.is_some())
}

/// A pair `(u, v)` of mutually inverse stable isomorphisms, if found.
pub fn stable_iso_witness<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    bound: SearchBound,
) -> crate::Result<Option<(Morphism<R::El>, Morphism<R::El>)>> {
    let base = ring.base();
    let ex = stable_hom(ring, x, x)?;
    let ey = stable_hom(ring, y, y)?;
    if ex.is_zero() && ey.is_zero() {
        let u = crate::factorization::zero_morphism(ring, x, y);
        let v = crate::factorization::zero_morphism(ring, y, x);
        return Ok(Some((u, v)));
    }
    if !same_invariants(&ex, &ey) {
        return Ok(None);
    }
    let hom = stable_hom(ring, x, y)?;
    let kind = ring.kind();
    let mut ranges: Vec<Vec<BaseEl<R>>> = Vec::new();
    for t in &hom.torsion {
        ranges.push(base.residues(t, bound.limit).ok_or_else(|| {
            crate::Error::SearchBoundExceeded(format!("more than {} residues per torsion factor", bound.limit))
        })?);
    }
    for _ in 0..hom.free_rank {
        ranges.push(base.bounded_elements(bound.base_bound(&kind), bound.limit).ok_or_else(|| {
            crate::Error::SearchBoundExceeded(format!("more than {} coefficients per free generator", bound.limit))
        })?);
    }
    let total = ranges.iter().try_fold(1usize, |acc, r| acc.checked_mul(r.len()).filter(|&n| n <= bound.limit));
    let Some(total) = total else {
        return Err(crate::Error::SearchBoundExceeded(format!(
            "more than {} candidate morphisms",
            bound.limit
        )));
    };
    for mut idx in 0..total {
        let mut u = crate::factorization::zero_morphism(ring, x, y);
        for (r, rep) in ranges.iter().zip(&hom.representatives) {
            let c = ring.base_scalar(&r[idx % r.len()]);
            idx /= r.len();
            u.f0 = ring.mat_add(&u.f0, &ring.mat_scale_left(&c, &rep.f0));
            u.f1 = ring.mat_add(&u.f1, &ring.mat_scale_left(&c, &rep.f1));
        }
        let Some(v) = left_inverse(ring, x, y, &u)? else { continue };
        let vu = compose(ring, &v, &u);
        if stably_equal(ring, y, y, &vu, &identity(ring, y))? {
            return Ok(Some((u, v)));
        }
    }
    if hom.free_rank > 0 {
        return Err(crate::Error::SearchBoundExceeded(format!(
            "no stable isomorphism among {total} candidates with coefficients of height {}",
            bound.height
        )));
    }
    Ok(None)
}

/// The syzygy of `X`. For free components it is `S^-1(X)`.
pub fn syzygy<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>) -> ModuleFactorization<R::El> {
    unshift(ring, x)
}

/// Free covers `pi_i: A^{n_i + m_i} -> X^i` used by [`syzygy_general`]:
/// `pi_i = [I; T_i]` with kernel `j_i = [-T_i | I]`, and lifts
/// `delta0 = pi0 D0 [I | 0] + E0 j1`, `delta1 = sigma(pi1) D1 [I | 0] + E1 j0`.
#[derive(Clone, Debug)]
pub struct SyzygyCovers<E> {
    pub t0: Matrix<E>,
    pub t1: Matrix<E>,
    pub e0: Matrix<E>,
    pub e1: Matrix<E>,
}

impl<E: Clone> SyzygyCovers<E> {
    /// Covers with `m0`, `m1` extra free generators and random entries.
    pub fn random<R: FactorRing<El = E>>(
        ring: &R,
        x: &ModuleFactorization<E>,
        m0: usize,
        m1: usize,
        rng: &mut dyn RngCore,
        bound: usize,
    ) -> Self {
        let mut rnd = |r: usize, c: usize| Matrix::from_fn(r, c, |_, _| ring.random_element(rng, bound));
        SyzygyCovers {
            t0: rnd(m0, x.n0),
            t1: rnd(m1, x.n1),
            e0: rnd(x.n0 + m0, m1),
            e1: rnd(x.n1 + m1, m0),
        }
    }
}

fn cover_pi<R: FactorRing>(ring: &R, t: &Matrix<R::El>) -> Matrix<R::El> {
    ring.mat_identity(t.cols()).vstack(t)
}

fn cover_j<R: FactorRing>(ring: &R, t: &Matrix<R::El>) -> Matrix<R::El> {
    ring.mat_neg(t).hstack(&ring.mat_identity(t.rows()))
}

/// `[0; I]`, a right inverse of `j = [-T | I]`.
fn cover_j_section<R: FactorRing>(ring: &R, t: &Matrix<R::El>) -> Matrix<R::El> {
    ring.mat_zero(t.cols(), t.rows()).vstack(&ring.mat_identity(t.rows()))
}

/// The block syzygy built from arbitrary free covers of `X0` and `X1`:
///
/// ```text
/// D0' = [[ j0,     d0'' ],     D1' = [[ h0,   -sigma(delta0) ],
///        [ -delta1, h1  ]]            [ d1'',  sigma(j1)      ]]
/// ```
///
/// with `d0'' j1 = j0 delta0`, `d1'' j0 = sigma(j1) delta1`,
/// `h0 j0 = omega - sigma(delta0) delta1` and `h1 j1 = omega - delta1 delta0`.
/// Row blocks of `D0'` are `Omega(X0)` and `^tau(P1)` (coordinates `sigma(u)`),
/// columns `P0` and `Omega(X1)`.
pub fn syzygy_general<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    c: &SyzygyCovers<R::El>,
) -> crate::Result<ModuleFactorization<R::El>> {
    let (m0, m1) = (c.t0.rows(), c.t1.rows());
    if c.t0.cols() != x.n0 || c.t1.cols() != x.n1 || c.e0.shape() != (x.n0 + m0, m1) || c.e1.shape() != (x.n1 + m1, m0)
    {
        return Err(crate::Error::ShapeMismatch("syzygy covers do not fit the factorization".into()));
    }
    let (pi0, pi1) = (cover_pi(ring, &c.t0), cover_pi(ring, &c.t1));
    let (j0, j1) = (cover_j(ring, &c.t0), cover_j(ring, &c.t1));
    let (s0, s1) = (cover_j_section(ring, &c.t0), cover_j_section(ring, &c.t1));
    let first = |n: usize, m: usize| ring.mat_identity(n).hstack(&ring.mat_zero(n, m));
    let delta0 =
        ring.mat_add(&ring.mat_mul(&ring.mat_mul(&pi0, &x.d0), &first(x.n1, m1)), &ring.mat_mul(&c.e0, &j1));
    let delta1 = ring.mat_add(
        &ring.mat_mul(&ring.mat_mul(&ring.mat_sigma(&pi1), &x.d1), &first(x.n0, m0)),
        &ring.mat_mul(&c.e1, &j0),
    );
    if ring.mat_mul(&delta0, &pi1) != ring.mat_mul(&pi0, &x.d0)
        || ring.mat_mul(&delta1, &pi0) != ring.mat_mul(&ring.mat_sigma(&pi1), &x.d1)
    {
        return Err(crate::Error::InternalInconsistency("cover lifts do not commute".into()));
    }
    let solve_through = |lhs: Matrix<R::El>, j: &Matrix<R::El>, s: &Matrix<R::El>, what: &str| {
        let m = ring.mat_mul(&lhs, s);
        if ring.mat_mul(&m, j) != lhs {
            return Err(crate::Error::InternalInconsistency(format!("{what} does not factor through the kernel")));
        }
        Ok(m)
    };
    let dd0 = solve_through(ring.mat_mul(&j0, &delta0), &j1, &s1, "j0 delta0")?;
    let dd1 = solve_through(ring.mat_mul(&ring.mat_sigma(&j1), &delta1), &j0, &s0, "sigma(j1) delta1")?;
    let p0 = x.n0 + m0;
    let p1 = x.n1 + m1;
    let hh0 = solve_through(
        ring.mat_sub(&ring.omega_identity(p0), &ring.mat_mul(&ring.mat_sigma(&delta0), &delta1)),
        &j0,
        &s0,
        "omega - delta1 delta0",
    )?;
    let hh1 = solve_through(
        ring.mat_sub(&ring.omega_identity(p1), &ring.mat_mul(&delta1, &delta0)),
        &j1,
        &s1,
        "omega - delta0 delta1",
    )?;
    let d0 = j0.hstack(&dd0).vstack(&ring.mat_neg(&delta1).hstack(&hh1));
    let d1 = hh0.hstack(&ring.mat_neg(&ring.mat_sigma(&delta0))).vstack(&dd1.hstack(&ring.mat_sigma(&j1)));
    ModuleFactorization::new(ring, d0, d1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{FpPoly, Integers, PolyFp};
    use alloc::vec;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn zm(r: usize, c: usize, v: &[i64]) -> Matrix<BigInt> {
        Matrix::from_vec(r, c, v.iter().map(|&a| BigInt::from(a)).collect()).unwrap()
    }

    fn xpow(k: usize) -> FpPoly {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        FpPoly(c)
    }

    fn pm(v: FpPoly) -> Matrix<FpPoly> {
        Matrix::from_vec(1, 1, vec![v]).unwrap()
    }

    #[test]
    fn theta0_identity_is_null_homotopic() {
        let z = Integers::new(BigInt::from(5)).unwrap();
        let t = theta0(&z, 1);
        let h = is_p_null_homotopic(&z, &t, &t, &identity(&z, &t)).unwrap().unwrap();
        assert_eq!(h.h1, zm(1, 1, &[1]));
        assert_eq!(h.h0, zm(1, 1, &[0]));
    }

    #[test]
    fn x_times_x_examples() {
        let a = PolyFp::new(2, xpow(2)).unwrap();
        let x = ModuleFactorization::new(&a, pm(xpow(1)), pm(xpow(1))).unwrap();
        let f = Morphism::new(pm(xpow(1)), pm(xpow(1)));
        let h = is_p_null_homotopic(&a, &x, &x, &f).unwrap().unwrap();
        assert_eq!(h.h1, pm(xpow(0)));
        assert_eq!(h.h0, pm(FpPoly(vec![])));
        assert!(is_p_null_homotopic(&a, &x, &x, &identity(&a, &x)).unwrap().is_none());
        assert!(!is_projective_object(&a, &x).unwrap());
        let end = stable_hom(&a, &x, &x).unwrap();
        assert_eq!(end.torsion, vec![xpow(1)]);
        assert_eq!(end.free_rank, 0);
        let p = factor_through_projective(&a, &x, &x, &f, &h).unwrap();
        assert_eq!(p.middle.n0, 2);
    }

    #[test]
    fn z6_stable_homs() {
        let z = Integers::new(BigInt::from(6)).unwrap();
        let x23 = ModuleFactorization::new(&z, zm(1, 1, &[2]), zm(1, 1, &[3])).unwrap();
        let x32 = ModuleFactorization::new(&z, zm(1, 1, &[3]), zm(1, 1, &[2])).unwrap();
        assert!(stable_hom(&z, &x23, &x32).unwrap().is_zero());
        let t0 = theta0(&z, 1);
        assert!(stable_hom(&z, &t0, &x23).unwrap().is_zero());
        // Z/2 is a projective Z/6-module, so ([2],[3]) is a projective object
        assert!(is_projective_object(&z, &x23).unwrap());
        let b = SearchBound::default_for(&z.kind());
        assert!(stable_iso(&z, &x23, &direct_sum(&z, &t0, &x23), b).unwrap());
    }

    #[test]
    fn z4_separates_classes() {
        let z = Integers::new(BigInt::from(4)).unwrap();
        let x = ModuleFactorization::new(&z, zm(1, 1, &[2]), zm(1, 1, &[2])).unwrap();
        let b = SearchBound::default_for(&z.kind());
        assert!(!is_projective_object(&z, &x).unwrap());
        assert!(stable_iso(&z, &x, &direct_sum(&z, &x, &theta1(&z, 2)), b).unwrap());
        assert!(!stable_iso(&z, &x, &direct_sum(&z, &x, &x), b).unwrap());
        assert!(!stable_iso(&z, &x, &theta0(&z, 1), b).unwrap());
    }

    #[test]
    fn syzygy_paths_agree() {
        let z = Integers::new(BigInt::from(6)).unwrap();
        let x = ModuleFactorization::new(&z, zm(1, 1, &[2]), zm(1, 1, &[3])).unwrap();
        assert_eq!(syzygy(&z, &x), unshift(&z, &x));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = SyzygyCovers::random(&z, &x, 1, 2, &mut rng, 3);
        let g = syzygy_general(&z, &x, &c).unwrap();
        assert!(stable_iso(&z, &g, &syzygy(&z, &x), SearchBound::default_for(&z.kind())).unwrap());

        let a = PolyFp::new(2, xpow(2)).unwrap();
        let xx = ModuleFactorization::new(&a, pm(xpow(1)), pm(xpow(1))).unwrap();
        let s = syzygy(&a, &xx);
        assert!(stable_iso(&a, &s, &xx, SearchBound::default_for(&a.kind())).unwrap());
        let c = SyzygyCovers::random(&a, &xx, 2, 1, &mut rng, 3);
        let g = syzygy_general(&a, &xx, &c).unwrap();
        assert!(stable_iso(&a, &g, &s, SearchBound::default_for(&a.kind())).unwrap());
    }
}
