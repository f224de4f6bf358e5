//! Finitely presented modules over `A` and over `A/(omega)`.
//!
//! An element is a row vector of length `generators` modulo the left span of
//! the relation rows (and of `omega * A^g` for modules over the quotient).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::linsys::{BaseEl, LinearSystem, Term};
use crate::matrix::{MatOps, Matrix, TwistOps};
use crate::normal_form::{determinant, echelon_basis, hermite_form, smith};
use crate::ring::{EuclideanDomain, FactorRing, RingKind, RingOps};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation<E> {
    pub over_quotient: bool,
    pub generators: usize,
    pub relations: Matrix<E>,
}

impl<E: Clone> ModulePresentation<E> {
    pub fn new<R: FactorRing<El = E>>(
        ring: &R,
        generators: usize,
        relations: Matrix<E>,
        over_quotient: bool,
    ) -> crate::Result<Self> {
        if relations.cols() != generators {
            return Err(crate::Error::ShapeMismatch(format!(
                "relations have {} columns for {generators} generators",
                relations.cols()
            )));
        }
        let relations = if over_quotient { ring.mat_reduce(&relations) } else { relations };
        Ok(ModulePresentation { over_quotient, generators, relations })
    }

    /// The free module of the given rank.
    pub fn free<R: FactorRing<El = E>>(ring: &R, rank: usize, over_quotient: bool) -> Self {
        ModulePresentation { over_quotient, generators: rank, relations: ring.mat_zero(0, rank) }
    }
}

/// Cokernel of `v -> v * D` for an `n0 x n1` matrix `D`.
pub fn cokernel_presentation<R: FactorRing>(
    ring: &R,
    d: &Matrix<R::El>,
    over_quotient: bool,
) -> ModulePresentation<R::El> {
    ModulePresentation::new(ring, d.cols(), d.clone(), over_quotient).expect("shape is consistent by construction")
}

/// Invariant-factor normal form. Over integers and `F_p[x]` this classifies
/// the module; for the group ring it describes the underlying abelian group;
/// for skew polynomials over the quotient it records the `F_q`-dimension as
/// repeated factors `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFactorForm<E> {
    pub free_rank: usize,
    pub torsion_factors: Vec<E>,
}

impl<E> InvariantFactorForm<E> {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion_factors.is_empty()
    }
}

/// Relations of the module viewed over the base ring: `beta * rho` for every
/// relation `rho` and base basis element `beta`, plus `omega`-rows over the quotient.
pub fn expanded_relations<R: FactorRing>(ring: &R, m: &ModulePresentation<R::El>) -> Matrix<BaseEl<R>> {
    let g = m.generators;
    let basis = ring.base_basis();
    let mut rows: Vec<Vec<BaseEl<R>>> = Vec::new();
    let mut push = |row: &[R::El]| {
        for b in &basis {
            let mut out = Vec::with_capacity(g * basis.len());
            for x in row {
                out.extend(ring.to_base(&ring.mul(b, x)));
            }
            rows.push(out);
        }
    };
    for i in 0..m.relations.rows() {
        push(m.relations.row(i));
    }
    if m.over_quotient {
        let w = ring.omega_identity(g);
        for i in 0..g {
            push(w.row(i));
        }
    }
    Matrix::from_rows(g * ring.base_rank(), rows)
}

/// Base-ring invariants of the underlying module: (non-unit torsion factors, free rank).
pub fn base_invariants<R: FactorRing>(ring: &R, m: &ModulePresentation<R::El>) -> (Vec<BaseEl<R>>, usize) {
    let b = ring.base();
    let e = expanded_relations(ring, m);
    let s = smith(b, &e);
    let torsion = s.diag[..s.rank].iter().filter(|d| !b.is_unit(d)).cloned().collect();
    (torsion, e.cols() - s.rank)
}

pub fn invariant_factors<R: FactorRing>(
    ring: &R,
    m: &ModulePresentation<R::El>,
) -> crate::Result<InvariantFactorForm<R::El>> {
    let (torsion, free_rank) = base_invariants(ring, m);
    match ring.kind() {
        RingKind::SkewPolyOverGF { e, .. } => {
            if !m.over_quotient {
                return Err(crate::Error::UnsupportedRing("invariant_factors of skew modules outside the quotient"));
            }
            // every expanded factor is the central variable x^e; group them by F_q-dimension
            if torsion.len() % e != 0 || free_rank != 0 {
                return Err(crate::Error::InternalInconsistency("quotient module is not an F_q-vector space".into()));
            }
            Ok(InvariantFactorForm {
                free_rank: 0,
                torsion_factors: (0..torsion.len() / e).map(|_| ring.omega()).collect(),
            })
        }
        _ => Ok(InvariantFactorForm {
            free_rank,
            torsion_factors: torsion.iter().map(|t| ring.base_scalar(t)).collect(),
        }),
    }
}

/// Whether the module is zero.
pub fn is_zero_module<R: FactorRing>(ring: &R, m: &ModulePresentation<R::El>) -> bool {
    let (t, f) = base_invariants(ring, m);
    t.is_empty() && f == 0
}

/// Gorenstein projectivity, decided by classification facts per ring family.
///
/// * over the quotient: always true (`Z/m` and `F_p[x]/(f)` are self-injective,
///   `F_q` is a field, `F_p C_n` is a Frobenius algebra);
/// * over `Z` and `F_p[x]` (hereditary): true iff free, i.e. torsion-free;
/// * over `Z C_n`: true iff the underlying abelian group is free;
/// * over `F_q[x; Frob]` (a hereditary noetherian domain, finite over its
///   centre): true iff torsion-free, detected over the central base.
pub fn is_gorenstein_projective<R: FactorRing>(ring: &R, m: &ModulePresentation<R::El>) -> crate::Result<bool> {
    if m.over_quotient {
        return Ok(true);
    }
    let (torsion, _) = base_invariants(ring, m);
    Ok(torsion.is_empty())
}

/// Whether a module over the quotient is projective there: the projection
/// onto the relation span splits iff `R * C * R = R` is solvable mod `omega`.
pub fn is_projective_over_quotient<R: FactorRing>(ring: &R, m: &ModulePresentation<R::El>) -> crate::Result<bool> {
    let r = ring.mat_reduce(&m.relations);
    let (k, g) = r.shape();
    if k == 0 || ring.mat_is_zero(&r) {
        return Ok(true);
    }
    let mut sys = LinearSystem::new(ring);
    let c = sys.add_unknown(g, k);
    let z = sys.add_unknown(k, g);
    sys.add_equation(
        alloc::vec![
            Term::new(c, Some(r.clone()), crate::Twist::Plain, Some(r.clone())),
            Term::left(z, ring.omega_identity(k)),
        ],
        r,
    )?;
    Ok(sys.solve()?.is_some())
}

/// Injective presentation `0 -> A^n0 --D--> A^n1 -> N -> 0`.
#[derive(Clone, Debug)]
pub struct FreeCover<E, B> {
    pub d: Matrix<E>,
    /// Diagonal of the base-ring Smith form of `v -> v * D`; no entry is zero.
    pub certificate: Vec<B>,
}

/// Matrix of `v -> v * D` over the base ring.
pub fn expanded_right_action<R: FactorRing>(ring: &R, d: &Matrix<R::El>) -> Matrix<BaseEl<R>> {
    let m = ModulePresentation { over_quotient: false, generators: d.cols(), relations: d.clone() };
    expanded_relations(ring, &m)
}

fn injectivity_certificate<R: FactorRing>(ring: &R, d: &Matrix<R::El>) -> crate::Result<Vec<BaseEl<R>>> {
    let e = expanded_right_action(ring, d);
    let s = smith(ring.base(), &e);
    if s.rank != e.rows() {
        return Err(crate::Error::InternalInconsistency("presentation matrix is not injective".into()));
    }
    Ok(s.diag)
}

/// Maximum number of candidates tried per generator of a group-ring cover.
pub const COVER_SEARCH_BUDGET: usize = 200_000;

pub fn free_cover_step<R: FactorRing>(
    ring: &R,
    m: &ModulePresentation<R::El>,
) -> crate::Result<FreeCover<R::El, BaseEl<R>>> {
    if !m.over_quotient {
        return Err(crate::Error::InvalidInput("free_cover_step expects a module over the quotient".into()));
    }
    let g = m.generators;
    let d = match ring.kind() {
        RingKind::GroupRingZCn { .. } => group_ring_cover(ring, m)?,
        _ => {
            // the relation span plus omega*A^g has full rank g; its echelon basis presents N
            let stacked = m.relations.vstack(&ring.omega_identity(g));
            let (h, _) = hermite_form(ring, &stacked)?;
            let rows: Vec<Vec<R::El>> =
                (0..h.rows()).filter(|&i| h.row(i).iter().any(|x| !ring.is_zero(x))).map(|i| h.row(i).to_vec()).collect();
            Matrix::from_rows(g, rows)
        }
    };
    let certificate = injectivity_certificate(ring, &d)?;
    Ok(FreeCover { d, certificate })
}

/// Over `Z C_n` with `omega = p`: a projective `F_p C_n`-module is covered by a
/// free lattice. Modules that are not projective over `F_p C_n` are not
/// cohomologically trivial and have infinite projective dimension over `Z C_n`.
///
/// `F_p C_n = F_p[x]/(x^n - 1)` is a principal ideal ring, so `N` splits into
/// cyclic summands `A/(p, f)`. Each kernel `(p, f)` is locally free of rank
/// one; the cover is the diagonal matrix of generators found by search.
fn group_ring_cover<R: FactorRing>(ring: &R, m: &ModulePresentation<R::El>) -> crate::Result<Matrix<R::El>> {
    if !is_projective_over_quotient(ring, m)? {
        return Err(crate::Error::NotFinitePd(
            "module is not projective over F_p C_n, so its projective dimension over Z C_n is infinite".into(),
        ));
    }
    let factors = ring
        .quotient_cyclic_factors(&m.relations)
        .ok_or(crate::Error::UnsupportedRing("no cyclic decomposition over the quotient"))?;
    let mut d = ring.mat_zero(factors.len(), factors.len());
    for (i, f) in factors.iter().enumerate() {
        d.set(i, i, principal_generator(ring, f)?);
    }
    Ok(d)
}

/// A generator of the ideal `(omega, f)`, recognised by its index. Candidates
/// are integer combinations of the Hermite basis of the ideal, by increasing
/// coefficient height.
fn principal_generator<R: FactorRing>(ring: &R, f: &R::El) -> crate::Result<R::El> {
    let omega = ring.omega();
    if ring.is_zero(f) {
        return Ok(omega);
    }
    let b = ring.base();
    let cyclic = ModulePresentation { over_quotient: true, generators: 1, relations: Matrix::from_rows(1, vec![vec![f.clone()]]) };
    let (torsion, _) = base_invariants(ring, &cyclic);
    let index = b.normalize(&torsion.iter().fold(b.one(), |acc, t| b.mul(&acc, t))).0;
    let gens: Vec<Vec<BaseEl<R>>> = ring
        .base_basis()
        .iter()
        .flat_map(|beta| [ring.mul(beta, f), ring.mul(beta, &omega)])
        .map(|a| ring.to_base(&a))
        .collect();
    let lattice: Vec<R::El> = {
        let ech = echelon_basis(b, &Matrix::from_rows(ring.base_rank(), gens));
        (0..ech.rows()).map(|i| ring.from_base(ech.row(i))).collect()
    };
    let len = lattice.len() as u32;
    let mut tried = 0;
    for height in 1i64.. {
        let width = 2 * height as u64 + 1;
        let total = width.checked_pow(len).unwrap_or(u64::MAX);
        for code in 0..total {
            let mut rest = code;
            let coeffs: Vec<i64> = (0..len)
                .map(|_| {
                    let c = (rest % width) as i64 - height;
                    rest /= width;
                    c
                })
                .collect();
            if coeffs.iter().all(|c| c.abs() < height) {
                continue;
            }
            tried += 1;
            if tried > COVER_SEARCH_BUDGET {
                return Err(crate::Error::SearchBoundExceeded(format!(
                    "no generator of (omega, f) among {COVER_SEARCH_BUDGET} small lattice vectors"
                )));
            }
            let cand = coeffs
                .iter()
                .zip(&lattice)
                .fold(ring.zero(), |acc, (c, v)| ring.add(&acc, &ring.mul(&ring.from_i64(*c), v)));
            let det = determinant(b, &expanded_right_action(ring, &Matrix::from_rows(1, vec![vec![cand.clone()]])));
            if b.normalize(&det).0 == index {
                return Ok(cand);
            }
        }
    }
    unreachable!("the height loop only exits by returning")
}

/// Projective dimension over `A` of a module over the quotient.
#[derive(Clone, Debug)]
pub enum PdCertificate<E, B> {
    /// The zero module.
    Zero,
    /// Dimension one, certified by an injective two-term presentation.
    One(FreeCover<E, B>),
}

pub fn pd_over_a<R: FactorRing>(
    ring: &R,
    m: &ModulePresentation<R::El>,
) -> crate::Result<PdCertificate<R::El, BaseEl<R>>> {
    if is_zero_module(ring, m) {
        return Ok(PdCertificate::Zero);
    }
    Ok(PdCertificate::One(free_cover_step(ring, m)?))
}
