//! Module factorizations with free components and their morphisms.
//!
//! Coordinates: `X = (n0, n1; D0, D1)` with `d0: v -> v * D0` and `d1`
//! stored as the semilinear rule `v -> sigma(v) * D1` into `^sigma(X0)`.
//! A map into `^{sigma^b}(A^n)` from `^{sigma^a}(A^m)` is stored as `G` with
//! rule `w -> sigma^(b-a)(w) * G`. Under these conventions
//!
//! * axiom A (`d1 d0 = omega`): `sigma(D0) * D1 = omega * I`,
//! * axiom B (`^sigma(d0) d1 = omega`): `D1 * D0 = omega * I`,
//! * a morphism `(F0, F1)` satisfies `D0X * F1 = F0 * D0Y` and
//!   `D1X * F0 = sigma(F1) * D1Y`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::matrix::{MatOps, Matrix, TwistOps};
use crate::ring::FactorRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleFactorization<E> {
    pub n0: usize,
    pub n1: usize,
    pub d0: Matrix<E>,
    pub d1: Matrix<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom_a: bool,
    pub axiom_b: bool,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.axiom_a && self.axiom_b
    }
}

impl<E: Clone> ModuleFactorization<E> {
    /// Builds a factorization after checking shapes (not axioms).
    pub fn from_matrices(d0: Matrix<E>, d1: Matrix<E>) -> crate::Result<Self> {
        let (n0, n1) = d0.shape();
        if d1.shape() != (n1, n0) {
            return Err(crate::Error::ShapeMismatch(format!(
                "D0 is {n0}x{n1} but D1 is {}x{}",
                d1.rows(),
                d1.cols()
            )));
        }
        Ok(ModuleFactorization { n0, n1, d0, d1 })
    }

    /// Builds a factorization and rejects it unless both axioms hold.
    pub fn new<R: FactorRing<El = E>>(ring: &R, d0: Matrix<E>, d1: Matrix<E>) -> crate::Result<Self> {
        let x = Self::from_matrices(d0, d1)?;
        let rep = check_axioms(ring, &x)?;
        if !rep.ok() {
            return Err(crate::Error::InvalidInput(rep.violations.join("; ")));
        }
        Ok(x)
    }
}

pub fn check_axioms<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>) -> crate::Result<AxiomReport> {
    if x.d0.shape() != (x.n0, x.n1) || x.d1.shape() != (x.n1, x.n0) {
        return Err(crate::Error::ShapeMismatch(format!(
            "ranks ({}, {}) do not match D0 {:?} and D1 {:?}",
            x.n0,
            x.n1,
            x.d0.shape(),
            x.d1.shape()
        )));
    }
    let mut violations = Vec::new();
    let a = ring.mat_mul(&ring.mat_sigma(&x.d0), &x.d1);
    let wa = ring.omega_identity(x.n0);
    let axiom_a = a == wa;
    if !axiom_a {
        for i in 0..x.n0 {
            for j in 0..x.n0 {
                if a.get(i, j) != wa.get(i, j) {
                    violations.push(format!("sigma(D0)*D1 differs from omega*I at ({i}, {j})"));
                }
            }
        }
    }
    let b = ring.mat_mul(&x.d1, &x.d0);
    let wb = ring.omega_identity(x.n1);
    let axiom_b = b == wb;
    if !axiom_b {
        for i in 0..x.n1 {
            for j in 0..x.n1 {
                if b.get(i, j) != wb.get(i, j) {
                    violations.push(format!("D1*D0 differs from omega*I at ({i}, {j})"));
                }
            }
        }
    }
    Ok(AxiomReport { axiom_a, axiom_b, violations })
}

/// `theta0(n) = (n, n; I, omega I)`.
pub fn theta0<R: FactorRing>(ring: &R, n: usize) -> ModuleFactorization<R::El> {
    ModuleFactorization { n0: n, n1: n, d0: ring.mat_identity(n), d1: ring.omega_identity(n) }
}

/// `theta1(n) = (n, n; omega I, I)`, the coordinate form of `(^{sigma^-1}M, M; omega, id)`.
pub fn theta1<R: FactorRing>(ring: &R, n: usize) -> ModuleFactorization<R::El> {
    ModuleFactorization { n0: n, n1: n, d0: ring.omega_identity(n), d1: ring.mat_identity(n) }
}

pub fn zero<R: FactorRing>(ring: &R) -> ModuleFactorization<R::El> {
    ModuleFactorization { n0: 0, n1: 0, d0: ring.mat_zero(0, 0), d1: ring.mat_zero(0, 0) }
}

/// `S(X) = (X1, ^sigma(X0); -d1, -^sigma(d0))`, in coordinates `(n1, n0; -sigma^-1(D1), -D0)`.
pub fn shift<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>) -> ModuleFactorization<R::El> {
    ModuleFactorization {
        n0: x.n1,
        n1: x.n0,
        d0: ring.mat_neg(&ring.mat_sigma_inv(&x.d1)),
        d1: ring.mat_neg(&x.d0),
    }
}

/// Inverse of [`shift`]: `(n1, n0; -D1, -sigma(D0))`.
pub fn unshift<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>) -> ModuleFactorization<R::El> {
    ModuleFactorization {
        n0: x.n1,
        n1: x.n0,
        d0: ring.mat_neg(&x.d1),
        d1: ring.mat_neg(&ring.mat_sigma(&x.d0)),
    }
}

/// Entrywise `sigma^k` of both matrices; `shift` applied twice equals `k = -1`.
pub fn twist_object<R: FactorRing>(ring: &R, k: i64, x: &ModuleFactorization<R::El>) -> ModuleFactorization<R::El> {
    ModuleFactorization { n0: x.n0, n1: x.n1, d0: ring.mat_sigma_pow(k, &x.d0), d1: ring.mat_sigma_pow(k, &x.d1) }
}

pub fn direct_sum<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
) -> ModuleFactorization<R::El> {
    ModuleFactorization {
        n0: x.n0 + y.n0,
        n1: x.n1 + y.n1,
        d0: ring.block_diag(&x.d0, &y.d0),
        d1: ring.block_diag(&x.d1, &y.d1),
    }
}

/// A morphism `(F0, F1): X -> Y` (objects are carried alongside, not inside).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism<E> {
    pub f0: Matrix<E>,
    pub f1: Matrix<E>,
}

impl<E> Morphism<E> {
    pub fn new(f0: Matrix<E>, f1: Matrix<E>) -> Self {
        Morphism { f0, f1 }
    }
}

pub fn check_shapes<E>(x: &ModuleFactorization<E>, y: &ModuleFactorization<E>, f: &Morphism<E>) -> crate::Result<()> {
    if f.f0.shape() != (x.n0, y.n0) || f.f1.shape() != (x.n1, y.n1) {
        return Err(crate::Error::ShapeMismatch(format!(
            "morphism components {:?}, {:?} between ranks ({}, {}) and ({}, {})",
            f.f0.shape(),
            f.f1.shape(),
            x.n0,
            x.n1,
            y.n0,
            y.n1
        )));
    }
    Ok(())
}

/// Whether both commuting squares hold.
pub fn is_morphism<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
    f: &Morphism<R::El>,
) -> crate::Result<bool> {
    check_shapes(x, y, f)?;
    let sq0 = ring.mat_mul(&x.d0, &f.f1) == ring.mat_mul(&f.f0, &y.d0);
    let sq1 = ring.mat_mul(&x.d1, &f.f0) == ring.mat_mul(&ring.mat_sigma(&f.f1), &y.d1);
    Ok(sq0 && sq1)
}

pub fn identity<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>) -> Morphism<R::El> {
    Morphism { f0: ring.mat_identity(x.n0), f1: ring.mat_identity(x.n1) }
}

pub fn zero_morphism<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
) -> Morphism<R::El> {
    Morphism { f0: ring.mat_zero(x.n0, y.n0), f1: ring.mat_zero(x.n1, y.n1) }
}

/// `f` followed by `g`.
pub fn compose<R: FactorRing>(ring: &R, f: &Morphism<R::El>, g: &Morphism<R::El>) -> Morphism<R::El> {
    Morphism { f0: ring.mat_mul(&f.f0, &g.f0), f1: ring.mat_mul(&f.f1, &g.f1) }
}

pub fn add_morphisms<R: FactorRing>(ring: &R, f: &Morphism<R::El>, g: &Morphism<R::El>) -> Morphism<R::El> {
    Morphism { f0: ring.mat_add(&f.f0, &g.f0), f1: ring.mat_add(&f.f1, &g.f1) }
}

pub fn sub_morphisms<R: FactorRing>(ring: &R, f: &Morphism<R::El>, g: &Morphism<R::El>) -> Morphism<R::El> {
    Morphism { f0: ring.mat_sub(&f.f0, &g.f0), f1: ring.mat_sub(&f.f1, &g.f1) }
}

/// `theta0(a) = (a, a)` for an `A`-linear map `a`.
pub fn theta0_map<R: FactorRing>(a: &Matrix<R::El>) -> Morphism<R::El> {
    Morphism { f0: a.clone(), f1: a.clone() }
}

/// `theta1(a) = (sigma(a), a)`.
pub fn theta1_map<R: FactorRing>(ring: &R, a: &Matrix<R::El>) -> Morphism<R::El> {
    Morphism { f0: ring.mat_sigma(a), f1: a.clone() }
}

/// `S(f) = (F1, sigma^-1(F0))`.
pub fn shift_map<R: FactorRing>(ring: &R, f: &Morphism<R::El>) -> Morphism<R::El> {
    Morphism { f0: f.f1.clone(), f1: ring.mat_sigma_inv(&f.f0) }
}

/// Block-diagonal sum of two morphisms.
pub fn direct_sum_map<R: FactorRing>(ring: &R, f: &Morphism<R::El>, g: &Morphism<R::El>) -> Morphism<R::El> {
    Morphism { f0: ring.block_diag(&f.f0, &g.f0), f1: ring.block_diag(&f.f1, &g.f1) }
}

/// The inclusion `X -> X + Y` and projection `X + Y -> X`.
pub fn summand_maps<R: FactorRing>(
    ring: &R,
    x: &ModuleFactorization<R::El>,
    y: &ModuleFactorization<R::El>,
) -> (Morphism<R::El>, Morphism<R::El>) {
    let inc = Morphism {
        f0: ring.mat_identity(x.n0).hstack(&ring.mat_zero(x.n0, y.n0)),
        f1: ring.mat_identity(x.n1).hstack(&ring.mat_zero(x.n1, y.n1)),
    };
    let proj = Morphism {
        f0: ring.mat_identity(x.n0).vstack(&ring.mat_zero(y.n0, x.n0)),
        f1: ring.mat_identity(x.n1).vstack(&ring.mat_zero(y.n1, x.n1)),
    };
    (inc, proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Gf, Integers, SkewGf, SkewPoly};
    use alloc::vec;
    use num_bigint::BigInt;

    fn zm(v: i64) -> Matrix<BigInt> {
        Matrix::from_vec(1, 1, vec![BigInt::from(v)]).unwrap()
    }

    #[test]
    fn z6_examples() {
        let r = Integers::new(BigInt::from(6)).unwrap();
        let x = ModuleFactorization::from_matrices(zm(2), zm(3)).unwrap();
        assert!(check_axioms(&r, &x).unwrap().ok());
        let bad = ModuleFactorization::from_matrices(zm(2), zm(2)).unwrap();
        let rep = check_axioms(&r, &bad).unwrap();
        assert!(!rep.ok());
        assert_eq!(rep.violations.len(), 2);
        assert_eq!(unshift(&r, &shift(&r, &x)), x);
    }

    #[test]
    fn theta_shift_example() {
        let r = Integers::new(BigInt::from(5)).unwrap();
        let s = shift(&r, &theta0(&r, 1));
        assert_eq!(s.d0, zm(-5));
        assert_eq!(s.d1, zm(-1));
        assert!(check_axioms(&r, &s).unwrap().ok());
        let sum = direct_sum(&r, &theta0(&r, 1), &theta1(&r, 1));
        assert_eq!(sum.d0, Matrix::from_vec(2, 2, [1, 0, 0, 5].map(BigInt::from).to_vec()).unwrap());
    }

    #[test]
    fn skew_example() {
        let r = SkewGf::new(Gf::new(2, 2).unwrap()).unwrap();
        let f = r.field().clone();
        let a = f.gen();
        let d0 = Matrix::from_vec(1, 1, vec![r.constant(a.clone())]).unwrap();
        let d1 = Matrix::from_vec(1, 1, vec![SkewPoly(vec![f.zero(), a])]).unwrap();
        let x = ModuleFactorization::from_matrices(d0, d1).unwrap();
        assert!(check_axioms(&r, &x).unwrap().ok());
        let s = shift(&r, &x);
        assert!(check_axioms(&r, &s).unwrap().ok());
        assert_eq!(shift(&r, &s), twist_object(&r, -1, &x));
        assert_eq!(unshift(&r, &s), x);
        assert!(check_axioms(&r, &theta1(&r, 2)).unwrap().ok());
        assert_eq!(r.sigma(&r.omega()), r.omega());
    }
}
