//! The adjoint pairs between free `A`-modules and factorizations:
//! `theta0 -| pr0 -| S theta0` and `theta1 -| pr1 -| theta0`.
//!
//! A free module is its rank `m`; module maps are matrices. In coordinates
//! the hom-bijections are
//!
//! ```text
//! theta0 -| pr0:    G: M -> X0    <->  (G, G * D0X): theta0(M) -> X
//! pr0 -| S theta0:  G: X0 -> M    <->  (G, -sigma^-1(D1X) * sigma^-1(G)): X -> S theta0(M)
//! theta1 -| pr1:    G: M -> X1    <->  (sigma(G) * D1X, G): theta1(M) -> X
//! pr1 -| theta0:    G: X1 -> M    <->  (D0X * G, G): X -> theta0(M)
//! ```
//!
//! with inverses taking the `F0` (first two) or `F1` (last two) component.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::factorization::{compose, identity, is_morphism, shift, shift_map, theta0, theta1, ModuleFactorization, Morphism};
use crate::matrix::{MatOps, Matrix, TwistOps};
use crate::ring::FactorRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Adjunction {
    Theta0Pr0,
    Pr0STheta0,
    Theta1Pr1,
    Pr1Theta0,
}

pub const ALL_ADJUNCTIONS: [Adjunction; 4] =
    [Adjunction::Theta0Pr0, Adjunction::Pr0STheta0, Adjunction::Theta1Pr1, Adjunction::Pr1Theta0];

impl Adjunction {
    pub fn name(self) -> &'static str {
        match self {
            Adjunction::Theta0Pr0 => "theta0 -| pr0",
            Adjunction::Pr0STheta0 => "pr0 -| S theta0",
            Adjunction::Theta1Pr1 => "theta1 -| pr1",
            Adjunction::Pr1Theta0 => "pr1 -| theta0",
        }
    }

    /// Whether the projection is the left adjoint.
    pub fn projection_is_left(self) -> bool {
        matches!(self, Adjunction::Pr0STheta0 | Adjunction::Pr1Theta0)
    }

    /// The factorization-valued functor on a free module of rank `m`.
    pub fn embed<R: FactorRing>(self, ring: &R, m: usize) -> ModuleFactorization<R::El> {
        match self {
            Adjunction::Theta0Pr0 | Adjunction::Pr1Theta0 => theta0(ring, m),
            Adjunction::Pr0STheta0 => shift(ring, &theta0(ring, m)),
            Adjunction::Theta1Pr1 => theta1(ring, m),
        }
    }

    pub fn embed_map<R: FactorRing>(self, ring: &R, a: &Matrix<R::El>) -> Morphism<R::El> {
        match self {
            Adjunction::Theta0Pr0 | Adjunction::Pr1Theta0 => crate::factorization::theta0_map::<R>(a),
            Adjunction::Pr0STheta0 => shift_map(ring, &crate::factorization::theta0_map::<R>(a)),
            Adjunction::Theta1Pr1 => crate::factorization::theta1_map(ring, a),
        }
    }

    /// The projection functor on objects: the rank of `X0` or `X1`.
    pub fn project<E>(self, x: &ModuleFactorization<E>) -> usize {
        match self {
            Adjunction::Theta0Pr0 | Adjunction::Pr0STheta0 => x.n0,
            Adjunction::Theta1Pr1 | Adjunction::Pr1Theta0 => x.n1,
        }
    }

    pub fn project_map<E: Clone>(self, f: &Morphism<E>) -> Matrix<E> {
        match self {
            Adjunction::Theta0Pr0 | Adjunction::Pr0STheta0 => f.f0.clone(),
            Adjunction::Theta1Pr1 | Adjunction::Pr1Theta0 => f.f1.clone(),
        }
    }

    /// Module map to factorization morphism. `x` is the factorization
    /// argument of the hom-sets.
    pub fn to_morphism<R: FactorRing>(self, ring: &R, x: &ModuleFactorization<R::El>, g: &Matrix<R::El>) -> Morphism<R::El> {
        match self {
            Adjunction::Theta0Pr0 => Morphism { f0: g.clone(), f1: ring.mat_mul(g, &x.d0) },
            Adjunction::Pr0STheta0 => Morphism {
                f0: g.clone(),
                f1: ring.mat_neg(&ring.mat_mul(&ring.mat_sigma_inv(&x.d1), &ring.mat_sigma_inv(g))),
            },
            Adjunction::Theta1Pr1 => Morphism { f0: ring.mat_mul(&ring.mat_sigma(g), &x.d1), f1: g.clone() },
            Adjunction::Pr1Theta0 => Morphism { f0: ring.mat_mul(&x.d0, g), f1: g.clone() },
        }
    }

    /// Factorization morphism to module map.
    pub fn to_module_map<E: Clone>(self, f: &Morphism<E>) -> Matrix<E> {
        self.project_map(f)
    }

    /// Source and target of the factorization side of the hom-bijection at `(m, x)`.
    pub fn morphism_ends<R: FactorRing>(
        self,
        ring: &R,
        m: usize,
        x: &ModuleFactorization<R::El>,
    ) -> (ModuleFactorization<R::El>, ModuleFactorization<R::El>) {
        if self.projection_is_left() {
            (x.clone(), self.embed(ring, m))
        } else {
            (self.embed(ring, m), x.clone())
        }
    }

    /// Shape of the module side of the hom-bijection at `(m, x)`.
    pub fn module_map_shape<E>(self, m: usize, x: &ModuleFactorization<E>) -> (usize, usize) {
        if self.projection_is_left() {
            (self.project(x), m)
        } else {
            (m, self.project(x))
        }
    }
}

/// Outcome of checking one adjunction on one sample.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdjunctionCheck {
    pub round_trip: bool,
    pub images_are_morphisms: bool,
    pub triangle_module: bool,
    pub triangle_factorization: bool,
    pub naturality: bool,
    pub failures: Vec<String>,
}

impl AdjunctionCheck {
    pub fn ok(&self) -> bool {
        self.round_trip && self.images_are_morphisms && self.triangle_module && self.triangle_factorization && self.naturality
    }
}

/// Sample data for [`check_adjunction`]: a module map `g` in the module-side
/// hom-set at `(m, x)`, a morphism `f` in the factorization-side hom-set,
/// and maps `a: M' -> M` (or `M -> M'`) and `b: X -> X'` (or `X' -> X`) for
/// naturality, with their objects.
pub struct AdjunctionSample<'a, E> {
    pub m: usize,
    pub x: &'a ModuleFactorization<E>,
    pub g: &'a Matrix<E>,
    pub f: &'a Morphism<E>,
    pub other_m: usize,
    pub a: &'a Matrix<E>,
    pub other_x: &'a ModuleFactorization<E>,
    pub b: &'a Morphism<E>,
}

pub fn check_adjunction<R: FactorRing>(
    ring: &R,
    adj: Adjunction,
    s: &AdjunctionSample<'_, R::El>,
) -> crate::Result<AdjunctionCheck> {
    let mut out = AdjunctionCheck::default();
    let (src, dst) = adj.morphism_ends(ring, s.m, s.x);

    let phi_g = adj.to_morphism(ring, s.x, s.g);
    out.images_are_morphisms = is_morphism(ring, &src, &dst, &phi_g)? && is_morphism(ring, &src, &dst, s.f)?;
    if !out.images_are_morphisms {
        out.failures.push(format!("{}: image of g or sample f is not a morphism", adj.name()));
    }
    out.round_trip = adj.to_module_map(&phi_g) == *s.g && adj.to_morphism(ring, s.x, &adj.to_module_map(s.f)) == *s.f;
    if !out.round_trip {
        out.failures.push(format!("{}: bijections are not mutually inverse", adj.name()));
    }

    // units and counits
    let m = s.m;
    let x = s.x;
    let e = adj.embed(ring, m);
    if adj.projection_is_left() {
        // pr -| E: eta_X = phi(id_{pr X}): X -> E pr X, eps_M = phi^-1(id_{E M}): pr E M -> M
        let eta_x = adj.to_morphism(ring, x, &ring.mat_identity(adj.project(x)));
        let eps_prx = adj.to_module_map(&identity(ring, &adj.embed(ring, adj.project(x))));
        out.triangle_module = ring.mat_mul(&adj.project_map(&eta_x), &eps_prx) == ring.mat_identity(adj.project(x));
        let eta_em = adj.to_morphism(ring, &e, &ring.mat_identity(adj.project(&e)));
        let eps_m = adj.to_module_map(&identity(ring, &e));
        out.triangle_factorization = compose(ring, &eta_em, &adj.embed_map(ring, &eps_m)) == identity(ring, &e);
    } else {
        // E -| pr: eta_M = phi^-1(id_{E M}): M -> pr E M, eps_X = phi(id_{pr X}): E pr X -> X
        let eta_m = adj.to_module_map(&identity(ring, &e));
        let eps_em = adj.to_morphism(ring, &e, &ring.mat_identity(adj.project(&e)));
        out.triangle_factorization = compose(ring, &adj.embed_map(ring, &eta_m), &eps_em) == identity(ring, &e);
        let px = adj.project(x);
        let eta_prx = adj.to_module_map(&identity(ring, &adj.embed(ring, px)));
        let eps_x = adj.to_morphism(ring, x, &ring.mat_identity(px));
        out.triangle_module = ring.mat_mul(&eta_prx, &adj.project_map(&eps_x)) == ring.mat_identity(px);
    }
    if !out.triangle_module || !out.triangle_factorization {
        out.failures.push(format!("{}: triangle identity fails", adj.name()));
    }

    // naturality of phi^-1 along a and b
    out.naturality = if adj.projection_is_left() {
        // f: X -> E M, a: M -> M', b: X' -> X; phi^-1(b f E(a)) = pr(b) phi^-1(f) a
        let lhs = adj.to_module_map(&compose(ring, &compose(ring, s.b, s.f), &adj.embed_map(ring, s.a)));
        let rhs = ring.mat_mul(&ring.mat_mul(&adj.project_map(s.b), &adj.to_module_map(s.f)), s.a);
        let src2 = s.other_x;
        let dst2 = adj.embed(ring, s.other_m);
        let whole = compose(ring, &compose(ring, s.b, s.f), &adj.embed_map(ring, s.a));
        lhs == rhs && is_morphism(ring, src2, &dst2, &whole)?
    } else {
        // f: E M -> X, a: M' -> M, b: X -> X'; phi^-1(E(a) f b) = a phi^-1(f) pr(b)
        let whole = compose(ring, &compose(ring, &adj.embed_map(ring, s.a), s.f), s.b);
        let lhs = adj.to_module_map(&whole);
        let rhs = ring.mat_mul(&ring.mat_mul(s.a, &adj.to_module_map(s.f)), &adj.project_map(s.b));
        lhs == rhs && is_morphism(ring, &adj.embed(ring, s.other_m), s.other_x, &whole)?
    };
    if !out.naturality {
        out.failures.push(format!("{}: naturality square fails", adj.name()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::ModuleFactorization;
    use crate::rings::Integers;
    use num_bigint::BigInt;

    fn zm(r: usize, c: usize, v: &[i64]) -> Matrix<BigInt> {
        Matrix::from_vec(r, c, v.iter().map(|&a| BigInt::from(a)).collect()).unwrap()
    }

    #[test]
    fn z6_bijections_and_units() {
        let z = Integers::new(BigInt::from(6)).unwrap();
        let x = ModuleFactorization::new(&z, zm(1, 1, &[2]), zm(1, 1, &[3])).unwrap();
        for adj in ALL_ADJUNCTIONS {
            let g = zm(1, 1, &[5]);
            let f = adj.to_morphism(&z, &x, &zm(1, 1, &[-2]));
            let a = zm(1, 1, &[3]);
            let b = identity(&z, &x);
            let s = AdjunctionSample { m: 1, x: &x, g: &g, f: &f, other_m: 1, a: &a, other_x: &x, b: &b };
            let c = check_adjunction(&z, adj, &s).unwrap();
            assert!(c.ok(), "{:?}", c.failures);
        }
        // unit of theta0 -| pr0 at M is the identity matrix
        let e = theta0(&z, 2);
        assert_eq!(Adjunction::Theta0Pr0.to_module_map(&identity(&z, &e)), z.mat_identity(2));
        // unit of pr1 -| theta0 at X is the morphism (D0X, I): X -> theta0(n1)
        let eta = Adjunction::Pr1Theta0.to_morphism(&z, &x, &z.mat_identity(1));
        assert_eq!(eta, Morphism::new(zm(1, 1, &[2]), zm(1, 1, &[1])));
        assert!(is_morphism(&z, &x, &theta0(&z, 1), &eta).unwrap());
    }
}
