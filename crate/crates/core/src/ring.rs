//! Ring abstractions shared by every algebraic routine in the crate.
//!
//! Rings are *objects* carrying their runtime parameters (a prime, a modulus,
//! a group order); elements are plain values that only make sense together with
//! the ring object that produced them.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;

use rand::RngCore;

use crate::matrix::Matrix;

/// Basic ring operations.
pub trait RingOps {
    type El: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Image of an integer under the characteristic map.
    fn from_i64(&self, n: i64) -> Self::El;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::El) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::El) -> bool {
        *a == self.one()
    }
}

/// A commutative Euclidean domain: the base ring over which every linear
/// system in this crate is finally solved.
pub trait EuclideanDomain: RingOps {
    /// `(q, r)` with `a = q*b + r` and `r` smaller than `b`. `b` must be nonzero.
    fn div_rem(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El);

    /// Compares Euclidean sizes (absolute value / degree). Zero is smallest.
    fn cmp_size(&self, a: &Self::El, b: &Self::El) -> Ordering;

    /// Canonical associate of `a` together with the unit `u` with `u*a` canonical.
    fn normalize(&self, a: &Self::El) -> (Self::El, Self::El);

    fn is_unit(&self, a: &Self::El) -> bool;

    /// Inverse of a unit.
    fn unit_inverse(&self, a: &Self::El) -> Self::El;

    /// A complete system of residues modulo nonzero `d`, or `None` when it has
    /// more than `limit` elements.
    fn residues(&self, d: &Self::El, limit: usize) -> Option<Vec<Self::El>>;

    /// All elements of "height" at most `bound` (|n| <= bound for integers,
    /// degree < bound for polynomials), or `None` when there are more than `limit`.
    fn bounded_elements(&self, bound: usize, limit: usize) -> Option<Vec<Self::El>>;

    /// Exact quotient `a / b`, if `b` divides `a`.
    fn exact_div(&self, a: &Self::El, b: &Self::El) -> Option<Self::El> {
        if self.is_zero(b) {
            return if self.is_zero(a) { Some(self.zero()) } else { None };
        }
        let (q, r) = self.div_rem(a, b);
        if self.is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    /// Extended gcd: `(g, s, t)` with `g = s*a + t*b`.
    fn xgcd(&self, a: &Self::El, b: &Self::El) -> (Self::El, Self::El, Self::El) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = core::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = core::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = core::mem::replace(&mut t1, t2);
        }
        (r0, s0, t0)
    }
}

/// The entrywise twist applied to an unknown in a linear system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    Plain,
    Sigma,
    SigmaInv,
}

/// Which concrete family a ring belongs to. Used by the oracle tables that
/// depend on classification facts rather than on generic algorithms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    PolyOverPrimeField { p: u32 },
    SkewPolyOverGF { p: u32, e: usize },
    GroupRingZCn { n: usize },
}

/// A ring `A` with a distinguished regular normal element `omega` and the
/// automorphism `sigma` determined by `omega * a = sigma(a) * omega`.
///
/// Every supported ring is a free module of finite rank over a central
/// Euclidean subring (`Base`), and `sigma` fixes the base pointwise. All maps
/// `u -> C * twist(u) * C'` are therefore base-linear, which is what makes the
/// linear-system solver exact.
pub trait FactorRing: RingOps {
    type Base: EuclideanDomain;

    fn base(&self) -> &Self::Base;
    fn kind(&self) -> RingKind;
    fn omega(&self) -> Self::El;
    fn sigma(&self, a: &Self::El) -> Self::El;
    fn sigma_inv(&self, a: &Self::El) -> Self::El;

    fn is_commutative(&self) -> bool;

    /// Rank of the ring as a module over `Base`.
    fn base_rank(&self) -> usize;
    /// Coordinates over the base; base-linear.
    fn to_base(&self, a: &Self::El) -> Vec<<Self::Base as RingOps>::El>;
    fn from_base(&self, coords: &[<Self::Base as RingOps>::El]) -> Self::El;
    /// Embedding of the base into the ring.
    fn base_scalar(&self, b: &<Self::Base as RingOps>::El) -> Self::El;

    /// Canonical representative of `a` modulo the two-sided ideal `(omega)`.
    fn reduce_mod_omega(&self, a: &Self::El) -> Self::El;

    /// Generators of the ring as a ring (used for exact normality checks).
    fn ring_generators(&self) -> Vec<Self::El>;

    /// Left division `b = q*a + r` with `r` Euclidean-smaller than `a`, for
    /// rings that are left Euclidean. `None` otherwise.
    fn left_div_rem(&self, _b: &Self::El, _a: &Self::El) -> Option<(Self::El, Self::El)> {
        None
    }

    /// Euclidean size comparison for left Euclidean rings.
    fn cmp_norm(&self, _a: &Self::El, _b: &Self::El) -> Option<Ordering> {
        None
    }

    /// A unit `u` with `u*a` in canonical (positive / monic) form.
    fn left_normalizer(&self, _a: &Self::El) -> Option<Self::El> {
        None
    }

    /// Inverse of a unit of the ring, when it is recognisable as one.
    fn unit_inverse(&self, _a: &Self::El) -> Option<Self::El> {
        None
    }

    /// Cyclic decomposition of a module over the quotient with the given
    /// relations, for rings whose quotient is a principal ideal ring they can
    /// compute in: elements `f_i` with `N = (+) A/(omega, f_i)`, omitting zero
    /// summands. `None` when unsupported.
    fn quotient_cyclic_factors(&self, _relations: &Matrix<Self::El>) -> Option<Vec<Self::El>> {
        None
    }

    /// A pseudo-random element of bounded size: integers in `[-bound, bound]`,
    /// polynomial degrees `< bound`.
    fn random_element(&self, rng: &mut dyn RngCore, bound: usize) -> Self::El;

    /// Basis of the ring over its base.
    fn base_basis(&self) -> Vec<Self::El> {
        let r = self.base_rank();
        (0..r)
            .map(|k| {
                let coords: Vec<_> = (0..r)
                    .map(|j| if j == k { self.base().one() } else { self.base().zero() })
                    .collect();
                self.from_base(&coords)
            })
            .collect()
    }

    fn twist(&self, t: Twist, a: &Self::El) -> Self::El {
        match t {
            Twist::Plain => a.clone(),
            Twist::Sigma => self.sigma(a),
            Twist::SigmaInv => self.sigma_inv(a),
        }
    }

    /// Whether the ring is (as implemented) a principal ideal domain on which
    /// Smith normal forms exist.
    fn is_pid(&self) -> bool {
        matches!(self.kind(), RingKind::Integers | RingKind::PolyOverPrimeField { .. })
    }
}
