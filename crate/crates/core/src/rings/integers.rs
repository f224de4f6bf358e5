use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use crate::ring::{EuclideanDomain, FactorRing, RingKind, RingOps};

/// The Euclidean domain of integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Zz;

impl RingOps for Zz {
    type El = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

impl EuclideanDomain for Zz {
    /// Symmetric remainder: `|r| <= |b|/2`.
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let (mut q, mut r) = a.div_mod_floor(b);
        let babs = b.abs();
        if (&r.abs() << 1u32) > babs {
            if b.is_positive() == r.is_positive() {
                r -= b;
                q += 1;
            } else {
                r += b;
                q -= 1;
            }
        }
        (q, r)
    }

    fn cmp_size(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.abs().cmp(&b.abs())
    }

    fn normalize(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-a, BigInt::from(-1))
        } else {
            (a.clone(), BigInt::one())
        }
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }

    fn unit_inverse(&self, a: &BigInt) -> BigInt {
        a.clone()
    }

    fn residues(&self, d: &BigInt, limit: usize) -> Option<Vec<BigInt>> {
        let m = d.abs();
        if m > BigInt::from(limit) {
            return None;
        }
        let m: i64 = i64::try_from(&m).ok()?;
        Some((0..m).map(BigInt::from).collect())
    }

    fn bounded_elements(&self, bound: usize, limit: usize) -> Option<Vec<BigInt>> {
        if 2 * bound + 1 > limit {
            return None;
        }
        let b = bound as i64;
        Some((-b..=b).map(BigInt::from).collect())
    }
}

/// The integers with a nonzero distinguished element `omega`; `sigma` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integers {
    omega: BigInt,
}

impl Integers {
    pub fn new(omega: BigInt) -> crate::Result<Self> {
        if omega.is_zero() {
            return Err(crate::Error::InvalidInput("omega must be nonzero".into()));
        }
        Ok(Integers { omega })
    }
}

impl RingOps for Integers {
    type El = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

impl FactorRing for Integers {
    type Base = Zz;

    fn base(&self) -> &Zz {
        &Zz
    }
    fn kind(&self) -> RingKind {
        RingKind::Integers
    }
    fn omega(&self) -> BigInt {
        self.omega.clone()
    }
    fn sigma(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn sigma_inv(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn base_rank(&self) -> usize {
        1
    }
    fn to_base(&self, a: &BigInt) -> Vec<BigInt> {
        vec![a.clone()]
    }
    fn from_base(&self, coords: &[BigInt]) -> BigInt {
        coords[0].clone()
    }
    fn base_scalar(&self, b: &BigInt) -> BigInt {
        b.clone()
    }
    fn reduce_mod_omega(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.omega.abs())
    }
    fn ring_generators(&self) -> Vec<BigInt> {
        vec![BigInt::one()]
    }
    fn left_div_rem(&self, b: &BigInt, a: &BigInt) -> Option<(BigInt, BigInt)> {
        Some(Zz.div_rem(b, a))
    }
    fn cmp_norm(&self, a: &BigInt, b: &BigInt) -> Option<Ordering> {
        Some(Zz.cmp_size(a, b))
    }
    fn left_normalizer(&self, a: &BigInt) -> Option<BigInt> {
        Some(Zz.normalize(a).1)
    }
    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
    fn random_element(&self, rng: &mut dyn RngCore, bound: usize) -> BigInt {
        let b = bound as i64;
        BigInt::from(rng.gen_range(-b..=b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_remainder() {
        for a in -20i64..=20 {
            for b in [-7i64, -3, -2, 2, 3, 7] {
                let (q, r) = Zz.div_rem(&BigInt::from(a), &BigInt::from(b));
                assert_eq!(q * b + &r, BigInt::from(a));
                assert!(r.abs() * 2 <= BigInt::from(b.abs()));
            }
        }
    }

    #[test]
    fn xgcd_bezout() {
        let (g, s, t) = Zz.xgcd(&BigInt::from(12), &BigInt::from(-18));
        assert_eq!(g.abs(), BigInt::from(6));
        assert_eq!(s * 12 + t * -18, g);
    }

    #[test]
    fn reduction_is_nonnegative() {
        let r = Integers::new(BigInt::from(-6)).unwrap();
        assert_eq!(r.reduce_mod_omega(&BigInt::from(-1)), BigInt::from(5));
    }
}
