use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::{Rng, RngCore};

use crate::ring::{EuclideanDomain, FactorRing, RingKind, RingOps};

/// A polynomial over a prime field, coefficients in ascending degree with no
/// trailing zeros (the zero polynomial is the empty list).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FpPoly(pub Vec<u32>);

impl FpPoly {
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    fn trimmed(mut v: Vec<u32>) -> FpPoly {
        while v.last() == Some(&0) {
            v.pop();
        }
        FpPoly(v)
    }

    pub fn monomial(c: u32, k: usize) -> FpPoly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        FpPoly::trimmed(v)
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let p64 = p as u64;
    let mut base = a as u64 % p64;
    let mut acc = 1u64 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The Euclidean domain `F_p[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpX {
    p: u32,
}

impl FpX {
    pub fn new(p: u32) -> crate::Result<Self> {
        if !is_prime(p) || p > (1 << 31) {
            return Err(crate::Error::InvalidInput(alloc::format!("{p} is not a supported prime")));
        }
        Ok(FpX { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn constant(&self, c: i64) -> FpPoly {
        FpPoly::trimmed(vec![c.rem_euclid(self.p as i64) as u32])
    }

    pub fn x(&self) -> FpPoly {
        FpPoly(vec![0, 1])
    }

    pub fn from_coeffs(&self, cs: &[i64]) -> FpPoly {
        FpPoly::trimmed(cs.iter().map(|c| c.rem_euclid(self.p as i64) as u32).collect())
    }

    fn scale(&self, a: &FpPoly, c: u32) -> FpPoly {
        let p = self.p as u64;
        FpPoly::trimmed(a.0.iter().map(|&x| (x as u64 * c as u64 % p) as u32).collect())
    }
}

impl RingOps for FpX {
    type El = FpPoly;

    fn zero(&self) -> FpPoly {
        FpPoly(Vec::new())
    }
    fn one(&self) -> FpPoly {
        FpPoly(vec![1])
    }
    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.0.len().max(b.0.len());
        let p = self.p as u64;
        let v = (0..n)
            .map(|i| {
                let x = *a.0.get(i).unwrap_or(&0) as u64 + *b.0.get(i).unwrap_or(&0) as u64;
                (x % p) as u32
            })
            .collect();
        FpPoly::trimmed(v)
    }
    fn neg(&self, a: &FpPoly) -> FpPoly {
        FpPoly(a.0.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect())
    }
    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let p = self.p as u64;
        let mut v = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                v[i + j] = (v[i + j] + x as u64 * y as u64) % p;
            }
        }
        FpPoly::trimmed(v.into_iter().map(|x| x as u32).collect())
    }
    fn from_i64(&self, n: i64) -> FpPoly {
        self.constant(n)
    }
    fn is_zero(&self, a: &FpPoly) -> bool {
        a.0.is_empty()
    }
}

impl EuclideanDomain for FpX {
    fn div_rem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let db = b.degree().expect("division by zero polynomial");
        let p = self.p as u64;
        let lead_inv = inv_mod(b.0[db], self.p) as u64;
        let mut r: Vec<u64> = a.0.iter().map(|&x| x as u64).collect();
        if r.len() <= db {
            return (self.zero(), a.clone());
        }
        let mut q = vec![0u64; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = r[k] % p * lead_inv % p;
            if c == 0 {
                continue;
            }
            q[k - db] = c;
            for (j, &bj) in b.0.iter().enumerate() {
                let idx = k - db + j;
                r[idx] = (r[idx] + p * p - c * bj as u64 % p) % p;
            }
        }
        r.truncate(db);
        (
            FpPoly::trimmed(q.into_iter().map(|x| x as u32).collect()),
            FpPoly::trimmed(r.into_iter().map(|x| x as u32).collect()),
        )
    }

    fn cmp_size(&self, a: &FpPoly, b: &FpPoly) -> Ordering {
        a.0.len().cmp(&b.0.len())
    }

    fn normalize(&self, a: &FpPoly) -> (FpPoly, FpPoly) {
        match a.0.last() {
            None => (a.clone(), self.one()),
            Some(&lead) => {
                let inv = inv_mod(lead, self.p);
                (self.scale(a, inv), FpPoly(vec![inv]))
            }
        }
    }

    fn is_unit(&self, a: &FpPoly) -> bool {
        a.0.len() == 1
    }

    fn unit_inverse(&self, a: &FpPoly) -> FpPoly {
        FpPoly(vec![inv_mod(a.0[0], self.p)])
    }

    fn residues(&self, d: &FpPoly, limit: usize) -> Option<Vec<FpPoly>> {
        self.bounded_elements(d.degree().expect("nonzero modulus"), limit)
    }

    fn bounded_elements(&self, bound: usize, limit: usize) -> Option<Vec<FpPoly>> {
        let p = self.p as usize;
        let mut count = 1usize;
        for _ in 0..bound {
            count = count.checked_mul(p)?;
            if count > limit {
                return None;
            }
        }
        Some(
            (0..count)
                .map(|mut idx| {
                    let v = (0..bound)
                        .map(|_| {
                            let c = (idx % p) as u32;
                            idx /= p;
                            c
                        })
                        .collect();
                    FpPoly::trimmed(v)
                })
                .collect(),
        )
    }
}

/// `F_p[x]` with a nonzero distinguished polynomial `omega`; central, so `sigma` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFp {
    base: FpX,
    omega: FpPoly,
}

impl PolyFp {
    pub fn new(p: u32, omega: FpPoly) -> crate::Result<Self> {
        let base = FpX::new(p)?;
        if omega.0.is_empty() || omega.0.iter().any(|&c| c >= p) {
            return Err(crate::Error::InvalidInput("omega must be a nonzero reduced polynomial".into()));
        }
        Ok(PolyFp { base, omega })
    }

    pub fn p(&self) -> u32 {
        self.base.p
    }

    pub fn field(&self) -> &FpX {
        &self.base
    }
}

impl RingOps for PolyFp {
    type El = FpPoly;

    fn zero(&self) -> FpPoly {
        self.base.zero()
    }
    fn one(&self) -> FpPoly {
        self.base.one()
    }
    fn add(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.base.add(a, b)
    }
    fn neg(&self, a: &FpPoly) -> FpPoly {
        self.base.neg(a)
    }
    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.base.mul(a, b)
    }
    fn from_i64(&self, n: i64) -> FpPoly {
        self.base.constant(n)
    }
    fn is_zero(&self, a: &FpPoly) -> bool {
        a.0.is_empty()
    }
}

impl FactorRing for PolyFp {
    type Base = FpX;

    fn base(&self) -> &FpX {
        &self.base
    }
    fn kind(&self) -> RingKind {
        RingKind::PolyOverPrimeField { p: self.base.p }
    }
    fn omega(&self) -> FpPoly {
        self.omega.clone()
    }
    fn sigma(&self, a: &FpPoly) -> FpPoly {
        a.clone()
    }
    fn sigma_inv(&self, a: &FpPoly) -> FpPoly {
        a.clone()
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn base_rank(&self) -> usize {
        1
    }
    fn to_base(&self, a: &FpPoly) -> Vec<FpPoly> {
        vec![a.clone()]
    }
    fn from_base(&self, coords: &[FpPoly]) -> FpPoly {
        coords[0].clone()
    }
    fn base_scalar(&self, b: &FpPoly) -> FpPoly {
        b.clone()
    }
    fn reduce_mod_omega(&self, a: &FpPoly) -> FpPoly {
        self.base.div_rem(a, &self.omega).1
    }
    fn ring_generators(&self) -> Vec<FpPoly> {
        vec![self.base.one(), self.base.x()]
    }
    fn left_div_rem(&self, b: &FpPoly, a: &FpPoly) -> Option<(FpPoly, FpPoly)> {
        Some(self.base.div_rem(b, a))
    }
    fn cmp_norm(&self, a: &FpPoly, b: &FpPoly) -> Option<Ordering> {
        Some(self.base.cmp_size(a, b))
    }
    fn left_normalizer(&self, a: &FpPoly) -> Option<FpPoly> {
        Some(self.base.normalize(a).1)
    }
    fn unit_inverse(&self, a: &FpPoly) -> Option<FpPoly> {
        if a.0.len() == 1 {
            Some(self.base.unit_inverse(a))
        } else {
            None
        }
    }
    fn random_element(&self, rng: &mut dyn RngCore, bound: usize) -> FpPoly {
        let p = self.base.p;
        FpPoly::trimmed((0..bound).map(|_| rng.gen_range(0..p)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let f = FpX::new(3).unwrap();
        let a = f.from_coeffs(&[1, 2, 0, 1, 2]);
        let b = f.from_coeffs(&[2, 0, 2]);
        let (q, r) = f.div_rem(&a, &b);
        assert_eq!(f.add(&f.mul(&q, &b), &r), a);
        assert!(r.0.len() < b.0.len());
    }

    #[test]
    fn normalize_is_monic() {
        let f = FpX::new(5).unwrap();
        let a = f.from_coeffs(&[1, 3]);
        let (c, u) = f.normalize(&a);
        assert_eq!(c.0.last(), Some(&1));
        assert_eq!(f.mul(&u, &a), c);
    }

    #[test]
    fn bounded_elements_count() {
        let f = FpX::new(2).unwrap();
        let all = f.bounded_elements(3, 100).unwrap();
        assert_eq!(all.len(), 8);
        assert!(f.bounded_elements(8, 100).is_none());
    }
}
