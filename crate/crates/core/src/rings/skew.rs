use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::{Rng, RngCore};

use crate::ring::{FactorRing, RingKind, RingOps};
use crate::rings::fpx::{FpPoly, FpX};
use crate::rings::gf::{Gf, GfEl};

/// A skew polynomial `sum a_i x^i` with coefficients in `F_q`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewPoly(pub Vec<GfEl>);

impl SkewPoly {
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

/// `F_q[x; Frob]` with `x a = a^p x` and distinguished element `omega = x`.
///
/// `sigma` raises every coefficient to the `p`-th power. The centre contains
/// `F_p[y]` with `y = x^e`, over which the ring is free with basis `g^a x^b`
/// (`a, b < e`); that subring is the base for the linear solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewGf {
    field: Gf,
    base: FpX,
}

impl SkewGf {
    pub fn new(field: Gf) -> crate::Result<Self> {
        let base = FpX::new(field.p())?;
        Ok(SkewGf { field, base })
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn x(&self) -> SkewPoly {
        SkewPoly(vec![self.field.zero(), self.field.one()])
    }

    pub fn constant(&self, a: GfEl) -> SkewPoly {
        self.trimmed(vec![a])
    }

    pub fn from_coeffs(&self, cs: Vec<GfEl>) -> SkewPoly {
        self.trimmed(cs)
    }

    fn trimmed(&self, mut v: Vec<GfEl>) -> SkewPoly {
        while v.last().is_some_and(|c| self.field.is_zero(c)) {
            v.pop();
        }
        SkewPoly(v)
    }

    fn coeff_twist(&self, a: &SkewPoly, k: i64) -> SkewPoly {
        SkewPoly(a.0.iter().map(|c| self.field.frobenius_pow(c, k)).collect())
    }

    fn lead(&self, a: &SkewPoly) -> Option<GfEl> {
        a.0.last().cloned()
    }
}

impl RingOps for SkewGf {
    type El = SkewPoly;

    fn zero(&self) -> SkewPoly {
        SkewPoly(Vec::new())
    }
    fn one(&self) -> SkewPoly {
        SkewPoly(vec![self.field.one()])
    }
    fn add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let n = a.0.len().max(b.0.len());
        let z = self.field.zero();
        let v = (0..n).map(|i| self.field.add(a.0.get(i).unwrap_or(&z), b.0.get(i).unwrap_or(&z))).collect();
        self.trimmed(v)
    }
    fn neg(&self, a: &SkewPoly) -> SkewPoly {
        SkewPoly(a.0.iter().map(|c| self.field.neg(c)).collect())
    }
    fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let e = self.field.degree();
        // twisted copies of b: twisted[k] = sigma^k(b), k < e
        let twisted: Vec<Vec<GfEl>> = (0..e.min(a.0.len()))
            .map(|k| b.0.iter().map(|c| self.field.frobenius_pow(c, k as i64)).collect())
            .collect();
        let mut v = vec![self.field.zero(); a.0.len() + b.0.len() - 1];
        for (i, ai) in a.0.iter().enumerate() {
            if self.field.is_zero(ai) {
                continue;
            }
            for (j, bj) in twisted[i % e].iter().enumerate() {
                let t = self.field.mul(ai, bj);
                v[i + j] = self.field.add(&v[i + j], &t);
            }
        }
        self.trimmed(v)
    }
    fn from_i64(&self, n: i64) -> SkewPoly {
        self.trimmed(vec![self.field.scalar(n)])
    }
    fn is_zero(&self, a: &SkewPoly) -> bool {
        a.0.is_empty()
    }
}

impl FactorRing for SkewGf {
    type Base = FpX;

    fn base(&self) -> &FpX {
        &self.base
    }
    fn kind(&self) -> RingKind {
        RingKind::SkewPolyOverGF { p: self.field.p(), e: self.field.degree() }
    }
    fn omega(&self) -> SkewPoly {
        self.x()
    }
    fn sigma(&self, a: &SkewPoly) -> SkewPoly {
        self.coeff_twist(a, 1)
    }
    fn sigma_inv(&self, a: &SkewPoly) -> SkewPoly {
        self.coeff_twist(a, -1)
    }
    fn is_commutative(&self) -> bool {
        self.field.degree() == 1
    }
    fn base_rank(&self) -> usize {
        let e = self.field.degree();
        e * e
    }
    /// Coordinate `b*e + a` holds the `F_p[y]`-coefficient of `g^a x^b`.
    fn to_base(&self, u: &SkewPoly) -> Vec<FpPoly> {
        let e = self.field.degree();
        let mut coords = vec![Vec::<u32>::new(); e * e];
        for (i, c) in u.0.iter().enumerate() {
            let (k, b) = (i / e, i % e);
            for (a, &ca) in c.0.iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                let slot = &mut coords[b * e + a];
                if slot.len() <= k {
                    slot.resize(k + 1, 0);
                }
                slot[k] = ca;
            }
        }
        coords.into_iter().map(FpPoly).collect()
    }
    fn from_base(&self, coords: &[FpPoly]) -> SkewPoly {
        let e = self.field.degree();
        let len = coords.iter().map(|c| c.0.len()).max().unwrap_or(0) * e;
        let mut v = vec![self.field.zero(); len];
        for b in 0..e {
            for a in 0..e {
                for (k, &c) in coords[b * e + a].0.iter().enumerate() {
                    v[k * e + b].0[a] = c;
                }
            }
        }
        self.trimmed(v)
    }
    fn base_scalar(&self, f: &FpPoly) -> SkewPoly {
        let e = self.field.degree();
        let mut v = vec![self.field.zero(); f.0.len() * e];
        for (k, &c) in f.0.iter().enumerate() {
            v[k * e] = self.field.scalar(c as i64);
        }
        self.trimmed(v)
    }
    fn reduce_mod_omega(&self, a: &SkewPoly) -> SkewPoly {
        match a.0.first() {
            Some(c) => self.constant(c.clone()),
            None => self.zero(),
        }
    }
    fn ring_generators(&self) -> Vec<SkewPoly> {
        vec![self.one(), self.constant(self.field.gen()), self.x()]
    }
    /// Left division by `a`: `b = q*a + r`, `deg r < deg a`.
    fn left_div_rem(&self, b: &SkewPoly, a: &SkewPoly) -> Option<(SkewPoly, SkewPoly)> {
        let da = a.degree()?;
        let la = self.lead(a)?;
        let mut r = b.clone();
        let mut q = self.zero();
        while let Some(dr) = r.degree() {
            if dr < da {
                break;
            }
            let shift = dr - da;
            let lt = self.field.frobenius_pow(&la, shift as i64);
            let c = self.field.mul(&self.lead(&r)?, &self.field.inv(&lt)?);
            let mut mono = vec![self.field.zero(); shift + 1];
            mono[shift] = c;
            let mono = SkewPoly(mono);
            r = self.sub(&r, &self.mul(&mono, a));
            q = self.add(&q, &mono);
        }
        Some((q, r))
    }
    fn cmp_norm(&self, a: &SkewPoly, b: &SkewPoly) -> Option<Ordering> {
        Some(a.0.len().cmp(&b.0.len()))
    }
    /// The constant `u` with `u*a` monic.
    fn left_normalizer(&self, a: &SkewPoly) -> Option<SkewPoly> {
        match self.lead(a) {
            None => Some(self.one()),
            Some(l) => Some(self.constant(self.field.inv(&l)?)),
        }
    }
    fn unit_inverse(&self, a: &SkewPoly) -> Option<SkewPoly> {
        if a.0.len() == 1 {
            Some(self.constant(self.field.inv(&a.0[0])?))
        } else {
            None
        }
    }
    fn random_element(&self, rng: &mut dyn RngCore, bound: usize) -> SkewPoly {
        let p = self.field.p();
        let e = self.field.degree();
        let v = (0..bound).map(|_| GfEl((0..e).map(|_| rng.gen_range(0..p)).collect())).collect();
        self.trimmed(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4x() -> SkewGf {
        SkewGf::new(Gf::new(2, 2).unwrap()).unwrap()
    }

    #[test]
    fn omega_is_normal_on_generators() {
        let r = f4x();
        let w = r.omega();
        for g in r.ring_generators() {
            assert_eq!(r.mul(&w, &g), r.mul(&r.sigma(&g), &w));
        }
    }

    #[test]
    fn sigma_example() {
        // a = alpha x^2 + 1  ->  alpha^2 x^2 + 1
        let r = f4x();
        let f = r.field().clone();
        let alpha = f.gen();
        let a = r.from_coeffs(vec![f.one(), f.zero(), alpha.clone()]);
        let expect = r.from_coeffs(vec![f.one(), f.zero(), f.mul(&alpha, &alpha)]);
        assert_eq!(r.sigma(&a), expect);
        assert_eq!(r.mul(&r.x(), &a), r.mul(&expect, &r.x()));
    }

    #[test]
    fn base_coordinates_round_trip() {
        let r = f4x();
        let f = r.field().clone();
        let a = r.from_coeffs(vec![f.gen(), f.one(), f.zero(), f.gen(), f.one()]);
        let c = r.to_base(&a);
        assert_eq!(c.len(), 4);
        assert_eq!(r.from_base(&c), a);
    }

    #[test]
    fn base_is_central() {
        let r = f4x();
        let f = r.field().clone();
        let y = r.base_scalar(&FpPoly(vec![1, 1]));
        let a = r.from_coeffs(vec![f.gen(), f.one(), f.gen()]);
        assert_eq!(r.mul(&y, &a), r.mul(&a, &y));
    }

    #[test]
    fn left_division() {
        let r = f4x();
        let f = r.field().clone();
        let a = r.from_coeffs(vec![f.one(), f.gen()]);
        let b = r.from_coeffs(vec![f.gen(), f.one(), f.one(), f.gen()]);
        let (q, rem) = r.left_div_rem(&b, &a).unwrap();
        assert_eq!(r.add(&r.mul(&q, &a), &rem), b);
        assert!(rem.0.len() < a.0.len());
    }
}
