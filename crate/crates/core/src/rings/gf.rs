use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::ring::EuclideanDomain;
use crate::rings::fpx::{FpPoly, FpX};

/// An element of `F_{p^e}`: exactly `e` coefficients `a0 + a1*g + ...` in the fixed generator `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfEl(pub Vec<u32>);

/// Built-in defining polynomials (monic, ascending coefficients).
const MODULI: &[(u32, usize, &[u32])] = &[
    (2, 1, &[0, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 1, &[0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 1, &[0, 1]),
    (5, 2, &[2, 4, 1]),
];

pub fn default_modulus(p: u32, e: usize) -> Option<Vec<u32>> {
    MODULI.iter().find(|(q, d, _)| *q == p && *d == e).map(|(_, _, m)| m.to_vec())
}

/// The finite field `F_p[g]/(m(g))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u32,
    e: usize,
    modulus: Vec<u32>,
}

impl Gf {
    /// Field with the built-in modulus for `(p, e)`.
    pub fn new(p: u32, e: usize) -> crate::Result<Self> {
        let m = default_modulus(p, e).ok_or_else(|| {
            crate::Error::InvalidInput(format!("no built-in modulus for F_{p}^{e}; pass one explicitly"))
        })?;
        Gf::with_modulus(p, m)
    }

    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> crate::Result<Self> {
        let base = FpX::new(p)?;
        let m = base.from_coeffs(&modulus.iter().map(|&c| c as i64).collect::<Vec<_>>());
        if m.0 != modulus || m.0.last() != Some(&1) || m.0.len() < 2 {
            return Err(crate::Error::InvalidInput("modulus must be monic, reduced, of degree >= 1".into()));
        }
        if !irreducible(&base, &m) {
            return Err(crate::Error::InvalidInput("modulus is reducible".into()));
        }
        Ok(Gf { p, e: modulus.len() - 1, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn degree(&self) -> usize {
        self.e
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.e as u32)
    }

    pub fn zero(&self) -> GfEl {
        GfEl(vec![0; self.e])
    }
    pub fn one(&self) -> GfEl {
        self.scalar(1)
    }
    pub fn scalar(&self, c: i64) -> GfEl {
        let mut v = vec![0; self.e];
        v[0] = c.rem_euclid(self.p as i64) as u32;
        GfEl(v)
    }
    /// The generator `g`.
    pub fn gen(&self) -> GfEl {
        if self.e == 1 {
            // g is the root of the linear modulus x - c
            return GfEl(vec![(self.p - self.modulus[0]) % self.p]);
        }
        let mut v = vec![0; self.e];
        v[1] = 1;
        GfEl(v)
    }
    pub fn from_coeffs(&self, cs: &[i64]) -> GfEl {
        let fx = FpX::new(self.p).expect("prime checked at construction");
        let f = fx.from_coeffs(cs);
        self.reduce(&f)
    }

    fn reduce(&self, f: &FpPoly) -> GfEl {
        let fx = FpX::new(self.p).expect("prime checked at construction");
        let (_, r) = fx.div_rem(f, &FpPoly(self.modulus.clone()));
        let mut v = r.0;
        v.resize(self.e, 0);
        GfEl(v)
    }

    pub fn is_zero(&self, a: &GfEl) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &GfEl, b: &GfEl) -> GfEl {
        GfEl(a.0.iter().zip(&b.0).map(|(&x, &y)| ((x as u64 + y as u64) % self.p as u64) as u32).collect())
    }
    pub fn neg(&self, a: &GfEl) -> GfEl {
        GfEl(a.0.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect())
    }
    pub fn sub(&self, a: &GfEl, b: &GfEl) -> GfEl {
        self.add(a, &self.neg(b))
    }
    pub fn mul(&self, a: &GfEl, b: &GfEl) -> GfEl {
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.e - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top
        for k in (self.e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (j, &mj) in self.modulus[..self.e].iter().enumerate() {
                let idx = k - self.e + j;
                prod[idx] = (prod[idx] + p * p - c * mj as u64 % p) % p;
            }
        }
        prod.truncate(self.e);
        GfEl(prod.into_iter().map(|x| x as u32).collect())
    }
    pub fn pow(&self, a: &GfEl, mut k: u64) -> GfEl {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }
    pub fn inv(&self, a: &GfEl) -> Option<GfEl> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.order() - 2))
        }
    }
    /// `a -> a^p`.
    pub fn frobenius(&self, a: &GfEl) -> GfEl {
        self.pow(a, self.p as u64)
    }
    /// `a -> a^(p^(e-1))`, the inverse of the Frobenius.
    pub fn frobenius_inv(&self, a: &GfEl) -> GfEl {
        let mut r = a.clone();
        for _ in 1..self.e {
            r = self.frobenius(&r);
        }
        r
    }
    /// `k`-th power of the Frobenius, `k` taken modulo `e`.
    pub fn frobenius_pow(&self, a: &GfEl, k: i64) -> GfEl {
        let k = k.rem_euclid(self.e as i64);
        let mut r = a.clone();
        for _ in 0..k {
            r = self.frobenius(&r);
        }
        r
    }

    /// All field elements in lexicographic coefficient order.
    pub fn elements(&self) -> Vec<GfEl> {
        let p = self.p as u64;
        (0..self.order())
            .map(|mut idx| {
                GfEl(
                    (0..self.e)
                        .map(|_| {
                            let c = (idx % p) as u32;
                            idx /= p;
                            c
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

fn irreducible(fx: &FpX, m: &FpPoly) -> bool {
    let d = m.degree().unwrap_or(0);
    if d <= 1 {
        return d == 1;
    }
    for k in 1..=d / 2 {
        let monics = fx.bounded_elements(k, usize::MAX).expect("unbounded");
        for low in monics {
            let mut c = low.0.clone();
            c.resize(k, 0);
            c.push(1);
            if fx.exact_div(m, &FpPoly(c)).is_some() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_generator_has_order_three() {
        let f = Gf::new(2, 2).unwrap();
        let g = f.gen();
        assert_ne!(f.mul(&g, &g), f.one());
        assert_eq!(f.pow(&g, 3), f.one());
    }

    #[test]
    fn frobenius_round_trip() {
        for (p, e) in [(2, 2), (2, 3), (3, 2), (5, 2)] {
            let f = Gf::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius_inv(&f.frobenius(&a)), a);
                if let Some(ai) = f.inv(&a) {
                    assert_eq!(f.mul(&a, &ai), f.one());
                }
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(Gf::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(Gf::with_modulus(3, vec![1, 0, 1]).is_ok());
    }
}
