use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use crate::matrix::Matrix;
use crate::normal_form::smith;
use crate::ring::{EuclideanDomain, FactorRing, RingKind, RingOps};
use crate::rings::fpx::{is_prime, FpX};
use crate::rings::integers::Zz;

/// An element of `Z[x]/(x^n - 1)`: exactly `n` integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupEl(pub Vec<BigInt>);

/// The integral group ring of the cyclic group of order `n`, with `omega = p` prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingZCn {
    n: usize,
    p: BigInt,
}

impl GroupRingZCn {
    pub fn new(n: usize, p: u32) -> crate::Result<Self> {
        if n == 0 {
            return Err(crate::Error::InvalidInput("group order must be positive".into()));
        }
        if !is_prime(p) {
            return Err(crate::Error::InvalidInput(format!("omega = {p} must be a prime integer")));
        }
        Ok(GroupRingZCn { n, p: BigInt::from(p) })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u32 {
        u32::try_from(&self.p).expect("small prime")
    }

    pub fn from_coeffs(&self, cs: &[i64]) -> GroupEl {
        let mut v = vec![BigInt::zero(); self.n];
        for (i, &c) in cs.iter().enumerate() {
            v[i % self.n] += c;
        }
        GroupEl(v)
    }

    /// The group generator `x`.
    pub fn x(&self) -> GroupEl {
        let mut v = vec![BigInt::zero(); self.n];
        v[1 % self.n] += 1;
        GroupEl(v)
    }
}

impl RingOps for GroupRingZCn {
    type El = GroupEl;

    fn zero(&self) -> GroupEl {
        GroupEl(vec![BigInt::zero(); self.n])
    }
    fn one(&self) -> GroupEl {
        self.from_coeffs(&[1])
    }
    fn add(&self, a: &GroupEl, b: &GroupEl) -> GroupEl {
        GroupEl(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }
    fn neg(&self, a: &GroupEl) -> GroupEl {
        GroupEl(a.0.iter().map(|x| -x).collect())
    }
    fn mul(&self, a: &GroupEl, b: &GroupEl) -> GroupEl {
        let mut v = vec![BigInt::zero(); self.n];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    v[(i + j) % self.n] += x * y;
                }
            }
        }
        GroupEl(v)
    }
    fn from_i64(&self, n: i64) -> GroupEl {
        self.from_coeffs(&[n])
    }
    fn is_zero(&self, a: &GroupEl) -> bool {
        a.0.iter().all(Zero::is_zero)
    }
}

impl FactorRing for GroupRingZCn {
    type Base = Zz;

    fn base(&self) -> &Zz {
        &Zz
    }
    fn kind(&self) -> RingKind {
        RingKind::GroupRingZCn { n: self.n }
    }
    fn omega(&self) -> GroupEl {
        let mut v = vec![BigInt::zero(); self.n];
        v[0] = self.p.clone();
        GroupEl(v)
    }
    fn sigma(&self, a: &GroupEl) -> GroupEl {
        a.clone()
    }
    fn sigma_inv(&self, a: &GroupEl) -> GroupEl {
        a.clone()
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn base_rank(&self) -> usize {
        self.n
    }
    fn to_base(&self, a: &GroupEl) -> Vec<BigInt> {
        a.0.clone()
    }
    fn from_base(&self, coords: &[BigInt]) -> GroupEl {
        GroupEl(coords.to_vec())
    }
    fn base_scalar(&self, b: &BigInt) -> GroupEl {
        let mut v = vec![BigInt::zero(); self.n];
        v[0] = b.clone();
        GroupEl(v)
    }
    fn reduce_mod_omega(&self, a: &GroupEl) -> GroupEl {
        GroupEl(a.0.iter().map(|c| c.mod_floor(&self.p)).collect())
    }
    fn ring_generators(&self) -> Vec<GroupEl> {
        vec![self.one(), self.x()]
    }
    fn unit_inverse(&self, a: &GroupEl) -> Option<GroupEl> {
        // only the trivial units +-x^k are recognised
        let nz: Vec<usize> = (0..self.n).filter(|&i| !a.0[i].is_zero()).collect();
        if nz.len() != 1 {
            return None;
        }
        let i = nz[0];
        let c = &a.0[i];
        if !(c.is_one() || (-c).is_one()) {
            return None;
        }
        let mut v = vec![BigInt::zero(); self.n];
        v[(self.n - i) % self.n] = c.clone();
        Some(GroupEl(v))
    }
    /// Smith form over `F_p[x]` of the relations stacked on `(x^n - 1) I`;
    /// a factor equal to `x^n - 1` lifts to `0`.
    fn quotient_cyclic_factors(&self, relations: &Matrix<GroupEl>) -> Option<Vec<GroupEl>> {
        let f = FpX::new(self.prime()).ok()?;
        let n = self.n;
        let reduce = |a: &GroupEl| {
            let cs: Vec<i64> = a.0.iter().map(|c| i64::try_from(c.mod_floor(&self.p)).expect("residue mod p")).collect();
            f.from_coeffs(&cs)
        };
        let mut xn1 = vec![0i64; n + 1];
        xn1[0] = -1;
        xn1[n] = 1;
        let xn1 = f.from_coeffs(&xn1);
        let g = relations.cols();
        let mut rows: Vec<Vec<_>> = (0..relations.rows()).map(|i| relations.row(i).iter().map(reduce).collect()).collect();
        rows.extend((0..g).map(|i| (0..g).map(|j| if i == j { xn1.clone() } else { f.zero() }).collect()));
        let s = smith(&f, &Matrix::from_rows(g, rows));
        Some(
            s.diag
                .iter()
                .filter(|d| !f.is_unit(d))
                .map(|d| {
                    if d.degree() == Some(n) {
                        return self.zero();
                    }
                    let cs: Vec<i64> = d.coeffs().iter().map(|&c| c as i64).collect();
                    self.from_coeffs(&cs)
                })
                .collect(),
        )
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: usize) -> GroupEl {
        let b = bound as i64;
        GroupEl((0..self.n).map(|_| BigInt::from(rng.gen_range(-b..=b))).collect())
    }
}
