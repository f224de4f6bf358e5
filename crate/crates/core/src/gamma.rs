//! The matrix ring `Gamma = [[A, A], [A omega, A]]` and the left
//! `Gamma`-module attached to a factorization.
//!
//! A module element is a column `(x1; x0)` with `x1` in `A^n1`, `x0` in `A^n0`,
//! and `[[a11, a12], [a21 omega, a22]]` acts by
//!
//! ```text
//! top    = a11 x1 + a12 (x0 D0)
//! bottom = a21 (sigma(x1) D1) + a22 x0
//! ```
//!
//! The bottom-left entry passes through `d1` into `^sigma(X0)`; reading it
//! back in `X0` coordinates is where the twist by `sigma` enters.

use alloc::vec::Vec;

use crate::factorization::ModuleFactorization;
use crate::matrix::{MatOps, Matrix, TwistOps};
use crate::ring::FactorRing;

/// `[[a11, a12], [a21 * omega, a22]]`; `a21` is stored without the factor `omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement<E> {
    pub a11: E,
    pub a12: E,
    pub a21: E,
    pub a22: E,
}

pub fn gamma_mul<R: FactorRing>(ring: &R, a: &GammaElement<R::El>, b: &GammaElement<R::El>) -> GammaElement<R::El> {
    let w = ring.omega();
    GammaElement {
        a11: ring.add(&ring.mul(&a.a11, &b.a11), &ring.mul(&ring.mul(&a.a12, &b.a21), &w)),
        a12: ring.add(&ring.mul(&a.a11, &b.a12), &ring.mul(&a.a12, &b.a22)),
        a21: ring.add(&ring.mul(&a.a21, &ring.sigma(&b.a11)), &ring.mul(&a.a22, &b.a21)),
        a22: ring.add(
            &ring.mul(&ring.mul(&a.a21, &ring.sigma(&b.a12)), &w),
            &ring.mul(&a.a22, &b.a22),
        ),
    }
}

/// The four matrix units `e11, e12, e21 omega, e22`.
pub fn matrix_units<R: FactorRing>(ring: &R) -> Vec<GammaElement<R::El>> {
    let (z, o) = (ring.zero(), ring.one());
    let unit = |k: usize| GammaElement {
        a11: if k == 0 { o.clone() } else { z.clone() },
        a12: if k == 1 { o.clone() } else { z.clone() },
        a21: if k == 2 { o.clone() } else { z.clone() },
        a22: if k == 3 { o.clone() } else { z.clone() },
    };
    (0..4).map(unit).collect()
}

/// The automorphism `[[a11, a12], [a21 w, a22]] -> [[a22, -a21], [-sigma(a12) w, sigma(a11)]]`.
pub fn sigma_bar<R: FactorRing>(ring: &R, a: &GammaElement<R::El>) -> GammaElement<R::El> {
    GammaElement {
        a11: a.a22.clone(),
        a12: ring.neg(&a.a21),
        a21: ring.neg(&ring.sigma(&a.a12)),
        a22: ring.sigma(&a.a11),
    }
}

pub fn sigma_bar_inv<R: FactorRing>(ring: &R, a: &GammaElement<R::El>) -> GammaElement<R::El> {
    GammaElement {
        a11: ring.sigma_inv(&a.a22),
        a12: ring.neg(&ring.sigma_inv(&a.a21)),
        a21: ring.neg(&a.a12),
        a22: a.a11.clone(),
    }
}

/// An element `(x1; x0)` of the Gamma-module, both parts row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector<E> {
    pub top: Matrix<E>,
    pub bottom: Matrix<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaModuleView<E> {
    pub n0: usize,
    pub n1: usize,
    /// Action block of `e12`: `x0 -> x0 * D0`.
    pub upper: Matrix<E>,
    /// Action block of `e21 omega`: `x1 -> sigma(x1) * D1`.
    pub lower: Matrix<E>,
}

pub fn to_gamma<E: Clone>(x: &ModuleFactorization<E>) -> GammaModuleView<E> {
    GammaModuleView { n0: x.n0, n1: x.n1, upper: x.d0.clone(), lower: x.d1.clone() }
}

impl<E: Clone> GammaModuleView<E> {
    pub fn act<R: FactorRing<El = E>>(&self, ring: &R, g: &GammaElement<E>, v: &GammaVector<E>) -> GammaVector<E> {
        let top = ring.mat_add(
            &ring.mat_scale_left(&g.a11, &v.top),
            &ring.mat_scale_left(&g.a12, &ring.mat_mul(&v.bottom, &self.upper)),
        );
        let bottom = ring.mat_add(
            &ring.mat_scale_left(&g.a21, &ring.mat_mul(&ring.mat_sigma(&v.top), &self.lower)),
            &ring.mat_scale_left(&g.a22, &v.bottom),
        );
        GammaVector { top, bottom }
    }

    pub fn basis_top<R: FactorRing<El = E>>(&self, ring: &R, j: usize) -> GammaVector<E> {
        let mut top = ring.mat_zero(1, self.n1);
        top.set(0, j, ring.one());
        GammaVector { top, bottom: ring.mat_zero(1, self.n0) }
    }

    pub fn basis_bottom<R: FactorRing<El = E>>(&self, ring: &R, i: usize) -> GammaVector<E> {
        let mut bottom = ring.mat_zero(1, self.n0);
        bottom.set(0, i, ring.one());
        GammaVector { top: ring.mat_zero(1, self.n1), bottom }
    }
}

/// Reads the factorization back from the action: row `i` of `D0` is the top of
/// `e12 * (0; e_i)`, row `j` of `D1` the bottom of `e21 omega * (e_j; 0)`.
pub fn from_gamma<R: FactorRing>(ring: &R, view: &GammaModuleView<R::El>) -> ModuleFactorization<R::El> {
    let units = matrix_units(ring);
    let rows0: Vec<Vec<R::El>> =
        (0..view.n0).map(|i| view.act(ring, &units[1], &view.basis_bottom(ring, i)).top.into_data()).collect();
    let rows1: Vec<Vec<R::El>> =
        (0..view.n1).map(|j| view.act(ring, &units[2], &view.basis_top(ring, j)).bottom.into_data()).collect();
    ModuleFactorization {
        n0: view.n0,
        n1: view.n1,
        d0: Matrix::from_rows(view.n1, rows0),
        d1: Matrix::from_rows(view.n0, rows1),
    }
}

/// The isomorphism `Phi(X) -> Phi(S X)` twisted by `sigma_bar`:
/// `(x1; x0) -> (sigma^-1(x0); x1)`, satisfying
/// `iota(g . v) = sigma_bar^-1(g) . iota(v)`. Note `sigma_bar^2` is entrywise `sigma`.
pub fn shift_iota<R: FactorRing>(ring: &R, v: &GammaVector<R::El>) -> GammaVector<R::El> {
    GammaVector { top: ring.mat_sigma_inv(&v.bottom), bottom: v.top.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::{shift, theta0};
    use crate::rings::{Gf, Integers, SkewGf, SkewPoly};
    use crate::RingOps;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_gamma<R: FactorRing>(ring: &R, rng: &mut ChaCha8Rng) -> GammaElement<R::El> {
        GammaElement {
            a11: ring.random_element(rng, 3),
            a12: ring.random_element(rng, 3),
            a21: ring.random_element(rng, 3),
            a22: ring.random_element(rng, 3),
        }
    }

    fn random_vector<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>, rng: &mut ChaCha8Rng) -> GammaVector<R::El> {
        GammaVector {
            top: Matrix::from_fn(1, x.n1, |_, _| ring.random_element(rng, 3)),
            bottom: Matrix::from_fn(1, x.n0, |_, _| ring.random_element(rng, 3)),
        }
    }

    fn check_module<R: FactorRing>(ring: &R, x: &ModuleFactorization<R::El>, seed: u64) {
        let view = to_gamma(x);
        assert_eq!(&from_gamma(ring, &view), x);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let units = matrix_units(ring);
        for g in &units {
            for h in &units {
                let v = random_vector(ring, x, &mut rng);
                let lhs = view.act(ring, &gamma_mul(ring, g, h), &v);
                assert_eq!(lhs, view.act(ring, g, &view.act(ring, h, &v)));
            }
        }
        for _ in 0..20 {
            let (g, h) = (random_gamma(ring, &mut rng), random_gamma(ring, &mut rng));
            let v = random_vector(ring, x, &mut rng);
            assert_eq!(view.act(ring, &gamma_mul(ring, &g, &h), &v), view.act(ring, &g, &view.act(ring, &h, &v)));
            assert_eq!(sigma_bar_inv(ring, &sigma_bar(ring, &g)), g);
            assert_eq!(sigma_bar(ring, &gamma_mul(ring, &g, &h)), gamma_mul(ring, &sigma_bar(ring, &g), &sigma_bar(ring, &h)));
            let twice = sigma_bar(ring, &sigma_bar(ring, &g));
            assert_eq!(twice.a11, ring.sigma(&g.a11));
            assert_eq!(twice.a21, ring.sigma(&g.a21));

            let sx = to_gamma(&shift(ring, x));
            let iv = shift_iota(ring, &v);
            assert_eq!(shift_iota(ring, &view.act(ring, &g, &v)), sx.act(ring, &sigma_bar_inv(ring, &g), &iv));
        }
    }

    #[test]
    fn z6_module() {
        let z6 = Integers::new(num_bigint::BigInt::from(6)).unwrap();
        let x = ModuleFactorization::from_matrices(
            Matrix::from_vec(1, 1, vec![z6.from_i64(2)]).unwrap(),
            Matrix::from_vec(1, 1, vec![z6.from_i64(3)]).unwrap(),
        )
        .unwrap();
        check_module(&z6, &x, 1);
        check_module(&z6, &theta0(&z6, 2), 2);
    }

    #[test]
    fn theta0_is_column_module() {
        let z5 = Integers::new(num_bigint::BigInt::from(5)).unwrap();
        let view = to_gamma(&theta0(&z5, 1));
        assert_eq!(view.upper, z5.mat_identity(1));
        assert_eq!(view.lower, z5.omega_identity(1));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let g = random_gamma(&z5, &mut rng);
            let (x1, x0) = (z5.random_element(&mut rng, 4), z5.random_element(&mut rng, 4));
            let v = GammaVector {
                top: Matrix::from_vec(1, 1, vec![x1.clone()]).unwrap(),
                bottom: Matrix::from_vec(1, 1, vec![x0.clone()]).unwrap(),
            };
            let out = view.act(&z5, &g, &v);
            let w = z5.omega();
            let top = z5.add(&z5.mul(&g.a11, &x1), &z5.mul(&g.a12, &x0));
            let bottom = z5.add(&z5.mul(&z5.mul(&g.a21, &w), &x1), &z5.mul(&g.a22, &x0));
            assert_eq!(out.top.get(0, 0), &top);
            assert_eq!(out.bottom.get(0, 0), &bottom);
        }
    }

    #[test]
    fn e12_reads_d0() {
        let z6 = Integers::new(num_bigint::BigInt::from(6)).unwrap();
        let x = ModuleFactorization::from_matrices(
            Matrix::from_vec(1, 1, vec![z6.from_i64(2)]).unwrap(),
            Matrix::from_vec(1, 1, vec![z6.from_i64(3)]).unwrap(),
        )
        .unwrap();
        let view = to_gamma(&x);
        let out = view.act(&z6, &matrix_units(&z6)[1], &view.basis_bottom(&z6, 0));
        assert_eq!(out.top, x.d0);
        assert!(z6.mat_is_zero(&out.bottom));
    }

    #[test]
    fn skew_module() {
        let r = SkewGf::new(Gf::new(2, 2).unwrap()).unwrap();
        let f = r.field().clone();
        let a = f.gen();
        let d0 = Matrix::from_vec(1, 1, vec![r.constant(a.clone())]).unwrap();
        let d1 = Matrix::from_vec(1, 1, vec![SkewPoly(vec![f.zero(), a])]).unwrap();
        let x = ModuleFactorization::from_matrices(d0, d1).unwrap();
        check_module(&r, &x, 4);
        check_module(&r, &theta0(&r, 1), 5);
    }
}
