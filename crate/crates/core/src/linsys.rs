//! Affine matrix equations `sum_k C_k * t_k(U_k) * C'_k = R` in unknown
//! matrices `U_k`, where `t_k` is one of `id`, `sigma`, `sigma^-1`.
//!
//! Every supported ring is free over a central Euclidean base fixed by
//! `sigma`, so each term is base-linear in the unknowns. The system is
//! expanded into a single base-ring system and solved with a Smith form.

use alloc::format;
use alloc::vec::Vec;

use crate::matrix::{MatOps, Matrix, TwistOps};
use crate::normal_form::{echelon_basis, left_kernel, reduce_vector, smith, solve_row};
use crate::ring::{FactorRing, RingOps, Twist};

pub type BaseEl<R> = <<R as FactorRing>::Base as RingOps>::El;

#[derive(Clone, Debug)]
pub struct Term<E> {
    pub unknown: usize,
    /// `None` stands for an identity of the fitting size.
    pub left: Option<Matrix<E>>,
    pub twist: Twist,
    pub right: Option<Matrix<E>>,
}

impl<E> Term<E> {
    pub fn new(unknown: usize, left: Option<Matrix<E>>, twist: Twist, right: Option<Matrix<E>>) -> Self {
        Term { unknown, left, twist, right }
    }
    /// `C * U`
    pub fn left(unknown: usize, c: Matrix<E>) -> Self {
        Term { unknown, left: Some(c), twist: Twist::Plain, right: None }
    }
    /// `U * C'`
    pub fn right(unknown: usize, c: Matrix<E>) -> Self {
        Term { unknown, left: None, twist: Twist::Plain, right: Some(c) }
    }
    pub fn plain(unknown: usize) -> Self {
        Term { unknown, left: None, twist: Twist::Plain, right: None }
    }
    pub fn twisted(mut self, t: Twist) -> Self {
        self.twist = t;
        self
    }
}

#[derive(Clone, Debug)]
struct Equation<E> {
    terms: Vec<Term<E>>,
    rhs: Matrix<E>,
}

/// A particular solution and a base-lattice basis of the homogeneous solutions,
/// both as flat base-coordinate vectors (see [`LinearSystem::decode`]).
#[derive(Clone, Debug)]
pub struct AffineSolution<B> {
    pub particular: Vec<B>,
    pub kernel: Vec<Vec<B>>,
}

pub struct LinearSystem<'r, R: FactorRing> {
    ring: &'r R,
    unknowns: Vec<(usize, usize)>,
    equations: Vec<Equation<R::El>>,
}

impl<'r, R: FactorRing> LinearSystem<'r, R> {
    pub fn new(ring: &'r R) -> Self {
        LinearSystem { ring, unknowns: Vec::new(), equations: Vec::new() }
    }

    pub fn add_unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.unknowns.push((rows, cols));
        self.unknowns.len() - 1
    }

    pub fn unknown_shapes(&self) -> &[(usize, usize)] {
        &self.unknowns
    }

    fn term_shape(&self, t: &Term<R::El>) -> crate::Result<(usize, usize)> {
        let (ur, uc) = *self
            .unknowns
            .get(t.unknown)
            .ok_or_else(|| crate::Error::InvalidInput(format!("unknown {} not declared", t.unknown)))?;
        let rows = match &t.left {
            Some(c) if c.cols() != ur => {
                return Err(crate::Error::ShapeMismatch(format!("left factor has {} cols, unknown has {ur} rows", c.cols())))
            }
            Some(c) => c.rows(),
            None => ur,
        };
        let cols = match &t.right {
            Some(c) if c.rows() != uc => {
                return Err(crate::Error::ShapeMismatch(format!("right factor has {} rows, unknown has {uc} cols", c.rows())))
            }
            Some(c) => c.cols(),
            None => uc,
        };
        Ok((rows, cols))
    }

    pub fn add_equation(&mut self, terms: Vec<Term<R::El>>, rhs: Matrix<R::El>) -> crate::Result<()> {
        for t in &terms {
            let s = self.term_shape(t)?;
            if s != rhs.shape() {
                return Err(crate::Error::ShapeMismatch(format!(
                    "term of shape {s:?} in an equation of shape {:?}",
                    rhs.shape()
                )));
            }
        }
        self.equations.push(Equation { terms, rhs });
        Ok(())
    }

    fn num_vars(&self) -> usize {
        let r = self.ring.base_rank();
        self.unknowns.iter().map(|(a, b)| a * b * r).sum()
    }

    fn var_offsets(&self) -> Vec<usize> {
        let r = self.ring.base_rank();
        let mut off = Vec::with_capacity(self.unknowns.len());
        let mut acc = 0;
        for (a, b) in &self.unknowns {
            off.push(acc);
            acc += a * b * r;
        }
        off
    }

    /// Flattens matrices (one per unknown) into base coordinates.
    pub fn encode(&self, mats: &[Matrix<R::El>]) -> Vec<BaseEl<R>> {
        let mut v = Vec::with_capacity(self.num_vars());
        for m in mats {
            for x in m.data() {
                v.extend(self.ring.to_base(x));
            }
        }
        v
    }

    pub fn decode(&self, v: &[BaseEl<R>]) -> Vec<Matrix<R::El>> {
        let r = self.ring.base_rank();
        let off = self.var_offsets();
        self.unknowns
            .iter()
            .zip(off)
            .map(|(&(a, b), o)| Matrix::from_fn(a, b, |i, j| {
                let s = o + (i * b + j) * r;
                self.ring.from_base(&v[s..s + r])
            }))
            .collect()
    }

    /// Left-hand side evaluated at the given unknowns, one matrix per equation.
    pub fn evaluate(&self, vals: &[Matrix<R::El>]) -> Vec<Matrix<R::El>> {
        let ring = self.ring;
        self.equations
            .iter()
            .map(|eq| {
                let mut acc = ring.mat_zero(eq.rhs.rows(), eq.rhs.cols());
                for t in &eq.terms {
                    let mut m = ring.mat_twist(t.twist, &vals[t.unknown]);
                    if let Some(c) = &t.left {
                        m = ring.mat_mul(c, &m);
                    }
                    if let Some(c) = &t.right {
                        m = ring.mat_mul(&m, c);
                    }
                    acc = ring.mat_add(&acc, &m);
                }
                acc
            })
            .collect()
    }

    pub fn is_satisfied_by(&self, vals: &[Matrix<R::El>]) -> bool {
        self.evaluate(vals).iter().zip(&self.equations).all(|(l, eq)| *l == eq.rhs)
    }

    /// The expanded coefficient matrix (variables x equation coordinates) and right side.
    fn expand(&self) -> (Matrix<BaseEl<R>>, Vec<BaseEl<R>>) {
        let ring = self.ring;
        let base = ring.base();
        let r = ring.base_rank();
        let basis = ring.base_basis();
        let twisted: Vec<[R::El; 3]> = basis
            .iter()
            .map(|b| [b.clone(), ring.sigma(b), ring.sigma_inv(b)])
            .collect();
        let tw_idx = |t: Twist| match t {
            Twist::Plain => 0,
            Twist::Sigma => 1,
            Twist::SigmaInv => 2,
        };
        let nvars = self.num_vars();
        let mut eq_off = Vec::new();
        let mut ncols = 0;
        for eq in &self.equations {
            eq_off.push(ncols);
            ncols += eq.rhs.rows() * eq.rhs.cols() * r;
        }
        let mut m = Matrix::from_fn(nvars, ncols, |_, _| base.zero());
        let var_off = self.var_offsets();
        let one = ring.one();
        for (e_idx, eq) in self.equations.iter().enumerate() {
            let q = eq.rhs.cols();
            for t in &eq.terms {
                let (ur, uc) = self.unknowns[t.unknown];
                let lrows = t.left.as_ref().map_or(ur, |c| c.rows());
                let lget = |i: usize, a: usize| -> Option<&R::El> {
                    match &t.left {
                        Some(c) => Some(c.get(i, a)),
                        None => (i == a).then_some(&one),
                    }
                };
                let rget = |b: usize, j: usize| -> Option<&R::El> {
                    match &t.right {
                        Some(c) => Some(c.get(b, j)),
                        None => (b == j).then_some(&one),
                    }
                };
                for a in 0..ur {
                    for b in 0..uc {
                        for (k, tb) in twisted.iter().enumerate() {
                            let beta = &tb[tw_idx(t.twist)];
                            let var = var_off[t.unknown] + (a * uc + b) * r + k;
                            for i in 0..lrows {
                                let Some(ci) = lget(i, a) else { continue };
                                if ring.is_zero(ci) {
                                    continue;
                                }
                                let cb = ring.mul(ci, beta);
                                for j in 0..q {
                                    let Some(dj) = rget(b, j) else { continue };
                                    if ring.is_zero(dj) {
                                        continue;
                                    }
                                    let val = ring.mul(&cb, dj);
                                    let coords = ring.to_base(&val);
                                    let col = eq_off[e_idx] + (i * q + j) * r;
                                    for (s, c) in coords.into_iter().enumerate() {
                                        if !base.is_zero(&c) {
                                            let cur = base.add(m.get(var, col + s), &c);
                                            m.set(var, col + s, cur);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut rhs = Vec::with_capacity(ncols);
        for eq in &self.equations {
            for x in eq.rhs.data() {
                rhs.extend(ring.to_base(x));
            }
        }
        (m, rhs)
    }

    /// All solutions: a particular one plus a basis of the homogeneous solution lattice.
    pub fn solve_affine(&self) -> crate::Result<Option<AffineSolution<BaseEl<R>>>> {
        let base = self.ring.base();
        let (m, rhs) = self.expand();
        let s = smith(base, &m);
        let Some(x) = solve_row(base, &s, &rhs) else { return Ok(None) };
        let vals = self.decode(&x);
        if !self.is_satisfied_by(&vals) {
            return Err(crate::Error::InternalInconsistency("solution failed re-verification".into()));
        }
        let k = left_kernel(&s);
        let kernel = (0..k.rows()).map(|i| k.row(i).to_vec()).collect();
        Ok(Some(AffineSolution { particular: x, kernel }))
    }

    /// One solution (re-verified), or `None` if the system is unsolvable.
    ///
    /// The solution is canonical: it is reduced against an echelon basis of
    /// the homogeneous solutions, so earlier unknowns get the smallest entries.
    pub fn solve(&self) -> crate::Result<Option<Vec<Matrix<R::El>>>> {
        let base = self.ring.base();
        let (m, rhs) = self.expand();
        let s = smith(base, &m);
        let Some(x) = solve_row(base, &s, &rhs) else { return Ok(None) };
        let x = reduce_vector(base, &echelon_basis(base, &left_kernel(&s)), &x);
        let vals = self.decode(&x);
        if !self.is_satisfied_by(&vals) {
            return Err(crate::Error::InternalInconsistency("solution failed re-verification".into()));
        }
        Ok(Some(vals))
    }
}

/// Zero matrices for every unknown of a system, handy as a starting assignment.
pub fn zero_assignment<R: FactorRing>(ring: &R, shapes: &[(usize, usize)]) -> Vec<Matrix<R::El>> {
    shapes.iter().map(|&(a, b)| ring.mat_zero(a, b)).collect()
}

/// Flat base coordinates of a list of matrices.
pub fn flatten<R: FactorRing>(ring: &R, mats: &[Matrix<R::El>]) -> Vec<BaseEl<R>> {
    let mut v = Vec::new();
    for m in mats {
        for x in m.data() {
            v.extend(ring.to_base(x));
        }
    }
    v
}
