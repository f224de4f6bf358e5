//! Smith and Hermite normal forms, row-lattice utilities and finitely
//! generated quotient descriptions over a Euclidean domain.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::matrix::{MatOps, Matrix};
use crate::ring::{EuclideanDomain, FactorRing, RingOps};

/// `u * m * v = diag`, with `u`, `v` invertible and the inverses tracked.
#[derive(Clone, Debug)]
pub struct Smith<E> {
    /// Diagonal of length `min(rows, cols)`, canonical associates, each dividing the next.
    pub diag: Vec<E>,
    pub rank: usize,
    pub u: Matrix<E>,
    pub u_inv: Matrix<E>,
    pub v: Matrix<E>,
    pub v_inv: Matrix<E>,
}

struct Work<'d, D: EuclideanDomain> {
    d: &'d D,
    a: Matrix<D::El>,
    u: Matrix<D::El>,
    u_inv: Matrix<D::El>,
    v: Matrix<D::El>,
    v_inv: Matrix<D::El>,
}

impl<D: EuclideanDomain> Work<'_, D> {
    /// row_i += c * row_j
    fn row_add(&mut self, i: usize, j: usize, c: &D::El) {
        let d = self.d;
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.cols() {
                let t = d.add(m.get(i, k), &d.mul(c, m.get(j, k)));
                m.set(i, k, t);
            }
        }
        // u_inv: col_j -= c * col_i
        let m = &mut self.u_inv;
        for k in 0..m.rows() {
            let t = d.sub(m.get(k, j), &d.mul(m.get(k, i), c));
            m.set(k, j, t);
        }
    }

    /// col_i += c * col_j
    fn col_add(&mut self, i: usize, j: usize, c: &D::El) {
        let d = self.d;
        for m in [&mut self.a, &mut self.v] {
            for k in 0..m.rows() {
                let t = d.add(m.get(k, i), &d.mul(m.get(k, j), c));
                m.set(k, i, t);
            }
        }
        // v_inv: row_j -= c * row_i
        let m = &mut self.v_inv;
        for k in 0..m.cols() {
            let t = d.sub(m.get(j, k), &d.mul(c, m.get(i, k)));
            m.set(j, k, t);
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn row_scale(&mut self, i: usize, unit: &D::El) {
        let d = self.d;
        let inv = d.unit_inverse(unit);
        for m in [&mut self.a, &mut self.u] {
            for k in 0..m.cols() {
                let t = d.mul(unit, m.get(i, k));
                m.set(i, k, t);
            }
        }
        let m = &mut self.u_inv;
        for k in 0..m.rows() {
            let t = d.mul(m.get(k, i), &inv);
            m.set(k, i, t);
        }
    }

    /// Smallest nonzero entry in the trailing block, ties broken by lowest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if self.d.is_zero(x) {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.d.cmp_size(x, self.a.get(bi, bj)) == Ordering::Less {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

pub fn smith<D: EuclideanDomain>(d: &D, m: &Matrix<D::El>) -> Smith<D::El> {
    let (rows, cols) = m.shape();
    let mut w = Work {
        d,
        a: m.clone(),
        u: d.mat_identity(rows),
        u_inv: d.mat_identity(rows),
        v: d.mat_identity(cols),
        v_inv: d.mat_identity(cols),
    };
    let mut rank = 0;
    let steps = rows.min(cols);
    for t in 0..steps {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d.is_zero(w.a.get(i, t)) {
                    continue;
                }
                let (q, r) = d.div_rem(w.a.get(i, t), w.a.get(t, t));
                w.row_add(i, t, &d.neg(&q));
                if !d.is_zero(&r) {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d.is_zero(w.a.get(t, j)) {
                    continue;
                }
                let (q, r) = d.div_rem(w.a.get(t, j), w.a.get(t, t));
                w.col_add(j, t, &d.neg(&q));
                if !d.is_zero(&r) {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remaining entry of row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    let x = w.a.get(i, t);
                    if !d.is_zero(x) && d.cmp_size(x, w.a.get(best.0, best.1)) == Ordering::Less {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    let x = w.a.get(t, j);
                    if !d.is_zero(x) && d.cmp_size(x, w.a.get(best.0, best.1)) == Ordering::Less {
                        best = (t, j);
                    }
                }
                w.row_swap(t, best.0);
                w.col_swap(t, best.1);
                continue;
            }
            // divisibility of the trailing block
            let mut bad = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if d.exact_div(w.a.get(i, j), w.a.get(t, t)).is_none() {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => w.row_add(t, i, &d.one()),
                None => break,
            }
        }
        let (_, unit) = d.normalize(w.a.get(t, t));
        w.row_scale(t, &unit);
        rank += 1;
    }
    let diag = (0..steps).map(|i| w.a.get(i, i).clone()).collect();
    Smith { diag, rank, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv }
}

/// Solves `x * m = b` for a row vector `x`, given the Smith form of `m`.
pub fn solve_row<D: EuclideanDomain>(d: &D, s: &Smith<D::El>, b: &[D::El]) -> Option<Vec<D::El>> {
    let n = s.u.rows();
    let k = s.v.cols();
    assert_eq!(b.len(), k);
    // s = b * v; need w with w * diag = s
    let mut rhs = vec![d.zero(); k];
    for j in 0..k {
        let mut acc = d.zero();
        for (i, bi) in b.iter().enumerate() {
            if !d.is_zero(bi) {
                acc = d.add(&acc, &d.mul(bi, s.v.get(i, j)));
            }
        }
        rhs[j] = acc;
    }
    let mut w = vec![d.zero(); n];
    for j in 0..k {
        if j < s.rank {
            w[j] = d.exact_div(&rhs[j], &s.diag[j])?;
        } else if !d.is_zero(&rhs[j]) {
            return None;
        }
    }
    let mut x = vec![d.zero(); n];
    for (i, wi) in w.iter().enumerate() {
        if d.is_zero(wi) {
            continue;
        }
        for (j, xj) in x.iter_mut().enumerate() {
            *xj = d.add(xj, &d.mul(wi, s.u.get(i, j)));
        }
    }
    Some(x)
}

/// Basis of the left kernel `{x : x * m = 0}` (rows of `u` beyond the rank).
pub fn left_kernel<E: Clone>(s: &Smith<E>) -> Matrix<E> {
    s.u.submatrix(s.rank, s.u.rows(), 0, s.u.cols())
}

/// A basis (as rows) of the row lattice spanned by the rows of `gens`.
pub fn row_basis<D: EuclideanDomain>(d: &D, gens: &Matrix<D::El>) -> Matrix<D::El> {
    let s = smith(d, gens);
    let rows = (0..s.rank)
        .map(|i| (0..gens.cols()).map(|j| d.mul(&s.diag[i], s.v_inv.get(i, j))).collect())
        .collect();
    Matrix::from_rows(gens.cols(), rows)
}

/// Reduced row echelon basis (Hermite form) of the row lattice of `gens`:
/// nonzero rows only, pivots canonical, entries above each pivot reduced.
pub fn echelon_basis<D: EuclideanDomain>(d: &D, gens: &Matrix<D::El>) -> Matrix<D::El> {
    let cols = gens.cols();
    let mut rows: Vec<Vec<D::El>> = (0..gens.rows()).map(|i| gens.row(i).to_vec()).collect();
    let axpy = |r: &mut Vec<D::El>, q: &D::El, s: &[D::El]| {
        for (a, b) in r.iter_mut().zip(s) {
            *a = d.sub(a, &d.mul(q, b));
        }
    };
    let mut t = 0;
    for c in 0..cols {
        loop {
            let best = (t..rows.len())
                .filter(|&i| !d.is_zero(&rows[i][c]))
                .min_by(|&i, &j| d.cmp_size(&rows[i][c], &rows[j][c]).then(i.cmp(&j)));
            let Some(b) = best else { break };
            rows.swap(t, b);
            let mut done = true;
            for i in t + 1..rows.len() {
                if d.is_zero(&rows[i][c]) {
                    continue;
                }
                let (q, _) = d.div_rem(&rows[i][c], &rows[t][c]);
                let pivot = rows[t].clone();
                axpy(&mut rows[i], &q, &pivot);
                if !d.is_zero(&rows[i][c]) {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if t < rows.len() && !d.is_zero(&rows[t][c]) {
            let (_, unit) = d.normalize(&rows[t][c]);
            for x in rows[t].iter_mut() {
                *x = d.mul(&unit, x);
            }
            let pivot = rows[t].clone();
            for row in rows.iter_mut().take(t) {
                let (q, _) = d.div_rem(&row[c], &pivot[c]);
                axpy(row, &q, &pivot);
            }
            t += 1;
        }
    }
    rows.truncate(t);
    Matrix::from_rows(cols, rows)
}

/// Reduces `v` modulo the lattice with echelon basis `ech`, pivot by pivot.
pub fn reduce_vector<D: EuclideanDomain>(d: &D, ech: &Matrix<D::El>, v: &[D::El]) -> Vec<D::El> {
    let mut v = v.to_vec();
    for i in 0..ech.rows() {
        let row = ech.row(i);
        let Some(c) = row.iter().position(|x| !d.is_zero(x)) else { continue };
        let (q, _) = d.div_rem(&v[c], &row[c]);
        if d.is_zero(&q) {
            continue;
        }
        for (a, b) in v.iter_mut().zip(row) {
            *a = d.sub(a, &d.mul(&q, b));
        }
    }
    v
}

/// `M1 / M2` for row lattices `M2 <= M1` over the base domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDescription<E> {
    /// Non-unit torsion invariant factors, canonical, ascending in divisibility.
    pub torsion: Vec<E>,
    pub free_rank: usize,
    /// One representative per torsion factor, then one per free generator.
    pub representatives: Vec<Vec<E>>,
}

impl<E> QuotientDescription<E> {
    pub fn is_zero(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }
}

pub fn quotient<D: EuclideanDomain>(
    d: &D,
    m1_gens: &Matrix<D::El>,
    m2_gens: &Matrix<D::El>,
) -> crate::Result<QuotientDescription<D::El>> {
    let k = row_basis(d, m1_gens);
    let n = k.rows();
    let ks = smith(d, &k);
    let mut coords = Vec::with_capacity(m2_gens.rows());
    for i in 0..m2_gens.rows() {
        let c = solve_row(d, &ks, m2_gens.row(i)).ok_or_else(|| {
            crate::Error::InternalInconsistency(format!("generator {i} of the submodule lies outside the module"))
        })?;
        coords.push(c);
    }
    let cm = Matrix::from_rows(n, coords);
    let cs = smith(d, &cm);
    let mut torsion = Vec::new();
    let mut reps = Vec::new();
    let mut free_idx = Vec::new();
    for i in 0..n {
        let rep = || -> Vec<D::El> {
            (0..k.cols())
                .map(|j| {
                    let mut acc = d.zero();
                    for t in 0..n {
                        acc = d.add(&acc, &d.mul(cs.v_inv.get(i, t), k.get(t, j)));
                    }
                    acc
                })
                .collect()
        };
        if i < cs.rank {
            if !d.is_unit(&cs.diag[i]) {
                torsion.push(cs.diag[i].clone());
                reps.push(rep());
            }
        } else {
            free_idx.push(rep());
        }
    }
    let free_rank = free_idx.len();
    reps.extend(free_idx);
    Ok(QuotientDescription { torsion, free_rank, representatives: reps })
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<D: EuclideanDomain>(d: &D, m: &Matrix<D::El>) -> D::El {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut sign = d.one();
    let mut prev = d.one();
    for k in 0..n {
        if d.is_zero(a.get(k, k)) {
            let Some(p) = (k + 1..n).find(|&i| !d.is_zero(a.get(i, k))) else { return d.zero() };
            a.swap_rows(k, p);
            sign = d.neg(&sign);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = d.sub(&d.mul(a.get(i, j), a.get(k, k)), &d.mul(a.get(i, k), a.get(k, j)));
                a.set(i, j, d.exact_div(&t, &prev).expect("Bareiss division is exact"));
            }
        }
        prev = a.get(k, k).clone();
    }
    if n == 0 {
        return d.one();
    }
    d.mul(&sign, a.get(n - 1, n - 1))
}

/// Smith normal form over a ring that is itself a PID (integers, `F_p[x]`).
/// Returns `(diagonal, u, v)` with `u * m * v` diagonal.
pub fn smith_normal_form<R: FactorRing>(
    ring: &R,
    m: &Matrix<R::El>,
) -> crate::Result<(Vec<R::El>, Matrix<R::El>, Matrix<R::El>)> {
    if !ring.is_pid() {
        return Err(crate::Error::UnsupportedRing("smith_normal_form"));
    }
    let b = ring.base();
    let mb = m.map(|x| ring.to_base(x).remove(0));
    let s = smith(b, &mb);
    let lift = |x: &<R::Base as RingOps>::El| ring.base_scalar(x);
    Ok((s.diag.iter().map(lift).collect(), s.u.map(lift), s.v.map(lift)))
}

/// One-sided row echelon form `u * m = h` by left division. Supported for
/// every left Euclidean kind (integers, `F_p[x]`, skew polynomials).
pub fn hermite_form<R: FactorRing>(ring: &R, m: &Matrix<R::El>) -> crate::Result<(Matrix<R::El>, Matrix<R::El>)> {
    if ring.cmp_norm(&ring.one(), &ring.one()).is_none() {
        return Err(crate::Error::UnsupportedRing("hermite_form"));
    }
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = ring.mat_identity(rows);
    let row_sub = |h: &mut Matrix<R::El>, i: usize, j: usize, q: &R::El| {
        for k in 0..h.cols() {
            let t = ring.sub(h.get(i, k), &ring.mul(q, h.get(j, k)));
            h.set(i, k, t);
        }
    };
    let mut t = 0;
    for c in 0..cols {
        if t == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in t..rows {
                if ring.is_zero(h.get(i, c)) {
                    continue;
                }
                if best.is_none_or(|b| ring.cmp_norm(h.get(i, c), h.get(b, c)) == Some(Ordering::Less)) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(t, b);
            u.swap_rows(t, b);
            let mut done = true;
            for i in t + 1..rows {
                if ring.is_zero(h.get(i, c)) {
                    continue;
                }
                let (q, r) = ring.left_div_rem(h.get(i, c), h.get(t, c)).expect("left Euclidean");
                row_sub(&mut h, i, t, &q);
                row_sub(&mut u, i, t, &q);
                if !ring.is_zero(&r) {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if ring.is_zero(h.get(t, c)) {
            continue;
        }
        let unit = ring.left_normalizer(h.get(t, c)).expect("normalizer");
        for mm in [&mut h, &mut u] {
            for k in 0..mm.cols() {
                let x = ring.mul(&unit, mm.get(t, k));
                mm.set(t, k, x);
            }
        }
        for i in 0..t {
            let (q, _) = ring.left_div_rem(h.get(i, c), h.get(t, c)).expect("left Euclidean");
            row_sub(&mut h, i, t, &q);
            row_sub(&mut u, i, t, &q);
        }
        t += 1;
    }
    Ok((h, u))
}
