use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;

pub type ZMatrix = Matrix<BigInt>;

/// Integer matrix from small entries.
pub fn zmatrix(rows: &[&[i64]]) -> ZMatrix {
    let cols = rows.first().map_or(0, |r| r.len());
    ZMatrix::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
}

/// `D = U M V` with `U, V` unimodular and `D` diagonal with nonnegative
/// entries, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: ZMatrix,
    pub u: ZMatrix,
    pub u_inv: ZMatrix,
    pub v: ZMatrix,
    /// Nonzero diagonal entries.
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

impl Work {
    fn rows(&self) -> usize {
        self.a.len()
    }

    fn cols(&self) -> usize {
        self.v.len()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in self.u_inv.iter_mut() {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    /// `row_i += c * row_j`.
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src = m[j].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                *x += c * y;
            }
        }
        // inverse: col_j -= c * col_i
        for row in self.u_inv.iter_mut() {
            let t = c * &row[i];
            row[j] -= t;
        }
    }

    /// `col_i += c * col_j`.
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let t = c * &row[j];
            row[i] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.u] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -&row[i];
        }
    }

    fn smallest_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows() {
            for j in t..self.cols() {
                if !self.a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| self.a[i][j].abs() < self.a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn pivot_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }

    /// Clears row and column `t` and enforces divisibility of the rest.
    fn settle(&mut self, t: usize) {
        loop {
            let p = self.a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..self.rows() {
                if !self.a[i][t].is_zero() {
                    let q = self.a[i][t].div_floor(&p);
                    self.add_row(i, t, &-q);
                    dirty |= !self.a[i][t].is_zero();
                }
            }
            for j in t + 1..self.cols() {
                if !self.a[t][j].is_zero() {
                    let q = self.a[t][j].div_floor(&p);
                    self.add_col(j, t, &-q);
                    dirty |= !self.a[t][j].is_zero();
                }
            }
            if dirty {
                let best = self.smallest_in_cross(t);
                self.pivot_to(t, best);
                continue;
            }
            let bad = (t + 1..self.rows())
                .find(|&i| (t + 1..self.cols()).any(|j| !self.a[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => self.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if self.a[t][t].is_negative() {
            self.negate_row(t);
        }
    }

    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let val = |i: usize, j: usize| self.a[i][j].abs();
        for i in t..self.rows() {
            if !self.a[i][t].is_zero()
                && (self.a[best.0][best.1].is_zero() || val(i, t) < val(best.0, best.1))
            {
                best = (i, t);
            }
        }
        for j in t..self.cols() {
            if !self.a[t][j].is_zero()
                && (self.a[best.0][best.1].is_zero() || val(t, j) < val(best.0, best.1))
            {
                best = (t, j);
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &ZMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.to_rows(),
        u: identity(r),
        u_inv: identity(r),
        v: identity(c),
    };
    let mut divisors = Vec::new();
    for t in 0..r.min(c) {
        let Some(pos) = w.smallest_from(t) else { break };
        w.pivot_to(t, pos);
        w.settle(t);
        divisors.push(w.a[t][t].clone());
    }
    let from = |rows: Vec<Vec<BigInt>>, n: usize, k: usize| {
        ZMatrix::from_fn(n, k, |i, j| rows[i][j].clone())
    };
    SmithForm {
        d: from(w.a, r, c),
        u: from(w.u, r, r),
        u_inv: from(w.u_inv, r, r),
        v: from(w.v, c, c),
        divisors,
    }
}

/// Determinant by fraction-free elimination.
pub fn zdet(m: &ZMatrix) -> BigInt {
    let n = m.rows();
    assert!(m.is_square());
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// A basis of the integer kernel, as columns.
pub fn integer_kernel(m: &ZMatrix) -> ZMatrix {
    let s = smith_normal_form(m);
    let c = m.cols();
    let r = s.rank();
    ZMatrix::from_fn(c, c - r, |i, j| s.v.get(i, r + j).clone())
}

/// A basis of the lattice spanned by the columns, as columns.
pub fn lattice_basis(m: &ZMatrix) -> ZMatrix {
    let s = smith_normal_form(m);
    ZMatrix::from_fn(m.rows(), s.rank(), |i, j| {
        s.u_inv.get(i, j) * &s.divisors[j]
    })
}

/// An integer solution of `m x = y`, if one exists.
pub fn solve_integer(m: &ZMatrix, y: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(m);
    let uy: Vec<BigInt> = (0..m.rows())
        .map(|i| (0..m.rows()).fold(BigInt::zero(), |acc, k| acc + s.u.get(i, k) * &y[k]))
        .collect();
    let mut z = vec![BigInt::zero(); m.cols()];
    for (i, val) in uy.iter().enumerate() {
        if i < s.rank() {
            let (q, r) = val.div_rem(&s.divisors[i]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !val.is_zero() {
            return None;
        }
    }
    Some(
        (0..m.cols())
            .map(|i| (0..m.cols()).fold(BigInt::zero(), |acc, k| acc + s.v.get(i, k) * &z[k]))
            .collect(),
    )
}

/// Columns of `a` followed by those of `b`.
pub fn hconcat(a: &ZMatrix, b: &ZMatrix) -> ZMatrix {
    assert_eq!(a.rows(), b.rows(), "row counts");
    ZMatrix::from_fn(a.rows(), a.cols() + b.cols(), |i, j| {
        if j < a.cols() {
            a.get(i, j).clone()
        } else {
            b.get(i, j - a.cols()).clone()
        }
    })
}

pub fn column(m: &ZMatrix, j: usize) -> Vec<BigInt> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &ZMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul_mat(m).mul_mat(&s.v), s.d);
        assert_eq!(s.u.mul_mat(&s.u_inv), ZMatrix::identity(m.rows()));
        assert_eq!(zdet(&s.u).abs(), BigInt::one());
        assert_eq!(zdet(&s.v).abs(), BigInt::one());
        for w in s.divisors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(check(&zmatrix(&[&[1, 0], &[0, 1]])).divisors, big(&[1, 1]));
        assert_eq!(check(&zmatrix(&[&[2, 0], &[0, 0]])).divisors, big(&[2]));
        assert_eq!(check(&zmatrix(&[&[1, 1], &[1, -1]])).divisors, big(&[1, 2]));
        assert_eq!(check(&zmatrix(&[&[2, 0], &[0, 3]])).divisors, big(&[1, 6]));
        assert_eq!(
            check(&zmatrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).divisors,
            big(&[2, 6, 12])
        );
    }

    #[test]
    fn degenerate_shapes() {
        let empty = ZMatrix::zeros(0, 3);
        assert!(check(&empty).divisors.is_empty());
        assert_eq!(integer_kernel(&empty).cols(), 3);
        let z = ZMatrix::zeros(2, 0);
        assert_eq!(lattice_basis(&z).cols(), 0);
    }

    #[test]
    fn kernel_and_solve() {
        let m = zmatrix(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul_mat(&k).is_zero());
        let two = zmatrix(&[&[2, 0], &[0, 2]]);
        assert_eq!(solve_integer(&two, &big(&[4, 2])), Some(big(&[2, 1])));
        assert_eq!(solve_integer(&two, &big(&[1, 0])), None);
    }
}
