//! Dense matrices over exact rings: rational elimination and symbolic
//! determinants.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{MPoly, Rational};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Rational>;
pub type PMatrix = Matrix<MPoly>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shapes");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = &acc + &(a * other.get(k, j));
            }
            acc
        })
    }

    pub fn add_mat(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix sum shapes"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        })
    }

    pub fn sub_mat(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix difference shapes"
        );
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x * c)
    }

    /// Commutator `[self, other] = self*other - other*self`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul_mat(other).sub_mat(&other.mul_mat(self))
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }
}

impl<T> Neg for &Matrix<T>
where
    T: Clone,
    for<'a> &'a T: Neg<Output = T>,
{
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x)
    }
}

impl QMatrix {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            out.push(v);
        }
        out
    }

    /// Some solution of `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &piv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Embeds as constant polynomials.
    pub fn to_poly(&self) -> PMatrix {
        self.map(|c| MPoly::constant(c.clone()))
    }
}

impl PMatrix {
    /// Determinant by Bareiss fraction-free elimination with exact division.
    pub fn det(&self) -> MPoly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return MPoly::one();
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = MPoly::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return MPoly::zero();
                };
                for j in 0..n {
                    m.data.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * m.get(i, j)) - &(m.get(i, k) * m.get(k, j));
                    let v = num.div_exact(&prev).expect("Bareiss step divides exactly");
                    m.set(i, j, v);
                }
                m.set(i, k, MPoly::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// `det(var * I - self)` as a polynomial containing `var`.
    pub fn charpoly(&self, var: &str) -> MPoly {
        let lam = MPoly::var(var);
        let m = Matrix::from_fn(self.rows, self.cols, |i, j| {
            if i == j {
                &lam - self.get(i, j)
            } else {
                -self.get(i, j)
            }
        });
        m.det()
    }

    /// Coefficients `c_k` of `det(lambda I - self) = sum_k c_k lambda^(n-k)`,
    /// `c_0 = 1`, computed without introducing `lambda`.
    pub fn charpoly_coefficients(&self) -> Vec<MPoly> {
        let n = self.rows;
        let lam = fresh_name(self, "lambda");
        let p = self.charpoly(&lam);
        let cs = p.coefficients_in(&lam);
        (0..=n)
            .map(|k| {
                cs.get(n - k)
                    .cloned()
                    .unwrap_or_else(MPoly::zero)
                    .in_context(&remove(p.vars(), &lam))
                    .expect("lambda removed")
            })
            .collect()
    }

    /// Same coefficients by the Faddeev-LeVerrier recursion.
    pub fn charpoly_coefficients_faddeev(&self) -> Vec<MPoly> {
        let n = self.rows;
        let id = PMatrix::identity(n);
        let mut coeffs = vec![MPoly::one()];
        let mut mk = PMatrix::zeros(n, n);
        for k in 1..=n {
            let ck_prev = coeffs[k - 1].clone();
            mk = self.mul_mat(&mk).add_mat(&id.scale(&ck_prev));
            let tr = self.mul_mat(&mk).trace();
            let ck = tr.scale(&-Rational::new(1.into(), (k as i64).into()));
            coeffs.push(ck);
        }
        coeffs
    }

    /// Substitutes rational values for variables in every entry.
    pub fn eval_partial<S: AsRef<str>>(&self, values: &[(S, Rational)]) -> PMatrix {
        self.map(|p| p.eval_partial(values))
    }

    /// Applies a substitution to every entry.
    pub fn substitute<S: AsRef<str>>(&self, assignment: &[(S, MPoly)]) -> PMatrix {
        self.map(|p| p.substitute(assignment))
    }

    /// Rational matrix when all entries are constant.
    pub fn to_rational(&self) -> Option<QMatrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for p in &self.data {
            data.push(p.constant_value()?);
        }
        Some(Matrix::from_vec(self.rows, self.cols, data))
    }

    /// Row-by-row layout using the pretty polynomial form.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.to_pretty()).collect())
            .collect();
        let width: Vec<usize> = (0..self.cols)
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for r in cells {
            let line: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{}{}", " ".repeat(width[j] - c.chars().count()), c))
                .collect();
            out.push_str("[ ");
            out.push_str(&line.join("  "));
            out.push_str(" ]\n");
        }
        out
    }
}

fn fresh_name(m: &PMatrix, base: &str) -> String {
    let used: Vec<&String> = m.data.iter().flat_map(|p| p.vars()).collect();
    let mut name = base.to_string();
    let mut k = 0;
    while used.iter().any(|v| **v == name) {
        k += 1;
        name = format!("{base}{k}");
    }
    name
}

fn remove(vars: &[String], name: &str) -> Vec<String> {
    vars.iter().filter(|v| *v != name).cloned().collect()
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qq};

    fn pm(rows: &[&[&str]]) -> PMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| MPoly::parse(s).unwrap()).collect())
                .collect(),
        )
    }

    #[test]
    fn rational_elimination() {
        let a = QMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
        assert_eq!(a.det(), q(0));
        assert!(a.inverse().is_none());
        let b = QMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul_mat(&inv), QMatrix::identity(2));
        assert_eq!(b.solve(&[q(1), q(0)]).unwrap(), vec![q(1), q(-1)]);
        assert_eq!(
            QMatrix::from_ints(&[&[1, 1], &[2, 2]]).solve(&[q(1), q(3)]),
            None
        );
        assert_eq!(QMatrix::from_ints(&[&[3, 1], &[1, 2]]).det(), q(5));
        assert_eq!(QMatrix::from_ints(&[&[0, 2], &[3, 0]]).det(), q(-6));
        let _ = qq(1, 2);
    }

    #[test]
    fn symbolic_determinant() {
        let m = pm(&[&["u", "v"], &["w", "-u"]]);
        assert_eq!(m.det(), MPoly::parse("-u^2 - v*w").unwrap());
        let m3 = pm(&[&["0", "x", "1"], &["y", "0", "0"], &["1", "z", "0"]]);
        // expansion along the middle row: -y * (x*0 - 1*z)
        assert_eq!(m3.det(), MPoly::parse("y*z").unwrap());
    }

    #[test]
    fn charpoly_routes_agree() {
        let s0 = pm(&[
            &["-3*a", "b", "0", "0"],
            &["0", "a", "1", "0"],
            &["0", "c", "a", "1"],
            &["d", "e", "c", "a"],
        ]);
        let bareiss = s0.charpoly_coefficients();
        let faddeev = s0.charpoly_coefficients_faddeev();
        assert_eq!(bareiss, faddeev);
        assert_eq!(bareiss[2], MPoly::parse("-6*a^2 - 2*c").unwrap());
        assert_eq!(bareiss[3], MPoly::parse("8*a^3 - 4*a*c - e").unwrap());
        assert_eq!(
            bareiss[4],
            MPoly::parse("-3*a^4 + 6*a^2*c - b*d - 3*a*e").unwrap()
        );
    }

    #[test]
    fn bracket_of_elementary_matrices() {
        let e12 = QMatrix::from_ints(&[&[0, 1], &[0, 0]]);
        let e21 = QMatrix::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(e12.bracket(&e21), QMatrix::from_ints(&[&[1, 0], &[0, -1]]));
    }
}

/// Serde adapter writing a rational matrix as rows of `"p/q"` strings.
pub mod qmatrix_text {
    use serde::{Deserializer, Serializer};

    use super::{Matrix, QMatrix};
    use crate::poly::rational::serde_text::vecvec;

    pub fn serialize<S: Serializer>(m: &QMatrix, s: S) -> Result<S::Ok, S::Error> {
        vecvec::serialize(&m.to_rows(), s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<QMatrix, D::Error> {
        let rows = vecvec::deserialize(d)?;
        let c = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != c) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(Matrix::from_rows(rows))
    }
}
