use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::LieError;
use crate::dynkin::DynkinType;
use crate::linalg::{PMatrix, QMatrix};
use crate::poly::{MPoly, Rational};

/// Which classical matrix model to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraKind {
    /// `sl(n)`, trace-free `n x n` matrices.
    SpecialLinear(usize),
    /// `so(2m+1)` preserving the form `[[1,0,0],[0,0,I],[0,I,0]]`; the
    /// payload is the matrix size `2m+1`.
    OddOrthogonal(usize),
}

impl AlgebraKind {
    pub fn matrix_size(self) -> usize {
        match self {
            AlgebraKind::SpecialLinear(n) | AlgebraKind::OddOrthogonal(n) => n,
        }
    }

    pub fn dynkin_type(self) -> Result<DynkinType, LieError> {
        let t = match self {
            AlgebraKind::SpecialLinear(n) if n >= 2 => format!("A{}", n - 1),
            AlgebraKind::OddOrthogonal(n) if n >= 5 && n % 2 == 1 => format!("B{}", n / 2),
            other => return Err(LieError::UnsupportedAlgebra(other.to_string())),
        };
        Ok(t.parse().expect("valid classical type"))
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::SpecialLinear(n) => write!(f, "sl{n}"),
            AlgebraKind::OddOrthogonal(n) => write!(f, "so{n}"),
        }
    }
}

impl FromStr for AlgebraKind {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, LieError> {
        let t = s.trim().to_ascii_lowercase().replace(['(', ')', '_'], "");
        let bad = || LieError::UnsupportedAlgebra(s.to_string());
        let (head, n) = t.split_at(t.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let n: usize = n.parse().map_err(|_| bad())?;
        let kind = match head {
            "sl" => AlgebraKind::SpecialLinear(n),
            "so" => AlgebraKind::OddOrthogonal(n),
            _ => return Err(bad()),
        };
        kind.dynkin_type()?;
        Ok(kind)
    }
}

/// A Lie algebra of matrices with a named coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAlgebra {
    pub kind: AlgebraKind,
    pub basis: Vec<QMatrix>,
    pub coords: Vec<String>,
}

fn unit(n: usize, entries: &[(usize, usize, i64)]) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for &(i, j, c) in entries {
        m.set(i, j, Rational::from_integer(c.into()));
    }
    m
}

fn sl_basis(n: usize) -> (Vec<QMatrix>, Vec<String>) {
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(unit(n, &[(i, j, 1)]));
                names.push(format!("e{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n - 1 {
        basis.push(unit(n, &[(i, i, 1), (i + 1, i + 1, -1)]));
        names.push(format!("h{}", i + 1));
    }
    (basis, names)
}

/// Block form `[[0, u, v], [-v^T, A, B], [-u^T, C, -A^T]]` with `B, C`
/// antisymmetric.
fn so_basis(size: usize) -> (Vec<QMatrix>, Vec<String>) {
    let m = size / 2;
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..m {
        basis.push(unit(size, &[(0, 1 + i, 1), (1 + m + i, 0, -1)]));
        names.push(format!("u{}", i + 1));
    }
    for i in 0..m {
        basis.push(unit(size, &[(0, 1 + m + i, 1), (1 + i, 0, -1)]));
        names.push(format!("v{}", i + 1));
    }
    for i in 0..m {
        for j in 0..m {
            basis.push(unit(size, &[(1 + i, 1 + j, 1), (1 + m + j, 1 + m + i, -1)]));
            names.push(format!("a{}", i * m + j + 1));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let single = pairs.len() == 1;
    for (k, &(i, j)) in pairs.iter().enumerate() {
        basis.push(unit(size, &[(1 + i, 1 + m + j, 1), (1 + j, 1 + m + i, -1)]));
        names.push(if single {
            "b".into()
        } else {
            format!("b{}", k + 1)
        });
    }
    for (k, &(i, j)) in pairs.iter().enumerate() {
        basis.push(unit(size, &[(1 + m + i, 1 + j, 1), (1 + m + j, 1 + i, -1)]));
        names.push(if single {
            "c".into()
        } else {
            format!("c{}", k + 1)
        });
    }
    (basis, names)
}

fn orthogonal_form(size: usize) -> QMatrix {
    let m = size / 2;
    let mut j = QMatrix::zeros(size, size);
    j.set(0, 0, Rational::one());
    for i in 0..m {
        j.set(1 + i, 1 + m + i, Rational::one());
        j.set(1 + m + i, 1 + i, Rational::one());
    }
    j
}

impl MatrixAlgebra {
    /// Builds the basis and checks closure under the bracket.
    pub fn build(kind: AlgebraKind) -> Result<Self, LieError> {
        kind.dynkin_type()?;
        let n = kind.matrix_size();
        let (basis, coords) = match kind {
            AlgebraKind::SpecialLinear(_) => sl_basis(n),
            AlgebraKind::OddOrthogonal(_) => so_basis(n),
        };
        let a = MatrixAlgebra {
            kind,
            basis,
            coords,
        };
        if !a.is_closed() {
            return Err(LieError::NotInAlgebra(
                "basis is not closed under the bracket".into(),
            ));
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix_size(&self) -> usize {
        self.kind.matrix_size()
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.kind.dynkin_type().expect("checked at construction")
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        let n = self.matrix_size();
        if m.rows() != n || m.cols() != n {
            return false;
        }
        match self.kind {
            AlgebraKind::SpecialLinear(_) => m.trace().is_zero(),
            AlgebraKind::OddOrthogonal(_) => {
                let j = orthogonal_form(n);
                m.transpose().mul_mat(&j).add_mat(&j.mul_mat(m)).is_zero()
            }
        }
    }

    /// Coordinates of `m` in the basis.
    pub fn coordinates(&self, m: &QMatrix) -> Option<Vec<Rational>> {
        if !self.contains(m) {
            return None;
        }
        flat_solve(&self.basis, m)
    }

    /// `sum c_i B_i` with the coordinate names as variables.
    pub fn generic_element(&self) -> PMatrix {
        let n = self.matrix_size();
        let mut out = PMatrix::zeros(n, n);
        for (b, name) in self.basis.iter().zip(&self.coords) {
            let v = MPoly::var(name);
            out = out.add_mat(&b.map(|c| v.scale(c)));
        }
        out.map(|p| p.in_context(&self.coords).expect("coordinates"))
    }

    pub fn is_closed(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            self.basis[i + 1..]
                .iter()
                .all(|b| self.contains(&a.bracket(b)))
        })
    }
}

/// Solves `sum x_i mats[i] = target` entrywise.
pub(crate) fn flat_solve(mats: &[QMatrix], target: &QMatrix) -> Option<Vec<Rational>> {
    let len = target.entries().len();
    if mats.is_empty() {
        return target.is_zero().then(Vec::new);
    }
    let a = QMatrix::from_fn(len, mats.len(), |r, c| mats[c].entries()[r].clone());
    a.solve(target.entries())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for (k, d) in [("sl2", 3), ("sl4", 15), ("so5", 10), ("so7", 21)] {
            let a = MatrixAlgebra::build(k.parse().unwrap()).unwrap();
            assert_eq!(a.dim(), d, "{k}");
            assert!(a.basis.iter().all(|b| a.contains(b)));
        }
    }

    #[test]
    fn so5_coordinates() {
        let a = MatrixAlgebra::build(AlgebraKind::OddOrthogonal(5)).unwrap();
        assert_eq!(
            a.coords,
            ["u1", "u2", "v1", "v2", "a1", "a2", "a3", "a4", "b", "c"]
        );
        let g = a.generic_element();
        assert_eq!(g.get(1, 0).to_string(), "-v1");
        assert_eq!(g.get(4, 1).to_string(), "-c");
        assert_eq!(g.get(4, 4).to_string(), "-a4");
        assert_eq!(g.get(2, 3).to_string(), "-b");
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!("so4".parse::<AlgebraKind>().is_err());
        assert!("sl1".parse::<AlgebraKind>().is_err());
        assert!("gl3".parse::<AlgebraKind>().is_err());
        assert_eq!(
            "sl(4)".parse::<AlgebraKind>().unwrap(),
            AlgebraKind::SpecialLinear(4)
        );
    }

    #[test]
    fn coordinates_roundtrip() {
        let a = MatrixAlgebra::build(AlgebraKind::OddOrthogonal(5)).unwrap();
        let m = a.basis[3].add_mat(&a.basis[8].scale(&Rational::from_integer(3.into())));
        let c = a.coordinates(&m).unwrap();
        assert_eq!(c[3], Rational::one());
        assert_eq!(c[8], Rational::from_integer(3.into()));
        assert!(a.coordinates(&QMatrix::identity(5)).is_none());
    }
}
