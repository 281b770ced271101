use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::algebra::{AlgebraKind, MatrixAlgebra};
use crate::linalg::QMatrix;
use crate::poly::{q, Rational};

/// Matrices `(x, y, h)` expected to satisfy `[h,x] = 2x`, `[h,y] = -2y`,
/// `[x,y] = h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub x: QMatrix,
    pub y: QMatrix,
    pub h: QMatrix,
}

/// Outcome of checking the triple relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub in_algebra: bool,
    pub h_diagonal: bool,
    pub hx: bool,
    pub hy: bool,
    pub xy: bool,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.in_algebra {
            out.push("x, y, h in the algebra");
        }
        if !self.h_diagonal {
            out.push("h diagonal");
        }
        if !self.hx {
            out.push("[h,x] = 2x");
        }
        if !self.hy {
            out.push("[h,y] = -2y");
        }
        if !self.xy {
            out.push("[x,y] = h");
        }
        out
    }
}

pub fn verify_sl2_triple(a: &MatrixAlgebra, t: &Sl2Triple) -> TripleReport {
    let two = q(2);
    let h_diagonal =
        (0..t.h.rows()).all(|i| (0..t.h.cols()).all(|j| i == j || t.h.get(i, j).is_zero()));
    TripleReport {
        in_algebra: [&t.x, &t.y, &t.h].iter().all(|m| a.contains(m)),
        h_diagonal,
        hx: t.h.bracket(&t.x) == t.x.scale(&two),
        hy: t.h.bracket(&t.y) == t.y.scale(&-two.clone()),
        xy: t.x.bracket(&t.y) == t.h,
    }
}

fn e(n: usize, entries: &[(usize, usize, i64)]) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for &(i, j, c) in entries {
        m.set(i, j, Rational::from_integer(c.into()));
    }
    m
}

impl Sl2Triple {
    pub fn zero(n: usize) -> Self {
        let z = QMatrix::zeros(n, n);
        Sl2Triple {
            x: z.clone(),
            y: z.clone(),
            h: z,
        }
    }

    /// Subregular triple in `sl(4)` on the Jordan type `(3,1)`:
    /// `x = E23 + E34`, `y = 2(E32 + E43)`, `h = diag(0,2,0,-2)`.
    pub fn sl4_subregular() -> Self {
        Sl2Triple {
            x: e(4, &[(1, 2, 1), (2, 3, 1)]),
            y: e(4, &[(2, 1, 2), (3, 2, 2)]),
            h: e(4, &[(1, 1, 2), (3, 3, -2)]),
        }
    }

    /// The unscaled companions `y = E32 + E43`, `h = diag(0,1,0,-1)` of
    /// [`Sl2Triple::sl4_subregular`], which fail `[h,x] = 2x`.
    pub fn sl4_unscaled() -> Self {
        Sl2Triple {
            x: e(4, &[(1, 2, 1), (2, 3, 1)]),
            y: e(4, &[(2, 1, 1), (3, 2, 1)]),
            h: e(4, &[(1, 1, 1), (3, 3, -1)]),
        }
    }

    /// Subregular triple in `so(5)` in the block form of
    /// [`MatrixAlgebra`].
    pub fn so5_subregular() -> Self {
        Sl2Triple {
            x: e(5, &[(0, 3, 1), (1, 0, -1), (1, 2, 1), (4, 3, -1)]),
            y: e(5, &[(0, 1, -2), (3, 0, 2), (3, 2, -2), (4, 1, 2)]),
            h: e(5, &[(1, 1, 2), (3, 3, -2)]),
        }
    }
}

/// Built-in algebra/triple pairs whose slices are subregular.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BuiltinSlice {
    /// `sl(2)` with the zero triple: the slice is the whole algebra.
    Sl2,
    Sl4,
    So5,
}

impl BuiltinSlice {
    pub fn kind(self) -> AlgebraKind {
        match self {
            BuiltinSlice::Sl2 => AlgebraKind::SpecialLinear(2),
            BuiltinSlice::Sl4 => AlgebraKind::SpecialLinear(4),
            BuiltinSlice::So5 => AlgebraKind::OddOrthogonal(5),
        }
    }

    pub fn triple(self) -> Sl2Triple {
        match self {
            BuiltinSlice::Sl2 => Sl2Triple::zero(2),
            BuiltinSlice::Sl4 => Sl2Triple::sl4_subregular(),
            BuiltinSlice::So5 => Sl2Triple::so5_subregular(),
        }
    }

    /// Parameter names used for the slice.
    pub fn parameter_names(self) -> Vec<String> {
        let names: &[&str] = match self {
            BuiltinSlice::Sl2 => &["u", "v", "w"],
            BuiltinSlice::Sl4 => &["a", "b", "c", "d", "e"],
            BuiltinSlice::So5 => &["a", "b", "c", "d"],
        };
        names.iter().map(|s| s.to_string()).collect()
    }
}

impl std::str::FromStr for BuiltinSlice {
    type Err = super::LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s
            .trim()
            .to_ascii_lowercase()
            .replace(['(', ')', '_'], "")
            .as_str()
        {
            "sl2" | "a1" => Ok(BuiltinSlice::Sl2),
            "sl4" | "a3" => Ok(BuiltinSlice::Sl4),
            "so5" | "b2" => Ok(BuiltinSlice::So5),
            _ => Err(super::LieError::UnsupportedAlgebra(s.to_string())),
        }
    }
}

impl std::fmt::Display for BuiltinSlice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.kind())
    }
}
