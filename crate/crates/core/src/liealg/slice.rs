use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::algebra::MatrixAlgebra;
use super::triple::{verify_sl2_triple, BuiltinSlice, Sl2Triple};
use super::LieError;
use crate::linalg::{PMatrix, QMatrix};
use crate::poly::{MPoly, Rational};

/// The affine family `x + sum p_i K_i` with `K_i` spanning `ker ad(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlodowySlice {
    pub algebra: MatrixAlgebra,
    pub triple: Sl2Triple,
    pub kernel: Vec<QMatrix>,
    pub params: Vec<String>,
    pub family: PMatrix,
    /// `2 - lambda_i` where `[h, K_i] = lambda_i K_i`; `None` if some
    /// `K_i` is not an `ad(h)`-eigenvector.
    pub weights: Option<Vec<i64>>,
}

/// JSON view of a slice: entries as canonical polynomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceJson {
    pub algebra: String,
    pub params: Vec<String>,
    pub weights: Option<Vec<i64>>,
    pub matrix: Vec<Vec<String>>,
}

/// Entry positions in pivot priority: strictly lower positions in row-major
/// order, then the others in reverse row-major order.
fn pivot_priority(n: usize) -> Vec<usize> {
    let lower = (0..n * n).filter(|&p| p / n > p % n);
    let rest = (0..n * n).rev().filter(|&p| p / n <= p % n);
    lower.chain(rest).collect()
}

fn default_names(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (1..=k).map(|i| format!("p{i}")).collect()
    }
}

/// Canonical basis of the span of `mats`: reduced echelon form with pivots
/// taken in [`pivot_priority`] order, sorted by first nonzero entry.
pub fn normalize_basis(mats: &[QMatrix]) -> Vec<QMatrix> {
    let Some(first) = mats.first() else {
        return Vec::new();
    };
    let n = first.rows();
    let order = pivot_priority(n);
    let m = QMatrix::from_fn(mats.len(), n * n, |r, c| {
        mats[r].entries()[order[c]].clone()
    });
    let (red, pivots) = m.rref();
    let mut out: Vec<QMatrix> = (0..pivots.len())
        .map(|r| {
            let mut flat = vec![Rational::zero(); n * n];
            for (c, &p) in order.iter().enumerate() {
                flat[p] = red.get(r, c).clone();
            }
            QMatrix::from_vec(n, n, flat)
        })
        .collect();
    out.sort_by_key(|k| k.entries().iter().position(|c| !c.is_zero()));
    out
}

fn ad_weight(h: &QMatrix, k: &QMatrix) -> Option<i64> {
    let b = h.bracket(k);
    let (p, c) = k.entries().iter().enumerate().find(|(_, c)| !c.is_zero())?;
    let lambda = &b.entries()[p] / c;
    (b == k.scale(&lambda) && lambda.is_integer())
        .then(|| i64::try_from(lambda.to_integer()).ok())
        .flatten()
        .map(|l| 2 - l)
}

impl SlodowySlice {
    /// Slice with parameters named `a, b, c, ...`.
    pub fn new(a: &MatrixAlgebra, t: &Sl2Triple) -> Result<Self, LieError> {
        Self::with_names(a, t, None)
    }

    /// Slice with explicit parameter names (one per kernel vector).
    pub fn with_names(
        a: &MatrixAlgebra,
        t: &Sl2Triple,
        names: Option<&[String]>,
    ) -> Result<Self, LieError> {
        let report = verify_sl2_triple(a, t);
        if !report.passed() {
            return Err(LieError::InvalidTriple(report.failures().join(", ")));
        }
        let n = a.matrix_size();
        let images: Vec<QMatrix> = a.basis.iter().map(|b| t.y.bracket(b)).collect();
        let ad = QMatrix::from_fn(n * n, a.dim(), |r, c| images[c].entries()[r].clone());
        let raw: Vec<QMatrix> = ad
            .nullspace()
            .into_iter()
            .map(|v| {
                a.basis
                    .iter()
                    .zip(&v)
                    .fold(QMatrix::zeros(n, n), |acc, (b, c)| acc.add_mat(&b.scale(c)))
            })
            .collect();
        let kernel = normalize_basis(&raw);
        let params = match names {
            Some(ns) if ns.len() == kernel.len() => ns.to_vec(),
            Some(ns) => {
                return Err(LieError::InvalidTriple(format!(
                    "{} parameter names for a {}-dimensional kernel",
                    ns.len(),
                    kernel.len()
                )))
            }
            None => default_names(kernel.len()),
        };
        let mut family = t.x.to_poly();
        for (k, p) in kernel.iter().zip(&params) {
            let v = MPoly::var(p);
            family = family.add_mat(&k.map(|c| v.scale(c)));
        }
        let family = family.map(|e| e.in_context(&params).expect("parameters"));
        let weights = kernel.iter().map(|k| ad_weight(&t.h, k)).collect();
        Ok(SlodowySlice {
            algebra: a.clone(),
            triple: t.clone(),
            kernel,
            params,
            family,
            weights,
        })
    }

    pub fn builtin(which: BuiltinSlice) -> Self {
        let a = MatrixAlgebra::build(which.kind()).expect("builtin algebra");
        let names = which.parameter_names();
        Self::with_names(&a, &which.triple(), Some(&names)).expect("builtin triple")
    }

    pub fn dim(&self) -> usize {
        self.params.len()
    }

    /// Parameter weights paired with names.
    pub fn weight_table(&self) -> Option<Vec<(String, i64)>> {
        let w = self.weights.as_ref()?;
        Some(self.params.iter().cloned().zip(w.iter().copied()).collect())
    }

    /// Checks `[y, K_i] = 0` for every kernel vector.
    pub fn kernel_is_centralized(&self) -> bool {
        self.kernel
            .iter()
            .all(|k| self.triple.y.bracket(k).is_zero())
    }

    pub fn to_json(&self) -> SliceJson {
        SliceJson {
            algebra: self.algebra.kind.to_string(),
            params: self.params.clone(),
            weights: self.weights.clone(),
            matrix: self
                .family
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MPoly;

    fn pm(rows: &[&[&str]], vars: &[String]) -> PMatrix {
        PMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| MPoly::parse(s).unwrap().in_context(vars).unwrap())
                        .collect()
                })
                .collect(),
        )
    }

    #[test]
    fn sl4_slice_matches_display() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        assert_eq!(s.dim(), 5);
        let expected = pm(
            &[
                &["-3*a", "b", "0", "0"],
                &["0", "a", "1", "0"],
                &["0", "c", "a", "1"],
                &["d", "e", "c", "a"],
            ],
            &s.params,
        );
        assert_eq!(s.family, expected);
        assert_eq!(s.weights, Some(vec![2, 4, 4, 4, 6]));
        assert!(s.kernel_is_centralized());
    }

    #[test]
    fn so5_slice_matches_display() {
        let s = SlodowySlice::builtin(BuiltinSlice::So5);
        assert_eq!(s.dim(), 4);
        let expected = pm(
            &[
                &["0", "-a", "-b", "1", "0"],
                &["-1", "0", "1", "0", "0"],
                &["0", "c", "-b", "0", "0"],
                &["a", "0", "d", "0", "-c"],
                &["b", "-d", "0", "-1", "b"],
            ],
            &s.params,
        );
        assert_eq!(s.family, expected);
        assert_eq!(s.weights, Some(vec![4, 2, 4, 4]));
    }

    #[test]
    fn sl2_slice_is_everything() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl2);
        assert_eq!(s.dim(), 3);
        let expected = pm(&[&["-u", "v"], &["w", "u"]], &s.params);
        assert_eq!(s.family, expected);
        assert_eq!(s.weights, Some(vec![2, 2, 2]));
    }

    #[test]
    fn regular_sl2_slice_is_a_line() {
        let a = MatrixAlgebra::build(super::super::AlgebraKind::SpecialLinear(2)).unwrap();
        let mut t = Sl2Triple::zero(2);
        t.x.set(0, 1, Rational::from_integer(1.into()));
        t.y.set(1, 0, Rational::from_integer(1.into()));
        t.h.set(0, 0, Rational::from_integer(1.into()));
        t.h.set(1, 1, Rational::from_integer((-1).into()));
        let s = SlodowySlice::new(&a, &t).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.weights, Some(vec![4]));
    }

    #[test]
    fn rejects_invalid_triple() {
        let a = MatrixAlgebra::build(super::super::AlgebraKind::SpecialLinear(4)).unwrap();
        assert!(matches!(
            SlodowySlice::new(&a, &Sl2Triple::sl4_unscaled()),
            Err(LieError::InvalidTriple(_))
        ));
    }
}
