use num_traits::One;
use serde::{Deserialize, Serialize};

use super::section::LocalSection;
use super::HitchinError;
use crate::dynkin::{express_in_invariants, CartanChart, DynkinType, Family, RootSystem};
use crate::linalg::PMatrix;
use crate::poly::upoly::UPoly;
use crate::poly::{q, MPoly, Rational};

/// `prod over all roots of alpha(t)` as a polynomial in the invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDiscriminant {
    pub dynkin: DynkinType,
    /// Names of the invariants, one per degree.
    pub names: Vec<String>,
    pub polynomial: MPoly,
    /// Number of roots, which is the power of `K` the product is a section of.
    pub root_count: usize,
}

pub fn invariant_names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("q{i}")).collect()
}

pub fn invariant_discriminant(d: DynkinType) -> Result<InvariantDiscriminant, HitchinError> {
    let chart = CartanChart::new(d)?;
    let rs = RootSystem::new(d);
    let prod = chart.root_product(&rs);
    let names = invariant_names(chart.rank());
    let polynomial = express_in_invariants(&prod, &chart.invariants, &names)?;
    Ok(InvariantDiscriminant {
        dynkin: d,
        names,
        polynomial,
        root_count: rs.len(),
    })
}

/// Location of a zero: rational, or the roots of a square-free factor
/// without rational roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroLocation {
    Rational(#[serde(with = "crate::poly::rational::serde_text")] Rational),
    Algebraic(MPoly),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantZero {
    pub location: ZeroLocation,
    pub multiplicity: usize,
}

/// Zeros with multiplicity from the square-free decomposition; rational
/// roots are split off each square-free part.
pub fn isolate_zeros(p: &UPoly, var: &str) -> Vec<DiscriminantZero> {
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        let mut rest = part.clone();
        for r in part.rational_roots() {
            rest = rest.div_rem(&UPoly::new(vec![-r.clone(), q(1)])).0;
            out.push(DiscriminantZero {
                location: ZeroLocation::Rational(r),
                multiplicity: mult,
            });
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.push(DiscriminantZero {
                location: ZeroLocation::Algebraic(rest.monic().to_mpoly(var)),
                multiplicity: mult,
            });
        }
    }
    out.sort_by(|a, b| match (&a.location, &b.location) {
        (ZeroLocation::Rational(x), ZeroLocation::Rational(y)) => x.cmp(y),
        (ZeroLocation::Rational(_), _) => std::cmp::Ordering::Less,
        (_, ZeroLocation::Rational(_)) => std::cmp::Ordering::Greater,
        _ => std::cmp::Ordering::Equal,
    });
    out
}

/// Discriminant of a local section.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discriminant {
    pub dynkin: DynkinType,
    pub var: String,
    pub polynomial: MPoly,
    pub zeros: Vec<DiscriminantZero>,
    pub identically_zero: bool,
    /// The product of all roots is a section of this power of `K`.
    pub k_power: usize,
}

impl Discriminant {
    /// Every zero is simple and the discriminant is not identically zero.
    pub fn is_transversal(&self) -> bool {
        !self.identically_zero && self.zeros.iter().all(|z| z.multiplicity == 1)
    }

    pub fn rational_zeros(&self) -> Vec<(Rational, usize)> {
        self.zeros
            .iter()
            .filter_map(|z| match &z.location {
                ZeroLocation::Rational(r) => Some((r.clone(), z.multiplicity)),
                ZeroLocation::Algebraic(_) => None,
            })
            .collect()
    }
}

pub fn discriminant(d: DynkinType, b: &LocalSection) -> Result<Discriminant, HitchinError> {
    let inv = invariant_discriminant(d)?;
    check_section(d, b)?;
    let polynomial = inv
        .polynomial
        .substitute(&b.assignment(&inv.names))
        .in_context(std::slice::from_ref(&b.var))?;
    let up = UPoly::from_mpoly(&polynomial, &b.var).expect("univariate");
    Ok(Discriminant {
        dynkin: d,
        var: b.var.clone(),
        identically_zero: up.is_zero(),
        zeros: isolate_zeros(&up, &b.var),
        polynomial,
        k_power: inv.root_count,
    })
}

pub(crate) fn check_section(d: DynkinType, b: &LocalSection) -> Result<(), HitchinError> {
    let expected = crate::dynkin::invariant_degrees(d);
    if b.degrees != expected {
        return Err(HitchinError::SectionMismatch(format!(
            "degrees {:?} do not match {d} ({expected:?})",
            b.degrees
        )));
    }
    Ok(())
}

/// Resultant in `var` by the Sylvester determinant.
pub fn sylvester_resultant(p: &MPoly, r: &MPoly, var: &str) -> MPoly {
    let a = p.coefficients_in(var);
    let b = r.coefficients_in(var);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return MPoly::one();
    }
    let m_ = PMatrix::from_fn(size, size, |i, j| {
        if i < n {
            // row i holds a shifted by i, highest coefficient first
            j.checked_sub(i)
                .filter(|&k| k <= m)
                .map_or_else(MPoly::zero, |k| a[m - k].clone())
        } else {
            let i = i - n;
            j.checked_sub(i)
                .filter(|&k| k <= n)
                .map_or_else(MPoly::zero, |k| b[n - k].clone())
        }
    });
    m_.det()
}

/// Characteristic polynomial of the standard representation written through
/// the section: `lambda^n + sum_j b_j lambda^(n - d_j)` (times `lambda` for
/// type `B`).
pub fn spectral_polynomial(
    d: DynkinType,
    b: &LocalSection,
    lambda: &str,
) -> Result<MPoly, HitchinError> {
    check_section(d, b)?;
    let n: u32 = match d.family() {
        Family::A => d.rank() as u32 + 1,
        Family::B => 2 * d.rank() as u32 + 1,
        Family::C => 2 * d.rank() as u32,
        _ => {
            return Err(HitchinError::Unsupported(format!(
                "no spectral polynomial for {d}"
            )))
        }
    };
    let l = MPoly::var(lambda);
    let mut p = l.pow(n);
    for (c, &dj) in b.components.iter().zip(&b.degrees) {
        p = &p + &(c * &l.pow(n - dj));
    }
    Ok(p)
}

/// Branch polynomial of the spectral cover, `Res_lambda(P, dP/dlambda)`.
pub fn branch_locus(d: DynkinType, b: &LocalSection) -> Result<MPoly, HitchinError> {
    let lambda = if b.var == "lambda" { "mu" } else { "lambda" };
    let p = spectral_polynomial(d, b, lambda)?;
    let res = sylvester_resultant(&p, &p.derivative(lambda), lambda);
    Ok(res.in_context(std::slice::from_ref(&b.var))?)
}

/// Product of the distinct monic irreducible-over-`Q` pieces, i.e. the
/// monic square-free part.
pub fn radical(p: &UPoly) -> UPoly {
    p.squarefree_decomposition()
        .into_iter()
        .fold(UPoly::new(vec![q(1)]), |acc, (a, _)| &acc * &a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_one_product() {
        let inv = invariant_discriminant(t("A1")).unwrap();
        assert_eq!(inv.polynomial, MPoly::parse("4*q1").unwrap());
        assert_eq!(inv.root_count, 2);
    }

    #[test]
    fn a1_zeros() {
        let b = LocalSection::parse(t("A1"), "x", &["x*(x - 1)"]).unwrap();
        let d = discriminant(t("A1"), &b).unwrap();
        assert_eq!(d.rational_zeros(), vec![(q(0), 1), (q(1), 1)]);
        assert!(d.is_transversal());
        let b = LocalSection::parse(t("A1"), "x", &["x^2"]).unwrap();
        let d = discriminant(t("A1"), &b).unwrap();
        assert_eq!(d.rational_zeros(), vec![(q(0), 2)]);
        assert!(!d.is_transversal());
    }

    #[test]
    fn b2_discriminant_factors() {
        let b = LocalSection::parse(t("B2"), "x", &["x", "1"]).unwrap();
        let d = discriminant(t("B2"), &b).unwrap();
        assert!(!d.identically_zero);
        assert_eq!(d.k_power, 8);
        // q2 (q1^2 - 4 q2) up to a constant: x^2 - 4 is (x - 2)(x + 2)
        assert_eq!(d.rational_zeros(), vec![(q(-2), 1), (q(2), 1)]);
    }

    #[test]
    fn irrational_zeros_kept_as_factors() {
        let b = LocalSection::parse(t("A1"), "x", &["x^2 - 2"]).unwrap();
        let d = discriminant(t("A1"), &b).unwrap();
        assert_eq!(d.zeros.len(), 1);
        assert_eq!(
            d.zeros[0].location,
            ZeroLocation::Algebraic(MPoly::parse("x^2 - 2").unwrap())
        );
    }

    #[test]
    fn branch_locus_matches_discriminant_support() {
        for (ty, comps) in [
            ("A1", vec!["x*(x - 1)"]),
            ("B2", vec!["x", "1"]),
            ("B2", vec!["x^2 - 1", "x"]),
        ] {
            let b = LocalSection::parse(t(ty), "x", &comps).unwrap();
            let disc = discriminant(t(ty), &b).unwrap();
            let br = branch_locus(t(ty), &b).unwrap();
            let r1 = radical(&UPoly::from_mpoly(&disc.polynomial, "x").unwrap());
            let r2 = radical(&UPoly::from_mpoly(&br, "x").unwrap());
            assert_eq!(r1, r2, "{ty} {comps:?}");
        }
    }
}
