use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::model::SingularityModel;
use super::symmetry::SymmetryAction;
use super::SingularityError;
use crate::linalg::QMatrix;
use crate::poly::{default_budget, GroebnerBasis, Ideal, MPoly, MonomialOrder, Rational};

/// Standard monomials of the Jacobian ideal and, when a symmetry group is
/// given, a basis of the invariant part of the Jacobi ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiRingBasis {
    pub monomials: Vec<MPoly>,
    pub invariant: Option<Vec<MPoly>>,
}

pub fn jacobian_groebner(f: &MPoly) -> Result<GroebnerBasis, SingularityError> {
    let gens: Vec<MPoly> = f.partials().into_iter().filter(|g| !g.is_zero()).collect();
    let ideal = Ideal::with_context(f.vars(), gens)?;
    Ok(ideal.groebner_with_budget(&MonomialOrder::grevlex(), default_budget())?)
}

/// Coordinates of `p` (already reduced) in the standard monomials.
fn coordinates(p: &MPoly, monomials: &[MPoly]) -> Vec<Rational> {
    monomials
        .iter()
        .map(|m| {
            let (e, _) = m.terms().next().expect("monomial");
            p.terms()
                .find(|(k, _)| *k == e)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Rational::zero)
        })
        .collect()
}

pub fn jacobi_basis(
    m: &SingularityModel,
    act: Option<&SymmetryAction>,
) -> Result<JacobiRingBasis, SingularityError> {
    let gb = jacobian_groebner(&m.equation)?;
    let monomials = gb
        .quotient_basis()
        .monomials()
        .ok_or(SingularityError::NonIsolated)?
        .to_vec();
    let invariant = match act {
        None => None,
        Some(act) => {
            let elems = act.elements()?;
            let vars = m.vars();
            let n = Rational::from_integer((elems.len() as i64).into());
            let mut chosen: Vec<MPoly> = Vec::new();
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for mono in &monomials {
                let avg = elems
                    .iter()
                    .fold(MPoly::zero_in(&vars), |acc, g| {
                        &acc + &g.pull_back(mono, &vars)
                    })
                    .scale(&n.recip());
                let red = gb.reduce(&avg);
                if red.is_zero() {
                    continue;
                }
                let mut trial = rows.clone();
                trial.push(coordinates(&red, &monomials));
                if QMatrix::from_rows(trial.clone()).rank() == trial.len() {
                    rows = trial;
                    chosen.push(red);
                }
            }
            Some(chosen)
        }
    };
    Ok(JacobiRingBasis {
        monomials,
        invariant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularity::{normal_form, symmetry_action};

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn a3_basis() {
        let m = normal_form("A3".parse().unwrap()).unwrap();
        let b = jacobi_basis(&m, None).unwrap();
        assert_eq!(b.monomials, vec![p("1"), p("x"), p("x^2")]);
        assert!(b.invariant.is_none());
    }

    #[test]
    fn invariant_parts() {
        let (m, act) = symmetry_action("B2".parse().unwrap()).unwrap();
        let b = jacobi_basis(&m, Some(&act)).unwrap();
        assert_eq!(b.invariant.unwrap(), vec![p("1"), p("x^2")]);
        let (m, act) = symmetry_action("B3".parse().unwrap()).unwrap();
        let b = jacobi_basis(&m, Some(&act)).unwrap();
        assert_eq!(b.monomials.len(), 5);
        assert_eq!(b.invariant.unwrap().len(), 3);
    }

    #[test]
    fn a1_basis() {
        let m = normal_form("A1".parse().unwrap()).unwrap();
        assert_eq!(jacobi_basis(&m, None).unwrap().monomials, vec![p("1")]);
    }

    #[test]
    fn ranks_match() {
        for r in 1..=8 {
            for h in crate::dynkin::DynkinType::all_of_rank(r) {
                if let Ok(m) = normal_form(h) {
                    assert_eq!(jacobi_basis(&m, None).unwrap().monomials.len(), r, "{h}");
                }
            }
        }
    }
}
