use std::fmt;

use serde::{Deserialize, Serialize};

use super::jacobi::jacobi_basis;
use super::model::SingularityModel;
use super::symmetry::{symmetry_action, SymmetryAction};
use super::SingularityError;
use crate::dynkin::{invariant_degrees, DynkinType};
use crate::poly::{MPoly, MonomialOrder};

/// `F = f + sum b_i g_i` with a weight for every variable and parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationFamily {
    /// The type the family is versal for (folded when a group acts).
    pub dynkin: DynkinType,
    pub model: SingularityModel,
    pub action: SymmetryAction,
    pub params: Vec<String>,
    pub directions: Vec<MPoly>,
    pub equation: MPoly,
    /// Weight of each of `x, y, z, b_1, ..., b_r`.
    pub ledger: Vec<(String, i64)>,
    /// Weighted degree of every monomial of `equation`.
    pub degree: i64,
}

/// Semi-universal deformation for an ADE type or a type with a built-in
/// symmetry action.
pub fn semiuniversal_deformation(d: DynkinType) -> Result<DeformationFamily, SingularityError> {
    let (model, act) = symmetry_action(d)?;
    deformation_with_action(d, model, act)
}

/// Deformation of `model` restricted to the invariants of `act`, versal for
/// the type `d`.
pub fn deformation_with_action(
    d: DynkinType,
    model: SingularityModel,
    act: SymmetryAction,
) -> Result<DeformationFamily, SingularityError> {
    let basis = if act.generators.is_empty() {
        jacobi_basis(&model, None)?.monomials
    } else {
        jacobi_basis(&model, Some(&act))?
            .invariant
            .expect("action given")
    };
    let degree = model.lie_degree();
    let weight_of = |g: &MPoly| -> Result<i64, SingularityError> {
        let ws = g.weighted_degrees(&model.lie_weight_table());
        if ws.len() != 1 {
            return Err(SingularityError::WeightLaw(format!(
                "{g} is not homogeneous"
            )));
        }
        Ok(*ws.iter().next().unwrap())
    };
    let mut dirs: Vec<(i64, MPoly)> = basis
        .into_iter()
        .map(|g| Ok((weight_of(&g)?, g)))
        .collect::<Result<_, SingularityError>>()?;
    let ord = MonomialOrder::grevlex();
    dirs.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then_with(|| crate::poly::cmp_leading(&b.1, &a.1, &ord))
    });
    let degrees = invariant_degrees(d);
    if degrees.len() != dirs.len() {
        return Err(SingularityError::WeightLaw(format!(
            "{} deformation directions for rank {}",
            dirs.len(),
            degrees.len()
        )));
    }
    let params: Vec<String> = (1..=dirs.len()).map(|i| format!("b{i}")).collect();
    let mut ledger = model.lie_weight_table();
    let mut vars = model.vars();
    vars.extend(params.iter().cloned());
    let mut equation = model.equation.in_context(&vars)?;
    for ((b, &di), (w, g)) in params.iter().zip(&degrees).zip(&dirs) {
        let bw = 2 * di as i64;
        if bw + w != degree {
            return Err(SingularityError::WeightLaw(format!(
                "{b} has weight {bw} and pairs with {g} of weight {w}, total {} instead of {degree}",
                bw + w
            )));
        }
        ledger.push((b.clone(), bw));
        equation = &equation + &(&MPoly::var(b) * g);
    }
    let equation = equation.in_context(&vars)?;
    if !equation.is_weighted_homogeneous(&ledger, degree) {
        return Err(SingularityError::WeightLaw(
            "family is not homogeneous".into(),
        ));
    }
    Ok(DeformationFamily {
        dynkin: d,
        model,
        action: act,
        params,
        directions: dirs.into_iter().map(|(_, g)| g).collect(),
        equation,
        ledger,
        degree,
    })
}

impl DeformationFamily {
    pub fn weight(&self, name: &str) -> Option<i64> {
        self.ledger.iter().find(|(n, _)| n == name).map(|&(_, w)| w)
    }

    /// The fibre over `b = 0`.
    pub fn central_fiber(&self) -> MPoly {
        let zeros: Vec<(&str, crate::poly::Rational)> = self
            .params
            .iter()
            .map(|b| (b.as_str(), crate::poly::q(0)))
            .collect();
        self.equation.eval_partial(&zeros)
    }

    /// Checks that every generator of the action fixes the family.
    pub fn is_invariant(&self) -> bool {
        let xyz = self.model.vars();
        self.action
            .generators
            .iter()
            .all(|g| g.pull_back(&self.equation, &xyz) == self.equation)
    }
}

impl fmt::Display for DeformationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.equation.to_pretty())
    }
}
