use std::fmt;

use serde::{Deserialize, Serialize};

use super::HitchinError;
use crate::dynkin::{invariant_degrees, DynkinType, RootSystem};
use crate::poly::rational::superscript;
use crate::poly::MPoly;
use crate::singularity::{semiuniversal_deformation, DeformationFamily};

/// The global family over the Hitchin base with its bundle bookkeeping.
///
/// Weights are powers of a square root `L` of `K`, so `K = L^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub dynkin: DynkinType,
    pub equation: MPoly,
    pub central_fiber: MPoly,
    /// Deformation direction paired with each parameter.
    pub directions: Vec<MPoly>,
    pub fiber_vars: Vec<String>,
    pub params: Vec<String>,
    /// `L`-weights of `x, y, z`.
    pub ambient: Vec<i64>,
    /// `L`-weight of the bundle the equation is a section of.
    pub target: i64,
    /// `K`-degrees of the base summands.
    pub base_degrees: Vec<u32>,
    /// `L`-weight of every variable and parameter.
    pub ledger: Vec<(String, i64)>,
    pub ledger_ok: bool,
    /// The product of all roots at `b` is a section of this power of `K`.
    pub discriminant_k_power: usize,
}

/// `K^{w/2}` for even `w`, `L^w` otherwise.
pub fn bundle_name(w: i64) -> String {
    let pow = |base: &str, e: i64| match e {
        0 => "O".to_string(),
        1 => base.to_string(),
        e => format!("{base}{}", superscript(e as u64)),
    };
    if w % 2 == 0 {
        pow("K", w / 2)
    } else {
        pow("L", w)
    }
}

/// Checks that every monomial of `equation` has `L`-weight `target`.
pub fn ledger_holds(equation: &MPoly, ledger: &[(String, i64)], target: i64) -> bool {
    equation.is_weighted_homogeneous(ledger, target)
}

pub fn family_spec(d: DynkinType) -> Result<FamilySpec, HitchinError> {
    let fam = semiuniversal_deformation(d)?;
    spec_from_family(&fam)
}

pub fn spec_from_family(fam: &DeformationFamily) -> Result<FamilySpec, HitchinError> {
    let ambient = fam.model.lie_weights().to_vec();
    let ledger_ok = ledger_holds(&fam.equation, &fam.ledger, fam.degree);
    if !ledger_ok {
        return Err(HitchinError::LedgerViolation(format!(
            "{} has a monomial of weight other than {}",
            fam.equation, fam.degree
        )));
    }
    let base_degrees = invariant_degrees(fam.dynkin);
    for (b, &dj) in fam.params.iter().zip(&base_degrees) {
        if fam.weight(b) != Some(2 * dj as i64) {
            return Err(HitchinError::LedgerViolation(format!(
                "{b} is not a section of K^{dj}"
            )));
        }
    }
    Ok(FamilySpec {
        dynkin: fam.dynkin,
        equation: fam.equation.clone(),
        central_fiber: fam.central_fiber(),
        directions: fam.directions.clone(),
        fiber_vars: fam.model.vars(),
        params: fam.params.clone(),
        ambient,
        target: fam.degree,
        base_degrees,
        ledger: fam.ledger.clone(),
        ledger_ok,
        discriminant_k_power: RootSystem::expected_count(fam.dynkin),
    })
}

impl FamilySpec {
    /// `f + b1·g1 + ...` in the order of the deformation directions.
    pub fn equation_pretty(&self) -> String {
        let mut out = self.central_fiber.to_pretty();
        for (b, g) in self.params.iter().zip(&self.directions) {
            let term = if g.is_constant() {
                match g.constant_value() {
                    Some(c) if c == crate::poly::q(1) => b.clone(),
                    _ => format!("{b}·{}", g.to_pretty()),
                }
            } else if g.num_terms() == 1 {
                format!("{b}·{}", g.to_pretty())
            } else {
                format!("{b}·({})", g.to_pretty())
            };
            out.push_str(" + ");
            out.push_str(&term);
        }
        out
    }

    pub fn equation_display(&self) -> String {
        format!(
            "{} = 0 ∈ tot({})",
            self.equation_pretty(),
            bundle_name(self.target)
        )
    }

    pub fn ambient_display(&self) -> String {
        let parts: Vec<String> = self.ambient.iter().map(|&w| bundle_name(w)).collect();
        format!("tot({})", parts.join(" ⊕ "))
    }

    pub fn base_display(&self) -> String {
        let parts: Vec<String> = self
            .base_degrees
            .iter()
            .map(|&d| format!("H⁰({})", bundle_name(2 * d as i64)))
            .collect();
        parts.join(" ⊕ ")
    }

    /// `L`-weights of the ambient written as powers of `K` where integral.
    pub fn ambient_k_powers(&self) -> Vec<Option<i64>> {
        self.ambient
            .iter()
            .map(|&w| (w % 2 == 0).then_some(w / 2))
            .collect()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.equation_display())?;
        writeln!(f, "ambient: {}", self.ambient_display())?;
        writeln!(f, "base: {}", self.base_display())?;
        write!(
            f,
            "discriminant: section of {}",
            bundle_name(2 * self.discriminant_k_power as i64)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn b2_display() {
        let s = family_spec(t("B2")).unwrap();
        assert_eq!(s.equation_display(), "x⁴ − yz + b1·x² + b2 = 0 ∈ tot(K⁴)");
        assert_eq!(s.ambient_display(), "tot(K ⊕ K² ⊕ K²)");
        assert_eq!(s.base_display(), "H⁰(K²) ⊕ H⁰(K⁴)");
    }

    #[test]
    fn a1_and_e6() {
        let a1 = family_spec(t("A1")).unwrap();
        assert_eq!(a1.ambient, vec![2, 2, 2]);
        assert_eq!(bundle_name(a1.target), "K²");
        let e6 = family_spec(t("E6")).unwrap();
        assert_eq!(e6.ambient_k_powers(), vec![Some(3), Some(4), Some(6)]);
        assert_eq!(bundle_name(e6.target), "K¹²");
        assert_eq!(e6.base_degrees, vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(e6.discriminant_k_power, 72);
    }

    #[test]
    fn odd_weights_use_l() {
        assert_eq!(bundle_name(3), "L³");
        assert_eq!(bundle_name(2), "K");
        assert_eq!(bundle_name(0), "O");
    }
}
