use serde::{Deserialize, Serialize};

use super::discriminant::check_section;
use super::section::LocalSection;
use super::smooth::LocalModel;
use super::HitchinError;
use crate::dynkin::{CartanChart, DynkinType, Family};
use crate::linalg::PMatrix;
use crate::poly::{GroebnerBasis, Ideal, MPoly, MonomialOrder};

/// `{q_j(t) = b_j(x)}` inside the chart times the Cartan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCameralCurve {
    pub dynkin: DynkinType,
    pub chart_var: String,
    pub cartan_vars: Vec<String>,
    /// `q_j(t) - b_j(x)` in the context `[x, t1, ..., tr]`.
    pub generators: Vec<MPoly>,
}

pub fn local_cameral(d: DynkinType, b: &LocalSection) -> Result<LocalCameralCurve, HitchinError> {
    check_section(d, b)?;
    let chart = CartanChart::new(d)?;
    if chart.vars.contains(&b.var) {
        return Err(HitchinError::SectionMismatch(format!(
            "chart variable `{}` collides with a Cartan coordinate",
            b.var
        )));
    }
    let mut vars = vec![b.var.clone()];
    vars.extend(chart.vars.iter().cloned());
    let generators = chart
        .invariants
        .iter()
        .zip(&b.components)
        .map(|(q, bj)| (q - bj).in_context(&vars))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LocalCameralCurve {
        dynkin: d,
        chart_var: b.var.clone(),
        cartan_vars: chart.vars,
        generators,
    })
}

impl LocalCameralCurve {
    pub fn vars(&self) -> Vec<String> {
        let mut v = vec![self.chart_var.clone()];
        v.extend(self.cartan_vars.iter().cloned());
        v
    }

    pub fn ideal(&self) -> Result<Ideal, HitchinError> {
        Ok(Ideal::with_context(&self.vars(), self.generators.clone())?)
    }

    /// A complete intersection curve is reduced exactly when its singular
    /// locus is finite.
    pub fn is_reduced(&self) -> Result<bool, HitchinError> {
        Ok(super::smooth::singular_locus_dimension(self)? < 1)
    }
}

impl LocalModel for LocalCameralCurve {
    fn vars(&self) -> Vec<String> {
        LocalCameralCurve::vars(self)
    }

    fn equations(&self) -> Vec<MPoly> {
        self.generators.clone()
    }

    fn chart_var(&self) -> &str {
        &self.chart_var
    }

    fn fiber_vars(&self) -> Vec<String> {
        self.cartan_vars.clone()
    }

    fn has_surface_fibers(&self) -> bool {
        false
    }
}

/// Diagonal Cartan of `sl(r+1)` or `so(2r+1)` in chart coordinates.
pub fn diagonal_torus(d: DynkinType) -> Result<PMatrix, HitchinError> {
    let chart = CartanChart::new(d)?;
    let diag: Vec<MPoly> = match d.family() {
        Family::A => chart.ambient.clone(),
        Family::B => {
            let mut v = vec![MPoly::zero_in(&chart.vars)];
            v.extend(chart.ambient.iter().cloned());
            v.extend(chart.ambient.iter().map(|a| -a));
            v
        }
        _ => {
            return Err(HitchinError::Unsupported(format!(
                "no diagonal torus model for {d}"
            )))
        }
    };
    let n = diag.len();
    Ok(PMatrix::from_fn(n, n, |i, j| {
        if i == j {
            diag[i].clone()
        } else {
            MPoly::zero_in(&chart.vars)
        }
    }))
}

/// Compares the chart invariants with the characteristic coefficients of
/// the diagonal torus.
pub fn chart_matches_torus(d: DynkinType) -> Result<bool, HitchinError> {
    let chart = CartanChart::new(d)?;
    let coeffs = diagonal_torus(d)?.charpoly_coefficients();
    Ok(chart.invariants.iter().zip(&chart.degrees).all(|(q, &k)| {
        let c = &coeffs[k as usize];
        (q - c).is_zero()
    }))
}

/// Groebner basis of the curve ideal.
pub fn cameral_groebner(c: &LocalCameralCurve) -> Result<GroebnerBasis, HitchinError> {
    Ok(c.ideal()?.groebner(&MonomialOrder::grevlex())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn a1_curve() {
        let b = LocalSection::parse(t("A1"), "x", &["x*(x - 1)"]).unwrap();
        let c = local_cameral(t("A1"), &b).unwrap();
        assert_eq!(c.generators, vec![MPoly::parse("-t1^2 - x^2 + x").unwrap()]);
        assert!(c.is_reduced().unwrap());
        let z = LocalSection::parse(t("A1"), "x", &["0"]).unwrap();
        assert!(!local_cameral(t("A1"), &z).unwrap().is_reduced().unwrap());
    }

    #[test]
    fn b2_curve_has_two_equations() {
        let b = LocalSection::parse(t("B2"), "x", &["x", "x^2 + 1"]).unwrap();
        let c = local_cameral(t("B2"), &b).unwrap();
        assert_eq!(c.generators.len(), 2);
        assert_eq!(c.vars(), vec!["x", "t1", "t2"]);
        assert!(cameral_groebner(&c).unwrap().dimension() == 1);
    }

    #[test]
    fn torus_invariants() {
        for s in ["A1", "A2", "A3", "B2", "B3"] {
            assert!(chart_matches_torus(t(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn collision_rejected() {
        let b = LocalSection::parse(t("A1"), "t1", &["t1"]).unwrap();
        assert!(local_cameral(t("A1"), &b).is_err());
    }
}
