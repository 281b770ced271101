use serde::{Deserialize, Serialize};

use super::LieError;
use crate::dynkin::{CartanChart, RootSystem};
use crate::hitchin::{discriminant, rational_points, HitchinError, LocalSection, ZeroLocation};
use crate::linalg::QMatrix;
use crate::poly::{default_budget, Ideal, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalPoint {
    pub location: ZeroLocation,
    pub multiplicity: usize,
    /// Simple zero of the discriminant.
    pub transversal: bool,
    /// `rank [dq(t0) | db(x0)] = r` at a rational lift `t0`, when one exists.
    pub rank_condition: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalityReport {
    pub identically_zero: bool,
    pub points: Vec<TransversalPoint>,
}

impl TransversalityReport {
    pub fn passed(&self) -> bool {
        !self.identically_zero && self.points.iter().all(|p| p.transversal)
    }

    /// The rank condition agrees with the multiplicity wherever it was
    /// evaluated.
    pub fn consistent(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.rank_condition.is_none_or(|r| r == p.transversal))
    }
}

fn lift(err: HitchinError) -> LieError {
    match err {
        HitchinError::Poly(e) => LieError::Poly(e),
        HitchinError::Dynkin(e) => LieError::Dynkin(e),
        HitchinError::Lie(e) => e,
        other => LieError::NotInCartan(other.to_string()),
    }
}

/// Rank of `[dq(t0) | db(x0)]` at a rational `t0` over `b(x0)`.
fn rank_at(
    chart: &CartanChart,
    b: &LocalSection,
    x0: &Rational,
) -> Result<Option<usize>, LieError> {
    let value = b.eval(x0);
    let gens = chart
        .invariants
        .iter()
        .zip(&value)
        .map(|(q, v)| (q - &crate::poly::MPoly::constant(v.clone())).in_context(&chart.vars))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = Ideal::with_context(&chart.vars, gens)?;
    let (points, _) = rational_points(&ideal, default_budget()).map_err(lift)?;
    let Some(t0) = points.first() else {
        return Ok(None);
    };
    let jac = chart.jacobian_at(t0);
    let db: Vec<Rational> = b
        .components
        .iter()
        .map(|c| {
            c.derivative(&b.var)
                .in_context(std::slice::from_ref(&b.var))
                .unwrap()
                .eval(std::slice::from_ref(x0))
        })
        .collect();
    let rows: Vec<Vec<Rational>> = (0..chart.rank())
        .map(|j| {
            let mut row = jac.row(j).to_vec();
            row.push(db[j].clone());
            row
        })
        .collect();
    Ok(Some(QMatrix::from_rows(rows).rank()))
}

/// Transversality of `b` to the discriminant at each of its zeros.
pub fn transversality_check(
    b: &LocalSection,
    rs: &RootSystem,
) -> Result<TransversalityReport, LieError> {
    let d = rs.dynkin;
    let disc = discriminant(d, b).map_err(lift)?;
    let chart = CartanChart::new(d)?;
    let r = chart.rank();
    let mut points = Vec::new();
    for z in &disc.zeros {
        let rank_condition = match &z.location {
            ZeroLocation::Rational(x0) => rank_at(&chart, b, x0)?.map(|k| k == r),
            ZeroLocation::Algebraic(_) => None,
        };
        points.push(TransversalPoint {
            location: z.location.clone(),
            multiplicity: z.multiplicity,
            transversal: z.multiplicity == 1,
            rank_condition,
        });
    }
    Ok(TransversalityReport {
        identically_zero: disc.identically_zero,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn check(ty: &str, comps: &[&str]) -> TransversalityReport {
        let d: DynkinType = ty.parse().unwrap();
        let b = LocalSection::parse(d, "x", comps).unwrap();
        transversality_check(&b, &RootSystem::new(d)).unwrap()
    }

    #[test]
    fn rank_one() {
        let r = check("A1", &["x"]);
        assert!(r.passed() && r.consistent());
        assert_eq!(r.points[0].rank_condition, Some(true));
        let r = check("A1", &["x^2"]);
        assert!(!r.passed() && r.consistent());
        assert_eq!(r.points[0].rank_condition, Some(false));
        let r = check("A1", &["1"]);
        assert!(r.passed() && r.points.is_empty());
    }

    #[test]
    fn b2_lines() {
        let r = check("B2", &["x", "0"]);
        assert!(!r.passed());
        let r = check("B2", &["-5", "x"]);
        assert!(r.consistent(), "{r:?}");
    }
}
