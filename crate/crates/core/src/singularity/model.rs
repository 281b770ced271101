use serde::{Deserialize, Serialize};

use super::SingularityError;
use crate::dynkin::{DynkinType, Family, RootSystem};
use crate::poly::MPoly;

pub(crate) fn xyz() -> Vec<String> {
    ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
}

/// A simple surface singularity in its weighted normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityModel {
    pub dynkin: DynkinType,
    pub equation: MPoly,
    /// Weights of `x, y, z` as tabulated.
    pub weights: [i64; 3],
    /// Weighted degree of the equation as tabulated.
    pub degree: i64,
    /// Factor taking the tabulated weights to those where the degree equals
    /// twice the Coxeter number.
    pub weight_rescale: i64,
}

/// Coxeter number `|R| / rank`.
pub fn coxeter_number(t: DynkinType) -> i64 {
    (RootSystem::expected_count(t) / t.rank()) as i64
}

pub fn normal_form(h: DynkinType) -> Result<SingularityModel, SingularityError> {
    if !h.is_ade() {
        return Err(SingularityError::NotAde(h));
    }
    let k = h.rank() as i64;
    let (eq, weights, degree) = match (h.family(), k) {
        (Family::A, _) => (format!("x^{} - y*z", k + 1), [2, k + 1, k + 1], 2 * (k + 1)),
        (Family::D, _) => (
            format!("x*(x^{} - y^2) - z^2", k - 2),
            [2, k - 2, k - 1],
            2 * k - 2,
        ),
        (Family::E, 6) => ("x^4 + y^3 + z^2".into(), [6, 8, 12], 24),
        (Family::E, 7) => ("x^3*y + y^3 + z^2".into(), [8, 12, 18], 36),
        (Family::E, _) => ("x^5 + y^3 + z^2".into(), [12, 20, 30], 60),
        _ => unreachable!("ADE checked"),
    };
    let equation = MPoly::parse(&eq).unwrap().in_context(&xyz()).unwrap();
    let rescale = 2 * coxeter_number(h) / degree;
    Ok(SingularityModel {
        dynkin: h,
        equation,
        weights,
        degree,
        weight_rescale: rescale,
    })
}

impl SingularityModel {
    pub fn vars(&self) -> Vec<String> {
        xyz()
    }

    pub fn weight_table(&self) -> Vec<(String, i64)> {
        xyz().into_iter().zip(self.weights).collect()
    }

    /// Weights multiplied by [`SingularityModel::weight_rescale`].
    pub fn lie_weights(&self) -> [i64; 3] {
        self.weights.map(|w| w * self.weight_rescale)
    }

    pub fn lie_degree(&self) -> i64 {
        self.degree * self.weight_rescale
    }

    pub fn lie_weight_table(&self) -> Vec<(String, i64)> {
        xyz().into_iter().zip(self.lie_weights()).collect()
    }

    /// Whether the tabulated weights make the equation homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.equation
            .is_weighted_homogeneous(&self.weight_table(), self.degree)
    }

    /// Weighted degree of a monomial in `x, y, z` under the rescaled weights.
    pub fn monomial_weight(&self, m: &MPoly) -> Option<i64> {
        let ws = m.weighted_degrees(&self.lie_weight_table());
        (ws.len() == 1).then(|| *ws.iter().next().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn table_rows() {
        let m = normal_form(t("A3")).unwrap();
        assert_eq!(m.equation, MPoly::parse("x^4 - y*z").unwrap());
        assert_eq!((m.weights, m.degree), ([2, 4, 4], 8));
        let m = normal_form(t("E8")).unwrap();
        assert_eq!(m.equation, MPoly::parse("x^5 + y^3 + z^2").unwrap());
        assert_eq!((m.weights, m.degree), ([12, 20, 30], 60));
        let m = normal_form(t("D4")).unwrap();
        assert_eq!(m.equation, MPoly::parse("x*(x^2 - y^2) - z^2").unwrap());
        assert_eq!((m.weights, m.degree), ([2, 2, 3], 6));
    }

    #[test]
    fn every_row_is_homogeneous() {
        for h in (1..=8).flat_map(DynkinType::all_of_rank) {
            if let Ok(m) = normal_form(h) {
                assert!(m.is_homogeneous(), "{h}");
                assert_eq!(m.lie_degree(), 2 * coxeter_number(h), "{h}");
            }
        }
    }

    #[test]
    fn rescale_only_for_d() {
        assert_eq!(normal_form(t("D5")).unwrap().weight_rescale, 2);
        assert_eq!(normal_form(t("A5")).unwrap().weight_rescale, 1);
        assert_eq!(normal_form(t("E7")).unwrap().weight_rescale, 1);
    }

    #[test]
    fn rejects_non_ade() {
        assert!(matches!(
            normal_form(t("B2")),
            Err(SingularityError::NotAde(_))
        ));
    }
}
