use serde::{Deserialize, Serialize};

use super::LieError;
use crate::dynkin::{CartanChart, RootSystem};
use crate::linalg::QMatrix;
use crate::poly::Rational;

/// Rank of the differential of the quotient map at a Cartan point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDq {
    /// `dim` of the common kernel of the roots vanishing at the point.
    pub kernel_dim: usize,
    /// Rank of the Jacobian of the restricted invariants, when a chart
    /// exists for the type.
    pub jacobian_rank: Option<usize>,
    pub vanishing_roots: usize,
}

impl RankDq {
    pub fn agrees(&self) -> bool {
        self.jacobian_rank.is_none_or(|j| j == self.kernel_dim)
    }
}

/// `t_point` is an ambient vector of the root realization lying in the span
/// of the simple roots.
pub fn rank_dq(t_point: &[Rational], rs: &RootSystem) -> Result<RankDq, LieError> {
    if t_point.len() != rs.ambient_dim {
        return Err(LieError::NotInCartan(format!(
            "expected {} coordinates, got {}",
            rs.ambient_dim,
            t_point.len()
        )));
    }
    let span = QMatrix::from_fn(rs.ambient_dim, rs.rank(), |i, j| rs.simple[j][i].clone());
    if span.solve(t_point).is_none() {
        return Err(LieError::NotInCartan(
            "point is outside the span of the roots".into(),
        ));
    }
    let vanishing = rs.vanishing_at(t_point);
    let rank = if vanishing.is_empty() {
        0
    } else {
        QMatrix::from_rows(vanishing.iter().map(|v| v.to_vec()).collect()).rank()
    };
    let jacobian_rank = CartanChart::new(rs.dynkin)
        .ok()
        .map(|chart| chart.jacobian_rank_at(&chart.from_ambient(t_point)));
    Ok(RankDq {
        kernel_dim: rs.rank() - rank,
        jacobian_rank,
        vanishing_roots: vanishing.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn regular_and_zero_points() {
        let b2 = rs("B2");
        let r = rank_dq(&[q(3), q(1)], &b2).unwrap();
        assert_eq!((r.kernel_dim, r.jacobian_rank), (2, Some(2)));
        let r = rank_dq(&[q(0), q(0)], &b2).unwrap();
        assert_eq!((r.kernel_dim, r.jacobian_rank), (0, Some(0)));
    }

    #[test]
    fn single_wall() {
        let b2 = rs("B2");
        // only the short roots +-e2 vanish
        let r = rank_dq(&[q(1), q(0)], &b2).unwrap();
        assert_eq!(r.vanishing_roots, 2);
        assert_eq!((r.kernel_dim, r.jacobian_rank), (1, Some(1)));
        // only the long roots +-(e1 - e2) vanish
        let r = rank_dq(&[q(1), q(1)], &b2).unwrap();
        assert_eq!(r.vanishing_roots, 2);
        assert_eq!((r.kernel_dim, r.jacobian_rank), (1, Some(1)));
    }

    #[test]
    fn sum_zero_realization() {
        let a2 = rs("A2");
        assert!(rank_dq(&[q(1), q(0), q(0)], &a2).is_err());
        let r = rank_dq(&[q(1), q(1), q(-2)], &a2).unwrap();
        assert_eq!((r.kernel_dim, r.jacobian_rank), (1, Some(1)));
    }

    #[test]
    fn exceptional_without_chart() {
        let e6 = rs("E6");
        let r = rank_dq(&vec![q(0); 8], &e6).unwrap();
        assert_eq!(r.kernel_dim, 0);
        assert!(r.jacobian_rank.is_none() && r.agrees());
    }
}
