use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::abelian::{preimage, subquotient, FGAbelianGroup};
use super::snf::{column, hconcat, solve_integer, ZMatrix};
use super::CohomologyError;
use crate::dynkin::{canonical_subgroup, DiagramAutomorphism, DynkinType, GroupTag};

fn ser_zmatrix<S: Serializer>(m: &ZMatrix, s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    (m.rows(), m.cols(), rows).serialize(s)
}

fn de_zmatrix<'de, D: Deserializer<'de>>(d: D) -> Result<ZMatrix, D::Error> {
    let (r, c, rows): (usize, usize, Vec<Vec<String>>) = Deserialize::deserialize(d)?;
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(serde::de::Error::custom("matrix shape"));
    }
    let parsed = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.parse::<BigInt>().map_err(serde::de::Error::custom))
                .collect()
        })
        .collect::<Result<Vec<Vec<BigInt>>, _>>()?;
    Ok(ZMatrix::from_fn(r, c, |i, j| parsed[i][j].clone()))
}

/// A generator `tau` of `Z/m` acting on `M = Z^n / im(relations)` through an
/// integer matrix on `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicAction {
    pub order: usize,
    #[serde(serialize_with = "ser_zmatrix", deserialize_with = "de_zmatrix")]
    pub action: ZMatrix,
    #[serde(serialize_with = "ser_zmatrix", deserialize_with = "de_zmatrix")]
    pub relations: ZMatrix,
}

fn contained(m: &ZMatrix, lattice: &ZMatrix) -> bool {
    (0..m.cols()).all(|j| {
        let c = column(m, j);
        if c.iter().all(|x| x.is_zero()) {
            return true;
        }
        lattice.cols() > 0 && solve_integer(lattice, &c).is_some()
    })
}

fn matrix_power(a: &ZMatrix, k: usize) -> ZMatrix {
    (0..k).fold(ZMatrix::identity(a.rows()), |acc, _| acc.mul_mat(a))
}

impl CyclicAction {
    pub fn new(order: usize, action: ZMatrix, relations: ZMatrix) -> Result<Self, CohomologyError> {
        let n = action.rows();
        if order == 0 {
            return Err(CohomologyError::Shape(
                "group order must be positive".into(),
            ));
        }
        if !action.is_square() || relations.rows() != n {
            return Err(CohomologyError::Shape(format!(
                "action is {}x{}, relations have {} rows",
                action.rows(),
                action.cols(),
                relations.rows()
            )));
        }
        if !contained(&action.mul_mat(&relations), &relations) {
            return Err(CohomologyError::NotEquivariant(
                "the action does not preserve the relations".into(),
            ));
        }
        let diff = matrix_power(&action, order).sub_mat(&ZMatrix::identity(n));
        if !contained(&diff, &relations) {
            return Err(CohomologyError::OrderMismatch { order });
        }
        Ok(CyclicAction {
            order,
            action,
            relations,
        })
    }

    /// Action on a free module.
    pub fn on_free(order: usize, action: ZMatrix) -> Result<Self, CohomologyError> {
        let n = action.rows();
        Self::new(order, action, ZMatrix::zeros(n, 0))
    }

    pub fn trivial(order: usize, rank: usize) -> Self {
        CyclicAction {
            order,
            action: ZMatrix::identity(rank),
            relations: ZMatrix::zeros(rank, 0),
        }
    }

    pub fn module(&self) -> FGAbelianGroup {
        FGAbelianGroup::cokernel(&self.relations)
    }

    pub fn generators(&self) -> usize {
        self.action.rows()
    }

    /// Smallest `k >= 1` with `tau^k = 1` on the module.
    pub fn actual_order(&self) -> usize {
        let n = self.generators();
        let mut p = self.action.clone();
        for k in 1..=self.order {
            if contained(&p.sub_mat(&ZMatrix::identity(n)), &self.relations) {
                return k;
            }
            p = p.mul_mat(&self.action);
        }
        self.order
    }

    fn tau_minus_one(&self) -> ZMatrix {
        self.action.sub_mat(&ZMatrix::identity(self.generators()))
    }

    fn norm(&self) -> ZMatrix {
        let n = self.generators();
        let mut acc = ZMatrix::zeros(n, n);
        let mut p = ZMatrix::identity(n);
        for _ in 0..self.order {
            acc = acc.add_mat(&p);
            p = p.mul_mat(&self.action);
        }
        acc
    }

    /// `ker(a) / im(b)` on the module.
    fn homology(&self, a: &ZMatrix, b: &ZMatrix) -> Result<FGAbelianGroup, CohomologyError> {
        let k = preimage(a, &self.relations);
        subquotient(&k, &hconcat(b, &self.relations))
    }
}

/// `H^0, ..., H^p_max` from the periodic resolution: `H^0 = M^tau`,
/// `H^odd = ker N / im(tau - 1)` and `H^even = M^tau / N M`.
pub fn group_cohomology_cyclic(
    act: &CyclicAction,
    p_max: usize,
) -> Result<Vec<FGAbelianGroup>, CohomologyError> {
    let t = act.tau_minus_one();
    let n = act.norm();
    let zero = ZMatrix::zeros(act.generators(), 0);
    let h0 = act.homology(&t, &zero)?;
    let odd = act.homology(&n, &t)?;
    let even = act.homology(&t, &n)?;
    Ok((0..=p_max)
        .map(|p| match p {
            0 => h0.clone(),
            p if p % 2 == 1 => odd.clone(),
            _ => even.clone(),
        })
        .collect())
}

fn permutation_matrix(g: &DiagramAutomorphism) -> ZMatrix {
    let n = g.perm.len();
    ZMatrix::from_fn(n, n, |i, j| {
        if g.perm[j] == i {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// A diagram automorphism permuting the simple roots of the root lattice.
pub fn root_lattice_action(g: &DiagramAutomorphism) -> CyclicAction {
    let m = permutation_matrix(g);
    CyclicAction::on_free(g.order(), m).expect("permutations have their order")
}

/// The canonical diagram involution of `h`.
pub fn diagram_involution(h: DynkinType) -> Result<DiagramAutomorphism, CohomologyError> {
    let elems = canonical_subgroup(h, GroupTag::Z2)?;
    Ok(elems
        .into_iter()
        .find(|g| !g.is_identity())
        .expect("a nontrivial element"))
}

/// Cohomology of every cyclic subgroup of a diagram symmetry group acting on
/// the root lattice, one entry per subgroup with its generator.
pub fn cyclic_subgroup_cohomology(
    h: DynkinType,
    tag: GroupTag,
    p_max: usize,
) -> Result<Vec<(DiagramAutomorphism, Vec<FGAbelianGroup>)>, CohomologyError> {
    let elems = canonical_subgroup(h, tag)?;
    let mut seen: Vec<Vec<DiagramAutomorphism>> = Vec::new();
    let mut out = Vec::new();
    for g in elems.iter().filter(|g| !g.is_identity()) {
        let mut sub: Vec<DiagramAutomorphism> = Vec::new();
        let mut p = g.clone();
        while !sub.contains(&p) {
            sub.push(p.clone());
            p = g.compose(&p);
        }
        sub.sort();
        if seen.contains(&sub) {
            continue;
        }
        seen.push(sub);
        out.push((
            g.clone(),
            group_cohomology_cyclic(&root_lattice_action(g), p_max)?,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivcoh::snf::zmatrix;

    fn g(free: usize, t: &[i64]) -> FGAbelianGroup {
        FGAbelianGroup::from_small(free, t)
    }

    #[test]
    fn trivial_z() {
        let h = group_cohomology_cyclic(&CyclicAction::trivial(2, 1), 4).unwrap();
        assert_eq!(
            h,
            vec![g(1, &[]), g(0, &[]), g(0, &[2]), g(0, &[]), g(0, &[2])]
        );
    }

    #[test]
    fn a3_swap() {
        let inv = diagram_involution("A3".parse().unwrap()).unwrap();
        let h = group_cohomology_cyclic(&root_lattice_action(&inv), 2).unwrap();
        assert_eq!(h, vec![g(2, &[]), g(0, &[]), g(0, &[2])]);
    }

    #[test]
    fn sign_action() {
        // tau = -1 on Z: H^0 = 0, H^odd = Z/2, H^even = 0
        let act = CyclicAction::on_free(2, zmatrix(&[&[-1]])).unwrap();
        let h = group_cohomology_cyclic(&act, 3).unwrap();
        assert_eq!(h, vec![g(0, &[]), g(0, &[2]), g(0, &[]), g(0, &[2])]);
    }

    #[test]
    fn torsion_module() {
        // Z/4 with tau = -1: H^0 = Z/2, H^1 = ker(0)/im(-2) = Z/2
        let act = CyclicAction::new(2, zmatrix(&[&[-1]]), zmatrix(&[&[4]])).unwrap();
        let h = group_cohomology_cyclic(&act, 2).unwrap();
        assert_eq!(h, vec![g(0, &[2]), g(0, &[2]), g(0, &[2])]);
    }

    #[test]
    fn validation() {
        assert!(matches!(
            CyclicAction::on_free(2, zmatrix(&[&[0, -1], &[1, -1]])),
            Err(CohomologyError::OrderMismatch { order: 2 })
        ));
        assert!(CyclicAction::on_free(3, zmatrix(&[&[0, -1], &[1, -1]])).is_ok());
        assert!(
            CyclicAction::new(2, zmatrix(&[&[1, 1], &[0, 1]]), zmatrix(&[&[0], &[2]])).is_err()
        );
    }

    #[test]
    fn order_one_is_acyclic() {
        let act = CyclicAction::on_free(1, zmatrix(&[&[1, 0], &[0, 1]])).unwrap();
        let h = group_cohomology_cyclic(&act, 3).unwrap();
        assert!(h[1..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn triality_subgroups() {
        let subs = cyclic_subgroup_cohomology("D4".parse().unwrap(), GroupTag::S3, 2).unwrap();
        // one Z/3 and three Z/2 subgroups
        assert_eq!(subs.len(), 4);
        assert_eq!(subs.iter().filter(|(g, _)| g.order() == 3).count(), 1);
    }
}
