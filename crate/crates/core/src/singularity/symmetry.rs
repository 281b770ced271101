use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::model::{normal_form, SingularityModel};
use super::SingularityError;
use crate::dynkin::{associated_group_order, associated_pair, DynkinType, Family, GroupTag};
use crate::linalg::QMatrix;
use crate::poly::{q, Ideal, MPoly, MonomialOrder, Rational};

/// Linear substitution `v -> M v` on `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearMap {
    #[serde(with = "crate::linalg::qmatrix_text")]
    pub matrix: QMatrix,
}

impl LinearMap {
    pub fn new(matrix: QMatrix) -> Self {
        LinearMap { matrix }
    }

    fn assignment(&self, vars: &[String]) -> Vec<(String, MPoly)> {
        vars.iter()
            .enumerate()
            .map(|(i, v)| {
                let img = vars
                    .iter()
                    .enumerate()
                    .fold(MPoly::zero_in(vars), |acc, (j, w)| {
                        &acc + &MPoly::var(w).scale(self.matrix.get(i, j))
                    });
                (v.clone(), img)
            })
            .collect()
    }

    /// `f(M v)`.
    pub fn pull_back(&self, f: &MPoly, vars: &[String]) -> MPoly {
        f.substitute(&self.assignment(vars))
    }

    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.mul_mat(&other.matrix))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == QMatrix::identity(self.matrix.rows())
    }

    pub fn apply(&self, p: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(p)
    }

    /// The substitution as text, e.g. `(x, y, z) ↦ (−x, z, y)`.
    pub fn to_pretty(&self, vars: &[String]) -> String {
        let imgs: Vec<String> = self
            .assignment(vars)
            .into_iter()
            .map(|(_, p)| p.to_pretty())
            .collect();
        format!("({}) ↦ ({})", vars.join(", "), imgs.join(", "))
    }
}

/// A finite group of linear symmetries of a singularity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryAction {
    pub tag: GroupTag,
    pub generators: Vec<LinearMap>,
}

const MAX_ELEMENTS: usize = 1000;

impl SymmetryAction {
    pub fn trivial() -> Self {
        SymmetryAction {
            tag: GroupTag::Trivial,
            generators: Vec::new(),
        }
    }

    /// All group elements, identity first.
    pub fn elements(&self) -> Result<Vec<LinearMap>, SingularityError> {
        let id = LinearMap::new(QMatrix::identity(3));
        let mut seen: BTreeMap<String, LinearMap> = BTreeMap::new();
        seen.insert(id.matrix.to_string(), id.clone());
        let mut out = vec![id.clone()];
        let mut frontier = vec![id];
        while let Some(m) = frontier.pop() {
            for g in &self.generators {
                let n = g.compose(&m);
                if let std::collections::btree_map::Entry::Vacant(e) =
                    seen.entry(n.matrix.to_string())
                {
                    e.insert(n.clone());
                    out.push(n.clone());
                    frontier.push(n);
                    if out.len() > MAX_ELEMENTS {
                        return Err(SingularityError::WrongGroup("group is too large".into()));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> Result<usize, SingularityError> {
        Ok(self.elements()?.len())
    }

    pub fn preserves(&self, f: &MPoly, vars: &[String]) -> bool {
        self.generators.iter().all(|g| g.pull_back(f, vars) == *f)
    }

    /// Exact freeness test: for every non-identity element the fixed
    /// subspace meets `{f = 0}` in a zero-dimensional set. For a
    /// quasi-homogeneous `f` this set is a cone, so it is the origin alone.
    pub fn acts_freely_off_origin(
        &self,
        f: &MPoly,
        vars: &[String],
    ) -> Result<bool, SingularityError> {
        for g in self.elements()?.iter().skip(1) {
            let fixed = g.matrix.sub_mat(&QMatrix::identity(3));
            let mut gens = vec![f.clone()];
            for i in 0..3 {
                let row = vars
                    .iter()
                    .enumerate()
                    .fold(MPoly::zero_in(vars), |acc, (j, w)| {
                        &acc + &MPoly::var(w).scale(fixed.get(i, j))
                    });
                if !row.is_zero() {
                    gens.push(row);
                }
            }
            let gb = Ideal::with_context(vars, gens)?.groebner(&MonomialOrder::grevlex())?;
            if gb.dimension() > 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Spot check of freeness at explicit points: no non-identity element
    /// fixes any of them.
    pub fn moves_points(&self, points: &[Vec<Rational>]) -> Result<bool, SingularityError> {
        let elems = self.elements()?;
        Ok(points
            .iter()
            .all(|p| elems.iter().skip(1).all(|g| g.apply(p) != *p)))
    }

    /// Validates user-supplied generators against `model`, expecting the
    /// group of the associated folding for `d`.
    pub fn validated(
        d: DynkinType,
        model: &SingularityModel,
        tag: GroupTag,
        generators: Vec<LinearMap>,
    ) -> Result<Self, SingularityError> {
        let act = SymmetryAction { tag, generators };
        let vars = model.vars();
        if !act.preserves(&model.equation, &vars) {
            return Err(SingularityError::NotPreserved);
        }
        let order = act.order()?;
        if order != tag.order() {
            return Err(SingularityError::WrongGroup(format!(
                "generators give a group of order {order}, {tag} has order {}",
                tag.order()
            )));
        }
        let expected = associated_group_order(d);
        if order != expected {
            return Err(SingularityError::WrongGroup(format!(
                "{d} needs a group of order {expected}, got {order}"
            )));
        }
        if !act.acts_freely_off_origin(&model.equation, &vars)? {
            return Err(SingularityError::WrongGroup(
                "action has fixed points off the origin".into(),
            ));
        }
        Ok(act)
    }
}

/// Built-in action for `B_{k+1}` on `x^(2k+2) - yz`: `(x,y,z) -> (-x,z,y)`.
/// ADE types get the trivial action; other types need explicit generators.
pub fn symmetry_action(
    d: DynkinType,
) -> Result<(SingularityModel, SymmetryAction), SingularityError> {
    if d.is_ade() {
        return Ok((normal_form(d)?, SymmetryAction::trivial()));
    }
    match d.family() {
        Family::B => {
            let pair = associated_pair(d)?;
            let model = normal_form(pair.homogeneous)?;
            let m = QMatrix::from_ints(&[&[-1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
            let act = SymmetryAction::validated(d, &model, GroupTag::Z2, vec![LinearMap::new(m)])?;
            Ok((model, act))
        }
        _ => Err(SingularityError::Unsupported(format!(
            "no built-in action for {d}; supply generators"
        ))),
    }
}

/// Rational points on `{f = 0}` away from the origin, found by solving for
/// the last variable when it appears linearly.
pub fn sample_points(f: &MPoly, vars: &[String], count: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let last = vars.last().expect("variables");
    let cs = f.coefficients_in(last);
    let mut a = 1i64;
    while out.len() < count && a < 50 {
        let pt: Vec<(String, Rational)> = vars[..vars.len() - 1]
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), q(a + 2 * i as i64)))
            .collect();
        if cs.len() == 2 {
            let c1 = cs[1].eval_partial(&pt).constant_value();
            let c0 = cs[0].eval_partial(&pt).constant_value();
            if let (Some(c1), Some(c0)) = (c1, c0) {
                if c1 != q(0) {
                    let mut p: Vec<Rational> = pt.into_iter().map(|(_, v)| v).collect();
                    p.push(-c0 / c1);
                    out.push(p);
                }
            }
        }
        a += 1;
    }
    out
}
