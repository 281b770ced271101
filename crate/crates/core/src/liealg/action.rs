use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::algebra::flat_solve;
use super::quotient::InvariantTuple;
use super::slice::SlodowySlice;
use super::triple::BuiltinSlice;
use super::LieError;
use crate::dynkin::GroupTag;
use crate::linalg::{PMatrix, QMatrix};
use crate::poly::MPoly;

/// The automorphism `A -> g phi(A) g^-1`, with `phi(A) = -A^T` when
/// `outer` is set and the identity otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceSymmetry {
    pub g: QMatrix,
    pub outer: bool,
}

impl SliceSymmetry {
    pub fn apply(&self, m: &PMatrix) -> Result<PMatrix, LieError> {
        let inv = self
            .g
            .inverse()
            .ok_or_else(|| LieError::NotPreserving("g is not invertible".into()))?;
        let inner = if self.outer {
            -&m.transpose()
        } else {
            m.clone()
        };
        Ok(self.g.to_poly().mul_mat(&inner).mul_mat(&inv.to_poly()))
    }

    /// Outer involution of `sl(4)` preserving the subregular slice.
    pub fn sl4_involution() -> Self {
        SliceSymmetry {
            g: QMatrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0]]),
            outer: true,
        }
    }

    /// Inner involution of `so(5)` preserving the subregular slice.
    pub fn so5_involution() -> Self {
        SliceSymmetry {
            g: QMatrix::from_ints(&[
                &[1, 0, 0, 0, 2],
                &[0, -1, 0, 0, 0],
                &[2, 0, -1, 0, 2],
                &[0, 0, 0, -1, 0],
                &[0, 0, 0, 0, -1],
            ]),
            outer: false,
        }
    }
}

/// A map of slice parameters `p_i -> images[i]`, affine-linear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamMap {
    pub params: Vec<String>,
    pub images: Vec<MPoly>,
}

impl ParamMap {
    pub fn identity(params: &[String]) -> Self {
        ParamMap {
            params: params.to_vec(),
            images: params
                .iter()
                .map(|p| MPoly::var(p).in_context(params).unwrap())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.params)
    }

    fn assignment(&self) -> Vec<(&str, MPoly)> {
        self.params
            .iter()
            .map(|s| s.as_str())
            .zip(self.images.iter().cloned())
            .collect()
    }

    /// Pullback `f -> f o self`.
    pub fn pull_back(&self, f: &MPoly) -> MPoly {
        f.substitute(&self.assignment())
    }

    /// `self o other`, the map applying `other` first.
    pub fn compose(&self, other: &ParamMap) -> ParamMap {
        ParamMap {
            params: self.params.clone(),
            images: self
                .images
                .iter()
                .map(|f| other.pull_back(f).in_context(&self.params).unwrap())
                .collect(),
        }
    }

    fn key(&self) -> String {
        self.images
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_pretty(&self) -> String {
        format!(
            "({}) ↦ ({})",
            self.params.join(", "),
            self.images
                .iter()
                .map(|f| f.to_pretty())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// A finite group acting on a slice through parameter maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteActionOnSlice {
    pub symmetries: Vec<SliceSymmetry>,
    pub generators: Vec<ParamMap>,
    pub order: usize,
    pub tag: Option<GroupTag>,
}

const MAX_GROUP: usize = 10_000;

/// Reads off the parameter map of `sym` on the slice by solving
/// `sym(F(p)) = F(p')` for `p'` affine in `p`.
pub fn parameter_map(s: &SlodowySlice, sym: &SliceSymmetry) -> Result<ParamMap, LieError> {
    let image = sym.apply(&s.family)?;
    let diff = image.sub_mat(&s.triple.x.to_poly());
    let n = diff.rows();
    if diff
        .entries()
        .iter()
        .any(|e| e.total_degree().unwrap_or(0) > 1)
    {
        return Err(LieError::NotPreserving(
            "image is not affine in the parameters".into(),
        ));
    }
    let coeff_matrix = |slot: Option<&str>| {
        QMatrix::from_fn(n, n, |i, j| {
            let e = diff.get(i, j);
            match slot {
                None => e.constant_term(),
                Some(v) => e.derivative(v).constant_term(),
            }
        })
    };
    let mut images = vec![MPoly::zero_in(&s.params); s.dim()];
    let slots: Vec<Option<&str>> = std::iter::once(None)
        .chain(s.params.iter().map(|p| Some(p.as_str())))
        .collect();
    for slot in slots {
        let target = coeff_matrix(slot);
        let c = flat_solve(&s.kernel, &target).ok_or_else(|| {
            LieError::NotPreserving(format!(
                "image leaves the slice in the {} direction",
                slot.unwrap_or("constant")
            ))
        })?;
        let mono = match slot {
            None => MPoly::one().in_context(&s.params).unwrap(),
            Some(v) => MPoly::var(v).in_context(&s.params).unwrap(),
        };
        for (img, ci) in images.iter_mut().zip(&c) {
            if !ci.is_zero() {
                *img = &*img + &mono.scale(ci);
            }
        }
    }
    Ok(ParamMap {
        params: s.params.clone(),
        images,
    })
}

fn group_closure(gens: &[ParamMap], params: &[String]) -> Result<Vec<ParamMap>, LieError> {
    let mut seen: BTreeMap<String, ParamMap> = BTreeMap::new();
    let id = ParamMap::identity(params);
    seen.insert(id.key(), id.clone());
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let next = g.compose(&m);
            if seen.insert(next.key(), next.clone()).is_none() {
                if seen.len() > MAX_GROUP {
                    return Err(LieError::NotPreserving(
                        "generated group is too large".into(),
                    ));
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen.into_values().collect())
}

fn tag_of(elems: &[ParamMap]) -> Option<GroupTag> {
    let abelian = elems
        .iter()
        .all(|a| elems.iter().all(|b| a.compose(b) == b.compose(a)));
    match (elems.len(), abelian) {
        (1, _) => Some(GroupTag::Trivial),
        (2, _) => Some(GroupTag::Z2),
        (3, _) => Some(GroupTag::Z3),
        (6, false) => Some(GroupTag::S3),
        _ => None,
    }
}

/// Action generated by `symmetries`, each verified to preserve the slice.
pub fn slice_action(
    s: &SlodowySlice,
    symmetries: &[SliceSymmetry],
) -> Result<FiniteActionOnSlice, LieError> {
    let generators = symmetries
        .iter()
        .map(|g| parameter_map(s, g))
        .collect::<Result<Vec<_>, _>>()?;
    let elems = group_closure(&generators, &s.params)?;
    Ok(FiniteActionOnSlice {
        symmetries: symmetries.to_vec(),
        generators,
        order: elems.len(),
        tag: tag_of(&elems),
    })
}

/// Built-in symmetry generators of a built-in slice.
pub fn builtin_symmetries(which: BuiltinSlice) -> Vec<SliceSymmetry> {
    match which {
        BuiltinSlice::Sl2 => Vec::new(),
        BuiltinSlice::Sl4 => vec![SliceSymmetry::sl4_involution()],
        BuiltinSlice::So5 => vec![SliceSymmetry::so5_involution()],
    }
}

/// How a component pulls back: `q_j o g = sign * q_target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedIndex {
    pub target: usize,
    pub sign: i8,
}

/// For each generator, the signed permutation induced on the components.
pub fn base_action(
    q: &InvariantTuple,
    act: &FiniteActionOnSlice,
) -> Result<Vec<Vec<SignedIndex>>, LieError> {
    act.generators.iter().map(|g| induced_signs(q, g)).collect()
}

pub fn induced_signs(q: &InvariantTuple, g: &ParamMap) -> Result<Vec<SignedIndex>, LieError> {
    q.components
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let pulled = g.pull_back(c);
            q.components
                .iter()
                .enumerate()
                .find_map(|(k, d)| {
                    if pulled == *d {
                        Some(SignedIndex { target: k, sign: 1 })
                    } else if pulled == -d {
                        Some(SignedIndex {
                            target: k,
                            sign: -1,
                        })
                    } else {
                        None
                    }
                })
                .ok_or_else(|| LieError::NotExpressible(format!("pullback of component {}", j + 1)))
        })
        .collect()
}

/// Signed permutation of `second o first`, given those of `first` and
/// `second`.
pub fn compose_signs(first: &[SignedIndex], second: &[SignedIndex]) -> Vec<SignedIndex> {
    // (q_j o first) o second = s_j q_k o second = s_j s'_k q_l
    first
        .iter()
        .map(|a| {
            let b = second[a.target];
            SignedIndex {
                target: b.target,
                sign: a.sign * b.sign,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::slice_quotient;

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn sl4_involution_on_parameters() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        let act = slice_action(&s, &builtin_symmetries(BuiltinSlice::Sl4)).unwrap();
        let g = &act.generators[0];
        assert_eq!(g.images, vec![p("-a"), p("d"), p("c"), p("b"), p("-e")]);
        assert!(g.compose(g).is_identity());
        assert_eq!(act.order, 2);
        assert_eq!(act.tag, Some(GroupTag::Z2));
        let image = SliceSymmetry::sl4_involution().apply(&s.family).unwrap();
        let expected = s.family.substitute(&g.assignment());
        assert_eq!(image, expected);
    }

    #[test]
    fn so5_involution_on_parameters() {
        let s = SlodowySlice::builtin(BuiltinSlice::So5);
        let act = slice_action(&s, &builtin_symmetries(BuiltinSlice::So5)).unwrap();
        let g = &act.generators[0];
        assert_eq!(
            g.images,
            vec![p("-a - 2*d"), p("-b"), p("2*a + c + 2*d"), p("d")]
        );
        assert_eq!(act.order, 2);
    }

    #[test]
    fn base_signs() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        let q = slice_quotient(&s);
        let act = slice_action(&s, &builtin_symmetries(BuiltinSlice::Sl4)).unwrap();
        let signs = base_action(&q, &act).unwrap();
        let v: Vec<i8> = signs[0].iter().map(|x| x.sign).collect();
        assert_eq!(v, vec![1, -1, 1]);
        let sq = compose_signs(&signs[0], &signs[0]);
        assert!(sq.iter().all(|x| x.sign == 1));

        let s = SlodowySlice::builtin(BuiltinSlice::So5);
        let q = slice_quotient(&s);
        let act = slice_action(&s, &builtin_symmetries(BuiltinSlice::So5)).unwrap();
        let v: Vec<i8> = base_action(&q, &act).unwrap()[0]
            .iter()
            .map(|x| x.sign)
            .collect();
        assert_eq!(v, vec![1, 1]);
    }

    #[test]
    fn identity_symmetry() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        let id = SliceSymmetry {
            g: QMatrix::identity(4),
            outer: false,
        };
        let act = slice_action(&s, &[id]).unwrap();
        assert!(act.generators[0].is_identity());
        assert_eq!(act.tag, Some(GroupTag::Trivial));
        let q = slice_quotient(&s);
        assert!(base_action(&q, &act).unwrap()[0]
            .iter()
            .all(|x| x.sign == 1));
    }

    #[test]
    fn rejects_non_preserving() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        let swap =
            QMatrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let g = SliceSymmetry {
            g: swap,
            outer: false,
        };
        assert!(matches!(
            slice_action(&s, &[g]),
            Err(LieError::NotPreserving(_))
        ));
    }
}
