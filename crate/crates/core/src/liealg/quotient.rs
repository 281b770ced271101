use serde::{Deserialize, Serialize};

use super::algebra::AlgebraKind;
use super::slice::SlodowySlice;
use super::LieError;
use crate::dynkin::invariant_degrees;
use crate::poly::{Ideal, MPoly, MonomialOrder};

/// Restriction of the characteristic-polynomial invariants to a slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub params: Vec<String>,
    pub components: Vec<MPoly>,
    /// Polynomial degrees `d_j`; the weight of component `j` is `2 d_j`.
    pub degrees: Vec<u32>,
}

impl InvariantTuple {
    pub fn weights(&self) -> Vec<i64> {
        self.degrees.iter().map(|&d| 2 * d as i64).collect()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Checks that component `j` has weight `2 d_j` under `weights`.
    pub fn is_weighted_homogeneous(&self, weights: &[(String, i64)]) -> bool {
        self.components
            .iter()
            .zip(self.weights())
            .all(|(c, w)| c.is_weighted_homogeneous(weights, w))
    }
}

/// Coefficients of `det(lambda - F)` at the given degrees.
pub fn adjoint_quotient(s: &SlodowySlice, degrees: &[u32]) -> Result<InvariantTuple, LieError> {
    let t = s.algebra.dynkin_type();
    let expected = invariant_degrees(t);
    if degrees != expected.as_slice() {
        return Err(LieError::DegreeMismatch {
            expected,
            got: degrees.to_vec(),
        });
    }
    let coeffs = s.family.charpoly_coefficients();
    if let AlgebraKind::OddOrthogonal(_) = s.algebra.kind {
        if let Some(k) = (1..coeffs.len()).step_by(2).find(|&k| !coeffs[k].is_zero()) {
            return Err(LieError::OddCoefficient(k));
        }
    }
    let components = degrees
        .iter()
        .map(|&d| {
            coeffs[d as usize]
                .in_context(&s.params)
                .expect("slice parameters")
        })
        .collect();
    Ok(InvariantTuple {
        params: s.params.clone(),
        components,
        degrees: degrees.to_vec(),
    })
}

/// `adjoint_quotient` with the degrees of the algebra's type.
pub fn slice_quotient(s: &SlodowySlice) -> InvariantTuple {
    adjoint_quotient(s, &invariant_degrees(s.algebra.dynkin_type()))
        .expect("degrees match the algebra")
}

/// The zero fibre of the quotient map, cut down to a surface in three
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralFiber {
    pub equation: MPoly,
    pub variables: Vec<String>,
    /// Solved parameters in the order they were eliminated.
    pub substitutions: Vec<(String, MPoly)>,
}

/// First variable (in context order) occurring in some equation only
/// linearly and with a constant coefficient.
fn linear_pivot(eqs: &[MPoly], vars: &[String]) -> Option<(usize, String, MPoly)> {
    for v in vars {
        for (i, e) in eqs.iter().enumerate() {
            if e.degree_in(v) != 1 {
                continue;
            }
            let cs = e.coefficients_in(v);
            let Some(c) = cs[1].constant_value() else {
                continue;
            };
            let value = (-&cs[0]).scale(&c.recip());
            return Some((i, v.clone(), value));
        }
    }
    None
}

/// Repeatedly solves an equation for a parameter occurring only linearly
/// with a constant coefficient and substitutes, until one equation is left
/// or no such parameter exists.
pub fn reduce_by_linear_pivots(
    mut eqs: Vec<MPoly>,
    vars: &[String],
) -> (Vec<MPoly>, Vec<(String, MPoly)>) {
    let mut subs: Vec<(String, MPoly)> = Vec::new();
    while eqs.len() > 1 {
        let Some((i, v, value)) = linear_pivot(&eqs, vars) else {
            break;
        };
        eqs.remove(i);
        let a = [(v.as_str(), value.clone())];
        for e in eqs.iter_mut() {
            *e = e.substitute(&a);
        }
        for (_, prev) in subs.iter_mut() {
            *prev = prev.substitute(&a);
        }
        subs.push((v, value));
    }
    (eqs, subs)
}

pub fn central_fiber(s: &SlodowySlice, q: &InvariantTuple) -> Result<CentralFiber, LieError> {
    let r = s.algebra.dynkin_type().rank();
    if s.dim() != r + 2 {
        return Err(LieError::NotSubregular(format!(
            "slice has {} parameters, a subregular slice has {}",
            s.dim(),
            r + 2
        )));
    }
    let (mut eqs, subs) = reduce_by_linear_pivots(q.components.clone(), &s.params);
    if eqs.len() != 1 {
        return Err(LieError::NotSubregular(
            "no equation is linear in a parameter".into(),
        ));
    }
    let equation = eqs.pop().expect("one equation");
    let solved: Vec<&String> = subs.iter().map(|(v, _)| v).collect();
    let variables: Vec<String> = s
        .params
        .iter()
        .filter(|p| !solved.contains(p))
        .cloned()
        .collect();
    if variables.len() != 3 || equation.used_vars().iter().any(|v| !variables.contains(v)) {
        return Err(LieError::NotSubregular(format!(
            "fibre equation lives in {} parameters",
            variables.len()
        )));
    }
    let equation = equation
        .in_context(&variables)
        .expect("remaining parameters");
    Ok(CentralFiber {
        equation,
        variables,
        substitutions: subs,
    })
}

impl CentralFiber {
    /// Independent check: eliminating the solved parameters from the
    /// quotient ideal gives a principal ideal generated by a multiple of
    /// [`CentralFiber::equation`].
    pub fn agrees_with_elimination(&self, q: &InvariantTuple) -> Result<bool, LieError> {
        let ideal = Ideal::with_context(&q.params, q.components.clone())?;
        let drop: Vec<&str> = self.substitutions.iter().map(|(v, _)| v.as_str()).collect();
        let e = ideal.eliminate(&drop)?;
        let gens: Vec<&MPoly> = e.generators().iter().filter(|g| !g.is_zero()).collect();
        if gens.len() != 1 {
            return Ok(false);
        }
        let ord = MonomialOrder::grevlex();
        let lhs = gens[0].in_context(&self.variables)?.primitive(&ord);
        let rhs = self.equation.primitive(&ord);
        Ok(lhs == rhs || lhs == -rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::BuiltinSlice;

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn sl4_quotient() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        let q = adjoint_quotient(&s, &[2, 3, 4]).unwrap();
        assert_eq!(q.components[0], p("-6*a^2 - 2*c"));
        assert_eq!(q.components[1], p("8*a^3 - 4*a*c - e"));
        assert_eq!(q.components[2], p("-3*a^4 + 6*a^2*c - b*d - 3*a*e"));
        assert!(q.is_weighted_homogeneous(&s.weight_table().unwrap()));
    }

    #[test]
    fn so5_quotient() {
        let s = SlodowySlice::builtin(BuiltinSlice::So5);
        let q = adjoint_quotient(&s, &[2, 4]).unwrap();
        assert_eq!(q.components[0], p("-b^2 - 2*a - 2*c"));
        assert_eq!(
            q.components[1],
            p("2*a*b^2 + 2*b^2*c + 2*a*c + c^2 + 2*c*d")
        );
        assert!(q.is_weighted_homogeneous(&s.weight_table().unwrap()));
    }

    #[test]
    fn sl2_quotient() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl2);
        let q = slice_quotient(&s);
        assert_eq!(q.components, vec![p("-u^2 - v*w")]);
    }

    #[test]
    fn wrong_degrees() {
        let s = SlodowySlice::builtin(BuiltinSlice::So5);
        assert!(matches!(
            adjoint_quotient(&s, &[2, 3]),
            Err(LieError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn central_fibers() {
        let s = SlodowySlice::builtin(BuiltinSlice::Sl4);
        let q = slice_quotient(&s);
        let f = central_fiber(&s, &q).unwrap();
        assert_eq!(f.equation, p("-81*a^4 - b*d"));
        assert_eq!(f.substitutions[0], ("c".to_string(), p("-3*a^2")));
        assert_eq!(f.substitutions[1], ("e".to_string(), p("20*a^3")));
        assert!(f.agrees_with_elimination(&q).unwrap());

        let s = SlodowySlice::builtin(BuiltinSlice::So5);
        let q = slice_quotient(&s);
        let f = central_fiber(&s, &q).unwrap();
        assert_eq!(f.equation, -p("b^4 + c*(b^2 - 2*d + c)"));
        assert_eq!(f.substitutions[0], ("a".to_string(), p("-c - b^2/2")));
        assert!(f.agrees_with_elimination(&q).unwrap());

        let s = SlodowySlice::builtin(BuiltinSlice::Sl2);
        let f = central_fiber(&s, &slice_quotient(&s)).unwrap();
        assert_eq!(f.equation, p("-u^2 - v*w"));
        assert!(f.substitutions.is_empty());
    }
}
