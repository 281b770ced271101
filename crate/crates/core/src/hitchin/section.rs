use serde::{Deserialize, Serialize};

use super::HitchinError;
use crate::dynkin::{invariant_degrees, DynkinType};
use crate::poly::{MPoly, Rational};

/// A section of `K^{d_1} + ... + K^{d_r}` over one chart, given by
/// polynomials in the chart variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSection {
    pub var: String,
    pub components: Vec<MPoly>,
    pub degrees: Vec<u32>,
}

impl LocalSection {
    pub fn new(var: &str, components: Vec<MPoly>, degrees: Vec<u32>) -> Result<Self, HitchinError> {
        if components.len() != degrees.len() {
            return Err(HitchinError::SectionMismatch(format!(
                "{} components for {} degrees",
                components.len(),
                degrees.len()
            )));
        }
        let ctx = vec![var.to_string()];
        let components = components
            .iter()
            .map(|c| {
                c.in_context(&ctx).map_err(|_| {
                    HitchinError::SectionMismatch(format!("{c} is not a polynomial in {var}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LocalSection {
            var: var.to_string(),
            components,
            degrees,
        })
    }

    /// Section for `d` with the type's invariant degrees.
    pub fn for_type(
        d: DynkinType,
        var: &str,
        components: Vec<MPoly>,
    ) -> Result<Self, HitchinError> {
        let degrees = invariant_degrees(d);
        if components.len() != degrees.len() {
            return Err(HitchinError::SectionMismatch(format!(
                "{d} needs {} components, got {}",
                degrees.len(),
                components.len()
            )));
        }
        Self::new(var, components, degrees)
    }

    pub fn parse<S: AsRef<str>>(
        d: DynkinType,
        var: &str,
        components: &[S],
    ) -> Result<Self, HitchinError> {
        let comps = components
            .iter()
            .map(|s| MPoly::parse(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::for_type(d, var, comps)
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn eval(&self, x: &Rational) -> Vec<Rational> {
        self.components
            .iter()
            .map(|c| c.eval(std::slice::from_ref(x)))
            .collect()
    }

    /// Substitution `names[j] -> b_j(var)`.
    pub fn assignment<S: AsRef<str>>(&self, names: &[S]) -> Vec<(String, MPoly)> {
        names
            .iter()
            .map(|n| n.as_ref().to_string())
            .zip(self.components.iter().cloned())
            .collect()
    }

    /// The same section in another chart variable name.
    pub fn renamed(&self, var: &str) -> LocalSection {
        let a = [(self.var.as_str(), MPoly::var(var))];
        let ctx = vec![var.to_string()];
        LocalSection {
            var: var.to_string(),
            components: self
                .components
                .iter()
                .map(|c| c.substitute(&a).in_context(&ctx).unwrap())
                .collect(),
            degrees: self.degrees.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let a1: DynkinType = "A1".parse().unwrap();
        let s = LocalSection::parse(a1, "x", &["x*(x - 1)"]).unwrap();
        assert_eq!(s.degrees, vec![2]);
        assert_eq!(s.eval(&crate::poly::q(2)), vec![crate::poly::q(2)]);
        assert!(LocalSection::parse(a1, "x", &["x*y"]).is_err());
        assert!(LocalSection::parse(a1, "x", &["x", "1"]).is_err());
        let r = s.renamed("s");
        assert_eq!(r.components[0], MPoly::parse("s^2 - s").unwrap());
    }
}
