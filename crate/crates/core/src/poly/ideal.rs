use serde::{Deserialize, Serialize};

use super::groebner::{default_budget, GroebnerBasis};
use super::mpoly::{unify_contexts, MPoly};
use super::order::MonomialOrder;
use super::PolyError;

/// Ideal given by generators sharing one variable context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ideal {
    vars: Vec<String>,
    generators: Vec<MPoly>,
}

impl Ideal {
    /// Generators are moved into the union of their contexts.
    pub fn new(generators: Vec<MPoly>) -> Result<Self, PolyError> {
        if generators.is_empty() {
            return Err(PolyError::EmptyIdeal);
        }
        let mut vars: Vec<String> = Vec::new();
        for g in &generators {
            vars = unify_contexts(&vars, g.vars());
        }
        Self::with_context(&vars, generators)
    }

    /// Generators are moved into `vars`, which must contain every variable
    /// they use.
    pub fn with_context<S: AsRef<str>>(
        vars: &[S],
        generators: Vec<MPoly>,
    ) -> Result<Self, PolyError> {
        if generators.is_empty() {
            return Err(PolyError::EmptyIdeal);
        }
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        let generators = generators
            .iter()
            .map(|g| g.in_context(&vars))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal { vars, generators })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Result<GroebnerBasis, PolyError> {
        GroebnerBasis::compute(self, order)
    }

    pub fn groebner_with_budget(
        &self,
        order: &MonomialOrder,
        budget: usize,
    ) -> Result<GroebnerBasis, PolyError> {
        GroebnerBasis::compute_with_budget(self, order, budget)
    }

    /// `I + J` in the union context.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let vars = unify_contexts(&self.vars, &other.vars);
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Ideal::with_context(&vars, gens).expect("union context")
    }

    /// Dimension of the quotient ring as a vector space, `None` if infinite.
    pub fn quotient_dimension(&self, budget: usize) -> Result<Option<usize>, PolyError> {
        let gb = self.groebner_with_budget(&MonomialOrder::grevlex(), budget)?;
        Ok(gb.quotient_basis().len())
    }

    pub fn eliminate<S: AsRef<str>>(&self, drop: &[S]) -> Result<Ideal, PolyError> {
        self.eliminate_with_budget(drop, default_budget())
    }

    /// Generators of the intersection with the subring in the remaining
    /// variables. Output generators are integral, primitive and have a positive
    /// leading coefficient; the zero ideal is returned as `<0>`.
    pub fn eliminate_with_budget<S: AsRef<str>>(
        &self,
        drop: &[S],
        budget: usize,
    ) -> Result<Ideal, PolyError> {
        let drop: Vec<String> = drop.iter().map(|s| s.as_ref().to_string()).collect();
        for d in &drop {
            if !self.vars.contains(d) {
                return Err(PolyError::InvalidElimination(format!(
                    "`{d}` is not in the context"
                )));
            }
        }
        let keep: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !drop.contains(v))
            .cloned()
            .collect();
        if keep.is_empty() {
            return Err(PolyError::InvalidElimination(
                "cannot eliminate every variable".into(),
            ));
        }
        let order = MonomialOrder::elimination(&drop);
        let gb = self.groebner_with_budget(&order, budget)?;
        let out_order = MonomialOrder::grevlex();
        let mut gens: Vec<MPoly> = gb
            .basis()
            .iter()
            .filter(|g| drop.iter().all(|d| g.degree_in(d) == 0))
            .map(|g| {
                g.in_context(&keep)
                    .expect("free of dropped variables")
                    .primitive(&out_order)
            })
            .collect();
        if gens.is_empty() {
            gens.push(MPoly::zero_in(&keep));
        }
        Ok(Ideal {
            vars: keep,
            generators: gens,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn eliminate_a3_central_fiber() {
        let i = Ideal::new(vec![p("c + 3*a^2"), p("e - 20*a^3"), p("81*a^4 + b*d")]).unwrap();
        let j = i.eliminate(&["c", "e"]).unwrap();
        assert_eq!(j.generators(), &[p("81*a^4 + b*d")]);
    }

    #[test]
    fn eliminate_b2_central_fiber() {
        let i = Ideal::new(vec![p("a + c + b^2/2"), p("b^4 + c*(b^2 - 2*d + c)")]).unwrap();
        let j = i.eliminate(&["a"]).unwrap();
        assert_eq!(j.generators(), &[p("b^4 + c*(b^2 - 2*d + c)")]);
        assert_eq!(j.vars(), &["c", "b", "d"]);
    }

    #[test]
    fn eliminate_to_zero_ideal() {
        let i = Ideal::new(vec![p("x - y")]).unwrap();
        let j = i.eliminate(&["x"]).unwrap();
        assert!(j.is_zero());
        assert_eq!(j.generators().len(), 1);
    }

    #[test]
    fn eliminate_rejects_bad_sets() {
        let i = Ideal::new(vec![p("x - y")]).unwrap();
        assert!(i.eliminate(&["x", "y"]).is_err());
        assert!(i.eliminate(&["w"]).is_err());
    }

    #[test]
    fn empty_ideal_rejected() {
        assert_eq!(Ideal::new(vec![]).unwrap_err(), PolyError::EmptyIdeal);
    }
}
