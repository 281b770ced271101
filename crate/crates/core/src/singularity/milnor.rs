use std::fmt;

use serde::{Deserialize, Serialize};

use super::SingularityError;
use crate::poly::{default_budget, q, Ideal, MPoly, MonomialOrder};

/// Dimension of a quotient ring, or `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Milnor {
    Finite(usize),
    Infinite,
}

impl Milnor {
    pub fn finite(self) -> Option<usize> {
        match self {
            Milnor::Finite(n) => Some(n),
            Milnor::Infinite => None,
        }
    }
}

impl fmt::Display for Milnor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Milnor::Finite(n) => write!(f, "{n}"),
            Milnor::Infinite => write!(f, "infinite"),
        }
    }
}

fn quotient_dim(
    gens: Vec<MPoly>,
    vars: &[String],
    budget: usize,
) -> Result<Milnor, SingularityError> {
    let gens: Vec<MPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(Milnor::Infinite);
    }
    let ideal = Ideal::with_context(vars, gens)?;
    let gb = ideal.groebner_with_budget(&MonomialOrder::grevlex(), budget)?;
    Ok(match gb.quotient_basis().len() {
        Some(n) => Milnor::Finite(n),
        None => Milnor::Infinite,
    })
}

/// `dim Q[x]/<df/dx_i>`, all critical points counted.
pub fn milnor_number(f: &MPoly) -> Result<Milnor, SingularityError> {
    milnor_number_with_budget(f, default_budget())
}

pub fn milnor_number_with_budget(f: &MPoly, budget: usize) -> Result<Milnor, SingularityError> {
    quotient_dim(f.partials(), f.vars(), budget)
}

/// `dim Q[x]/<f, df/dx_i>`.
pub fn tjurina_number(f: &MPoly) -> Result<Milnor, SingularityError> {
    let mut gens = f.partials();
    gens.push(f.clone());
    quotient_dim(gens, f.vars(), default_budget())
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=d {
        for mut rest in monomials_of_degree(n - 1, d - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Milnor number of the germ at the origin: `dim O/(J + m^N)` once it
/// stabilizes in `N`, or `Infinite` if it keeps growing up to `max_order`.
pub fn local_milnor_number(f: &MPoly, max_order: u32) -> Result<Milnor, SingularityError> {
    let vars = f.vars().to_vec();
    let mut prev: Option<usize> = None;
    for n in 1..=max_order {
        let mut gens = f.partials();
        for e in monomials_of_degree(vars.len(), n) {
            gens.push(MPoly::monomial(&vars, e, q(1)));
        }
        let d = quotient_dim(gens, &vars, default_budget())?
            .finite()
            .expect("m^N is cofinite");
        if prev == Some(d) {
            return Ok(Milnor::Finite(d));
        }
        prev = Some(d);
    }
    Ok(Milnor::Infinite)
}
