use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::roots::{reflect, RootSystem};
use super::types::{DynkinType, Family};
use super::DynkinError;
use crate::linalg::QMatrix;
use crate::poly::{q, MPoly, Rational};

/// Degrees of the basic Weyl-invariant polynomials, ascending.
pub fn invariant_degrees(t: DynkinType) -> Vec<u32> {
    let r = t.rank() as u32;
    match t.family() {
        Family::A | Family::B | Family::C | Family::D => {
            let mut d = CartanChart::new(t).expect("classical chart").degrees;
            d.sort();
            d
        }
        Family::E => match r {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

fn elementary_symmetric(xs: &[MPoly], k: usize) -> MPoly {
    // e_k via the recursion on prefixes
    let mut e = vec![MPoly::one()];
    e.resize(k + 1, MPoly::zero());
    for x in xs {
        for j in (1..=k).rev() {
            e[j] = &e[j] + &(&e[j - 1] * x);
        }
    }
    e[k].clone()
}

/// Coordinates on a Cartan subalgebra together with the restrictions of the
/// characteristic-polynomial invariants.
///
/// Chart variables are `t1..tr`. For `A_r` and `G2` the realization lives in
/// the sum-zero hyperplane and the last ambient coordinate is `-(t1+...+tr)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanChart {
    pub dynkin: DynkinType,
    pub vars: Vec<String>,
    /// Ambient coordinates of the root realization as linear forms.
    pub ambient: Vec<MPoly>,
    /// Invariants ordered by degree.
    pub invariants: Vec<MPoly>,
    pub degrees: Vec<u32>,
}

impl CartanChart {
    /// Types `E` and `F` have no matrix model here and are rejected.
    pub fn new(t: DynkinType) -> Result<Self, DynkinError> {
        let r = t.rank();
        let vars: Vec<String> = (1..=r).map(|i| format!("t{i}")).collect();
        let ts: Vec<MPoly> = vars
            .iter()
            .map(|v| MPoly::var(v).in_context(&vars).unwrap())
            .collect();
        let minus_sum = -ts.iter().fold(MPoly::zero_in(&vars), |a, b| &a + b);
        let squares: Vec<MPoly> = ts.iter().map(|x| x * x).collect();
        let sign = |k: usize| if k.is_multiple_of(2) { q(1) } else { q(-1) };
        let (ambient, invariants): (Vec<MPoly>, Vec<MPoly>) = match t.family() {
            Family::A => {
                let mut amb = ts.clone();
                amb.push(minus_sum);
                let inv = (2..=r + 1)
                    .map(|k| elementary_symmetric(&amb, k).scale(&sign(k)))
                    .collect();
                (amb, inv)
            }
            Family::B | Family::C => {
                let inv = (1..=r)
                    .map(|k| elementary_symmetric(&squares, k).scale(&sign(k)))
                    .collect();
                (ts.clone(), inv)
            }
            Family::D => {
                let mut inv: Vec<MPoly> = (1..r)
                    .map(|k| elementary_symmetric(&squares, k).scale(&sign(k)))
                    .collect();
                let pf = ts.iter().fold(MPoly::one(), |a, b| &a * b);
                let pos = inv
                    .iter()
                    .position(|p| p.total_degree().unwrap() as usize > r)
                    .unwrap_or(inv.len());
                inv.insert(pos, pf);
                (ts.clone(), inv)
            }
            Family::G => {
                let mut amb = ts.clone();
                amb.push(minus_sum);
                let e2 = elementary_symmetric(&amb, 2);
                let e3 = elementary_symmetric(&amb, 3);
                (amb, vec![e2, &e3 * &e3])
            }
            Family::E | Family::F => {
                return Err(DynkinError::Unsupported(format!("no Cartan chart for {t}")))
            }
        };
        let invariants: Vec<MPoly> = invariants
            .into_iter()
            .map(|p| p.in_context(&vars).unwrap())
            .collect();
        let degrees = invariants
            .iter()
            .map(|p| p.total_degree().unwrap())
            .collect();
        Ok(CartanChart {
            dynkin: t,
            vars,
            ambient,
            invariants,
            degrees,
        })
    }

    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    /// Linear form `t -> (root, t)`.
    pub fn root_form(&self, root: &[Rational]) -> MPoly {
        root.iter()
            .zip(&self.ambient)
            .fold(MPoly::zero_in(&self.vars), |acc, (c, x)| &acc + &x.scale(c))
    }

    /// Ambient vector of a chart point.
    pub fn to_ambient(&self, t: &[Rational]) -> Vec<Rational> {
        self.ambient.iter().map(|p| p.eval(t)).collect()
    }

    /// Chart coordinates of an ambient vector.
    pub fn from_ambient(&self, v: &[Rational]) -> Vec<Rational> {
        v[..self.rank()].to_vec()
    }

    /// `prod over all roots of alpha(t)`.
    pub fn root_product(&self, rs: &RootSystem) -> MPoly {
        rs.roots
            .iter()
            .fold(MPoly::one().in_context(&self.vars).unwrap(), |acc, r| {
                &acc * &self.root_form(r)
            })
    }

    /// Jacobian matrix `d q_j / d t_i` at a chart point.
    pub fn jacobian_at(&self, t: &[Rational]) -> QMatrix {
        QMatrix::from_fn(self.invariants.len(), self.rank(), |j, i| {
            self.invariants[j].derivative(&self.vars[i]).eval(t)
        })
    }

    pub fn jacobian_rank_at(&self, t: &[Rational]) -> usize {
        self.jacobian_at(t).rank()
    }

    /// Invariants evaluated at a chart point.
    pub fn eval(&self, t: &[Rational]) -> Vec<Rational> {
        self.invariants.iter().map(|p| p.eval(t)).collect()
    }

    /// Checks that every invariant is fixed by every simple reflection.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        for alpha in &rs.simple {
            // image of the chart point under the reflection, as linear forms
            let img: Vec<MPoly> = {
                let n = self.ambient.len();
                (0..self.rank())
                    .map(|i| {
                        // coordinate i of s_alpha(v) = v_i - 2 (v,alpha)/(alpha,alpha) alpha_i
                        let mut unit = vec![Rational::zero(); n];
                        unit[i] = Rational::one();
                        let row = reflect(&unit, alpha);
                        // s_alpha is symmetric, so row i equals column i
                        row.iter()
                            .zip(&self.ambient)
                            .fold(MPoly::zero_in(&self.vars), |acc, (c, x)| &acc + &x.scale(c))
                    })
                    .collect()
            };
            let assignment: Vec<(&str, MPoly)> =
                self.vars.iter().map(|v| v.as_str()).zip(img).collect();
            if self
                .invariants
                .iter()
                .any(|p| p.substitute(&assignment) != *p)
            {
                return false;
            }
        }
        true
    }
}

/// Weighted exponent vectors `k` with `sum k_j w_j = total`.
pub fn weighted_monomials(weights: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(w: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut k = 0;
        while k * w[i] <= left {
            cur.push(k);
            rec(w, i + 1, left - k * w[i], cur, out);
            cur.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, total, &mut Vec::new(), &mut out);
    out
}

/// Writes a homogeneous polynomial `f` as a polynomial in the invariants,
/// returned in the variables `names` (one per invariant).
pub fn express_in_invariants<S: AsRef<str>>(
    f: &MPoly,
    invariants: &[MPoly],
    names: &[S],
) -> Result<MPoly, DynkinError> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    if f.is_zero() {
        return Ok(MPoly::zero_in(&names));
    }
    let d = f.total_degree().unwrap();
    if f.order() != Some(d) {
        return Err(DynkinError::NotInvariant("input is not homogeneous".into()));
    }
    let degrees: Vec<u32> = invariants
        .iter()
        .map(|p| p.total_degree().unwrap_or(0))
        .collect();
    let monos = weighted_monomials(&degrees, d);
    let products: Vec<MPoly> = monos
        .iter()
        .map(|k| {
            k.iter()
                .zip(invariants)
                .fold(MPoly::one(), |acc, (&e, p)| &acc * &p.pow(e))
        })
        .collect();
    // rows indexed by monomials of f and of the products
    let mut ctx: Vec<String> = f.vars().to_vec();
    for p in &products {
        ctx = crate::poly::unify_contexts(&ctx, p.vars());
    }
    let mut keys: Vec<Vec<u32>> = Vec::new();
    let f = f.in_context(&ctx).unwrap();
    let products: Vec<MPoly> = products
        .iter()
        .map(|p| p.in_context(&ctx).unwrap())
        .collect();
    for p in products.iter().chain(std::iter::once(&f)) {
        for (e, _) in p.terms() {
            if !keys.contains(e) {
                keys.push(e.clone());
            }
        }
    }
    let coeff = |p: &MPoly, e: &Vec<u32>| {
        p.terms()
            .find(|(k, _)| *k == e)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    };
    let a = QMatrix::from_fn(keys.len(), products.len(), |i, j| {
        coeff(&products[j], &keys[i])
    });
    let b: Vec<Rational> = keys.iter().map(|e| coeff(&f, e)).collect();
    let x = a.solve(&b).ok_or_else(|| {
        DynkinError::NotInvariant("not in the span of invariant monomials".into())
    })?;
    let terms = monos.into_iter().zip(x).filter(|(_, c)| !c.is_zero());
    MPoly::from_terms(names, terms).map_err(|e| DynkinError::NotInvariant(e.to_string()))
}
