use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::order::{grevlex, MonomialOrder};
use super::rational::{
    denominator_lcm, format_rational, numerator_gcd, parse_rational, superscript, Rational,
};
use super::PolyError;

/// Multivariate polynomial with exact rational coefficients.
///
/// The variable context is an ordered list of names. Binary operations unify
/// contexts by name, so `x + y` built from two single-variable polynomials
/// lives in the context `[x, y]`. Zero coefficients are never stored.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(into = "MPolyJson", try_from = "MPolyJson")]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// JSON wire form: `{"vars":[...], "terms":[{"coeff":"p/q","exps":[...]}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MPolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

impl From<MPoly> for MPolyJson {
    fn from(p: MPoly) -> Self {
        let terms = p
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                coeff: format_rational(c),
                exps: e.clone(),
            })
            .collect();
        MPolyJson {
            vars: p.vars,
            terms,
        }
    }
}

impl TryFrom<MPolyJson> for MPoly {
    type Error = PolyError;

    fn try_from(j: MPolyJson) -> Result<Self, Self::Error> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            terms.push((t.exps, parse_rational(&t.coeff)?));
        }
        MPoly::from_terms(j.vars, terms)
    }
}

pub(crate) fn check_context(vars: &[String]) -> Result<(), PolyError> {
    let mut seen = BTreeSet::new();
    for v in vars {
        if !seen.insert(v.as_str()) {
            return Err(PolyError::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

/// Union of two contexts: `a` followed by the names of `b` not in `a`.
pub fn unify_contexts(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            vars: vec![],
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_in(vars: &[String]) -> Self {
        MPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        MPoly {
            vars: vec![],
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; duplicate
    /// exponent vectors are summed.
    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self, PolyError> {
        check_context(&vars)?;
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(PolyError::ArityMismatch {
                    expected: vars.len(),
                    got: e.len(),
                });
            }
            add_term(&mut map, e, c);
        }
        Ok(MPoly { vars, terms: map })
    }

    /// Monomial `c * prod vars[i]^exps[i]`.
    pub fn monomial(vars: &[String], exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(vars.len(), exps.len(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.constant_term())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Names of variables that actually occur.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Re-expresses the polynomial in `vars`, which must contain every used
    /// variable.
    pub fn in_context(&self, vars: &[String]) -> Result<MPoly, PolyError> {
        if vars == self.vars.as_slice() {
            return Ok(self.clone());
        }
        check_context(vars)?;
        let mut map_idx = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let target = vars.iter().position(|w| w == v);
            if target.is_none() && self.terms.keys().any(|e| e[i] > 0) {
                return Err(PolyError::ContextMismatch(format!(
                    "variable `{v}` is used but missing from the target context"
                )));
            }
            map_idx.push(target);
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if let Some(t) = map_idx[i] {
                    ne[t] = x;
                }
            }
            terms.insert(ne, c.clone());
        }
        Ok(MPoly {
            vars: vars.to_vec(),
            terms,
        })
    }

    /// Drops variables that do not occur, keeping the relative order.
    pub fn trimmed(&self) -> MPoly {
        let used = self.used_vars();
        self.in_context(&used)
            .expect("used vars form a valid context")
    }

    fn unified(&self, other: &MPoly) -> (MPoly, MPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let u = unify_contexts(&self.vars, &other.vars);
        (
            self.in_context(&u).expect("superset context"),
            other.in_context(&u).expect("superset context"),
        )
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero_in(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::constant(Rational::one())
            .in_context(&self.vars)
            .unwrap();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Power with a signed exponent; negative exponents are rejected.
    pub fn checked_pow(&self, e: i64) -> Result<MPoly, PolyError> {
        if e < 0 {
            return Err(PolyError::NegativeExponent(e));
        }
        let e = u32::try_from(e).map_err(|_| PolyError::NegativeExponent(e))?;
        Ok(self.pow(e))
    }

    /// Formal partial derivative; zero when `var` is not in the context.
    pub fn derivative(&self, var: &str) -> MPoly {
        let Some(i) = self.var_index(var) else {
            return MPoly::zero_in(&self.vars);
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            add_term(
                &mut terms,
                ne,
                c * Rational::from_integer(BigInt::from(e[i])),
            );
        }
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// All partial derivatives in context order.
    pub fn partials(&self) -> Vec<MPoly> {
        self.vars.iter().map(|v| self.derivative(v)).collect()
    }

    /// Simultaneous substitution `var -> image`. Variables not mentioned are
    /// kept; the result context is the union of all contexts involved.
    pub fn substitute<S: AsRef<str>>(&self, assignment: &[(S, MPoly)]) -> MPoly {
        let mut ctx = self.vars.clone();
        for (_, img) in assignment {
            ctx = unify_contexts(&ctx, &img.vars);
        }
        let images: Vec<Option<MPoly>> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .iter()
                    .find(|(name, _)| name.as_ref() == v)
                    .map(|(_, img)| img.in_context(&ctx).unwrap())
            })
            .collect();
        let mut powers: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        let own_index: Vec<usize> = self
            .vars
            .iter()
            .map(|v| ctx.iter().position(|w| w == v).unwrap())
            .collect();
        for (e, c) in &self.terms {
            // part that stays monomial
            let mut mono = vec![0u32; ctx.len()];
            let mut factor: Option<MPoly> = None;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match &images[i] {
                    None => mono[own_index[i]] += x,
                    Some(img) => {
                        let p = powers.entry((i, x)).or_insert_with(|| img.pow(x)).clone();
                        factor = Some(match factor {
                            None => p,
                            Some(f) => &f * &p,
                        });
                    }
                }
            }
            match factor {
                None => add_term(&mut acc, mono, c.clone()),
                Some(f) => {
                    for (fe, fc) in &f.terms {
                        let ne: Vec<u32> = fe.iter().zip(&mono).map(|(a, b)| a + b).collect();
                        add_term(&mut acc, ne, fc * c);
                    }
                }
            }
        }
        MPoly {
            vars: ctx,
            terms: acc,
        }
    }

    /// Substitutes rational values for some variables.
    pub fn eval_partial<S: AsRef<str>>(&self, values: &[(S, Rational)]) -> MPoly {
        let assignment: Vec<(&str, MPoly)> = values
            .iter()
            .map(|(v, r)| (v.as_ref(), MPoly::constant(r.clone())))
            .collect();
        self.substitute(&assignment)
    }

    /// Evaluates at a point given in context order.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluates with values given by name; every used variable must be bound.
    pub fn eval_named<S: AsRef<str>>(
        &self,
        values: &[(S, Rational)],
    ) -> Result<Rational, PolyError> {
        let p = self.eval_partial(values);
        p.constant_value()
            .ok_or_else(|| PolyError::UnknownVariable(p.used_vars().join(",")))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Weighted degree of each term, weights given by variable name (missing
    /// names weigh 0).
    pub fn weighted_degrees<S: AsRef<str>>(&self, weights: &[(S, i64)]) -> BTreeSet<i64> {
        let w: Vec<i64> = self
            .vars
            .iter()
            .map(|v| {
                weights
                    .iter()
                    .find(|(n, _)| n.as_ref() == v)
                    .map(|(_, w)| *w)
                    .unwrap_or(0)
            })
            .collect();
        self.terms
            .keys()
            .map(|e| e.iter().zip(&w).map(|(&k, &wi)| k as i64 * wi).sum())
            .collect()
    }

    pub fn is_weighted_homogeneous<S: AsRef<str>>(
        &self,
        weights: &[(S, i64)],
        degree: i64,
    ) -> bool {
        self.weighted_degrees(weights).iter().all(|&d| d == degree)
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(Vec<u32>, Rational)> {
        let r = order.resolve(&self.vars);
        self.terms
            .iter()
            .max_by(|a, b| r.cmp_context(a.0, b.0))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    pub fn monic(&self, order: &MonomialOrder) -> MPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Integer multiple with coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive(&self, order: &MonomialOrder) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = denominator_lcm(self.terms.values());
        let cleared = self.scale(&Rational::from_integer(l));
        let g = numerator_gcd(cleared.terms.values());
        let mut out = cleared.scale(&Rational::new(BigInt::one(), g));
        if out
            .leading_term(order)
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            out = -&out;
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        let (mut rem, d) = self.unified(d);
        let ctx = rem.vars.clone();
        let order = MonomialOrder::grevlex();
        let r = order.resolve(&ctx);
        let (dl, dc) = d.leading_term(&order).unwrap();
        let mut quot: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        while !rem.is_zero() {
            let (rl, rc) = rem
                .terms
                .iter()
                .max_by(|a, b| r.cmp_context(a.0, b.0))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            if rl.iter().zip(&dl).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = rl.iter().zip(&dl).map(|(a, b)| a - b).collect();
            let qc = &rc / &dc;
            for (e, c) in &d.terms {
                let ne: Vec<u32> = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                add_term(&mut rem.terms, ne, -(c * &qc));
            }
            add_term(&mut quot, qe, qc);
        }
        Some(MPoly {
            vars: ctx,
            terms: quot,
        })
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MPoly> {
        let Some(i) = self.var_index(var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MPoly::zero_in(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne[i] as usize;
            ne[i] = 0;
            add_term(&mut out[k].terms, ne, c.clone());
        }
        out
    }

    /// Terms sorted by descending grevlex in context order (display order).
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex(b.0, a.0).then_with(|| b.0.cmp(a.0)));
        v
    }

    /// Human-oriented rendering with superscript exponents and implicit
    /// multiplication, e.g. `x⁴ − yz + b1 x² + b2`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('−');
                }
            } else {
                out.push_str(if neg { " − " } else { " + " });
            }
            let abs = c.abs();
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| {
                    if x == 1 {
                        v.clone()
                    } else {
                        format!("{v}{}", superscript(x as u64))
                    }
                })
                .collect();
            let is_one = abs.is_one();
            if factors.is_empty() {
                out.push_str(&format_rational(&abs));
                continue;
            }
            if !is_one {
                out.push_str(&format_rational(&abs));
                if !abs.denom().is_one() {
                    out.push(' ');
                }
            }
            let mut prev_multi = false;
            for (j, f) in factors.iter().enumerate() {
                let name_len = f
                    .chars()
                    .take_while(|ch| !"⁰¹²³⁴⁵⁶⁷⁸⁹".contains(*ch))
                    .count();
                let multi = name_len > 1;
                if j > 0 && (multi || prev_multi) {
                    out.push(' ');
                }
                out.push_str(f);
                prev_multi = multi;
            }
        }
        out
    }
}

pub(crate) fn add_term(map: &mut BTreeMap<Vec<u32>, Rational>, e: Vec<u32>, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.unified(other);
        a.terms == b.terms
    }
}

impl Eq for MPoly {}

impl fmt::Display for MPoly {
    /// Canonical text form, parsed back losslessly by [`MPoly::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            let has_vars = e.iter().any(|&x| x > 0);
            if !abs.is_one() || !has_vars {
                parts.push(format_rational(&abs));
            }
            for (v, &x) in self.vars.iter().zip(e.iter()) {
                match x {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{x}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let (mut a, b) = self.unified(rhs);
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, c);
        }
        a
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let (mut a, b) = self.unified(rhs);
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let (a, b) = self.unified(rhs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, ca * cb);
            }
        }
        MPoly {
            vars: a.vars,
            terms,
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'a MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

/// Sorting helper used when presenting bases: compares two polynomials by
/// their leading monomials under `order`.
pub fn cmp_leading(a: &MPoly, b: &MPoly, order: &MonomialOrder) -> Ordering {
    let (a, b) = a.unified(b);
    let r = order.resolve(&a.vars);
    match (a.leading_term(order), b.leading_term(order)) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some((ea, _)), Some((eb, _))) => r.cmp_context(&ea, &eb),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{q, qq};

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let x = MPoly::var("x");
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let x = MPoly::var("x");
        let y = MPoly::var("y");
        assert_eq!(&(&x + &y) * &(&x - &y), p("x^2 - y^2"));
    }

    #[test]
    fn identity_power() {
        let f = p("x^4 - y*z");
        assert_eq!(f.pow(1), f);
        assert_eq!(f.pow(0), MPoly::from_int(1));
        assert!(matches!(
            f.checked_pow(-1),
            Err(PolyError::NegativeExponent(-1))
        ));
    }

    #[test]
    fn partial_derivatives() {
        let f = MPoly::parse_in("x^4 - y*z", &["x", "y", "z"]).unwrap();
        assert_eq!(f.partials(), vec![p("4*x^3"), p("-z"), p("-y")]);
        let c = MPoly::parse_in("5", &["x", "y", "z"]).unwrap();
        assert!(c.partials().iter().all(|d| d.is_zero()));
        let g = p("x^2 + y^2 + z^2 - t^2");
        assert_eq!(g.partials(), vec![p("2*x"), p("2*y"), p("2*z"), p("-2*t")]);
    }

    #[test]
    fn substitution_examples() {
        let f = p("8*a^3 - 4*a*c - e");
        let g = f.substitute(&[("c", p("-3*a^2"))]);
        assert_eq!(g, p("20*a^3 - e"));
        let x = p("x");
        assert_eq!(x.substitute(&[("x", p("x"))]), x);
        let h = p("-3*a^4 + 6*a^2*c - b*d - 3*a*e");
        let k = h.substitute(&[("c", p("-3*a^2")), ("e", p("20*a^3"))]);
        assert_eq!(k, p("-81*a^4 - b*d"));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let f = p("x - y");
        let g = f.substitute(&[("x", p("y")), ("y", p("x"))]);
        assert_eq!(g, p("y - x"));
    }

    #[test]
    fn equality_ignores_context_order() {
        let a = MPoly::parse_in("x + y", &["x", "y"]).unwrap();
        let b = MPoly::parse_in("x + y", &["y", "x", "z"]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exact_division() {
        let f = p("x^2 - y^2");
        assert_eq!(f.div_exact(&p("x - y")).unwrap(), p("x + y"));
        assert!(f.div_exact(&p("x + 2*y")).is_none());
    }

    #[test]
    fn primitive_normalisation() {
        let f = p("-1/81*b*d - a^4");
        assert_eq!(f.primitive(&MonomialOrder::grevlex()), p("81*a^4 + b*d"));
    }

    #[test]
    fn weighted_homogeneity() {
        let f = p("x^4 - y*z");
        assert!(f.is_weighted_homogeneous(&[("x", 2), ("y", 4), ("z", 4)], 8));
        assert!(!f.is_weighted_homogeneous(&[("x", 2), ("y", 3), ("z", 4)], 8));
    }

    #[test]
    fn pretty_printing() {
        let vars = ["b1", "b2", "x", "y", "z"];
        let f = MPoly::parse_in("x^4 - y*z + b1*x^2 + b2", &vars).unwrap();
        assert_eq!(f.to_pretty(), "x⁴ + b1 x² − yz + b2");
        assert_eq!(p("-81*a^4 - b*d").to_pretty(), "−81a⁴ − bd");
        assert_eq!(p("1/2*x").to_pretty(), "1/2 x");
    }

    #[test]
    fn evaluation() {
        let f = p("x^2*y - 1/2");
        assert_eq!(f.eval(&[q(2), q(3)]), qq(23, 2));
        assert_eq!(f.eval_named(&[("x", q(1)), ("y", q(1))]).unwrap(), qq(1, 2));
        assert!(f.eval_named(&[("x", q(1))]).is_err());
    }

    #[test]
    fn json_shape() {
        let f = MPoly::parse_in("3/2*x^2 - y", &["x", "y"]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["x","y"],"terms":[{"coeff":"3/2","exps":[2,0]},{"coeff":"-1","exps":[0,1]}]}"#
        );
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_duplicate_context() {
        let err = MPoly::from_terms(vec!["x".into(), "x".into()], vec![]).unwrap_err();
        assert!(matches!(err, PolyError::DuplicateVariable(_)));
    }
}
