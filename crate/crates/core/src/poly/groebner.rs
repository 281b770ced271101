use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ideal::Ideal;
use super::mpoly::MPoly;
use super::order::{MonomialOrder, ResolvedOrder};
use super::rational::Rational;
use super::PolyError;

/// Default cap on S-pair reductions per Gröbner computation.
pub const DEFAULT_BUDGET: usize = 200_000;

static BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_BUDGET);

/// Budget used by calls that do not take one explicitly.
pub fn default_budget() -> usize {
    BUDGET.load(AtomicOrdering::Relaxed)
}

/// Replaces the process-wide budget; zero is raised to one.
pub fn set_default_budget(limit: usize) {
    BUDGET.store(limit.max(1), AtomicOrdering::Relaxed);
}

/// Polynomial in the internal exponent layout of a resolved order, terms
/// sorted ascending so the leading term is last.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Vec<u32>, Rational)>,
}

impl IPoly {
    fn from_mpoly(p: &MPoly, ord: &ResolvedOrder) -> Self {
        let mut terms: Vec<(Vec<u32>, Rational)> = p
            .terms()
            .map(|(e, c)| (ord.to_internal(e), c.clone()))
            .collect();
        terms.sort_by(|a, b| ord.cmp_internal(&a.0, &b.0));
        IPoly { terms }
    }

    fn to_mpoly(&self, vars: &[String], ord: &ResolvedOrder) -> MPoly {
        MPoly::from_terms(
            vars.to_vec(),
            self.terms
                .iter()
                .map(|(e, c)| (ord.to_context(e), c.clone())),
        )
        .expect("internal terms match the context")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[u32] {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().unwrap().1
    }

    fn make_monic(&mut self) {
        if self.is_zero() {
            return;
        }
        let inv = self.lc().recip();
        if inv.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.1 *= &inv;
        }
    }

    /// `self - c * x^shift * g`, merging sorted term lists.
    fn sub_scaled(&self, c: &Rational, shift: &[u32], g: &IPoly, ord: &ResolvedOrder) -> IPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(e, gc)| {
            let ne: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            (ne, -(gc * c))
        });
        let mut next_g = gi.next();
        while i < self.terms.len() || next_g.is_some() {
            match (self.terms.get(i), &next_g) {
                (Some(a), Some(b)) => match ord.cmp_internal(&a.0, &b.0) {
                    Ordering::Less => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push(next_g.take().unwrap());
                        next_g = gi.next();
                    }
                    Ordering::Equal => {
                        let s = &a.1 + &b.1;
                        if !s.is_zero() {
                            out.push((a.0.clone(), s));
                        }
                        i += 1;
                        next_g = gi.next();
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next_g.take().unwrap());
                    next_g = gi.next();
                }
                (None, None) => break,
            }
        }
        IPoly { terms: out }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full normal form of `f` modulo the polynomials `g` (those marked inactive
/// are skipped).
fn normal_form(f: IPoly, g: &[IPoly], active: &[bool], ord: &ResolvedOrder) -> IPoly {
    let mut p = f;
    let mut rem: Vec<(Vec<u32>, Rational)> = Vec::new();
    while let Some((m, c)) = p.terms.last().cloned() {
        let divisor = g
            .iter()
            .enumerate()
            .find(|(k, gk)| active[*k] && !gk.is_zero() && divides(gk.lm(), &m));
        match divisor {
            Some((_, gk)) => {
                let coeff = &c / gk.lc();
                let shift = diff(&m, gk.lm());
                p = p.sub_scaled(&coeff, &shift, gk, ord);
            }
            None => {
                p.terms.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    IPoly { terms: rem }
}

/// Reduced Gröbner basis of an ideal for a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    vars: Vec<String>,
    order: MonomialOrder,
    basis: Vec<MPoly>,
}

/// Standard monomials of a quotient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuotientBasis {
    Finite(Vec<MPoly>),
    Infinite,
}

impl QuotientBasis {
    pub fn len(&self) -> Option<usize> {
        match self {
            QuotientBasis::Finite(v) => Some(v.len()),
            QuotientBasis::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, QuotientBasis::Finite(_))
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, QuotientBasis::Finite(v) if v.is_empty())
    }

    pub fn monomials(&self) -> Option<&[MPoly]> {
        match self {
            QuotientBasis::Finite(v) => Some(v),
            QuotientBasis::Infinite => None,
        }
    }
}

impl GroebnerBasis {
    pub fn compute(ideal: &Ideal, order: &MonomialOrder) -> Result<Self, PolyError> {
        Self::compute_with_budget(ideal, order, default_budget())
    }

    /// Buchberger's algorithm with the product and chain criteria. `budget`
    /// bounds the number of S-polynomial reductions.
    pub fn compute_with_budget(
        ideal: &Ideal,
        order: &MonomialOrder,
        budget: usize,
    ) -> Result<Self, PolyError> {
        let vars = ideal.vars().to_vec();
        let ord = order.resolve(&vars);
        let mut g: Vec<IPoly> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();

        let mut inputs: Vec<IPoly> = ideal
            .generators()
            .iter()
            .map(|p| IPoly::from_mpoly(p, &ord))
            .filter(|p| !p.is_zero())
            .collect();
        inputs.sort_by(|a, b| ord.cmp_internal(a.lm(), b.lm()));
        for f in inputs {
            let mut h = normal_form(f, &g, &active, &ord);
            if h.is_zero() {
                continue;
            }
            h.make_monic();
            add_to_basis(h, &mut g, &mut active, &mut pairs);
        }

        let mut reductions = 0usize;
        while let Some(&(i, j)) = select_pair(&pairs, &g, &ord) {
            pairs.remove(&(i, j));
            if !active[i] || !active[j] {
                continue;
            }
            let l = lcm(g[i].lm(), g[j].lm());
            // product criterion
            if g[i]
                .lm()
                .iter()
                .zip(g[j].lm())
                .all(|(a, b)| *a == 0 || *b == 0)
            {
                continue;
            }
            // chain criterion
            let chain = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && active[k]
                    && divides(g[k].lm(), &l)
                    && !pairs.contains(&(i.min(k), i.max(k)))
                    && !pairs.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            reductions += 1;
            if reductions > budget {
                return Err(PolyError::BudgetExceeded { limit: budget });
            }
            let s = spoly(&g[i], &g[j], &l, &ord);
            let mut h = normal_form(s, &g, &active, &ord);
            if h.is_zero() {
                continue;
            }
            h.make_monic();
            add_to_basis(h, &mut g, &mut active, &mut pairs);
        }

        let basis = reduce_basis(g, active, &ord);
        let mut out: Vec<MPoly> = basis.iter().map(|p| p.to_mpoly(&vars, &ord)).collect();
        let keyed: Vec<Vec<u32>> = basis.iter().map(|p| p.lm().to_vec()).collect();
        let mut idx: Vec<usize> = (0..out.len()).collect();
        idx.sort_by(|&a, &b| ord.cmp_internal(&keyed[b], &keyed[a]));
        out = idx.into_iter().map(|k| out[k].clone()).collect();
        Ok(GroebnerBasis {
            vars,
            order: order.clone(),
            basis: out,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Basis elements sorted by descending leading monomial.
    pub fn basis(&self) -> &[MPoly] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    /// Leading exponent vectors in context layout.
    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.basis
            .iter()
            .map(|p| p.leading_term(&self.order).unwrap().0)
            .collect()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &MPoly) -> MPoly {
        let ctx = super::mpoly::unify_contexts(&self.vars, f.vars());
        let ord = self.order.resolve(&ctx);
        let g: Vec<IPoly> = self
            .basis
            .iter()
            .map(|p| IPoly::from_mpoly(&p.in_context(&ctx).unwrap(), &ord))
            .collect();
        let active = vec![true; g.len()];
        let f = IPoly::from_mpoly(&f.in_context(&ctx).unwrap(), &ord);
        normal_form(f, &g, &active, &ord).to_mpoly(&ctx, &ord)
    }

    pub fn contains(&self, f: &MPoly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Monomials outside the leading-term ideal, ascending in the order, or
    /// `Infinite` when some variable has no pure power among the leading
    /// monomials.
    pub fn quotient_basis(&self) -> QuotientBasis {
        let n = self.vars.len();
        let lms = self.leading_monomials();
        let mut bounds = vec![0u32; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            let pure = lms
                .iter()
                .filter(|m| m.iter().enumerate().all(|(k, &e)| k == i || e == 0) && m[i] > 0)
                .map(|m| m[i])
                .min();
            match pure {
                Some(p) => *b = p,
                None if lms.iter().any(|m| m.iter().all(|&e| e == 0)) => *b = 0,
                None => return QuotientBasis::Infinite,
            }
        }
        if lms.iter().any(|m| m.iter().all(|&e| e == 0)) {
            return QuotientBasis::Finite(vec![]);
        }
        let mut found: Vec<Vec<u32>> = Vec::new();
        let mut cur = vec![0u32; n];
        enumerate_standard(0, &mut cur, &bounds, &lms, &mut found);
        let ord = self.order.resolve(&self.vars);
        found.sort_by(|a, b| ord.cmp_context(a, b));
        QuotientBasis::Finite(
            found
                .into_iter()
                .map(|e| MPoly::monomial(&self.vars, e, Rational::one()))
                .collect(),
        )
    }

    /// Krull dimension of the quotient ring (`-1` for the unit ideal), from
    /// maximal sets of variables independent modulo the leading monomials.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.vars.len();
        let lms = self.leading_monomials();
        let mut best = 0;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as i64;
            if size <= best {
                continue;
            }
            let independent = lms.iter().all(|m| {
                m.iter()
                    .enumerate()
                    .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        best
    }
}

fn enumerate_standard(
    i: usize,
    cur: &mut Vec<u32>,
    bounds: &[u32],
    lms: &[Vec<u32>],
    out: &mut Vec<Vec<u32>>,
) {
    if lms.iter().any(|m| divides(m, cur)) {
        return;
    }
    if i == cur.len() {
        out.push(cur.clone());
        return;
    }
    for e in 0..bounds[i] {
        cur[i] = e;
        if lms.iter().any(|m| divides(m, cur)) {
            break;
        }
        enumerate_standard(i + 1, cur, bounds, lms, out);
    }
    cur[i] = 0;
}

fn add_to_basis(
    h: IPoly,
    g: &mut Vec<IPoly>,
    active: &mut Vec<bool>,
    pairs: &mut BTreeSet<(usize, usize)>,
) {
    let new = g.len();
    for (k, a) in active.iter().enumerate() {
        if *a {
            pairs.insert((k, new));
        }
    }
    g.push(h);
    active.push(true);
}

fn select_pair<'a>(
    pairs: &'a BTreeSet<(usize, usize)>,
    g: &[IPoly],
    ord: &ResolvedOrder,
) -> Option<&'a (usize, usize)> {
    pairs.iter().min_by(|a, b| {
        let la = lcm(g[a.0].lm(), g[a.1].lm());
        let lb = lcm(g[b.0].lm(), g[b.1].lm());
        ord.cmp_internal(&la, &lb).then_with(|| a.cmp(b))
    })
}

fn spoly(f: &IPoly, g: &IPoly, l: &[u32], ord: &ResolvedOrder) -> IPoly {
    let sf = diff(l, f.lm());
    let sg = diff(l, g.lm());
    let zero = IPoly { terms: vec![] };
    let a = zero.sub_scaled(&-f.lc().recip(), &sf, f, ord);
    a.sub_scaled(&g.lc().recip(), &sg, g, ord)
}

fn reduce_basis(g: Vec<IPoly>, active: Vec<bool>, ord: &ResolvedOrder) -> Vec<IPoly> {
    let live: Vec<IPoly> = g
        .into_iter()
        .zip(active)
        .filter(|(p, a)| *a && !p.is_zero())
        .map(|(p, _)| p)
        .collect();
    // minimal basis
    let mut keep = vec![true; live.len()];
    for i in 0..live.len() {
        for j in 0..live.len() {
            if i == j || !keep[j] {
                continue;
            }
            if divides(live[j].lm(), live[i].lm()) && (live[j].lm() != live[i].lm() || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<IPoly> = live
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();
    // interreduce tails
    let mut out = minimal.clone();
    for i in 0..out.len() {
        let mut act = vec![true; out.len()];
        act[i] = false;
        let mut r = normal_form(out[i].clone(), &out, &act, ord);
        r.make_monic();
        out[i] = r;
    }
    out
}
