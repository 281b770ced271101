//! Dense univariate polynomials over the rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::mpoly::MPoly;
use super::rational::{denominator_lcm, Rational};

/// Coefficients from the constant term upwards, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    /// Reads `p` as a polynomial in `var`; `None` if another variable occurs.
    pub fn from_mpoly(p: &MPoly, var: &str) -> Option<Self> {
        let cs = p.coefficients_in(var);
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            out.push(c.constant_value()?);
        }
        Some(UPoly::new(out))
    }

    pub fn to_mpoly(&self, var: &str) -> MPoly {
        let vars = vec![var.to_string()];
        MPoly::from_terms(
            vars,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![k as u32], c.clone())),
        )
        .unwrap()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                UPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![Rational::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (UPoly::new(quot), UPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when the polynomial has no repeated complex root.
    pub fn is_squarefree(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun decomposition `p = c * prod_i a_i^i` with `a_i` monic, square-free
    /// and pairwise coprime; returns the nonconstant `(a_i, i)`.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let mut a = self.gcd(&d);
        let mut b = self.div_rem(&a).0;
        let mut c = d.div_rem(&a).0;
        let mut dd = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            dd = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Multiplicity of `x` as a root (zero if not a root); `None` for the
    /// zero polynomial.
    pub fn root_multiplicity(&self, x: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = UPoly::new(vec![-x.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (quot, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return Some(m);
            }
            p = quot;
            m += 1;
        }
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() {
            return vec![];
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        // strip the root 0
        let lead_zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            roots.push(Rational::zero());
            p = UPoly::new(p.coeffs[lead_zeros..].to_vec());
        }
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let l = denominator_lcm(p.coeffs.iter());
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let (Some(num), Some(den)) = (divisors(&a0), divisors(&an)) else {
            return roots;
        };
        let mut cands: Vec<Rational> = Vec::new();
        for n in &num {
            for d in &den {
                for s in [1, -1] {
                    let r = Rational::new(n * BigInt::from(s), d.clone());
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        for c in cands {
            if p.eval(&c).is_zero() {
                roots.push(c);
            }
        }
        roots.sort();
        roots
    }

    /// Resultant with `other` via the Euclidean algorithm.
    pub fn resultant(&self, other: &UPoly) -> Rational {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Rational::zero();
        };
        if n == 0 {
            return num_traits::pow(other.coeffs[0].clone(), m);
        }
        let (_, r) = self.div_rem(other);
        let lc = other.leading().unwrap().clone();
        match r.degree() {
            None => Rational::zero(),
            Some(k) => {
                let sign = if (m * n) % 2 == 1 {
                    -Rational::one()
                } else {
                    Rational::one()
                };
                sign * num_traits::pow(lc, m - k) * other.resultant(&r)
            }
        }
    }

    /// Discriminant `(-1)^(n(n-1)/2) / a_n * Res(f, f')`.
    pub fn discriminant(&self) -> Rational {
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return Rational::one();
        }
        let r = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 1 {
            -Rational::one()
        } else {
            Rational::one()
        };
        sign * r / self.leading().unwrap()
    }
}

const DIVISOR_LIMIT: u64 = 1 << 40;

/// Positive divisors by trial division, or `None` when the number is too big
/// to factor quickly.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return Some(vec![]);
    }
    let small: u64 = u64::try_from(&n).ok().filter(|v| *v <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    out.sort();
    Some(out)
}

impl std::ops::Sub for &UPoly {
    type Output = UPoly;

    fn sub(self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        UPoly::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) - get(&other.coeffs, i))
                .collect(),
        )
    }
}

impl std::ops::Mul for &UPoly {
    type Output = UPoly;

    fn mul(self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::new(vec![]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{q, qq};

    fn up(v: &[i64]) -> UPoly {
        UPoly::new(v.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let f = up(&[2, -3, 0, 1]);
        assert!(!f.is_squarefree());
        assert_eq!(f.gcd(&f.derivative()), up(&[-1, 1]));
        assert!(up(&[-1, 0, 1]).is_squarefree());
    }

    #[test]
    fn roots() {
        // 2x^3 - 3x^2 - 3x + 2 = (2x - 1)(x + 1)(x - 2)
        let f = up(&[2, -3, -3, 2]);
        assert_eq!(f.rational_roots(), vec![q(-1), qq(1, 2), q(2)]);
        assert_eq!(up(&[0, 0, 1]).rational_roots(), vec![q(0)]);
        assert!(up(&[-2, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn discriminant_of_quadratic_and_cubic() {
        // x^2 + b x + c: b^2 - 4c
        assert_eq!(up(&[3, 5, 1]).discriminant(), q(13));
        // x^3 + p x + q: -4p^3 - 27q^2
        assert_eq!(up(&[2, -3, 0, 1]).discriminant(), q(0));
        assert_eq!(up(&[1, 1, 0, 1]).discriminant(), q(-31));
    }

    #[test]
    fn division() {
        let (qt, r) = up(&[1, 0, 0, 1]).div_rem(&up(&[1, 1]));
        assert_eq!(qt, up(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn squarefree_parts() {
        // (x - 1)^3 (x + 2) (x^2 + 1)^2
        let f = &(&(&up(&[-1, 1]) * &up(&[-1, 1])) * &up(&[-1, 1])) * &up(&[2, 1]);
        let g = &f * &(&up(&[1, 0, 1]) * &up(&[1, 0, 1]));
        let parts = g.squarefree_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (up(&[2, 1]), 1));
        assert_eq!(parts[1], (up(&[1, 0, 1]), 2));
        assert_eq!(parts[2], (up(&[-1, 1]), 3));
        assert_eq!(g.root_multiplicity(&q(1)), Some(3));
        assert_eq!(g.root_multiplicity(&q(5)), Some(0));
    }
}
