//! Helpers around [`BigRational`], the coefficient field used everywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PolyError;

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Integer rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced to lowest terms. Panics when `den == 0`.
pub fn qq(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (optional sign on `p`).
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let s = s.trim();
    let bad = || PolyError::Parse {
        input: s.to_string(),
        reason: "not a rational number".into(),
    };
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(PolyError::Parse {
                    input: s.to_string(),
                    reason: "zero denominator".into(),
                });
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical `p` / `p/q` text.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Greatest common divisor of the numerators (zero for an empty input).
pub fn numerator_gcd<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
}

pub(crate) fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_text {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::Serialize;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            v.iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod vecvec {
        use super::*;
        use serde::Serialize;

        pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            v.iter()
                .map(|r| r.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Vec<Vec<Rational>>, D::Error> {
            let v = Vec::<Vec<String>>::deserialize(d)?;
            v.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-6/4").unwrap(), qq(-3, 2));
        assert_eq!(format_rational(&qq(-3, 2)), "-3/2");
        assert_eq!(format_rational(&q(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = qq(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn superscripts() {
        assert_eq!(superscript(12), "¹²");
    }
}
