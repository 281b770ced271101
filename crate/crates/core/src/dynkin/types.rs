use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DynkinError;

/// Letter of an irreducible Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

/// Irreducible Dynkin type such as `A3` or `G2`.
///
/// `C2` is normalised to `B2` and the D series starts at rank 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, DynkinError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(DynkinError::InvalidType(format!(
                "{}{}",
                family.letter(),
                rank
            )));
        }
        let family = if family == Family::C && rank == 2 {
            Family::B
        } else {
            family
        };
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Simply laced (types A, D, E).
    pub fn is_ade(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Every valid type of the given rank, in family order.
    pub fn all_of_rank(rank: usize) -> Vec<DynkinType> {
        let mut out: Vec<DynkinType> = Vec::new();
        for f in Family::ALL {
            if let Ok(t) = DynkinType::new(f, rank) {
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = DynkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || DynkinError::InvalidType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        DynkinType::new(family, rank)
    }
}

impl TryFrom<String> for DynkinType {
    type Error = DynkinError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<DynkinType> for String {
    fn from(t: DynkinType) -> String {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let t: DynkinType = "A3".parse().unwrap();
        assert_eq!(t.to_string(), "A3");
        assert_eq!("e_8".parse::<DynkinType>().unwrap().to_string(), "E8");
        assert_eq!("C2".parse::<DynkinType>().unwrap().to_string(), "B2");
    }

    #[test]
    fn rank_rules() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "A"] {
            assert!(bad.parse::<DynkinType>().is_err(), "{bad}");
        }
    }
}
