use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::snf::{
    column, integer_kernel, lattice_basis, smith_normal_form, solve_integer, ZMatrix,
};
use super::CohomologyError;
use crate::poly::rational::superscript;

/// `Z^free_rank + Z/t_1 + ... + Z/t_k` with `t_i >= 2` and `t_i | t_(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_divisors", deserialize_with = "de_divisors")]
    pub torsion: Vec<BigInt>,
}

fn ser_divisors<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    strs.serialize(s)
}

fn de_divisors<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    let strs: Vec<String> = Vec::deserialize(d)?;
    strs.iter()
        .map(|s| s.parse().map_err(serde::de::Error::custom))
        .collect()
}

impl FGAbelianGroup {
    pub fn zero() -> Self {
        FGAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Canonical form of `Z^free + sum Z/orders[i]`; orders `0` count as
    /// free and `1` as trivial.
    pub fn new(free: usize, orders: &[BigInt]) -> Self {
        let n = orders.len();
        let diag = ZMatrix::from_fn(n, n, |i, j| {
            if i == j {
                orders[i].abs()
            } else {
                BigInt::zero()
            }
        });
        let g = Self::cokernel(&diag);
        FGAbelianGroup {
            free_rank: g.free_rank + free,
            torsion: g.torsion,
        }
    }

    pub fn from_small(free: usize, orders: &[i64]) -> Self {
        let o: Vec<BigInt> = orders.iter().map(|&x| BigInt::from(x)).collect();
        Self::new(free, &o)
    }

    /// `Z^rows / im(relations)`.
    pub fn cokernel(relations: &ZMatrix) -> Self {
        let s = smith_normal_form(relations);
        FGAbelianGroup {
            free_rank: relations.rows() - s.rank(),
            torsion: s.divisors.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |a, b| a * b)
    }

    /// Rank over `Q` of the tensor with `Q`.
    pub fn rational_rank(&self) -> usize {
        self.free_rank
    }

    fn parts(&self, z: &str, pow: impl Fn(&str, usize) -> String) -> Vec<String> {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(pow(z, self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let k = self.torsion[i..].iter().take_while(|x| *x == t).count();
            let base = format!("{z}/{t}");
            parts.push(if k == 1 {
                base
            } else {
                pow(&format!("({base})"), k)
            });
            i += k;
        }
        parts
    }

    pub fn to_tex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let pow = |b: &str, k: usize| {
            if k == 1 {
                b.to_string()
            } else {
                format!("{b}^{{{k}}}")
            }
        };
        self.parts("\\mathbb{Z}", pow).join(" \\oplus ")
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let pow = |b: &str, k: usize| {
            if k == 1 {
                b.to_string()
            } else {
                format!("{b}{}", superscript(k as u64))
            }
        };
        f.write_str(&self.parts("Z", pow).join(" ⊕ "))
    }
}

/// `span(kernel) / span(image)` for lattices in `Z^n` given by columns, with
/// `span(image)` contained in `span(kernel)`.
pub fn subquotient(kernel: &ZMatrix, image: &ZMatrix) -> Result<FGAbelianGroup, CohomologyError> {
    let basis = lattice_basis(kernel);
    let r = basis.cols();
    let mut coords: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..image.cols() {
        let c = solve_integer(&basis, &column(image, j)).ok_or_else(|| {
            CohomologyError::NotEquivariant("image is not inside the kernel".into())
        })?;
        coords.push(c);
    }
    let rel = ZMatrix::from_fn(r, coords.len(), |i, j| coords[j][i].clone());
    Ok(FGAbelianGroup::cokernel(&rel))
}

/// `{v : a v in im(rel)}` as columns.
pub fn preimage(a: &ZMatrix, rel: &ZMatrix) -> ZMatrix {
    let n = a.cols();
    let stacked = super::snf::hconcat(a, &rel.map(|x| -x));
    let k = integer_kernel(&stacked);
    ZMatrix::from_fn(n, k.cols(), |i, j| k.get(i, j).clone())
}
