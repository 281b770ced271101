use std::collections::{BTreeSet, VecDeque};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::types::{DynkinType, Family};
use super::weyl::weyl_group_order;
use crate::linalg::QMatrix;
use crate::poly::{q, qq, Rational};

pub type Vector = Vec<Rational>;

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn e(n: usize, i: usize) -> Vector {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[Rational], c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

/// Reflection of `v` in the hyperplane orthogonal to `alpha`.
pub fn reflect(v: &[Rational], alpha: &[Rational]) -> Vector {
    let c = q(2) * dot(v, alpha) / dot(alpha, alpha);
    sub(v, &scale(alpha, &c))
}

/// Simple roots in the standard realization: `A_r` in the sum-zero
/// hyperplane of `R^(r+1)`, `B/C/D_r` in `R^r`, `E6, E7` inside the `E8`
/// lattice in `R^8`, `F4` in `R^4`, `G2` in the sum-zero hyperplane of `R^3`.
pub fn simple_roots(t: DynkinType) -> Vec<Vector> {
    let r = t.rank();
    match t.family() {
        Family::A => (0..r)
            .map(|i| sub(&e(r + 1, i), &e(r + 1, i + 1)))
            .collect(),
        Family::B | Family::C | Family::D => {
            let mut v: Vec<Vector> = (0..r - 1).map(|i| sub(&e(r, i), &e(r, i + 1))).collect();
            v.push(match t.family() {
                Family::B => e(r, r - 1),
                Family::C => scale(&e(r, r - 1), &q(2)),
                _ => add(&e(r, r - 2), &e(r, r - 1)),
            });
            v
        }
        Family::E => {
            let n = 8;
            let h = qq(1, 2);
            let mut a1 = vec![-h.clone(); n];
            a1[0] = h.clone();
            a1[7] = h;
            let mut all = vec![a1, add(&e(n, 0), &e(n, 1))];
            for i in 0..6 {
                all.push(sub(&e(n, i + 1), &e(n, i)));
            }
            all.truncate(r);
            all
        }
        Family::F => {
            let n = 4;
            let h = qq(1, 2);
            vec![
                sub(&e(n, 1), &e(n, 2)),
                sub(&e(n, 2), &e(n, 3)),
                e(n, 3),
                vec![h.clone(), -h.clone(), -h.clone(), -h],
            ]
        }
        Family::G => vec![vec![q(1), q(-1), q(0)], vec![q(-2), q(1), q(1)]],
    }
}

/// Cartan matrix `A[j][k] = 2 (a_j, a_k) / (a_k, a_k)`.
pub fn cartan_of(simple: &[Vector]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|aj| {
            simple
                .iter()
                .map(|ak| {
                    let v = q(2) * dot(aj, ak) / dot(ak, ak);
                    assert!(v.is_integer(), "non-integral Cartan entry");
                    i64::try_from(v.to_integer()).expect("small Cartan entry")
                })
                .collect()
        })
        .collect()
}

/// A root system in an explicit rational realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystem {
    pub dynkin: DynkinType,
    pub ambient_dim: usize,
    #[serde(with = "crate::poly::rational::serde_text::vecvec")]
    pub simple: Vec<Vector>,
    /// All roots, sorted by height (negative roots first).
    #[serde(with = "crate::poly::rational::serde_text::vecvec")]
    pub roots: Vec<Vector>,
    pub cartan: Vec<Vec<i64>>,
    /// Coordinates of each root in the basis of simple roots.
    pub coords: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(t: DynkinType) -> Self {
        let simple = simple_roots(t);
        let n = simple[0].len();
        let mut seen: BTreeSet<Vector> = BTreeSet::new();
        let mut queue: VecDeque<Vector> = VecDeque::new();
        for a in &simple {
            if seen.insert(a.clone()) {
                queue.push_back(a.clone());
            }
        }
        while let Some(b) = queue.pop_front() {
            for a in &simple {
                let c = reflect(&b, a);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        // simple-root coordinates through the Gram matrix
        let s = QMatrix::from_rows(simple.clone());
        let gram_inv = s
            .mul_mat(&s.transpose())
            .inverse()
            .expect("simple roots are independent");
        let mut with_coords: Vec<(Vec<i64>, Vector)> = seen
            .into_iter()
            .map(|b| {
                let c = gram_inv.mul_vec(&s.mul_vec(&b));
                let ints = c
                    .iter()
                    .map(|x| {
                        assert!(x.is_integer(), "root with fractional coordinates");
                        i64::try_from(x.to_integer()).unwrap()
                    })
                    .collect();
                (ints, b)
            })
            .collect();
        with_coords.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
        });
        let cartan = cartan_of(&simple);
        let (coords, roots) = with_coords.into_iter().unzip();
        RootSystem {
            dynkin: t,
            ambient_dim: n,
            simple,
            roots,
            cartan,
            coords,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn positive_roots(&self) -> Vec<&Vector> {
        self.roots
            .iter()
            .zip(&self.coords)
            .filter(|(_, c)| c.iter().all(|&x| x >= 0))
            .map(|(r, _)| r)
            .collect()
    }

    /// Largest squared length among the roots.
    pub fn long_length(&self) -> Rational {
        self.roots.iter().map(|r| dot(r, r)).max().unwrap()
    }

    pub fn is_long(&self, root: &[Rational]) -> bool {
        dot(root, root) == self.long_length()
    }

    /// Classical count `|R|` for the type.
    pub fn expected_count(t: DynkinType) -> usize {
        let r = t.rank();
        match (t.family(), r) {
            (Family::A, _) => r * (r + 1),
            (Family::B | Family::C, _) => 2 * r * r,
            (Family::D, _) => 2 * r * (r - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
            (Family::F, _) => 48,
            (Family::G, _) => 12,
        }
    }

    /// Order of the Weyl group by orbit-stabilizer on fundamental weights.
    pub fn weyl_order(&self) -> u128 {
        weyl_group_order(&self.cartan)
    }

    /// Checks `R = -R` and closure under every simple reflection.
    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&Vector> = self.roots.iter().collect();
        self.roots.iter().all(|b| {
            let neg: Vector = b.iter().map(|x| -x).collect();
            set.contains(&neg) && self.simple.iter().all(|a| set.contains(&reflect(b, a)))
        })
    }

    /// Roots whose value at `point` (a vector in the ambient space) is zero.
    pub fn vanishing_at(&self, point: &[Rational]) -> Vec<&Vector> {
        self.roots
            .iter()
            .filter(|r| dot(r, point).is_zero())
            .collect()
    }

    /// The root of greatest height.
    pub fn highest_root(&self) -> &Vector {
        self.roots.last().unwrap()
    }
}
