use std::collections::{HashSet, VecDeque};

/// Size of the orbit of the fundamental weight `k` in fundamental-weight
/// coordinates, where `s_j(l) = l - l_j * (row j of the Cartan matrix)`.
pub fn fundamental_orbit_size(cartan: &[Vec<i64>], k: usize) -> usize {
    let n = cartan.len();
    let mut start = vec![0i64; n];
    start[k] = 1;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(l) = queue.pop_front() {
        for j in 0..n {
            if l[j] == 0 {
                continue;
            }
            let c = l[j];
            let m: Vec<i64> = l.iter().zip(&cartan[j]).map(|(a, b)| a - c * b).collect();
            if seen.insert(m.clone()) {
                queue.push_back(m);
            }
        }
    }
    seen.len()
}

fn submatrix(cartan: &[Vec<i64>], drop: usize) -> Vec<Vec<i64>> {
    cartan
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != drop)
                .map(|(_, x)| *x)
                .collect()
        })
        .collect()
}

/// Order of the Weyl group of a (possibly reducible) Cartan matrix:
/// `|W| = |W . w_k| * |W_k|`, where the stabilizer `W_k` of a fundamental
/// weight is the parabolic subgroup on the remaining vertices.
pub fn weyl_group_order(cartan: &[Vec<i64>]) -> u128 {
    let n = cartan.len();
    if n == 0 {
        return 1;
    }
    let degree = |i: usize| (0..n).filter(|&j| j != i && cartan[i][j] != 0).count();
    let leaves: Vec<usize> = (0..n).filter(|&i| degree(i) <= 1).collect();
    let candidates = if leaves.is_empty() {
        (0..n).collect()
    } else {
        leaves
    };
    let (k, orbit) = candidates
        .into_iter()
        .map(|k| (k, fundamental_orbit_size(cartan, k)))
        .min_by_key(|&(k, o)| (o, k))
        .unwrap();
    orbit as u128 * weyl_group_order(&submatrix(cartan, k))
}

#[cfg(test)]
mod tests {
    use crate::dynkin::{DynkinType, RootSystem};

    #[test]
    fn classical_orders() {
        let cases: [(&str, u128); 12] = [
            ("A1", 2),
            ("A3", 24),
            ("A5", 720),
            ("B2", 8),
            ("B3", 48),
            ("C4", 384),
            ("D4", 192),
            ("D5", 1920),
            ("G2", 12),
            ("F4", 1152),
            ("E6", 51840),
            ("E7", 2903040),
        ];
        for (s, n) in cases {
            let t: DynkinType = s.parse().unwrap();
            assert_eq!(RootSystem::new(t).weyl_order(), n, "{s}");
        }
    }

    #[test]
    fn e8_order() {
        let t: DynkinType = "E8".parse().unwrap();
        assert_eq!(RootSystem::new(t).weyl_order(), 696729600);
    }
}
