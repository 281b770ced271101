use std::fmt;

use serde::{Deserialize, Serialize};

use super::roots::{cartan_of, dot, simple_roots, RootSystem};
use super::types::{DynkinType, Family};
use super::DynkinError;
use crate::poly::Rational;

/// Permutation of the vertices of a Dynkin diagram: vertex `i` goes to
/// `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DiagramAutomorphism {
    pub perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> Self {
        DiagramAutomorphism {
            perm: (0..n).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        DiagramAutomorphism {
            perm: other.perm.iter().map(|&i| self.perm[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        DiagramAutomorphism { perm: inv }
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = g.compose(self);
            k += 1;
        }
        k
    }

    /// Preserves every Cartan entry.
    pub fn preserves(&self, cartan: &[Vec<i64>]) -> bool {
        let n = cartan.len();
        self.perm.len() == n
            && (0..n).all(|i| (0..n).all(|j| cartan[self.perm[i]][self.perm[j]] == cartan[i][j]))
    }

    /// No vertex is sent to one of its direct neighbours.
    pub fn satisfies_dynkin_condition(&self, cartan: &[Vec<i64>]) -> bool {
        self.perm
            .iter()
            .enumerate()
            .all(|(v, &w)| v == w || cartan[v][w] == 0)
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .perm
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{}->{}", i + 1, p + 1))
            .collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All permutations preserving a Cartan matrix.
pub fn graph_automorphisms(cartan: &[Vec<i64>]) -> Vec<DiagramAutomorphism> {
    let mut out = Vec::new();
    let n = cartan.len();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    isomorphisms(
        cartan,
        cartan,
        0,
        &mut perm,
        &mut used,
        &mut out,
        usize::MAX,
    );
    out.into_iter()
        .map(|perm| DiagramAutomorphism { perm })
        .collect()
}

/// Backtracking search for `p` with `a[i][j] == b[p[i]][p[j]]`.
fn isomorphisms(
    a: &[Vec<i64>],
    b: &[Vec<i64>],
    i: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let n = a.len();
    if i == n {
        out.push(perm.clone());
        return;
    }
    for cand in 0..n {
        if used[cand] {
            continue;
        }
        let ok = (0..i).all(|k| a[i][k] == b[cand][perm[k]] && a[k][i] == b[perm[k]][cand])
            && a[i][i] == b[cand][cand];
        if !ok {
            continue;
        }
        perm[i] = cand;
        used[cand] = true;
        isomorphisms(a, b, i + 1, perm, used, out, limit);
        used[cand] = false;
        perm[i] = usize::MAX;
    }
}

/// The group of diagram automorphisms obeying the Dynkin condition.
pub fn diagram_automorphisms(t: DynkinType) -> Vec<DiagramAutomorphism> {
    let cartan = cartan_of(&simple_roots(t));
    let mut all: Vec<DiagramAutomorphism> = graph_automorphisms(&cartan)
        .into_iter()
        .filter(|g| g.satisfies_dynkin_condition(&cartan))
        .collect();
    all.sort();
    all
}

/// Identifies a connected Cartan matrix. Returns the type and a map from the
/// given indices to the standard vertex labels.
pub fn identify_cartan(cartan: &[Vec<i64>]) -> Option<(DynkinType, Vec<usize>)> {
    for t in DynkinType::all_of_rank(cartan.len()) {
        let std = cartan_of(&simple_roots(t));
        let n = cartan.len();
        let mut out = Vec::new();
        isomorphisms(
            cartan,
            &std,
            0,
            &mut vec![usize::MAX; n],
            &mut vec![false; n],
            &mut out,
            1,
        );
        if let Some(p) = out.pop() {
            return Some((t, p));
        }
    }
    None
}

/// Abstract isomorphism type of a folding group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    Trivial,
    Z2,
    Z3,
    S3,
}

impl GroupTag {
    pub fn order(self) -> usize {
        match self {
            GroupTag::Trivial => 1,
            GroupTag::Z2 => 2,
            GroupTag::Z3 => 3,
            GroupTag::S3 => 6,
        }
    }

    fn from_elements(elems: &[DiagramAutomorphism]) -> Option<Self> {
        match elems.len() {
            1 => Some(GroupTag::Trivial),
            2 => Some(GroupTag::Z2),
            3 => Some(GroupTag::Z3),
            6 => Some(GroupTag::S3),
            _ => None,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupTag::Trivial => "1",
            GroupTag::Z2 => "Z/2",
            GroupTag::Z3 => "Z/3",
            GroupTag::S3 => "S3",
        })
    }
}

impl std::str::FromStr for GroupTag {
    type Err = DynkinError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s
            .trim()
            .to_ascii_lowercase()
            .replace(['/', '_', ' '], "")
            .as_str()
        {
            "1" | "trivial" => Ok(GroupTag::Trivial),
            "z2" | "z2z" => Ok(GroupTag::Z2),
            "z3" | "z3z" => Ok(GroupTag::Z3),
            "s3" => Ok(GroupTag::S3),
            _ => Err(DynkinError::InvalidGroup(s.to_string())),
        }
    }
}

/// A folded diagram together with the symmetry group that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldingRecord {
    pub folded: DynkinType,
    pub homogeneous: DynkinType,
    pub group: GroupTag,
    pub generators: Vec<DiagramAutomorphism>,
    pub elements: Vec<DiagramAutomorphism>,
    /// `orbit_map[v]` is the folded vertex (standard label) of vertex `v`.
    pub orbit_map: Vec<usize>,
    /// Orbits indexed by folded vertex.
    pub orbits: Vec<Vec<usize>>,
}

impl FoldingRecord {
    /// Checks the structural invariants: group order, surjective orbit map
    /// with fibres equal to group orbits, and long simple roots of the folded
    /// type exactly at orbits of size at least two (for nontrivial groups).
    pub fn check(&self) -> Result<(), String> {
        if self.elements.len() != self.group.order() {
            return Err("group order does not match its tag".into());
        }
        if self.orbits.len() != self.folded.rank() {
            return Err("rank differs from the number of orbits".into());
        }
        for (v, &o) in self.orbit_map.iter().enumerate() {
            if !self.orbits[o].contains(&v) {
                return Err(format!("vertex {v} is not in its orbit"));
            }
            let expected: Vec<usize> = {
                let mut s: Vec<usize> = self.elements.iter().map(|g| g.perm[v]).collect();
                s.sort();
                s.dedup();
                s
            };
            if expected != self.orbits[o] {
                return Err(format!("fibre over {o} is not a group orbit"));
            }
        }
        if self.group != GroupTag::Trivial {
            let simple = simple_roots(self.folded);
            let long = simple.iter().map(|a| dot(a, a)).max().unwrap();
            for (o, orbit) in self.orbits.iter().enumerate() {
                let is_long = dot(&simple[o], &simple[o]) == long;
                if is_long != (orbit.len() >= 2) {
                    return Err(format!(
                        "length of simple root {o} does not match orbit size"
                    ));
                }
            }
        }
        let hr = RootSystem::expected_count(self.homogeneous);
        let fr = RootSystem::expected_count(self.folded);
        if fr > hr {
            return Err("folded system has more roots".into());
        }
        Ok(())
    }
}

fn closure(gens: &[DiagramAutomorphism], n: usize) -> Vec<DiagramAutomorphism> {
    let mut elems = vec![DiagramAutomorphism::identity(n)];
    let mut k = 0;
    while k < elems.len() {
        for g in gens {
            let h = g.compose(&elems[k]);
            if !elems.contains(&h) {
                elems.push(h);
            }
        }
        k += 1;
    }
    elems.sort();
    elems
}

fn minimal_generators(elems: &[DiagramAutomorphism], n: usize) -> Vec<DiagramAutomorphism> {
    let mut gens: Vec<DiagramAutomorphism> = Vec::new();
    let mut sorted: Vec<&DiagramAutomorphism> = elems.iter().filter(|g| !g.is_identity()).collect();
    // higher-order elements first gives Z/3 a single generator
    sorted.sort_by_key(|g| std::cmp::Reverse(g.order()));
    let mut span = closure(&gens, n);
    for g in sorted {
        if !span.contains(g) {
            gens.push(g.clone());
            span = closure(&gens, n);
        }
        if span.len() == elems.len() {
            break;
        }
    }
    gens
}

/// Folds `h` along a subgroup given by its full element list.
pub fn fold(h: DynkinType, group: &[DiagramAutomorphism]) -> Result<FoldingRecord, DynkinError> {
    let n = h.rank();
    let cartan = cartan_of(&simple_roots(h));
    let mut elems: Vec<DiagramAutomorphism> = group.to_vec();
    if !elems.iter().any(|g| g.is_identity()) {
        elems.push(DiagramAutomorphism::identity(n));
    }
    elems.sort();
    elems.dedup();
    for g in &elems {
        if g.perm.len() != n || !g.preserves(&cartan) {
            return Err(DynkinError::NotAnAutomorphism(g.to_string()));
        }
        if !g.satisfies_dynkin_condition(&cartan) {
            return Err(DynkinError::DynkinCondition(g.to_string()));
        }
    }
    for a in &elems {
        for b in &elems {
            if !elems.contains(&a.compose(b)) {
                return Err(DynkinError::NotClosed);
            }
        }
    }
    if elems.len() > 1 && !h.is_ade() {
        return Err(DynkinError::NotSimplyLaced(h));
    }
    let tag = GroupTag::from_elements(&elems).ok_or(DynkinError::NotClosed)?;

    // orbits in order of their smallest vertex
    let mut raw_orbits: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if raw_orbits.iter().any(|o| o.contains(&v)) {
            continue;
        }
        let mut o: Vec<usize> = elems.iter().map(|g| g.perm[v]).collect();
        o.sort();
        o.dedup();
        raw_orbits.push(o);
    }
    let simple = simple_roots(h);
    let sums: Vec<Vec<Rational>> = raw_orbits
        .iter()
        .map(|o| {
            let mut s = vec![Rational::from_integer(0.into()); simple[0].len()];
            for &v in o {
                for (x, y) in s.iter_mut().zip(&simple[v]) {
                    *x += y;
                }
            }
            s
        })
        .collect();
    let folded_cartan = cartan_of(&sums);
    let (folded, to_std) =
        identify_cartan(&folded_cartan).ok_or(DynkinError::UnrecognizedCartan(folded_cartan))?;
    let mut orbits = vec![Vec::new(); raw_orbits.len()];
    let mut orbit_map = vec![0; n];
    for (k, o) in raw_orbits.into_iter().enumerate() {
        for &v in &o {
            orbit_map[v] = to_std[k];
        }
        orbits[to_std[k]] = o;
    }
    let generators = minimal_generators(&elems, n);
    let record = FoldingRecord {
        folded,
        homogeneous: h,
        group: tag,
        generators,
        elements: elems,
        orbit_map,
        orbits,
    };
    record.check().map_err(DynkinError::InvariantViolated)?;
    Ok(record)
}

/// Folds along the subgroup generated by `gens`.
pub fn fold_generated(
    h: DynkinType,
    gens: &[DiagramAutomorphism],
) -> Result<FoldingRecord, DynkinError> {
    fold(h, &closure(gens, h.rank()))
}

/// The subgroup of the requested isomorphism type, when the automorphism
/// group has one. For `D4` and `Z/2` the swap of the last two vertices is
/// chosen.
pub fn canonical_subgroup(
    h: DynkinType,
    tag: GroupTag,
) -> Result<Vec<DiagramAutomorphism>, DynkinError> {
    let all = diagram_automorphisms(h);
    let n = h.rank();
    let found: Option<Vec<DiagramAutomorphism>> = match tag {
        GroupTag::Trivial => Some(vec![DiagramAutomorphism::identity(n)]),
        GroupTag::S3 if all.len() == 6 => Some(all.clone()),
        GroupTag::Z2 | GroupTag::Z3 => {
            let want = if tag == GroupTag::Z2 { 2 } else { 3 };
            let mut cands: Vec<&DiagramAutomorphism> =
                all.iter().filter(|g| g.order() == want).collect();
            // prefer the element fixing the most low-numbered vertices
            cands.sort_by_key(|g| g.perm.iter().enumerate().position(|(i, &p)| i != p));
            cands.last().map(|g| closure(&[(*g).clone()], n))
        }
        _ => None,
    };
    found.ok_or(DynkinError::NoSuchSubgroup {
        dynkin: h,
        group: tag,
    })
}

/// The pair `(h, group)` whose folding gives `d`: the identity for simply
/// laced types, `A_{2k+1}` for `B_{k+1}`, `D_{k+1}` for `C_k`, `E6` for `F4`
/// and `D4` with `S3` for `G2`.
pub fn associated_pair(d: DynkinType) -> Result<FoldingRecord, DynkinError> {
    let r = d.rank();
    let (h, tag) = match d.family() {
        Family::A | Family::D | Family::E => (d, GroupTag::Trivial),
        Family::B => (DynkinType::new(Family::A, 2 * r - 1)?, GroupTag::Z2),
        Family::C => (DynkinType::new(Family::D, r + 1)?, GroupTag::Z2),
        Family::F => (DynkinType::new(Family::E, 6)?, GroupTag::Z2),
        Family::G => (DynkinType::new(Family::D, 4)?, GroupTag::S3),
    };
    let rec = fold(h, &canonical_subgroup(h, tag)?)?;
    if rec.folded != d {
        return Err(DynkinError::InvariantViolated(format!(
            "folding {h} by {tag} gave {} instead of {d}",
            rec.folded
        )));
    }
    Ok(rec)
}

/// Order of the associated symmetry group: 1 for ADE, 2 for B, C, F and 6
/// for G.
pub fn associated_group_order(d: DynkinType) -> usize {
    match d.family() {
        Family::A | Family::D | Family::E => 1,
        Family::B | Family::C | Family::F => 2,
        Family::G => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(diagram_automorphisms(t("A4")).len(), 1);
        let a3 = diagram_automorphisms(t("A3"));
        assert_eq!(a3.len(), 2);
        assert_eq!(a3[1].perm, vec![2, 1, 0]);
        assert_eq!(diagram_automorphisms(t("D4")).len(), 6);
        assert_eq!(diagram_automorphisms(t("D5")).len(), 2);
        assert_eq!(diagram_automorphisms(t("E6")).len(), 2);
        assert_eq!(diagram_automorphisms(t("E7")).len(), 1);
        assert_eq!(diagram_automorphisms(t("B3")).len(), 1);
        // A_{2n}: the flip exists as a graph automorphism but is excluded
        let a4 = cartan_of(&simple_roots(t("A4")));
        assert_eq!(graph_automorphisms(&a4).len(), 2);
    }

    #[test]
    fn table_rows() {
        let a3 = fold(t("A3"), &diagram_automorphisms(t("A3"))).unwrap();
        assert_eq!(a3.folded, t("B2"));
        assert_eq!(a3.orbits, vec![vec![0, 2], vec![1]]);
        let d4 = fold(t("D4"), &diagram_automorphisms(t("D4"))).unwrap();
        assert_eq!(d4.folded, t("G2"));
        assert_eq!(d4.group, GroupTag::S3);
        let e6 = fold(t("E6"), &[DiagramAutomorphism::identity(6)]).unwrap();
        assert_eq!(e6.folded, t("E6"));
        assert_eq!(
            fold(t("E6"), &diagram_automorphisms(t("E6")))
                .unwrap()
                .folded,
            t("F4")
        );
        assert_eq!(
            fold(t("A5"), &diagram_automorphisms(t("A5")))
                .unwrap()
                .folded,
            t("B3")
        );
        assert_eq!(
            fold(t("D5"), &diagram_automorphisms(t("D5")))
                .unwrap()
                .folded,
            t("C4")
        );
    }

    #[test]
    fn associated_pairs() {
        let b3 = associated_pair(t("B3")).unwrap();
        assert_eq!((b3.homogeneous, b3.group), (t("A5"), GroupTag::Z2));
        let f4 = associated_pair(t("F4")).unwrap();
        assert_eq!((f4.homogeneous, f4.group), (t("E6"), GroupTag::Z2));
        let a7 = associated_pair(t("A7")).unwrap();
        assert_eq!((a7.homogeneous, a7.group), (t("A7"), GroupTag::Trivial));
        let g2 = associated_pair(t("G2")).unwrap();
        assert_eq!((g2.homogeneous, g2.group), (t("D4"), GroupTag::S3));
        let c3 = associated_pair(t("C3")).unwrap();
        assert_eq!(c3.homogeneous, t("D4"));
    }

    #[test]
    fn fold_errors() {
        let flip = DiagramAutomorphism {
            perm: vec![3, 2, 1, 0],
        };
        assert!(matches!(
            fold(t("A4"), &[flip]),
            Err(DynkinError::DynkinCondition(_))
        ));
        let bad = DiagramAutomorphism {
            perm: vec![1, 0, 2],
        };
        assert!(matches!(
            fold(t("A3"), &[bad]),
            Err(DynkinError::NotAnAutomorphism(_))
        ));
        let d4 = diagram_automorphisms(t("D4"));
        let three_cycle = d4.iter().find(|g| g.order() == 3).unwrap().clone();
        let swap = d4.iter().find(|g| g.order() == 2).unwrap().clone();
        assert!(matches!(
            fold(t("D4"), &[three_cycle.clone(), swap]),
            Err(DynkinError::NotClosed)
        ));
        assert_eq!(
            fold_generated(t("D4"), &[three_cycle]).unwrap().folded,
            t("G2")
        );
    }
}
