use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::HitchinError;
use crate::dynkin::{
    associated_pair, express_in_invariants, CartanChart, DynkinType, FoldingRecord, GroupTag,
    RootSystem,
};
use crate::liealg::{
    base_action, builtin_symmetries, slice_action, slice_quotient, BuiltinSlice, SlodowySlice,
};
use crate::linalg::QMatrix;
use crate::poly::upoly::UPoly;
use crate::poly::{q, MPoly, Rational};
use crate::singularity::semiuniversal_deformation;

/// Restricted root functionals on the fixed subspace, grouped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallClass {
    /// Values on the orbit sums of simple roots.
    #[serde(with = "crate::poly::rational::serde_text::vec")]
    pub functional: Vec<Rational>,
    /// Number of roots of the unfolded system restricting to it.
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallCheck {
    /// No root restricts to zero.
    pub nonvanishing: bool,
    /// Roots with the same restriction form exactly one group orbit.
    pub fibers_are_orbits: bool,
    /// Number of distinct restrictions equals the number of roots of the
    /// folded type.
    pub count_matches: bool,
    /// Classes of multiplicity at least two are as many as the long roots.
    pub long_count_matches: bool,
    pub classes: Vec<WallClass>,
}

impl WallCheck {
    pub fn passed(&self) -> bool {
        self.nonvanishing && self.fibers_are_orbits && self.count_matches && self.long_count_matches
    }
}

/// A one-parameter family of base points crossing a single wall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallCrossing {
    pub long: bool,
    /// Invariants `q_j(x)` of the folded type along the path.
    pub section: Vec<MPoly>,
    /// Order of vanishing at `x = 0` of the folded discriminant.
    pub folded_order: usize,
    /// Order of vanishing at `x = 0` of the unfolded discriminant.
    pub unfolded_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantWitness {
    /// Restricted invariants of the unfolded type used as coordinates.
    pub invariants: Vec<MPoly>,
    /// Unfolded discriminant restricted to the fixed subspace, in `q1..qr`.
    pub unfolded: MPoly,
    /// Folded discriminant in `q1..qr`.
    pub folded: MPoly,
    pub long_wall: WallCrossing,
    pub short_wall: WallCrossing,
}

impl DiscriminantWitness {
    /// A simple zero of the folded discriminant on a long wall is a multiple
    /// zero of the unfolded one.
    pub fn passed(&self) -> bool {
        self.long_wall.folded_order == 1
            && self.long_wall.unfolded_order >= 2
            && self.short_wall.folded_order == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub dynkin: DynkinType,
    pub homogeneous: DynkinType,
    pub group: GroupTag,
    pub identity: bool,
    pub folded_family: MPoly,
    pub unfolded_family: MPoly,
    /// Unfolded family with non-invariant parameters set to zero and the
    /// rest renamed.
    pub restricted_family: MPoly,
    pub zeroed: Vec<String>,
    pub renamed: Vec<(String, String)>,
    pub families_agree: bool,
    /// Degrees of the zeroed parameters match the components on which the
    /// slice symmetry acts by `-1`, when a built-in slice exists.
    pub sign_check: Option<bool>,
    pub walls: WallCheck,
    pub witness: Option<DiscriminantWitness>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.families_agree
            && self.sign_check.unwrap_or(true)
            && self.walls.passed()
            && self.witness.as_ref().is_none_or(|w| w.passed())
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn orbit_sums(rec: &FoldingRecord, rs: &RootSystem) -> Vec<Vec<Rational>> {
    rec.orbits
        .iter()
        .map(|o| {
            let mut v = vec![Rational::zero(); rs.ambient_dim];
            for &i in o {
                for (a, b) in v.iter_mut().zip(&rs.simple[i]) {
                    *a += b;
                }
            }
            v
        })
        .collect()
}

/// Functional of each root on the span of the orbit sums.
fn restricted_functionals(rec: &FoldingRecord, rs: &RootSystem) -> Vec<Vec<Rational>> {
    let f = orbit_sums(rec, rs);
    rs.roots
        .iter()
        .map(|b| f.iter().map(|fo| dot(b, fo)).collect())
        .collect()
}

pub fn wall_check(rec: &FoldingRecord) -> WallCheck {
    let rs = RootSystem::new(rec.homogeneous);
    let gamma = restricted_functionals(rec, &rs);
    let nonvanishing = gamma.iter().all(|g| g.iter().any(|x| !x.is_zero()));
    let index: BTreeMap<&Vec<i64>, usize> =
        rs.coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let orbit_of = |i: usize| -> Vec<usize> {
        let mut o: Vec<usize> = rec
            .elements
            .iter()
            .map(|g| {
                let mut c = vec![0; rs.rank()];
                for (v, &x) in rs.coords[i].iter().enumerate() {
                    c[g.perm[v]] = x;
                }
                index[&c]
            })
            .collect();
        o.sort();
        o.dedup();
        o
    };
    let mut fibers: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
    for (i, g) in gamma.iter().enumerate() {
        fibers.entry(g.clone()).or_default().push(i);
    }
    let fibers_are_orbits = fibers.values().all(|f| orbit_of(f[0]) == *f);
    let folded = RootSystem::new(rec.folded);
    let long_roots = if rec.group == GroupTag::Trivial {
        0
    } else {
        folded.roots.iter().filter(|r| folded.is_long(r)).count()
    };
    let classes: Vec<WallClass> = fibers
        .iter()
        .map(|(g, f)| WallClass {
            functional: g.clone(),
            multiplicity: f.len(),
        })
        .collect();
    WallCheck {
        nonvanishing,
        fibers_are_orbits,
        count_matches: classes.len() == folded.len(),
        long_count_matches: classes.iter().filter(|c| c.multiplicity >= 2).count() == long_roots,
        classes,
    }
}

fn linear_form(coeffs: &[Rational], vars: &[String]) -> MPoly {
    coeffs
        .iter()
        .zip(vars)
        .fold(MPoly::zero_in(vars), |acc, (c, v)| {
            &acc + &MPoly::var(v).in_context(vars).unwrap().scale(c)
        })
}

fn jacobian_rank(polys: &[MPoly], vars: &[String], point: &[Rational]) -> usize {
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            vars.iter()
                .map(|v| p.derivative(v).in_context(vars).unwrap().eval(point))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        0
    } else {
        QMatrix::from_rows(rows).rank()
    }
}

fn generic_points(n: usize) -> Vec<Vec<Rational>> {
    let primes = [3, 7, 13, 19, 29, 37, 43, 53];
    vec![
        (0..n)
            .map(|i| q(primes[i % primes.len()] + i as i64))
            .collect(),
        (0..n)
            .map(|i| q(2 * i as i64 + 5) * q(if i % 2 == 0 { 1 } else { -1 }))
            .collect(),
    ]
}

/// Restricted unfolded invariants chosen as generators of the folded
/// invariant ring, in the coordinates `s1..sr` of the fixed subspace.
fn restricted_invariants(rec: &FoldingRecord, s: &[String]) -> Result<Vec<MPoly>, HitchinError> {
    let chart = CartanChart::new(rec.homogeneous)?;
    let rs = RootSystem::new(rec.homogeneous);
    let f = orbit_sums(rec, &rs);
    let tcoords: Vec<Vec<Rational>> = f.iter().map(|fo| chart.from_ambient(fo)).collect();
    let assign: Vec<(String, MPoly)> = chart
        .vars
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let coeffs: Vec<Rational> = tcoords.iter().map(|c| c[i].clone()).collect();
            (t.clone(), linear_form(&coeffs, s))
        })
        .collect();
    let points = generic_points(s.len());
    let mut chosen: Vec<MPoly> = Vec::new();
    for qh in &chart.invariants {
        let p = qh.substitute(&assign).in_context(s)?;
        if p.is_zero() {
            continue;
        }
        let mut trial = chosen.clone();
        trial.push(p.clone());
        if points
            .iter()
            .any(|pt| jacobian_rank(&trial, s, pt) == trial.len())
        {
            chosen = trial;
        }
        if chosen.len() == s.len() {
            break;
        }
    }
    let degrees: Vec<u32> = chosen.iter().map(|p| p.total_degree().unwrap()).collect();
    if degrees != crate::dynkin::invariant_degrees(rec.folded) {
        return Err(HitchinError::Restriction(format!(
            "restricted invariants have degrees {degrees:?}"
        )));
    }
    Ok(chosen)
}

fn one_in(vars: &[String]) -> MPoly {
    MPoly::constant(q(1)).in_context(vars).unwrap()
}

fn order_at_zero(p: &MPoly, var: &str) -> usize {
    let u = UPoly::from_mpoly(p, var).expect("univariate");
    if u.is_zero() {
        return usize::MAX;
    }
    u.root_multiplicity(&q(0)).unwrap_or(0)
}

fn small_vectors(n: usize, range: i64) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-range..=range).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.sort_by_key(|v| v.iter().map(|x| x.abs()).sum::<i64>());
    out.into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .map(|v| v.into_iter().map(q).collect())
        .collect()
}

fn crossing(
    class: &WallClass,
    classes: &[WallClass],
    invariants: &[MPoly],
    s: &[String],
    folded: &MPoly,
    unfolded: &MPoly,
    names: &[String],
) -> Result<WallCrossing, HitchinError> {
    let kernel = QMatrix::from_rows(vec![class.functional.clone()]).nullspace();
    let neg: Vec<Rational> = class.functional.iter().map(|x| -x).collect();
    let on_one_wall = |p: &[Rational]| {
        classes
            .iter()
            .filter(|c| c.functional != class.functional && c.functional != neg)
            .all(|c| !dot(&c.functional, p).is_zero())
    };
    let p0 = small_vectors(kernel.len(), 3)
        .into_iter()
        .map(|c| {
            (0..s.len())
                .map(|i| {
                    kernel
                        .iter()
                        .zip(&c)
                        .fold(Rational::zero(), |acc, (k, ci)| acc + &k[i] * ci)
                })
                .collect::<Vec<Rational>>()
        })
        .find(|p| on_one_wall(p))
        .ok_or_else(|| HitchinError::Restriction("no point on a single wall".into()))?;
    let base: Vec<Rational> = invariants.iter().map(|p| p.eval(&p0)).collect();
    let x = "x";
    for w in small_vectors(invariants.len(), 1) {
        let section: Vec<MPoly> = base
            .iter()
            .zip(&w)
            .map(|(b0, wi)| &MPoly::constant(b0.clone()) + &MPoly::var(x).scale(wi))
            .collect();
        let assign: Vec<(String, MPoly)> =
            names.iter().cloned().zip(section.iter().cloned()).collect();
        let fd = folded.substitute(&assign);
        let folded_order = order_at_zero(&fd, x);
        if folded_order == 1 {
            let unfolded_order = order_at_zero(&unfolded.substitute(&assign), x);
            return Ok(WallCrossing {
                long: class.multiplicity >= 2,
                section,
                folded_order,
                unfolded_order,
            });
        }
    }
    Err(HitchinError::Restriction(
        "no transversal path through the wall".into(),
    ))
}

pub fn discriminant_witness(
    rec: &FoldingRecord,
    walls: &WallCheck,
) -> Result<DiscriminantWitness, HitchinError> {
    let r = rec.folded.rank();
    let s: Vec<String> = (1..=r).map(|i| format!("s{i}")).collect();
    let names: Vec<String> = (1..=r).map(|i| format!("q{i}")).collect();
    let invariants = restricted_invariants(rec, &s)?;
    let rs = RootSystem::new(rec.homogeneous);
    let unfolded_s = restricted_functionals(rec, &rs)
        .iter()
        .fold(one_in(&s), |acc, g| &acc * &linear_form(g, &s));
    let folded_s = walls
        .classes
        .iter()
        .fold(one_in(&s), |acc, c| &acc * &linear_form(&c.functional, &s));
    let unfolded = express_in_invariants(&unfolded_s, &invariants, &names)?;
    let folded = express_in_invariants(&folded_s, &invariants, &names)?;
    let pick = |long: bool| {
        walls
            .classes
            .iter()
            .find(|c| (c.multiplicity >= 2) == long)
            .ok_or_else(|| HitchinError::Restriction("missing wall class".into()))
    };
    let long_wall = crossing(
        pick(true)?,
        &walls.classes,
        &invariants,
        &s,
        &folded,
        &unfolded,
        &names,
    )?;
    let short_wall = crossing(
        pick(false)?,
        &walls.classes,
        &invariants,
        &s,
        &folded,
        &unfolded,
        &names,
    )?;
    Ok(DiscriminantWitness {
        invariants,
        unfolded,
        folded,
        long_wall,
        short_wall,
    })
}

/// Degrees on which the built-in slice symmetry of `h` acts by `-1`.
fn odd_degrees(h: DynkinType) -> Result<Option<Vec<u32>>, HitchinError> {
    let which = match h.to_string().as_str() {
        "A3" => BuiltinSlice::Sl4,
        _ => return Ok(None),
    };
    let s = SlodowySlice::builtin(which);
    let quot = slice_quotient(&s);
    let act = slice_action(&s, &builtin_symmetries(which))?;
    let signs = base_action(&quot, &act)?;
    let mut out: Vec<u32> = signs[0]
        .iter()
        .zip(&quot.degrees)
        .filter(|(si, _)| si.sign < 0)
        .map(|(_, &d)| d)
        .collect();
    out.sort();
    Ok(Some(out))
}

pub fn restriction_check(d: DynkinType) -> Result<RestrictionReport, HitchinError> {
    let rec = associated_pair(d)?;
    rec.check().map_err(HitchinError::Restriction)?;
    let fd = semiuniversal_deformation(d)?;
    let identity = rec.group == GroupTag::Trivial;
    let fh = if identity {
        fd.clone()
    } else {
        semiuniversal_deformation(rec.homogeneous)?
    };
    if fd.model.equation != fh.model.equation {
        return Err(HitchinError::Restriction(format!(
            "{d} and {} use different normal forms",
            rec.homogeneous
        )));
    }
    let mut assign: Vec<(String, MPoly)> = Vec::new();
    let mut zeroed = Vec::new();
    let mut renamed = Vec::new();
    let mut zeroed_degrees = Vec::new();
    let hdeg = crate::dynkin::invariant_degrees(rec.homogeneous);
    for ((bh, g), &dh) in fh.params.iter().zip(&fh.directions).zip(&hdeg) {
        match fd.directions.iter().position(|x| x == g) {
            Some(k) => {
                renamed.push((bh.clone(), fd.params[k].clone()));
                assign.push((bh.clone(), MPoly::var(&fd.params[k])));
            }
            None => {
                zeroed.push(bh.clone());
                zeroed_degrees.push(dh);
                assign.push((bh.clone(), MPoly::zero()));
            }
        }
    }
    let restricted = fh.equation.substitute(&assign);
    let families_agree = restricted == fd.equation && renamed.len() == fd.params.len();
    zeroed_degrees.sort();
    let sign_check = odd_degrees(rec.homogeneous)?.map(|odd| odd == zeroed_degrees);
    let walls = wall_check(&rec);
    let witness = if identity || CartanChart::new(rec.homogeneous).is_err() {
        None
    } else {
        Some(discriminant_witness(&rec, &walls)?)
    };
    Ok(RestrictionReport {
        dynkin: d,
        homogeneous: rec.homogeneous,
        group: rec.group,
        identity,
        folded_family: fd.equation,
        unfolded_family: fh.equation,
        restricted_family: restricted,
        zeroed,
        renamed,
        families_agree,
        sign_check,
        walls,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn b2_in_a3() {
        let r = restriction_check(t("B2")).unwrap();
        assert_eq!(r.homogeneous, t("A3"));
        assert_eq!(
            r.unfolded_family,
            MPoly::parse("x^4 - y*z + b1*x^2 + b2*x + b3").unwrap()
        );
        assert_eq!(r.zeroed, vec!["b2"]);
        assert_eq!(r.sign_check, Some(true));
        assert!(r.families_agree);
        assert!(r.walls.passed());
        let w = r.witness.as_ref().unwrap();
        assert_eq!(w.long_wall.unfolded_order, 2);
        assert_eq!(w.short_wall.unfolded_order, 1);
        assert!(r.passed());
    }

    #[test]
    fn b3_in_a5() {
        let r = restriction_check(t("B3")).unwrap();
        assert_eq!(r.zeroed.len(), 2);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn simply_laced_is_identity() {
        let r = restriction_check(t("D4")).unwrap();
        assert!(r.identity);
        assert!(r.zeroed.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn other_foldings() {
        for s in ["C3", "G2", "F4"] {
            let rec = associated_pair(t(s)).unwrap();
            let w = wall_check(&rec);
            assert!(w.passed(), "{s}");
            if s != "F4" {
                assert!(discriminant_witness(&rec, &w).unwrap().passed(), "{s}");
            }
        }
        assert!(restriction_check(t("C3")).is_err());
    }

    #[test]
    fn long_classes_have_orbit_size() {
        let rec = associated_pair(t("B2")).unwrap();
        let w = wall_check(&rec);
        let mut m: Vec<usize> = w.classes.iter().map(|c| c.multiplicity).collect();
        m.sort();
        assert_eq!(m, vec![1, 1, 1, 1, 2, 2, 2, 2]);
    }
}
