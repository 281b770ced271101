use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::HitchinError;
use crate::liealg::reduce_by_linear_pivots;
use crate::linalg::PMatrix;
use crate::poly::upoly::UPoly;
use crate::poly::{default_budget, q, Ideal, MPoly, MonomialOrder, Rational};
use crate::singularity::{classify_ade, GermType};

/// An affine variety over a chart line, fibred by the chart coordinate.
pub trait LocalModel {
    /// `[chart_var, fiber_vars...]`.
    fn vars(&self) -> Vec<String>;
    fn equations(&self) -> Vec<MPoly>;
    fn chart_var(&self) -> &str;
    fn fiber_vars(&self) -> Vec<String>;
    /// Whether fibres are surfaces whose singular points can be classified.
    fn has_surface_fibers(&self) -> bool;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SingularLocus {
    Empty,
    Points {
        #[serde(with = "crate::poly::rational::serde_text::vecvec")]
        points: Vec<Vec<Rational>>,
        /// False when some singular points have irrational coordinates.
        complete: bool,
    },
    Positive {
        dimension: i64,
    },
}

impl SingularLocus {
    pub fn is_empty(&self) -> bool {
        matches!(self, SingularLocus::Empty)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    #[serde(with = "crate::poly::rational::serde_text::vec")]
    pub point: Vec<Rational>,
    pub germ: GermType,
}

/// Singular points of one fibre, viewed as a surface in `vars`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    #[serde(with = "crate::poly::rational::serde_text")]
    pub x: Rational,
    pub vars: Vec<String>,
    pub surface: MPoly,
    pub locus: SingularLocus,
    pub points: Vec<SingularPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessReport {
    pub vars: Vec<String>,
    pub total_space: SingularLocus,
    pub smooth: bool,
    /// Every fibre is singular; only the fibre over `0` is analysed.
    pub every_fiber_singular: bool,
    /// False when some singular fibres lie over irrational points.
    pub fibers_complete: bool,
    pub fibers: Vec<FiberReport>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Maximal minors of the Jacobian of `eqs` with respect to `diff`.
pub fn jacobian_minors(eqs: &[MPoly], diff: &[String]) -> Vec<MPoly> {
    let r = eqs.len();
    let jac: Vec<Vec<MPoly>> = eqs
        .iter()
        .map(|e| diff.iter().map(|v| e.derivative(v)).collect())
        .collect();
    subsets(diff.len(), r)
        .into_iter()
        .map(|cols| PMatrix::from_fn(r, r, |i, j| jac[i][cols[j]].clone()).det())
        .filter(|m| !m.is_zero())
        .collect()
}

fn singular_ideal(eqs: &[MPoly], vars: &[String], diff: &[String]) -> Result<Ideal, HitchinError> {
    let mut gens: Vec<MPoly> = eqs.to_vec();
    gens.extend(jacobian_minors(eqs, diff));
    let gens = gens
        .iter()
        .map(|g| g.in_context(vars))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::with_context(vars, gens)?)
}

pub fn singular_locus_dimension(m: &impl LocalModel) -> Result<i64, HitchinError> {
    let vars = m.vars();
    let i = singular_ideal(&m.equations(), &vars, &vars)?;
    Ok(i.groebner(&MonomialOrder::grevlex())?.dimension())
}

/// Rational points of a zero-dimensional ideal, with a flag telling whether
/// they are all of its points.
pub fn rational_points(
    ideal: &Ideal,
    budget: usize,
) -> Result<(Vec<Vec<Rational>>, bool), HitchinError> {
    let vars = ideal.vars().to_vec();
    let mut coords: Vec<Vec<Rational>> = Vec::new();
    let mut complete = true;
    for v in &vars {
        let drop: Vec<&String> = vars.iter().filter(|w| *w != v).collect();
        let e = if drop.is_empty() {
            ideal
                .groebner_with_budget(&MonomialOrder::grevlex(), budget)?
                .basis()
                .to_vec()
        } else {
            ideal
                .eliminate_with_budget(&drop, budget)?
                .generators()
                .to_vec()
        };
        let g = e
            .iter()
            .find(|g| !g.is_zero())
            .ok_or_else(|| HitchinError::Unsupported("ideal is not zero-dimensional".into()))?;
        let u = UPoly::from_mpoly(g, v).expect("univariate eliminant");
        let roots = u.rational_roots();
        if super::discriminant::radical(&u).degree().unwrap_or(0) != roots.len() {
            complete = false;
        }
        coords.push(roots);
    }
    let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
    for c in &coords {
        points = points
            .into_iter()
            .flat_map(|p| {
                c.iter().map(move |x| {
                    let mut p = p.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect();
    }
    points.retain(|p| ideal.generators().iter().all(|g| g.eval(p).is_zero()));
    Ok((points, complete))
}

fn analyze(ideal: &Ideal, budget: usize) -> Result<SingularLocus, HitchinError> {
    let dim = ideal
        .groebner_with_budget(&MonomialOrder::grevlex(), budget)?
        .dimension();
    Ok(match dim {
        d if d < 0 => SingularLocus::Empty,
        0 => {
            let (points, complete) = rational_points(ideal, budget)?;
            SingularLocus::Points { points, complete }
        }
        d => SingularLocus::Positive { dimension: d },
    })
}

/// `f(v + p)` so that `p` moves to the origin.
pub fn translate(f: &MPoly, vars: &[String], p: &[Rational]) -> MPoly {
    let a: Vec<(String, MPoly)> = vars
        .iter()
        .zip(p)
        .map(|(v, c)| (v.clone(), &MPoly::var(v) + &MPoly::constant(c.clone())))
        .collect();
    f.substitute(&a).in_context(vars).expect("same variables")
}

/// Singular points of the fibre over `x0`, classified.
pub fn fiber_report(
    m: &impl LocalModel,
    x0: &Rational,
    budget: usize,
) -> Result<FiberReport, HitchinError> {
    let fiber_vars = m.fiber_vars();
    let eqs: Vec<MPoly> = m
        .equations()
        .iter()
        .map(|e| e.eval_partial(&[(m.chart_var(), x0.clone())]))
        .collect();
    let (mut rest, subs) = reduce_by_linear_pivots(eqs, &fiber_vars);
    if rest.len() != 1 {
        return Err(HitchinError::Unsupported(
            "fibre is not a hypersurface after elimination".into(),
        ));
    }
    let vars: Vec<String> = fiber_vars
        .iter()
        .filter(|v| !subs.iter().any(|(s, _)| s == *v))
        .cloned()
        .collect();
    let surface = rest.pop().unwrap().in_context(&vars)?;
    let mut gens = vec![surface.clone()];
    gens.extend(vars.iter().map(|v| surface.derivative(v)));
    let locus = analyze(&Ideal::with_context(&vars, gens)?, budget)?;
    let mut points = Vec::new();
    if let SingularLocus::Points { points: ps, .. } = &locus {
        for p in ps {
            let germ = classify_ade(&translate(&surface, &vars, p))?;
            points.push(SingularPoint {
                point: p.clone(),
                germ,
            });
        }
    }
    Ok(FiberReport {
        x: x0.clone(),
        vars,
        surface,
        locus,
        points,
    })
}

pub fn smoothness_report(m: &impl LocalModel) -> Result<SmoothnessReport, HitchinError> {
    smoothness_report_with_budget(m, default_budget())
}

pub fn smoothness_report_with_budget(
    m: &impl LocalModel,
    budget: usize,
) -> Result<SmoothnessReport, HitchinError> {
    let vars = m.vars();
    let eqs = m.equations();
    let total_space = analyze(&singular_ideal(&eqs, &vars, &vars)?, budget)?;
    let mut report = SmoothnessReport {
        vars: vars.clone(),
        smooth: total_space.is_empty(),
        total_space,
        every_fiber_singular: false,
        fibers_complete: true,
        fibers: Vec::new(),
    };
    if !m.has_surface_fibers() {
        return Ok(report);
    }
    let fiber_vars = m.fiber_vars();
    let eliminant =
        singular_ideal(&eqs, &vars, &fiber_vars)?.eliminate_with_budget(&fiber_vars, budget)?;
    let xs = match eliminant.generators().iter().find(|g| !g.is_zero()) {
        None => {
            report.every_fiber_singular = true;
            vec![q(0)]
        }
        Some(g) => {
            let u = UPoly::from_mpoly(g, m.chart_var()).expect("univariate eliminant");
            let roots = u.rational_roots();
            report.fibers_complete =
                super::discriminant::radical(&u).degree().unwrap_or(0) == roots.len();
            roots
        }
    };
    for x0 in &xs {
        report.fibers.push(fiber_report(m, x0, budget)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;
    use crate::hitchin::{local_cameral, local_threefold, LocalSection, ModelTag};

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    fn a1() -> GermType {
        GermType::Simple(t("A1"))
    }

    #[test]
    fn a1_squarefree_is_smooth() {
        let b = LocalSection::parse(t("A1"), "x", &["x*(x - 1)"]).unwrap();
        let y = local_threefold(t("A1"), &b, ModelTag::Slice).unwrap();
        let r = smoothness_report(&y).unwrap();
        assert!(r.smooth);
        assert!(r.fibers_complete);
        let xs: Vec<Rational> = r.fibers.iter().map(|f| f.x.clone()).collect();
        assert_eq!(xs, vec![q(0), q(1)]);
        for f in &r.fibers {
            assert_eq!(f.points.len(), 1);
            assert_eq!(f.points[0].germ, a1());
        }
        assert!(
            smoothness_report(&local_cameral(t("A1"), &b).unwrap())
                .unwrap()
                .smooth
        );
    }

    #[test]
    fn a1_double_zero_is_singular() {
        let b = LocalSection::parse(t("A1"), "x", &["x^2"]).unwrap();
        let y = local_threefold(t("A1"), &b, ModelTag::Slice).unwrap();
        let r = smoothness_report(&y).unwrap();
        assert_eq!(
            r.total_space,
            SingularLocus::Points {
                points: vec![vec![q(0); 4]],
                complete: true
            }
        );
        assert!(
            !smoothness_report(&local_cameral(t("A1"), &b).unwrap())
                .unwrap()
                .smooth
        );
    }

    #[test]
    fn b2_constant_family() {
        let b = LocalSection::parse(t("B2"), "x", &["0", "0"]).unwrap();
        let y = local_threefold(t("B2"), &b, ModelTag::Hypersurface).unwrap();
        let r = smoothness_report(&y).unwrap();
        assert_eq!(r.total_space, SingularLocus::Positive { dimension: 1 });
        assert!(r.every_fiber_singular);
        assert_eq!(r.fibers[0].points[0].germ, GermType::Simple(t("A3")));
    }

    #[test]
    fn b2_generic_line() {
        // b = (x, 1): the discriminant has simple zeros at x = 2 and x = -2
        let b = LocalSection::parse(t("B2"), "x", &["x", "1"]).unwrap();
        let y = local_threefold(t("B2"), &b, ModelTag::Hypersurface).unwrap();
        let r = smoothness_report(&y).unwrap();
        assert!(r.smooth);
        let xs: Vec<Rational> = r.fibers.iter().map(|f| f.x.clone()).collect();
        assert_eq!(xs, vec![q(-2), q(2)]);
        // (x^2 - 1)^2 - yz has two rational A1 points, (x^2 + 1)^2 - yz two
        // conjugate ones
        assert_eq!(r.fibers[0].points.len(), 2);
        assert!(r.fibers[0].points.iter().all(|p| p.germ == a1()));
        assert_eq!(
            r.fibers[1].locus,
            SingularLocus::Points {
                points: vec![],
                complete: false
            }
        );
    }

    #[test]
    fn a3_slice_fibres() {
        let b = LocalSection::parse(t("A3"), "x", &["x", "0", "1"]).unwrap();
        let y = local_threefold(t("A3"), &b, ModelTag::Slice).unwrap();
        let r = smoothness_report(&y).unwrap();
        assert!(r.smooth);
        assert!(r
            .fibers
            .iter()
            .all(|f| f.points.iter().all(|p| p.germ == a1())));
    }
}
