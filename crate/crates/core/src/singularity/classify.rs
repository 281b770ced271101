use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::milnor::{local_milnor_number, Milnor};
use super::SingularityError;
use crate::dynkin::{DynkinType, Family};
use crate::linalg::QMatrix;
use crate::poly::{MPoly, Rational};

/// Outcome of classifying a hypersurface germ at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GermType {
    /// The origin is not on the hypersurface.
    NotOnHypersurface,
    Smooth,
    Simple(DynkinType),
    Unrecognized,
}

impl fmt::Display for GermType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GermType::NotOnHypersurface => write!(f, "not on the hypersurface"),
            GermType::Smooth => write!(f, "smooth"),
            GermType::Simple(t) => write!(f, "{t}"),
            GermType::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

impl GermType {
    pub fn dynkin(self) -> Option<DynkinType> {
        match self {
            GermType::Simple(t) => Some(t),
            _ => None,
        }
    }
}

/// Jet order used when testing for stabilization of the local Milnor number.
pub const MAX_JET_ORDER: u32 = 16;

/// Hessian matrix at the origin.
pub fn hessian_at_origin(f: &MPoly) -> QMatrix {
    let vars = f.vars();
    let zero = vec![Rational::zero(); vars.len()];
    QMatrix::from_fn(vars.len(), vars.len(), |i, j| {
        f.derivative(&vars[i]).derivative(&vars[j]).eval(&zero)
    })
}

fn gradient_vanishes(f: &MPoly) -> bool {
    let zero = vec![Rational::zero(); f.vars().len()];
    f.partials().iter().all(|p| p.eval(&zero).is_zero())
}

/// Cubic part of `f` restricted to the kernel of its Hessian, in the
/// variables `s, t`.
fn kernel_cubic(f: &MPoly, kernel: &[Vec<Rational>]) -> MPoly {
    let st = ["s", "t"];
    let cubic = f.homogeneous_part(3);
    let assignment: Vec<(String, MPoly)> = f
        .vars()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let lin = kernel.iter().zip(st).fold(MPoly::zero(), |acc, (k, name)| {
                &acc + &MPoly::var(name).scale(&k[i])
            });
            (v.clone(), lin)
        })
        .collect();
    cubic.substitute(&assignment)
}

/// Whether a binary cubic is the cube of a linear form: its Hessian
/// covariant vanishes.
fn is_cube(c: &MPoly) -> bool {
    let css = c.derivative("s").derivative("s");
    let ctt = c.derivative("t").derivative("t");
    let cst = c.derivative("s").derivative("t");
    (&(&css * &ctt) - &(&cst * &cst)).is_zero()
}

/// ADE type of the germ of `{f = 0}` at the origin, from the local Milnor
/// number, the corank of the Hessian and the cubic part on its kernel.
pub fn classify_ade(f: &MPoly) -> Result<GermType, SingularityError> {
    let n = f.vars().len();
    if !f.constant_term().is_zero() {
        return Ok(GermType::NotOnHypersurface);
    }
    if !gradient_vanishes(f) {
        return Ok(GermType::Smooth);
    }
    let mu = match local_milnor_number(f, MAX_JET_ORDER)? {
        Milnor::Finite(m) => m,
        Milnor::Infinite => return Err(SingularityError::NonIsolated),
    };
    let hess = hessian_at_origin(f);
    let corank = n - hess.rank();
    let t = match corank {
        0 | 1 => DynkinType::new(Family::A, mu).ok(),
        2 => {
            let cubic = kernel_cubic(f, &hess.nullspace());
            if cubic.is_zero() {
                None
            } else if is_cube(&cubic) {
                (6..=8)
                    .contains(&mu)
                    .then(|| DynkinType::new(Family::E, mu).unwrap())
            } else {
                DynkinType::new(Family::D, mu).ok().filter(|_| mu >= 4)
            }
        }
        _ => None,
    };
    Ok(t.map_or(GermType::Unrecognized, GermType::Simple))
}

/// Ordinary double point at the origin: `f(0) = 0`, zero gradient and a
/// nondegenerate Hessian.
pub fn detect_odp(f: &MPoly) -> bool {
    f.constant_term().is_zero()
        && gradient_vanishes(f)
        && hessian_at_origin(f).rank() == f.vars().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularity::normal_form;

    fn p(s: &str) -> MPoly {
        MPoly::parse(s).unwrap()
    }

    fn ty(s: &str) -> GermType {
        GermType::Simple(s.parse().unwrap())
    }

    #[test]
    fn fibres_from_slices() {
        assert_eq!(classify_ade(&p("-81*a^4 - b*d")).unwrap(), ty("A3"));
        assert_eq!(
            classify_ade(&p("b^4 + c*(b^2 - 2*d + c)")).unwrap(),
            ty("A3")
        );
        assert_eq!(classify_ade(&p("x^2 + y^2 + z^2")).unwrap(), ty("A1"));
    }

    #[test]
    fn normal_forms_classify_to_themselves() {
        for r in 1..=8 {
            for h in DynkinType::all_of_rank(r) {
                if let Ok(m) = normal_form(h) {
                    assert_eq!(
                        classify_ade(&m.equation).unwrap(),
                        GermType::Simple(h),
                        "{h}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_simple_and_smooth() {
        assert_eq!(
            classify_ade(&p("x^3 + y^3 + z^3")).unwrap(),
            GermType::Unrecognized
        );
        assert_eq!(classify_ade(&p("x + y^2")).unwrap(), GermType::Smooth);
        assert_eq!(
            classify_ade(&p("x^2 + 1")).unwrap(),
            GermType::NotOnHypersurface
        );
        assert!(matches!(
            classify_ade(&p("x^2*y + z^2")),
            Err(SingularityError::NonIsolated)
        ));
    }

    #[test]
    fn double_points() {
        assert!(detect_odp(&p("x^2 + y^2 + z^2 - t^2")));
        assert!(!detect_odp(&p("x^3 + y^2 + z^2 - t^2")));
        assert!(!detect_odp(&p("x + y^2 + z^2 - t^2")));
    }
}
