use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::discriminant::check_section;
use super::section::LocalSection;
use super::smooth::LocalModel;
use super::HitchinError;
use crate::dynkin::DynkinType;
use crate::liealg::{slice_quotient, BuiltinSlice, SlodowySlice};
use crate::poly::MPoly;
use crate::singularity::semiuniversal_deformation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelTag {
    /// `sigma_j(slice) = b_j(x)` on a built-in Slodowy slice.
    Slice,
    /// The semi-universal deformation with parameters replaced by `b(x)`.
    Hypersurface,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelTag::Slice => "slice",
            ModelTag::Hypersurface => "hypersurface",
        })
    }
}

impl FromStr for ModelTag {
    type Err = HitchinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "slice" => Ok(ModelTag::Slice),
            "hypersurface" => Ok(ModelTag::Hypersurface),
            _ => Err(HitchinError::Unsupported(format!("unknown model `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalThreefold {
    pub dynkin: DynkinType,
    pub model: ModelTag,
    pub chart_var: String,
    pub fiber_vars: Vec<String>,
    /// Equations in the context `[chart_var, fiber_vars...]`.
    pub equations: Vec<MPoly>,
}

/// Slice of a classical algebra whose subregular slice is built in.
pub fn builtin_slice_for(d: DynkinType) -> Option<BuiltinSlice> {
    match d.to_string().as_str() {
        "A1" => Some(BuiltinSlice::Sl2),
        "A3" => Some(BuiltinSlice::Sl4),
        "B2" => Some(BuiltinSlice::So5),
        _ => None,
    }
}

pub fn local_threefold(
    d: DynkinType,
    b: &LocalSection,
    model: ModelTag,
) -> Result<LocalThreefold, HitchinError> {
    check_section(d, b)?;
    let (fiber_vars, gens, b) = match model {
        ModelTag::Slice => {
            let which = builtin_slice_for(d)
                .ok_or_else(|| HitchinError::Unsupported(format!("no built-in slice for {d}")))?;
            let s = SlodowySlice::builtin(which);
            let quot = slice_quotient(&s);
            let b = fresh_chart(b, &s.params);
            let gens: Vec<MPoly> = quot
                .components
                .iter()
                .zip(&b.components)
                .map(|(q, bj)| q - bj)
                .collect();
            (s.params.clone(), gens, b)
        }
        ModelTag::Hypersurface => {
            let fam = semiuniversal_deformation(d)?;
            let xyz = fam.model.vars();
            let mut taken = xyz.clone();
            taken.extend(fam.params.iter().cloned());
            let b = fresh_chart(b, &taken);
            let f = fam.equation.substitute(&b.assignment(&fam.params));
            (xyz, vec![f], b)
        }
    };
    let mut ctx = vec![b.var.clone()];
    ctx.extend(fiber_vars.iter().cloned());
    let equations = gens
        .iter()
        .map(|g| g.in_context(&ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LocalThreefold {
        dynkin: d,
        model,
        chart_var: b.var,
        fiber_vars,
        equations,
    })
}

/// Renames the chart variable when it collides with a fibre variable.
fn fresh_chart(b: &LocalSection, taken: &[String]) -> LocalSection {
    if !taken.contains(&b.var) {
        return b.clone();
    }
    let name = ["s", "x0", "chart"]
        .iter()
        .map(|s| s.to_string())
        .chain((1..).map(|i| format!("s{i}")))
        .find(|n| !taken.contains(n))
        .unwrap();
    b.renamed(&name)
}

impl LocalThreefold {
    pub fn vars(&self) -> Vec<String> {
        let mut v = vec![self.chart_var.clone()];
        v.extend(self.fiber_vars.iter().cloned());
        v
    }
}

impl fmt::Display for LocalThreefold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .equations
            .iter()
            .map(|e| format!("{} = 0", e.to_pretty()))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

impl LocalModel for LocalThreefold {
    fn vars(&self) -> Vec<String> {
        LocalThreefold::vars(self)
    }

    fn equations(&self) -> Vec<MPoly> {
        self.equations.clone()
    }

    fn chart_var(&self) -> &str {
        &self.chart_var
    }

    fn fiber_vars(&self) -> Vec<String> {
        self.fiber_vars.clone()
    }

    fn has_surface_fibers(&self) -> bool {
        true
    }
}
