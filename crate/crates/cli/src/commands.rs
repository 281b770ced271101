use std::path::PathBuf;

use clap::Args;
use serde::{Deserialize, Serialize};

use sliceforge::dynkin::{
    associated_pair, canonical_subgroup, fold as fold_diagram, DynkinType, FoldingRecord, GroupTag,
    RootSystem,
};
use sliceforge::equivcoh::{
    diagram_involution, e2_page, group_cohomology_cyclic, h3_degeneration_report,
    root_lattice_action, CohomologyPage, CyclicAction, DegenerationReport, FGAbelianGroup,
    FiberCohomology,
};
use sliceforge::hitchin::{
    builtin_slice_for, discriminant as hitchin_discriminant, family_spec, local_cameral,
    local_threefold, restriction_check, smoothness_report, LocalSection, ModelTag, SingularLocus,
    ZeroLocation,
};
use sliceforge::liealg::{
    central_fiber, slice_quotient, transversality_check, AlgebraKind, BuiltinSlice, MatrixAlgebra,
    Sl2Triple, SlodowySlice,
};
use sliceforge::linalg::QMatrix;
use sliceforge::poly::format_rational;
use sliceforge::singularity::classify_ade;

use crate::error::CliError;
use crate::render::{math_lines, tex_matrix, to_tex, Report};
use crate::{SectionArgs, TypeArg};

fn parse_type(s: &str) -> Result<DynkinType, CliError> {
    Ok(s.parse::<DynkinType>()?)
}

fn section(a: &SectionArgs) -> Result<(DynkinType, LocalSection), CliError> {
    let d = parse_type(&a.dynkin)?;
    let b = LocalSection::parse(d, &a.var, &a.section)?;
    Ok((d, b))
}

fn group_name(g: GroupTag) -> String {
    match g {
        GroupTag::Trivial => "trivial".into(),
        g => g.to_string(),
    }
}

fn locus_text(l: &SingularLocus) -> String {
    match l {
        SingularLocus::Empty => "empty".into(),
        SingularLocus::Points { points, complete } => {
            let ps: Vec<String> = points
                .iter()
                .map(|p| {
                    format!(
                        "({})",
                        p.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect();
            let tail = if *complete {
                ""
            } else {
                " and irrational points"
            };
            format!(
                "points {}{tail}",
                if ps.is_empty() {
                    "none rational".into()
                } else {
                    ps.join(", ")
                }
            )
        }
        SingularLocus::Positive { dimension } => {
            format!("positive-dimensional (dimension {dimension})")
        }
    }
}

#[derive(Args, Debug)]
pub struct FoldArgs {
    /// A folded type such as B3; prints the unfolded pair.
    pub dynkin: Option<String>,
    /// Simply laced type to fold.
    #[arg(long, requires = "group", conflicts_with = "dynkin")]
    pub homogeneous: Option<String>,
    /// Symmetry group: trivial, Z2, Z3 or S3.
    #[arg(long, requires = "homogeneous")]
    pub group: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldReport {
    pub folded: String,
    pub homogeneous: String,
    pub group: String,
    /// Folded vertex (1-based) of every vertex of the unfolded diagram.
    pub orbit_map: Vec<usize>,
    /// Shows the folded type first when folding was requested.
    pub from_homogeneous: bool,
}

impl FoldReport {
    fn new(rec: &FoldingRecord, from_homogeneous: bool) -> Self {
        FoldReport {
            folded: rec.folded.to_string(),
            homogeneous: rec.homogeneous.to_string(),
            group: group_name(rec.group),
            orbit_map: rec.orbit_map.iter().map(|v| v + 1).collect(),
            from_homogeneous,
        }
    }

    fn map_text(&self) -> String {
        let parts: Vec<String> = self
            .orbit_map
            .iter()
            .enumerate()
            .map(|(v, o)| format!("{}→{o}", v + 1))
            .collect();
        parts.join(", ")
    }
}

impl Report for FoldReport {
    fn text(&self) -> String {
        let head = if self.from_homogeneous {
            self.folded.clone()
        } else {
            format!("({}, {})", self.homogeneous, self.group)
        };
        format!(
            "{head}\n{} / {} = {}\norbit map: {}",
            self.homogeneous,
            self.group,
            self.folded,
            self.map_text()
        )
    }

    fn tex(&self) -> String {
        format!(
            "\\Delta_h = {}, \\quad G = {}, \\quad \\Delta = \\Delta_h^G = {}",
            self.homogeneous,
            self.group.replace("Z/", "\\mathbb{Z}/"),
            self.folded
        )
    }
}

pub fn fold(a: &FoldArgs) -> Result<FoldReport, CliError> {
    match (&a.dynkin, &a.homogeneous, &a.group) {
        (Some(d), None, None) => Ok(FoldReport::new(&associated_pair(parse_type(d)?)?, false)),
        (None, Some(h), Some(g)) => {
            let h = parse_type(h)?;
            let tag: GroupTag = g.parse()?;
            Ok(FoldReport::new(
                &fold_diagram(h, &canonical_subgroup(h, tag)?)?,
                true,
            ))
        }
        _ => Err(CliError::BadInput(
            "give a type, or --homogeneous with --group".into(),
        )),
    }
}

#[derive(Args, Debug)]
pub struct SliceArgs {
    /// Built-in triple: sl2, sl4 or so5.
    #[arg(long, conflicts_with = "triple")]
    pub builtin: Option<String>,
    /// JSON file {"algebra": "sl4", "x": [[...]], "y": [[...]], "h": [[...]]}
    /// with entries written as rational strings.
    #[arg(long)]
    pub triple: Option<PathBuf>,
}

#[derive(Deserialize)]
struct TripleFile {
    algebra: String,
    #[serde(with = "sliceforge::linalg::qmatrix_text")]
    x: QMatrix,
    #[serde(with = "sliceforge::linalg::qmatrix_text")]
    y: QMatrix,
    #[serde(with = "sliceforge::linalg::qmatrix_text")]
    h: QMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub algebra: String,
    pub params: Vec<String>,
    pub weights: Option<Vec<i64>>,
    pub matrix: Vec<Vec<String>>,
    pub degrees: Vec<u32>,
    pub invariants: Vec<String>,
    pub central_fiber: Option<String>,
    pub fiber_type: Option<String>,
}

impl Report for SliceReport {
    fn text(&self) -> String {
        let mut out = format!(
            "slice of {} with parameters {}",
            self.algebra,
            self.params.join(", ")
        );
        if let Some(w) = &self.weights {
            let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!(" (weights {})", ws.join(", ")));
        }
        out.push('\n');
        let width: Vec<usize> = (0..self.matrix.first().map_or(0, |r| r.len()))
            .map(|j| {
                self.matrix
                    .iter()
                    .map(|r| r[j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in &self.matrix {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{}{c}", " ".repeat(width[j] - c.chars().count())))
                .collect();
            out.push_str(&format!("[ {} ]\n", cells.join("  ")));
        }
        for (d, s) in self.degrees.iter().zip(&self.invariants) {
            out.push_str(&format!("σ{d} = {s}\n"));
        }
        match (&self.central_fiber, &self.fiber_type) {
            (Some(f), Some(t)) => out.push_str(&format!("central fiber: {f} = 0; type: {t}")),
            _ => out.push_str("central fiber: not a subregular slice"),
        }
        out
    }

    fn tex(&self) -> String {
        let mut lines = vec![format!("S = {}", tex_matrix(&self.matrix))];
        for (d, s) in self.degrees.iter().zip(&self.invariants) {
            lines.push(format!("σ_{{{d}}} = {s}"));
        }
        if let Some(f) = &self.central_fiber {
            lines.push(format!("{f} = 0"));
        }
        let body: Vec<String> = lines
            .iter()
            .map(|l| format!("  {} \\\\", to_tex(l)))
            .collect();
        format!("\\begin{{gather*}}\n{}\n\\end{{gather*}}", body.join("\n"))
    }
}

pub fn slice(a: &SliceArgs) -> Result<SliceReport, CliError> {
    let s = match (&a.builtin, &a.triple) {
        (Some(b), None) => {
            let which: BuiltinSlice = b.parse()?;
            SlodowySlice::builtin(which)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))?;
            let t: TripleFile =
                serde_json::from_str(&text).map_err(|e| CliError::BadInput(e.to_string()))?;
            let kind: AlgebraKind = t.algebra.parse()?;
            let alg = MatrixAlgebra::build(kind)?;
            SlodowySlice::new(
                &alg,
                &Sl2Triple {
                    x: t.x,
                    y: t.y,
                    h: t.h,
                },
            )?
        }
        _ => {
            return Err(CliError::BadInput(
                "give exactly one of --builtin or --triple".into(),
            ))
        }
    };
    let quot = slice_quotient(&s);
    let (central, fiber_type) = match central_fiber(&s, &quot) {
        Ok(cf) => {
            let t = classify_ade(&cf.equation)?;
            (Some(cf.equation.to_pretty()), Some(t.to_string()))
        }
        Err(_) => (None, None),
    };
    Ok(SliceReport {
        algebra: s.algebra.kind.to_string(),
        params: s.params.clone(),
        weights: s.weights.clone(),
        matrix: s
            .family
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|p| p.to_pretty()).collect())
            .collect(),
        degrees: quot.degrees.clone(),
        invariants: quot.components.iter().map(|p| p.to_pretty()).collect(),
        central_fiber: central,
        fiber_type,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub dynkin: String,
    pub equation: String,
    pub ambient: String,
    pub base: String,
    pub discriminant_bundle: String,
    pub ledger: Vec<(String, i64)>,
    pub ledger_ok: bool,
}

impl Report for FamilyReport {
    fn text(&self) -> String {
        let ledger: Vec<String> = self
            .ledger
            .iter()
            .map(|(v, w)| format!("{v}:{w}"))
            .collect();
        format!(
            "{}\nambient: {}\nbase: {}\ndiscriminant: section of {}\nL-weights: {}",
            self.equation,
            self.ambient,
            self.base,
            self.discriminant_bundle,
            ledger.join(" ")
        )
    }

    fn tex(&self) -> String {
        math_lines(&[
            self.equation.clone(),
            self.ambient.clone(),
            self.base.clone(),
        ])
    }
}

pub fn family(a: &TypeArg) -> Result<FamilyReport, CliError> {
    let spec = family_spec(parse_type(&a.dynkin)?)?;
    Ok(FamilyReport {
        dynkin: spec.dynkin.to_string(),
        equation: spec.equation_display(),
        ambient: spec.ambient_display(),
        base: spec.base_display(),
        discriminant_bundle: sliceforge::hitchin::bundle_name(2 * spec.discriminant_k_power as i64),
        ledger: spec.ledger.clone(),
        ledger_ok: spec.ledger_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CameralReport {
    pub dynkin: String,
    pub vars: Vec<String>,
    pub equations: Vec<String>,
    pub reduced: bool,
    pub smooth: bool,
    pub singular_locus: SingularLocus,
}

impl Report for CameralReport {
    fn text(&self) -> String {
        let eqs: Vec<String> = self.equations.iter().map(|e| format!("{e} = 0")).collect();
        format!(
            "cameral curve in ({}): {}\nreduced: {}\nsmooth: {}\nsingular locus: {}",
            self.vars.join(", "),
            eqs.join(", "),
            self.reduced,
            self.smooth,
            locus_text(&self.singular_locus)
        )
    }

    fn tex(&self) -> String {
        math_lines(
            &self
                .equations
                .iter()
                .map(|e| format!("{e} = 0"))
                .collect::<Vec<_>>(),
        )
    }
}

pub fn cameral(a: &SectionArgs) -> Result<CameralReport, CliError> {
    let (d, b) = section(a)?;
    let c = local_cameral(d, &b)?;
    let rep = smoothness_report(&c)?;
    Ok(CameralReport {
        dynkin: d.to_string(),
        vars: c.vars(),
        equations: c.generators.iter().map(|g| g.to_pretty()).collect(),
        reduced: c.is_reduced()?,
        smooth: rep.smooth,
        singular_locus: rep.total_space,
    })
}

#[derive(Args, Debug)]
pub struct SmoothArgs {
    #[command(flatten)]
    pub section: SectionArgs,
    /// Local model: slice (built-in slices only) or hypersurface.
    #[arg(long)]
    pub model: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothFiber {
    /// Chart coordinate of the fibre.
    pub point: String,
    /// Types of the rational singular points of the fibre.
    pub fiber_type: Vec<String>,
    pub singular_points: Vec<Vec<String>>,
    pub all_points_rational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothReport {
    pub dynkin: String,
    pub model: String,
    pub equations: Vec<String>,
    pub total_space_singular: bool,
    pub total_space: SingularLocus,
    pub every_fiber_singular: bool,
    pub fibers_complete: bool,
    pub fibers: Vec<SmoothFiber>,
}

impl Report for SmoothReport {
    fn text(&self) -> String {
        let eqs: Vec<String> = self.equations.iter().map(|e| format!("{e} = 0")).collect();
        let mut out = format!(
            "{} model: {}\ntotal space: {}\n",
            self.model,
            eqs.join(", "),
            if self.total_space_singular {
                format!("singular, {}", locus_text(&self.total_space))
            } else {
                "smooth".into()
            }
        );
        if self.every_fiber_singular {
            out.push_str("every fiber is singular; fiber over 0:\n");
        }
        for f in &self.fibers {
            out.push_str(&format!(
                "fiber over {}: {}\n",
                f.point,
                f.fiber_type.join(", ")
            ));
        }
        if !self.fibers_complete {
            out.push_str("further singular fibers lie over irrational points\n");
        }
        out.trim_end().to_string()
    }

    fn tex(&self) -> String {
        math_lines(
            &self
                .equations
                .iter()
                .map(|e| format!("{e} = 0"))
                .collect::<Vec<_>>(),
        )
    }
}

pub fn smooth(a: &SmoothArgs) -> Result<SmoothReport, CliError> {
    let (d, b) = section(&a.section)?;
    let model = match &a.model {
        Some(m) => m.parse::<ModelTag>()?,
        None if builtin_slice_for(d).is_some() => ModelTag::Slice,
        None => ModelTag::Hypersurface,
    };
    let y = local_threefold(d, &b, model)?;
    let rep = smoothness_report(&y)?;
    let fibers = rep
        .fibers
        .iter()
        .map(|f| SmoothFiber {
            point: format_rational(&f.x),
            fiber_type: f.points.iter().map(|p| p.germ.to_string()).collect(),
            singular_points: f
                .points
                .iter()
                .map(|p| p.point.iter().map(format_rational).collect())
                .collect(),
            all_points_rational: !matches!(
                f.locus,
                SingularLocus::Points {
                    complete: false,
                    ..
                }
            ),
        })
        .collect();
    Ok(SmoothReport {
        dynkin: d.to_string(),
        model: model.to_string(),
        equations: y.equations.iter().map(|e| e.to_pretty()).collect(),
        total_space_singular: !rep.smooth,
        total_space: rep.total_space,
        every_fiber_singular: rep.every_fiber_singular,
        fibers_complete: rep.fibers_complete,
        fibers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroReport {
    pub location: String,
    pub multiplicity: usize,
    pub transversal: bool,
    pub rank_condition: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantReport {
    pub dynkin: String,
    pub polynomial: String,
    pub k_power: usize,
    pub identically_zero: bool,
    pub zeros: Vec<ZeroReport>,
    pub transversal: bool,
}

impl Report for DiscriminantReport {
    fn text(&self) -> String {
        let mut out = format!(
            "discriminant: {} (section of K^{})\n",
            self.polynomial, self.k_power
        );
        if self.identically_zero {
            out.push_str("identically zero\n");
        }
        for z in &self.zeros {
            let rank = match z.rank_condition {
                Some(true) => ", rank condition holds",
                Some(false) => ", rank condition fails",
                None => "",
            };
            out.push_str(&format!(
                "zero {}: multiplicity {}{rank}\n",
                z.location, z.multiplicity
            ));
        }
        out.push_str(if self.transversal {
            "transversal"
        } else {
            "not transversal"
        });
        out
    }

    fn tex(&self) -> String {
        math_lines(&[format!(
            "\\prod_{{\\alpha \\in R}} \\alpha(b) = {}",
            self.polynomial
        )])
    }
}

pub fn discriminant(a: &SectionArgs) -> Result<DiscriminantReport, CliError> {
    let (d, b) = section(a)?;
    let disc = hitchin_discriminant(d, &b)?;
    let tr = transversality_check(&b, &RootSystem::new(d))?;
    let zeros = tr
        .points
        .iter()
        .map(|p| ZeroReport {
            location: match &p.location {
                ZeroLocation::Rational(r) => format_rational(r),
                ZeroLocation::Algebraic(f) => format!("roots of {}", f.to_pretty()),
            },
            multiplicity: p.multiplicity,
            transversal: p.transversal,
            rank_condition: p.rank_condition,
        })
        .collect();
    Ok(DiscriminantReport {
        dynkin: d.to_string(),
        polynomial: disc.polynomial.to_pretty(),
        k_power: disc.k_power,
        identically_zero: disc.identically_zero,
        zeros,
        transversal: tr.passed(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictReport {
    pub dynkin: String,
    pub homogeneous: String,
    pub group: String,
    pub unfolded_family: String,
    pub restricted_family: String,
    pub folded_family: String,
    pub zeroed: Vec<String>,
    pub families_agree: bool,
    pub sign_check: Option<bool>,
    pub walls_ok: bool,
    /// Orders of vanishing of the folded and unfolded discriminants along a
    /// path crossing one long wall, then one short wall.
    pub long_wall_orders: Option<(usize, usize)>,
    pub short_wall_orders: Option<(usize, usize)>,
    pub passed: bool,
}

impl Report for RestrictReport {
    fn text(&self) -> String {
        let mut out = format!(
            "{} = ({}, {})\nunfolded family: {} = 0\nzeroed parameters: {}\nrestricted: {} = 0\nfolded family: {} = 0\nfamilies agree: {}\n",
            self.dynkin,
            self.homogeneous,
            self.group,
            self.unfolded_family,
            if self.zeroed.is_empty() { "none".into() } else { self.zeroed.join(", ") },
            self.restricted_family,
            self.folded_family,
            self.families_agree
        );
        if let Some(s) = self.sign_check {
            out.push_str(&format!(
                "zeroed degrees match the anti-invariant components: {s}\n"
            ));
        }
        out.push_str(&format!("wall containment: {}\n", self.walls_ok));
        if let (Some(l), Some(s)) = (self.long_wall_orders, self.short_wall_orders) {
            out.push_str(&format!(
                "long wall: folded order {}, unfolded order {}\nshort wall: folded order {}, unfolded order {}\n",
                l.0, l.1, s.0, s.1
            ));
        }
        out.push_str(if self.passed { "passed" } else { "FAILED" });
        out
    }

    fn tex(&self) -> String {
        math_lines(&[
            format!("{} = 0", self.unfolded_family),
            format!("{} = 0", self.restricted_family),
        ])
    }
}

pub fn restrict(a: &TypeArg) -> Result<RestrictReport, CliError> {
    let r = restriction_check(parse_type(&a.dynkin)?)?;
    let orders = |w: &sliceforge::hitchin::WallCrossing| (w.folded_order, w.unfolded_order);
    Ok(RestrictReport {
        dynkin: r.dynkin.to_string(),
        homogeneous: r.homogeneous.to_string(),
        group: group_name(r.group),
        unfolded_family: r.unfolded_family.to_pretty(),
        restricted_family: r.restricted_family.to_pretty(),
        folded_family: r.folded_family.to_pretty(),
        zeroed: r.zeroed.clone(),
        families_agree: r.families_agree,
        sign_check: r.sign_check,
        walls_ok: r.walls.passed(),
        long_wall_orders: r.witness.as_ref().map(|w| orders(&w.long_wall)),
        short_wall_orders: r.witness.as_ref().map(|w| orders(&w.short_wall)),
        passed: r.passed(),
    })
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    /// Root lattice of a simply laced type.
    #[arg(long, conflicts_with_all = ["action", "genus"])]
    pub lattice: Option<String>,
    /// Diagram symmetry acting on the lattice.
    #[arg(long, default_value = "swap", value_parser = ["swap"])]
    pub involution: String,
    /// JSON file with a cyclic action {"order", "action", "relations"}.
    #[arg(long, conflicts_with = "genus")]
    pub action: Option<PathBuf>,
    /// Page with H^0 = Z and H^1 = Z^(2g), both with trivial Z/2 action.
    #[arg(long)]
    pub genus: Option<usize>,
    /// With --lattice: the page with H^0 = Z and H^2 = the lattice.
    #[arg(long)]
    pub page: bool,
    /// Highest cohomological degree of the group.
    #[arg(long, default_value_t = 2)]
    pub p_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub groups: Vec<FGAbelianGroup>,
    pub page: Option<CohomologyPage>,
    pub degeneration: Option<DegenerationReport>,
}

impl Report for CohomologyReport {
    fn text(&self) -> String {
        let mut lines: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(p, g)| format!("H^{p} = {g}"))
            .collect();
        if let Some(page) = &self.page {
            lines.push(page.to_string());
        }
        if let Some(d) = &self.degeneration {
            lines.push(d.to_string());
        }
        lines.join("\n")
    }

    fn tex(&self) -> String {
        let mut out: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(p, g)| format!("H^{{{p}}} = {}", g.to_tex()))
            .collect();
        if let Some(page) = &self.page {
            out.push(page.to_tex());
        }
        out.join("\n")
    }
}

pub fn cohomology(a: &CohomologyArgs) -> Result<CohomologyReport, CliError> {
    if let Some(g) = a.genus {
        let fiber = vec![
            FiberCohomology {
                q: 0,
                group: FGAbelianGroup::free(1),
                action: CyclicAction::trivial(2, 1),
            },
            FiberCohomology {
                q: 1,
                group: FGAbelianGroup::free(2 * g),
                action: CyclicAction::trivial(2, 2 * g),
            },
        ];
        let page = e2_page(&fiber, a.p_max.max(4))?;
        return Ok(CohomologyReport {
            groups: Vec::new(),
            degeneration: Some(h3_degeneration_report(&page)),
            page: Some(page),
        });
    }
    let act = match (&a.lattice, &a.action) {
        (Some(l), None) => {
            let h = parse_type(l)?;
            if !h.is_ade() {
                return Err(CliError::BadInput(format!("{h} is not simply laced")));
            }
            root_lattice_action(&diagram_involution(h)?)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::BadInput(format!("{}: {e}", path.display())))?;
            let raw: CyclicAction =
                serde_json::from_str(&text).map_err(|e| CliError::BadInput(e.to_string()))?;
            CyclicAction::new(raw.order, raw.action, raw.relations)?
        }
        _ => {
            return Err(CliError::BadInput(
                "give --lattice, --action or --genus".into(),
            ))
        }
    };
    let groups = group_cohomology_cyclic(&act, a.p_max)?;
    let (page, degeneration) = if a.page {
        let fiber = vec![
            FiberCohomology {
                q: 0,
                group: FGAbelianGroup::free(1),
                action: CyclicAction::trivial(act.order, 1),
            },
            FiberCohomology {
                q: 2,
                group: act.module(),
                action: act.clone(),
            },
        ];
        let page = e2_page(&fiber, a.p_max.max(4))?;
        let rep = h3_degeneration_report(&page);
        (Some(page), Some(rep))
    } else {
        (None, None)
    };
    Ok(CohomologyReport {
        groups,
        page,
        degeneration,
    })
}
