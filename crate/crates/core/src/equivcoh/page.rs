use std::fmt;

use serde::{Deserialize, Serialize};

use super::abelian::FGAbelianGroup;
use super::cyclic::{group_cohomology_cyclic, CyclicAction};
use super::CohomologyError;

/// Cohomology in degree `q` of the space together with the group action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCohomology {
    pub q: usize,
    pub group: FGAbelianGroup,
    pub action: CyclicAction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageCell {
    pub p: usize,
    pub q: usize,
    #[serde(flatten)]
    pub group: FGAbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyPage {
    pub page: u32,
    pub group_order: usize,
    pub p_max: usize,
    pub q_max: usize,
    /// Row-major in `q`, then `p`.
    pub cells: Vec<PageCell>,
}

/// `E_2^{pq} = H^p(G, H^q)` for the supplied degrees; missing degrees are zero.
pub fn e2_page(fiber: &[FiberCohomology], p_max: usize) -> Result<CohomologyPage, CohomologyError> {
    let order = fiber.first().map_or(1, |f| f.action.order);
    if let Some(f) = fiber.iter().find(|f| f.action.order != order) {
        return Err(CohomologyError::InconsistentOrders {
            first: order,
            other: f.action.order,
        });
    }
    for f in fiber {
        if f.action.module() != f.group {
            return Err(CohomologyError::Shape(format!(
                "degree {} is declared {} but the presentation gives {}",
                f.q,
                f.group,
                f.action.module()
            )));
        }
    }
    let q_max = fiber.iter().map(|f| f.q).max().unwrap_or(0);
    let mut cells = Vec::new();
    for q in 0..=q_max {
        let col = match fiber.iter().find(|f| f.q == q) {
            Some(f) => group_cohomology_cyclic(&f.action, p_max)?,
            None => vec![FGAbelianGroup::zero(); p_max + 1],
        };
        for (p, group) in col.into_iter().enumerate() {
            cells.push(PageCell { p, q, group });
        }
    }
    Ok(CohomologyPage {
        page: 2,
        group_order: order,
        p_max,
        q_max,
        cells,
    })
}

impl CohomologyPage {
    pub fn get(&self, p: usize, q: usize) -> FGAbelianGroup {
        self.cells
            .iter()
            .find(|c| c.p == p && c.q == q)
            .map_or_else(FGAbelianGroup::zero, |c| c.group.clone())
    }

    pub fn to_tex(&self) -> String {
        let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(self.p_max + 1));
        for q in (0..=self.q_max).rev() {
            let row: Vec<String> = (0..=self.p_max).map(|p| self.get(p, q).to_tex()).collect();
            out.push_str(&format!("{q} & {} \\\\\n", row.join(" & ")));
        }
        out.push_str("\\hline\n");
        let ps: Vec<String> = (0..=self.p_max).map(|p| p.to_string()).collect();
        out.push_str(&format!("q / p & {}\n\\end{{array}}", ps.join(" & ")));
        out
    }
}

impl fmt::Display for CohomologyPage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |p: usize, q: usize| self.get(p, q).to_string();
        let width = (0..=self.p_max)
            .flat_map(|p| (0..=self.q_max).map(move |q| (p, q)))
            .map(|(p, q)| cell(p, q).chars().count())
            .max()
            .unwrap_or(1);
        writeln!(f, "E{} page, group order {}", self.page, self.group_order)?;
        for q in (0..=self.q_max).rev() {
            let row: Vec<String> = (0..=self.p_max)
                .map(|p| format!("{:<width$}", cell(p, q), width = width))
                .collect();
            writeln!(f, "q={q} | {}", row.join(" | ").trim_end())?;
        }
        let ps: Vec<String> = (0..=self.p_max)
            .map(|p| format!("{:<width$}", format!("p={p}"), width = width))
            .collect();
        write!(f, "      {}", ps.join("   ").trim_end())
    }
}

/// Cells that must vanish for the degree-three comparison argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationReport {
    pub holds: bool,
    /// Nonzero cells with `p >= 1`, `q` not in `{3, 4}` and `p + q <= 4`.
    pub violations: Vec<PageCell>,
    /// The page reaches every cell of total degree at most four.
    pub complete: bool,
    pub note: String,
}

pub const DIFFERENTIALS_NOTE: &str = "differentials are not computed: a nonzero cell obstructs the vanishing argument but does not disprove the comparison isomorphism";

pub fn h3_degeneration_report(page: &CohomologyPage) -> DegenerationReport {
    let violations: Vec<PageCell> = page
        .cells
        .iter()
        .filter(|c| c.p >= 1 && c.q != 3 && c.q != 4 && c.p + c.q <= 4 && !c.group.is_zero())
        .cloned()
        .collect();
    DegenerationReport {
        holds: violations.is_empty(),
        violations,
        complete: page.p_max >= 4,
        note: DIFFERENTIALS_NOTE.into(),
    }
}

impl DegenerationReport {
    pub fn verdict(&self) -> String {
        if self.holds {
            "vanishing pattern holds".into()
        } else {
            let cells: Vec<String> = self
                .violations
                .iter()
                .map(|c| format!("({},{}) = {}", c.p, c.q, c.group))
                .collect();
            format!("vanishing pattern fails at {}", cells.join(", "))
        }
    }
}

impl fmt::Display for DegenerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\nnote: {}", self.verdict(), self.note)?;
        if !self.complete {
            write!(f, "\nwarning: page stops before p = 4")?;
        }
        Ok(())
    }
}
