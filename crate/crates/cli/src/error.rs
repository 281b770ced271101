use sliceforge::dynkin::DynkinError;
use sliceforge::equivcoh::CohomologyError;
use sliceforge::hitchin::HitchinError;
use sliceforge::liealg::LieError;
use sliceforge::poly::PolyError;
use sliceforge::singularity::SingularityError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    BadInput(String),
    /// Carries the report that failed.
    #[error("verification failed")]
    Verification(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::BadInput(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            CliError::Verification(_) => "verification failed".into(),
            other => other.to_string(),
        }
    }
}

fn classify(budget: bool, msg: String) -> CliError {
    if budget {
        CliError::Budget(format!("{msg}; raise SLICEFORGE_BUDGET to continue"))
    } else {
        CliError::BadInput(msg)
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        classify(e.is_budget_exceeded(), e.to_string())
    }
}

impl From<DynkinError> for CliError {
    fn from(e: DynkinError) -> Self {
        CliError::BadInput(e.to_string())
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::InvalidTriple(_) => CliError::Verification(e.to_string()),
            e => classify(e.is_budget_exceeded(), e.to_string()),
        }
    }
}

impl From<SingularityError> for CliError {
    fn from(e: SingularityError) -> Self {
        classify(e.is_budget_exceeded(), e.to_string())
    }
}

impl From<HitchinError> for CliError {
    fn from(e: HitchinError) -> Self {
        match e {
            HitchinError::LedgerViolation(_) | HitchinError::Restriction(_) => {
                CliError::Verification(e.to_string())
            }
            e => classify(e.is_budget_exceeded(), e.to_string()),
        }
    }
}

impl From<CohomologyError> for CliError {
    fn from(e: CohomologyError) -> Self {
        CliError::BadInput(e.to_string())
    }
}
