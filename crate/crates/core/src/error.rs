use thiserror::Error;

/// Errors raised by the design, exact-engine, inference and interval layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid probability {0}: must lie strictly inside (0, 1)")]
    InvalidProbability(f64),

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("invalid outcome: {0}")]
    InvalidOutcome(String),

    #[error("invalid interval specification: {0}")]
    InvalidSpec(String),

    #[error("trial horizon {horizon} already reached")]
    HorizonExceeded { horizon: usize },

    #[error("permuted block length {0} is odd")]
    OddBlockLength(usize),

    #[error("conditioning event N1 = {n1} has zero probability")]
    ZeroProbabilityCondition { n1: usize },

    #[error("arm {arm} received no subjects")]
    DegenerateArm { arm: usize },

    #[error("estimate for arm {arm} is on the boundary (successes 0 or all); outcome excluded")]
    BoundaryEstimate { arm: usize },

    #[error("conditional MLE has no interior solution (iterate reached {value} on arm {arm})")]
    NoInteriorSolution { arm: usize, value: f64 },

    #[error("no probability mass on outcomes with both arms observed and interior estimates")]
    AllMassDegenerate,

    #[error("admissible bootstrap mass {0:e} is too small")]
    TooFewAdmissible(f64),

    #[error("only {got} conditional bootstrap replicates matched N1 (need {need})")]
    InsufficientConditionalReplicates { got: usize, need: usize },
}

impl Error {
    /// True for the data-degeneracy family (exclusion-rule conditions).
    pub fn is_degenerate_data(&self) -> bool {
        matches!(
            self,
            Error::ZeroProbabilityCondition { .. }
                | Error::DegenerateArm { .. }
                | Error::BoundaryEstimate { .. }
                | Error::AllMassDegenerate
                | Error::TooFewAdmissible(_)
                | Error::InsufficientConditionalReplicates { .. }
        )
    }

    pub fn is_solver_failure(&self) -> bool {
        matches!(self, Error::NoInteriorSolution { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
