//! Exact finite-sample inference for two-arm binary response-adaptive designs.

pub mod designs;
pub mod error;
pub mod exact;
pub mod inference;
pub mod intervals;
pub mod rng;
pub mod study;

pub use designs::{Arm, DesignSpec, Outcome, PermutedBlockInit, ProbPair, Rule, TrialState};
pub use error::{Error, Result};
pub use exact::{
    conditional_distribution, conditional_moments, joint_distribution, marginal_n1, CondDist, CondMoments,
    JointDist, PathKernel,
};
pub use inference::{cmle, umle, CmleResult, ConditionalModel, InfoMatrix};
pub use intervals::{
    cond_bootstrap_ci, confidence_interval, uncond_bootstrap_ci, wald_ci, CiMethod, CiMode, CiPair, CiSpec,
};
