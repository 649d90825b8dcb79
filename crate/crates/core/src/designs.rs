//! Allocation rules for two-arm binary-response trials.
//!
//! Every rule maps the sufficient trial summary `(i, s1, s2, n1)` to the
//! probability that the next subject is assigned to arm 1. The success
//! probabilities never enter an allocation rule; [`Rule::probability`] has no
//! access to a [`ProbPair`].

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::SubjectStream;

/// Lower/upper guard applied to plug-in allocation fractions.
pub const ALLOCATION_CLAMP: f64 = 1e-12;

/// Treatment arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Arm {
    One,
    Two,
}

impl Arm {
    pub const BOTH: [Arm; 2] = [Arm::One, Arm::Two];

    /// Zero-based index (arm 1 → 0).
    pub fn index(self) -> usize {
        match self {
            Arm::One => 0,
            Arm::Two => 1,
        }
    }

    pub fn other(self) -> Arm {
        match self {
            Arm::One => Arm::Two,
            Arm::Two => Arm::One,
        }
    }

    /// Parse a one-based arm label.
    pub fn from_label(label: usize) -> Option<Arm> {
        match label {
            1 => Some(Arm::One),
            2 => Some(Arm::Two),
            _ => None,
        }
    }
}

/// Success probabilities `(p1, p2)`, both strictly inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct ProbPair([f64; 2]);

impl ProbPair {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        for p in [p1, p2] {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::InvalidProbability(p));
            }
        }
        Ok(ProbPair([p1, p2]))
    }

    pub fn p1(&self) -> f64 {
        self.0[0]
    }

    pub fn p2(&self) -> f64 {
        self.0[1]
    }

    pub fn get(&self, arm: Arm) -> f64 {
        self.0[arm.index()]
    }

    pub fn as_array(&self) -> [f64; 2] {
        self.0
    }

    pub fn swapped(&self) -> ProbPair {
        ProbPair([self.0[1], self.0[0]])
    }
}

impl TryFrom<[f64; 2]> for ProbPair {
    type Error = Error;

    fn try_from(v: [f64; 2]) -> Result<Self> {
        ProbPair::new(v[0], v[1])
    }
}

impl From<ProbPair> for [f64; 2] {
    fn from(p: ProbPair) -> Self {
        p.0
    }
}

/// Summary of the first `i` subjects: successes per arm and arm-1 count.
///
/// The arm-2 count is always derived as `i - n1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TrialState {
    pub i: usize,
    pub s1: usize,
    pub s2: usize,
    pub n1: usize,
}

impl TrialState {
    pub fn new(i: usize, s1: usize, s2: usize, n1: usize) -> Result<Self> {
        if n1 > i || s1 > n1 || s2 > i - n1 {
            return Err(Error::InvalidOutcome(format!(
                "state (i={i}, s1={s1}, s2={s2}, n1={n1}) violates 0 <= s1 <= n1 <= i, s2 <= i - n1"
            )));
        }
        Ok(TrialState { i, s1, s2, n1 })
    }

    pub fn n2(&self) -> usize {
        self.i - self.n1
    }

    pub fn successes(&self, arm: Arm) -> usize {
        match arm {
            Arm::One => self.s1,
            Arm::Two => self.s2,
        }
    }

    pub fn assigned(&self, arm: Arm) -> usize {
        match arm {
            Arm::One => self.n1,
            Arm::Two => self.n2(),
        }
    }

    /// Same state with arm labels exchanged.
    pub fn swapped(&self) -> TrialState {
        TrialState {
            i: self.i,
            s1: self.s2,
            s2: self.s1,
            n1: self.n2(),
        }
    }

    fn step(self, arm: Arm, success: bool) -> TrialState {
        let mut next = self;
        next.i += 1;
        match arm {
            Arm::One => {
                next.n1 += 1;
                next.s1 += success as usize;
            }
            Arm::Two => next.s2 += success as usize,
        }
        next
    }
}

/// Terminal trial summary `(s1, s2, n1)` at horizon `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Outcome {
    pub s1: usize,
    pub s2: usize,
    pub n1: usize,
    pub n: usize,
}

impl Outcome {
    pub fn new(s1: usize, s2: usize, n1: usize, n: usize) -> Result<Self> {
        TrialState::new(n, s1, s2, n1)?;
        Ok(Outcome { s1, s2, n1, n })
    }

    pub fn n2(&self) -> usize {
        self.n - self.n1
    }

    pub fn successes(&self, arm: Arm) -> usize {
        match arm {
            Arm::One => self.s1,
            Arm::Two => self.s2,
        }
    }

    pub fn assigned(&self, arm: Arm) -> usize {
        match arm {
            Arm::One => self.n1,
            Arm::Two => self.n2(),
        }
    }

    /// Replace the success count of one arm, keeping sample sizes fixed.
    pub fn with_successes(&self, arm: Arm, s: usize) -> Outcome {
        let mut o = *self;
        match arm {
            Arm::One => o.s1 = s,
            Arm::Two => o.s2 = s,
        }
        o
    }

    pub fn swapped(&self) -> Outcome {
        Outcome {
            s1: self.s2,
            s2: self.s1,
            n1: self.n2(),
            n: self.n,
        }
    }

    /// Both arms observed and both success fractions strictly inside (0, 1).
    pub fn is_admissible(&self) -> bool {
        let n2 = self.n2();
        self.n1 > 0 && n2 > 0 && self.s1 > 0 && self.s1 < self.n1 && self.s2 > 0 && self.s2 < n2
    }

    pub fn as_state(&self) -> TrialState {
        TrialState {
            i: self.n,
            s1: self.s1,
            s2: self.s2,
            n1: self.n1,
        }
    }
}

impl From<TrialState> for Outcome {
    fn from(s: TrialState) -> Self {
        Outcome {
            s1: s.s1,
            s2: s.s2,
            n1: s.n1,
            n: s.i,
        }
    }
}

/// Response-adaptive allocation rule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Rule {
    /// Randomized play-the-winner urn.
    Rpw { alpha: u32, beta: u32 },
    /// Success-driven urn.
    Sdd { alpha: u32, beta: u32 },
    /// Sequential plug-in Neyman allocation.
    Nad,
    /// Plug-in optimal allocation for the simple difference.
    OptSimpleDifference,
    /// Plug-in optimal allocation for the odds ratio.
    OptOddsRatio,
    /// Plug-in optimal allocation for the relative risk.
    OptRelativeRisk,
}

/// Shrinkage estimate `(s + 1/2) / (n + 1)`.
fn shrunk(s: usize, n: usize) -> f64 {
    (s as f64 + 0.5) / (n as f64 + 1.0)
}

impl Rule {
    /// Probability the next subject goes to arm 1 under the adaptive rule.
    pub fn probability(&self, state: &TrialState) -> f64 {
        match *self {
            Rule::Rpw { alpha, beta } => {
                let (a, b) = (alpha as f64, beta as f64);
                // Balls in the urn after `i` responses: 2a + i*b.
                let type1 = state.s1 + state.n2() - state.s2;
                (a + b * type1 as f64) / (2.0 * a + b * state.i as f64)
            }
            Rule::Sdd { alpha, beta } => {
                let (a, b) = (alpha as f64, beta as f64);
                (a + b * state.s1 as f64) / (2.0 * a + b * (state.s1 + state.s2) as f64)
            }
            Rule::Nad
            | Rule::OptSimpleDifference
            | Rule::OptOddsRatio
            | Rule::OptRelativeRisk => {
                let p1 = shrunk(state.s1, state.n1);
                let p2 = shrunk(state.s2, state.n2());
                let (q1, q2) = (1.0 - p1, 1.0 - p2);
                let frac = match self {
                    Rule::Nad => {
                        let (sd1, sd2) = ((p1 * q1).sqrt(), (p2 * q2).sqrt());
                        sd1 / (sd1 + sd2)
                    }
                    _ => {
                        let r = match self {
                            Rule::OptSimpleDifference => (p1 / p2).sqrt(),
                            Rule::OptOddsRatio => q2 / q1 * (p2 / p1).sqrt(),
                            _ => q2 / q1 * (p1 / p2).sqrt(),
                        };
                        r / (1.0 + r)
                    }
                };
                frac.clamp(ALLOCATION_CLAMP, 1.0 - ALLOCATION_CLAMP)
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Rule::Rpw { alpha, beta } => format!("RPW({alpha},{beta})"),
            Rule::Sdd { alpha, beta } => format!("SDD({alpha},{beta})"),
            Rule::Nad => "NAD".into(),
            Rule::OptSimpleDifference => "OptSD".into(),
            Rule::OptOddsRatio => "OptOR".into(),
            Rule::OptRelativeRisk => "OptRR".into(),
        }
    }

    /// Parse a rule name as used on the command line (`rpw`, `sdd`, `nad`,
    /// `opt-sd`, `opt-or`, `opt-rr`). Urn parameters default to 1.
    pub fn parse(name: &str, alpha: u32, beta: u32) -> Result<Rule> {
        let rule = match name.to_ascii_lowercase().as_str() {
            "rpw" => Rule::Rpw { alpha, beta },
            "sdd" => Rule::Sdd { alpha, beta },
            "nad" => Rule::Nad,
            "opt-sd" | "optsd" | "sd" => Rule::OptSimpleDifference,
            "opt-or" | "optor" | "or" => Rule::OptOddsRatio,
            "opt-rr" | "optrr" | "rr" => Rule::OptRelativeRisk,
            other => return Err(Error::InvalidDesign(format!("unknown rule '{other}'"))),
        };
        Ok(rule)
    }
}

/// Permuted-block initializer: the first `m` subjects are split evenly
/// between the arms in uniformly random order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct PermutedBlockInit {
    length: usize,
}

impl PermutedBlockInit {
    pub fn new(length: usize) -> Result<Self> {
        if length % 2 == 1 {
            return Err(Error::OddBlockLength(length));
        }
        Ok(PermutedBlockInit { length })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn per_arm(&self) -> usize {
        self.length / 2
    }

    /// Exact probability that subject `i + 1` of the block goes to arm 1,
    /// given `n1` of the first `i` block subjects went to arm 1.
    pub fn probability(&self, state: &TrialState) -> f64 {
        let remaining = self.length - state.i;
        let remaining1 = self.per_arm() - state.n1;
        remaining1 as f64 / remaining as f64
    }
}

impl TryFrom<usize> for PermutedBlockInit {
    type Error = Error;

    fn try_from(m: usize) -> Result<Self> {
        PermutedBlockInit::new(m)
    }
}

impl From<PermutedBlockInit> for usize {
    fn from(b: PermutedBlockInit) -> usize {
        b.length
    }
}

/// A uniformly random arm sequence with `m/2` subjects per arm.
pub fn permuted_block_sequence(init: &PermutedBlockInit, seed: u64) -> Vec<Arm> {
    let mut arms: Vec<Arm> = (0..init.length)
        .map(|j| if j < init.per_arm() { Arm::One } else { Arm::Two })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    arms.shuffle(&mut rng);
    arms
}

/// Allocation rule together with its horizon and optional block initializer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignSpec {
    pub rule: Rule,
    pub horizon: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initializer: Option<PermutedBlockInit>,
    /// Whether responses observed during the block phase count towards the
    /// adaptive rule. When false the rule starts afresh after the block.
    #[serde(default = "yes", skip_serializing_if = "is_yes")]
    pub block_feeds_rule: bool,
}

fn yes() -> bool {
    true
}

fn is_yes(v: &bool) -> bool {
    *v
}

impl DesignSpec {
    pub fn new(rule: Rule, horizon: usize) -> Result<Self> {
        Self::with_initializer(rule, horizon, None)
    }

    pub fn with_initializer(
        rule: Rule,
        horizon: usize,
        initializer: Option<PermutedBlockInit>,
    ) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::InvalidDesign("horizon must be positive".into()));
        }
        if let Rule::Rpw { alpha, beta } | Rule::Sdd { alpha, beta } = rule {
            if alpha == 0 || beta == 0 {
                return Err(Error::InvalidDesign(
                    "urn parameters alpha and beta must be positive".into(),
                ));
            }
        }
        if let Some(b) = initializer {
            if b.length() > horizon {
                return Err(Error::InvalidDesign(format!(
                    "block length {} exceeds horizon {horizon}",
                    b.length()
                )));
            }
        }
        Ok(DesignSpec {
            rule,
            horizon,
            initializer: initializer.filter(|b| b.length() > 0),
            block_feeds_rule: true,
        })
    }

    /// Set whether block-phase responses feed the adaptive rule.
    pub fn with_block_feeding_rule(mut self, feeds: bool) -> Self {
        self.block_feeds_rule = feeds;
        self
    }

    /// Same rule and initializer at another horizon.
    pub fn at_horizon(&self, horizon: usize) -> Result<Self> {
        Ok(Self::with_initializer(self.rule, horizon, self.initializer)?
            .with_block_feeding_rule(self.block_feeds_rule))
    }

    /// Block length, or 0 without an initializer.
    pub fn block_length(&self) -> usize {
        self.initializer.map_or(0, |b| b.length())
    }

    /// True when the adaptive phase ignores block-phase responses.
    pub fn restarts_after_block(&self) -> bool {
        !self.block_feeds_rule && self.block_length() > 0
    }

    /// Probability that subject `state.i + 1` is assigned to arm 1.
    ///
    /// Inside the block phase the exact marginal block probability is used;
    /// afterwards the adaptive rule applies. For designs that restart after
    /// the block, `state` must already exclude block-phase subjects after the
    /// block; see [`DesignSpec::phase_probability`].
    pub fn allocation_probability(&self, state: &TrialState) -> f64 {
        match self.initializer {
            Some(b) if state.i < b.length() => b.probability(state),
            _ => self.rule.probability(state),
        }
    }

    /// Allocation probability from the full state and the state at the end of
    /// the block phase. Handles both block modes.
    pub fn phase_probability(&self, state: &TrialState, block_end: &TrialState) -> f64 {
        if state.i < self.block_length() || !self.restarts_after_block() {
            return self.allocation_probability(state);
        }
        let adaptive = TrialState {
            i: state.i - block_end.i,
            s1: state.s1 - block_end.s1,
            s2: state.s2 - block_end.s2,
            n1: state.n1 - block_end.n1,
        };
        self.rule.probability(&adaptive)
    }

    /// Record one subject's arm and response.
    pub fn advance(&self, state: TrialState, arm: Arm, success: bool) -> Result<TrialState> {
        if state.i >= self.horizon {
            return Err(Error::HorizonExceeded {
                horizon: self.horizon,
            });
        }
        Ok(state.step(arm, success))
    }

    /// Response-independent allocation: the whole trial is one balanced block.
    pub fn is_response_independent(&self) -> bool {
        matches!(self.initializer, Some(b) if b.length() == self.horizon)
    }

    pub fn label(&self) -> String {
        match self.initializer {
            Some(b) if self.block_feeds_rule => format!("{}+block{}", self.rule.name(), b.length()),
            Some(b) => format!("{}+block{}/restart", self.rule.name(), b.length()),
            None => self.rule.name(),
        }
    }
}

/// Simulate one trial with replicate index 0.
pub fn simulate_trial(design: &DesignSpec, p: &ProbPair, seed: u64) -> Outcome {
    simulate_replicate(design, p, seed, 0)
}

/// Simulate replicate `trial` of the design; each subject draws from its own
/// counter-addressed stream, so results do not depend on evaluation order.
pub fn simulate_replicate(design: &DesignSpec, p: &ProbPair, seed: u64, trial: u64) -> Outcome {
    let mut stream = SubjectStream::new(seed, trial);
    let mut state = TrialState::default();
    let mut block_end = TrialState::default();
    for subject in 0..design.horizon {
        if subject == design.block_length() {
            block_end = state;
        }
        let [u_arm, u_resp] = stream.uniforms(subject as u64);
        let arm = if u_arm < design.phase_probability(&state, &block_end) {
            Arm::One
        } else {
            Arm::Two
        };
        let success = u_resp < p.get(arm);
        state = state.step(arm, success);
    }
    state.into()
}
