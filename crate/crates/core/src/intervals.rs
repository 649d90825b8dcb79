//! Per-arm confidence intervals: Wald, unconditional percentile bootstrap and
//! conditional bootstrap, each bootstrap in Monte Carlo or exact mode.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::designs::{simulate_replicate, Arm, DesignSpec, Outcome, ProbPair};
use crate::error::{Error, Result};
use crate::exact::{lower_quantile, CondDist, PathKernel};
use crate::inference::{umle, ConditionalModel};

/// Admissible mass below which the unconditional bootstrap gives up.
pub const MIN_ADMISSIBLE_MASS: f64 = 1e-6;
pub const MIN_MC_REPLICATES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CiMethod {
    Wald,
    UncondBootstrap,
    CondBootstrap,
}

impl CiMethod {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "wald" => Ok(CiMethod::Wald),
            "uncond" | "uncond-bootstrap" | "bootstrap" => Ok(CiMethod::UncondBootstrap),
            "cond" | "cond-bootstrap" | "conditional" => Ok(CiMethod::CondBootstrap),
            other => Err(Error::InvalidSpec(format!("unknown interval method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum CiMode {
    MonteCarlo { replicates: usize, seed: u64 },
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CiSpec {
    /// Per-arm confidence level.
    pub level: f64,
    pub method: CiMethod,
    pub mode: CiMode,
    pub min_conditional_replicates: usize,
    /// Drop bootstrap outcomes with a degenerate arm estimate before taking quantiles.
    pub exclude_degenerate: bool,
}

impl CiSpec {
    pub fn new(level: f64, method: CiMethod, mode: CiMode) -> Result<Self> {
        let spec = CiSpec {
            level,
            method,
            mode,
            min_conditional_replicates: 500,
            exclude_degenerate: true,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn exact(level: f64, method: CiMethod) -> Result<Self> {
        Self::new(level, method, CiMode::Exact)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.level > 0.0 && self.level < 1.0) {
            return Err(Error::InvalidSpec(format!("level {} is outside (0, 1)", self.level)));
        }
        if let CiMode::MonteCarlo { replicates, .. } = self.mode {
            if replicates < MIN_MC_REPLICATES {
                return Err(Error::InvalidSpec(format!(
                    "Monte Carlo mode needs at least {MIN_MC_REPLICATES} replicates, got {replicates}"
                )));
            }
        }
        Ok(())
    }

    pub fn with_min_conditional_replicates(mut self, min: usize) -> Self {
        self.min_conditional_replicates = min;
        self
    }

    pub fn with_exclusion(mut self, exclude: bool) -> Self {
        self.exclude_degenerate = exclude;
        self
    }

    /// Lower and upper tail probabilities `(α/2, 1 - α/2)`.
    pub fn tails(&self) -> (f64, f64) {
        let a = 1.0 - self.level;
        (a / 2.0, 1.0 - a / 2.0)
    }
}

/// Two-sided standard normal critical value for a per-arm level.
pub fn normal_critical_value(level: f64) -> f64 {
    Normal::standard().inverse_cdf(1.0 - (1.0 - level) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CiPair {
    /// `[(lower, upper)]` for arm 1 then arm 2.
    pub bounds: [(f64, f64); 2],
    pub method: CiMethod,
    /// Replicates matching the observed `N1` (conditional Monte Carlo only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conditional_replicates: Option<usize>,
    /// Probability mass (exact) or fraction of replicates (Monte Carlo)
    /// removed as degenerate.
    #[serde(default)]
    pub excluded: f64,
}

impl CiPair {
    pub fn arm(&self, arm: Arm) -> (f64, f64) {
        self.bounds[arm.index()]
    }

    pub fn length(&self, arm: Arm) -> f64 {
        let (lo, hi) = self.arm(arm);
        hi - lo
    }

    pub fn total_length(&self) -> f64 {
        self.length(Arm::One) + self.length(Arm::Two)
    }

    pub fn covers(&self, p: &ProbPair) -> bool {
        Arm::BOTH.iter().all(|&a| {
            let (lo, hi) = self.arm(a);
            lo <= p.get(a) && p.get(a) <= hi
        })
    }
}

/// `p̂_k ± z sqrt(p̂_k (1 - p̂_k) / n_k)`, truncated to `[0, 1]`.
pub fn wald_ci(o: &Outcome, level: f64) -> Result<CiPair> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidSpec(format!("level {level} is outside (0, 1)")));
    }
    let p = umle(o)?;
    let z = normal_critical_value(level);
    let bound = |arm: Arm| {
        let (ph, n) = (p.get(arm), o.assigned(arm) as f64);
        let half = z * (ph * (1.0 - ph) / n).sqrt();
        ((ph - half).max(0.0), (ph + half).min(1.0))
    };
    Ok(CiPair {
        bounds: [bound(Arm::One), bound(Arm::Two)],
        method: CiMethod::Wald,
        conditional_replicates: None,
        excluded: 0.0,
    })
}

/// Summed Wald length `Σ_k 2 z sqrt(p̂_k (1 - p̂_k) / n_k)` with no truncation.
pub fn wald_nominal_length(o: &Outcome, level: f64) -> Result<f64> {
    if !(level > 0.0 && level < 1.0) {
        return Err(Error::InvalidSpec(format!("level {level} is outside (0, 1)")));
    }
    let p = umle(o)?;
    let z = normal_critical_value(level);
    Ok(Arm::BOTH
        .iter()
        .map(|&arm| 2.0 * z * (p.get(arm) * (1.0 - p.get(arm)) / o.assigned(arm) as f64).sqrt())
        .sum())
}

fn keeps(o: &Outcome, exclude_degenerate: bool) -> bool {
    if o.n1 == 0 || o.n2() == 0 {
        return false;
    }
    !exclude_degenerate || o.is_admissible()
}

/// Index into a sorted sample of size `b` for tail `z`: `clamp(ceil(b z), 1, b)`, 0-based.
fn order_statistic_index(b: usize, z: f64) -> usize {
    ((b as f64 * z).ceil() as usize).clamp(1, b) - 1
}

fn sorted_quantiles(mut xs: Vec<f64>, tails: (f64, f64)) -> (f64, f64) {
    xs.sort_by(f64::total_cmp);
    let b = xs.len();
    (xs[order_statistic_index(b, tails.0)], xs[order_statistic_index(b, tails.1)])
}

fn simulate_many(design: &DesignSpec, p: &ProbPair, replicates: usize, seed: u64) -> Vec<Outcome> {
    (0..replicates as u64)
        .into_par_iter()
        .map(|t| simulate_replicate(design, p, seed, t))
        .collect()
}

/// Unconditional parametric percentile bootstrap at the UMLE.
pub fn uncond_bootstrap_ci(design: &DesignSpec, o: &Outcome, spec: &CiSpec) -> Result<CiPair> {
    spec.validate()?;
    let p = umle(o)?;
    match spec.mode {
        CiMode::Exact => uncond_exact(&PathKernel::new(design), &p, spec),
        CiMode::MonteCarlo { replicates, seed } => {
            let sims = simulate_many(design, &p, replicates, seed);
            let kept: Vec<&Outcome> = sims.iter().filter(|r| keeps(r, spec.exclude_degenerate)).collect();
            if (kept.len() as f64) < MIN_ADMISSIBLE_MASS * replicates as f64 || kept.is_empty() {
                return Err(Error::TooFewAdmissible(kept.len() as f64 / replicates as f64));
            }
            let tails = spec.tails();
            let arm_bounds = |arm: Arm| {
                let xs = kept
                    .iter()
                    .map(|r| r.successes(arm) as f64 / r.assigned(arm) as f64)
                    .collect();
                sorted_quantiles(xs, tails)
            };
            Ok(CiPair {
                bounds: [arm_bounds(Arm::One), arm_bounds(Arm::Two)],
                method: CiMethod::UncondBootstrap,
                conditional_replicates: None,
                excluded: 1.0 - kept.len() as f64 / replicates as f64,
            })
        }
    }
}

/// Distinct success fractions `s/m` for `1 <= m <= n - 1`, sorted, with a
/// lookup from `(s, m)` to rank.
#[derive(Debug, Clone)]
pub struct FractionIndex {
    values: Vec<f64>,
    rank: Vec<Vec<usize>>,
}

impl FractionIndex {
    pub fn new(n: usize) -> Self {
        let mut pairs: Vec<(usize, usize)> = (1..=n).flat_map(|m| (0..=m).map(move |s| (s, m))).collect();
        pairs.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
        let mut values = Vec::new();
        let mut rank = vec![Vec::new(); n + 1];
        for m in 0..=n {
            rank[m] = vec![0; m + 1];
        }
        let mut last: Option<(usize, usize)> = None;
        for (s, m) in pairs {
            let same = matches!(last, Some((ls, lm)) if ls * m == s * lm);
            if !same {
                values.push(s as f64 / m as f64);
                last = Some((s, m));
            }
            rank[m][s] = values.len() - 1;
        }
        FractionIndex { values, rank }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn rank(&self, s: usize, m: usize) -> usize {
        self.rank[m][s]
    }

    pub fn value(&self, r: usize) -> f64 {
        self.values[r]
    }
}

/// Exact unconditional percentile interval: quantiles of `p̂*_k` under the
/// (optionally restricted) joint law at `p_hat`.
pub fn uncond_exact(kernel: &PathKernel, p_hat: &ProbPair, spec: &CiSpec) -> Result<CiPair> {
    let fractions = FractionIndex::new(kernel.horizon());
    uncond_exact_indexed(kernel, &fractions, p_hat, spec.tails(), spec.exclude_degenerate)
}

pub(crate) fn uncond_exact_indexed(
    kernel: &PathKernel,
    fractions: &FractionIndex,
    p_hat: &ProbPair,
    tails: (f64, f64),
    exclude_degenerate: bool,
) -> Result<CiPair> {
    let joint = kernel.joint(p_hat);
    let mut hist = [vec![0.0; fractions.len()], vec![0.0; fractions.len()]];
    let mut kept = 0.0;
    for (o, m) in joint.iter() {
        if !keeps(&o, exclude_degenerate) {
            continue;
        }
        kept += m;
        hist[0][fractions.rank(o.s1, o.n1)] += m;
        hist[1][fractions.rank(o.s2, o.n2())] += m;
    }
    if !(kept >= MIN_ADMISSIBLE_MASS) {
        return Err(Error::TooFewAdmissible(kept));
    }
    let bound = |h: &Vec<f64>| {
        let norm: Vec<f64> = h.iter().map(|x| x / kept).collect();
        (
            fractions.value(lower_quantile(&norm, tails.0)),
            fractions.value(lower_quantile(&norm, tails.1)),
        )
    };
    Ok(CiPair {
        bounds: [bound(&hist[0]), bound(&hist[1])],
        method: CiMethod::UncondBootstrap,
        conditional_replicates: None,
        excluded: (1.0 - kept).max(0.0),
    })
}

/// Conditional bootstrap: quantiles of `S*_k` given `N1* = n1`, mapped through
/// the CMLE of the outcome with `s_k` replaced.
pub fn cond_bootstrap_ci(design: &DesignSpec, o: &Outcome, spec: &CiSpec) -> Result<CiPair> {
    spec.validate()?;
    let p = umle(o)?;
    let model = ConditionalModel::new(design);
    match spec.mode {
        CiMode::Exact => cond_exact(&model, o, spec),
        CiMode::MonteCarlo { replicates, seed } => {
            let sims = simulate_many(design, &p, replicates, seed);
            let matching: Vec<&Outcome> = sims.iter().filter(|r| r.n1 == o.n1).collect();
            let kept: Vec<&Outcome> = matching
                .iter()
                .copied()
                .filter(|r| keeps(r, spec.exclude_degenerate))
                .collect();
            let bc = kept.len();
            if bc < spec.min_conditional_replicates || bc == 0 {
                return Err(Error::InsufficientConditionalReplicates {
                    got: bc,
                    need: spec.min_conditional_replicates.max(1),
                });
            }
            let tails = spec.tails();
            let mut bounds = [(0.0, 0.0); 2];
            for arm in Arm::BOTH {
                let mut s: Vec<usize> = kept.iter().map(|r| r.successes(arm)).collect();
                s.sort_unstable();
                let lo = s[order_statistic_index(bc, tails.0)];
                let hi = s[order_statistic_index(bc, tails.1)];
                bounds[arm.index()] = (endpoint(&model, o, arm, lo)?, endpoint(&model, o, arm, hi)?);
            }
            Ok(CiPair {
                bounds,
                method: CiMethod::CondBootstrap,
                conditional_replicates: Some(bc),
                excluded: if matching.is_empty() {
                    0.0
                } else {
                    1.0 - bc as f64 / matching.len() as f64
                },
            })
        }
    }
}

/// The conditional law at the UMLE used by the exact conditional bootstrap,
/// with its excluded mass.
pub fn bootstrap_conditional_law(model: &ConditionalModel, o: &Outcome, exclude_degenerate: bool) -> Result<(CondDist, f64)> {
    let p = umle(o)?;
    let c = model.kernel().conditional(&p, o.n1)?;
    if exclude_degenerate {
        c.restricted_to_interior().ok_or(Error::TooFewAdmissible(0.0))
    } else {
        Ok((c, 0.0))
    }
}

/// Exact conditional bootstrap interval.
pub fn cond_exact(model: &ConditionalModel, o: &Outcome, spec: &CiSpec) -> Result<CiPair> {
    let (law, excluded) = bootstrap_conditional_law(model, o, spec.exclude_degenerate)?;
    let tails = spec.tails();
    let mut bounds = [(0.0, 0.0); 2];
    for arm in Arm::BOTH {
        let marg = law.marginal(arm);
        let lo = lower_quantile(&marg, tails.0);
        let hi = lower_quantile(&marg, tails.1);
        bounds[arm.index()] = (endpoint(model, o, arm, lo)?, endpoint(model, o, arm, hi)?);
    }
    Ok(CiPair {
        bounds,
        method: CiMethod::CondBootstrap,
        conditional_replicates: None,
        excluded,
    })
}

/// CMLE coordinate `k` of the outcome with `s_k` replaced by `s`.
fn endpoint(model: &ConditionalModel, o: &Outcome, arm: Arm, s: usize) -> Result<f64> {
    let modified = o.with_successes(arm, s);
    if modified.is_admissible() {
        return Ok(model.cmle(&modified)?.estimate.get(arm));
    }
    let target = [
        modified.s1 as f64 / modified.n1 as f64,
        modified.s2 as f64 / modified.n2() as f64,
    ];
    Ok(model.invert_mean(o.n1, target)?[arm.index()])
}

/// Dispatch on `spec.method`.
pub fn confidence_interval(design: &DesignSpec, o: &Outcome, spec: &CiSpec) -> Result<CiPair> {
    match spec.method {
        CiMethod::Wald => wald_ci(o, spec.level),
        CiMethod::UncondBootstrap => uncond_bootstrap_ci(design, o, spec),
        CiMethod::CondBootstrap => cond_bootstrap_ci(design, o, spec),
    }
}
