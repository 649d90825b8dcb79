//! Exact operating characteristics over the admissible outcome space, the
//! relative-efficiency histogram, and the fluoxetine case study.

pub mod reference;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::designs::{Arm, DesignSpec, Outcome, PermutedBlockInit, ProbPair, Rule};
use crate::error::{Error, Result};
use crate::exact::{kahan_sum, lower_quantile, marginal_n1, JointDist, OutcomeLayout};
use crate::inference::{success_fractions, umle, CmleResult, ConditionalModel};
use crate::intervals::{
    bootstrap_conditional_law, cond_exact, uncond_exact_indexed, wald_ci, wald_nominal_length,
    CiMethod, CiPair, CiSpec, FractionIndex,
};

pub use reference::ReferenceRow;

/// The five grid values used on each axis of the study tables.
pub const GRID_VALUES: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

/// Interval settings shared by every outcome of a study.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    /// Per-arm level; 0.975 gives 95% Bonferroni-simultaneous intervals.
    pub level: f64,
    pub cond_exclude_degenerate: bool,
    pub uncond_exclude_degenerate: bool,
}

impl Default for StudyConfig {
    fn default() -> Self {
        StudyConfig {
            level: 0.975,
            cond_exclude_degenerate: false,
            uncond_exclude_degenerate: false,
        }
    }
}

impl StudyConfig {
    pub fn validate(&self) -> Result<()> {
        CiSpec::exact(self.level, CiMethod::CondBootstrap).map(|_| ())
    }
}

/// Joint law restricted to outcomes with both arms' estimates interior.
#[derive(Debug, Clone)]
pub struct AdmissibleDist {
    base: JointDist,
    mass: Vec<f64>,
    excluded_mass: f64,
}

/// Restrict to `0 < s_k < n_k` for both arms and renormalize.
pub fn admissible(d: JointDist) -> Result<AdmissibleDist> {
    let layout = d.layout().clone();
    let mut mass: Vec<f64> = layout
        .outcomes()
        .zip(d.dense())
        .map(|(o, &m)| if o.is_admissible() { m } else { 0.0 })
        .collect();
    let kept = kahan_sum(mass.iter().copied());
    if !(kept > 0.0) {
        return Err(Error::AllMassDegenerate);
    }
    mass.iter_mut().for_each(|m| *m /= kept);
    let excluded_mass = (kahan_sum(d.dense().iter().copied()) - kept).clamp(0.0, 1.0);
    Ok(AdmissibleDist {
        base: d,
        mass,
        excluded_mass,
    })
}

impl AdmissibleDist {
    pub fn base(&self) -> &JointDist {
        &self.base
    }

    pub fn excluded_mass(&self) -> f64 {
        self.excluded_mass
    }

    pub fn prob(&self, o: &Outcome) -> f64 {
        if o.n != self.base.horizon() || !o.is_admissible() {
            return 0.0;
        }
        self.mass[self.base.layout().index_of(o)]
    }

    /// Outcomes with positive renormalized mass, in layout order.
    pub fn iter(&self) -> impl Iterator<Item = (Outcome, f64)> + '_ {
        self.base
            .layout()
            .outcomes()
            .zip(self.mass.iter().copied())
            .filter(|(_, m)| *m > 0.0)
    }

    /// `P(N1 = n1 | admissible)`.
    pub fn marginal_n1(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.base.horizon() + 1];
        for (o, m) in self.iter() {
            out[o.n1] += m;
        }
        out
    }
}

/// Per-outcome quantities that do not depend on the true `p`. Boundary
/// outcomes carry raw success fractions and edge-limit estimates, and no
/// intervals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutcomeEntry {
    pub outcome: Outcome,
    pub umle: [f64; 2],
    pub cmle: [f64; 2],
    pub intervals: Option<EntryIntervals>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntryIntervals {
    pub cond: CiPair,
    pub uncond: CiPair,
    pub wald: CiPair,
    /// Summed Wald length before truncation to `[0, 1]`.
    pub wald_nominal_length: f64,
}

/// Cache of CMLEs for every outcome with both arms observed, plus exact-mode
/// intervals for the admissible ones. Building it is the expensive step; evaluating a grid point only
/// reweights the cache.
#[derive(Debug, Clone)]
pub struct OutcomeTable {
    model: ConditionalModel,
    config: StudyConfig,
    entries: Vec<Option<std::result::Result<OutcomeEntry, Error>>>,
}

impl OutcomeTable {
    /// CMLEs and all three intervals.
    pub fn build(design: &DesignSpec, config: StudyConfig) -> Result<Self> {
        Self::build_with(design, config, true)
    }

    /// CMLEs only; interval metrics are then unavailable.
    pub fn build_estimates(design: &DesignSpec) -> Result<Self> {
        Self::build_with(design, StudyConfig::default(), false)
    }

    fn build_with(design: &DesignSpec, config: StudyConfig, intervals: bool) -> Result<Self> {
        config.validate()?;
        let model = ConditionalModel::new(design);
        let kernel = model.kernel();
        let layout = kernel.layout();
        let outcomes: Vec<Outcome> = layout.outcomes().collect();
        let fractions = FractionIndex::new(design.horizon);
        let cond_spec = CiSpec::exact(config.level, CiMethod::CondBootstrap)?
            .with_exclusion(config.cond_exclude_degenerate);
        let tails = cond_spec.tails();

        // Estimates first, for every outcome with both arms observed; the
        // conditional intervals read their endpoints from here.
        let cmles: Vec<Option<Result<[f64; 2]>>> = outcomes
            .par_iter()
            .map(|o| {
                (both_arms_observed(o) && kernel.is_reachable(o)).then(|| {
                    if o.is_admissible() {
                        model.cmle_or_limit(o)
                    } else {
                        model.invert_mean(o.n1, success_fractions(o)?)
                    }
                })
            })
            .collect();

        let entries = outcomes
            .par_iter()
            .zip(cmles.par_iter())
            .map(|(o, c)| {
                let c = c.as_ref()?;
                Some(c.clone().and_then(|cmle| {
                    let intervals = if intervals && o.is_admissible() {
                        let p_hat = umle(o)?;
                        Some(EntryIntervals {
                            cond: cond_exact_cached(&model, layout, &cmles, o, &cond_spec)?,
                            uncond: uncond_exact_indexed(
                                kernel,
                                &fractions,
                                &p_hat,
                                tails,
                                config.uncond_exclude_degenerate,
                            )?,
                            wald: wald_ci(o, config.level)?,
                            wald_nominal_length: wald_nominal_length(o, config.level)?,
                        })
                    } else {
                        None
                    };
                    Ok(OutcomeEntry {
                        outcome: *o,
                        umle: success_fractions(o)?,
                        cmle,
                        intervals,
                    })
                }))
            })
            .collect();
        Ok(OutcomeTable {
            model,
            config,
            entries,
        })
    }

    pub fn design(&self) -> &DesignSpec {
        self.model.design()
    }

    pub fn config(&self) -> &StudyConfig {
        &self.config
    }

    pub fn model(&self) -> &ConditionalModel {
        &self.model
    }

    pub fn layout(&self) -> &OutcomeLayout {
        self.model.kernel().layout()
    }

    /// Cached entry for a reachable outcome with both arms observed.
    pub fn entry(&self, o: &Outcome) -> Option<std::result::Result<&OutcomeEntry, &Error>> {
        if o.n != self.design().horizon {
            return None;
        }
        self.entries[self.layout().index_of(o)].as_ref().map(|r| r.as_ref())
    }

    pub fn admissible_at(&self, p: &ProbPair) -> Result<AdmissibleDist> {
        admissible(self.model.kernel().joint(p))
    }

    /// Entries with both arms observed, weighted by the joint law at `p`
    /// renormalized to that set, in layout order.
    fn observed_at(&self, p: &ProbPair) -> Result<Vec<(&OutcomeEntry, f64)>> {
        let joint = self.model.kernel().joint(p);
        let kept: Vec<(Outcome, f64)> = joint
            .iter()
            .filter(|(o, m)| *m > 0.0 && both_arms_observed(o))
            .collect();
        let total = kahan_sum(kept.iter().map(|(_, m)| *m));
        if !(total > 0.0) {
            return Err(Error::AllMassDegenerate);
        }
        kept.into_iter()
            .map(|(o, m)| self.cached(&o).map(|e| (e, m / total)))
            .collect()
    }

    fn cached(&self, o: &Outcome) -> Result<&OutcomeEntry> {
        match &self.entries[self.layout().index_of(o)] {
            Some(Ok(e)) => Ok(e),
            Some(Err(err)) => Err(err.clone()),
            None => Err(Error::InvalidOutcome(format!("no cached entry for {o:?}"))),
        }
    }

    /// Admissible entries paired with their admissible weights, layout order.
    fn weighted(&self, adm: &AdmissibleDist) -> Result<Vec<(&OutcomeEntry, f64)>> {
        adm.iter().map(|(o, w)| self.cached(&o).map(|e| (e, w))).collect()
    }

    /// One table row at `p`.
    ///
    /// Bias and variance are taken over every outcome with both arms
    /// observed, boundary estimates included; interval lengths and coverages
    /// over the admissible law.
    pub fn row(&self, p: &ProbPair) -> Result<StudyRow> {
        let adm = self.admissible_at(p)?;
        let truth = p.as_array();
        let n = self.design().horizon;

        let observed = self.observed_at(p)?;
        let mut mean_hat = [0.0; 2];
        let mut mean_tilde = [0.0; 2];
        let mut by_n1 = vec![(0.0, [0.0; 2]); n + 1];
        for &(e, w) in &observed {
            for k in 0..2 {
                mean_hat[k] += w * e.umle[k];
                mean_tilde[k] += w * e.cmle[k];
                by_n1[e.outcome.n1].1[k] += w * e.cmle[k];
            }
            by_n1[e.outcome.n1].0 += w;
        }
        let mut var_hat = 0.0;
        let mut var_tilde_within = 0.0;
        for &(e, w) in &observed {
            let (wn, sum) = by_n1[e.outcome.n1];
            for k in 0..2 {
                var_hat += w * (e.umle[k] - mean_hat[k]).powi(2);
                var_tilde_within += w * (e.cmle[k] - sum[k] / wn).powi(2);
            }
        }
        let tbias = |m: [f64; 2]| (m[0] - truth[0]).abs() + (m[1] - truth[1]).abs();

        let mut lengths = [0.0; 3];
        let mut cover = [0.0; 3];
        let mut have_intervals = true;
        for (e, w) in self.weighted(&adm)? {
            let Some(iv) = e.intervals else {
                have_intervals = false;
                break;
            };
            lengths[0] += w * iv.cond.total_length();
            lengths[1] += w * iv.uncond.total_length();
            lengths[2] += w * iv.wald_nominal_length;
            for (j, ci) in [iv.cond, iv.uncond, iv.wald].iter().enumerate() {
                if ci.covers(p) {
                    cover[j] += w;
                }
            }
        }
        let metrics = have_intervals.then_some(IntervalMetrics {
            rel_l_b: lengths[1] / lengths[0],
            rel_l_w: lengths[2] / lengths[0],
            c_cond: cover[0],
            c_b: cover[1],
            c_w: cover[2],
        });
        Ok(StudyRow {
            p1: truth[0],
            p2: truth[1],
            tbias_cmle: tbias(mean_tilde),
            tbias_umle: tbias(mean_hat),
            rel_var: var_hat / var_tilde_within,
            intervals: metrics,
            excluded_mass: adm.excluded_mass(),
        })
    }

    /// `P(conditional interval covers p | N1 = n1)` over admissible outcomes.
    pub fn conditional_coverage(&self, p: &ProbPair, n1: usize) -> Result<f64> {
        let adm = self.admissible_at(p)?;
        let (mut tot, mut hit) = (0.0, 0.0);
        for (e, w) in self.weighted(&adm)? {
            if e.outcome.n1 != n1 {
                continue;
            }
            let iv = e
                .intervals
                .ok_or_else(|| Error::InvalidSpec("table built without intervals".into()))?;
            tot += w;
            if iv.cond.covers(p) {
                hit += w;
            }
        }
        if !(tot > 0.0) {
            return Err(Error::ZeroProbabilityCondition { n1 });
        }
        Ok(hit / tot)
    }

    /// Most probable admissible `n1` at `p`.
    pub fn modal_n1(&self, p: &ProbPair) -> Result<usize> {
        let m = self.admissible_at(p)?.marginal_n1();
        Ok(m
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, &v)| if v > best.1 { (i, v) } else { best })
            .0)
    }

    /// Weighted median of `|p̃1 - p1| + |p̃2 - p2|` over admissible outcomes.
    pub fn median_abs_error(&self, p: &ProbPair) -> Result<f64> {
        let adm = self.admissible_at(p)?;
        let mut errs: Vec<(f64, f64)> = self
            .weighted(&adm)?
            .into_iter()
            .map(|(e, w)| ((e.cmle[0] - p.p1()).abs() + (e.cmle[1] - p.p2()).abs(), w))
            .collect();
        errs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut acc = 0.0;
        for (x, w) in &errs {
            acc += w;
            if acc >= 0.5 {
                return Ok(*x);
            }
        }
        Ok(errs.last().map_or(0.0, |e| e.0))
    }
}

fn both_arms_observed(o: &Outcome) -> bool {
    o.n1 > 0 && o.n2() > 0
}

/// Exact conditional interval reading endpoint estimates from the cache.
fn cond_exact_cached(
    model: &ConditionalModel,
    layout: &OutcomeLayout,
    cmles: &[Option<Result<[f64; 2]>>],
    o: &Outcome,
    spec: &CiSpec,
) -> Result<CiPair> {
    let (law, excluded) = bootstrap_conditional_law(model, o, spec.exclude_degenerate)?;
    let tails = spec.tails();
    let mut bounds = [(0.0, 0.0); 2];
    for arm in Arm::BOTH {
        let marg = law.marginal(arm);
        let mut ends = [0.0; 2];
        for (j, z) in [tails.0, tails.1].into_iter().enumerate() {
            let q = o.with_successes(arm, lower_quantile(&marg, z));
            ends[j] = match &cmles[layout.index_of(&q)] {
                Some(r) => r.clone()?[arm.index()],
                None => return cond_exact(model, o, spec),
            };
        }
        bounds[arm.index()] = (ends[0], ends[1]);
    }
    Ok(CiPair {
        bounds,
        method: CiMethod::CondBootstrap,
        conditional_replicates: None,
        excluded,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalMetrics {
    pub rel_l_b: f64,
    pub rel_l_w: f64,
    pub c_cond: f64,
    pub c_b: f64,
    pub c_w: f64,
}

/// One row of a study table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StudyRow {
    pub p1: f64,
    pub p2: f64,
    pub tbias_cmle: f64,
    pub tbias_umle: f64,
    pub rel_var: f64,
    pub intervals: Option<IntervalMetrics>,
    pub excluded_mass: f64,
}

impl StudyRow {
    /// Values in table column order, `NaN` where interval metrics are absent.
    pub fn columns(&self) -> [f64; 10] {
        let iv = self.intervals.unwrap_or(IntervalMetrics {
            rel_l_b: f64::NAN,
            rel_l_w: f64::NAN,
            c_cond: f64::NAN,
            c_b: f64::NAN,
            c_w: f64::NAN,
        });
        [
            self.p1,
            self.p2,
            self.tbias_cmle,
            self.tbias_umle,
            self.rel_var,
            iv.rel_l_b,
            iv.rel_l_w,
            iv.c_cond,
            iv.c_b,
            iv.c_w,
        ]
    }

    /// Columns rounded to the printed precision: two decimals, four for coverages.
    pub fn rounded(&self) -> [f64; 10] {
        let mut c = self.columns();
        for (j, v) in c.iter_mut().enumerate() {
            let scale = if j >= 7 { 1e4 } else { 1e2 };
            *v = (*v * scale).round() / scale;
        }
        c
    }
}

pub const COLUMN_NAMES: [&str; 10] = [
    "p1", "p2", "tbias_cmle", "tbias_umle", "rel_var", "rel_l_b", "rel_l_w", "c_cond", "c_b", "c_w",
];

/// One grid cell: its row or the error that prevented it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyCell {
    pub p: ProbPair,
    pub row: std::result::Result<StudyRow, String>,
}

/// The 5×5 grid with `(b, a)` dropped when `(a, b)` is present; 15 points
/// with `p1 >= p2`.
pub fn default_grid() -> Vec<ProbPair> {
    let mut out = Vec::new();
    for &a in &GRID_VALUES {
        for &b in &GRID_VALUES {
            if a >= b {
                out.push(ProbPair::new(a, b).expect("grid values are interior"));
            }
        }
    }
    out
}

/// Drop mirrored duplicates (keep the first of `(a, b)` / `(b, a)`).
pub fn dedup_grid(points: &[ProbPair]) -> Vec<ProbPair> {
    let mut out: Vec<ProbPair> = Vec::new();
    for p in points {
        if !out.iter().any(|q| q == p || *q == p.swapped()) {
            out.push(*p);
        }
    }
    out
}

/// Evaluate a table over a grid; cell errors are kept inline.
pub fn study_table(design: &DesignSpec, grid: &[ProbPair], config: StudyConfig) -> Result<Vec<StudyCell>> {
    let table = OutcomeTable::build(design, config)?;
    // Every supported rule treats the arms symmetrically, so mirrored
    // points repeat each other.
    let grid = dedup_grid(grid);
    Ok(grid
        .par_iter()
        .map(|p| StudyCell {
            p: *p,
            row: table.row(p).map_err(|e| e.to_string()),
        })
        .collect())
}

/// Which estimator an expectation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Estimator {
    Umle,
    Cmle,
}

/// `Σ_k |E[estimator_k] - p_k|` over the admissible law.
pub fn tbias(design: &DesignSpec, p: &ProbPair, estimator: Estimator) -> Result<f64> {
    let row = OutcomeTable::build_estimates(design)?.row(p)?;
    Ok(match estimator {
        Estimator::Umle => row.tbias_umle,
        Estimator::Cmle => row.tbias_cmle,
    })
}

/// `Tr Var[p̂] / E[Tr Var[p̃ | N1]]` over the admissible law.
pub fn rel_var(design: &DesignSpec, p: &ProbPair) -> Result<f64> {
    Ok(OutcomeTable::build_estimates(design)?.row(p)?.rel_var)
}

/// `(RelL_B, RelL_W)`.
pub fn rel_len(design: &DesignSpec, p: &ProbPair, config: StudyConfig) -> Result<(f64, f64)> {
    let m = interval_metrics(design, p, config)?;
    Ok((m.rel_l_b, m.rel_l_w))
}

/// `(C_cond, C_B, C_W)`, simultaneous coverage of both arms.
pub fn coverage(design: &DesignSpec, p: &ProbPair, config: StudyConfig) -> Result<(f64, f64, f64)> {
    let m = interval_metrics(design, p, config)?;
    Ok((m.c_cond, m.c_b, m.c_w))
}

fn interval_metrics(design: &DesignSpec, p: &ProbPair, config: StudyConfig) -> Result<IntervalMetrics> {
    OutcomeTable::build(design, config)?
        .row(p)?
        .intervals
        .ok_or_else(|| Error::InvalidSpec("interval metrics unavailable".into()))
}

/// One bar of the relative-efficiency histogram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub n1: usize,
    /// `P(N1 = n1 | 0 < N1 < n)`.
    pub probability: f64,
    /// Half the trace of the relative efficiency at `n1`.
    pub trace_half: f64,
}

/// Exact distribution of half the relative-efficiency trace over `N1`.
pub fn releff_histogram(design: &DesignSpec, p: &ProbPair) -> Result<Vec<HistogramBin>> {
    let model = ConditionalModel::new(design);
    let n = design.horizon;
    let marg = marginal_n1(&model.kernel().joint(p));
    let interior: f64 = marg[1..n.max(1)].iter().sum();
    if n < 2 || !(interior > 0.0) {
        return Err(Error::AllMassDegenerate);
    }
    (1..n)
        .filter(|&n1| marg[n1] > 0.0)
        .map(|n1| {
            Ok(HistogramBin {
                n1,
                probability: marg[n1] / interior,
                trace_half: model.relative_efficiency(p, n1)?.trace() / 2.0,
            })
        })
        .collect()
}

/// Probability that half the trace exceeds `threshold`.
pub fn prob_trace_half_above(bins: &[HistogramBin], threshold: f64) -> f64 {
    bins.iter().filter(|b| b.trace_half > threshold).map(|b| b.probability).sum()
}

/// Settings of the fluoxetine analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FluoxetineConfig {
    pub block_length: usize,
    /// Whether block-phase responses enter the urn.
    pub block_feeds_rule: bool,
    pub level: f64,
    pub cond_exclude_degenerate: bool,
    pub uncond_exclude_degenerate: bool,
}

impl Default for FluoxetineConfig {
    fn default() -> Self {
        FluoxetineConfig {
            block_length: 6,
            block_feeds_rule: false,
            level: 0.975,
            cond_exclude_degenerate: false,
            uncond_exclude_degenerate: false,
        }
    }
}

/// Published summaries for one stratum: estimates and interval endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PublishedStratum {
    pub umle: [f64; 2],
    pub cmle: [f64; 2],
    pub uncond: [(f64, f64); 2],
    pub cond: [(f64, f64); 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumReport {
    pub name: String,
    pub outcome: Outcome,
    pub design: DesignSpec,
    pub umle: ProbPair,
    pub cmle: CmleResult,
    pub cond: CiPair,
    pub uncond: CiPair,
    pub wald: CiPair,
    pub published: PublishedStratum,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluoxetineReport {
    pub config: FluoxetineConfig,
    pub strata: Vec<StratumReport>,
}

/// The two strata: (name, s1, s2, n1, n2, published values).
pub fn fluoxetine_strata() -> [(&'static str, Outcome, PublishedStratum); 2] {
    [
        (
            "shortened REML",
            Outcome::new(3, 7, 17, 29).expect("valid counts"),
            PublishedStratum {
                umle: [0.18, 0.58],
                cmle: [0.10, 0.73],
                uncond: [(0.00, 0.44), (0.29, 0.81)],
                cond: [(0.03, 0.41), (0.22, 0.88)],
            },
        ),
        (
            "normal REML",
            Outcome::new(10, 8, 18, 32).expect("valid counts"),
            PublishedStratum {
                umle: [0.56, 0.57],
                cmle: [0.53, 0.62],
                uncond: [(0.21, 0.81), (0.23, 0.82)],
                cond: [(0.27, 0.79), (0.28, 0.84)],
            },
        ),
    ]
}

/// Design used for a fluoxetine stratum of `n` patients.
pub fn fluoxetine_design(n: usize, config: &FluoxetineConfig) -> Result<DesignSpec> {
    Ok(DesignSpec::with_initializer(
        Rule::Rpw { alpha: 1, beta: 1 },
        n,
        Some(PermutedBlockInit::new(config.block_length)?),
    )?
    .with_block_feeding_rule(config.block_feeds_rule))
}

pub fn fluoxetine_case_study() -> Result<FluoxetineReport> {
    fluoxetine_case_study_with(FluoxetineConfig::default())
}

pub fn fluoxetine_case_study_with(config: FluoxetineConfig) -> Result<FluoxetineReport> {
    let strata = fluoxetine_strata()
        .into_iter()
        .map(|(name, o, published)| {
            let design = fluoxetine_design(o.n, &config)?;
            let model = ConditionalModel::new(&design);
            let p_hat = umle(&o)?;
            let cond_spec = CiSpec::exact(config.level, CiMethod::CondBootstrap)?
                .with_exclusion(config.cond_exclude_degenerate);
            let uncond_spec = CiSpec::exact(config.level, CiMethod::UncondBootstrap)?
                .with_exclusion(config.uncond_exclude_degenerate);
            Ok(StratumReport {
                name: name.to_string(),
                outcome: o,
                design,
                umle: p_hat,
                cmle: model.cmle(&o)?,
                cond: cond_exact(&model, &o, &cond_spec)?,
                uncond: crate::intervals::uncond_exact(model.kernel(), &p_hat, &uncond_spec)?,
                wald: wald_ci(&o, config.level)?,
                published,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FluoxetineReport { config, strata })
}

/// Reference table for a rule at horizon 25 or 50.
pub fn reference_table(rule: &Rule, n: usize) -> Option<&'static [ReferenceRow; 15]> {
    use reference::*;
    Some(match (rule, n) {
        (Rule::Sdd { alpha: 1, beta: 1 }, 25) => &SDD_25,
        (Rule::Sdd { alpha: 1, beta: 1 }, 50) => &SDD_50,
        (Rule::Rpw { alpha: 1, beta: 1 }, 25) => &RPW_25,
        (Rule::Rpw { alpha: 1, beta: 1 }, 50) => &RPW_50,
        (Rule::Nad, 25) => &NAD_25,
        (Rule::Nad, 50) => &NAD_50,
        (Rule::OptSimpleDifference, 25) => &OPT_SD_25,
        (Rule::OptSimpleDifference, 50) => &OPT_SD_50,
        (Rule::OptOddsRatio, 25) => &OPT_OR_25,
        (Rule::OptOddsRatio, 50) => &OPT_OR_50,
        (Rule::OptRelativeRisk, 25) => &OPT_RR_25,
        (Rule::OptRelativeRisk, 50) => &OPT_RR_50,
        _ => return None,
    })
}
