//! Exact terminal-outcome laws by forward dynamic programming.
//!
//! Every supported rule allocates from `(i, s1, s2, n1)` alone, so paths are
//! merged on that summary and the terminal law costs `O(n^4)` operations.
//!
//! Because allocation never depends on `p`, the terminal law factorizes as
//! `P_p(o) = c(o) * p1^s1 (1-p1)^(n1-s1) * p2^s2 (1-p2)^(n2-s2)` where `c(o)`
//! sums allocation-probability products over the paths ending at `o`.
//! [`PathKernel`] stores `ln c(o)` once per design; the law at any `p` is then
//! an exponential tilt of it.

use serde::{Deserialize, Serialize};

use crate::designs::{Arm, DesignSpec, Outcome, ProbPair, TrialState};
use crate::error::{Error, Result};

/// Masses below this are dropped from a [`JointDist`].
pub const PRUNE_BELOW: f64 = 1e-300;

/// Compensated (Kahan) sum.
pub fn kahan_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Dense ordering of terminal outcomes: by `n1`, then `s1`, then `s2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutcomeLayout {
    n: usize,
    offsets: Vec<usize>,
}

impl OutcomeLayout {
    pub fn new(n: usize) -> Self {
        let mut offsets = Vec::with_capacity(n + 2);
        let mut acc = 0;
        for n1 in 0..=n {
            offsets.push(acc);
            acc += (n1 + 1) * (n - n1 + 1);
        }
        offsets.push(acc);
        OutcomeLayout { n, offsets }
    }

    pub fn horizon(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.offsets[self.n + 1]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, s1: usize, s2: usize, n1: usize) -> usize {
        self.offsets[n1] + s1 * (self.n - n1 + 1) + s2
    }

    pub fn index_of(&self, o: &Outcome) -> usize {
        self.index(o.s1, o.s2, o.n1)
    }

    /// Index range holding all outcomes with the given `n1`.
    pub fn slice_range(&self, n1: usize) -> std::ops::Range<usize> {
        self.offsets[n1]..self.offsets[n1 + 1]
    }

    /// All outcomes in layout order.
    pub fn outcomes(&self) -> impl Iterator<Item = Outcome> + '_ {
        let n = self.n;
        (0..=n).flat_map(move |n1| {
            (0..=n1).flat_map(move |s1| (0..=n - n1).map(move |s2| Outcome { s1, s2, n1, n }))
        })
    }
}

/// Forward recursion over `(i, s1, s2, n1)` with response weights
/// `resp[arm][success]`. Returns terminal weights in layout order.
fn propagate(design: &DesignSpec, resp: [[f64; 2]; 2]) -> Vec<f64> {
    if design.restarts_after_block() && design.block_length() < design.horizon {
        return propagate_restarted(design, resp);
    }
    let n = design.horizon;
    let m = n + 1;
    let cube = |n1: usize, s1: usize, s2: usize| (n1 * m + s1) * m + s2;
    let mut cur = vec![0.0; m * m * m];
    let mut next = vec![0.0; m * m * m];
    cur[0] = 1.0;
    for i in 0..n {
        next.iter_mut().for_each(|x| *x = 0.0);
        for n1 in 0..=i {
            for s1 in 0..=n1 {
                for s2 in 0..=(i - n1) {
                    let w = cur[cube(n1, s1, s2)];
                    if w == 0.0 {
                        continue;
                    }
                    let state = TrialState { i, s1, s2, n1 };
                    let q = design.allocation_probability(&state);
                    if q > 0.0 {
                        let w1 = w * q;
                        next[cube(n1 + 1, s1 + 1, s2)] += w1 * resp[0][1];
                        next[cube(n1 + 1, s1, s2)] += w1 * resp[0][0];
                    }
                    if q < 1.0 {
                        let w2 = w * (1.0 - q);
                        next[cube(n1, s1, s2 + 1)] += w2 * resp[1][1];
                        next[cube(n1, s1, s2)] += w2 * resp[1][0];
                    }
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    let layout = OutcomeLayout::new(n);
    layout
        .outcomes()
        .map(|o| cur[cube(o.n1, o.s1, o.s2)])
        .collect()
}

/// The block phase and a fresh adaptive phase are independent given the
/// block's composition, so the terminal law is their convolution.
fn propagate_restarted(design: &DesignSpec, resp: [[f64; 2]; 2]) -> Vec<f64> {
    let (n, m) = (design.horizon, design.block_length());
    let block = DesignSpec::with_initializer(design.rule, m, design.initializer).expect("valid block design");
    let adaptive = DesignSpec::new(design.rule, n - m).expect("valid adaptive design");
    let (lb, la, lo) = (OutcomeLayout::new(m), OutcomeLayout::new(n - m), OutcomeLayout::new(n));
    let wb = propagate(&block, resp);
    let wa = propagate(&adaptive, resp);
    let mut out = vec![0.0; lo.len()];
    for (ob, &b) in lb.outcomes().zip(&wb) {
        if b == 0.0 {
            continue;
        }
        for (oa, &a) in la.outcomes().zip(&wa) {
            if a != 0.0 {
                out[lo.index(ob.s1 + oa.s1, ob.s2 + oa.s2, ob.n1 + oa.n1)] += a * b;
            }
        }
    }
    out
}

/// Exact law of the terminal outcome for a design and success probabilities.
#[derive(Debug, Clone)]
pub struct JointDist {
    design: DesignSpec,
    p: ProbPair,
    layout: OutcomeLayout,
    mass: Vec<f64>,
}

/// Terminal law by forward dynamic programming at `p`.
pub fn joint_distribution(design: &DesignSpec, p: &ProbPair) -> JointDist {
    let resp = [[1.0 - p.p1(), p.p1()], [1.0 - p.p2(), p.p2()]];
    let mass = propagate(design, resp);
    JointDist::from_masses(*design, *p, mass)
}

impl JointDist {
    fn from_masses(design: DesignSpec, p: ProbPair, mut mass: Vec<f64>) -> Self {
        for m in mass.iter_mut() {
            if *m < PRUNE_BELOW {
                *m = 0.0;
            }
        }
        JointDist {
            layout: OutcomeLayout::new(design.horizon),
            design,
            p,
            mass,
        }
    }

    pub fn design(&self) -> &DesignSpec {
        &self.design
    }

    pub fn p(&self) -> &ProbPair {
        &self.p
    }

    pub fn horizon(&self) -> usize {
        self.design.horizon
    }

    pub fn layout(&self) -> &OutcomeLayout {
        &self.layout
    }

    /// Masses in layout order, zeros included.
    pub fn dense(&self) -> &[f64] {
        &self.mass
    }

    pub fn prob(&self, o: &Outcome) -> f64 {
        if o.n != self.horizon() || o.n1 > o.n || o.s1 > o.n1 || o.s2 > o.n2() {
            return 0.0;
        }
        self.mass[self.layout.index_of(o)]
    }

    /// Outcomes with positive mass, in layout order.
    pub fn iter(&self) -> impl Iterator<Item = (Outcome, f64)> + '_ {
        self.layout
            .outcomes()
            .zip(self.mass.iter().copied())
            .filter(|(_, m)| *m > 0.0)
    }

    pub fn support_size(&self) -> usize {
        self.mass.iter().filter(|m| **m > 0.0).count()
    }

    pub fn total_mass(&self) -> f64 {
        kahan_sum(self.mass.iter().copied())
    }

    /// Rebuild from explicit `(outcome, mass)` rows, e.g. after parsing.
    pub fn from_rows(
        design: DesignSpec,
        p: ProbPair,
        rows: impl IntoIterator<Item = (Outcome, f64)>,
    ) -> Result<Self> {
        let layout = OutcomeLayout::new(design.horizon);
        let mut mass = vec![0.0; layout.len()];
        for (o, m) in rows {
            if o.n != design.horizon {
                return Err(Error::InvalidOutcome(format!(
                    "outcome horizon {} does not match design horizon {}",
                    o.n, design.horizon
                )));
            }
            Outcome::new(o.s1, o.s2, o.n1, o.n)?;
            mass[layout.index_of(&o)] = m;
        }
        Ok(JointDist {
            design,
            p,
            layout,
            mass,
        })
    }
}

/// Exact law of `N1(n)`, indexed by `n1 = 0..=n`.
pub fn marginal_n1(d: &JointDist) -> Vec<f64> {
    (0..=d.horizon())
        .map(|n1| kahan_sum(d.mass[d.layout.slice_range(n1)].iter().copied()))
        .collect()
}

/// Conditional law of `(S1, S2)` given `N1 = n1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CondDist {
    n: usize,
    n1: usize,
    /// Row-major over `s1 = 0..=n1`, `s2 = 0..=n - n1`.
    mass: Vec<f64>,
}

/// `P(S1 = s1, S2 = s2 | N1 = n1)` from a joint law.
pub fn conditional_distribution(d: &JointDist, n1: usize) -> Result<CondDist> {
    if n1 > d.horizon() {
        return Err(Error::ZeroProbabilityCondition { n1 });
    }
    let slice = &d.mass[d.layout.slice_range(n1)];
    CondDist::normalized(d.horizon(), n1, slice.to_vec())
}

impl CondDist {
    fn normalized(n: usize, n1: usize, mut mass: Vec<f64>) -> Result<Self> {
        let total = kahan_sum(mass.iter().copied());
        if !(total > 0.0) {
            return Err(Error::ZeroProbabilityCondition { n1 });
        }
        mass.iter_mut().for_each(|m| *m /= total);
        Ok(CondDist { n, n1, mass })
    }

    pub fn horizon(&self) -> usize {
        self.n
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n - self.n1
    }

    pub fn prob(&self, s1: usize, s2: usize) -> f64 {
        if s1 > self.n1 || s2 > self.n2() {
            return 0.0;
        }
        self.mass[s1 * (self.n2() + 1) + s2]
    }

    /// `(s1, s2, mass)` over the full rectangle.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let w = self.n2() + 1;
        self.mass
            .iter()
            .enumerate()
            .map(move |(j, &m)| (j / w, j % w, m))
    }

    pub fn total_mass(&self) -> f64 {
        kahan_sum(self.mass.iter().copied())
    }

    /// Marginal law of `S_k` given `N1 = n1`.
    pub fn marginal(&self, arm: Arm) -> Vec<f64> {
        let len = match arm {
            Arm::One => self.n1 + 1,
            Arm::Two => self.n2() + 1,
        };
        let mut out = vec![0.0; len];
        for (s1, s2, m) in self.iter() {
            out[if arm == Arm::One { s1 } else { s2 }] += m;
        }
        out
    }

    /// Restriction to `0 < s1 < n1`, `0 < s2 < n2`, renormalized, with the
    /// removed mass. `None` when nothing remains.
    pub fn restricted_to_interior(&self) -> Option<(CondDist, f64)> {
        let (n1, n2) = (self.n1, self.n2());
        let mass: Vec<f64> = self
            .iter()
            .map(|(s1, s2, m)| {
                if s1 > 0 && s1 < n1 && s2 > 0 && s2 < n2 {
                    m
                } else {
                    0.0
                }
            })
            .collect();
        let kept = kahan_sum(mass.iter().copied());
        let excluded = (1.0 - kept).max(0.0);
        CondDist::normalized(self.n, self.n1, mass)
            .ok()
            .map(|c| (c, excluded))
    }
}

/// Conditional mean and covariance of the success fractions `(s1/n1, s2/n2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CondMoments {
    pub mean: [f64; 2],
    pub covariance: [[f64; 2]; 2],
}

/// Moments of `(s1/n1, s2/(n - n1))` under a conditional law.
pub fn conditional_moments(c: &CondDist) -> Result<CondMoments> {
    if c.n1 == 0 {
        return Err(Error::DegenerateArm { arm: 1 });
    }
    if c.n2() == 0 {
        return Err(Error::DegenerateArm { arm: 2 });
    }
    let (n1, n2) = (c.n1 as f64, c.n2() as f64);
    let points: Vec<_> = c
        .iter()
        .map(|(s1, s2, m)| (s1 as f64 / n1, s2 as f64 / n2, m))
        .collect();
    Ok(fraction_moments(&points))
}

/// Weighted mean/covariance of `(x, y)` pairs; weights need not be normalized.
fn fraction_moments(points: &[(f64, f64, f64)]) -> CondMoments {
    let (mut w, mut mx, mut my) = (0.0, 0.0, 0.0);
    for &(x, y, m) in points {
        w += m;
        mx += m * x;
        my += m * y;
    }
    mx /= w;
    my /= w;
    let (mut vxx, mut vxy, mut vyy) = (0.0, 0.0, 0.0);
    for &(x, y, m) in points {
        let (dx, dy) = (x - mx, y - my);
        vxx += m * dx * dx;
        vxy += m * dx * dy;
        vyy += m * dy * dy;
    }
    CondMoments {
        mean: [mx, my],
        covariance: [[vxx / w, vxy / w], [vxy / w, vyy / w]],
    }
}

/// Smallest `s` whose conditional CDF for arm `k` reaches `z`.
pub fn conditional_s_quantile(c: &CondDist, arm: Arm, z: f64) -> usize {
    lower_quantile(&c.marginal(arm), z)
}

/// Smallest index whose cumulative mass reaches `z` (relative to the total).
/// Falls back to the last positive-mass index when rounding leaves the
/// cumulative sum short of `z`.
pub(crate) fn lower_quantile(masses: &[f64], z: f64) -> usize {
    let total: f64 = masses.iter().sum();
    let target = z * total;
    let mut acc = 0.0;
    let mut last = 0;
    for (s, &m) in masses.iter().enumerate() {
        if m > 0.0 {
            last = s;
            acc += m;
            if acc >= target * (1.0 - 1e-12) && acc > 0.0 {
                return s;
            }
        }
    }
    last
}

/// `ln c(o)` for every terminal outcome of a design, where `c(o)` is the
/// allocation-only path weight. The terminal law at any `p` is an
/// exponential tilt of this table.
#[derive(Debug, Clone)]
pub struct PathKernel {
    design: DesignSpec,
    layout: OutcomeLayout,
    ln_weight: Vec<f64>,
}

impl PathKernel {
    pub fn new(design: &DesignSpec) -> Self {
        // Propagate at p = (1/2, 1/2) so intermediate masses stay probabilities,
        // then undo the 2^-n response factor in log space.
        let half = propagate(design, [[0.5, 0.5], [0.5, 0.5]]);
        let shift = design.horizon as f64 * std::f64::consts::LN_2;
        let ln_weight = half
            .into_iter()
            .map(|m| if m > 0.0 { m.ln() + shift } else { f64::NEG_INFINITY })
            .collect();
        PathKernel {
            design: *design,
            layout: OutcomeLayout::new(design.horizon),
            ln_weight,
        }
    }

    pub fn design(&self) -> &DesignSpec {
        &self.design
    }

    pub fn horizon(&self) -> usize {
        self.design.horizon
    }

    pub fn layout(&self) -> &OutcomeLayout {
        &self.layout
    }

    pub fn ln_weight(&self, o: &Outcome) -> f64 {
        self.ln_weight[self.layout.index_of(o)]
    }

    pub fn is_reachable(&self, o: &Outcome) -> bool {
        self.ln_weight(o) > f64::NEG_INFINITY
    }

    /// Log-weights for the `N1 = n1` slice, row-major in `(s1, s2)`.
    pub fn slice(&self, n1: usize) -> &[f64] {
        &self.ln_weight[self.layout.slice_range(n1)]
    }

    /// Terminal law at `p` as a tilt of the kernel.
    pub fn joint(&self, p: &ProbPair) -> JointDist {
        let lp = LogProbs::new(p);
        let mass = self
            .layout
            .outcomes()
            .zip(self.ln_weight.iter())
            .map(|(o, &lw)| (lw + lp.ln_likelihood(&o)).exp())
            .collect();
        JointDist::from_masses(self.design, *p, mass)
    }

    /// Conditional law given `N1 = n1` at `p`.
    pub fn conditional(&self, p: &ProbPair, n1: usize) -> Result<CondDist> {
        if n1 > self.horizon() {
            return Err(Error::ZeroProbabilityCondition { n1 });
        }
        let fam = self.family(n1);
        let w = fam.weights(p);
        CondDist::normalized(self.horizon(), n1, w)
    }

    /// The conditional exponential family for one `n1` slice.
    pub fn family(&self, n1: usize) -> ConditionalFamily<'_> {
        ConditionalFamily {
            n1,
            n2: self.horizon() - n1,
            ln_weight: self.slice(n1),
        }
    }
}

/// Precomputed `ln p_k`, `ln(1 - p_k)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogProbs {
    lp: [f64; 2],
    lq: [f64; 2],
}

impl LogProbs {
    pub(crate) fn new(p: &ProbPair) -> Self {
        LogProbs {
            lp: [p.p1().ln(), p.p2().ln()],
            lq: [(-p.p1()).ln_1p(), (-p.p2()).ln_1p()],
        }
    }

    fn ln_likelihood(&self, o: &Outcome) -> f64 {
        let (s1, s2, n1, n2) = (o.s1 as f64, o.s2 as f64, o.n1 as f64, o.n2() as f64);
        s1 * self.lp[0] + (n1 - s1) * self.lq[0] + s2 * self.lp[1] + (n2 - s2) * self.lq[1]
    }
}

/// Law of `(S1, S2)` given `N1 = n1` as a two-parameter exponential family:
/// `P(s | n1) ∝ c(s, n1) p1^s1 (1-p1)^(n1-s1) p2^s2 (1-p2)^(n2-s2)`.
#[derive(Debug, Clone, Copy)]
pub struct ConditionalFamily<'a> {
    n1: usize,
    n2: usize,
    ln_weight: &'a [f64],
}

impl ConditionalFamily<'_> {
    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn is_reachable(&self) -> bool {
        self.ln_weight.iter().any(|w| *w > f64::NEG_INFINITY)
    }

    /// Unnormalized masses at `p`, scaled so the largest is 1.
    pub fn weights(&self, p: &ProbPair) -> Vec<f64> {
        let lp = LogProbs::new(p);
        let (n1, n2) = (self.n1 as f64, self.n2 as f64);
        let w = self.n2 + 1;
        let mut logs: Vec<f64> = self
            .ln_weight
            .iter()
            .enumerate()
            .map(|(j, &lw)| {
                let (s1, s2) = ((j / w) as f64, (j % w) as f64);
                lw + s1 * lp.lp[0] + (n1 - s1) * lp.lq[0] + s2 * lp.lp[1] + (n2 - s2) * lp.lq[1]
            })
            .collect();
        let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if top == f64::NEG_INFINITY {
            return vec![0.0; logs.len()];
        }
        logs.iter_mut().for_each(|x| *x = (*x - top).exp());
        logs
    }

    /// Conditional moments of the success fractions at `p`.
    pub fn moments(&self, p: &ProbPair) -> Result<CondMoments> {
        if self.n1 == 0 {
            return Err(Error::DegenerateArm { arm: 1 });
        }
        if self.n2 == 0 {
            return Err(Error::DegenerateArm { arm: 2 });
        }
        if !self.is_reachable() {
            return Err(Error::ZeroProbabilityCondition { n1: self.n1 });
        }
        let weights = self.weights(p);
        let (n1, n2, w) = (self.n1 as f64, self.n2 as f64, self.n2 + 1);
        let points: Vec<_> = weights
            .iter()
            .enumerate()
            .map(|(j, &m)| ((j / w) as f64 / n1, (j % w) as f64 / n2, m))
            .collect();
        Ok(fraction_moments(&points))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{PermutedBlockInit, Rule};

    fn design(rule: Rule, n: usize) -> DesignSpec {
        DesignSpec::new(rule, n).unwrap()
    }

    #[test]
    fn single_subject_law() {
        let d = design(Rule::Rpw { alpha: 1, beta: 1 }, 1);
        let p = ProbPair::new(0.3, 0.7).unwrap();
        let j = joint_distribution(&d, &p);
        let get = |s1, s2, n1| j.prob(&Outcome::new(s1, s2, n1, 1).unwrap());
        assert!((get(1, 0, 1) - 0.15).abs() < 1e-15);
        assert!((get(0, 0, 1) - 0.35).abs() < 1e-15);
        assert!((get(0, 1, 0) - 0.35).abs() < 1e-15);
        assert!((get(0, 0, 0) - 0.15).abs() < 1e-15);
        assert_eq!(j.support_size(), 4);
        assert_eq!(marginal_n1(&j), vec![0.5, 0.5]);
    }

    #[test]
    fn kernel_tilt_matches_direct_dp() {
        let rules = [
            Rule::Rpw { alpha: 1, beta: 1 },
            Rule::Sdd { alpha: 1, beta: 1 },
            Rule::Nad,
            Rule::OptOddsRatio,
        ];
        let p = ProbPair::new(0.83, 0.27).unwrap();
        for rule in rules {
            let d = design(rule, 12);
            let direct = joint_distribution(&d, &p);
            let tilted = PathKernel::new(&d).joint(&p);
            for (a, b) in direct.dense().iter().zip(tilted.dense()) {
                assert!((a - b).abs() <= 1e-14 + 1e-11 * a.abs(), "{rule:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn block_design_conditional_is_binomial_product() {
        let b = PermutedBlockInit::new(8).unwrap();
        let d = DesignSpec::with_initializer(Rule::Rpw { alpha: 1, beta: 1 }, 8, Some(b)).unwrap();
        let p = ProbPair::new(0.4, 0.7).unwrap();
        let j = joint_distribution(&d, &p);
        let m = marginal_n1(&j);
        assert!((m[4] - 1.0).abs() < 1e-14);
        let c = conditional_distribution(&j, 4).unwrap();
        let binom = |s: usize, p: f64| {
            let comb = [1.0, 4.0, 6.0, 4.0, 1.0][s];
            comb * p.powi(s as i32) * (1.0 - p).powi(4 - s as i32)
        };
        for (s1, s2, mass) in c.iter() {
            assert!((mass - binom(s1, 0.4) * binom(s2, 0.7)).abs() < 1e-14);
        }
        let mom = conditional_moments(&c).unwrap();
        assert!((mom.mean[0] - 0.4).abs() < 1e-14);
        assert!((mom.covariance[1][1] - 0.7 * 0.3 / 4.0).abs() < 1e-14);
        assert!(mom.covariance[0][1].abs() < 1e-14);
        assert_eq!(
            conditional_distribution(&j, 3),
            Err(Error::ZeroProbabilityCondition { n1: 3 })
        );
    }

    #[test]
    fn quantile_edges() {
        // Binomial(10, 1/2) on arm 1 via a balanced block.
        let b = PermutedBlockInit::new(20).unwrap();
        let d = DesignSpec::with_initializer(Rule::Nad, 20, Some(b)).unwrap();
        let c = PathKernel::new(&d)
            .conditional(&ProbPair::new(0.5, 0.5).unwrap(), 10)
            .unwrap();
        assert_eq!(conditional_s_quantile(&c, Arm::One, 1e-300), 0);
        assert_eq!(conditional_s_quantile(&c, Arm::One, 1.0), 10);
        assert_eq!(conditional_s_quantile(&c, Arm::One, 0.5), 5);
    }

    #[test]
    fn layout_is_consistent() {
        let l = OutcomeLayout::new(7);
        for (j, o) in l.outcomes().enumerate() {
            assert_eq!(l.index_of(&o), j);
        }
        assert_eq!(l.len(), l.outcomes().count());
    }
}
