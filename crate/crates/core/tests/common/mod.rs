//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use condinf::{DesignSpec, ProbPair, Rule};

pub type Atom = (usize, usize, usize);

/// Per-arm counts seen by the adaptive rule.
#[derive(Clone, Copy, Default)]
struct Counts {
    s: [usize; 2],
    n: [usize; 2],
}

/// Adaptive-phase state: explicit urn contents for the urn rules, counts otherwise.
#[derive(Clone, Copy)]
struct RuleState {
    urn: [f64; 2],
    counts: Counts,
}

impl RuleState {
    fn fresh(rule: &Rule) -> Self {
        let a = match *rule {
            Rule::Rpw { alpha, .. } | Rule::Sdd { alpha, .. } => alpha as f64,
            _ => 0.0,
        };
        RuleState {
            urn: [a, a],
            counts: Counts::default(),
        }
    }

    fn prob_arm1(&self, rule: &Rule) -> f64 {
        match rule {
            Rule::Rpw { .. } | Rule::Sdd { .. } => self.urn[0] / (self.urn[0] + self.urn[1]),
            _ => {
                let est = |k: usize| (self.counts.s[k] as f64 + 0.5) / (self.counts.n[k] as f64 + 1.0);
                let (p1, p2) = (est(0), est(1));
                let (q1, q2) = (1.0 - p1, 1.0 - p2);
                let frac = match rule {
                    Rule::Nad => (p1 * q1).sqrt() / ((p1 * q1).sqrt() + (p2 * q2).sqrt()),
                    Rule::OptSimpleDifference => p1.sqrt() / (p1.sqrt() + p2.sqrt()),
                    Rule::OptOddsRatio => {
                        let r = q2 / q1 * (p2 / p1).sqrt();
                        r / (1.0 + r)
                    }
                    Rule::OptRelativeRisk => {
                        let r = q2 / q1 * (p1 / p2).sqrt();
                        r / (1.0 + r)
                    }
                    _ => unreachable!(),
                };
                frac.clamp(1e-12, 1.0 - 1e-12)
            }
        }
    }

    fn record(&mut self, rule: &Rule, arm: usize, success: bool) {
        self.counts.n[arm] += 1;
        if success {
            self.counts.s[arm] += 1;
        }
        match *rule {
            Rule::Rpw { beta, .. } => {
                let target = if success { arm } else { 1 - arm };
                self.urn[target] += beta as f64;
            }
            Rule::Sdd { beta, .. } if success => self.urn[arm] += beta as f64,
            _ => {}
        }
    }
}

/// Joint law of `(s1, s2, n1)` by walking every arm/response path.
pub fn brute_force(design: &DesignSpec, p: &ProbPair) -> HashMap<Atom, f64> {
    let mut out = HashMap::new();
    let m = design.block_length();
    let restart = !design.block_feeds_rule && m > 0;
    walk(
        design,
        p.as_array(),
        m,
        restart,
        0,
        Counts::default(),
        RuleState::fresh(&design.rule),
        1.0,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    design: &DesignSpec,
    p: [f64; 2],
    m: usize,
    restart: bool,
    i: usize,
    total: Counts,
    rule_state: RuleState,
    weight: f64,
    out: &mut HashMap<Atom, f64>,
) {
    if i == design.horizon {
        *out.entry((total.s[0], total.s[1], total.n[0])).or_insert(0.0) += weight;
        return;
    }
    let pi1 = if i < m {
        // Block phase: a uniformly random balanced sequence.
        (m / 2 - total.n[0]) as f64 / (m - i) as f64
    } else {
        rule_state.prob_arm1(&design.rule)
    };
    for arm in 0..2 {
        let pa = if arm == 0 { pi1 } else { 1.0 - pi1 };
        if pa == 0.0 {
            continue;
        }
        for success in [true, false] {
            let pr = if success { p[arm] } else { 1.0 - p[arm] };
            let mut next_total = total;
            next_total.n[arm] += 1;
            if success {
                next_total.s[arm] += 1;
            }
            let mut next_rule = rule_state;
            next_rule.record(&design.rule, arm, success);
            if restart && i + 1 == m {
                next_rule = RuleState::fresh(&design.rule);
            }
            walk(design, p, m, restart, i + 1, next_total, next_rule, weight * pa * pr, out);
        }
    }
}

/// The six allocation rules at unit urn parameters.
pub fn all_rules() -> [Rule; 6] {
    [
        Rule::Rpw { alpha: 1, beta: 1 },
        Rule::Sdd { alpha: 1, beta: 1 },
        Rule::Nad,
        Rule::OptSimpleDifference,
        Rule::OptOddsRatio,
        Rule::OptRelativeRisk,
    ]
}

pub fn pp(a: f64, b: f64) -> ProbPair {
    ProbPair::new(a, b).unwrap()
}

/// Largest per-outcome gap between the engine and path enumeration.
pub fn oracle_gap(design: &DesignSpec, p: &ProbPair) -> f64 {
    let reference = brute_force(design, p);
    let d = condinf::joint_distribution(design, p);
    let mut worst: f64 = 0.0;
    for o in d.layout().outcomes() {
        let want = reference.get(&(o.s1, o.s2, o.n1)).copied().unwrap_or(0.0);
        worst = worst.max((d.prob(&o) - want).abs());
    }
    // Atoms the engine might have missed altogether.
    for (&(s1, s2, n1), &w) in &reference {
        let o = condinf::Outcome::new(s1, s2, n1, design.horizon).unwrap();
        worst = worst.max((d.prob(&o) - w).abs());
    }
    worst
}

/// Probability points used by the oracle checks.
pub fn oracle_points() -> Vec<ProbPair> {
    vec![pp(0.5, 0.5), pp(0.2, 0.7), pp(0.9, 0.35), pp(0.05, 0.95)]
}

/// Worst oracle gap over all rules, horizons 2..=8 and [`oracle_points`].
pub fn oracle_sweep() -> f64 {
    let mut worst: f64 = 0.0;
    for rule in all_rules() {
        for n in 2..=8 {
            let design = DesignSpec::new(rule, n).unwrap();
            for p in oracle_points() {
                worst = worst.max(oracle_gap(&design, &p));
            }
        }
    }
    worst
}

/// Central-difference Jacobian of the conditional mean map, `out[r][c] = ∂h_c/∂p_r`.
pub fn fd_mean_jacobian(
    model: &condinf::ConditionalModel,
    p: &ProbPair,
    n1: usize,
    h: f64,
) -> [[f64; 2]; 2] {
    let mut out = [[0.0; 2]; 2];
    for r in 0..2 {
        let mut up = p.as_array();
        let mut down = p.as_array();
        up[r] += h;
        down[r] -= h;
        let mu = model.moments(&ProbPair::new(up[0], up[1]).unwrap(), n1).unwrap().mean;
        let md = model.moments(&ProbPair::new(down[0], down[1]).unwrap(), n1).unwrap().mean;
        for c in 0..2 {
            out[r][c] = (mu[c] - md[c]) / (2.0 * h);
        }
    }
    out
}

pub fn max_abs(m: &[[f64; 2]; 2]) -> f64 {
    m.iter().flatten().fold(0.0_f64, |a, v| a.max(v.abs()))
}

pub fn max_abs_diff(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..2 {
        for c in 0..2 {
            worst = worst.max((a[r][c] - b[r][c]).abs());
        }
    }
    worst
}

/// Twenty (design, p, n1) points at n = 10 for the Jacobian checks.
pub fn jacobian_points() -> Vec<(DesignSpec, ProbPair, usize)> {
    let ps = [pp(0.5, 0.5), pp(0.3, 0.8), pp(0.85, 0.2), pp(0.6, 0.4)];
    let n1s = [3, 5, 7, 4, 6];
    let rules = all_rules();
    (0..20)
        .map(|k| {
            let design = DesignSpec::new(rules[k % rules.len()], 10).unwrap();
            (design, ps[k % ps.len()], n1s[k % n1s.len()])
        })
        .collect()
}

/// Worst relative discrepancy between `Λ Var` and finite differences over [`jacobian_points`].
pub fn jacobian_sweep() -> f64 {
    let mut worst: f64 = 0.0;
    for (design, p, n1) in jacobian_points() {
        let model = condinf::ConditionalModel::new(&design);
        let analytic = model.mean_jacobian(&p, n1).unwrap().0;
        let fd = fd_mean_jacobian(&model, &p, n1, 1e-5);
        worst = worst.max(max_abs_diff(&analytic, &fd) / max_abs(&analytic));
    }
    worst
}

/// Conditional score covariance computed straight from the conditional law:
/// score_k = s_k/p_k - f_k/q_k minus its conditional mean.
pub fn direct_score_covariance(c: &condinf::CondDist, p: &ProbPair) -> [[f64; 2]; 2] {
    let n = [c.n1(), c.n2()];
    let p = p.as_array();
    let raw = |s: [usize; 2]| -> [f64; 2] {
        let mut v = [0.0; 2];
        for k in 0..2 {
            let f = (n[k] - s[k]) as f64;
            v[k] = s[k] as f64 / p[k] - f / (1.0 - p[k]);
        }
        v
    };
    let mut mass = 0.0;
    let mut mean = [0.0; 2];
    for (s1, s2, w) in c.iter() {
        let v = raw([s1, s2]);
        mass += w;
        mean[0] += w * v[0];
        mean[1] += w * v[1];
    }
    mean = [mean[0] / mass, mean[1] / mass];
    let mut cov = [[0.0; 2]; 2];
    for (s1, s2, w) in c.iter() {
        let v = raw([s1, s2]);
        let d = [v[0] - mean[0], v[1] - mean[1]];
        for r in 0..2 {
            for col in 0..2 {
                cov[r][col] += w * d[r] * d[col] / mass;
            }
        }
    }
    cov
}

/// Negative Hessian of `ln P(s1, s2 | n1; p)` by central differences, with
/// one Richardson step.
pub fn fd_neg_hessian(kernel: &condinf::PathKernel, o: &condinf::Outcome, p: &ProbPair) -> [[f64; 2]; 2] {
    let ll = |x: [f64; 2]| -> f64 {
        kernel
            .conditional(&ProbPair::new(x[0], x[1]).unwrap(), o.n1)
            .unwrap()
            .prob(o.s1, o.s2)
            .ln()
    };
    let hess = |h: f64| -> [[f64; 2]; 2] {
        let base = p.as_array();
        let shift = |d: [f64; 2]| [base[0] + d[0], base[1] + d[1]];
        let mut out = [[0.0; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                let mut er = [0.0; 2];
                let mut ec = [0.0; 2];
                er[r] = h;
                ec[c] = h;
                let pp_ = ll(shift([er[0] + ec[0], er[1] + ec[1]]));
                let pm = ll(shift([er[0] - ec[0], er[1] - ec[1]]));
                let mp = ll(shift([-er[0] + ec[0], -er[1] + ec[1]]));
                let mm = ll(shift([-er[0] - ec[0], -er[1] - ec[1]]));
                out[r][c] = -(pp_ - pm - mp + mm) / (4.0 * h * h);
            }
        }
        out
    };
    let coarse = hess(2e-3);
    let fine = hess(1e-3);
    let mut out = [[0.0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = (4.0 * fine[r][c] - coarse[r][c]) / 3.0;
        }
    }
    out
}

/// Outcomes at horizon `n` with both arms observed and interior success fractions.
pub fn admissible_outcomes(n: usize) -> impl Iterator<Item = condinf::Outcome> {
    (1..n).flat_map(move |n1| {
        (1..n1).flat_map(move |s1| (1..n - n1).map(move |s2| condinf::Outcome::new(s1, s2, n1, n).unwrap()))
    })
}

/// Worst score-variance and Hessian discrepancies (relative to the matrix
/// size) over admissible outcomes of every rule at horizons 6 and 10.
pub fn information_identity_sweep() -> (f64, f64) {
    let (mut var_gap, mut hess_gap) = (0.0_f64, 0.0_f64);
    for rule in all_rules() {
        for n in [6, 10] {
            let design = DesignSpec::new(rule, n).unwrap();
            let model = condinf::ConditionalModel::new(&design);
            for o in admissible_outcomes(n).step_by(3) {
                if !model.kernel().is_reachable(&o) {
                    continue;
                }
                let p_hat = condinf::umle(&o).unwrap();
                let c = model.kernel().conditional(&p_hat, o.n1).unwrap();
                let direct = direct_score_covariance(&c, &p_hat);
                let info = model.expected_info(&p_hat, o.n1).unwrap().0;
                var_gap = var_gap.max(max_abs_diff(&direct, &info) / max_abs(&info));
                let observed = model.observed_info(&o).unwrap().0;
                let fd = fd_neg_hessian(model.kernel(), &o, &p_hat);
                hess_gap = hess_gap.max(max_abs_diff(&observed, &fd) / max_abs(&observed));
            }
        }
    }
    (var_gap, hess_gap)
}

/// CMLE checks over every admissible reachable outcome: worst residual, and
/// the number of monotonicity violations in each arm's own success count.
pub fn cmle_sweep(design: &DesignSpec) -> (f64, usize, usize) {
    let n = design.horizon;
    let model = condinf::ConditionalModel::new(design);
    let mut est: HashMap<Atom, [f64; 2]> = HashMap::new();
    let mut worst: f64 = 0.0;
    let mut failures = 0;
    for o in admissible_outcomes(n) {
        if !model.kernel().is_reachable(&o) {
            continue;
        }
        match model.cmle(&o) {
            Ok(r) => {
                worst = worst.max(r.residual);
                est.insert((o.s1, o.s2, o.n1), r.estimate.as_array());
            }
            Err(_) => failures += 1,
        }
    }
    let mut violations = 0;
    for (&(s1, s2, n1), v) in &est {
        if let Some(next) = est.get(&(s1 + 1, s2, n1)) {
            if next[0] <= v[0] {
                violations += 1;
            }
        }
        if let Some(next) = est.get(&(s1, s2 + 1, n1)) {
            if next[1] <= v[1] {
                violations += 1;
            }
        }
    }
    (worst, violations, failures)
}
