//! Point estimation and information measures.
//!
//! Sign convention: the conditional bias is `E[p̂ | N1 = n1] - p`.
//!
//! Jacobians are reported in gradient layout, as `Λ_n Var[p̂ | N1]`: entry
//! `(k, j)` is the derivative of the `j`-th component with respect to `p_k`.
//! The Newton solver internally uses the transpose.

use serde::{Deserialize, Serialize};

use crate::designs::{Arm, DesignSpec, Outcome, ProbPair};
use crate::error::{Error, Result};
use crate::exact::{joint_distribution, marginal_n1, CondMoments, ConditionalFamily, PathKernel};

/// Lower/upper clamp for CMLE iterates.
pub const CMLE_CLAMP: f64 = 1e-6;
/// Accepted max-norm residual of the CMLE fixed-point equation.
pub const CMLE_TOLERANCE: f64 = 1e-9;
/// Residual at which Newton stops early.
const NEWTON_TARGET: f64 = 1e-13;
const MAX_NEWTON: usize = 100;
const MAX_HALVINGS: usize = 30;
const BISECTION_STEPS: usize = 80;

/// A 2×2 matrix; symmetric for every information measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InfoMatrix(pub [[f64; 2]; 2]);

impl InfoMatrix {
    pub fn diag(a: f64, b: f64) -> Self {
        InfoMatrix([[a, 0.0], [0.0, b]])
    }

    pub fn identity() -> Self {
        Self::diag(1.0, 1.0)
    }

    pub fn zero() -> Self {
        Self::diag(0.0, 0.0)
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.0[r][c]
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> f64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn transpose(&self) -> Self {
        let m = self.0;
        InfoMatrix([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn mul(&self, other: &InfoMatrix) -> Self {
        let (a, b) = (self.0, other.0);
        let mut out = [[0.0; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        InfoMatrix(out)
    }

    pub fn add(&self, other: &InfoMatrix) -> Self {
        let (a, b) = (self.0, other.0);
        InfoMatrix([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }

    pub fn sub(&self, other: &InfoMatrix) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        let a = self.0;
        InfoMatrix([[a[0][0] * s, a[0][1] * s], [a[1][0] * s, a[1][1] * s]])
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        let a = self.0;
        [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d == 0.0 || !d.is_finite() {
            return None;
        }
        let a = self.0;
        Some(InfoMatrix([
            [a[1][1] / d, -a[0][1] / d],
            [-a[1][0] / d, a[0][0] / d],
        ]))
    }

    /// Eigenvalues of the symmetric part, ascending.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let a = self.0;
        let off = 0.5 * (a[0][1] + a[1][0]);
        let mean = 0.5 * (a[0][0] + a[1][1]);
        let half_gap = (0.25 * (a[0][0] - a[1][1]).powi(2) + off * off).sqrt();
        [mean - half_gap, mean + half_gap]
    }

    pub fn max_abs_diff(&self, other: &InfoMatrix) -> f64 {
        let d = self.sub(other).0;
        d.iter().flatten().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn swapped(&self) -> Self {
        let a = self.0;
        InfoMatrix([[a[1][1], a[1][0]], [a[0][1], a[0][0]]])
    }
}

impl From<[[f64; 2]; 2]> for InfoMatrix {
    fn from(m: [[f64; 2]; 2]) -> Self {
        InfoMatrix(m)
    }
}

/// Success fractions `(s1/n1, s2/n2)` without boundary checks.
pub fn success_fractions(o: &Outcome) -> Result<[f64; 2]> {
    if o.n1 == 0 {
        return Err(Error::DegenerateArm { arm: 1 });
    }
    if o.n2() == 0 {
        return Err(Error::DegenerateArm { arm: 2 });
    }
    Ok([o.s1 as f64 / o.n1 as f64, o.s2 as f64 / o.n2() as f64])
}

/// Unconditional MLE `(s1/n1, s2/n2)`; boundary estimates are rejected.
pub fn umle(o: &Outcome) -> Result<ProbPair> {
    let f = success_fractions(o)?;
    for arm in Arm::BOTH {
        let v = f[arm.index()];
        if v <= 0.0 || v >= 1.0 {
            return Err(Error::BoundaryEstimate {
                arm: arm.index() + 1,
            });
        }
    }
    ProbPair::new(f[0], f[1])
}

/// `diag(n1 / (p1 (1 - p1)), n2 / (p2 (1 - p2)))`.
pub fn lambda_matrix(p: &ProbPair, n1: usize, n2: usize) -> InfoMatrix {
    let l = |n: usize, p: f64| n as f64 / (p * (1.0 - p));
    InfoMatrix::diag(l(n1, p.p1()), l(n2, p.p2()))
}

/// Derivative of each diagonal entry of `Λ_n` with respect to its own `p_k`.
fn lambda_derivative(p: &ProbPair, n1: usize, n2: usize) -> [f64; 2] {
    let d = |n: usize, p: f64| -(n as f64) * (1.0 - 2.0 * p) / (p * (1.0 - p)).powi(2);
    [d(n1, p.p1()), d(n2, p.p2())]
}

fn cov_matrix(m: &CondMoments) -> InfoMatrix {
    InfoMatrix(m.covariance)
}

/// Unconditional observed information: `Λ_n` at the UMLE.
pub fn unconditional_observed_info(o: &Outcome) -> Result<InfoMatrix> {
    let p = umle(o)?;
    Ok(lambda_matrix(&p, o.n1, o.n2()))
}

/// Unconditional expected information `E[Λ_N]`, with the expectation taken
/// over `0 < N1 < n` and renormalized.
pub fn unconditional_expected_info(design: &DesignSpec, p: &ProbPair) -> Result<InfoMatrix> {
    let n = design.horizon;
    let marg = marginal_n1(&joint_distribution(design, p));
    let interior: f64 = marg[1..n.max(1)].iter().sum();
    if n < 2 || !(interior > 0.0) {
        return Err(Error::AllMassDegenerate);
    }
    let mut acc = InfoMatrix::zero();
    for (n1, &w) in marg.iter().enumerate().take(n).skip(1) {
        if w > 0.0 {
            acc = acc.add(&lambda_matrix(p, n1, n - n1).scale(w / interior));
        }
    }
    Ok(acc)
}

/// Conditional quantities for one design, backed by its path kernel.
#[derive(Debug, Clone)]
pub struct ConditionalModel {
    kernel: PathKernel,
}

impl ConditionalModel {
    pub fn new(design: &DesignSpec) -> Self {
        ConditionalModel {
            kernel: PathKernel::new(design),
        }
    }

    pub fn from_kernel(kernel: PathKernel) -> Self {
        ConditionalModel { kernel }
    }

    pub fn kernel(&self) -> &PathKernel {
        &self.kernel
    }

    pub fn design(&self) -> &DesignSpec {
        self.kernel.design()
    }

    fn family(&self, n1: usize) -> Result<ConditionalFamily<'_>> {
        let n = self.kernel.horizon();
        if n1 == 0 {
            return Err(Error::DegenerateArm { arm: 1 });
        }
        if n1 >= n {
            return Err(Error::DegenerateArm { arm: 2 });
        }
        let fam = self.kernel.family(n1);
        if !fam.is_reachable() {
            return Err(Error::ZeroProbabilityCondition { n1 });
        }
        Ok(fam)
    }

    /// `E[p̂ | N1 = n1]` and `Var[p̂ | N1 = n1]` at `p`.
    pub fn moments(&self, p: &ProbPair, n1: usize) -> Result<CondMoments> {
        self.family(n1)?.moments(p)
    }

    /// `Λ_n Var[p̂ | N1] Λ_n`.
    pub fn expected_info(&self, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
        let m = self.moments(p, n1)?;
        let lam = lambda_matrix(p, n1, self.kernel.horizon() - n1);
        Ok(lam.mul(&cov_matrix(&m)).mul(&lam))
    }

    /// Conditional observed information at the UMLE: the negative Hessian of
    /// the conditional log-likelihood, `Λ Var Λ + diag(λ'_k b_k)` with
    /// `b = E[p̂ | N1] - p` and `λ'_k = ∂Λ_kk/∂p_k`, all at `p̂`.
    pub fn observed_info(&self, o: &Outcome) -> Result<InfoMatrix> {
        let p = umle(o)?;
        let m = self.moments(&p, o.n1)?;
        let lam = lambda_matrix(&p, o.n1, o.n2());
        let dl = lambda_derivative(&p, o.n1, o.n2());
        let bias = [m.mean[0] - p.p1(), m.mean[1] - p.p2()];
        let correction = InfoMatrix::diag(dl[0] * bias[0], dl[1] * bias[1]);
        Ok(lam.mul(&cov_matrix(&m)).mul(&lam).add(&correction))
    }

    /// `Λ_n^{1/2} Var[p̂ | N1] Λ_n^{1/2}`, the conditional variance of the
    /// normalized error.
    pub fn relative_efficiency(&self, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
        let m = self.moments(p, n1)?;
        let lam = lambda_matrix(p, n1, self.kernel.horizon() - n1);
        let root = InfoMatrix::diag(lam.get(0, 0).sqrt(), lam.get(1, 1).sqrt());
        Ok(root.mul(&cov_matrix(&m)).mul(&root))
    }

    /// `E[p̂ | N1 = n1] - p`.
    pub fn bias(&self, p: &ProbPair, n1: usize) -> Result<[f64; 2]> {
        let m = self.moments(p, n1)?;
        Ok([m.mean[0] - p.p1(), m.mean[1] - p.p2()])
    }

    /// `Λ_n Var[p̂ | N1] - I` (gradient layout).
    pub fn bias_jacobian(&self, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
        Ok(self.mean_jacobian(p, n1)?.sub(&InfoMatrix::identity()))
    }

    /// `Λ_n Var[p̂ | N1]`, the derivative of the conditional mean map (gradient layout).
    pub fn mean_jacobian(&self, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
        let m = self.moments(p, n1)?;
        let lam = lambda_matrix(p, n1, self.kernel.horizon() - n1);
        Ok(lam.mul(&cov_matrix(&m)))
    }

    /// Conditional MLE for an observed outcome.
    pub fn cmle(&self, o: &Outcome) -> Result<CmleResult> {
        if o.n != self.kernel.horizon() {
            return Err(Error::InvalidOutcome(format!(
                "outcome horizon {} does not match design horizon {}",
                o.n,
                self.kernel.horizon()
            )));
        }
        let target = umle(o)?;
        let fam = self.family(o.n1)?;
        solve_fixed_point(&fam, target.as_array())
    }

    /// The CMLE, or, when the conditional likelihood has no interior
    /// maximizer, its maximizer over the solver box `[c, 1 - c]^2`. That point
    /// lies on an edge of the box, where only the free coordinate satisfies
    /// its moment equation.
    pub fn cmle_or_limit(&self, o: &Outcome) -> Result<[f64; 2]> {
        match self.cmle(o) {
            Err(Error::NoInteriorSolution { .. }) => self.box_maximizer(o),
            r => r.map(|c| c.estimate.as_array()),
        }
    }

    fn box_maximizer(&self, o: &Outcome) -> Result<[f64; 2]> {
        let fam = self.family(o.n1)?;
        let target = success_fractions(o)?;
        let (lo, hi) = (CMLE_CLAMP, 1.0 - CMLE_CLAMP);
        let at = |fixed: usize, edge: f64, v: f64| {
            let mut p = [v; 2];
            p[fixed] = edge;
            p
        };
        let mut candidates = vec![[lo, lo], [lo, hi], [hi, lo], [hi, hi]];
        for fixed in 0..2 {
            for edge in [lo, hi] {
                let free = 1 - fixed;
                let root = bisect(lo, hi, |v| {
                    Ok(fam.moments(&pair(at(fixed, edge, v)))?.mean[free] - target[free])
                })?;
                candidates.extend(root.map(|v| at(fixed, edge, v)));
            }
        }
        let mut best = (f64::NEG_INFINITY, candidates[0]);
        for p in candidates {
            let ll = self.kernel.conditional(&pair(p), o.n1)?.prob(o.s1, o.s2).ln();
            if ll > best.0 {
                best = (ll, p);
            }
        }
        Ok(best.1)
    }

    /// Solve `E_p[p̂ | N1 = n1] = target` for arbitrary targets in `[0, 1]^2`.
    /// A target coordinate at 0 or 1 maps to the same boundary value, which is
    /// the limit of the conditional likelihood maximizer.
    pub fn invert_mean(&self, n1: usize, target: [f64; 2]) -> Result<[f64; 2]> {
        let fam = self.family(n1)?;
        invert_with_boundaries(&fam, target)
    }
}

/// Result of a conditional MLE solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CmleResult {
    pub estimate: ProbPair,
    pub iterations: usize,
    /// `‖E_{p̃}[p̂ | N1] - p̂_obs‖_∞`.
    pub residual: f64,
    /// `Λ_n Var[p̂ | N1]` at the solution.
    pub jacobian_at_solution: InfoMatrix,
    /// True when Newton stalled and nested bisection produced the answer.
    pub used_bisection: bool,
}

fn clamp_p(v: f64) -> f64 {
    v.clamp(CMLE_CLAMP, 1.0 - CMLE_CLAMP)
}

fn pair(v: [f64; 2]) -> ProbPair {
    ProbPair::new(v[0], v[1]).expect("clamped iterate is interior")
}

fn residual_at(fam: &ConditionalFamily<'_>, p: [f64; 2], target: [f64; 2]) -> Result<([f64; 2], CondMoments)> {
    let m = fam.moments(&pair(p))?;
    Ok(([m.mean[0] - target[0], m.mean[1] - target[1]], m))
}

fn norm(r: [f64; 2]) -> f64 {
    r[0].abs().max(r[1].abs())
}

fn solve_fixed_point(fam: &ConditionalFamily<'_>, target: [f64; 2]) -> Result<CmleResult> {
    let (n1, n2) = (fam.n1(), fam.n2());
    let mut p = [clamp_p(target[0]), clamp_p(target[1])];
    let (mut r, mut m) = residual_at(fam, p, target)?;
    let mut iterations = 1;
    let mut stalled = false;
    while norm(r) > NEWTON_TARGET && iterations < MAX_NEWTON {
        let lam = lambda_matrix(&pair(p), n1, n2);
        // True Jacobian ∂h_k/∂p_j = (Var Λ)_kj.
        let jac = InfoMatrix(m.covariance).mul(&lam);
        let Some(inv) = jac.inverse() else {
            stalled = true;
            break;
        };
        let step = inv.apply(r);
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..=MAX_HALVINGS {
            let cand = [clamp_p(p[0] - t * step[0]), clamp_p(p[1] - t * step[1])];
            let (rc, mc) = residual_at(fam, cand, target)?;
            iterations += 1;
            if norm(rc) < norm(r) {
                p = cand;
                r = rc;
                m = mc;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            stalled = true;
            break;
        }
    }
    let converged = norm(r) <= CMLE_TOLERANCE;
    let on_clamp = p.iter().any(|&v| v <= CMLE_CLAMP || v >= 1.0 - CMLE_CLAMP);
    if converged && !on_clamp {
        let lam = lambda_matrix(&pair(p), n1, n2);
        return Ok(CmleResult {
            estimate: pair(p),
            iterations,
            residual: norm(r),
            jacobian_at_solution: lam.mul(&InfoMatrix(m.covariance)),
            used_bisection: false,
        });
    }
    let _ = stalled;
    let p = nested_bisection(fam, target)?;
    let (r, m) = residual_at(fam, p, target)?;
    if norm(r) > CMLE_TOLERANCE {
        let arm = if r[0].abs() >= r[1].abs() { 0 } else { 1 };
        return Err(Error::NoInteriorSolution {
            arm: arm + 1,
            value: p[arm],
        });
    }
    let lam = lambda_matrix(&pair(p), n1, n2);
    Ok(CmleResult {
        estimate: pair(p),
        iterations: iterations + 2 * BISECTION_STEPS * BISECTION_STEPS,
        residual: norm(r),
        jacobian_at_solution: lam.mul(&InfoMatrix(m.covariance)),
        used_bisection: true,
    })
}

fn bisect(mut lo: f64, mut hi: f64, mut f: impl FnMut(f64) -> Result<f64>) -> Result<Option<f64>> {
    let (flo, fhi) = (f(lo)?, f(hi)?);
    if flo > 0.0 || fhi < 0.0 {
        return Ok(None);
    }
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}

/// Outer bisection on `p1`; inner bisection solves the arm-2 equation for each
/// `p1`. Both components are increasing along this path because the mean
/// Jacobian has positive determinant and positive diagonal.
fn nested_bisection(fam: &ConditionalFamily<'_>, target: [f64; 2]) -> Result<[f64; 2]> {
    let (lo, hi) = (CMLE_CLAMP, 1.0 - CMLE_CLAMP);
    let no_solution = |arm: usize, value: f64| Error::NoInteriorSolution { arm, value };
    let inner = |p1: f64| -> Result<f64> {
        bisect(lo, hi, |p2| Ok(fam.moments(&pair([p1, p2]))?.mean[1] - target[1]))?
            .ok_or_else(|| no_solution(2, p1))
    };
    let p1 = bisect(lo, hi, |p1| {
        let p2 = inner(p1)?;
        Ok(fam.moments(&pair([p1, p2]))?.mean[0] - target[0])
    })?
    .ok_or_else(|| no_solution(1, target[0]))?;
    Ok([p1, inner(p1)?])
}

/// Like [`solve_fixed_point`] but with boundary targets allowed: a target
/// coordinate of 0 (or 1) pins that coordinate to 0 (or 1) and the other
/// coordinate solves its one-dimensional equation on the matching edge slice.
fn invert_with_boundaries(fam: &ConditionalFamily<'_>, target: [f64; 2]) -> Result<[f64; 2]> {
    let edge = |v: f64| v <= 0.0 || v >= 1.0;
    match (edge(target[0]), edge(target[1])) {
        (false, false) => Ok(solve_fixed_point(fam, target)?.estimate.as_array()),
        (true, true) => Ok(target),
        (fixed_first, _) => {
            let (fixed, free) = if fixed_first { (0, 1) } else { (1, 0) };
            // Restrict to the edge slice and solve the remaining scalar equation.
            let edge_value = target[fixed];
            let pin = if edge_value <= 0.0 { CMLE_CLAMP * 1e-6 } else { 1.0 - CMLE_CLAMP * 1e-6 };
            let gap = |v: f64| {
                let mut p = [0.0; 2];
                p[fixed] = pin;
                p[free] = v;
                Ok(edge_moments(fam, p, fixed, edge_value)?[free] - target[free])
            };
            let (lo, hi) = (CMLE_CLAMP, 1.0 - CMLE_CLAMP);
            // Without a root the edge likelihood is monotone on the box, so
            // its supremum sits at whichever end leaves the smaller gap.
            let solved = match bisect(lo, hi, gap)? {
                Some(v) => v,
                None if gap(lo)?.abs() <= gap(hi)?.abs() => lo,
                None => hi,
            };
            let mut out = [0.0; 2];
            out[fixed] = edge_value;
            out[free] = solved;
            Ok(out)
        }
    }
}

/// Conditional mean with the `fixed` arm restricted to its edge slice
/// (`s = 0` or `s = n_k`), the limit as that `p_k` goes to the boundary.
fn edge_moments(fam: &ConditionalFamily<'_>, p: [f64; 2], fixed: usize, edge_value: f64) -> Result<[f64; 2]> {
    let w = fam.weights(&ProbPair::new(p[0].max(f64::MIN_POSITIVE), p[1].max(f64::MIN_POSITIVE))?);
    let (n1, n2) = (fam.n1(), fam.n2());
    let cols = n2 + 1;
    let edge_s = if edge_value <= 0.0 { 0 } else if fixed == 0 { n1 } else { n2 };
    let (mut tot, mut m0, mut m1) = (0.0, 0.0, 0.0);
    for (j, &m) in w.iter().enumerate() {
        let (s1, s2) = (j / cols, j % cols);
        let s_fixed = if fixed == 0 { s1 } else { s2 };
        if s_fixed != edge_s {
            continue;
        }
        tot += m;
        m0 += m * s1 as f64 / n1 as f64;
        m1 += m * s2 as f64 / n2 as f64;
    }
    if !(tot > 0.0) {
        return Err(Error::ZeroProbabilityCondition { n1 });
    }
    Ok([m0 / tot, m1 / tot])
}

/// Conditional MLE for an outcome under a design.
pub fn cmle(design: &DesignSpec, o: &Outcome) -> Result<CmleResult> {
    ConditionalModel::new(design).cmle(o)
}

pub fn conditional_expected_info(design: &DesignSpec, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
    ConditionalModel::new(design).expected_info(p, n1)
}

pub fn conditional_observed_info(design: &DesignSpec, o: &Outcome) -> Result<InfoMatrix> {
    ConditionalModel::new(design).observed_info(o)
}

pub fn relative_efficiency(design: &DesignSpec, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
    ConditionalModel::new(design).relative_efficiency(p, n1)
}

pub fn conditional_bias(design: &DesignSpec, p: &ProbPair, n1: usize) -> Result<[f64; 2]> {
    ConditionalModel::new(design).bias(p, n1)
}

pub fn bias_jacobian(design: &DesignSpec, p: &ProbPair, n1: usize) -> Result<InfoMatrix> {
    ConditionalModel::new(design).bias_jacobian(p, n1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::{PermutedBlockInit, Rule};

    fn block(n: usize) -> DesignSpec {
        DesignSpec::with_initializer(Rule::Rpw { alpha: 1, beta: 1 }, n, Some(PermutedBlockInit::new(n).unwrap()))
            .unwrap()
    }

    #[test]
    fn umle_examples() {
        let p = umle(&Outcome::new(3, 7, 17, 29).unwrap()).unwrap();
        assert!((p.p1() - 3.0 / 17.0).abs() < 1e-15);
        assert!((p.p2() - 7.0 / 12.0).abs() < 1e-15);
        assert_eq!(umle(&Outcome::new(5, 5, 10, 20).unwrap()).unwrap().as_array(), [0.5, 0.5]);
        assert_eq!(
            umle(&Outcome::new(0, 5, 10, 20).unwrap()),
            Err(Error::BoundaryEstimate { arm: 1 })
        );
        assert_eq!(
            umle(&Outcome::new(0, 5, 0, 20).unwrap()),
            Err(Error::DegenerateArm { arm: 1 })
        );
    }

    #[test]
    fn lambda_examples() {
        let half = ProbPair::new(0.5, 0.5).unwrap();
        assert_eq!(lambda_matrix(&half, 10, 10), InfoMatrix::diag(40.0, 40.0));
        let l = lambda_matrix(&ProbPair::new(0.1, 0.9).unwrap(), 17, 12);
        assert!((l.get(0, 0) - 17.0 / 0.09).abs() < 1e-12);
        assert!((l.get(1, 1) - 12.0 / 0.09).abs() < 1e-12);
        let l2 = lambda_matrix(&ProbPair::new(0.1, 0.9).unwrap(), 34, 24);
        assert!(l2.max_abs_diff(&l.scale(2.0)) < 1e-12);
        assert_eq!(
            unconditional_observed_info(&Outcome::new(5, 5, 10, 20).unwrap()).unwrap(),
            InfoMatrix::diag(40.0, 40.0)
        );
    }

    #[test]
    fn response_independent_design_has_no_conditional_effects() {
        let d = block(12);
        let model = ConditionalModel::new(&d);
        let p = ProbPair::new(0.35, 0.8).unwrap();
        let lam = lambda_matrix(&p, 6, 6);
        assert!(model.expected_info(&p, 6).unwrap().max_abs_diff(&lam) < 1e-9);
        assert!(model.relative_efficiency(&p, 6).unwrap().max_abs_diff(&InfoMatrix::identity()) < 1e-12);
        let b = model.bias(&p, 6).unwrap();
        assert!(b[0].abs() < 1e-14 && b[1].abs() < 1e-14);
        assert!(model.bias_jacobian(&p, 6).unwrap().max_abs_diff(&InfoMatrix::zero()) < 1e-12);
        let o = Outcome::new(2, 5, 6, 12).unwrap();
        let r = model.cmle(&o).unwrap();
        assert!((r.estimate.p1() - 2.0 / 6.0).abs() < 1e-12);
        assert!((r.estimate.p2() - 5.0 / 6.0).abs() < 1e-12);
        assert_eq!(r.iterations, 1);
        let j = model.observed_info(&o).unwrap();
        assert!(j.max_abs_diff(&unconditional_observed_info(&o).unwrap()) < 1e-9);
        assert!(unconditional_expected_info(&d, &p).unwrap().max_abs_diff(&lam) < 1e-9);
    }

    #[test]
    fn observed_equals_expected_at_half() {
        let d = DesignSpec::new(Rule::Rpw { alpha: 1, beta: 1 }, 10).unwrap();
        let model = ConditionalModel::new(&d);
        let o = Outcome::new(2, 3, 4, 10).unwrap();
        let p = umle(&o).unwrap();
        assert_eq!(p.as_array(), [0.5, 0.5]);
        let j = model.observed_info(&o).unwrap();
        let i = model.expected_info(&p, 4).unwrap();
        assert!(j.max_abs_diff(&i) < 1e-12);
    }

    #[test]
    fn invert_mean_handles_edges() {
        let d = DesignSpec::new(Rule::Sdd { alpha: 1, beta: 1 }, 10).unwrap();
        let model = ConditionalModel::new(&d);
        let v = model.invert_mean(5, [0.0, 0.4]).unwrap();
        assert_eq!(v[0], 0.0);
        assert!(v[1] > 0.0 && v[1] < 1.0);
        let inner = model.invert_mean(5, [0.4, 0.6]).unwrap();
        let direct = model.cmle(&Outcome::new(2, 3, 5, 10).unwrap()).unwrap();
        assert!((inner[0] - direct.estimate.p1()).abs() < 1e-12);
    }

    #[test]
    fn matrix_helpers() {
        let m = InfoMatrix([[2.0, 1.0], [1.0, 2.0]]);
        let ev = m.eigenvalues();
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] - 3.0).abs() < 1e-15);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).max_abs_diff(&InfoMatrix::identity()) < 1e-15);
    }
}
