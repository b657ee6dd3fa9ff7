//! Single-objective reformulations of the benchmark and their exact
//! analytic optimal-set oracles.
//!
//! Three families are covered: the weighted sum `w*f1 + (1-w)*f2`, the
//! ε-constraint problem `max f1 s.t. f2 >= eps` solved through an exterior
//! penalty `f1 + r*min{0, f2 - eps}` or the nonparameter penalty (the same
//! thing with `r = 1`), and the Tchebycheff subproblems used by the
//! decomposition engine.
//!
//! Optimal sets are described symbolically as unions of level sets
//! `D_i = {x : f(x) = (2n-k-i, i)}` — enumerating solutions is combinatorial
//! and only done by the exhaustive test oracles. Penalty parameters `eps` and
//! `r` are accepted as `f64`, hence exact dyadic rationals; the optimal-set
//! classifier converts them to [`Rational`] and compares exactly, because the
//! case table has knife-edge rows (`r = 1`, `r = r1`, `r = r2`) that
//! tolerance-based comparisons would misclassify.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::BitString;
use crate::scalar::{from_dyadic, from_int, from_ratio, Scalar};
use crate::Rational;

/// Symbolic description of an optimal solution set as a union of level sets
/// `D_i`; each level `i` is the second objective value of the set's members.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OptimalSet {
    inst: ProblemInstance,
    levels: BTreeSet<i64>,
}

impl OptimalSet {
    pub fn from_levels<I: IntoIterator<Item = i64>>(inst: ProblemInstance, levels: I) -> Self {
        let (n, k) = (inst.n() as i64, inst.k() as i64);
        let levels: BTreeSet<i64> = levels.into_iter().collect();
        assert!(!levels.is_empty(), "optimal set needs at least one level");
        for &i in &levels {
            assert!(
                (n - k..=n).contains(&i),
                "level {i} outside {}..={n}",
                n - k
            );
        }
        OptimalSet { inst, levels }
    }

    pub fn single(inst: ProblemInstance, level: i64) -> Self {
        Self::from_levels(inst, [level])
    }

    /// Every level, i.e. the whole Pareto set.
    pub fn full_front(inst: ProblemInstance) -> Self {
        let (n, k) = (inst.n() as i64, inst.k() as i64);
        Self::from_levels(inst, n - k..=n)
    }

    pub fn instance(&self) -> ProblemInstance {
        self.inst
    }

    pub fn levels(&self) -> impl Iterator<Item = i64> + '_ {
        self.levels.iter().copied()
    }

    pub fn is_full_front(&self) -> bool {
        self.levels.len() == self.inst.k() + 1
    }

    /// Objective values of the set, one per level, `f1`-descending by level
    /// order.
    pub fn values(&self) -> Vec<ObjectivePair> {
        self.levels.iter().map(|&i| self.inst.level_value(i)).collect()
    }

    pub fn contains_value(&self, v: &ObjectivePair) -> bool {
        self.levels.contains(&v.f2) && self.inst.level_value(v.f2) == *v
    }

    /// Membership test for a solution; costs no fitness evaluation from the
    /// caller's budget since callers track the objective pair themselves.
    pub fn contains(&self, x: &BitString) -> bool {
        self.contains_value(&self.inst.evaluate(x))
    }
}

impl fmt::Display for OptimalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &i in &self.levels {
            if !first {
                write!(f, " u ")?;
            }
            write!(f, "D_{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Weighted-sum reformulation `w*f1 + (1-w)*f2`.
#[derive(Clone, Copy, Debug)]
pub struct ScalarizationSpec {
    pub inst: ProblemInstance,
    pub weight: f64,
}

impl ScalarizationSpec {
    pub fn new(inst: ProblemInstance, weight: f64) -> Self {
        assert!(weight.is_finite(), "weight must be finite");
        ScalarizationSpec { inst, weight }
    }
}

/// Weighted-sum value of an already-evaluated objective pair.
pub fn weighted_value<S: Scalar>(w: S, v: ObjectivePair) -> S {
    let one = S::one();
    w.clone() * from_int::<S>(v.f1) + (one - w) * from_int::<S>(v.f2)
}

/// Weighted-sum value of `x`; the embedded benchmark evaluation is the one
/// fitness evaluation this costs.
pub fn scalarize(spec: &ScalarizationSpec, x: &BitString) -> f64 {
    weighted_value(spec.weight, spec.inst.evaluate(x))
}

/// Optimal set of the weighted-sum problem: `w > 1/2` leaves only the all-ones
/// solution, `w < 1/2` only `1^{n-k} 0^k`, and `w = 1/2` makes every Pareto
/// optimum optimal.
pub fn scalarization_optima(spec: &ScalarizationSpec) -> OptimalSet {
    let inst = spec.inst;
    let (n, k) = (inst.n() as i64, inst.k() as i64);
    if spec.weight > 0.5 {
        OptimalSet::single(inst, n - k)
    } else if spec.weight < 0.5 {
        OptimalSet::single(inst, n)
    } else {
        OptimalSet::full_front(inst)
    }
}

/// Optimal set of the ε-constraint problem `max f1 s.t. f2 >= eps`, or `None`
/// when no feasible solution exists (`eps > n`).
pub fn constrained_optima(inst: ProblemInstance, eps: f64) -> Option<OptimalSet> {
    assert!(eps.is_finite());
    let (n, k) = (inst.n() as i64, inst.k() as i64);
    let eps_q: Rational = from_dyadic(eps);
    if eps_q > Rational::from_integer(n) {
        None
    } else if eps_q <= Rational::from_integer(n - k) {
        Some(OptimalSet::single(inst, n - k))
    } else {
        Some(OptimalSet::single(inst, eps_q.ceil().to_integer()))
    }
}

/// How constraint violations are folded into the objective.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PenaltyMode {
    /// `f1 + r * min{0, f2 - eps}` with coefficient `r > 0`.
    Exterior,
    /// Adds the raw violation: `f1` when feasible, `f1 + f2 - eps` otherwise.
    /// Coincides with the exterior form at `r = 1`.
    Nonparameter,
}

/// Penalty reformulation of the ε-constraint problem.
///
/// `eps` and `r` are finite `f64`s and therefore exact dyadic rationals; all
/// downstream arithmetic on them is exact.
#[derive(Clone, Copy, Debug)]
pub struct PenaltySpec {
    pub inst: ProblemInstance,
    pub eps: f64,
    pub r: f64,
    pub mode: PenaltyMode,
}

impl PenaltySpec {
    pub fn exterior(inst: ProblemInstance, eps: f64, r: f64) -> Self {
        assert!(eps.is_finite(), "eps must be finite");
        assert!(r.is_finite() && r > 0.0, "penalty coefficient must be positive");
        PenaltySpec { inst, eps, r, mode: PenaltyMode::Exterior }
    }

    pub fn nonparameter(inst: ProblemInstance, eps: f64) -> Self {
        assert!(eps.is_finite(), "eps must be finite");
        PenaltySpec { inst, eps, r: 1.0, mode: PenaltyMode::Nonparameter }
    }

    pub fn eps_rational(&self) -> Rational {
        from_dyadic(self.eps)
    }

    pub fn r_rational(&self) -> Rational {
        from_dyadic(self.r)
    }
}

/// Penalty value of an already-evaluated objective pair.
pub fn penalty_value_of<S: Scalar>(spec: &PenaltySpec, v: ObjectivePair) -> S {
    let f1 = from_int::<S>(v.f1);
    let f2 = from_int::<S>(v.f2);
    let eps = from_dyadic::<S>(spec.eps);
    match spec.mode {
        PenaltyMode::Exterior => {
            let slack = f2 - eps;
            if slack < S::zero() {
                f1 + from_dyadic::<S>(spec.r) * slack
            } else {
                f1
            }
        }
        PenaltyMode::Nonparameter => {
            if f2 >= eps {
                f1
            } else {
                f1 + f2 - eps
            }
        }
    }
}

/// Penalty value of `x`; equals `f1(x)` exactly on feasible solutions.
pub fn penalty_value(spec: &PenaltySpec, x: &BitString) -> f64 {
    penalty_value_of(spec, spec.inst.evaluate(x))
}

/// The two penalty-coefficient thresholds separating the optimal-set regimes,
/// `r1 = (ceil(eps) - (n-k)) / (eps - (n-k))` and
/// `r2 = 1 / (eps + 1 - ceil(eps))`, as exact rationals.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PenaltyThresholds {
    pub r1: Rational,
    pub r2: Rational,
}

/// Error from [`penalty_thresholds`]: `eps` outside the open interval
/// `(n-k, n)` where the thresholds are defined.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct EpsOutOfRange {
    pub eps: f64,
    pub lo: i64,
    pub hi: i64,
}

impl fmt::Display for EpsOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "eps = {} outside the open interval ({}, {})",
            self.eps, self.lo, self.hi
        )
    }
}

impl std::error::Error for EpsOutOfRange {}

pub fn penalty_thresholds(
    inst: ProblemInstance,
    eps: f64,
) -> Result<PenaltyThresholds, EpsOutOfRange> {
    let (n, k) = (inst.n() as i64, inst.k() as i64);
    let eps_q: Rational = from_dyadic(eps);
    let lo = Rational::from_integer(n - k);
    let hi = Rational::from_integer(n);
    if eps_q <= lo || eps_q >= hi {
        return Err(EpsOutOfRange { eps, lo: n - k, hi: n });
    }
    let ceil = eps_q.ceil();
    let r1 = (ceil - lo) / (eps_q - lo);
    let r2 = Rational::one() / (eps_q + Rational::one() - ceil);
    Ok(PenaltyThresholds { r1, r2 })
}

/// Parameter regime of the exterior penalty problem; one variant per row of
/// the optimal-set case table.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PenaltyCase {
    /// `eps <= n-k`: the constraint is slack at the all-ones solution.
    EpsBelowConflictWindow,
    /// `eps > n-k`, `r < 1`: violations are cheaper than ones are valuable.
    SubunitPenalty,
    /// `eps >= n`, `r = 1`.
    UnitPenaltyEpsAboveFront,
    /// `eps >= n`, `r > 1`.
    StrongPenaltyEpsAboveFront,
    /// `eps in (n-k, n)` non-integer, `r = 1`.
    UnitPenaltyFractionalEps,
    /// `eps in (n-k, n)` integer, `r = 1`.
    UnitPenaltyIntegerEps,
    /// `eps in (n-k, n-k+1]`, `r in (1, r1)`.
    BelowLowerThresholdFirstUnit,
    /// `eps in (n-k, n-k+1]`, `r = r1`.
    AtLowerThresholdFirstUnit,
    /// `eps in (n-k+1, n)` with `r in (1, r1]`, or `eps in (n-k, n)` with
    /// `r in (r1, r2)`.
    MidBand,
    /// `eps in (n-k, n)`, `r = r2`.
    AtUpperThreshold,
    /// `eps in (n-k, n)`, `r > r2`.
    AboveUpperThreshold,
}

impl PenaltyCase {
    pub const ALL: [PenaltyCase; 11] = [
        PenaltyCase::EpsBelowConflictWindow,
        PenaltyCase::SubunitPenalty,
        PenaltyCase::UnitPenaltyEpsAboveFront,
        PenaltyCase::StrongPenaltyEpsAboveFront,
        PenaltyCase::UnitPenaltyFractionalEps,
        PenaltyCase::UnitPenaltyIntegerEps,
        PenaltyCase::BelowLowerThresholdFirstUnit,
        PenaltyCase::AtLowerThresholdFirstUnit,
        PenaltyCase::MidBand,
        PenaltyCase::AtUpperThreshold,
        PenaltyCase::AboveUpperThreshold,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            PenaltyCase::EpsBelowConflictWindow => "eps <= n-k",
            PenaltyCase::SubunitPenalty => "eps > n-k, r in (0,1)",
            PenaltyCase::UnitPenaltyEpsAboveFront => "eps >= n, r = 1",
            PenaltyCase::StrongPenaltyEpsAboveFront => "eps >= n, r > 1",
            PenaltyCase::UnitPenaltyFractionalEps => "eps in (n-k,n) non-integer, r = 1",
            PenaltyCase::UnitPenaltyIntegerEps => "eps in (n-k,n) integer, r = 1",
            PenaltyCase::BelowLowerThresholdFirstUnit => "eps in (n-k,n-k+1], r in (1,r1)",
            PenaltyCase::AtLowerThresholdFirstUnit => "eps in (n-k,n-k+1], r = r1",
            PenaltyCase::MidBand => "eps in (n-k+1,n), r in (1,r1] or eps in (n-k,n), r in (r1,r2)",
            PenaltyCase::AtUpperThreshold => "eps in (n-k,n), r = r2",
            PenaltyCase::AboveUpperThreshold => "eps in (n-k,n), r > r2",
        }
    }
}

impl fmt::Display for PenaltyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classify the parameter regime of a penalty spec. Exact rational
/// comparisons throughout.
pub fn penalty_case(spec: &PenaltySpec) -> PenaltyCase {
    let (n, k) = (spec.inst.n() as i64, spec.inst.k() as i64);
    let eps = spec.eps_rational();
    let r = spec.r_rational();
    let lo = Rational::from_integer(n - k);
    let hi = Rational::from_integer(n);
    let one = Rational::one();

    if eps <= lo {
        return PenaltyCase::EpsBelowConflictWindow;
    }
    if r < one {
        return PenaltyCase::SubunitPenalty;
    }
    if eps >= hi {
        return if r == one {
            PenaltyCase::UnitPenaltyEpsAboveFront
        } else {
            PenaltyCase::StrongPenaltyEpsAboveFront
        };
    }
    // eps in (n-k, n), r >= 1
    if r == one {
        return if eps.is_integer() {
            PenaltyCase::UnitPenaltyIntegerEps
        } else {
            PenaltyCase::UnitPenaltyFractionalEps
        };
    }
    let PenaltyThresholds { r1, r2 } =
        penalty_thresholds(spec.inst, spec.eps).expect("eps in open interval by construction");
    let first_unit = eps <= lo + one;
    if r < r1 {
        if first_unit {
            PenaltyCase::BelowLowerThresholdFirstUnit
        } else {
            PenaltyCase::MidBand
        }
    } else if r == r1 {
        if first_unit {
            PenaltyCase::AtLowerThresholdFirstUnit
        } else {
            PenaltyCase::MidBand
        }
    } else if r < r2 {
        PenaltyCase::MidBand
    } else if r == r2 {
        PenaltyCase::AtUpperThreshold
    } else {
        PenaltyCase::AboveUpperThreshold
    }
}

/// Optimal solution set of a penalty problem, as a union of levels.
pub fn penalty_optima(spec: &PenaltySpec) -> OptimalSet {
    let inst = spec.inst;
    let (n, k) = (inst.n() as i64, inst.k() as i64);
    let eps = spec.eps_rational();
    let ceil = || eps.ceil().to_integer();
    match penalty_case(spec) {
        PenaltyCase::EpsBelowConflictWindow
        | PenaltyCase::SubunitPenalty
        | PenaltyCase::BelowLowerThresholdFirstUnit => OptimalSet::single(inst, n - k),
        PenaltyCase::StrongPenaltyEpsAboveFront => OptimalSet::single(inst, n),
        PenaltyCase::UnitPenaltyEpsAboveFront => OptimalSet::full_front(inst),
        PenaltyCase::UnitPenaltyFractionalEps => OptimalSet::from_levels(inst, n - k..=ceil() - 1),
        PenaltyCase::UnitPenaltyIntegerEps => OptimalSet::from_levels(inst, n - k..=ceil()),
        PenaltyCase::AtLowerThresholdFirstUnit => OptimalSet::from_levels(inst, [n - k, ceil()]),
        PenaltyCase::MidBand => OptimalSet::single(inst, ceil() - 1),
        PenaltyCase::AtUpperThreshold => OptimalSet::from_levels(inst, [ceil() - 1, ceil()]),
        PenaltyCase::AboveUpperThreshold => OptimalSet::single(inst, ceil()),
    }
}

/// Optimal set of the exterior penalty problem.
pub fn exterior_optima(spec: &PenaltySpec) -> OptimalSet {
    assert_eq!(spec.mode, PenaltyMode::Exterior);
    penalty_optima(spec)
}

/// Optimal set of the nonparameter penalty problem; delegates to the exterior
/// classification at `r = 1`.
pub fn nonparameter_optima(inst: ProblemInstance, eps: f64) -> OptimalSet {
    penalty_optima(&PenaltySpec::nonparameter(inst, eps))
}

/// The `k+1` exterior penalty specs whose optimal sets are exactly the `k+1`
/// level sets: `eps_0 = n-k` and `eps_i = n-k+i-1/2` for `i in [1..k]`, all
/// with `r = 3`. For every half-integer eps the upper threshold is `r2 = 2`,
/// so `r = 3` clears it with margin one.
pub fn coverage_schedule(inst: ProblemInstance) -> Vec<PenaltySpec> {
    let (n, k) = (inst.n(), inst.k());
    let mut specs = Vec::with_capacity(k + 1);
    specs.push(PenaltySpec::exterior(inst, (n - k) as f64, 3.0));
    for i in 1..=k {
        specs.push(PenaltySpec::exterior(inst, (n - k + i) as f64 - 0.5, 3.0));
    }
    specs
}

/// One Tchebycheff subproblem `h_i(x) = max{w_i |f1 - z1|, (1-w_i) |f2 - z2|}`
/// with `w_i = i/k` and reference point `z`.
///
/// The reference point is a parameter because the decomposition engine
/// updates it online; the closed-form optima below apply once it has reached
/// `(n, n)`.
#[derive(Clone, Copy, Debug)]
pub struct SubproblemSpec {
    pub inst: ProblemInstance,
    pub index: usize,
    pub reference: ObjectivePair,
}

impl SubproblemSpec {
    /// Panics unless `k >= 1` and `index <= k`.
    pub fn new(inst: ProblemInstance, index: usize, reference: ObjectivePair) -> Self {
        assert!(inst.k() >= 1, "subproblems need k >= 1");
        assert!(index <= inst.k(), "subproblem index {index} exceeds k={}", inst.k());
        SubproblemSpec { inst, index, reference }
    }

    pub fn subproblem_count(&self) -> usize {
        self.inst.k() + 1
    }
}

/// Tchebycheff value of an already-evaluated objective pair.
pub fn subproblem_value_of<S: Scalar>(spec: &SubproblemSpec, v: ObjectivePair) -> S {
    let k = spec.inst.k() as i64;
    let i = spec.index as i64;
    let w1 = from_ratio::<S>(i, k);
    let w2 = from_ratio::<S>(k - i, k);
    let d1 = (from_int::<S>(v.f1) - from_int::<S>(spec.reference.f1)).abs();
    let d2 = (from_int::<S>(v.f2) - from_int::<S>(spec.reference.f2)).abs();
    let a = w1 * d1;
    let b = w2 * d2;
    if a >= b {
        a
    } else {
        b
    }
}

/// Tchebycheff value of `x`; the embedded benchmark evaluation is the one
/// fitness evaluation this costs.
pub fn subproblem_value(spec: &SubproblemSpec, x: &BitString) -> f64 {
    subproblem_value_of(spec, spec.inst.evaluate(x))
}

/// Minimizers of subproblem `i` once the reference point is `(n, n)`: the
/// level set with second objective `n - i`. For `i = 0` and `i = k` these are
/// the two extreme solutions `1^{n-k} 0^k` and `1^n`.
pub fn subproblem_optima(spec: &SubproblemSpec) -> OptimalSet {
    let n = spec.inst.n() as i64;
    assert_eq!(
        spec.reference,
        ObjectivePair::new(n, n),
        "closed-form subproblem optima require reference point (n, n)"
    );
    OptimalSet::single(spec.inst, n - spec.index as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exhaustive;
    use crate::Rational;

    fn inst(n: usize, k: usize) -> ProblemInstance {
        ProblemInstance::new(n, k)
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn scalarize_examples() {
        let p = inst(6, 3);
        // Constant (2n-k)/2 on the whole front at w = 1/2.
        let spec = ScalarizationSpec::new(p, 0.5);
        for x in ["111000", "111100", "111111", "111010"] {
            assert_eq!(scalarize(&spec, &bs(x)), 4.5);
        }
        assert_eq!(scalarize(&ScalarizationSpec::new(p, 1.0), &bs("111111")), 6.0);
        let v = scalarize(&ScalarizationSpec::new(p, 0.3), &bs("111000"));
        assert!((v - 5.1).abs() < 1e-12);
    }

    #[test]
    fn scalarization_optima_examples() {
        let p = inst(6, 3);
        let high = scalarization_optima(&ScalarizationSpec::new(p, 0.9));
        assert_eq!(high, OptimalSet::single(p, 3));
        assert_eq!(exhaustive::expand_levels(&high), vec![bs("111111")]);
        assert_eq!(high.values(), vec![ObjectivePair::new(6, 3)]);

        let low = scalarization_optima(&ScalarizationSpec::new(p, 0.1));
        assert_eq!(exhaustive::expand_levels(&low), vec![bs("111000")]);
        assert_eq!(low.values(), vec![ObjectivePair::new(3, 6)]);

        let mid = scalarization_optima(&ScalarizationSpec::new(p, 0.5));
        assert!(mid.is_full_front());
        assert_eq!(exhaustive::expand_levels(&mid).len(), 8);
    }

    #[test]
    fn scalarization_optima_match_brute_force() {
        for n in [5, 8] {
            for k in 0..=n {
                let p = inst(n, k);
                for j in 0..=10i64 {
                    let w = Rational::new(j, 10);
                    let spec = ScalarizationSpec::new(p, j as f64 / 10.0);
                    let (_, argmax) =
                        exhaustive::brute_argmax(&p, |v| weighted_value::<Rational>(w, v));
                    let expected = exhaustive::expand_levels(&scalarization_optima(&spec));
                    assert_eq!(exhaustive::sorted(argmax), exhaustive::sorted(expected));
                }
            }
        }
    }

    #[test]
    fn constrained_optima_examples() {
        let p = inst(8, 4);
        let s = constrained_optima(p, 3.0).unwrap();
        assert_eq!(s.values(), vec![ObjectivePair::new(8, 4)]);
        assert_eq!(exhaustive::expand_levels(&s), vec![BitString::ones(8)]);

        assert!(constrained_optima(p, 9.0).is_none());

        let s = constrained_optima(p, 5.25).unwrap();
        assert_eq!(s.values(), vec![ObjectivePair::new(6, 6)]);
    }

    #[test]
    fn constrained_optima_match_brute_force_feasible_max() {
        for (n, k) in [(6, 3), (8, 4), (7, 2)] {
            let p = inst(n, k);
            let grid: Vec<f64> = (0..=2 * n)
                .map(|j| j as f64 / 2.0)
                .chain([-1.5, n as f64 + 0.5])
                .collect();
            for eps in grid {
                let analytic = constrained_optima(p, eps);
                let brute = exhaustive::brute_constrained_argmax(&p, eps);
                match (analytic, brute) {
                    (None, b) => assert!(b.is_empty(), "eps={eps}"),
                    (Some(set), b) => {
                        assert_eq!(
                            exhaustive::sorted(exhaustive::expand_levels(&set)),
                            exhaustive::sorted(b),
                            "eps={eps}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn penalty_value_examples() {
        let p = inst(8, 4);
        let ext = PenaltySpec::exterior(p, 5.25, 3.0);
        assert_eq!(penalty_value(&ext, &BitString::ones(8)), 4.25);

        // Feasible solutions: penalty equals f1 exactly.
        let x = bs("11110011");
        let v = p.evaluate(&x);
        assert!(v.f2 >= 6);
        assert_eq!(penalty_value(&ext, &x), v.f1 as f64);

        let np = PenaltySpec::nonparameter(p, 5.25);
        assert_eq!(penalty_value(&np, &BitString::ones(8)), 6.75);
        let ext1 = PenaltySpec::exterior(p, 5.25, 1.0);
        assert_eq!(
            penalty_value(&np, &BitString::ones(8)),
            penalty_value(&ext1, &BitString::ones(8))
        );
    }

    #[test]
    fn nonparameter_equals_exterior_with_unit_coefficient() {
        for (n, k) in [(6, 3), (8, 4), (10, 5)] {
            let p = inst(n, k);
            for eps in [2.0, (n - k) as f64, (n - k) as f64 + 0.75, n as f64, n as f64 + 1.5] {
                let np = PenaltySpec::nonparameter(p, eps);
                let ext = PenaltySpec::exterior(p, eps, 1.0);
                exhaustive::for_each_bitstring(n, |x| {
                    assert_eq!(
                        penalty_value_of::<Rational>(&np, p.evaluate(x)),
                        penalty_value_of::<Rational>(&ext, p.evaluate(x))
                    );
                });
            }
        }
    }

    #[test]
    fn threshold_examples() {
        let p = inst(8, 4);
        let t = penalty_thresholds(p, 5.25).unwrap();
        assert_eq!(t.r1, Rational::new(8, 5));
        assert_eq!(t.r2, Rational::from_integer(4));

        let t = penalty_thresholds(p, 4.5).unwrap();
        assert_eq!(t.r1, Rational::from_integer(2));
        assert_eq!(t.r2, Rational::from_integer(2));

        let t = penalty_thresholds(p, 5.0).unwrap();
        assert_eq!(t.r1, Rational::one());
        assert_eq!(t.r2, Rational::one());

        assert!(penalty_thresholds(p, 4.0).is_err());
        assert!(penalty_thresholds(p, 8.0).is_err());
    }

    #[test]
    fn threshold_ordering_property() {
        // 1 <= r1 <= r2; both equalities hold together exactly when eps is an
        // integer. r1 = r2 alone also happens throughout the first unit
        // subinterval (n-k, n-k+1), where the two denominators coincide.
        for (n, k) in [(6, 3), (8, 4), (9, 5), (12, 7)] {
            let p = inst(n, k);
            for num in (8 * (n - k) + 1)..(8 * n) {
                let eps = num as f64 / 8.0;
                let t = penalty_thresholds(p, eps).unwrap();
                assert!(t.r1 >= Rational::one());
                assert!(t.r2 >= t.r1, "eps={eps}");
                let integer = eps.fract() == 0.0;
                let first_unit = eps < (n - k + 1) as f64;
                assert_eq!(t.r1 == Rational::one(), integer, "eps={eps}");
                assert_eq!(t.r1 == t.r2, integer || first_unit, "eps={eps}");
                assert_eq!(
                    t.r1 == Rational::one() && t.r1 == t.r2,
                    integer,
                    "eps={eps}"
                );
            }
        }
    }

    #[test]
    fn exterior_optima_examples() {
        let p = inst(8, 4);
        let high = exterior_optima(&PenaltySpec::exterior(p, 5.25, 5.0));
        assert_eq!(high, OptimalSet::single(p, 6));
        assert_eq!(high.values(), vec![ObjectivePair::new(6, 6)]);

        let weak = exterior_optima(&PenaltySpec::exterior(p, 5.25, 0.5));
        assert_eq!(exhaustive::expand_levels(&weak), vec![BitString::ones(8)]);

        let mid = exterior_optima(&PenaltySpec::exterior(p, 5.25, 2.0));
        assert_eq!(mid, OptimalSet::single(p, 5));
        assert_eq!(mid.values(), vec![ObjectivePair::new(7, 5)]);
    }

    #[test]
    fn exterior_optima_knife_edges() {
        let p = inst(8, 4);
        // In the first unit interval r1 = r2, so r = r1 classifies there; the
        // optimal set joins D_{n-k} and D_{ceil} either way.
        let spec = PenaltySpec::exterior(p, 4.5, 2.0); // r1 = r2 = 2
        assert_eq!(penalty_case(&spec), PenaltyCase::AtLowerThresholdFirstUnit);
        assert_eq!(penalty_optima(&spec), OptimalSet::from_levels(p, [4, 5]));

        let spec = PenaltySpec::exterior(p, 4.25, 4.0); // r1 = 4, r2 = 8
        assert_eq!(penalty_case(&spec), PenaltyCase::AtLowerThresholdFirstUnit);
        assert_eq!(penalty_optima(&spec), OptimalSet::from_levels(p, [4, 5]));

        // r = r2 with eps deeper in the window.
        let spec = PenaltySpec::exterior(p, 5.25, 4.0);
        assert_eq!(penalty_case(&spec), PenaltyCase::AtUpperThreshold);
        assert_eq!(penalty_optima(&spec), OptimalSet::from_levels(p, [5, 6]));

        // Integer eps inside the window: r = 1 keeps every level up to eps.
        let spec = PenaltySpec::exterior(p, 6.0, 1.0);
        assert_eq!(penalty_case(&spec), PenaltyCase::UnitPenaltyIntegerEps);
        assert_eq!(penalty_optima(&spec), OptimalSet::from_levels(p, 4..=6));
        // and any r > 1 = r1 = r2 pins the constrained level.
        let spec = PenaltySpec::exterior(p, 6.0, 1.5);
        assert_eq!(penalty_case(&spec), PenaltyCase::AboveUpperThreshold);
        assert_eq!(penalty_optima(&spec), OptimalSet::single(p, 6));

        // eps = n behaves like the high-eps rows.
        assert_eq!(
            penalty_optima(&PenaltySpec::exterior(p, 8.0, 2.0)),
            OptimalSet::single(p, 8)
        );
        assert_eq!(
            penalty_optima(&PenaltySpec::exterior(p, 8.0, 1.0)),
            OptimalSet::full_front(p)
        );
        assert_eq!(
            penalty_optima(&PenaltySpec::exterior(p, 8.0, 0.5)),
            OptimalSet::single(p, 4)
        );
    }

    #[test]
    fn nonparameter_optima_examples() {
        let p = inst(8, 4);
        assert_eq!(nonparameter_optima(p, 9.0), OptimalSet::full_front(p));
        assert_eq!(nonparameter_optima(p, 3.0), OptimalSet::single(p, 4));
        assert_eq!(
            exhaustive::expand_levels(&nonparameter_optima(p, 3.0)),
            vec![BitString::ones(8)]
        );
        let s = nonparameter_optima(p, 5.25);
        assert_eq!(s, OptimalSet::from_levels(p, [4, 5]));
        assert_ne!(Some(s), constrained_optima(p, 5.25));
    }

    #[test]
    fn coverage_schedule_examples() {
        let p = inst(6, 3);
        let specs = coverage_schedule(p);
        let eps: Vec<f64> = specs.iter().map(|s| s.eps).collect();
        assert_eq!(eps, vec![3.0, 3.5, 4.5, 5.5]);
        assert!(specs.iter().all(|s| s.r == 3.0));
        let targets: Vec<i64> = specs
            .iter()
            .map(|s| {
                let set = exterior_optima(s);
                let levels: Vec<i64> = set.levels().collect();
                assert_eq!(levels.len(), 1, "schedule target must be a single level");
                levels[0]
            })
            .collect();
        assert_eq!(targets, vec![3, 4, 5, 6]);

        for k in 0..=5 {
            assert_eq!(coverage_schedule(inst(5, k)).len(), k + 1);
        }

        let single = coverage_schedule(inst(7, 0));
        assert_eq!(single.len(), 1);
        let target = exterior_optima(&single[0]);
        assert_eq!(exhaustive::expand_levels(&target), vec![BitString::ones(7)]);
    }

    #[test]
    fn subproblem_value_examples() {
        let p = inst(6, 3);
        let z = ObjectivePair::new(6, 6);
        let h1 = SubproblemSpec::new(p, 1, z);
        assert_eq!(subproblem_value(&h1, &BitString::ones(6)), 2.0);
        assert_eq!(
            subproblem_value_of::<Rational>(&h1, ObjectivePair::new(4, 5)),
            Rational::new(2, 3)
        );
        // i = k reduces to maximizing f1.
        let hk = SubproblemSpec::new(p, 3, z);
        exhaustive::for_each_bitstring(6, |x| {
            let v = p.evaluate(x);
            assert_eq!(subproblem_value(&hk, x), (6 - v.f1) as f64);
        });
    }

    #[test]
    fn subproblem_optima_examples() {
        let p = inst(6, 3);
        let z = ObjectivePair::new(6, 6);
        let s1 = subproblem_optima(&SubproblemSpec::new(p, 1, z));
        assert_eq!(s1.values(), vec![ObjectivePair::new(4, 5)]);

        let s2 = subproblem_optima(&SubproblemSpec::new(p, 2, z));
        let spec2 = SubproblemSpec::new(p, 2, z);
        let (_, argmin) =
            exhaustive::brute_argmin(&p, |v| subproblem_value_of::<Rational>(&spec2, v));
        assert_eq!(
            exhaustive::sorted(exhaustive::expand_levels(&s2)),
            exhaustive::sorted(argmin)
        );

        let s0 = subproblem_optima(&SubproblemSpec::new(p, 0, z));
        assert_eq!(exhaustive::expand_levels(&s0), vec![bs("111000")]);
    }

    #[test]
    fn optimal_set_display_and_membership() {
        let p = inst(8, 4);
        let s = OptimalSet::from_levels(p, [5, 6]);
        assert_eq!(s.to_string(), "D_5 u D_6");
        assert!(s.contains_value(&ObjectivePair::new(7, 5)));
        assert!(!s.contains_value(&ObjectivePair::new(6, 5)));
        assert!(!s.contains_value(&ObjectivePair::new(8, 4)));
    }
}
