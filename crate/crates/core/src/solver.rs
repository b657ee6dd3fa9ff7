//! Single-solution elitist search: randomized local search and the (1+1) EA,
//! applied to any scalar reformulation, plus the ε-constraint pipeline that
//! walks the coverage schedule to collect the whole front.

use crate::bench::{CoverageReport, ObjectivePair, ProblemInstance};
use crate::bits::{random_bitstring, BitString, RngStream};
use crate::reform::{
    coverage_schedule, exterior_optima, penalty_value_of, weighted_value, OptimalSet, PenaltyMode,
    PenaltySpec, ScalarizationSpec,
};
use crate::scalar::from_dyadic;
use crate::Rational;

/// A scalar objective bound to a spec: the solver's view of a reformulated
/// problem. Each `value_of` call the solver makes is one fitness evaluation.
#[derive(Clone, Debug)]
pub enum ScalarProblem {
    Weighted(ScalarizationSpec),
    Penalty(PenaltySpec),
}

impl ScalarProblem {
    pub fn instance(&self) -> ProblemInstance {
        match self {
            ScalarProblem::Weighted(s) => s.inst,
            ScalarProblem::Penalty(s) => s.inst,
        }
    }

    /// Scalar value of an objective pair. Exact in `f64` for penalty specs
    /// since their parameters are dyadic.
    pub fn value_of(&self, v: ObjectivePair) -> f64 {
        match self {
            ScalarProblem::Weighted(s) => weighted_value(s.weight, v),
            ScalarProblem::Penalty(s) => penalty_value_of(s, v),
        }
    }
}

/// Outcome of one elitist run.
#[derive(Clone, Debug)]
pub struct SolverRun {
    pub solution: BitString,
    pub objectives: ObjectivePair,
    pub value: f64,
    pub evaluations: u64,
    pub hit_optimum: bool,
    /// `(evaluation index, value)` at every strict improvement, starting with
    /// the initial solution.
    pub trajectory: Vec<(u64, f64)>,
}

/// Structural acceptance checks for exterior penalty runs under a proper
/// coefficient (`r * (eps + 1 - ceil(eps)) > 1`). With one-bit moves, an
/// accepted offspring of an infeasible parent must flip a prefix zero or a
/// suffix one; an accepted offspring of a feasible parent must stay feasible
/// and flip a prefix zero, or a suffix zero when the parent has slack of at
/// least one above `ceil(eps)`.
struct PenaltyMoveGuard {
    split: usize, // n-k
    eps: f64,
    ceil_eps: i64,
}

impl PenaltyMoveGuard {
    fn for_problem(problem: &ScalarProblem) -> Option<Self> {
        let ScalarProblem::Penalty(spec) = problem else {
            return None;
        };
        if spec.mode != PenaltyMode::Exterior {
            return None;
        }
        let eps_q: Rational = from_dyadic(spec.eps);
        let r_q: Rational = from_dyadic(spec.r);
        let proper = r_q * (eps_q + Rational::from_integer(1) - eps_q.ceil())
            > Rational::from_integer(1);
        if !proper {
            return None;
        }
        Some(PenaltyMoveGuard {
            split: spec.inst.n() - spec.inst.k(),
            eps: spec.eps,
            ceil_eps: eps_q.ceil().to_integer(),
        })
    }

    fn feasible(&self, v: ObjectivePair) -> bool {
        v.f2 as f64 >= self.eps
    }

    /// `pos` is the flipped 1-based position, `was_one` the parent's bit there.
    fn check_accepted(
        &self,
        parent: ObjectivePair,
        child: ObjectivePair,
        pos: usize,
        was_one: bool,
    ) {
        let prefix = pos <= self.split;
        if self.feasible(parent) {
            assert!(
                self.feasible(child),
                "feasible parent accepted an infeasible offspring"
            );
            let allowed =
                (prefix && !was_one) || (!prefix && !was_one && parent.f2 >= self.ceil_eps + 1);
            assert!(
                allowed,
                "feasible parent accepted a forbidden move (pos {pos}, was_one {was_one})"
            );
        } else {
            let allowed = (prefix && !was_one) || (!prefix && was_one);
            assert!(
                allowed,
                "infeasible parent accepted a forbidden move (pos {pos}, was_one {was_one})"
            );
        }
    }
}

/// Objective pair after flipping 1-based position `pos` (the bit now reads
/// `now_one`), without re-scanning the bitstring.
fn pair_after_flip(
    inst: ProblemInstance,
    v: ObjectivePair,
    pos: usize,
    now_one: bool,
) -> ObjectivePair {
    let d = if now_one { 1 } else { -1 };
    if pos <= inst.n() - inst.k() {
        ObjectivePair::new(v.f1 + d, v.f2 + d)
    } else {
        ObjectivePair::new(v.f1 + d, v.f2 - d)
    }
}

fn elitist_run(
    problem: &ScalarProblem,
    target: Option<&OptimalSet>,
    budget: u64,
    rng: &mut RngStream,
    one_bit: bool,
) -> SolverRun {
    assert!(budget >= 1, "budget must allow at least one evaluation");
    let inst = problem.instance();
    let n = inst.n();
    let guard = if one_bit {
        PenaltyMoveGuard::for_problem(problem)
    } else {
        None
    };

    let mut x = random_bitstring(n, rng);
    let mut pair = inst.evaluate(&x);
    let mut value = problem.value_of(pair);
    let mut evaluations: u64 = 1;
    let mut trajectory = vec![(1, value)];
    // Membership checks consult the symbolic descriptor against the tracked
    // objective pair; they cost no evaluations.
    let in_target = |p: &ObjectivePair| target.map_or(false, |t| t.contains_value(p));
    let mut hit = in_target(&pair);

    while !hit && evaluations < budget {
        if one_bit {
            let pos = rng.position(n);
            x.flip(pos);
            let child = pair_after_flip(inst, pair, pos, x.get(pos));
            let child_value = problem.value_of(child);
            evaluations += 1;
            if child_value >= value {
                if let Some(g) = &guard {
                    g.check_accepted(pair, child, pos, !x.get(pos));
                }
                if child_value > value {
                    trajectory.push((evaluations, child_value));
                }
                pair = child;
                value = child_value;
                hit = in_target(&pair);
            } else {
                x.flip(pos); // revert
            }
        } else {
            let mut flipped: Vec<usize> = Vec::new();
            for pos in 1..=n {
                if rng.index(n) == 0 {
                    x.flip(pos);
                    flipped.push(pos);
                }
            }
            let mut child = pair;
            for &pos in &flipped {
                child = pair_after_flip(inst, child, pos, x.get(pos));
            }
            let child_value = problem.value_of(child);
            evaluations += 1;
            if child_value >= value {
                if child_value > value {
                    trajectory.push((evaluations, child_value));
                }
                pair = child;
                value = child_value;
                hit = in_target(&pair);
            } else {
                for &pos in &flipped {
                    x.flip(pos); // revert
                }
            }
        }
    }

    SolverRun {
        solution: x,
        objectives: pair,
        value,
        evaluations,
        hit_optimum: hit,
        trajectory,
    }
}

/// Randomized local search: one-bit mutation, accept on `>=`, stop at a
/// target-set member or on budget exhaustion.
pub fn rls(
    problem: &ScalarProblem,
    target: Option<&OptimalSet>,
    budget: u64,
    rng: &mut RngStream,
) -> SolverRun {
    elitist_run(problem, target, budget, rng, true)
}

/// (1+1) EA: as [`rls`] but with standard bitwise mutation.
pub fn one_plus_one_ea(
    problem: &ScalarProblem,
    target: Option<&OptimalSet>,
    budget: u64,
    rng: &mut RngStream,
) -> SolverRun {
    elitist_run(problem, target, budget, rng, false)
}

/// Default per-run budget: `200 * n * ln(n)` evaluations, around twenty times
/// the expected hitting time, so timeouts are vanishingly rare while runaway
/// runs stay bounded.
pub fn default_scalar_budget(n: usize) -> u64 {
    let n = n as f64;
    (200.0 * n * n.ln()).ceil().max(200.0) as u64
}

/// Which mutation the pipeline's inner solver uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PipelineMutation {
    OneBit,
    Bitwise,
}

/// Result of running one solver per penalty spec and pooling the final
/// solutions.
#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    pub runs: Vec<SolverRun>,
    pub total_evaluations: u64,
    /// Final objective value of each run, in schedule order.
    pub values: Vec<ObjectivePair>,
    pub coverage: CoverageReport,
    /// Cumulative evaluations when the pooled values first contained a front
    /// point / the whole front, at run-completion granularity.
    pub evals_to_first_front: Option<u64>,
    pub evals_to_full_coverage: Option<u64>,
}

impl PipelineOutcome {
    pub fn censored(&self) -> bool {
        self.evals_to_full_coverage.is_none()
    }
}

/// Run one elitist solver per spec, each aimed at the analytic optimal set of
/// its own penalty problem. Runs that exhaust their budget leave coverage
/// partial; they are not an error.
pub fn penalty_pipeline(
    inst: ProblemInstance,
    specs: &[PenaltySpec],
    budget_per_run: u64,
    mutation: PipelineMutation,
    rng: &mut RngStream,
) -> PipelineOutcome {
    let mut runs = Vec::with_capacity(specs.len());
    let mut values = Vec::with_capacity(specs.len());
    let mut total: u64 = 0;
    let mut covered = vec![false; inst.k() + 1];
    let mut first = None;
    let mut full = None;
    for spec in specs {
        let target = exterior_optima(spec);
        let problem = ScalarProblem::Penalty(*spec);
        let run = match mutation {
            PipelineMutation::OneBit => rls(&problem, Some(&target), budget_per_run, rng),
            PipelineMutation::Bitwise => {
                one_plus_one_ea(&problem, Some(&target), budget_per_run, rng)
            }
        };
        total += run.evaluations;
        values.push(run.objectives);
        if inst.is_front_value(&run.objectives) {
            let idx = (run.objectives.f1 - (inst.n() as i64 - inst.k() as i64)) as usize;
            covered[idx] = true;
            first.get_or_insert(total);
            if covered.iter().all(|&c| c) {
                full.get_or_insert(total);
            }
        }
        runs.push(run);
    }
    PipelineOutcome {
        runs,
        total_evaluations: total,
        coverage: inst.coverage(values.iter()),
        values,
        evals_to_first_front: first,
        evals_to_full_coverage: full,
    }
}

/// The full-front ε-constraint pipeline: one RLS run per coverage-schedule
/// spec, `k+1` runs in total.
pub fn epsilon_constraint_pipeline(
    inst: ProblemInstance,
    budget_per_run: u64,
    rng: &mut RngStream,
) -> PipelineOutcome {
    let specs = coverage_schedule(inst);
    penalty_pipeline(inst, &specs, budget_per_run, PipelineMutation::OneBit, rng)
}
