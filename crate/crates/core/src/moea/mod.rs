//! Population-based engines and their shared primitives.
//!
//! Five engines are provided: SEMO and GSEMO (unbounded non-dominated
//! archive, one-bit vs bitwise mutation), SMS-EMOA (steady state, hypervolume
//! contribution), NSGA-II (generational, non-dominated sorting plus crowding
//! distance), and a Tchebycheff decomposition engine with one subproblem per
//! front point. All engines report fitness evaluations and population value
//! changes to a [`CoverageTracker`], which stamps the milestones and enforces
//! the survival invariant live: once a front point is covered it must never
//! leave the population (or archive) again.

mod crowding;
mod hv;
mod moead;
mod nsga2;
mod semo;
mod smsemoa;
mod sort;

pub use crowding::crowding_distance;
pub use hv::{hv_contribution, hv_contributions, hypervolume_2d};
pub use moead::MoeadEngine;
pub use nsga2::{environmental_selection, Nsga2Engine, SelectionScheme};
pub use semo::SemoEngine;
pub use smsemoa::SmsEmoaEngine;
pub use sort::{fast_nondominated_sort, FrontPartition};

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::{BitString, RngStream};

/// A genome with its cached objective value.
#[derive(Clone, Debug)]
pub struct Individual {
    pub genome: BitString,
    pub value: ObjectivePair,
}

/// Evaluation counter, front-coverage bookkeeping, and the live survival
/// assertion shared by every engine.
#[derive(Clone, Debug)]
pub struct CoverageTracker {
    inst: ProblemInstance,
    counts: Vec<u32>,
    covered: usize,
    evals: u64,
    first_hit: Option<u64>,
    full_hit: Option<u64>,
    enforce_survival: bool,
    violations: u64,
}

impl CoverageTracker {
    pub fn new(inst: ProblemInstance, enforce_survival: bool) -> Self {
        CoverageTracker {
            inst,
            counts: vec![0; inst.k() + 1],
            covered: 0,
            evals: 0,
            first_hit: None,
            full_hit: None,
            enforce_survival,
            violations: 0,
        }
    }

    /// Evaluate a genome, charging one evaluation to the budget.
    pub fn eval_counted(&mut self, genome: &BitString) -> ObjectivePair {
        self.evals += 1;
        self.inst.evaluate(genome)
    }

    pub fn evals(&self) -> u64 {
        self.evals
    }

    pub fn first_hit(&self) -> Option<u64> {
        self.first_hit
    }

    pub fn full_hit(&self) -> Option<u64> {
        self.full_hit
    }

    pub fn is_fully_covered(&self) -> bool {
        self.covered == self.counts.len()
    }

    pub fn covered_points(&self) -> usize {
        self.covered
    }

    pub fn violations(&self) -> u64 {
        self.violations
    }

    fn level_slot(&self, v: &ObjectivePair) -> Option<usize> {
        if self.inst.is_front_value(v) {
            Some((v.f2 - (self.inst.n() as i64 - self.inst.k() as i64)) as usize)
        } else {
            None
        }
    }

    /// Apply one step's population change as net per-value deltas. A covered
    /// front point whose net count drops to zero is a survival violation.
    pub fn apply(&mut self, removed: &[ObjectivePair], inserted: &[ObjectivePair]) {
        let mut deltas: Vec<(usize, i64)> = Vec::with_capacity(removed.len() + inserted.len());
        let add = |slot: usize, d: i64, deltas: &mut Vec<(usize, i64)>| {
            if let Some(entry) = deltas.iter_mut().find(|(s, _)| *s == slot) {
                entry.1 += d;
            } else {
                deltas.push((slot, d));
            }
        };
        for v in removed {
            if let Some(slot) = self.level_slot(v) {
                add(slot, -1, &mut deltas);
            }
        }
        for v in inserted {
            if let Some(slot) = self.level_slot(v) {
                add(slot, 1, &mut deltas);
            }
        }
        for (slot, d) in deltas {
            let old = self.counts[slot] as i64;
            let new = old + d;
            assert!(new >= 0, "front level count went negative");
            self.counts[slot] = new as u32;
            if old == 0 && new > 0 {
                self.covered += 1;
                self.first_hit.get_or_insert(self.evals);
                if self.covered == self.counts.len() {
                    self.full_hit.get_or_insert(self.evals);
                }
            } else if old > 0 && new == 0 {
                self.covered -= 1;
                self.violations += 1;
                assert!(
                    !self.enforce_survival,
                    "survival invariant violated: front point {} left the population",
                    self.inst.level_value(
                        slot as i64 + self.inst.n() as i64 - self.inst.k() as i64
                    )
                );
            }
        }
    }
}

/// A population engine that can be stepped until coverage.
pub trait Engine {
    fn name(&self) -> &'static str;
    /// Advance one step (steady-state engines) or one generation
    /// (generational engines), reporting evaluations and population changes
    /// to the tracker.
    fn step(&mut self, rng: &mut RngStream, tracker: &mut CoverageTracker);
    /// The value set coverage is judged on: the population, or the external
    /// archive for the decomposition engine.
    fn coverage_values(&self) -> Vec<ObjectivePair>;
}

/// Engine choice plus the parameters the theory cares about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoeaKind {
    Semo,
    Gsemo,
    SmsEmoa,
    Nsga2,
    MoeaD,
}

impl MoeaKind {
    pub fn label(&self) -> &'static str {
        match self {
            MoeaKind::Semo => "semo",
            MoeaKind::Gsemo => "gsemo",
            MoeaKind::SmsEmoa => "smsemoa",
            MoeaKind::Nsga2 => "nsga2",
            MoeaKind::MoeaD => "moead",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MoeaConfig {
    pub kind: MoeaKind,
    /// `N` for NSGA-II, `mu` for SMS-EMOA; `None` takes the smallest size the
    /// survival analysis certifies: `4(k+1)` and `k+1` respectively.
    pub population: Option<usize>,
    pub selection: SelectionScheme,
    /// Hypervolume reference point; strictly dominated by every realizable
    /// value so front points always contribute positively.
    pub reference: ObjectivePair,
}

impl MoeaConfig {
    pub fn new(kind: MoeaKind) -> Self {
        MoeaConfig {
            kind,
            population: None,
            selection: SelectionScheme::Random,
            reference: ObjectivePair::new(-1, -1),
        }
    }

    /// Effective population parameter for the instance.
    pub fn population_for(&self, inst: ProblemInstance) -> usize {
        match self.kind {
            MoeaKind::Nsga2 => self.population.unwrap_or(4 * (inst.k() + 1)),
            MoeaKind::SmsEmoa => self.population.unwrap_or(inst.k() + 1),
            _ => 1,
        }
    }

    /// Whether the configured sizes meet the survival thresholds
    /// (`mu >= k+1`, `N >= 4(k+1)`); the tracker enforces the invariant live
    /// exactly when they do.
    pub fn meets_survival_thresholds(&self, inst: ProblemInstance) -> bool {
        match self.kind {
            MoeaKind::Semo | MoeaKind::Gsemo | MoeaKind::MoeaD => true,
            MoeaKind::SmsEmoa => self.population_for(inst) >= inst.k() + 1,
            MoeaKind::Nsga2 => self.population_for(inst) >= 4 * (inst.k() + 1),
        }
    }

    /// Evaluations per engine step.
    pub fn evals_per_step(&self, inst: ProblemInstance) -> u64 {
        match self.kind {
            MoeaKind::Semo | MoeaKind::Gsemo | MoeaKind::SmsEmoa => 1,
            MoeaKind::Nsga2 => self.population_for(inst) as u64,
            MoeaKind::MoeaD => inst.k() as u64 + 1,
        }
    }
}

pub fn build_engine(
    inst: ProblemInstance,
    config: &MoeaConfig,
    rng: &mut RngStream,
    tracker: &mut CoverageTracker,
) -> Box<dyn Engine> {
    match config.kind {
        MoeaKind::Semo => Box::new(SemoEngine::new(inst, false, rng, tracker)),
        MoeaKind::Gsemo => Box::new(SemoEngine::new(inst, true, rng, tracker)),
        MoeaKind::SmsEmoa => Box::new(SmsEmoaEngine::new(
            inst,
            config.population_for(inst),
            config.reference,
            rng,
            tracker,
        )),
        MoeaKind::Nsga2 => Box::new(Nsga2Engine::new(
            inst,
            config.population_for(inst),
            config.selection,
            rng,
            tracker,
        )),
        MoeaKind::MoeaD => Box::new(MoeadEngine::new(inst, rng, tracker)),
    }
}

/// Outcome of stepping an engine until full coverage or budget exhaustion.
#[derive(Clone, Copy, Debug)]
pub struct RunStats {
    pub evaluations: u64,
    pub evals_to_first_front: Option<u64>,
    pub evals_to_full_coverage: Option<u64>,
    pub covered_points: usize,
    pub front_size: usize,
    pub violations: u64,
}

impl RunStats {
    pub fn censored(&self) -> bool {
        self.evals_to_full_coverage.is_none()
    }
}

/// Step the configured engine until its value set covers the whole front or
/// the evaluation budget runs out (a censored run, not an error).
pub fn run_to_coverage(
    inst: ProblemInstance,
    config: &MoeaConfig,
    budget: u64,
    rng: &mut RngStream,
) -> RunStats {
    assert!(budget >= 1);
    let mut tracker = CoverageTracker::new(inst, config.meets_survival_thresholds(inst));
    let mut engine = build_engine(inst, config, rng, &mut tracker);
    while !tracker.is_fully_covered() && tracker.evals() < budget {
        engine.step(rng, &mut tracker);
    }
    RunStats {
        evaluations: tracker.evals(),
        evals_to_first_front: tracker.first_hit(),
        evals_to_full_coverage: tracker.full_hit(),
        covered_points: tracker.covered_points(),
        front_size: inst.k() + 1,
        violations: tracker.violations(),
    }
}

/// Default evaluation budget for [`run_to_coverage`]: a generous multiple of
/// the expected coverage time so that timeouts are effectively impossible
/// while degenerate configurations still terminate.
pub fn default_coverage_budget(inst: ProblemInstance, config: &MoeaConfig) -> u64 {
    let n = inst.n() as f64;
    let k = inst.k().max(1) as f64;
    let scale = n * n.ln().max(1.0);
    let per_point = match config.kind {
        MoeaKind::Semo | MoeaKind::Gsemo | MoeaKind::MoeaD => k,
        MoeaKind::Nsga2 | MoeaKind::SmsEmoa => config.population_for(inst) as f64,
    };
    (200.0 * per_point * scale).ceil() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracker_counts_and_milestones() {
        let inst = ProblemInstance::new(6, 3);
        let mut t = CoverageTracker::new(inst, true);
        let x = BitString::ones(6);
        let v = t.eval_counted(&x);
        assert_eq!(t.evals(), 1);
        t.apply(&[], &[v]);
        assert_eq!(t.first_hit(), Some(1));
        assert_eq!(t.covered_points(), 1);
        assert!(!t.is_fully_covered());
        // Equal-value replacement nets to zero: no violation.
        t.apply(&[v], &[v]);
        assert_eq!(t.covered_points(), 1);
        // Non-front values are ignored.
        t.apply(&[], &[ObjectivePair::new(1, 1)]);
        assert_eq!(t.covered_points(), 1);
        for level in [4, 5, 6] {
            let p = inst.level_value(level);
            t.apply(&[], &[p]);
        }
        assert!(t.is_fully_covered());
        assert_eq!(t.full_hit(), Some(1));
    }

    #[test]
    #[should_panic(expected = "survival invariant")]
    fn tracker_panics_on_enforced_violation() {
        let inst = ProblemInstance::new(6, 3);
        let mut t = CoverageTracker::new(inst, true);
        let v = inst.level_value(4);
        t.apply(&[], &[v]);
        t.apply(&[v], &[]);
    }

    #[test]
    fn tracker_tolerates_violation_when_not_enforced() {
        let inst = ProblemInstance::new(6, 3);
        let mut t = CoverageTracker::new(inst, false);
        let v = inst.level_value(4);
        t.apply(&[], &[v]);
        t.apply(&[v], &[]);
        assert_eq!(t.violations(), 1);
        assert_eq!(t.covered_points(), 0);
        // Milestone stamps keep the first time reached.
        assert_eq!(t.first_hit(), Some(0));
    }

    #[test]
    fn config_defaults_match_certified_sizes() {
        let inst = ProblemInstance::new(20, 7);
        let nsga = MoeaConfig::new(MoeaKind::Nsga2);
        assert_eq!(nsga.population_for(inst), 32);
        let sms = MoeaConfig::new(MoeaKind::SmsEmoa);
        assert_eq!(sms.population_for(inst), 8);
        assert!(nsga.meets_survival_thresholds(inst));
        let mut small = nsga;
        small.population = Some(8);
        assert!(!small.meets_survival_thresholds(inst));
    }
}
