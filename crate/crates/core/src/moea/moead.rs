//! Decomposition engine: `k+1` Tchebycheff subproblems with weights `i/k`,
//! neighbourhood size one, one-bit mutation, an online reference point, and
//! an external archive of non-dominated values.

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::{one_bit_mutation, random_bitstring, RngStream};

use super::{CoverageTracker, Engine, Individual};

pub struct MoeadEngine {
    inst: ProblemInstance,
    sub: Vec<Individual>,
    reference: ObjectivePair,
    archive: Vec<Individual>,
}

impl MoeadEngine {
    pub fn new(inst: ProblemInstance, rng: &mut RngStream, tracker: &mut CoverageTracker) -> Self {
        let count = inst.k() + 1;
        let mut sub = Vec::with_capacity(count);
        for _ in 0..count {
            let genome = random_bitstring(inst.n(), rng);
            let value = tracker.eval_counted(&genome);
            sub.push(Individual { genome, value });
        }
        // Reference point: coordinatewise maximum of the initial values; it
        // only moves up from here.
        let reference = sub.iter().fold(ObjectivePair::new(i64::MIN, i64::MIN), |z, m| {
            ObjectivePair::new(z.f1.max(m.value.f1), z.f2.max(m.value.f2))
        });
        MoeadEngine { inst, sub, reference, archive: Vec::new() }
    }

    /// Subproblem value scaled by `k` so comparisons stay in integers:
    /// `k * h_i(x) = max{i * |f1 - z1|, (k-i) * |f2 - z2|}`. For `k = 0` the
    /// single subproblem degenerates to plain elitist search on `f1`.
    fn scaled_h(&self, i: usize, v: ObjectivePair) -> i64 {
        let k = self.inst.k() as i64;
        if k == 0 {
            return self.reference.f1 - v.f1;
        }
        let d1 = (v.f1 - self.reference.f1).abs();
        let d2 = (v.f2 - self.reference.f2).abs();
        (i as i64 * d1).max((k - i as i64) * d2)
    }

    pub fn reference(&self) -> ObjectivePair {
        self.reference
    }

    pub fn subpopulation(&self) -> &[Individual] {
        &self.sub
    }

    pub fn archive_values(&self) -> Vec<ObjectivePair> {
        self.archive.iter().map(|m| m.value).collect()
    }

    fn update_archive(
        &mut self,
        genome: &crate::bits::BitString,
        value: ObjectivePair,
        tracker: &mut CoverageTracker,
    ) {
        if self
            .archive
            .iter()
            .any(|a| a.value == value || a.value.dominates(&value))
        {
            return;
        }
        let mut removed = Vec::new();
        self.archive.retain(|a| {
            if value.dominates(&a.value) {
                removed.push(a.value);
                false
            } else {
                true
            }
        });
        self.archive.push(Individual { genome: genome.clone(), value });
        tracker.apply(&removed, &[value]);
        assert!(
            self.archive.len() <= self.inst.k() + 1,
            "archive exceeded the antichain bound k+1"
        );
    }
}

impl Engine for MoeadEngine {
    fn name(&self) -> &'static str {
        "moead"
    }

    fn step(&mut self, rng: &mut RngStream, tracker: &mut CoverageTracker) {
        for i in 0..self.sub.len() {
            let genome = one_bit_mutation(&self.sub[i].genome, rng);
            let value = tracker.eval_counted(&genome);
            // Neighbourhood of size one: only subproblem i is updated, and
            // with the reference point as it stands before this offspring.
            if self.scaled_h(i, value) <= self.scaled_h(i, self.sub[i].value) {
                self.sub[i] = Individual { genome: genome.clone(), value };
            }
            let old_ref = self.reference;
            self.reference =
                ObjectivePair::new(old_ref.f1.max(value.f1), old_ref.f2.max(value.f2));
            assert!(
                self.reference.weakly_dominates(&old_ref),
                "reference point regressed"
            );
            self.update_archive(&genome, value, tracker);
        }
    }

    fn coverage_values(&self) -> Vec<ObjectivePair> {
        self.archive_values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moea::{run_to_coverage, MoeaConfig, MoeaKind};
    use crate::bits::BitString;

    #[test]
    fn archive_values_stay_distinct_and_nondominated() {
        let inst = ProblemInstance::new(8, 3);
        let mut tracker = CoverageTracker::new(inst, true);
        let mut rng = RngStream::from_seed(3);
        let mut engine = MoeadEngine::new(inst, &mut rng, &mut tracker);
        for _ in 0..500 {
            engine.step(&mut rng, &mut tracker);
            let values = engine.archive_values();
            for (i, a) in values.iter().enumerate() {
                for (j, b) in values.iter().enumerate() {
                    if i != j {
                        assert_ne!(a, b);
                        assert!(!a.dominates(b));
                    }
                }
            }
        }
    }

    #[test]
    fn reference_point_is_monotone() {
        let inst = ProblemInstance::new(10, 5);
        let mut tracker = CoverageTracker::new(inst, true);
        let mut rng = RngStream::from_seed(7);
        let mut engine = MoeadEngine::new(inst, &mut rng, &mut tracker);
        let mut prev = engine.reference();
        for _ in 0..300 {
            engine.step(&mut rng, &mut tracker);
            let cur = engine.reference();
            assert!(cur.weakly_dominates(&prev));
            prev = cur;
        }
    }

    #[test]
    fn accepted_subproblem_values_do_not_regress_after_extremes() {
        let inst = ProblemInstance::new(8, 4);
        let n = inst.n() as i64;
        let mut tracker = CoverageTracker::new(inst, true);
        let mut rng = RngStream::from_seed(11);
        let mut engine = MoeadEngine::new(inst, &mut rng, &mut tracker);
        // Step until the reference point reaches (n, n).
        let mut guard = 0;
        while engine.reference() != ObjectivePair::new(n, n) {
            engine.step(&mut rng, &mut tracker);
            guard += 1;
            assert!(guard < 100_000, "reference point never reached (n, n)");
        }
        // From here each subproblem's held value is non-increasing in h_i.
        let mut prev: Vec<i64> = (0..engine.sub.len())
            .map(|i| engine.scaled_h(i, engine.sub[i].value))
            .collect();
        for _ in 0..2000 {
            engine.step(&mut rng, &mut tracker);
            for i in 0..engine.sub.len() {
                let h = engine.scaled_h(i, engine.sub[i].value);
                assert!(h <= prev[i], "subproblem {i} regressed");
                prev[i] = h;
            }
        }
    }

    #[test]
    fn solving_all_subproblems_covers_the_front() {
        let inst = ProblemInstance::new(10, 4);
        let config = MoeaConfig::new(MoeaKind::MoeaD);
        let stats = run_to_coverage(inst, &config, 2_000_000, &mut RngStream::from_seed(13));
        assert!(!stats.censored());
        assert_eq!(stats.covered_points, 5);
        assert_eq!(stats.violations, 0);
    }

    #[test]
    fn degenerate_no_conflict_reaches_all_ones() {
        let inst = ProblemInstance::new(12, 0);
        let config = MoeaConfig::new(MoeaKind::MoeaD);
        let stats = run_to_coverage(inst, &config, 1_000_000, &mut RngStream::from_seed(17));
        assert!(!stats.censored());
        // The single front value (n, n) is only reachable by the all-ones
        // string; the archive must hold it.
        let mut tracker = CoverageTracker::new(inst, true);
        let mut rng = RngStream::from_seed(17);
        let mut engine = MoeadEngine::new(inst, &mut rng, &mut tracker);
        while !tracker.is_fully_covered() {
            engine.step(&mut rng, &mut tracker);
        }
        assert!(engine
            .archive
            .iter()
            .any(|a| a.genome == BitString::ones(12)));
    }
}
