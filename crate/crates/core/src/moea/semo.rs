//! SEMO / GSEMO: a single unbounded archive of mutually non-dominated,
//! value-distinct individuals.

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::{one_bit_mutation, random_bitstring, standard_bitwise_mutation, RngStream};

use super::{CoverageTracker, Engine, Individual};

pub struct SemoEngine {
    inst: ProblemInstance,
    bitwise: bool,
    pop: Vec<Individual>,
}

impl SemoEngine {
    /// `bitwise = false` is SEMO (one-bit mutation), `true` is GSEMO.
    pub fn new(
        inst: ProblemInstance,
        bitwise: bool,
        rng: &mut RngStream,
        tracker: &mut CoverageTracker,
    ) -> Self {
        let genome = random_bitstring(inst.n(), rng);
        let value = tracker.eval_counted(&genome);
        tracker.apply(&[], &[value]);
        SemoEngine {
            inst,
            bitwise,
            pop: vec![Individual { genome, value }],
        }
    }

    pub fn population(&self) -> &[Individual] {
        &self.pop
    }
}

impl Engine for SemoEngine {
    fn name(&self) -> &'static str {
        if self.bitwise {
            "gsemo"
        } else {
            "semo"
        }
    }

    fn step(&mut self, rng: &mut RngStream, tracker: &mut CoverageTracker) {
        let parent = &self.pop[rng.index(self.pop.len())];
        let genome = if self.bitwise {
            standard_bitwise_mutation(&parent.genome, rng)
        } else {
            one_bit_mutation(&parent.genome, rng)
        };
        let value = tracker.eval_counted(&genome);
        if self.pop.iter().any(|m| m.value.dominates(&value)) {
            return;
        }
        // Offspring enters; expel everything it weakly dominates (including
        // an equal-valued incumbent, which nets to no coverage change).
        let mut removed: Vec<ObjectivePair> = Vec::new();
        self.pop.retain(|m| {
            if value.weakly_dominates(&m.value) {
                removed.push(m.value);
                false
            } else {
                true
            }
        });
        self.pop.push(Individual { genome, value });
        tracker.apply(&removed, &[value]);
        assert!(
            self.pop.len() <= self.inst.k() + 1,
            "population exceeded the antichain bound k+1"
        );
    }

    fn coverage_values(&self) -> Vec<ObjectivePair> {
        self.pop.iter().map(|m| m.value).collect()
    }
}
