//! SMS-EMOA: steady-state survival by hypervolume contribution in the last
//! front.

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::{random_bitstring, standard_bitwise_mutation, RngStream};

use super::hv::hv_contributions;
use super::sort::fast_nondominated_sort;
use super::{CoverageTracker, Engine, Individual};

pub struct SmsEmoaEngine {
    reference: ObjectivePair,
    pop: Vec<Individual>,
}

impl SmsEmoaEngine {
    pub fn new(
        inst: ProblemInstance,
        mu: usize,
        reference: ObjectivePair,
        rng: &mut RngStream,
        tracker: &mut CoverageTracker,
    ) -> Self {
        assert!(mu >= 1);
        let mut pop = Vec::with_capacity(mu + 1);
        let mut inserted = Vec::with_capacity(mu);
        for _ in 0..mu {
            let genome = random_bitstring(inst.n(), rng);
            let value = tracker.eval_counted(&genome);
            inserted.push(value);
            pop.push(Individual { genome, value });
        }
        tracker.apply(&[], &inserted);
        SmsEmoaEngine { reference, pop }
    }

    pub fn population(&self) -> &[Individual] {
        &self.pop
    }

    /// Index (into `values`) of the member the survival rule removes: the
    /// minimal hypervolume contributor of the last front, ties uniform.
    pub fn removal_index(
        values: &[ObjectivePair],
        reference: ObjectivePair,
        rng: &mut RngStream,
    ) -> usize {
        let partition = fast_nondominated_sort(values);
        let last = partition.last_front();
        if last.len() == 1 {
            return last[0];
        }
        let front_values: Vec<ObjectivePair> = last.iter().map(|&i| values[i]).collect();
        let contrib = hv_contributions(&front_values, reference);
        let min = contrib.iter().min().copied().expect("non-empty front");
        let tied: Vec<usize> = last
            .iter()
            .zip(&contrib)
            .filter(|(_, &c)| c == min)
            .map(|(&i, _)| i)
            .collect();
        tied[rng.index(tied.len())]
    }
}

impl Engine for SmsEmoaEngine {
    fn name(&self) -> &'static str {
        "smsemoa"
    }

    fn step(&mut self, rng: &mut RngStream, tracker: &mut CoverageTracker) {
        let parent = &self.pop[rng.index(self.pop.len())];
        let genome = standard_bitwise_mutation(&parent.genome, rng);
        let value = tracker.eval_counted(&genome);
        self.pop.push(Individual { genome, value });

        let values: Vec<ObjectivePair> = self.pop.iter().map(|m| m.value).collect();
        let out = Self::removal_index(&values, self.reference, rng);
        let removed = self.pop.swap_remove(out);
        if out != self.pop.len() {
            // The offspring survived; it sits somewhere in the population now.
            tracker.apply(&[removed.value], &[value]);
        }
    }

    fn coverage_values(&self) -> Vec<ObjectivePair> {
        self.pop.iter().map(|m| m.value).collect()
    }
}
