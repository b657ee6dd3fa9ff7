//! NSGA-II: generational survival by non-dominated sorting and crowding
//! distance, with fair / random / binary-tournament parent selection.

use std::collections::BTreeMap;

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::{random_bitstring, standard_bitwise_mutation, RngStream};

use super::crowding::crowding_distance;
use super::sort::fast_nondominated_sort;
use super::{CoverageTracker, Engine, Individual};

/// How parents are drawn each generation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SelectionScheme {
    /// Every member parents exactly one offspring.
    Fair,
    /// `N` uniform draws with replacement.
    Random,
    /// `N` rounds between two distinct members; lower rank wins, then larger
    /// crowding distance, then a coin flip.
    Tournament,
}

/// A population member with the scores survival assigned to it.
#[derive(Clone, Debug)]
pub struct Scored {
    pub ind: Individual,
    pub rank: usize,
    pub crowding: f64,
}

pub struct Nsga2Engine {
    n_pop: usize,
    selection: SelectionScheme,
    pop: Vec<Scored>,
}

/// Keep the `n` survivors of a combined parent+offspring population: whole
/// fronts while they fit, then the largest crowding distances of the critical
/// front, ties broken uniformly at random.
pub fn environmental_selection(
    combined: Vec<Individual>,
    n: usize,
    rng: &mut RngStream,
) -> Vec<Scored> {
    assert!(combined.len() >= n);
    let values: Vec<ObjectivePair> = combined.iter().map(|m| m.value).collect();
    let partition = fast_nondominated_sort(&values);
    let mut slots: Vec<Option<Individual>> = combined.into_iter().map(Some).collect();
    let mut survivors: Vec<Scored> = Vec::with_capacity(n);
    for (rank, front) in partition.fronts().iter().enumerate() {
        let front_values: Vec<ObjectivePair> = front.iter().map(|&i| values[i]).collect();
        let crowding = crowding_distance(&front_values);
        if survivors.len() + front.len() <= n {
            for (pos, &i) in front.iter().enumerate() {
                survivors.push(Scored {
                    ind: slots[i].take().expect("slot used once"),
                    rank,
                    crowding: crowding[pos],
                });
            }
            if survivors.len() == n {
                break;
            }
        } else {
            let mut order: Vec<usize> = (0..front.len()).collect();
            // Pre-shuffle so the stable sort breaks exact ties uniformly.
            rng.shuffle(&mut order);
            order.sort_by(|&a, &b| crowding[b].partial_cmp(&crowding[a]).unwrap());
            let need = n - survivors.len();
            for &pos in order.iter().take(need) {
                let i = front[pos];
                survivors.push(Scored {
                    ind: slots[i].take().expect("slot used once"),
                    rank,
                    crowding: crowding[pos],
                });
            }
            break;
        }
    }
    survivors
}

impl Nsga2Engine {
    pub fn new(
        inst: ProblemInstance,
        n_pop: usize,
        selection: SelectionScheme,
        rng: &mut RngStream,
        tracker: &mut CoverageTracker,
    ) -> Self {
        assert!(n_pop >= 1);
        let mut members = Vec::with_capacity(n_pop);
        let mut inserted = Vec::with_capacity(n_pop);
        for _ in 0..n_pop {
            let genome = random_bitstring(inst.n(), rng);
            let value = tracker.eval_counted(&genome);
            inserted.push(value);
            members.push(Individual { genome, value });
        }
        tracker.apply(&[], &inserted);
        // Score the initial population so tournament selection has ranks and
        // crowding distances to compare; no survival pressure is applied.
        let pop = environmental_selection(members, n_pop, rng);
        Nsga2Engine { n_pop, selection, pop }
    }

    pub fn population(&self) -> &[Scored] {
        &self.pop
    }

    fn tournament_winner(&self, rng: &mut RngStream) -> usize {
        let n = self.pop.len();
        if n == 1 {
            return 0;
        }
        let a = rng.index(n);
        let mut b = rng.index(n - 1);
        if b >= a {
            b += 1;
        }
        let (sa, sb) = (&self.pop[a], &self.pop[b]);
        if sa.rank != sb.rank {
            return if sa.rank < sb.rank { a } else { b };
        }
        if sa.crowding != sb.crowding {
            return if sa.crowding > sb.crowding { a } else { b };
        }
        if rng.bit() {
            a
        } else {
            b
        }
    }

    /// Parent index per offspring slot under the configured scheme.
    pub fn draw_parents(&self, rng: &mut RngStream) -> Vec<usize> {
        match self.selection {
            SelectionScheme::Fair => (0..self.pop.len()).collect(),
            SelectionScheme::Random => {
                (0..self.pop.len()).map(|_| rng.index(self.pop.len())).collect()
            }
            SelectionScheme::Tournament => {
                (0..self.pop.len()).map(|_| self.tournament_winner(rng)).collect()
            }
        }
    }
}

impl Engine for Nsga2Engine {
    fn name(&self) -> &'static str {
        "nsga2"
    }

    fn step(&mut self, rng: &mut RngStream, tracker: &mut CoverageTracker) {
        let parents = self.draw_parents(rng);
        let mut combined: Vec<Individual> =
            self.pop.iter().map(|s| s.ind.clone()).collect();
        for &p in &parents {
            let genome = standard_bitwise_mutation(&self.pop[p].ind.genome, rng);
            let value = tracker.eval_counted(&genome);
            combined.push(Individual { genome, value });
        }
        let survivors = environmental_selection(combined, self.n_pop, rng);

        // Net value change of the generation.
        let mut delta: BTreeMap<ObjectivePair, i64> = BTreeMap::new();
        for s in &self.pop {
            *delta.entry(s.ind.value).or_default() -= 1;
        }
        for s in &survivors {
            *delta.entry(s.ind.value).or_default() += 1;
        }
        let mut removed = Vec::new();
        let mut inserted = Vec::new();
        for (value, d) in delta {
            for _ in 0..d.abs() {
                if d < 0 {
                    removed.push(value);
                } else {
                    inserted.push(value);
                }
            }
        }
        tracker.apply(&removed, &inserted);
        self.pop = survivors;
    }

    fn coverage_values(&self) -> Vec<ObjectivePair> {
        self.pop.iter().map(|s| s.ind.value).collect()
    }
}
