//! Non-dominated sorting for bi-objective maximization.
//!
//! The partition is computed with the two-objective sweep: process values in
//! `(f1 desc, f2 desc)` order and place each into the first front whose
//! most-recent member does not dominate it. Within a front the most-recent
//! member has the maximal second objective, and the "first front that fails
//! to dominate" index is monotone, so a binary search over fronts suffices.
//! This is O(N log N) against the quadratic textbook procedure, with
//! identical output; the tests cross-check the two.

use crate::bench::ObjectivePair;

/// Dominance layers `F_1, F_2, ...` as index lists into the input slice.
/// Within a front, indices keep their input order.
#[derive(Clone, Debug)]
pub struct FrontPartition {
    fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn fronts(&self) -> &[Vec<usize>] {
        &self.fronts
    }

    pub fn front_count(&self) -> usize {
        self.fronts.len()
    }

    pub fn last_front(&self) -> &[usize] {
        self.fronts.last().expect("non-empty partition")
    }

    /// Front index (0-based rank) of each input element.
    pub fn ranks(&self, len: usize) -> Vec<usize> {
        let mut ranks = vec![usize::MAX; len];
        for (r, front) in self.fronts.iter().enumerate() {
            for &i in front {
                ranks[i] = r;
            }
        }
        ranks
    }
}

/// Partition `values` into dominance layers: `F_1` holds the non-dominated
/// values, each later front the values non-dominated once earlier fronts are
/// removed.
pub fn fast_nondominated_sort(values: &[ObjectivePair]) -> FrontPartition {
    if values.is_empty() {
        return FrontPartition { fronts: Vec::new() };
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by(|&a, &b| {
        values[b]
            .f1
            .cmp(&values[a].f1)
            .then(values[b].f2.cmp(&values[a].f2))
            .then(a.cmp(&b))
    });

    let mut fronts: Vec<Vec<usize>> = Vec::new();
    // Most recently inserted value per front; it dominates the new value iff
    // any member of that front does.
    let mut last: Vec<ObjectivePair> = Vec::new();
    for &idx in &order {
        let v = values[idx];
        let f = last.partition_point(|m| m.f2 > v.f2 || (m.f2 == v.f2 && m.f1 > v.f1));
        if f == fronts.len() {
            fronts.push(Vec::new());
            last.push(v);
        } else {
            last[f] = v;
        }
        fronts[f].push(idx);
    }
    for front in &mut fronts {
        front.sort_unstable();
    }
    FrontPartition { fronts }
}
