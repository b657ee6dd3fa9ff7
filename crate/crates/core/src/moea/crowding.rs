//! Crowding distance over a set of objective values.

use crate::bench::ObjectivePair;

/// Crowding distances aligned with the input order.
///
/// Per objective the set is sorted ascending (ties broken by the other
/// objective, then input position, so the lexicographically-largest value
/// always owns a boundary), boundary members get infinity, and interior
/// members accumulate the neighbour gap normalized by the objective's range.
/// A zero-range objective contributes nothing to interior members while its
/// boundaries still get infinity.
pub fn crowding_distance(values: &[ObjectivePair]) -> Vec<f64> {
    let n = values.len();
    let mut dist = vec![0.0f64; n];
    if n == 0 {
        return dist;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    for objective in 0..2 {
        let key = |i: usize| -> (i64, i64, usize) {
            let v = values[i];
            match objective {
                0 => (v.f1, v.f2, i),
                _ => (v.f2, v.f1, i),
            }
        };
        idx.sort_unstable_by_key(|&i| key(i));
        dist[idx[0]] = f64::INFINITY;
        dist[idx[n - 1]] = f64::INFINITY;
        let lo = key(idx[0]).0;
        let hi = key(idx[n - 1]).0;
        if hi > lo {
            let range = (hi - lo) as f64;
            for j in 1..n - 1 {
                let gap = key(idx[j + 1]).0 - key(idx[j - 1]).0;
                dist[idx[j]] += gap as f64 / range;
            }
        }
    }
    dist
}
