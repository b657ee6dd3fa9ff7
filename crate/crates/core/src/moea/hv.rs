//! Exact 2-D hypervolume and per-member contributions.
//!
//! Values and reference points are integral, so areas are computed in integer
//! arithmetic by the sorted staircase sweep. Points that do not strictly
//! dominate the reference enclose an empty box and contribute nothing.

use crate::bench::ObjectivePair;

/// Maxima staircase of `values` above `reference`, sorted `f1`-ascending with
/// strictly descending `f2`. Duplicates and dominated points are dropped.
fn staircase(values: &[ObjectivePair], reference: ObjectivePair) -> Vec<ObjectivePair> {
    let mut pts: Vec<ObjectivePair> = values
        .iter()
        .filter(|v| v.f1 > reference.f1 && v.f2 > reference.f2)
        .copied()
        .collect();
    pts.sort_unstable_by(|a, b| b.f1.cmp(&a.f1).then(b.f2.cmp(&a.f2)));
    let mut stairs: Vec<ObjectivePair> = Vec::with_capacity(pts.len());
    let mut best_f2 = reference.f2;
    for p in pts {
        if p.f2 > best_f2 {
            stairs.push(p);
            best_f2 = p.f2;
        }
    }
    stairs.reverse();
    stairs
}

/// Area of the union of boxes `[reference, v]` over the value set.
pub fn hypervolume_2d(values: &[ObjectivePair], reference: ObjectivePair) -> i64 {
    let stairs = staircase(values, reference);
    let mut area = 0i64;
    let mut prev_f1 = reference.f1;
    for p in &stairs {
        area += (p.f1 - prev_f1) * (p.f2 - reference.f2);
        prev_f1 = p.f1;
    }
    area
}

/// `HV(front) - HV(front without one occurrence of member)`.
///
/// Panics if `member` is not in `front`.
pub fn hv_contribution(member: ObjectivePair, front: &[ObjectivePair], reference: ObjectivePair) -> i64 {
    let pos = front
        .iter()
        .position(|v| *v == member)
        .expect("member must belong to the front");
    let mut rest: Vec<ObjectivePair> = front.to_vec();
    rest.swap_remove(pos);
    hypervolume_2d(front, reference) - hypervolume_2d(&rest, reference)
}

/// Contribution of every front member, aligned with the input order.
///
/// One sweep instead of a removal per member: on a mutually non-dominated
/// front, duplicated values contribute zero and a unique value's contribution
/// is the exclusive rectangle between its staircase neighbours.
pub fn hv_contributions(front: &[ObjectivePair], reference: ObjectivePair) -> Vec<i64> {
    let n = front.len();
    let mut contrib = vec![0i64; n];
    let mut idx: Vec<usize> = (0..n)
        .filter(|&i| front[i].f1 > reference.f1 && front[i].f2 > reference.f2)
        .collect();
    idx.sort_unstable_by_key(|&i| (front[i].f1, front[i].f2, i));
    let m = idx.len();
    let mut g = 0;
    while g < m {
        let mut end = g + 1;
        while end < m && front[idx[end]] == front[idx[g]] {
            end += 1;
        }
        if end - g == 1 {
            let i = idx[g];
            let prev_f1 = if g == 0 { reference.f1 } else { front[idx[g - 1]].f1 };
            let next_f2 = if end == m { reference.f2 } else { front[idx[end]].f2 };
            contrib[i] = (front[i].f1 - prev_f1) * (front[i].f2 - next_f2);
        }
        g = end;
    }
    contrib
}
