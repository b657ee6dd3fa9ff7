//! Brute-force oracles over small search spaces.
//!
//! These enumerate `{0,1}^n` directly and are the independent route against
//! which the closed-form oracles in [`crate::bench`] and [`crate::reform`]
//! are checked, both in unit tests and by the lab's verification suites. All
//! entry points refuse instances too large to enumerate.

use crate::bench::{ObjectivePair, ProblemInstance};
use crate::bits::BitString;
use crate::reform::OptimalSet;
use crate::scalar::Scalar;

const MAX_ENUM_BITS: usize = 20;

/// Visit every bitstring of length `n` (at most 2^20).
pub fn for_each_bitstring<F: FnMut(&BitString)>(n: usize, mut f: F) {
    assert!(n >= 1 && n <= MAX_ENUM_BITS, "refusing to enumerate 2^{n} bitstrings");
    let mut x = BitString::zeros(n);
    f(&x);
    for mask in 1u64..(1 << n) {
        // Gray-code style update would work too; direct decode keeps it obvious.
        x = BitString::from_mask(mask, n);
        f(&x);
    }
}

/// Distinct objective values of an instance.
pub fn realized_values(inst: &ProblemInstance) -> Vec<ObjectivePair> {
    let mut values = Vec::new();
    for_each_bitstring(inst.n(), |x| values.push(inst.evaluate(x)));
    values.sort();
    values.dedup();
    values
}

/// Non-dominated objective values by exhaustive extraction, `f1`-ascending.
pub fn brute_front(inst: &ProblemInstance) -> Vec<ObjectivePair> {
    let values = realized_values(inst);
    let mut front: Vec<ObjectivePair> = values
        .iter()
        .filter(|v| !values.iter().any(|u| u.dominates(v)))
        .copied()
        .collect();
    front.sort();
    front
}

/// Size of the largest set of mutually incomparable realized values.
///
/// Two distinct values are incomparable exactly when one is strictly larger
/// in `f1` and strictly smaller in `f2`, so a maximum antichain is a longest
/// chain that strictly increases in `f1` while strictly decreasing in `f2`.
pub fn brute_max_antichain(inst: &ProblemInstance) -> usize {
    let mut values = realized_values(inst);
    // Within an equal-f1 group sort f2 ascending so a strictly-decreasing f2
    // subsequence can use at most one value per group.
    values.sort_by_key(|v| (v.f1, v.f2));
    let mut best = vec![1usize; values.len()];
    let mut max = 0;
    for j in 0..values.len() {
        for i in 0..j {
            if values[i].f1 < values[j].f1 && values[i].f2 > values[j].f2 {
                best[j] = best[j].max(best[i] + 1);
            }
        }
        max = max.max(best[j]);
    }
    max
}

/// Exact maximum of `objective` over all bitstrings, with every maximizer.
pub fn brute_argmax<S, F>(inst: &ProblemInstance, objective: F) -> (S, Vec<BitString>)
where
    S: Scalar,
    F: Fn(ObjectivePair) -> S,
{
    let mut best: Option<S> = None;
    let mut argmax: Vec<BitString> = Vec::new();
    for_each_bitstring(inst.n(), |x| {
        let v = objective(inst.evaluate(x));
        match &best {
            Some(b) if v < *b => {}
            Some(b) if v == *b => argmax.push(x.clone()),
            _ => {
                best = Some(v);
                argmax.clear();
                argmax.push(x.clone());
            }
        }
    });
    (best.expect("non-empty search space"), argmax)
}

/// Exact minimum of `objective` over all bitstrings, with every minimizer.
pub fn brute_argmin<S, F>(inst: &ProblemInstance, objective: F) -> (S, Vec<BitString>)
where
    S: Scalar,
    F: Fn(ObjectivePair) -> S,
{
    let (neg_best, argmin) = brute_argmax(inst, |v| -objective(v));
    (-neg_best, argmin)
}

/// Maximizers of `f1` over the feasible region `f2 >= eps`; empty when no
/// feasible solution exists.
pub fn brute_constrained_argmax(inst: &ProblemInstance, eps: f64) -> Vec<BitString> {
    let mut best: Option<i64> = None;
    let mut argmax: Vec<BitString> = Vec::new();
    for_each_bitstring(inst.n(), |x| {
        let v = inst.evaluate(x);
        if (v.f2 as f64) < eps {
            return;
        }
        match best {
            Some(b) if v.f1 < b => {}
            Some(b) if v.f1 == b => argmax.push(x.clone()),
            _ => {
                best = Some(v.f1);
                argmax.clear();
                argmax.push(x.clone());
            }
        }
    });
    argmax
}

/// Expand a symbolic optimal set into explicit solutions. Testing aid for
/// small instances; refuses `n > 20`.
pub fn expand_levels(set: &OptimalSet) -> Vec<BitString> {
    let inst = set.instance();
    let (n, k) = (inst.n(), inst.k());
    assert!(n <= MAX_ENUM_BITS, "refusing to expand solution sets for n > {MAX_ENUM_BITS}");
    let mut out = Vec::new();
    for level in set.levels() {
        // Members of level i have all ones in the first n-k positions and
        // exactly n-i ones in the last k.
        let suffix_ones = (n as i64 - level) as usize;
        for mask in 0u64..(1 << k) {
            if (mask.count_ones() as usize) != suffix_ones {
                continue;
            }
            let mut bits = vec![true; n - k];
            bits.extend((0..k).map(|j| mask & (1 << j) != 0));
            out.push(BitString::from_bits(bits));
        }
    }
    sorted(out)
}

/// Canonical ordering for solution-set comparison.
pub fn sorted(mut v: Vec<BitString>) -> Vec<BitString> {
    v.sort();
    v
}
