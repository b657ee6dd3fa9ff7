//! The `OneMaxMin_k` function family, dominance relations, and its exact
//! Pareto structure.
//!
//! An instance is a pair `(n, k)` with `0 <= k <= n`. Objective one counts
//! all one-bits; objective two counts one-bits in the first `n-k` positions
//! plus zero-bits in the last `k`. The Pareto front is exactly
//! `{(n-k+i, n-i) : i in [0..k]}` and the largest set of mutually
//! non-dominated values has size `k+1`. Everything here is exact integer
//! arithmetic.

use std::fmt;

use crate::bits::BitString;

/// A `OneMaxMin_k` instance: problem size `n` and conflict degree `k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ProblemInstance {
    n: usize,
    k: usize,
}

/// Image of a solution under the two objectives.
///
/// Coordinates are signed so that strictly-dominated reference points such as
/// `(-1, -1)` are representable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ObjectivePair {
    pub f1: i64,
    pub f2: i64,
}

impl ObjectivePair {
    pub fn new(f1: i64, f2: i64) -> Self {
        ObjectivePair { f1, f2 }
    }

    /// Both coordinates at least as large.
    pub fn weakly_dominates(&self, other: &ObjectivePair) -> bool {
        self.f1 >= other.f1 && self.f2 >= other.f2
    }

    /// Weakly dominates with at least one strict coordinate.
    pub fn dominates(&self, other: &ObjectivePair) -> bool {
        self.weakly_dominates(other) && (self.f1 > other.f1 || self.f2 > other.f2)
    }
}

impl fmt::Display for ObjectivePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

/// The Pareto front of an instance, in `f1`-ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParetoFront {
    points: Vec<ObjectivePair>,
}

impl ParetoFront {
    pub fn points(&self) -> &[ObjectivePair] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always k+1 >= 1 points
    }

    pub fn contains(&self, value: &ObjectivePair) -> bool {
        self.points.iter().any(|p| p == value)
    }
}

/// Which front points a value set covers.
#[derive(Clone, Debug)]
pub struct CoverageReport {
    present: Vec<bool>,
}

impl CoverageReport {
    /// Presence flags in `f1`-ascending front order.
    pub fn present(&self) -> &[bool] {
        &self.present
    }

    pub fn covered(&self) -> usize {
        self.present.iter().filter(|&&p| p).count()
    }

    pub fn total(&self) -> usize {
        self.present.len()
    }

    pub fn fraction(&self) -> f64 {
        self.covered() as f64 / self.total() as f64
    }

    pub fn is_full(&self) -> bool {
        self.present.iter().all(|&p| p)
    }
}

impl ProblemInstance {
    /// Panics unless `n >= 1` and `k <= n`.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n >= 1, "problem size must be positive");
        assert!(k <= n, "conflict degree k={k} exceeds n={n}");
        ProblemInstance { n, k }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Evaluate both objectives. Counts as one fitness evaluation wherever a
    /// budget applies; this function itself does no bookkeeping.
    ///
    /// Panics if the length of `x` is not `n`.
    pub fn evaluate(&self, x: &BitString) -> ObjectivePair {
        assert_eq!(
            x.len(),
            self.n,
            "bitstring length {} does not match instance n={}",
            x.len(),
            self.n
        );
        let prefix = if self.k < self.n {
            x.count_ones_range(1, self.n - self.k)
        } else {
            0
        };
        let suffix = if self.k > 0 {
            x.count_ones_range(self.n - self.k + 1, self.n)
        } else {
            0
        };
        ObjectivePair {
            f1: (prefix + suffix) as i64,
            f2: (prefix + self.k - suffix) as i64,
        }
    }

    /// The `k+1` front points `(n-k+i, n-i)` in `f1`-ascending order.
    pub fn pareto_front(&self) -> ParetoFront {
        let (n, k) = (self.n as i64, self.k as i64);
        ParetoFront {
            points: (0..=k)
                .map(|i| ObjectivePair::new(n - k + i, n - i))
                .collect(),
        }
    }

    /// `x` is Pareto optimal iff its first `n-k` positions are all ones,
    /// equivalently `f1 + f2 = 2n - k`.
    pub fn is_pareto_optimal(&self, x: &BitString) -> bool {
        let v = self.evaluate(x);
        v.f1 + v.f2 == 2 * self.n as i64 - self.k as i64
    }

    /// Largest possible number of mutually non-dominated values: `k+1`.
    pub fn max_antichain_size(&self) -> usize {
        self.k + 1
    }

    /// Whether `value` lies on the Pareto front.
    pub fn is_front_value(&self, value: &ObjectivePair) -> bool {
        let (n, k) = (self.n as i64, self.k as i64);
        value.f1 + value.f2 == 2 * n - k && value.f2 >= n - k && value.f2 <= n
    }

    /// The front point with second objective `level`, i.e. `(2n-k-level, level)`.
    ///
    /// Valid levels are `n-k ..= n`.
    pub fn level_value(&self, level: i64) -> ObjectivePair {
        let (n, k) = (self.n as i64, self.k as i64);
        assert!(
            (n - k..=n).contains(&level),
            "level {level} outside {}..={n}",
            n - k
        );
        ObjectivePair::new(2 * n - k - level, level)
    }

    /// Report which front points appear in `values`; non-front values are
    /// ignored.
    pub fn coverage<'a, I>(&self, values: I) -> CoverageReport
    where
        I: IntoIterator<Item = &'a ObjectivePair>,
    {
        let (n, k) = (self.n as i64, self.k as i64);
        let mut present = vec![false; self.k + 1];
        for v in values {
            if self.is_front_value(v) {
                present[(v.f1 - (n - k)) as usize] = true;
            }
        }
        CoverageReport { present }
    }
}
