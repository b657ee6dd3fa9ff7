//! Core library for the `OneMaxMin_k` bi-objective benchmark family.
//!
//! `OneMaxMin_k` is a pseudo-Boolean maximization problem on `{0,1}^n` whose
//! two objectives agree on the first `n-k` bit positions and oppose each other
//! on the last `k`; the parameter `k` is the degree of conflict. The crate
//! provides:
//!
//! * bitstrings, seeded random streams, and the two classic mutation
//!   operators ([`bits`]),
//! * the benchmark itself with exact integer objectives, dominance relations,
//!   and its closed-form Pareto front ([`bench`]),
//! * single-objective reformulations (weighted sum, ε-constraint with
//!   exterior and nonparameter penalties, Tchebycheff subproblems) together
//!   with exact analytic optimal-set oracles ([`reform`]),
//! * randomized local search and the (1+1) EA, plus the ε-constraint
//!   full-front pipeline ([`solver`]),
//! * population-based engines — SEMO, GSEMO, SMS-EMOA, NSGA-II, and a
//!   decomposition engine — with shared non-dominated sorting, crowding
//!   distance, and exact 2-D hypervolume primitives ([`moea`]),
//! * exhaustive brute-force oracles for small instances ([`exhaustive`]).
//!
//! Objective values are exact integers throughout. Real-valued reformulation
//! arithmetic is generic over a scalar type: `f64` for solver runs (penalty
//! parameters are dyadic, so that path is exact too) and [`Rational`] where
//! knife-edge case analysis demands exact comparisons.

pub mod bench;
pub mod bits;
pub mod exhaustive;
pub mod moea;
pub mod reform;
pub mod scalar;
pub mod solver;

/// Exact rational scalar used by the analytic oracles.
pub type Rational = num_rational::Rational64;

pub use bench::{CoverageReport, ObjectivePair, ParetoFront, ProblemInstance};
pub use bits::{
    derive_seed, one_bit_mutation, random_bitstring, standard_bitwise_mutation, BitString,
    RngStream,
};
pub use reform::{OptimalSet, PenaltyMode, PenaltySpec, ScalarizationSpec, SubproblemSpec};
