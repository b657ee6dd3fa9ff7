//! Bitstrings, seeded random streams, and the shared mutation operators.
//!
//! Bit positions are 1-based in every public interface. A [`BitString`] is
//! immutable in spirit: the mutation operators return fresh copies and never
//! touch their input.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fixed-length binary vector; the search-space element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    /// All-zero string of length `n`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "bitstring length must be positive");
        BitString { bits: vec![false; n] }
    }

    /// All-one string of length `n`.
    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "bitstring length must be positive");
        BitString { bits: vec![true; n] }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        assert!(!bits.is_empty(), "bitstring length must be positive");
        BitString { bits }
    }

    /// Prefix of `ones` one-bits followed by zeros, e.g. `1^{n-k} 0^k`.
    pub fn ones_then_zeros(ones: usize, total: usize) -> Self {
        assert!(ones <= total);
        let mut bits = vec![false; total];
        bits[..ones].fill(true);
        BitString { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length is always >= 1
    }

    /// Value of the bit at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(
            (1..=self.len()).contains(&i),
            "bit index {i} out of range 1..={}",
            self.len()
        );
        self.bits[i - 1]
    }

    /// Flip the bit at 1-based position `i` in place.
    pub fn flip(&mut self, i: usize) {
        assert!(
            (1..=self.len()).contains(&i),
            "bit index {i} out of range 1..={}",
            self.len()
        );
        self.bits[i - 1] = !self.bits[i - 1];
    }

    /// Copy with the bit at 1-based position `i` flipped.
    pub fn flipped(&self, i: usize) -> Self {
        let mut child = self.clone();
        child.flip(i);
        child
    }

    /// Number of one-bits in the whole string.
    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Number of one-bits in the inclusive 1-based range `a..=b`.
    ///
    /// Panics if `a < 1`, `b > n`, or `a > b`.
    pub fn count_ones_range(&self, a: usize, b: usize) -> usize {
        assert!(
            1 <= a && a <= b && b <= self.len(),
            "range {a}..={b} invalid for length {}",
            self.len()
        );
        self.bits[a - 1..b].iter().filter(|&&b| b).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// Compact integer encoding (bit 1 is the lowest bit); requires `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.len() <= 64);
        self.bits
            .iter()
            .enumerate()
            .fold(0u64, |m, (j, &b)| if b { m | (1 << j) } else { m })
    }

    /// Inverse of [`BitString::to_mask`].
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n >= 1 && n <= 64);
        BitString {
            bits: (0..n).map(|j| mask & (1 << j) != 0).collect(),
        }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err("empty bitstring".to_string());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid bit character {other:?}")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString::from_bits)
    }
}

/// Seeded pseudo-random stream.
///
/// Identical seeds yield identical draw sequences. A stream is single-owner;
/// per-trial streams are derived from a master seed with [`derive_seed`].
pub struct RngStream {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn from_seed(seed: u64) -> Self {
        RngStream {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw from `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Uniform draw from `1..=n` (a 1-based bit position).
    pub fn position(&mut self, n: usize) -> usize {
        self.rng.gen_range(1..=n)
    }

    pub fn bit(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn f64(&mut self) -> f64 {
        self.rng.gen()
    }

    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        slice.shuffle(&mut self.rng);
    }
}

impl fmt::Debug for RngStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RngStream(seed={})", self.seed)
    }
}

/// Deterministic seed split: `(master, index) -> derived seed`.
///
/// SplitMix64 finalizer applied to the master seed offset by the index times
/// the golden-ratio constant. Composable: nested splits give independent
/// streams for (cell, trial) grids.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ (index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform random bitstring of length `n`.
pub fn random_bitstring(n: usize, rng: &mut RngStream) -> BitString {
    assert!(n >= 1);
    BitString::from_bits((0..n).map(|_| rng.bit()).collect())
}

/// Flip exactly one position, chosen uniformly at random.
pub fn one_bit_mutation(x: &BitString, rng: &mut RngStream) -> BitString {
    x.flipped(rng.position(x.len()))
}

/// Flip each bit independently with probability `1/n`.
pub fn standard_bitwise_mutation(x: &BitString, rng: &mut RngStream) -> BitString {
    let n = x.len();
    let mut child = x.clone();
    for i in 1..=n {
        if rng.index(n) == 0 {
            child.flip(i);
        }
    }
    child
}
