//! Tournament constructions.
//!
//! Random tournaments use SplitMix64 (the `rand_xoshiro` implementation)
//! seeded with the caller's 64-bit seed. Pairs `i < j` are visited in
//! lexicographic order and each consumes one output word; the pair is
//! oriented `i→j` iff the word's top bit is set.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    Tournament::from_orientation(n, |_, _| rng.next_u64() >> 63 == 1)
}

/// Arc `i→j` iff `i < j`.
pub fn transitive_tournament(n: usize) -> Result<Tournament> {
    Tournament::from_orientation(n, |_, _| true)
}

/// The circulant regular tournament: arc `i→j` iff `(j − i) mod n` lies in
/// `1..=(n−1)/2`.
pub fn rotational_tournament(n: usize) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    let half = (n - 1) / 2;
    Tournament::from_orientation(n, |i, j| j - i <= half)
}

/// Part layout of [`blowup_construction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupLayout {
    /// Order of the regular tournament being blown up (odd).
    pub k_prime: usize,
    /// `⌈n / k'⌉`
    pub ell: usize,
    /// Sizes of the parts in vertex-id order.
    pub part_sizes: Vec<usize>,
}

impl BlowupLayout {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("blow-up needs k >= 3, got {k}")));
        }
        let k_prime = if (k - 2) % 2 == 1 { k - 2 } else { k - 1 };
        if n < k_prime {
            return Err(Error::InvalidParameter(format!(
                "blow-up needs n >= {k_prime} for k = {k}, got n = {n}"
            )));
        }
        let ell = n.div_ceil(k_prime);
        let big = n - k_prime * (ell - 1);
        let part_sizes = (0..k_prime).map(|p| if p < big { ell } else { ell - 1 }).collect();
        Ok(Self {
            k_prime,
            ell,
            part_sizes,
        })
    }

    /// Part index of every vertex.
    pub fn part_of(&self) -> Vec<usize> {
        self.part_sizes
            .iter()
            .enumerate()
            .flat_map(|(p, &s)| std::iter::repeat_n(p, s))
            .collect()
    }
}

/// Blows up each vertex of the rotational tournament on `k'` vertices (the
/// odd member of `{k−2, k−1}`) into a transitive tournament. Parts are
/// contiguous id ranges; the first `n − k'(ℓ−1)` parts have size `ℓ` and the
/// rest `ℓ − 1`.
///
/// Any two branch vertices in one part would need both connecting paths to
/// stay inside that transitive part, so the result contains no
/// 1-subdivision of the complete digraph on `k` vertices.
pub fn blowup_construction(n: usize, k: usize) -> Result<Tournament> {
    let layout = BlowupLayout::new(n, k)?;
    let part = layout.part_of();
    let base = rotational_tournament(layout.k_prime)?;
    Tournament::from_orientation(n, |i, j| {
        if part[i] == part[j] {
            true
        } else {
            base.has_arc(part[i], part[j])
        }
    })
}
