//! Brute-force reference implementations shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use tsubdiv::{Tournament, VertexSet};

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Uniform integer in `lo..=hi`.
pub fn range(rng: &mut SplitMix64, lo: usize, hi: usize) -> usize {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as usize
}

/// `|N⁺(u) \ N⁺(v)|` straight from the arc relation.
pub fn p2_naive(t: &Tournament, u: usize, v: usize) -> usize {
    (0..t.n())
        .filter(|&w| w != u && t.has_arc(u, w) && (w == v || !t.has_arc(v, w)))
        .count()
}

/// Midpoints `m` with `u→m→v` that are neither forbidden nor an endpoint of
/// any demand.
pub fn midpoints(
    t: &Tournament,
    demands: &[(usize, usize)],
    forbidden: &BTreeSet<usize>,
    u: usize,
    v: usize,
) -> Vec<usize> {
    let endpoints: BTreeSet<usize> = demands.iter().flat_map(|&(a, b)| [a, b]).collect();
    (0..t.n())
        .filter(|m| !forbidden.contains(m) && !endpoints.contains(m))
        .filter(|&m| t.has_arc(u, m) && t.has_arc(m, v))
        .collect()
}

/// Exhaustive backtracking for distinct midpoints, one per demand.
pub fn brute_connect(t: &Tournament, demands: &[(usize, usize)], forbidden: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let cands: Vec<Vec<usize>> = demands
        .iter()
        .map(|&(u, v)| midpoints(t, demands, forbidden, u, v))
        .collect();
    let mut used = vec![false; t.n()];
    let mut chosen = Vec::with_capacity(demands.len());
    fn go(i: usize, cands: &[Vec<usize>], used: &mut [bool], chosen: &mut Vec<usize>) -> bool {
        if i == cands.len() {
            return true;
        }
        for &m in &cands[i] {
            if !used[m] {
                used[m] = true;
                chosen.push(m);
                if go(i + 1, cands, used, chosen) {
                    return true;
                }
                chosen.pop();
                used[m] = false;
            }
        }
        false
    }
    go(0, &cands, &mut used, &mut chosen).then_some(chosen)
}

pub fn to_set(n: usize, items: &BTreeSet<usize>) -> VertexSet {
    VertexSet::from_iter_bounded(n, items.iter().copied())
}

/// All `2^(n(n−1)/2)` labelled tournaments on `n` vertices.
pub fn all_tournaments(n: usize) -> Vec<Tournament> {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs)
        .map(|mask| {
            let mut p = 0;
            Tournament::from_orientation(n, |_, _| {
                let b = mask >> p & 1 == 1;
                p += 1;
                b
            })
            .unwrap()
        })
        .collect()
}
