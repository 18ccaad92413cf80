//! Exact containment decisions and scans over all (or sampled) tournaments
//! of a fixed order.
//!
//! A branch set hosts the pattern iff the bipartite graph between its
//! demands and their candidate midpoints has a matching saturating the
//! demands, so enumerating branch sets (and, for `Hk`, their orders) and
//! running one maximum matching each decides containment exactly.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;

use crate::bits::VertexSet;
use crate::embedding::{Pattern, SubdivisionEmbedding};
use crate::error::{Error, Result};
use crate::generators::random_tournament;
use crate::matching::max_matching;
use crate::tournament::Tournament;

/// Default cap on `C(n,k)·k!` for a single containment decision.
pub const DEFAULT_ORACLE_BUDGET: u128 = 1_000_000_000;
/// Default cap on the number of labelled tournaments in an exhaustive scan
/// (`2²¹`, all tournaments on 7 vertices).
pub const DEFAULT_SCAN_BUDGET: u128 = 1 << 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Found(SubdivisionEmbedding),
    /// Every branch choice was examined and none admits distinct midpoints.
    Absent,
}

impl OracleAnswer {
    pub fn is_found(&self) -> bool {
        matches!(self, OracleAnswer::Found(_))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |a, b| a.saturating_mul(b))
}

/// `C(n,k)·k!`, the number of ordered branch choices.
pub fn oracle_work(n: usize, k: usize) -> u128 {
    binomial(n, k).saturating_mul(factorial(k))
}

/// Calls `f` with each `k`-subset of `0..n` in lexicographic order until it
/// returns `true`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Heap's algorithm over permutations of `items`, stopping when `f` returns
/// `true`.
fn for_each_permutation(items: &mut [usize], mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let k = items.len();
    if f(items) {
        return true;
    }
    let mut c = vec![0usize; k];
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            if f(items) {
                return true;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Matches `branch` order against candidate lists looked up by `cand`.
fn try_branch<'a>(
    pattern: Pattern,
    branch: &[usize],
    cand: &dyn Fn(usize, usize) -> &'a [usize],
    n: usize,
) -> Option<SubdivisionEmbedding> {
    let pairs = pattern.pairs(branch.len());
    let adj: Vec<Vec<usize>> = pairs
        .iter()
        .map(|&(i, j)| cand(branch[i], branch[j]).to_vec())
        .collect();
    if adj.iter().any(Vec::is_empty) {
        return None;
    }
    let m = max_matching(&adj, n);
    if m.size() < pairs.len() {
        return None;
    }
    let mut e = SubdivisionEmbedding::new(pattern, branch.to_vec());
    for (p, r) in pairs.into_iter().zip(m.left) {
        e.midpoints.insert(p, r.expect("saturated"));
    }
    Some(e)
}

/// Any-size search with explicit candidate lists and [`max_matching`].
fn search_general(t: &Tournament, pattern: Pattern, k: usize) -> Option<SubdivisionEmbedding> {
    let n = t.n();
    let mut found = None;
    for_each_subset(n, k, |subset| {
        let forbidden = VertexSet::from_iter_bounded(n, subset.iter().copied());
        // Candidate lists for every ordered pair of positions in the subset.
        let mut table: Vec<Vec<usize>> = vec![Vec::new(); k * k];
        for (a, &u) in subset.iter().enumerate() {
            for (b, &v) in subset.iter().enumerate() {
                if a != b {
                    table[a * k + b] = t.midpoint_candidates(u, v, Some(&forbidden)).collect();
                }
            }
        }
        let pos = |v: usize| subset.iter().position(|&x| x == v).expect("branch in subset");
        let cand = |u: usize, v: usize| -> &[usize] { &table[pos(u) * k + pos(v)] };
        match pattern {
            Pattern::Kk => {
                found = try_branch(pattern, subset, &cand, n);
            }
            Pattern::Hk => {
                let mut order = subset.to_vec();
                for_each_permutation(&mut order, |perm| {
                    found = try_branch(pattern, perm, &cand, n);
                    found.is_some()
                });
            }
        }
        found.is_some()
    });
    found
}

const FREE: u8 = u8::MAX;

fn kuhn_mask(l: usize, cands: &[u64], visited: &mut u64, owner: &mut [u8; 64], assign: &mut [u8]) -> bool {
    let mut avail = cands[l] & !*visited;
    while avail != 0 {
        let r = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        *visited |= 1 << r;
        if owner[r] == FREE || kuhn_mask(owner[r] as usize, cands, visited, owner, assign) {
            owner[r] = l as u8;
            assign[l] = r as u8;
            return true;
        }
    }
    false
}

/// Distinct representatives for candidate masks, written to `assign`.
fn sdr_mask(cands: &[u64], assign: &mut [u8]) -> bool {
    if cands.contains(&0) {
        return false;
    }
    let mut owner = [FREE; 64];
    (0..cands.len()).all(|l| {
        let mut visited = 0u64;
        kuhn_mask(l, cands, &mut visited, &mut owner, assign)
    })
}

/// The same search for `n ≤ 64` with one machine word per vertex set.
fn search_bitmask(t: &Tournament, pattern: Pattern, k: usize) -> Option<SubdivisionEmbedding> {
    let n = t.n();
    debug_assert!(n <= 64);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let out: Vec<u64> = (0..n).map(|u| t.row(u)[0]).collect();
    let inn: Vec<u64> = (0..n).map(|v| all & !out[v] & !(1u64 << v)).collect();
    let pairs = pattern.pairs(k);
    let mut table = vec![0u64; k * k];
    let mut cands = vec![0u64; pairs.len()];
    let mut assign = vec![0u8; pairs.len()];
    let mut found = None;

    let finish = |subset: &[usize], order: &[usize], assign: &[u8]| {
        let mut e = SubdivisionEmbedding::new(pattern, order.iter().map(|&a| subset[a]).collect());
        for (&p, &m) in pairs.iter().zip(assign) {
            e.midpoints.insert(p, m as usize);
        }
        e
    };

    for_each_subset(n, k, |subset| {
        let branch_mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
        for (a, &u) in subset.iter().enumerate() {
            for (b, &v) in subset.iter().enumerate() {
                table[a * k + b] = if a == b { 0 } else { out[u] & inn[v] & !branch_mask };
            }
        }
        let mut order: Vec<usize> = (0..k).collect();
        let mut attempt = |order: &[usize]| {
            for (slot, &(i, j)) in pairs.iter().enumerate() {
                cands[slot] = table[order[i] * k + order[j]];
            }
            sdr_mask(&cands, &mut assign)
        };
        let hit = match pattern {
            Pattern::Kk => attempt(&order),
            Pattern::Hk => for_each_permutation(&mut order, |perm| attempt(perm)),
        };
        if hit {
            found = Some(finish(subset, &order, &assign));
        }
        hit
    });
    found
}

/// Decides exactly whether `t` contains a 1-subdivision of `pattern` on `k`
/// branch vertices. Refuses with [`Error::BudgetExceeded`] when
/// `C(n,k)·k!` exceeds `budget`.
pub fn oracle_contains(t: &Tournament, pattern: Pattern, k: usize, budget: u128) -> Result<OracleAnswer> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = t.n();
    if pattern.vertex_count(k) > n {
        return Ok(OracleAnswer::Absent);
    }
    let needed = oracle_work(n, k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let found = if n <= 64 {
        search_bitmask(t, pattern, k)
    } else {
        search_general(t, pattern, k)
    };
    Ok(found.map_or(OracleAnswer::Absent, OracleAnswer::Found))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Every labelled tournament on `n` vertices.
    Exhaustive,
    /// This many seeded random tournaments.
    Sample(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBudget {
    /// Maximum number of labelled tournaments for an exhaustive scan.
    pub max_tournaments: u128,
    /// Maximum `C(n,k)·k!` per containment decision.
    pub oracle_work: u128,
}

impl Default for ScanBudget {
    fn default() -> Self {
        Self {
            max_tournaments: DEFAULT_SCAN_BUDGET,
            oracle_work: DEFAULT_ORACLE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub pattern: Pattern,
    pub k: usize,
    pub n: usize,
    pub mode: ScanMode,
    pub total: u64,
    pub containing: u64,
    /// The first tournament (lowest arc mask, or lowest sample index) found
    /// without the pattern.
    pub first_counterexample: Option<Tournament>,
    pub seed: Option<u64>,
}

impl ScanReport {
    pub fn all_contain(&self) -> bool {
        self.containing == self.total
    }

    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.containing as f64 / self.total as f64
        }
    }
}

/// Counts over one slice of the scan space; merging is associative.
#[derive(Clone, Copy, Debug, Default)]
struct Partial {
    total: u64,
    containing: u64,
    first_miss: Option<u64>,
}

impl Partial {
    fn merge(self, other: Partial) -> Partial {
        Partial {
            total: self.total + other.total,
            containing: self.containing + other.containing,
            first_miss: match (self.first_miss, other.first_miss) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// The tournament on `n` vertices whose pair `(i, j)`, `i < j`, in
/// lexicographic position `p` is oriented `i→j` iff bit `p` of `mask` is set.
pub fn tournament_from_mask(n: usize, mask: u64) -> Result<Tournament> {
    let mut p = 0;
    Tournament::from_orientation(n, |_, _| {
        let bit = mask >> p & 1 == 1;
        p += 1;
        bit
    })
}

fn sample_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// Runs the oracle over every labelled tournament on `n` vertices
/// (exhaustive) or over seeded random ones (sample). Sample `i` is
/// `random_tournament(n, s_i)` where `s_0, s_1, …` is the SplitMix64 stream
/// seeded with `seed`.
pub fn ramsey_scan(
    pattern: Pattern,
    k: usize,
    n: usize,
    mode: ScanMode,
    seed: u64,
    budget: ScanBudget,
) -> Result<ScanReport> {
    if n == 0 {
        return Err(Error::EmptyTournament);
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if pattern.vertex_count(k) <= n {
        let needed = oracle_work(n, k);
        if needed > budget.oracle_work {
            return Err(Error::BudgetExceeded {
                needed,
                budget: budget.oracle_work,
            });
        }
    }
    let contains = |t: &Tournament| -> bool {
        oracle_contains(t, pattern, k, budget.oracle_work)
            .expect("budget checked up front")
            .is_found()
    };

    match mode {
        ScanMode::Exhaustive => {
            let pairs = n * (n - 1) / 2;
            let count: u128 = if pairs >= 127 { u128::MAX } else { 1u128 << pairs };
            if count > budget.max_tournaments || pairs >= 64 {
                return Err(Error::BudgetExceeded {
                    needed: count,
                    budget: budget.max_tournaments,
                });
            }
            let part = (0..count as u64)
                .into_par_iter()
                .map(|mask| {
                    let t = tournament_from_mask(n, mask).expect("n >= 1");
                    let hit = contains(&t);
                    Partial {
                        total: 1,
                        containing: u64::from(hit),
                        first_miss: (!hit).then_some(mask),
                    }
                })
                .reduce(Partial::default, Partial::merge);
            Ok(ScanReport {
                pattern,
                k,
                n,
                mode,
                total: part.total,
                containing: part.containing,
                first_counterexample: part.first_miss.map(|m| tournament_from_mask(n, m).expect("n >= 1")),
                seed: None,
            })
        }
        ScanMode::Sample(samples) => {
            if samples == 0 {
                return Err(Error::InvalidParameter("sample count must be at least 1".into()));
            }
            let seeds = sample_seeds(seed, samples);
            let part = seeds
                .par_iter()
                .enumerate()
                .map(|(i, &s)| {
                    let t = random_tournament(n, s).expect("n >= 1");
                    let hit = contains(&t);
                    Partial {
                        total: 1,
                        containing: u64::from(hit),
                        first_miss: (!hit).then_some(i as u64),
                    }
                })
                .reduce(Partial::default, Partial::merge);
            Ok(ScanReport {
                pattern,
                k,
                n,
                mode,
                total: part.total,
                containing: part.containing,
                first_counterexample: part
                    .first_miss
                    .map(|i| random_tournament(n, seeds[i as usize]).expect("n >= 1")),
                seed: Some(seed),
            })
        }
    }
}
