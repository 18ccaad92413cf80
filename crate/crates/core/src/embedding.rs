//! Embeddings of 1-subdivisions and their verifier.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// The subdivided pattern: `Hk` subdivides the transitive tournament on
/// `k` vertices, `Kk` subdivides the complete digraph on `k` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Hk,
    Kk,
}

impl Pattern {
    /// Ordered branch-index pairs that need a midpoint, lexicographically.
    pub fn pairs(self, k: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let wanted = match self {
                    Pattern::Hk => i < j,
                    Pattern::Kk => i != j,
                };
                if wanted {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn pair_count(self, k: usize) -> usize {
        match self {
            Pattern::Hk => k * k.saturating_sub(1) / 2,
            Pattern::Kk => k * k.saturating_sub(1),
        }
    }

    /// Vertices used by an embedding: branches plus one midpoint per pair.
    pub fn vertex_count(self, k: usize) -> usize {
        k + self.pair_count(k)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::Hk => "hk",
            Pattern::Kk => "kk",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hk" => Ok(Pattern::Hk),
            "kk" => Ok(Pattern::Kk),
            other => Err(Error::InvalidParameter(format!(
                "unknown pattern {other:?}, expected hk or kk"
            ))),
        }
    }
}

/// Branch vertices plus a midpoint for every required ordered pair of branch
/// indices. Indices into `branch` are 0-based; for `Hk` the branch order is
/// the transitive order, so only pairs `i < j` appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionEmbedding {
    pub pattern: Pattern,
    pub k: usize,
    pub branch: Vec<usize>,
    pub midpoints: BTreeMap<(usize, usize), usize>,
}

impl SubdivisionEmbedding {
    pub fn new(pattern: Pattern, branch: Vec<usize>) -> Self {
        Self {
            pattern,
            k: branch.len(),
            branch,
            midpoints: BTreeMap::new(),
        }
    }

    /// Every vertex the embedding occupies.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.branch.iter().chain(self.midpoints.values()).copied().collect();
        all.sort_unstable();
        all
    }

    /// Rejects any referenced vertex id `>= n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.branch.iter().chain(self.midpoints.values()).find(|&&v| v >= n) {
            Some(&v) => Err(Error::InvalidVertex { vertex: v, n }),
            None => Ok(()),
        }
    }

    /// Maps every vertex through `f` (used to lift embeddings found in an
    /// induced subtournament back to the host).
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self {
            pattern: self.pattern,
            k: self.k,
            branch: self.branch.iter().map(|&v| f(v)).collect(),
            midpoints: self.midpoints.iter().map(|(&p, &m)| (p, f(m))).collect(),
        }
    }
}

/// One failed constraint of an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The branch list length disagrees with `k`.
    BranchCount { expected: usize, found: usize },
    /// A vertex id outside the host tournament.
    OutOfRange { vertex: usize },
    /// A vertex used in more than one role.
    Duplicate { vertex: usize, roles: Vec<String> },
    /// A required pair has no midpoint.
    MissingMidpoint { i: usize, j: usize },
    /// A midpoint is given for a pair the pattern does not contain.
    UnexpectedPair { i: usize, j: usize },
    /// The path `branch[i] → m → branch[j]` lacks one or both arcs.
    BrokenPath {
        i: usize,
        j: usize,
        midpoint: usize,
        missing: Vec<(usize, usize)>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BranchCount { expected, found } => {
                write!(f, "branch-count: expected {expected} branch vertices, found {found}")
            }
            Violation::OutOfRange { vertex } => write!(f, "out-of-range: vertex {vertex}"),
            Violation::Duplicate { vertex, roles } => {
                write!(f, "distinctness: vertex {vertex} used as {}", roles.join(", "))
            }
            Violation::MissingMidpoint { i, j } => {
                write!(f, "missing-midpoint: pair ({}, {})", i + 1, j + 1)
            }
            Violation::UnexpectedPair { i, j } => {
                write!(f, "unexpected-pair: ({}, {}) is not part of the pattern", i + 1, j + 1)
            }
            Violation::BrokenPath {
                i,
                j,
                midpoint,
                missing,
            } => {
                let arcs: Vec<String> = missing.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                write!(
                    f,
                    "missing-arc: pair ({}, {}) via {midpoint} lacks {}",
                    i + 1,
                    j + 1,
                    arcs.join(" and ")
                )
            }
        }
    }
}

/// Checks that `e` is a 1-subdivision embedding in `t`. An empty result means
/// valid.
pub fn verify_embedding(t: &Tournament, e: &SubdivisionEmbedding) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = t.n();
    if e.branch.len() != e.k {
        out.push(Violation::BranchCount {
            expected: e.k,
            found: e.branch.len(),
        });
    }

    let mut roles: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, &b) in e.branch.iter().enumerate() {
        roles.entry(b).or_default().push(format!("branch {}", i + 1));
    }
    for (&(i, j), &m) in &e.midpoints {
        roles
            .entry(m)
            .or_default()
            .push(format!("midpoint ({}, {})", i + 1, j + 1));
    }
    for (&v, r) in &roles {
        if v >= n {
            out.push(Violation::OutOfRange { vertex: v });
        }
        if r.len() > 1 {
            out.push(Violation::Duplicate {
                vertex: v,
                roles: r.clone(),
            });
        }
    }

    let required = e.pattern.pairs(e.branch.len());
    for &(i, j) in &required {
        if !e.midpoints.contains_key(&(i, j)) {
            out.push(Violation::MissingMidpoint { i, j });
        }
    }
    for (&(i, j), &m) in &e.midpoints {
        let in_pattern = i < e.branch.len()
            && j < e.branch.len()
            && match e.pattern {
                Pattern::Hk => i < j,
                Pattern::Kk => i != j,
            };
        if !in_pattern {
            out.push(Violation::UnexpectedPair { i, j });
            continue;
        }
        let (a, b) = (e.branch[i], e.branch[j]);
        if a >= n || b >= n || m >= n {
            continue;
        }
        let mut missing = Vec::new();
        if !t.has_arc(a, m) {
            missing.push((a, m));
        }
        if !t.has_arc(m, b) {
            missing.push((m, b));
        }
        if !missing.is_empty() {
            out.push(Violation::BrokenPath {
                i,
                j,
                midpoint: m,
                missing,
            });
        }
    }
    out
}
