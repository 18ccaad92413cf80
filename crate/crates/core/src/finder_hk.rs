//! Finding a 1-subdivision of the transitive tournament on `k` vertices.
//!
//! The search follows an inductive argument:
//!
//! 1. A greedy transitive subtournament of size `⌊log₂ n⌋ + 1` already hosts
//!    `H_s` whenever `s(s+1)/2` vertices fit in it.
//! 2. Sort vertices by out-degree. If the degree at the top quarter boundary
//!    exceeds the degree at the bottom quarter boundary by at least `k²`,
//!    every top-quarter vertex has at least `k²` short paths to every
//!    bottom-quarter vertex, so two half-size copies found recursively in the
//!    top and bottom quarters can be joined by disjoint length-2 paths.
//! 3. Otherwise the middle half is covered by balls of the auxiliary graph
//!    (threshold `k²`) whose radii are chosen so each ball grows slowly
//!    relative to its interior. The interiors are pairwise non-adjacent in
//!    the auxiliary graph, so copies found in them recursively can again be
//!    joined pairwise.
//!
//! In [`Mode::Faithful`] the steps run exactly as stated with the configured
//! constant. [`Mode::Practical`] additionally tries an independent-set
//! shortcut first and never aborts when a radius search runs out of range.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::aux_graph::{build_aux_graph, AuxGraph};
use crate::bits::VertexSet;
use crate::connector::{connect_pairs, Assignment, ConnectError};
use crate::embedding::{Pattern, SubdivisionEmbedding};
use crate::error::Error;
use crate::finder_kk::find_via_independent_set;
use crate::tournament::{descending_degree_order, PartitionThirds, Tournament};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Faithful,
    Practical,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "faithful" => Ok(Mode::Faithful),
            "practical" => Ok(Mode::Practical),
            other => Err(Error::InvalidParameter(format!(
                "unknown mode {other:?}, expected faithful or practical"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FinderConfig {
    /// Constant in the part-size formula `m_i = ⌊√(|C_i| / (C·log log k))⌋`.
    pub c: f64,
    pub mode: Mode,
    pub recursion_depth_limit: usize,
}

impl FinderConfig {
    /// `2³⁰`, the constant for which the inductive argument is proven.
    pub const PROOF_CONSTANT: f64 = (1u64 << 30) as f64;

    pub fn faithful() -> Self {
        Self {
            c: Self::PROOF_CONSTANT,
            mode: Mode::Faithful,
            recursion_depth_limit: 32,
        }
    }

    /// Practical mode with `C = 1`.
    pub fn practical() -> Self {
        Self {
            c: 1.0,
            mode: Mode::Practical,
            recursion_depth_limit: 32,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.c.is_finite() && self.c >= 1.0) {
            return Err(Error::InvalidParameter(format!("C must be >= 1, got {}", self.c)));
        }
        if self.recursion_depth_limit == 0 {
            return Err(Error::InvalidParameter("recursion depth limit must be >= 1".into()));
        }
        Ok(())
    }
}

impl Default for FinderConfig {
    fn default() -> Self {
        Self::faithful()
    }
}

/// A search that ran to completion without finding the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub stage: String,
    pub trace: Vec<String>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.stage)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FindError {
    #[error(transparent)]
    Usage(#[from] Error),
    #[error("not found: {0}")]
    Failed(Failure),
}

impl FindError {
    pub fn failure(&self) -> Option<&Failure> {
        match self {
            FindError::Failed(f) => Some(f),
            FindError::Usage(_) => None,
        }
    }
}

/// One ball `(v_i, r_i, X_i, Y_i)` of the decomposition: `X_i` is the ball
/// of radius `r_i − 1` and `Y_i` the ball of radius `r_i` around `v_i` in
/// what remained of the graph when the part was taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPart {
    pub center: usize,
    pub radius: usize,
    pub inner: Vec<usize>,
    pub outer: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadiusSearch {
    Found(usize),
    Exhausted,
}

/// `log₂ log₂ k` as a real number, floored at 1 so the part-size formula
/// stays defined for `k ≤ 4`.
pub fn loglog(k: usize) -> f64 {
    let v = (k.max(2) as f64).log2().log2();
    v.max(1.0)
}

/// `⌈log₂ log₂ k⌉`, and 0 for `k ≤ 2`.
pub fn loglog_ceil(k: usize) -> usize {
    if k <= 2 {
        return 0;
    }
    // Smallest t with 2^(2^t) >= k.
    let mut t = 0;
    while t < 6 && (1u128 << (1u32 << t)) < k as u128 {
        t += 1;
    }
    t
}

/// Largest radius the ball search may use: `1 + ⌈log₂ log₂ k⌉`.
pub fn max_radius(k: usize) -> usize {
    1 + loglog_ceil(k)
}

/// Greedy transitive subtournament: repeatedly take a vertex of maximum
/// out-degree among the remaining vertices (smallest id on ties), then keep
/// only its out-neighbours. Every chosen vertex beats all later ones. The
/// result has at least `⌊log₂ n⌋ + 1` vertices.
pub fn find_transitive_subtournament(t: &Tournament) -> Vec<usize> {
    let mut remaining = VertexSet::from_iter_bounded(t.n(), 0..t.n());
    let mut order = Vec::new();
    while !remaining.is_empty() {
        let outside = not_words(&remaining);
        let (best, _) = remaining
            .iter()
            .map(|v| (v, crate::bits::count_and_not(t.row(v), &outside)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("non-empty");
        order.push(best);
        let next: Vec<usize> = remaining.iter().filter(|&w| t.has_arc(best, w)).collect();
        remaining = VertexSet::from_iter_bounded(t.n(), next);
    }
    order
}

fn not_words(s: &VertexSet) -> Vec<u64> {
    s.words().iter().map(|w| !w).collect()
}

/// Lays out `H_s` along a transitive order: branch `j` (1-based) sits at
/// position `j(j+1)/2`, and the midpoint of pair `(i, j)` fills slot `i` of
/// the `j − 1` positions just before it.
pub fn embed_h_in_transitive(order: &[usize], s: usize) -> Result<SubdivisionEmbedding, Error> {
    let needed = s * (s + 1) / 2;
    if order.len() < needed {
        return Err(Error::InvalidParameter(format!(
            "transitive order of length {} cannot host H_{s} (needs {needed})",
            order.len()
        )));
    }
    let pos = |j: usize| j * (j + 1) / 2 - 1; // 0-based position of branch j (1-based)
    let mut e = SubdivisionEmbedding::new(Pattern::Hk, (1..=s).map(|j| order[pos(j)]).collect());
    for j in 2..=s {
        let gap_start = pos(j - 1) + 1;
        for i in 1..j {
            e.midpoints.insert((i - 1, j - 1), order[gap_start + i - 1]);
        }
    }
    Ok(e)
}

/// Thirds by descending out-degree, plus the gap `d⁺(v_{⌊n/4⌋}) − d⁺(v_{⌈3n/4⌉})`
/// (1-based positions in that order).
pub fn degree_gap_split(t: &Tournament) -> Result<(PartitionThirds, usize), Error> {
    let n = t.n();
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "degree split needs at least 4 vertices, got {n}"
        )));
    }
    let order = descending_degree_order(t);
    let q = n / 4;
    let hi = t.out_degree(order[q - 1]);
    let lo = t.out_degree(order[(3 * n).div_ceil(4) - 1]);
    let thirds = PartitionThirds {
        v1: order[..q].to_vec(),
        v2: order[q..n - q].to_vec(),
        v3: order[n - q..].to_vec(),
    };
    Ok((thirds, hi - lo))
}

/// `|B^r| ≤ (1/10)·√n·√|B^{r−1}|`, evaluated exactly as
/// `100·|B^r|² ≤ n·|B^{r−1}|`.
fn slow_growth(outer: usize, inner: usize, n: usize) -> bool {
    100 * (outer as u128).pow(2) <= n as u128 * inner as u128
}

fn radius_search_local(g: &AuxGraph, src: usize, n: usize, k: usize, alive: Option<&[bool]>) -> RadiusSearch {
    let rmax = max_radius(k);
    let sizes = g.ball_sizes_local(src, rmax, alive);
    (1..=rmax)
        .find(|&r| slow_growth(sizes[r], sizes[r - 1], n))
        .map_or(RadiusSearch::Exhausted, RadiusSearch::Found)
}

/// Least `r` in `1..=1 + ⌈log₂ log₂ k⌉` with
/// `|B^r(v)| ≤ (1/10)·√n·√|B^{r−1}(v)|`.
pub fn expansion_radius(g: &AuxGraph, v: usize, n: usize, k: usize) -> Result<RadiusSearch, Error> {
    let src = g.local(v)?;
    Ok(radius_search_local(g, src, n, k, None))
}

/// Covers `g` with balls: repeatedly centre a ball at the smallest remaining
/// id, pick its radius with [`expansion_radius`] in the remaining graph, and
/// delete the outer ball. In faithful mode a radius search that runs out of
/// range aborts; in practical mode the radius is capped at the maximum.
pub fn ball_decomposition(g: &AuxGraph, n: usize, k: usize, mode: Mode) -> Result<Vec<DecompositionPart>, FindError> {
    let len = g.len();
    let mut alive = vec![true; len];
    // Local indices in ascending id order, so "smallest remaining id" is a scan.
    let mut by_id: Vec<usize> = (0..len).collect();
    by_id.sort_by_key(|&l| g.vertices()[l]);
    let mut cursor = 0;
    let mut parts = Vec::new();
    loop {
        while cursor < len && !alive[by_id[cursor]] {
            cursor += 1;
        }
        if cursor == len {
            break;
        }
        let src = by_id[cursor];
        let radius = match radius_search_local(g, src, n, k, Some(&alive)) {
            RadiusSearch::Found(r) => r,
            RadiusSearch::Exhausted => match mode {
                Mode::Practical => max_radius(k),
                Mode::Faithful => {
                    return Err(FindError::Failed(Failure {
                        stage: format!(
                            "ball decomposition: no admissible radius around vertex {} (n={n}, k={k})",
                            g.vertices()[src]
                        ),
                        trace: Vec::new(),
                    }))
                }
            },
        };
        let outer_local = g.ball_local(src, radius, Some(&alive));
        let inner_local = g.ball_local(src, radius - 1, Some(&alive));
        for &l in &outer_local {
            alive[l] = false;
        }
        parts.push(DecompositionPart {
            center: g.vertices()[src],
            radius,
            inner: g.to_ids(inner_local),
            outer: g.to_ids(outer_local),
        });
    }
    Ok(parts)
}

/// Whether the outer balls partition the graph and the inner balls are
/// pairwise non-adjacent.
pub fn decomposition_is_valid(g: &AuxGraph, parts: &[DecompositionPart]) -> bool {
    let mut owner = std::collections::HashMap::new();
    for (i, p) in parts.iter().enumerate() {
        if !p.inner.iter().all(|v| p.outer.binary_search(v).is_ok()) {
            return false;
        }
        for &v in &p.outer {
            if owner.insert(v, i).is_some() {
                return false;
            }
        }
    }
    if owner.len() != g.len() {
        return false;
    }
    let mut inner_of = std::collections::HashMap::new();
    for (i, p) in parts.iter().enumerate() {
        for &v in &p.inner {
            inner_of.insert(v, i);
        }
    }
    g.edges()
        .into_iter()
        .all(|(a, b)| match (inner_of.get(&a), inner_of.get(&b)) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        })
}

/// Worst ball growth relative to `coefficient·r·k²`.
#[derive(Clone, Debug, PartialEq)]
pub struct BallGrowthReport {
    /// Largest `|B^r(v)| / (coefficient·r·k²)` over all `v` and `r ≥ 1`.
    pub worst_ratio: f64,
    /// `(v, r, |B^r(v)|)` attaining the worst ratio.
    pub worst: Option<(usize, usize, usize)>,
    pub violations: usize,
    pub balls_checked: usize,
    /// False when the graph was built with a threshold above `k²`, which
    /// puts it outside the bound's hypothesis.
    pub threshold_within_contract: bool,
}

/// Checks `|B^r(v)| ≤ coefficient·r·k²` for every vertex and every radius up
/// to saturation of its component.
pub fn check_ball_growth(g: &AuxGraph, k: usize, coefficient: f64) -> BallGrowthReport {
    let k2 = (k * k) as f64;
    // (worst ratio, where, violations, balls checked) per source vertex.
    type PerVertex = (f64, Option<(usize, usize, usize)>, usize, usize);
    let per_vertex: Vec<PerVertex> = (0..g.len())
        .into_par_iter()
        .map(|src| {
            let mut worst = (0.0f64, None, 0usize, 0usize);
            let mut r = 0;
            let mut prev = 1;
            loop {
                r += 1;
                let size = *g.ball_sizes_local(src, r, None).last().unwrap();
                let bound = coefficient * r as f64 * k2;
                let ratio = size as f64 / bound;
                worst.3 += 1;
                if size as f64 > bound {
                    worst.2 += 1;
                }
                if ratio > worst.0 || worst.1.is_none() {
                    worst.0 = ratio;
                    worst.1 = Some((g.vertices()[src], r, size));
                }
                if size == prev {
                    break;
                }
                prev = size;
            }
            worst
        })
        .collect();
    let mut report = BallGrowthReport {
        worst_ratio: 0.0,
        worst: None,
        violations: 0,
        balls_checked: 0,
        threshold_within_contract: g.threshold() <= k * k,
    };
    for (ratio, at, viol, checked) in per_vertex {
        report.violations += viol;
        report.balls_checked += checked;
        if report.worst.is_none() || ratio > report.worst_ratio {
            report.worst_ratio = ratio;
            report.worst = at;
        }
    }
    report
}

/// Whether all out-degrees over `verts` differ by less than `k²`.
pub fn degree_difference_holds(t: &Tournament, verts: &[usize], k: usize) -> bool {
    let degs = verts.iter().map(|&v| t.out_degree(v));
    match (degs.clone().max(), degs.min()) {
        (Some(hi), Some(lo)) => hi - lo < k * k,
        _ => true,
    }
}

/// Concatenates `pieces` in order (branches of earlier pieces precede later
/// ones) and adds the cross-piece midpoints from `cross`.
fn combine(pieces: &[SubdivisionEmbedding], cross: &Assignment) -> SubdivisionEmbedding {
    let mut index = std::collections::HashMap::new();
    let mut out = SubdivisionEmbedding::new(Pattern::Hk, Vec::new());
    for piece in pieces {
        let offset = out.branch.len();
        for (i, &b) in piece.branch.iter().enumerate() {
            index.insert(b, offset + i);
            out.branch.push(b);
        }
        for (&(i, j), &m) in &piece.midpoints {
            out.midpoints.insert((offset + i, offset + j), m);
        }
    }
    out.k = out.branch.len();
    for (&(u, v), &m) in cross {
        out.midpoints.insert((index[&u], index[&v]), m);
    }
    out
}

/// Demands from every branch of an earlier piece to every branch of a later
/// one.
fn cross_demands(pieces: &[SubdivisionEmbedding]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, pa) in pieces.iter().enumerate() {
        for pb in &pieces[a + 1..] {
            for &u in &pa.branch {
                for &v in &pb.branch {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

struct Search<'a> {
    cfg: &'a FinderConfig,
    trace: Vec<String>,
    /// `log log` of the outermost `k`; nested part searches keep using it.
    loglog_top: f64,
}

impl Search<'_> {
    fn note(&mut self, depth: usize, msg: impl fmt::Display) {
        self.trace.push(format!("{}[depth {depth}] {msg}", "  ".repeat(depth)));
    }

    fn fail(&mut self, depth: usize, stage: impl Into<String>) -> Failure {
        let stage = stage.into();
        self.note(depth, format!("failed: {stage}"));
        Failure {
            stage,
            trace: Vec::new(),
        }
    }

    /// Recursive search inside the subtournament induced on `verts`; the
    /// result uses host ids.
    fn solve_in(
        &mut self,
        t: &Tournament,
        verts: &[usize],
        k: usize,
        depth: usize,
    ) -> Result<SubdivisionEmbedding, Failure> {
        let sub = t.induced(verts).expect("vertex lists come from t");
        let e = self.solve(&sub, k, depth)?;
        Ok(e.map_vertices(|v| verts[v]))
    }

    fn connect(
        &mut self,
        t: &Tournament,
        pieces: &[SubdivisionEmbedding],
        depth: usize,
        stage: &str,
    ) -> Result<SubdivisionEmbedding, Failure> {
        let demands = cross_demands(pieces);
        let used = VertexSet::from_iter_bounded(t.n(), pieces.iter().flat_map(|p| p.vertices()));
        match connect_pairs(t, &demands, &used) {
            Ok(cross) => Ok(combine(pieces, &cross)),
            Err(ConnectError::Infeasible { unsatisfiable }) => Err(self.fail(
                depth,
                format!(
                    "{stage}: connection infeasible for {} of {} demands",
                    unsatisfiable.len(),
                    demands.len()
                ),
            )),
            Err(ConnectError::Usage(e)) => unreachable!("internal demand set invalid: {e}"),
        }
    }

    fn solve(&mut self, t: &Tournament, k: usize, depth: usize) -> Result<SubdivisionEmbedding, Failure> {
        let n = t.n();
        self.note(depth, format!("search H_{k} in n={n}"));
        if depth >= self.cfg.recursion_depth_limit {
            return Err(self.fail(depth, "recursion depth limit reached"));
        }
        if k == 1 {
            return Ok(SubdivisionEmbedding::new(Pattern::Hk, vec![0]));
        }
        let needed = Pattern::Hk.vertex_count(k);
        if n < needed {
            return Err(self.fail(depth, format!("too few vertices: H_{k} needs {needed}, have {n}")));
        }
        if k == 2 {
            // A directed path of length two through any vertex that has both
            // an in- and an out-neighbour; one exists once n ≥ 3.
            let m = (0..n)
                .find(|&m| (1..n - 1).contains(&t.out_degree(m)))
                .expect("every tournament on at least 3 vertices has such a vertex");
            let a = t.in_neighbors(m).next().expect("in-degree at least 1");
            let b = t.out_neighbors(m).next().expect("out-degree at least 1");
            self.note(depth, format!("base case: path {a}->{m}->{b}"));
            let mut e = SubdivisionEmbedding::new(Pattern::Hk, vec![a, b]);
            e.midpoints.insert((0, 1), m);
            return Ok(e);
        }

        let order = find_transitive_subtournament(t);
        if order.len() >= needed {
            self.note(
                depth,
                format!("base case: transitive subtournament of size {}", order.len()),
            );
            return Ok(embed_h_in_transitive(&order, k).expect("length checked"));
        }
        self.note(
            depth,
            format!("transitive subtournament of size {} is too small", order.len()),
        );

        if self.cfg.mode == Mode::Practical {
            match find_via_independent_set(t, Pattern::Hk, k) {
                Ok(e) => {
                    self.note(depth, "independent-set shortcut succeeded");
                    return Ok(e);
                }
                Err(FindError::Failed(f)) => self.note(depth, format!("independent-set shortcut: {}", f.stage)),
                Err(FindError::Usage(e)) => unreachable!("{e}"),
            }
        }

        let (thirds, gap) = degree_gap_split(t).map_err(|e| self.fail(depth, e.to_string()))?;
        let k2 = k * k;
        if gap >= k2 {
            self.note(
                depth,
                format!("degree gap {gap} >= {k2}: splitting into top and bottom quarters"),
            );
            debug_assert!(thirds
                .v1
                .iter()
                .all(|&u| thirds.v3.iter().all(|&v| t.p2_unchecked(u, v) >= k2)));
            let top = self.solve_in(t, &thirds.v1, k.div_ceil(2), depth + 1)?;
            let bottom = self.solve_in(t, &thirds.v3, k / 2, depth + 1)?;
            return self.connect(t, &[top, bottom], depth, "degree-gap join");
        }

        self.note(depth, format!("degree gap {gap} < {k2}: decomposing the middle half"));
        let g = build_aux_graph(t, &thirds.v2, k2).expect("middle half is a valid vertex list");
        let parts = match ball_decomposition(&g, n, k, self.cfg.mode) {
            Ok(p) => p,
            Err(FindError::Failed(f)) => return Err(self.fail(depth, f.stage)),
            Err(FindError::Usage(e)) => unreachable!("{e}"),
        };
        assert!(decomposition_is_valid(&g, &parts), "decomposition invariants violated");
        self.note(depth, format!("{} decomposition parts", parts.len()));
        let inner: Vec<Vec<usize>> = parts.into_iter().map(|p| p.inner).collect();
        let e = self.assemble(t, &inner, k, depth)?;
        if e.k < k {
            return Err(self.fail(depth, format!("assembly reached only H_{} of H_{k}", e.k)));
        }
        Ok(e)
    }

    fn assemble(
        &mut self,
        t: &Tournament,
        parts: &[Vec<usize>],
        k: usize,
        depth: usize,
    ) -> Result<SubdivisionEmbedding, Failure> {
        let targets = targets_with(parts, k, self.cfg.c * self.loglog_top);
        let total: usize = targets.iter().sum();
        self.note(depth, format!("assembling H_{total} from {} parts", targets.len()));
        if targets.len() == 1 && parts[0].len() == t.n() {
            // A single part spanning the host is a plain recursive search.
            return self.solve_in(t, &parts[0], targets[0], depth + 1);
        }
        let mut pieces = Vec::with_capacity(targets.len());
        for (part, &m) in parts.iter().zip(&targets) {
            match self.solve_in(t, part, m, depth + 1) {
                Ok(e) => pieces.push(e),
                Err(f) => return Err(self.fail(depth, format!("part search for H_{m} failed: {}", f.stage))),
            }
        }
        self.connect(t, &pieces, depth, "part join")
    }
}

/// Per-part sizes `m_i = max(1, ⌊√(|C_i| / (C·log log k))⌋)`, truncated in
/// part order so the total does not exceed `k`. Parts past the point where
/// the total reaches `k` get no entry.
pub fn part_targets(parts: &[Vec<usize>], k: usize, c: f64) -> Vec<usize> {
    targets_with(parts, k, c * loglog(k))
}

fn targets_with(parts: &[Vec<usize>], k: usize, denom: f64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut total = 0;
    for p in parts {
        if total >= k {
            break;
        }
        let raw = (p.len() as f64 / denom).sqrt().floor() as usize;
        let m = raw.max(1).min(p.len()).min(k - total);
        out.push(m);
        total += m;
    }
    out
}

/// Joins recursively found copies inside `parts` into one copy of `H_m`,
/// `m = min(k, Σ m_i)`, ordering branches by part.
pub fn assemble_from_parts(
    t: &Tournament,
    parts: &[Vec<usize>],
    k: usize,
    cfg: &FinderConfig,
) -> Result<SubdivisionEmbedding, FindError> {
    cfg.validate()?;
    let mut seen = VertexSet::new(t.n());
    for part in parts {
        if part.is_empty() {
            return Err(Error::InvalidParameter("parts must be non-empty".into()).into());
        }
        for &v in part {
            t.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v).into());
            }
        }
    }
    let mut search = Search {
        cfg,
        trace: Vec::new(),
        loglog_top: loglog(k),
    };
    search.assemble(t, parts, k, 0).map_err(|mut f| {
        f.trace = std::mem::take(&mut search.trace);
        FindError::Failed(f)
    })
}

/// Finds a 1-subdivision of the transitive tournament on `k` vertices.
/// Every returned embedding has been checked with
/// [`crate::embedding::verify_embedding`].
pub fn find_hk(t: &Tournament, k: usize, cfg: &FinderConfig) -> Result<SubdivisionEmbedding, FindError> {
    find_hk_traced(t, k, cfg).0
}

/// [`find_hk`] plus the step-by-step trace, also on success.
pub fn find_hk_traced(
    t: &Tournament,
    k: usize,
    cfg: &FinderConfig,
) -> (Result<SubdivisionEmbedding, FindError>, Vec<String>) {
    if k == 0 {
        return (
            Err(Error::InvalidParameter("k must be at least 1".into()).into()),
            Vec::new(),
        );
    }
    if let Err(e) = cfg.validate() {
        return (Err(e.into()), Vec::new());
    }
    let mut search = Search {
        cfg,
        trace: Vec::new(),
        loglog_top: loglog(k),
    };
    let result = search.solve(t, k, 0);
    let trace = std::mem::take(&mut search.trace);
    let result = match result {
        Ok(e) => {
            let violations = crate::embedding::verify_embedding(t, &e);
            if violations.is_empty() {
                Ok(e)
            } else {
                Err(FindError::Failed(Failure {
                    stage: format!(
                        "internal: produced embedding failed verification ({} violations)",
                        violations.len()
                    ),
                    trace: trace.clone(),
                }))
            }
        }
        Err(mut f) => {
            f.trace = trace.clone();
            Err(FindError::Failed(f))
        }
    };
    (result, trace)
}
