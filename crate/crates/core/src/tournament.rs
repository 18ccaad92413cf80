//! Tournaments stored as out-neighbourhood bit rows, plus the degree and
//! path-count statistics the finders are built on.

use crate::bits::{self, VertexSet};
use crate::error::{Error, Result};

/// An orientation of the complete graph on vertices `0..n`.
///
/// Row `u` holds the out-neighbourhood `N⁺(u)`. The diagonal is always
/// clear and for `u != v` exactly one of `u→v`, `v→u` is present.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    stride: usize,
    out: Vec<u64>,
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament({}; ", self.n)?;
        for u in 0..self.n {
            if u > 0 {
                f.write_str("/")?;
            }
            for v in 0..self.n {
                f.write_str(if self.has_arc(u, v) { "1" } else { "0" })?;
            }
        }
        f.write_str(")")
    }
}

impl Tournament {
    /// Orients every pair `i < j` as `i→j` when `forward(i, j)` is true and
    /// `j→i` otherwise. The callback is invoked once per pair in
    /// lexicographic order.
    pub fn from_orientation(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        let stride = bits::words_for(n);
        let mut out = vec![0u64; n * stride];
        for i in 0..n {
            for j in i + 1..n {
                if forward(i, j) {
                    bits::set(&mut out[i * stride..(i + 1) * stride], j);
                } else {
                    bits::set(&mut out[j * stride..(j + 1) * stride], i);
                }
            }
        }
        Ok(Self { n, stride, out })
    }

    /// Builds a tournament from a full boolean table, checking both
    /// tournament invariants.
    pub fn from_adjacency(adj: &[Vec<bool>]) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::EmptyTournament);
        }
        for (u, row) in adj.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAdjacency(format!(
                    "row {u} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row[u] {
                return Err(Error::InvalidAdjacency(format!("self-loop at vertex {u}")));
            }
        }
        for (u, row) in adj.iter().enumerate() {
            for (v, &arc) in row.iter().enumerate().skip(u + 1) {
                if arc == adj[v][u] {
                    return Err(Error::InvalidAdjacency(format!(
                        "pair {{{u}, {v}}} must carry exactly one arc"
                    )));
                }
            }
        }
        Self::from_orientation(n, |i, j| adj[i][j])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.out[u * self.stride..(u + 1) * self.stride]
    }

    /// Whether the arc `u→v` is present. Panics on out-of-range ids.
    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        bits::test(self.row(u), v)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        bits::count(self.row(u))
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.n - 1 - self.out_degree(u)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.out_degree(u)).collect()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter_ones(self.row(u))
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| w != u && !self.has_arc(u, w))
    }

    /// Δ⁺(T)
    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|u| self.out_degree(u)).max().unwrap_or(0)
    }

    /// δ⁺(T)
    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|u| self.out_degree(u)).min().unwrap_or(0)
    }

    /// `|N⁺(u) \ N⁺(v)|` without bounds checks beyond slice indexing.
    #[inline]
    pub(crate) fn p2_unchecked(&self, u: usize, v: usize) -> usize {
        bits::count_and_not(self.row(u), self.row(v))
    }

    /// Midpoints `m` with `u→m→v`, excluding `forbidden` and the endpoints.
    pub(crate) fn midpoint_candidates<'a>(
        &'a self,
        u: usize,
        v: usize,
        forbidden: Option<&'a VertexSet>,
    ) -> impl Iterator<Item = usize> + 'a {
        let ru = self.row(u);
        let rv = self.row(v);
        let fw = forbidden.map(|f| f.words());
        (0..self.stride)
            .flat_map(move |wi| {
                let mut w = ru[wi] & !rv[wi];
                if let Some(f) = fw {
                    w &= !f[wi];
                }
                std::iter::from_fn(move || {
                    if w == 0 {
                        return None;
                    }
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * bits::WORD + b)
                })
            })
            .filter(move |&m| m != v)
    }

    /// The subtournament induced on `verts`; vertex `i` of the result is
    /// `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Result<Tournament> {
        let mut seen = VertexSet::new(self.n);
        for &v in verts {
            self.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Tournament::from_orientation(verts.len(), |i, j| self.has_arc(verts[i], verts[j]))
    }

    /// True when `order` induces a transitive subtournament with every arc
    /// pointing forward along the list.
    pub fn is_transitive_order(&self, order: &[usize]) -> bool {
        order
            .iter()
            .enumerate()
            .all(|(i, &a)| order[i + 1..].iter().all(|&b| self.has_arc(a, b)))
    }

    /// Whether the tournament has a directed cycle (equivalently, is not
    /// transitive). Uses the fact that a tournament is transitive iff its
    /// out-degrees are exactly `0..n`.
    pub fn has_cycle(&self) -> bool {
        let mut degs = self.out_degrees();
        degs.sort_unstable();
        degs.iter().enumerate().any(|(i, &d)| i != d)
    }

    /// A copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut inverse = vec![usize::MAX; self.n];
        for (v, &p) in perm.iter().enumerate() {
            self.check_vertex(p)?;
            if inverse[p] != usize::MAX {
                return Err(Error::DuplicateVertex(p));
            }
            inverse[p] = v;
        }
        Tournament::from_orientation(self.n, |i, j| self.has_arc(inverse[i], inverse[j]))
    }
}

/// Number of directed paths of length at most two from `u` to `v`, computed
/// as `|N⁺(u) \ N⁺(v)|`.
///
/// If `u→v` is an arc, `v` itself lies in the difference and accounts for the
/// direct path; every other element `m` satisfies `u→m` and `m→v`.
pub fn p2(t: &Tournament, u: usize, v: usize) -> Result<usize> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    Ok(t.p2_unchecked(u, v))
}

/// Path-enumeration counterpart of [`p2`]: counts the direct arc and every
/// intermediate vertex one by one. Kept as an independent cross-check.
pub fn p2_by_paths(t: &Tournament, u: usize, v: usize) -> Result<usize> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if u == v {
        return Ok(0);
    }
    let direct = usize::from(t.has_arc(u, v));
    let via = (0..t.n())
        .filter(|&m| m != u && m != v && t.has_arc(u, m) && t.has_arc(m, v))
        .count();
    Ok(direct + via)
}

/// Δ⁺(T) − δ⁺(T).
pub fn degree_spread(t: &Tournament) -> usize {
    t.max_out_degree() - t.min_out_degree()
}

/// Vertices split into the top quarter, middle half, and bottom quarter of
/// the descending out-degree order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionThirds {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub v3: Vec<usize>,
}

/// Vertices sorted by descending out-degree, ties broken by ascending id.
pub fn descending_degree_order(t: &Tournament) -> Vec<usize> {
    let degs = t.out_degrees();
    let mut order: Vec<usize> = (0..t.n()).collect();
    order.sort_by(|&a, &b| degs[b].cmp(&degs[a]).then(a.cmp(&b)));
    order
}

/// `|v1| = |v3| = ⌊n/4⌋`, `v2` takes the rest. Each list keeps the
/// descending-degree order.
pub fn partition_thirds(t: &Tournament) -> PartitionThirds {
    let order = descending_degree_order(t);
    let q = t.n() / 4;
    let n = t.n();
    PartitionThirds {
        v1: order[..q].to_vec(),
        v2: order[q..n - q].to_vec(),
        v3: order[n - q..].to_vec(),
    }
}
