//! The undirected auxiliary graph joining vertex pairs that have few short
//! directed paths between them in at least one direction.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// Undirected simple graph over a list of tournament vertex ids.
///
/// Vertex ids are the host tournament's ids; internally each vertex also has
/// a local index equal to its position in [`AuxGraph::vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxGraph {
    vertices: Vec<usize>,
    index: HashMap<usize, usize>,
    adj: Vec<Vec<usize>>,
    threshold: usize,
}

impl AuxGraph {
    /// Builds a graph from explicit edges (given as tournament ids). Used for
    /// synthetic instances and by [`build_aux_graph`].
    pub fn from_edges(
        vertices: Vec<usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        threshold: usize,
    ) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (a, b) in edges {
            let la = *index.get(&a).ok_or(Error::NotInGraph(a))?;
            let lb = *index.get(&b).ok_or(Error::NotInGraph(b))?;
            if la == lb {
                return Err(Error::InvalidParameter(format!("self-loop at {a}")));
            }
            adj[la].push(lb);
            adj[lb].push(la);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self {
            vertices,
            index,
            adj,
            threshold,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.index.contains_key(&v)
    }

    pub(crate) fn local(&self, v: usize) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::NotInGraph(v))
    }

    pub(crate) fn local_adj(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        let l = self.local(v)?;
        Ok(self.adj[l].iter().map(|&x| self.vertices[x]).collect())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.adj[self.local(v)?].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.index.get(&u), self.index.get(&v)) {
            (Some(&a), Some(&b)) => self.adj[a].binary_search(&b).is_ok(),
            _ => false,
        }
    }

    /// All edges as `(u, v)` tournament-id pairs with `u` listed before `v`
    /// in [`AuxGraph::vertices`].
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list.iter().filter(|&&b| b > a) {
                out.push((self.vertices[a], self.vertices[b]));
            }
        }
        out
    }

    /// `B^r(v)`: every vertex within distance `r` of `v`, sorted by id.
    pub fn ball(&self, v: usize, r: usize) -> Result<Vec<usize>> {
        let src = self.local(v)?;
        Ok(self.to_ids(self.ball_local(src, r, None)))
    }

    pub(crate) fn to_ids(&self, locals: Vec<usize>) -> Vec<usize> {
        let mut ids: Vec<usize> = locals.into_iter().map(|l| self.vertices[l]).collect();
        ids.sort_unstable();
        ids
    }

    /// Local indices within distance `r` of `src`, restricted to vertices with
    /// `alive[i]` when a mask is given. Returned in BFS order.
    pub(crate) fn ball_local(&self, src: usize, r: usize, alive: Option<&[bool]>) -> Vec<usize> {
        let ok = |x: usize| alive.is_none_or(|a| a[x]);
        debug_assert!(ok(src));
        let mut dist = HashMap::new();
        dist.insert(src, 0usize);
        let mut order = vec![src];
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == r {
                continue;
            }
            for &y in &self.adj[x] {
                if ok(y) && !dist.contains_key(&y) {
                    dist.insert(y, d + 1);
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        order
    }

    /// `|B^0|, |B^1|, …, |B^max_r|` around `src`.
    pub(crate) fn ball_sizes_local(&self, src: usize, max_r: usize, alive: Option<&[bool]>) -> Vec<usize> {
        let ok = |x: usize| alive.is_none_or(|a| a[x]);
        let mut seen = HashMap::new();
        seen.insert(src, ());
        let mut frontier = vec![src];
        let mut sizes = vec![1usize];
        for _ in 0..max_r {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if ok(y) && seen.insert(y, ()).is_none() {
                        next.push(y);
                    }
                }
            }
            sizes.push(sizes.last().unwrap() + next.len());
            frontier = next;
        }
        sizes
    }
}

/// The auxiliary graph on `verts`: `{u, v}` is an edge iff
/// `p2(u, v) < threshold` or `p2(v, u) < threshold`.
pub fn build_aux_graph(t: &Tournament, verts: &[usize], threshold: usize) -> Result<AuxGraph> {
    let mut seen = crate::bits::VertexSet::new(t.n());
    for &v in verts {
        t.check_vertex(v)?;
        if !seen.insert(v) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    let edges: Vec<(usize, usize)> = (0..verts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let u = verts[i];
            verts[i + 1..].iter().filter_map(move |&v| {
                (t.p2_unchecked(u, v) < threshold || t.p2_unchecked(v, u) < threshold).then_some((u, v))
            })
        })
        .collect();
    AuxGraph::from_edges(verts.to_vec(), edges, threshold)
}

/// `B^r(v)` in `g`.
pub fn ball(g: &AuxGraph, v: usize, r: usize) -> Result<Vec<usize>> {
    g.ball(v, r)
}
