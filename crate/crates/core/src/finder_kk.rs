//! Finding a 1-subdivision of the complete digraph on `k` vertices in a
//! tournament whose out-degrees are nearly equal.
//!
//! Build the auxiliary graph on all vertices with threshold `k²` and take an
//! independent set. Any two vertices `u, v` of it satisfy `p2(u, v) ≥ k²` in
//! both directions, which leaves enough length-2 paths to route all
//! `k(k−1)` ordered pairs through distinct midpoints. When
//! `Δ⁺ − δ⁺ ≤ n/(10k) − k²`, auxiliary degrees are at most `10(k² + ℓ)` with
//! `ℓ = Δ⁺ − δ⁺`, so the greedy independent set reaches `k` vertices.

use crate::aux_graph::{build_aux_graph, AuxGraph};
use crate::bits::VertexSet;
use crate::connector::{connect_pairs, ConnectError};
use crate::embedding::{Pattern, SubdivisionEmbedding};
use crate::error::Error;
use crate::finder_hk::{Failure, FindError};
use crate::tournament::{degree_spread, Tournament};

/// Repeatedly takes a vertex of minimum degree in what is left of `g`
/// (smallest id on ties) and deletes its closed neighbourhood. The result,
/// sorted by id, has at least `|V(G)| / (Δ(G) + 1)` vertices.
pub fn greedy_independent_set(g: &AuxGraph) -> Vec<usize> {
    let adj = g.local_adj();
    let len = g.len();
    let mut alive = vec![true; len];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut chosen = Vec::new();
    loop {
        let pick = (0..len)
            .filter(|&l| alive[l])
            .min_by_key(|&l| (degree[l], g.vertices()[l]));
        let Some(v) = pick else { break };
        chosen.push(g.vertices()[v]);
        let mut removed = vec![v];
        removed.extend(adj[v].iter().copied().filter(|&w| alive[w]));
        for &x in &removed {
            alive[x] = false;
        }
        for &x in &removed {
            for &y in &adj[x] {
                if alive[y] {
                    degree[y] -= 1;
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Whether `Δ⁺(T) − δ⁺(T) ≤ n/(10k) − k²`, compared exactly as
/// `10k·(spread + k²) ≤ n`.
pub fn regularity_hypothesis_holds(t: &Tournament, k: usize) -> bool {
    let lhs = 10 * k as u128 * (degree_spread(t) as u128 + (k * k) as u128);
    lhs <= t.n() as u128
}

/// Auxiliary graph on all vertices with threshold `k²`, an independent set
/// in it, the smallest `k` ids of that set as branch vertices, and one batch
/// of connection demands for every pair the pattern needs.
pub fn find_via_independent_set(t: &Tournament, pattern: Pattern, k: usize) -> Result<SubdivisionEmbedding, FindError> {
    let all: Vec<usize> = (0..t.n()).collect();
    let g = build_aux_graph(t, &all, k * k)?;
    let independent = greedy_independent_set(&g);
    if independent.len() < k {
        return Err(FindError::Failed(Failure {
            stage: format!(
                "independent set too small: {} of {k} needed (auxiliary graph has {} edges, max degree {})",
                independent.len(),
                g.edge_count(),
                g.max_degree()
            ),
            trace: Vec::new(),
        }));
    }
    let branch: Vec<usize> = independent[..k].to_vec();
    let pairs = pattern.pairs(k);
    let demands: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
    let forbidden = VertexSet::from_iter_bounded(t.n(), branch.iter().copied());
    match connect_pairs(t, &demands, &forbidden) {
        Ok(assignment) => {
            let mut e = SubdivisionEmbedding::new(pattern, branch);
            for (&(i, j), d) in pairs.iter().zip(&demands) {
                e.midpoints.insert((i, j), assignment[d]);
            }
            Ok(e)
        }
        Err(ConnectError::Infeasible { unsatisfiable }) => Err(FindError::Failed(Failure {
            stage: format!(
                "connection infeasible: {} of {} demands cannot get distinct midpoints",
                unsatisfiable.len(),
                demands.len()
            ),
            trace: Vec::new(),
        })),
        Err(ConnectError::Usage(e)) => Err(e.into()),
    }
}

/// Finds a 1-subdivision of the complete digraph on `k ≥ 2` vertices.
/// Guaranteed to succeed when [`regularity_hypothesis_holds`]; otherwise a
/// failure names the stage that gave out. Returned embeddings are verified.
pub fn find_kk(t: &Tournament, k: usize) -> Result<SubdivisionEmbedding, FindError> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")).into());
    }
    let e = find_via_independent_set(t, Pattern::Kk, k)?;
    let violations = crate::embedding::verify_embedding(t, &e);
    if !violations.is_empty() {
        return Err(FindError::Failed(Failure {
            stage: format!(
                "internal: produced embedding failed verification ({} violations)",
                violations.len()
            ),
            trace: Vec::new(),
        }));
    }
    Ok(e)
}
