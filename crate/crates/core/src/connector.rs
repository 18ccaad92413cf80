//! Internally disjoint length-2 connections for a batch of ordered vertex
//! pairs.
//!
//! A first-fit greedy pass (demands in lexicographic order, smallest free
//! midpoint) handles the common case. Whatever it leaves unsatisfied is
//! completed by augmenting paths over the bipartite graph of demands and
//! candidate midpoints, so the procedure succeeds exactly when a system of
//! distinct midpoints exists.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::bits::VertexSet;
use crate::error::Error;
use crate::matching::Matching;
use crate::tournament::Tournament;

/// Midpoint chosen for each demand `(u, v)`.
pub type Assignment = BTreeMap<(usize, usize), usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectError {
    #[error(transparent)]
    Usage(#[from] Error),
    /// No assignment exists. `unsatisfiable` is a set of demands whose
    /// combined candidate midpoints are fewer than the demands themselves.
    #[error("no distinct midpoints exist for {} demand(s): {unsatisfiable:?}", unsatisfiable.len())]
    Infeasible { unsatisfiable: Vec<(usize, usize)> },
}

fn validate(t: &Tournament, demands: &[(usize, usize)], forbidden: &VertexSet) -> Result<VertexSet, Error> {
    let mut blocked = VertexSet::new(t.n());
    for v in forbidden.iter() {
        t.check_vertex(v)?;
        blocked.insert(v);
    }
    let mut seen = BTreeSet::new();
    for &(u, v) in demands {
        t.check_vertex(u)?;
        t.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!(
                "demand ({u}, {v}) has equal endpoints"
            )));
        }
        if !seen.insert((u, v)) {
            return Err(Error::InvalidParameter(format!("demand ({u}, {v}) listed twice")));
        }
        // Endpoints of any demand can never serve as a midpoint.
        blocked.insert(u);
        blocked.insert(v);
    }
    Ok(blocked)
}

/// Candidate midpoints of every demand, ascending.
pub fn candidates(t: &Tournament, demands: &[(usize, usize)], forbidden: &VertexSet) -> Vec<Vec<usize>> {
    demands
        .iter()
        .map(|&(u, v)| t.midpoint_candidates(u, v, Some(forbidden)).collect())
        .collect()
}

/// The greedy phase alone: demands in lexicographic order, each taking its
/// smallest unused candidate. Entry `i` is the midpoint of `demands[i]`, or
/// `None` where the greedy got stuck.
pub fn greedy_first_fit(
    t: &Tournament,
    demands: &[(usize, usize)],
    forbidden: &VertexSet,
) -> Result<Vec<Option<usize>>, ConnectError> {
    let blocked = validate(t, demands, forbidden)?;
    let cands = candidates(t, demands, &blocked);
    Ok(first_fit(demands, &cands, t.n()).left)
}

fn first_fit(demands: &[(usize, usize)], cands: &[Vec<usize>], n: usize) -> Matching {
    let mut order: Vec<usize> = (0..demands.len()).collect();
    order.sort_by_key(|&i| demands[i]);
    let mut m = Matching::empty(demands.len(), n);
    for i in order {
        if let Some(&c) = cands[i].iter().find(|&&c| m.right[c].is_none()) {
            m.assign(i, c);
        }
    }
    m
}

/// Assigns every demand `(u, v)` a midpoint `m` with `u→m→v`, `m` outside
/// `forbidden` and outside every demand endpoint, all midpoints distinct.
pub fn connect_pairs(
    t: &Tournament,
    demands: &[(usize, usize)],
    forbidden: &VertexSet,
) -> Result<Assignment, ConnectError> {
    let blocked = validate(t, demands, forbidden)?;
    let cands = candidates(t, demands, &blocked);
    let mut m = first_fit(demands, &cands, t.n());
    if m.size() < demands.len() {
        m.maximize(&cands);
    }
    if m.size() < demands.len() {
        let unsatisfiable = m.hall_violator(&cands).into_iter().map(|i| demands[i]).collect();
        return Err(ConnectError::Infeasible { unsatisfiable });
    }
    Ok(demands
        .iter()
        .zip(&m.left)
        .map(|(&d, r)| (d, r.expect("saturated matching")))
        .collect())
}
