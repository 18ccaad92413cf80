//! Augmenting-path bipartite matching between demands (left) and vertices
//! (right).

/// A matching between left indices `0..adj.len()` and right ids `0..right`.
#[derive(Clone, Debug)]
pub(crate) struct Matching {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(left: usize, right: usize) -> Self {
        Self {
            left: vec![None; left],
            right: vec![None; right],
        }
    }

    pub fn size(&self) -> usize {
        self.left.iter().filter(|m| m.is_some()).count()
    }

    pub fn assign(&mut self, l: usize, r: usize) {
        debug_assert!(self.left[l].is_none() && self.right[r].is_none());
        self.left[l] = Some(r);
        self.right[r] = Some(l);
    }

    fn augment(&mut self, adj: &[Vec<usize>], l: usize, visited: &mut [bool]) -> bool {
        for &r in &adj[l] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match self.right[r] {
                None => true,
                Some(other) => self.augment(adj, other, visited),
            };
            if free {
                self.left[l] = Some(r);
                self.right[r] = Some(l);
                return true;
            }
        }
        false
    }

    /// Grows the matching to maximum size by searching augmenting paths from
    /// every unmatched left vertex. Existing pairs may be rerouted.
    pub fn maximize(&mut self, adj: &[Vec<usize>]) {
        let mut visited = vec![false; self.right.len()];
        loop {
            let mut grew = false;
            for l in 0..adj.len() {
                if self.left[l].is_none() {
                    visited.iter_mut().for_each(|v| *v = false);
                    if self.augment(adj, l, &mut visited) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }

    /// For a maximum matching, the left vertices reachable from unmatched
    /// left vertices along alternating paths. This set has fewer neighbours
    /// than members, so it is a Hall-condition witness. Empty when the
    /// matching saturates the left side.
    pub fn hall_violator(&self, adj: &[Vec<usize>]) -> Vec<usize> {
        let mut seen_left = vec![false; adj.len()];
        let mut seen_right = vec![false; self.right.len()];
        let mut stack: Vec<usize> = (0..adj.len()).filter(|&l| self.left[l].is_none()).collect();
        for &l in &stack {
            seen_left[l] = true;
        }
        while let Some(l) = stack.pop() {
            for &r in &adj[l] {
                if seen_right[r] {
                    continue;
                }
                seen_right[r] = true;
                if let Some(l2) = self.right[r] {
                    if !seen_left[l2] {
                        seen_left[l2] = true;
                        stack.push(l2);
                    }
                }
            }
        }
        (0..adj.len()).filter(|&l| seen_left[l]).collect()
    }
}

/// Maximum matching from scratch.
pub(crate) fn max_matching(adj: &[Vec<usize>], right: usize) -> Matching {
    let mut m = Matching::empty(adj.len(), right);
    m.maximize(adj);
    m
}
