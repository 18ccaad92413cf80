//! Fixed-width bit rows used for adjacency and vertex sets.

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

#[inline]
pub(crate) fn test(row: &[u64], i: usize) -> bool {
    row[i / WORD] >> (i % WORD) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / WORD] |= 1 << (i % WORD);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / WORD] &= !(1 << (i % WORD));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// `|a \ b|`
#[inline]
pub(crate) fn count_and_not(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & !y).count_ones() as usize).sum()
}

pub(crate) fn iter_ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// A set of vertex ids below a fixed bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    bound: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(bound: usize) -> Self {
        Self {
            bound,
            words: vec![0; words_for(bound)],
        }
    }

    pub fn from_iter_bounded(bound: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(bound);
        for v in items {
            s.insert(v);
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Panics if `v` is not below the bound.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.bound, "vertex {v} outside set bound {}", self.bound);
        let had = test(&self.words, v);
        set(&mut self.words, v);
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.bound {
            return false;
        }
        let had = test(&self.words, v);
        clear(&mut self.words, v);
        had
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.bound && test(&self.words, v)
    }

    pub fn len(&self) -> usize {
        count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_round_trip() {
        let mut row = vec![0u64; words_for(200)];
        let picks = [0, 1, 63, 64, 65, 127, 128, 199];
        for &p in &picks {
            set(&mut row, p);
        }
        assert_eq!(iter_ones(&row).collect::<Vec<_>>(), picks);
        assert_eq!(count(&row), picks.len());
        clear(&mut row, 64);
        assert!(!test(&row, 64));
    }

    #[test]
    fn and_not_counts_difference() {
        let a = [0b1011u64, u64::MAX];
        let b = [0b0010u64, 0];
        assert_eq!(count_and_not(&a, &b), 2 + 64);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::new(70);
        assert!(s.insert(69));
        assert!(!s.insert(69));
        assert!(s.contains(69));
        assert!(!s.contains(1000));
        assert_eq!(s.len(), 1);
        assert!(s.remove(69));
        assert!(s.is_empty());
    }
}
