//! Partial vertex colorings.
//!
//! Colors are positive integers starting at 1. A vertex may instead be
//! *blank* (uncolored); blank is a distinct marker, never a color, so it is
//! skipped by every conflict-free check in this crate.

use std::collections::BTreeSet;

/// A partial coloring of `n` vertices with colors from `{1, 2, 3, ...}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    // Slot value 0 encodes blank; the public API never exposes 0 as a color.
    slots: Vec<usize>,
}

impl Coloring {
    /// An all-blank coloring of `n` vertices.
    pub fn blank(n: usize) -> Self {
        Coloring { slots: vec![0; n] }
    }

    /// Number of vertices (colored or not).
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Color of `v`, or `None` if `v` is blank.
    pub fn get(&self, v: usize) -> Option<usize> {
        match self.slots[v] {
            0 => None,
            c => Some(c),
        }
    }

    /// Assigns color `c >= 1` to `v`, replacing any previous color.
    ///
    /// # Panics
    ///
    /// Panics if `c == 0`: blank is not a color. Use [`Coloring::clear`].
    pub fn set(&mut self, v: usize, c: usize) {
        assert!(c >= 1, "colors are positive integers; 0 is reserved for blank");
        self.slots[v] = c;
    }

    /// Makes `v` blank again.
    pub fn clear(&mut self, v: usize) {
        self.slots[v] = 0;
    }

    /// True if no vertex is blank.
    pub fn is_total(&self) -> bool {
        self.slots.iter().all(|&c| c != 0)
    }

    /// Number of non-blank vertices.
    pub fn colored_count(&self) -> usize {
        self.slots.iter().filter(|&&c| c != 0).count()
    }

    /// The set of colors in use, ascending.
    pub fn distinct_colors(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.slots.iter().copied().filter(|&c| c != 0).collect();
        set.into_iter().collect()
    }

    /// Number of distinct colors in use.
    pub fn num_distinct(&self) -> usize {
        self.distinct_colors().len()
    }

    /// Largest color in use, or 0 if every vertex is blank.
    pub fn max_color(&self) -> usize {
        self.slots.iter().copied().max().unwrap_or(0)
    }

    /// Iterates `(vertex, color)` over all vertices, blank as `None`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        self.slots.iter().enumerate().map(|(v, &c)| (v, if c == 0 { None } else { Some(c) }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blank_is_not_a_color() {
        let mut f = Coloring::blank(3);
        assert_eq!(f.get(0), None);
        assert!(!f.is_total());
        assert_eq!(f.colored_count(), 0);
        assert_eq!(f.max_color(), 0);
        f.set(1, 4);
        assert_eq!(f.get(1), Some(4));
        assert_eq!(f.distinct_colors(), vec![4]);
        f.clear(1);
        assert_eq!(f.get(1), None);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_color_rejected() {
        Coloring::blank(1).set(0, 0);
    }

    #[test]
    fn distinct_and_total() {
        let mut f = Coloring::blank(4);
        for (v, c) in [(0, 1), (1, 1), (2, 2), (3, 2)] {
            f.set(v, c);
        }
        assert!(f.is_total());
        assert_eq!(f.distinct_colors(), vec![1, 2]);
        assert_eq!(f.num_distinct(), 2);
        assert_eq!(f.max_color(), 2);
    }
}
