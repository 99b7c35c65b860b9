//! Atom identifiers and atom subsets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of atoms a system may have (atom sets are bitmasks).
pub const MAX_RANK: usize = 64;

/// Index of an atom, dense from 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AtomId(pub usize);

impl AtomId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite set of atoms, stored as a bitmask.
///
/// Ordering is by cardinality first and then lexicographically on the
/// sorted atom indices, so `∅ < {s} < {t} < {s,t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn from_bits(bits: u64) -> Self {
        AtomSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., rank-1}`.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(a: AtomId) -> Self {
        AtomSet(1u64 << a.0)
    }

    pub fn contains(self, a: AtomId) -> bool {
        a.0 < 64 && self.0 & (1u64 << a.0) != 0
    }

    pub fn insert(&mut self, a: AtomId) {
        self.0 |= 1u64 << a.0;
    }

    pub fn with(self, a: AtomId) -> Self {
        AtomSet(self.0 | (1u64 << a.0))
    }

    pub fn union(self, other: AtomSet) -> Self {
        AtomSet(self.0 | other.0)
    }

    pub fn intersection(self, other: AtomSet) -> Self {
        AtomSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = AtomId> {
        let bits = self.0;
        (0..64).filter(move |i| bits & (1u64 << i) != 0).map(AtomId)
    }
}

impl FromIterator<AtomId> for AtomSet {
    fn from_iter<I: IntoIterator<Item = AtomId>>(iter: I) -> Self {
        let mut s = AtomSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl Ord for AtomSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for AtomSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a.0)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_by_size_then_lex() {
        let s = AtomSet::singleton(AtomId(0));
        let t = AtomSet::singleton(AtomId(1));
        let st = s.union(t);
        let mut v = vec![st, t, AtomSet::EMPTY, s];
        v.sort();
        assert_eq!(v, vec![AtomSet::EMPTY, s, t, st]);
    }

    #[test]
    fn set_operations() {
        let x: AtomSet = [AtomId(0), AtomId(2)].into_iter().collect();
        assert_eq!(x.len(), 2);
        assert!(x.contains(AtomId(2)));
        assert!(!x.contains(AtomId(1)));
        assert!(AtomSet::singleton(AtomId(2)).is_subset(x));
        assert_eq!(x.iter().collect::<Vec<_>>(), vec![AtomId(0), AtomId(2)]);
        assert_eq!(AtomSet::full(3).len(), 3);
    }
}
