//! Dense atom identifiers and a bitset over them.
//!
//! Every ground program numbers its Herbrand base `0..n` in lexicographic
//! order of the rendered atoms, so iterating an [`AtomSet`] in id order is
//! iterating it in lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// Index of a ground atom in its program's Herbrand base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(pub u32);

impl AtomId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for AtomId {
    fn from(i: usize) -> Self {
        AtomId(i as u32)
    }
}

impl fmt::Display for AtomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

const BITS: usize = 64;

/// Set of atom ids with O(1) membership.
///
/// The word vector never carries trailing zero words, so two sets with the
/// same members compare equal and hash equally regardless of how they were
/// built.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AtomSet {
    words: Vec<u64>,
}

impl AtomSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / BITS];
        if !n.is_multiple_of(BITS) {
            words.push((1u64 << (n % BITS)) - 1);
        }
        AtomSet { words }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    #[inline]
    pub fn contains(&self, a: AtomId) -> bool {
        let i = a.index();
        self.words
            .get(i / BITS)
            .is_some_and(|w| w & (1u64 << (i % BITS)) != 0)
    }

    /// Returns true if `a` was not already present.
    pub fn insert(&mut self, a: AtomId) -> bool {
        let i = a.index();
        if self.words.len() <= i / BITS {
            self.words.resize(i / BITS + 1, 0);
        }
        let w = &mut self.words[i / BITS];
        let bit = 1u64 << (i % BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    /// Returns true if `a` was present.
    pub fn remove(&mut self, a: AtomId) -> bool {
        let i = a.index();
        let Some(w) = self.words.get_mut(i / BITS) else {
            return false;
        };
        let bit = 1u64 << (i % BITS);
        let present = *w & bit != 0;
        *w &= !bit;
        self.trim();
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(AtomId::from(wi * BITS + tz))
            })
        })
    }

    pub fn union(&self, other: &AtomSet) -> AtomSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        AtomSet { words }
    }

    pub fn intersection(&self, other: &AtomSet) -> AtomSet {
        let mut out = AtomSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        out.trim();
        out
    }

    pub fn difference(&self, other: &AtomSet) -> AtomSet {
        let mut out = AtomSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &AtomSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &AtomSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member of `self ∩ other`, if any.
    pub fn first_common(&self, other: &AtomSet) -> Option<AtomId> {
        self.intersection(other).iter().next()
    }

    /// Builds the subset of `{0, .., n-1}` selected by the bits of `mask`.
    pub fn from_mask(mask: u64) -> AtomSet {
        let mut out = AtomSet { words: vec![mask] };
        out.trim();
        out
    }
}

impl FromIterator<AtomId> for AtomSet {
    fn from_iter<T: IntoIterator<Item = AtomId>>(iter: T) -> Self {
        let mut s = AtomSet::new();
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl Extend<AtomId> for AtomSet {
    fn extend<T: IntoIterator<Item = AtomId>>(&mut self, iter: T) {
        for a in iter {
            self.insert(a);
        }
    }
}

/// Orders sets by their ascending member sequences, which is the
/// lexicographic order of their sorted atom lists.
impl Ord for AtomSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for AtomSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|a| a.0)).finish()
    }
}
