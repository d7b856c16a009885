use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the universe `{0, .., n-1}` of an algebra with at most 64
/// elements, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset(u64);

impl ElementSubset {
    pub const EMPTY: ElementSubset = ElementSubset(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            ElementSubset(u64::MAX)
        } else {
            ElementSubset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElementSubset(1u64 << x)
    }

    pub fn from_bits(bits: u64) -> Self {
        ElementSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) -> bool {
        let fresh = !self.contains(x);
        self.0 |= 1u64 << x;
        fresh
    }

    pub fn with(self, x: usize) -> Self {
        ElementSubset(self.0 | 1u64 << x)
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSubset) -> Self {
        ElementSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSubset) -> Self {
        ElementSubset(self.0 & other.0)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// The smallest element index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// All subsets of `{0, .., n-1}`, in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = ElementSubset> {
        assert!(n < 64, "cannot enumerate all subsets of a 64-element set");
        (0..1u64 << n).map(ElementSubset)
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSubset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSubset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl BitAnd for ElementSubset {
    type Output = ElementSubset;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitOr for ElementSubset {
    type Output = ElementSubset;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl Sub for ElementSubset {
    type Output = ElementSubset;
    fn sub(self, rhs: Self) -> Self {
        ElementSubset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = items.iter().find(|&&x| x >= 64) {
            return Err(serde::de::Error::custom(format!("element {bad} out of range")));
        }
        Ok(items.into_iter().collect())
    }
}
