//! Exact multisets stored as count maps.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Arm and leg length of one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArmLeg {
    pub arm: usize,
    pub leg: usize,
}

impl ArmLeg {
    pub const fn new(arm: usize, leg: usize) -> Self {
        ArmLeg { arm, leg }
    }

    pub const fn hook(self) -> usize {
        self.arm + self.leg + 1
    }
}

impl fmt::Display for ArmLeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.arm, self.leg)
    }
}

/// A finite multiset. Every stored multiplicity is at least 1, so derived
/// equality is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multiset<T: Ord> {
    counts: BTreeMap<T, usize>,
    total: usize,
}

impl<T: Ord> Default for Multiset<T> {
    fn default() -> Self {
        Multiset {
            counts: BTreeMap::new(),
            total: 0,
        }
    }
}

/// Where two multisets first disagree, in key order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy<T> {
    pub value: T,
    pub left: usize,
    pub right: usize,
}

impl<T: Ord> Multiset<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: T) {
        self.insert_n(value, 1);
    }

    pub fn insert_n(&mut self, value: T, n: usize) {
        if n > 0 {
            *self.counts.entry(value).or_insert(0) += n;
            self.total += n;
        }
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn count(&self, value: &T) -> usize {
        self.counts.get(value).copied().unwrap_or(0)
    }

    /// Distinct values with their multiplicities, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (&T, usize)> {
        self.counts.iter().map(|(v, &c)| (v, c))
    }

    /// Every element, repeated by multiplicity, ascending.
    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.counts
            .iter()
            .flat_map(|(v, &c)| std::iter::repeat_n(v, c))
    }

    pub fn map<U: Ord>(&self, mut f: impl FnMut(T) -> U) -> Multiset<U>
    where
        T: Clone,
    {
        let mut out = Multiset::new();
        for (v, &c) in &self.counts {
            out.insert_n(f(v.clone()), c);
        }
        out
    }

    /// Sum of multiplicities.
    pub fn union(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        let mut out = self.clone();
        for (v, &c) in &other.counts {
            out.insert_n(v.clone(), c);
        }
        out
    }

    /// The smallest value whose multiplicities differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<Discrepancy<T>>
    where
        T: Clone,
    {
        let mut keys: Vec<&T> = self.counts.keys().chain(other.counts.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|v| {
            let (left, right) = (self.count(v), other.count(v));
            (left != right).then(|| Discrepancy {
                value: v.clone(),
                left,
                right,
            })
        })
    }
}

impl<T: Ord> FromIterator<T> for Multiset<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut out = Multiset::new();
        for v in iter {
            out.insert(v);
        }
        out
    }
}

impl<T: Ord> Extend<T> for Multiset<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter()).finish()
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Multiset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *c == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}x{c}")?;
            }
        }
        write!(f, "}}")
    }
}

/// `[{"arm":a,"leg":l,"count":c},...]`, sorted by `(arm, leg)`.
impl Serialize for Multiset<ArmLeg> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            arm: usize,
            leg: usize,
            count: usize,
        }
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for (v, &count) in &self.counts {
            seq.serialize_element(&Entry {
                arm: v.arm,
                leg: v.leg,
                count,
            })?;
        }
        seq.end()
    }
}

/// `[{"value":v,"count":c},...]`, ascending.
impl Serialize for Multiset<usize> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            value: usize,
            count: usize,
        }
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for (&value, &count) in &self.counts {
            seq.serialize_element(&Entry { value, count })?;
        }
        seq.end()
    }
}

/// The multiset `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
pub fn range_multiset(lo: isize, hi: isize) -> Multiset<usize> {
    (lo..=hi).map(|v| v as usize).collect()
}
