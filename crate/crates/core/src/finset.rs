//! Finite subsets of `Z`: the free semilattice with unit under union.

use std::fmt;

use crate::error::Result;
use crate::isometry::Isometry;

/// A finite set of integers stored as a strictly increasing vector.
///
/// The empty set is the unit of the semilattice `(FinSet, ∪)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet(Vec<i64>);

impl FinSet {
    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    pub fn singleton(x: i64) -> Self {
        FinSet(vec![x])
    }

    /// Wraps a vector that the caller guarantees is strictly increasing.
    fn from_sorted_unchecked(v: Vec<i64>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        FinSet(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// Largest absolute value of a member, 0 for the empty set.
    pub fn max_abs(&self) -> u64 {
        self.iter().map(i64::unsigned_abs).max().unwrap_or(0)
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        FinSet::from_sorted_unchecked(out)
    }

    pub fn difference(&self, other: &FinSet) -> FinSet {
        FinSet::from_sorted_unchecked(self.iter().filter(|x| !other.contains(*x)).collect())
    }

    pub fn intersection(&self, other: &FinSet) -> FinSet {
        FinSet::from_sorted_unchecked(self.iter().filter(|x| other.contains(*x)).collect())
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn is_superset(&self, other: &FinSet) -> bool {
        other.is_subset(self)
    }

    /// Image `(S)g`. A reflection reverses the order, so the images are
    /// reversed back rather than re-sorted.
    pub fn image(&self, g: &Isometry) -> Result<FinSet> {
        let mut out = self.iter().map(|x| g.apply(x)).collect::<Result<Vec<_>>>()?;
        if g.sign().is_reflection() {
            out.reverse();
        }
        Ok(FinSet::from_sorted_unchecked(out))
    }

    /// Consecutive differences of the sorted members.
    pub fn gaps(&self) -> Vec<u64> {
        self.0.windows(2).map(|w| w[1].abs_diff(w[0])).collect()
    }

    /// All subsets, in no particular order. Intended for small sets.
    pub fn subsets(&self) -> Subsets<'_> {
        Subsets::new(self)
    }
}

impl FromIterator<i64> for FinSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut v: Vec<i64> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        FinSet(v)
    }
}

impl From<Vec<i64>> for FinSet {
    fn from(v: Vec<i64>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[i64; N]> for FinSet {
    fn from(v: [i64; N]) -> Self {
        v.into_iter().collect()
    }
}

/// Prints as `{-1,0,4}`.
impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Lazy enumeration of the subsets of a `FinSet` by a binary counter over
/// membership flags. Works for sets of any size; the caller decides how many
/// to pull.
pub struct Subsets<'a> {
    base: &'a FinSet,
    flags: Vec<bool>,
    done: bool,
}

impl<'a> Subsets<'a> {
    fn new(base: &'a FinSet) -> Self {
        Subsets { base, flags: vec![false; base.len()], done: false }
    }
}

impl Iterator for Subsets<'_> {
    type Item = FinSet;

    fn next(&mut self) -> Option<FinSet> {
        if self.done {
            return None;
        }
        let current = FinSet::from_sorted_unchecked(
            self.base
                .iter()
                .zip(&self.flags)
                .filter_map(|(x, &on)| on.then_some(x))
                .collect(),
        );
        // advance the counter; wrapping around to all-false ends the walk
        self.done = true;
        for flag in self.flags.iter_mut() {
            if *flag {
                *flag = false;
            } else {
                *flag = true;
                self.done = false;
                break;
            }
        }
        Some(current)
    }
}
