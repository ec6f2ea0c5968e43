//! Finite enumerations: up-sets, solution sets of `a χ = b` and `χ a = b`,
//! and Green's relations.
//!
//! Each enumeration is a [`SolutionFamily`]: a fixed isometry together with
//! all excluded sets `lower ∪ S` for `S ⊆ free`. Families can be walked lazily
//! or materialised; materialising refuses above a cutoff
//! ([`DEFAULT_LIMIT`] = 2^20 members) with [`Error::TooManySolutions`].

use crate::error::{Error, Result};
use crate::finset::{FinSet, Subsets};
use crate::isometry::Isometry;
use crate::partial::PartialIsometry;

pub const DEFAULT_LIMIT: usize = 1 << 20;

/// All elements `(gamma, lower ∪ S)` with `S ⊆ free`; `lower` and `free` are
/// disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFamily {
    pub gamma: Isometry,
    pub lower: FinSet,
    pub free: FinSet,
}

impl SolutionFamily {
    /// Number of members as a power of two.
    pub fn log2_len(&self) -> usize {
        self.free.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = PartialIsometry> + '_ {
        let subsets: Subsets<'_> = self.free.subsets();
        subsets.map(move |s| PartialIsometry::new(self.gamma, self.lower.union(&s)))
    }

    /// Sorted members, or `TooManySolutions` when there are more than `limit`.
    pub fn materialize(&self, limit: usize) -> Result<Vec<PartialIsometry>> {
        let free = self.free.len();
        if free >= usize::BITS as usize || (1usize << free) > limit {
            return Err(Error::TooManySolutions { free, limit });
        }
        let mut all: Vec<_> = self.iter().collect();
        all.sort();
        Ok(all)
    }

    /// The member with empty excluded set, if any.
    pub fn unit_member(&self) -> Option<PartialIsometry> {
        self.lower.is_empty().then(|| PartialIsometry::unit(self.gamma))
    }
}

/// A materialised solution set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolutionSet {
    /// Sorted by the order on [`PartialIsometry`], no duplicates.
    pub solutions: Vec<PartialIsometry>,
    /// The unique solution in the group of units, when there is one.
    pub unit_member: Option<PartialIsometry>,
}

impl SolutionSet {
    fn from_family(family: Option<SolutionFamily>, limit: usize) -> Result<SolutionSet> {
        match family {
            None => Ok(SolutionSet::default()),
            Some(f) => Ok(SolutionSet { solutions: f.materialize(limit)?, unit_member: f.unit_member() }),
        }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// `↑p = {q : p <= q}`: the isometry of `p` with any subset of `X_p` removed
/// from the excluded set.
pub fn upset_family(p: &PartialIsometry) -> SolutionFamily {
    SolutionFamily { gamma: *p.gamma(), lower: FinSet::empty(), free: p.excl().clone() }
}

pub fn upset(p: &PartialIsometry) -> Result<Vec<PartialIsometry>> {
    upset_with_limit(p, DEFAULT_LIMIT)
}

pub fn upset_with_limit(p: &PartialIsometry, limit: usize) -> Result<Vec<PartialIsometry>> {
    upset_family(p).materialize(limit)
}

/// Solutions of `a χ = b`.
///
/// `χ = (rho, H)` with `rho = gamma_a^-1 gamma_b`, and `a χ` excludes
/// `X_a ∪ (H)gamma_a^-1`. So a solution exists iff `X_a ⊆ X_b`, and then
/// `(X_b \ X_a)gamma_a ⊆ H ⊆ (X_b)gamma_a`.
pub fn right_family(a: &PartialIsometry, b: &PartialIsometry) -> Result<Option<SolutionFamily>> {
    if !a.excl().is_subset(b.excl()) {
        return Ok(None);
    }
    let ga = a.gamma();
    Ok(Some(SolutionFamily {
        gamma: ga.inverse()?.then(b.gamma())?,
        lower: b.excl().difference(a.excl()).image(ga)?,
        free: a.excl().image(ga)?,
    }))
}

/// Solutions of `χ a = b`.
///
/// `χ = (rho, H)` with `rho = gamma_b gamma_a^-1`, and `χ a` excludes
/// `H ∪ (X_a)rho^-1`. So a solution exists iff `(X_a)rho^-1 ⊆ X_b`, and then
/// `X_b \ (X_a)rho^-1 ⊆ H ⊆ X_b`.
pub fn left_family(a: &PartialIsometry, b: &PartialIsometry) -> Result<Option<SolutionFamily>> {
    let rho = b.gamma().then(&a.gamma().inverse()?)?;
    let forced = a.excl().image(&rho.inverse()?)?;
    if !forced.is_subset(b.excl()) {
        return Ok(None);
    }
    Ok(Some(SolutionFamily { gamma: rho, lower: b.excl().difference(&forced), free: forced }))
}

pub fn solve_right(a: &PartialIsometry, b: &PartialIsometry) -> Result<SolutionSet> {
    solve_right_with_limit(a, b, DEFAULT_LIMIT)
}

pub fn solve_right_with_limit(a: &PartialIsometry, b: &PartialIsometry, limit: usize) -> Result<SolutionSet> {
    SolutionSet::from_family(right_family(a, b)?, limit)
}

pub fn solve_left(a: &PartialIsometry, b: &PartialIsometry) -> Result<SolutionSet> {
    solve_left_with_limit(a, b, DEFAULT_LIMIT)
}

pub fn solve_left_with_limit(a: &PartialIsometry, b: &PartialIsometry, limit: usize) -> Result<SolutionSet> {
    SolutionSet::from_family(left_family(a, b)?, limit)
}

/// Green's relations between two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Green {
    pub l: bool,
    pub r: bool,
    pub h: bool,
    pub d: bool,
}

/// `R`: equal domains. `L`: equal ranges. `H = L ∩ R`. `D`: the excluded
/// ranges are congruent under some isometry of `Z`.
pub fn green(p: &PartialIsometry, q: &PartialIsometry) -> Result<Green> {
    let (ep, eq) = (p.range_excl()?, q.range_excl()?);
    let r = p.excl() == q.excl();
    let l = ep == eq;
    Ok(Green { l, r, h: l && r, d: congruent(&ep, &eq) })
}

/// Whether some isometry maps `s` onto `t`. A finite set is fixed up to
/// translation by its gap sequence; a reflection reverses that sequence.
pub fn congruent(s: &FinSet, t: &FinSet) -> bool {
    if s.len() != t.len() {
        return false;
    }
    let (gs, gt) = (s.gaps(), t.gaps());
    gs == gt || gs.iter().rev().eq(gt.iter())
}
