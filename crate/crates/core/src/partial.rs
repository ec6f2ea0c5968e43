//! Elements of the inverse semigroup of partial cofinite isometries of `Z`.
//!
//! A partial cofinite isometry is the restriction of a unique global isometry
//! `gamma` to a cofinite domain `Z \ X`, so the pair `(gamma, X)` is a
//! canonical form: two elements are equal as partial maps exactly when their
//! fields are equal. There is no empty map and no zero.
//!
//! Composition uses the right action: `(x)(p q) = ((x)p)q`, i.e. `p.mul(&q)`
//! applies `p` first.

use std::fmt;

use crate::error::Result;
use crate::finset::FinSet;
use crate::isometry::Isometry;

/// `gamma` restricted to `Z \ excl`.
///
/// The derived order is lexicographic on `(sign, shift, excl)`; solvers and
/// the CLI rely on it for deterministic output.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialIsometry {
    gamma: Isometry,
    excl: FinSet,
}

impl PartialIsometry {
    pub fn new(gamma: Isometry, excl: FinSet) -> Self {
        PartialIsometry { gamma, excl }
    }

    /// The unit `gamma` of the group of units.
    pub fn unit(gamma: Isometry) -> Self {
        PartialIsometry { gamma, excl: FinSet::empty() }
    }

    /// The idempotent identity map on `Z \ excl`.
    pub fn idempotent(excl: FinSet) -> Self {
        PartialIsometry { gamma: Isometry::IDENTITY, excl }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gamma(&self) -> &Isometry {
        &self.gamma
    }

    /// Points outside the domain.
    pub fn excl(&self) -> &FinSet {
        &self.excl
    }

    pub fn into_parts(self) -> (Isometry, FinSet) {
        (self.gamma, self.excl)
    }

    pub fn is_idempotent(&self) -> bool {
        self.gamma.is_identity()
    }

    pub fn is_unit(&self) -> bool {
        self.excl.is_empty()
    }

    pub fn in_domain(&self, x: i64) -> bool {
        !self.excl.contains(x)
    }

    /// Pointwise evaluation: `None` outside the domain.
    pub fn apply(&self, x: i64) -> Result<Option<i64>> {
        if self.excl.contains(x) {
            Ok(None)
        } else {
            self.gamma.apply(x).map(Some)
        }
    }

    /// Points outside the range, `(X)gamma`.
    pub fn range_excl(&self) -> Result<FinSet> {
        self.excl.image(&self.gamma)
    }

    /// Product `p q`: `(gamma delta, X ∪ (Y)gamma^-1)`.
    pub fn mul(&self, other: &PartialIsometry) -> Result<PartialIsometry> {
        let gamma = self.gamma.then(&other.gamma)?;
        let pulled_back = other.excl.image(&self.gamma.inverse()?)?;
        Ok(PartialIsometry { gamma, excl: self.excl.union(&pulled_back) })
    }

    /// The unique inverse `(gamma^-1, (X)gamma)`.
    pub fn inverse(&self) -> Result<PartialIsometry> {
        Ok(PartialIsometry { gamma: self.gamma.inverse()?, excl: self.range_excl()? })
    }

    /// Natural partial order: `self <= other` iff `self` is a restriction of
    /// `other`, i.e. same isometry and a larger excluded set.
    pub fn leq(&self, other: &PartialIsometry) -> bool {
        self.gamma == other.gamma && self.excl.is_superset(&other.excl)
    }

    /// `(p p^-1, p^-1 p)`: the identities on the domain and on the range.
    pub fn idempotents(&self) -> Result<(PartialIsometry, PartialIsometry)> {
        Ok((
            PartialIsometry::idempotent(self.excl.clone()),
            PartialIsometry::idempotent(self.range_excl()?),
        ))
    }

    /// Largest absolute value among the excluded points and the shift, used to
    /// size windows and enumeration bounds.
    pub fn extent(&self) -> u64 {
        self.excl.max_abs().max(self.gamma.shift().unsigned_abs())
    }
}

impl From<Isometry> for PartialIsometry {
    fn from(gamma: Isometry) -> Self {
        PartialIsometry::unit(gamma)
    }
}

/// Prints the literal form `<+x+3|{0,2}>`.
impl fmt::Display for PartialIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}|{}>", self.gamma, self.excl)
    }
}
