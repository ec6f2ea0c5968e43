//! Global isometries of the integers.
//!
//! Every isometry of `Z` has the form `x -> eps*x + a` with `eps = ±1`. The
//! group is written with a right action: `(x)(g h) = ((x)g)h`, so in
//! [`Isometry::then`] the receiver is applied first.

use std::fmt;

use crate::error::{Error, Result};

/// Orientation of an isometry. `Neg` sorts before `Pos` so that the derived
/// order on elements is lexicographic on `(eps, a, excl)` with `eps` read as
/// `-1 < +1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn is_reflection(self) -> bool {
        self == Sign::Neg
    }

    /// Product in the two-element group.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    fn apply(self, x: i64) -> Option<i64> {
        match self {
            Sign::Pos => Some(x),
            Sign::Neg => x.checked_neg(),
        }
    }
}

/// The isometry `x -> eps*x + shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Isometry {
    sign: Sign,
    shift: i64,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { sign: Sign::Pos, shift: 0 };

    pub const fn new(sign: Sign, shift: i64) -> Self {
        Isometry { sign, shift }
    }

    pub const fn translation(shift: i64) -> Self {
        Isometry { sign: Sign::Pos, shift }
    }

    /// The reflection `x -> -x + shift`.
    pub const fn reflection(shift: i64) -> Self {
        Isometry { sign: Sign::Neg, shift }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Image of a point.
    pub fn apply(&self, x: i64) -> Result<i64> {
        self.sign
            .apply(x)
            .and_then(|y| y.checked_add(self.shift))
            .ok_or(Error::Overflow("isometry application"))
    }

    /// Composite "first `self`, then `next`": `(eps1*eps2, eps2*a1 + a2)`.
    pub fn then(&self, next: &Isometry) -> Result<Isometry> {
        let shift = next
            .sign
            .apply(self.shift)
            .and_then(|s| s.checked_add(next.shift))
            .ok_or(Error::Overflow("isometry composition"))?;
        Ok(Isometry { sign: self.sign.times(next.sign), shift })
    }

    /// Group inverse `(eps, -eps*a)`.
    pub fn inverse(&self) -> Result<Isometry> {
        let shift = self
            .sign
            .apply(self.shift)
            .and_then(i64::checked_neg)
            .ok_or(Error::Overflow("isometry inverse"))?;
        Ok(Isometry { sign: self.sign, shift })
    }
}

impl Default for Isometry {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// Prints as the surface form `+x+3`, `-x-1`, `+x+0`.
impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        if self.shift < 0 {
            write!(f, "{s}x{}", self.shift)
        } else {
            write!(f, "{s}x+{}", self.shift)
        }
    }
}
