//! Semidirect-product form `Iso(Z) ⋉ P∞(Z)`.
//!
//! An element `p = (gamma, X)` corresponds to `(gamma, E)` where `E = (X)gamma`
//! is the excluded set of the idempotent `p^-1 p`. The group acts on the
//! semilattice on the right by `E -> (E)gamma`, which is conjugation
//! `gamma^-1 e gamma` of the idempotent with excluded set `E`, and the product
//! is `(g1, E1)(g2, E2) = (g1 g2, (E1)g2 ∪ E2)`.

use std::fmt;

use crate::error::Result;
use crate::finset::FinSet;
use crate::isometry::{Isometry, Sign};
use crate::partial::PartialIsometry;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemidirectElem {
    pub gamma: Isometry,
    pub ran_excl: FinSet,
}

impl SemidirectElem {
    pub fn new(gamma: Isometry, ran_excl: FinSet) -> Self {
        SemidirectElem { gamma, ran_excl }
    }

    pub fn mul(&self, other: &SemidirectElem) -> Result<SemidirectElem> {
        Ok(SemidirectElem {
            gamma: self.gamma.then(&other.gamma)?,
            ran_excl: h_action(&self.ran_excl, &other.gamma)?.union(&other.ran_excl),
        })
    }
}

impl fmt::Display for SemidirectElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.gamma, self.ran_excl)
    }
}

/// The action of `g` on excluded sets of idempotents: `E -> (E)g`.
pub fn h_action(e_excl: &FinSet, g: &Isometry) -> Result<FinSet> {
    e_excl.image(g)
}

/// `p -> (gamma_p, p^-1 p)`.
pub fn to_semidirect(p: &PartialIsometry) -> Result<SemidirectElem> {
    Ok(SemidirectElem { gamma: *p.gamma(), ran_excl: p.range_excl()? })
}

/// Inverse of [`to_semidirect`]: `gamma` restricted away from `(E)gamma^-1`.
pub fn from_semidirect(s: &SemidirectElem) -> Result<PartialIsometry> {
    Ok(PartialIsometry::new(s.gamma, s.ran_excl.image(&s.gamma.inverse()?)?))
}

/// Element of `Z(+) ⋊ Z2`: the shift and a reflection bit (`false` = no
/// reflection).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftFlip {
    pub shift: i64,
    pub flip: bool,
}

impl ShiftFlip {
    /// Product law induced from composition of isometries:
    /// `(z1, b1)(z2, b2) = ((-1)^b2 z1 + z2, b1 xor b2)`.
    pub fn mul(&self, other: &ShiftFlip) -> Result<ShiftFlip> {
        let twisted = if other.flip { self.shift.checked_neg() } else { Some(self.shift) };
        let shift = twisted
            .and_then(|z| z.checked_add(other.shift))
            .ok_or(crate::Error::Overflow("semidirect pair product"))?;
        Ok(ShiftFlip { shift, flip: self.flip ^ other.flip })
    }
}

/// `x -> eps x + a` as the pair `(a, eps == -1)`.
pub fn units_as_pairs(g: &Isometry) -> ShiftFlip {
    ShiftFlip { shift: g.shift(), flip: g.sign().is_reflection() }
}

pub fn pair_to_unit(pair: ShiftFlip) -> Isometry {
    let sign = if pair.flip { Sign::Neg } else { Sign::Pos };
    Isometry::new(sign, pair.shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn to_semidirect_examples() {
        let a = PartialIsometry::new(Isometry::translation(1), FinSet::from([0]));
        let s = to_semidirect(&a).unwrap();
        assert_eq!(s, SemidirectElem::new(Isometry::translation(1), FinSet::from([1])));
        assert_eq!(from_semidirect(&s).unwrap(), a);
        let u = PartialIsometry::unit(Isometry::reflection(4));
        assert_eq!(
            to_semidirect(&u).unwrap(),
            SemidirectElem::new(Isometry::reflection(4), FinSet::empty())
        );
    }

    #[test]
    fn h_action_examples() {
        assert_eq!(
            h_action(&FinSet::from([0, 1]), &Isometry::translation(3)),
            Ok(FinSet::from([3, 4]))
        );
        let e = FinSet::from([-4, 2, 9]);
        assert_eq!(h_action(&e, &Isometry::IDENTITY), Ok(e));
    }

    #[test]
    fn h_action_is_conjugation() {
        let g = PartialIsometry::unit(Isometry::reflection(5));
        let e = PartialIsometry::idempotent(FinSet::from([0, 3]));
        let conj = g.inverse().unwrap().mul(&e).unwrap().mul(&g).unwrap();
        assert_eq!(
            conj,
            PartialIsometry::idempotent(h_action(e.excl(), g.gamma()).unwrap())
        );
    }

    #[test]
    fn pair_encoding() {
        assert_eq!(units_as_pairs(&Isometry::IDENTITY), ShiftFlip { shift: 0, flip: false });
        assert_eq!(units_as_pairs(&Isometry::reflection(2)), ShiftFlip { shift: 2, flip: true });
        let g = Isometry::reflection(-7);
        assert_eq!(pair_to_unit(units_as_pairs(&g)), g);
    }
}
