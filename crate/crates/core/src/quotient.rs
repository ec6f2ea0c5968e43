//! The minimum group congruence and its quotient onto `Iso(Z)`.
//!
//! Every element lies below exactly one unit, namely its global isometry.
//! Sending an element to that unit is a surjective homomorphism onto the
//! group of units, and two elements are congruent iff they have the same
//! image. The unit is also the maximum of the class, which makes the
//! semigroup F-inverse (and factorizable).

use crate::finset::FinSet;
use crate::isometry::Isometry;
use crate::partial::PartialIsometry;

/// The unit above `p`; the natural homomorphism onto the group of units.
pub fn group_image(p: &PartialIsometry) -> Isometry {
    *p.gamma()
}

/// `p σ q`: some idempotent `e` has `e p = e q`.
pub fn sigma_eq(p: &PartialIsometry, q: &PartialIsometry) -> bool {
    group_image(p) == group_image(q)
}

/// An idempotent `e` with `e p = e q` when `p σ q`.
pub fn sigma_witness(p: &PartialIsometry, q: &PartialIsometry) -> Option<PartialIsometry> {
    sigma_eq(p, q).then(|| PartialIsometry::idempotent(p.excl().union(q.excl())))
}

/// The maximum of the σ-class of `p`.
pub fn sigma_max(p: &PartialIsometry) -> PartialIsometry {
    PartialIsometry::new(group_image(p), FinSet::empty())
}
