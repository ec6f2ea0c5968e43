//! Seeded random and exhaustive generators of elements, shared by the
//! property tests, the acceptance suite and the `oracle-check` command.

use rand::Rng;

use crate::finset::FinSet;
use crate::isometry::{Isometry, Sign};
use crate::partial::PartialIsometry;

pub fn random_isometry<R: Rng + ?Sized>(rng: &mut R, shift_bound: i64) -> Isometry {
    let sign = if rng.random_bool(0.5) { Sign::Neg } else { Sign::Pos };
    Isometry::new(sign, rng.random_range(-shift_bound..=shift_bound))
}

/// Up to `max_excl` distinct points drawn from `[-bound, bound]`.
pub fn random_finset<R: Rng + ?Sized>(rng: &mut R, bound: i64, max_excl: usize) -> FinSet {
    let k = rng.random_range(0..=max_excl);
    (0..k).map(|_| rng.random_range(-bound..=bound)).collect()
}

/// Shift and excluded points drawn from `[-bound, bound]`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, bound: i64, max_excl: usize) -> PartialIsometry {
    PartialIsometry::new(random_isometry(rng, bound), random_finset(rng, bound, max_excl))
}

/// Every element with `|shift| <= shift_bound` and excluded set inside
/// `[-excl_bound, excl_bound]`, in sorted order.
pub fn enumerate_bounded(shift_bound: i64, excl_bound: i64) -> Vec<PartialIsometry> {
    let window: FinSet = (-excl_bound..=excl_bound).collect();
    let mut out = Vec::new();
    for sign in [Sign::Neg, Sign::Pos] {
        for shift in -shift_bound..=shift_bound {
            for s in window.subsets() {
                out.push(PartialIsometry::new(Isometry::new(sign, shift), s));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_enumeration_size() {
        let all = enumerate_bounded(2, 2);
        assert_eq!(all.len(), 2 * 5 * 32);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
