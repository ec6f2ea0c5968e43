//! Reconstruction of the semigroup from its σ-class maxima.
//!
//! For an F-inverse monoid `S` with `t_s` the maximum of the σ-class of `s`,
//! `s -> (s s^-1, t_s)` is an isomorphism onto pairs `(f, u)` with `f <= e_u`
//! and product `(f, u)∘(g, v) = (f·(g)F_u, u*v)`, where `(g)F_u = u g u^-1`
//! and `u*v = t_{uv}`.
//!
//! Here every class maximum is a unit, so `e_u = u u^-1 = 1` and any
//! idempotent may pair with any `u`. Idempotents are stored by their excluded
//! set, so `f·g` is union of excluded sets and `(G)F_u = (G)u^-1`.

use std::fmt;

use crate::error::Result;
use crate::finset::FinSet;
use crate::isometry::Isometry;
use crate::partial::PartialIsometry;
use crate::quotient::sigma_max;

/// Pair `(f, t)` with `f` given by its excluded set.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FInverseElem {
    pub idem_excl: FinSet,
    pub t: Isometry,
}

impl FInverseElem {
    pub fn new(idem_excl: FinSet, t: Isometry) -> Self {
        FInverseElem { idem_excl, t }
    }

    /// `(f, u)∘(g, v) = (f·(g)F_u, u*v)`.
    pub fn mul(&self, other: &FInverseElem) -> Result<FInverseElem> {
        let twisted = conjugate_idempotent(&self.t, &other.idem_excl)?;
        Ok(FInverseElem {
            idem_excl: self.idem_excl.union(&twisted),
            t: max_product(&self.t, &other.t)?,
        })
    }
}

impl fmt::Display for FInverseElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.idem_excl, self.t)
    }
}

/// Excluded set of `t f t^-1` where `f` excludes `f_excl`: `(f_excl)t^-1`.
pub fn conjugate_idempotent(t: &Isometry, f_excl: &FinSet) -> Result<FinSet> {
    f_excl.image(&t.inverse()?)
}

/// `u*v = t_{uv}`: the class maximum of the product. For units this is the
/// plain group product, computed here through the semigroup to keep the
/// definition visible.
pub fn max_product(u: &Isometry, v: &Isometry) -> Result<Isometry> {
    let uv = PartialIsometry::unit(*u).mul(&PartialIsometry::unit(*v))?;
    Ok(*sigma_max(&uv).gamma())
}

/// Excluded set of `e_t = t t^-1`; always empty because `t` is a unit.
pub fn top_idempotent(t: &Isometry) -> Result<FinSet> {
    let t = PartialIsometry::unit(*t);
    Ok(t.mul(&t.inverse()?)?.excl().clone())
}

/// `s -> (s s^-1, t_s)`.
pub fn f_embed(p: &PartialIsometry) -> FInverseElem {
    FInverseElem { idem_excl: p.excl().clone(), t: *sigma_max(p).gamma() }
}

/// Inverse of [`f_embed`]: `s = f t`.
pub fn f_unembed(x: &FInverseElem) -> Result<PartialIsometry> {
    PartialIsometry::idempotent(x.idem_excl.clone()).mul(&PartialIsometry::unit(x.t))
}
