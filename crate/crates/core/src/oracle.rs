//! Brute-force reference semantics.
//!
//! Everything here evaluates elements point by point on a finite window
//! `[-N, N]` and never touches the closed-form set algebra of
//! [`PartialIsometry::mul`], [`PartialIsometry::inverse`] or the solvers. The
//! only shared code with the fast path is [`PartialIsometry::apply`] and
//! [`Isometry::apply`].
//!
//! A window is large enough when it contains every excluded point in play,
//! every image of those points under the isometries in play, and a couple of
//! points on either side; [`auto_window`] picks such an `N`. On such a window
//! two cofinite partial isometries agree iff they are equal: the excluded sets
//! are visible, and two common domain points pin the isometry.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::isometry::{Isometry, Sign};
use crate::partial::PartialIsometry;

/// An element evaluated on `[-n, n]`. Images may lie outside the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowMap {
    pub n: u64,
    pub pairs: BTreeMap<i64, i64>,
}

impl WindowMap {
    pub fn is_injective(&self) -> bool {
        let images: BTreeSet<_> = self.pairs.values().collect();
        images.len() == self.pairs.len()
    }

    pub fn is_distance_preserving(&self) -> bool {
        let pts: Vec<_> = self.pairs.iter().map(|(&x, &y)| (x, y)).collect();
        pts.iter().enumerate().all(|(i, &(x1, y1))| {
            pts[i + 1..].iter().all(|&(x2, y2)| x1.abs_diff(x2) == y1.abs_diff(y2))
        })
    }

    /// Window points outside the domain.
    pub fn holes(&self) -> Vec<i64> {
        window(self.n).filter(|x| !self.pairs.contains_key(x)).collect()
    }
}

fn window(n: u64) -> impl Iterator<Item = i64> {
    let n = n.min(i64::MAX as u64) as i64;
    -n..=n
}

pub fn window_of(p: &PartialIsometry, n: u64) -> Result<WindowMap> {
    if n == 0 {
        return Err(Error::EmptyWindow);
    }
    let mut pairs = BTreeMap::new();
    for x in window(n) {
        if let Some(y) = p.apply(x)? {
            pairs.insert(x, y);
        }
    }
    Ok(WindowMap { n, pairs })
}

/// Half-width covering every excluded point of `elems`, every image of those
/// points under chains of the isometries in play, plus a margin of 2.
pub fn auto_window(elems: &[&PartialIsometry]) -> u64 {
    let coords = elems.iter().map(|p| p.excl().max_abs()).max().unwrap_or(0);
    let shifts: u64 = elems.iter().map(|p| p.gamma().shift().unsigned_abs()).sum();
    coords.saturating_add(shifts).saturating_add(2)
}

/// `x` through `p` then `q`, as partial maps.
pub fn compose_at(p: &PartialIsometry, q: &PartialIsometry, x: i64) -> Result<Option<i64>> {
    match p.apply(x)? {
        Some(y) => q.apply(y),
        None => Ok(None),
    }
}

/// Whether `p q` as computed in closed form matches composition of partial
/// maps at every window point.
pub fn oracle_mul_check(p: &PartialIsometry, q: &PartialIsometry, n: u64) -> Result<bool> {
    let pq = p.mul(q)?;
    for x in window(n) {
        if pq.apply(x)? != compose_at(p, q, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Window points outside the range of `p`. The range is collected from a
/// window widened by the shift so that every preimage is visited.
pub fn range_holes(p: &PartialIsometry, n: u64) -> Result<Vec<i64>> {
    let wide = window_of(p, n.saturating_add(p.gamma().shift().unsigned_abs()))?;
    let range: BTreeSet<i64> = wide.pairs.values().copied().collect();
    Ok(window(n).filter(|y| !range.contains(y)).collect())
}

pub fn domain_holes(p: &PartialIsometry, n: u64) -> Result<Vec<i64>> {
    Ok(window_of(p, n)?.holes())
}

/// Whether `candidate` is the inverse partial map of `p`: it undoes `p`
/// on the domain and is defined exactly on the range.
pub fn oracle_inverse_check(p: &PartialIsometry, candidate: &PartialIsometry, n: u64) -> Result<bool> {
    for x in window(n) {
        if let Some(y) = p.apply(x)? {
            if candidate.apply(y)? != Some(x) {
                return Ok(false);
            }
        }
    }
    let holes = range_holes(p, n)?;
    for y in window(n) {
        let defined = candidate.apply(y)?.is_some();
        if defined == holes.binary_search(&y).is_ok() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `p` is a restriction of `q` on the window.
pub fn oracle_leq(p: &PartialIsometry, q: &PartialIsometry, n: u64) -> Result<bool> {
    for x in window(n) {
        if let Some(y) = p.apply(x)? {
            if q.apply(x)? != Some(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn oracle_equal(p: &PartialIsometry, q: &PartialIsometry, n: u64) -> Result<bool> {
    Ok(window_of(p, n)? == window_of(q, n)?)
}

/// `p σ q` by its definition: some idempotent `e` with `e p = e q`. The
/// candidate `e` is the identity on the common domain.
pub fn oracle_sigma_eq(p: &PartialIsometry, q: &PartialIsometry, n: u64) -> Result<bool> {
    for x in window(n) {
        if p.in_domain(x) && q.in_domain(x) && p.apply(x)? != q.apply(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `a χ = b`
    Right,
    /// `χ a = b`
    Left,
}

/// The isometry sending `y0 -> z0` and `y1 -> z1`, where `y0, y1` are
/// adjacent.
fn fit(y0: i64, z0: i64, y1: i64, z1: i64) -> Result<Isometry> {
    let overflow = || Error::Overflow("oracle fit");
    let dy = y1.checked_sub(y0).ok_or_else(overflow)?;
    let dz = z1.checked_sub(z0).ok_or_else(overflow)?;
    debug_assert!(dy.abs() == 1 && dz.abs() == 1);
    let sign = if dy == dz { Sign::Pos } else { Sign::Neg };
    let moved = match sign {
        Sign::Pos => Some(y0),
        Sign::Neg => y0.checked_neg(),
    };
    let shift = moved.and_then(|m| z0.checked_sub(m)).ok_or_else(overflow)?;
    Ok(Isometry::new(sign, shift))
}

/// Preimage of `y` under the global isometry of `p`, read off from the values
/// at 0 and 1.
fn preimage(p: &PartialIsometry, y: i64) -> Result<i64> {
    let g = p.gamma();
    let (g0, g1) = (g.apply(0)?, g.apply(1)?);
    let d = y.checked_sub(g0).ok_or(Error::Overflow("oracle preimage"))?;
    if g1 > g0 {
        Ok(d)
    } else {
        d.checked_neg().ok_or(Error::Overflow("oracle preimage"))
    }
}

/// Exhaustive search for the solutions of `a χ = b` or `χ a = b` with
/// excluded set inside `bound`.
///
/// The isometry of `χ` is forced by the unit-group equation; it is recovered
/// here by evaluating the global isometries at two points. Every `(rho, H)` with
/// `H ⊆ bound` is then checked by pointwise composition.
pub fn oracle_solve(a: &PartialIsometry, b: &PartialIsometry, side: Side, bound: &FinSet) -> Result<Vec<PartialIsometry>> {
    let (ga, gb) = (a.gamma(), b.gamma());
    let rho = match side {
        // (x)gamma_a then rho = (x)gamma_b
        Side::Right => fit(ga.apply(0)?, gb.apply(0)?, ga.apply(1)?, gb.apply(1)?)?,
        // (x)rho then gamma_a = (x)gamma_b
        Side::Left => fit(0, preimage(a, gb.apply(0)?)?, 1, preimage(a, gb.apply(1)?)?)?,
    };
    let mut out = Vec::new();
    for h in bound.subsets() {
        let chi = PartialIsometry::new(rho, h);
        let (first, second) = match side {
            Side::Right => (a, &chi),
            Side::Left => (&chi, a),
        };
        let n = auto_window(&[a, b, &chi]);
        let mut ok = true;
        for x in window(n) {
            if compose_at(first, second, x)? != b.apply(x)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(chi);
        }
    }
    out.sort();
    Ok(out)
}

/// The excluded-set bound that contains every solution's excluded set:
/// `(X_b)gamma_a` for the right equation, `X_b` for the left.
pub fn solve_bound(a: &PartialIsometry, b: &PartialIsometry, side: Side) -> Result<FinSet> {
    match side {
        Side::Right => b.excl().iter().map(|x| a.gamma().apply(x)).collect(),
        Side::Left => Ok(b.excl().clone()),
    }
}

/// Green's relations from their definitions: `R` compares domains, `L`
/// compares ranges, and `D` searches for an intermediate `χ` with
/// `p L χ R q`.
///
/// The search runs over every `χ` with the domain of `q` whose isometry
/// sends the smallest hole of `q` onto some range hole of `p` (any `χ`
/// witnessing `D` must do that); each candidate's range is then compared
/// with that of `p` point by point.
pub fn oracle_green(p: &PartialIsometry, q: &PartialIsometry) -> Result<(bool, bool, bool)> {
    let n = auto_window(&[p, q]);
    let r = domain_holes(p, n)? == domain_holes(q, n)?;
    let p_range = range_holes(p, n)?;
    let l = p_range == range_holes(q, n)?;
    let q_holes = domain_holes(q, n)?;
    let candidates: Vec<Isometry> = match q_holes.first() {
        None => vec![Isometry::IDENTITY],
        Some(&x) => {
            let mut v = Vec::new();
            for &y in &p_range {
                let minus_x = x.checked_neg().ok_or(Error::Overflow("oracle green"))?;
                for (sign, moved) in [(Sign::Pos, x), (Sign::Neg, minus_x)] {
                    let shift = y.checked_sub(moved).ok_or(Error::Overflow("oracle green"))?;
                    v.push(Isometry::new(sign, shift));
                }
            }
            v
        }
    };
    let mut d = false;
    for g in candidates {
        let chi = PartialIsometry::new(g, q_holes.iter().copied().collect());
        let m = auto_window(&[p, q, &chi]);
        if range_holes(&chi, m)? == range_holes(p, m)? {
            d = true;
            break;
        }
    }
    Ok((l, r, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(gamma: Isometry, excl: &[i64]) -> PartialIsometry {
        PartialIsometry::new(gamma, excl.iter().copied().collect())
    }

    #[test]
    fn window_of_examples() {
        let a = p(Isometry::translation(1), &[0]);
        let w = window_of(&a, 2).unwrap();
        assert_eq!(w.pairs, BTreeMap::from([(-2, -1), (-1, 0), (1, 2), (2, 3)]));
        assert_eq!(w.holes(), vec![0]);
        let id = window_of(&PartialIsometry::identity(), 1).unwrap();
        assert_eq!(id.pairs, BTreeMap::from([(-1, -1), (0, 0), (1, 1)]));
        assert_eq!(window_of(&a, 0), Err(Error::EmptyWindow));
    }

    #[test]
    fn window_maps_are_isometric() {
        let w = window_of(&p(Isometry::reflection(3), &[-1, 2]), 6).unwrap();
        assert!(w.is_injective());
        assert!(w.is_distance_preserving());
    }

    #[test]
    fn mul_check_examples() {
        let a = p(Isometry::translation(1), &[0]);
        assert!(oracle_mul_check(&a, &a, 8).unwrap());
        let e = p(Isometry::IDENTITY, &[1, 3]);
        let f = p(Isometry::IDENTITY, &[3, 5]);
        assert!(oracle_mul_check(&e, &f, 8).unwrap());
        let w = window_of(&e.mul(&f).unwrap(), 8).unwrap();
        assert_eq!(w.holes(), vec![1, 3, 5]);
    }

    #[test]
    fn inverse_check_rejects_wrong_candidates() {
        let a = p(Isometry::translation(1), &[0]);
        let n = auto_window(&[&a]);
        assert!(oracle_inverse_check(&a, &p(Isometry::translation(-1), &[1]), n).unwrap());
        assert!(!oracle_inverse_check(&a, &p(Isometry::translation(-1), &[0]), n).unwrap());
        assert!(!oracle_inverse_check(&a, &p(Isometry::translation(-1), &[]), n).unwrap());
    }

    #[test]
    fn solve_examples() {
        let a = p(Isometry::IDENTITY, &[0]);
        let b = p(Isometry::translation(2), &[0, 4]);
        let bound = solve_bound(&a, &b, Side::Right).unwrap();
        assert_eq!(
            oracle_solve(&a, &b, Side::Right, &bound).unwrap(),
            vec![p(Isometry::translation(2), &[0, 4]), p(Isometry::translation(2), &[4])]
        );
        let a = p(Isometry::IDENTITY, &[5]);
        let b = PartialIsometry::identity();
        let bound = solve_bound(&a, &b, Side::Right).unwrap();
        assert!(oracle_solve(&a, &b, Side::Right, &bound).unwrap().is_empty());
    }

    #[test]
    fn solve_left_with_reflections() {
        let a = p(Isometry::reflection(3), &[1]);
        let b = p(Isometry::translation(-2), &[0, 4, 9]);
        let bound = solve_bound(&a, &b, Side::Left).unwrap();
        let found = oracle_solve(&a, &b, Side::Left, &bound).unwrap();
        for chi in &found {
            assert_eq!(chi.mul(&a).unwrap(), b);
        }
        assert!(!found.is_empty());
    }

    #[test]
    fn green_examples() {
        let e = p(Isometry::IDENTITY, &[0, 1]);
        let f = p(Isometry::IDENTITY, &[5, 6]);
        assert_eq!(oracle_green(&e, &f).unwrap(), (false, false, true));
        let g = p(Isometry::IDENTITY, &[0, 2]);
        assert!(!oracle_green(&e, &g).unwrap().2);
    }
}
