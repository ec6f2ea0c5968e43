//! Numeric embedding of `Iso(Z) = Z ⋊ Z2` into the compact group `T¹ ⋊ Z2`.
//!
//! `theta(z, b) = (e^{iz}, b)` is an injective homomorphism because 2π is
//! irrational; the image accumulates on the circle, so the subspace topology
//! on the integers is not discrete. This module only illustrates that
//! numerically.
//!
//! Group law on `T¹ ⋊ Z2`, matching [`crate::semidirect::ShiftFlip::mul`]:
//! `(w1, b1)(w2, b2) = (conj^{b2}(w1) w2, b1 xor b2)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::f64::consts::TAU;

use crate::isometry::Isometry;

/// `2π - TAU`, the part of 2π that does not fit in an `f64`.
const TAU_LO: f64 = 2.449_293_598_294_706_4e-16;

/// A point of the unit circle with a reflection bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleElem {
    pub re: f64,
    pub im: f64,
    pub flip: bool,
}

impl CircleElem {
    pub const IDENTITY: CircleElem = CircleElem { re: 1.0, im: 0.0, flip: false };

    fn normalized(re: f64, im: f64, flip: bool) -> Self {
        let r = re.hypot(im);
        CircleElem { re: re / r, im: im / r, flip }
    }

    pub fn mul(&self, other: &CircleElem) -> CircleElem {
        let (re1, im1) = if other.flip { (self.re, -self.im) } else { (self.re, self.im) };
        let re = re1 * other.re - im1 * other.im;
        let im = re1 * other.im + im1 * other.re;
        CircleElem::normalized(re, im, self.flip ^ other.flip)
    }

    /// `|re^2 + im^2 - 1|`.
    pub fn norm_defect(&self) -> f64 {
        (self.re * self.re + self.im * self.im - 1.0).abs()
    }

    /// Euclidean distance of the circle components; infinite when the
    /// reflection bits differ (they lie in different components).
    pub fn distance(&self, other: &CircleElem) -> f64 {
        if self.flip != other.flip {
            f64::INFINITY
        } else {
            (self.re - other.re).hypot(self.im - other.im)
        }
    }
}

/// `a mod 2π` in `[-π, π]`, with 2π split into two doubles so that the
/// reduction stays accurate for large integers.
pub fn reduce_angle(a: i64) -> f64 {
    let x = a as f64;
    let k = (x / TAU).round();
    k.mul_add(-TAU, x) - k * TAU_LO
}

pub fn theta(g: &Isometry) -> CircleElem {
    let angle = reduce_angle(g.shift());
    CircleElem { re: angle.cos(), im: angle.sin(), flip: g.sign().is_reflection() }
}

/// `a mod 2π` in `[0, 2π)`.
fn position(a: i64) -> f64 {
    let r = reduce_angle(a);
    if r < 0.0 {
        r + TAU
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Angle(f64);

impl Eq for Angle {}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// `min_gap(n)` for every `n` in `1..=max_n`: the smallest arc distance
/// between two of the points `e^{ik}`, `|k| <= n`.
///
/// Points are inserted one at a time into a sorted set; a new point can only
/// split an existing arc, so the running minimum only needs the two arcs
/// next to it.
pub fn min_gap_profile(max_n: u64) -> Vec<f64> {
    let mut points: BTreeSet<Angle> = BTreeSet::from([Angle(0.0)]);
    let mut best = f64::INFINITY;
    let mut out = Vec::with_capacity(max_n as usize);
    for k in 1..=max_n.min(i64::MAX as u64) as i64 {
        for a in [k, -k] {
            let x = Angle(position(a));
            let below = points
                .range(..x)
                .next_back()
                .map(|p| p.0)
                .or_else(|| points.last().map(|p| p.0 - TAU));
            let above = points
                .range(x..)
                .next()
                .map(|p| p.0)
                .or_else(|| points.first().map(|p| p.0 + TAU));
            if let Some(b) = below {
                best = best.min(x.0 - b);
            }
            if let Some(c) = above {
                best = best.min(c - x.0);
            }
            points.insert(x);
        }
        out.push(best);
    }
    out
}

pub fn min_gap(n: u64) -> f64 {
    min_gap_profile(n).last().copied().unwrap_or(f64::INFINITY)
}

/// The pigeonhole bound `2π / (2n + 1)`.
pub fn gap_bound(n: u64) -> f64 {
    TAU / (2 * n + 1) as f64
}
