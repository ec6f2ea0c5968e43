//! Exact computation in the inverse semigroup of partial cofinite isometries
//! of the integers.
//!
//! An element is a global isometry `x -> ±x + a` restricted to the complement
//! of a finite set, stored canonically as [`PartialIsometry`]. Products follow
//! the right-action convention `(x)(p q) = ((x)p)q`: the left factor acts
//! first.
//!
//! Modules:
//! - [`isometry`], [`finset`], [`partial`]: value types and the basic
//!   inverse-semigroup operations.
//! - [`quotient`], [`semidirect`], [`finverse`]: the minimum group
//!   congruence, the semidirect-product form and the reconstruction from
//!   class maxima.
//! - [`solvers`]: up-sets, equation solution sets, Green's relations.
//! - [`oracle`]: pointwise reference semantics used to cross-check all of the
//!   above.
//! - [`circle`]: the embedding of the unit group into `T¹ ⋊ Z2`.
//!
//! Arithmetic is on `i64` and every operation that can overflow reports
//! [`Error::Overflow`] instead of wrapping.

pub mod circle;
pub mod error;
pub mod finset;
pub mod finverse;
pub mod isometry;
pub mod oracle;
pub mod partial;
pub mod quotient;
pub mod sample;
pub mod semidirect;
pub mod solvers;

pub use error::{Error, Result};
pub use finset::FinSet;
pub use finverse::FInverseElem;
pub use isometry::{Isometry, Sign};
pub use partial::PartialIsometry;
pub use semidirect::{SemidirectElem, ShiftFlip};
pub use solvers::{Green, SolutionSet};
