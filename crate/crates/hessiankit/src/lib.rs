//! Exact-arithmetic toolkit for deciding whether a quaternary cubic lies on
//! the Hessian discriminant, for computing its fundamental invariants on
//! normal-form data, and for checking that the two answers agree.
//!
//! The kernel is a small exact computer-algebra stack over arbitrary
//! precision rationals: sparse multivariate polynomials, dense rational
//! linear algebra, and a Buchberger-based ideal engine. On top of it sit
//! the cubic-surface pipeline (Hessian slices, rank-2 pencil, intersection
//! verdict) and the invariant layer (sigma/I formulas, degeneration limits,
//! pentahedron recovery).

pub mod error;
pub mod rat;
pub mod rng;
pub mod linalg;
pub mod poly;
pub mod unipoly;
pub mod laurent;
pub mod groebner;
pub mod cubic;
mod modroots;
pub mod invariants;
pub mod cli;
