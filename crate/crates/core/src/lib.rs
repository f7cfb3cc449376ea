//! Exact-arithmetic Reynolds operators for the classical group actions.
//!
//! The engine works over arbitrary-precision rationals throughout: sparse
//! polynomials in matrix-indexed variables, the substitution maps of the
//! classical actions, exact monomial Haar integrals (a closed form over
//! SU(2), a Weingarten solve over U(t)), generator sets for the classical
//! invariant rings, the characteristic-p splitting classification, and a
//! reproduction suite tying the pieces together.

pub mod actions;
pub mod haar;
pub mod identities;
pub mod invariants;
pub mod linalg;
pub mod numutil;
pub mod polyring;
pub mod reynolds;
pub mod splitcrit;
pub mod suite;

pub use numutil::Rat;
