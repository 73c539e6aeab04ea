//! Exact-arithmetic laboratory for partially ordered commutative monoids and
//! star-operation ideal theory over quadratic rings.
//!
//! The crate is organized around five areas:
//!
//! * [`monoid`] — finitely described commutative p.o. monoids with exact
//!   addition, decidable divisibility and window-bounded enumeration.
//! * [`order`] — element-level order theory: primal, rigid, prime-quantum and
//!   homogeneous elements, pre-Riesz verification, Conrad bounds, bases.
//! * [`riesz`] — Riesz interpolation at monoid and group level, including
//!   constructive proof replays and the group of differences.
//! * [`ideal`] — fractional-ideal arithmetic over quadratic orders: Hermite
//!   forms, v/t-closures, homogeneous ideals, potency, PSP and Schreier
//!   probes, and export of the finite-ideal monoid.
//! * [`suites`] / [`report`] — named check suites and machine-readable
//!   reports, used by the `ordalg` command-line front end.
//!
//! All computations are exact (integer arithmetic only) and deterministic;
//! sweeps are exhaustive within the enumeration window of each instance.

pub mod bits;
pub mod catalog;
pub mod element;
pub mod ideal;
pub mod monoid;
pub mod order;
pub mod par;
pub mod report;
pub mod riesz;
pub mod suites;
pub mod verdict;

pub use element::Element;
pub use monoid::{MonoidError, MonoidInstance, SumOutcome, Window};
pub use verdict::{Status, Verdict};
