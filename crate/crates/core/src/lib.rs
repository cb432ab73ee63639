//! Exact and numerical machinery for studying `a^n + b^n = c^n`.
//!
//! * [`exact`]: unbounded naturals, lowest-terms rationals, 2-adic splits and
//!   exact integer roots.
//! * [`triples`]: primitive candidate triples, their parity forms, and the
//!   primitive Pythagorean parametrization.
//! * [`lemmas`]: parity, root-trichotomy and Pythagorean-reduction checks as
//!   exact predicates and identities.
//! * [`geometry`]: the surface `c(n)`, triangle classification and integer
//!   points on the arc above `a`.
//! * [`explorer`]: exponent solving, brute-force and near-miss searches.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod explorer;
pub mod geometry;
pub mod lemmas;
pub mod triples;

pub use error::{Error, Result};
pub use exact::{Natural, Ratio, TwoAdicForm};
pub use triples::{FermatTriple, PythParam, PythTriple};
