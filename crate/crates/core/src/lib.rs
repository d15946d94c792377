//! Set families over small ground sets, the fractional cross-intersecting
//! condition that ties two of them together, and everything needed to
//! explore it exhaustively: closure operators, parity and GF(2) structure,
//! extremal generators, and desk-scale searches.
//!
//! Sets are `u32` bitmasks (element `i` is bit `i - 1`), families are
//! sorted mask vectors, and fractions are exact integer pairs; no floats
//! appear anywhere. The arithmetic form of the condition is
//! `d·|A ∩ B| = c·|B|` for every A in the first family and B in the
//! second, with `c/d` in lowest terms.
//!
//! Module map:
//! - [`sets`]: masks, families, fractions, validated pairs.
//! - [`crossing`]: the predicate, parity classes, the `a_max` closure,
//!   and structure decomposition of closed families.
//! - [`gf2`]: families as binary codes: span, dual, column profiles,
//!   and the parity-preserving lift to a larger ground set.
//! - [`extremal`]: the known maximal-pair constructions.
//! - [`numtheory`]: binomial 2-adic valuations and the power-of-two test.
//! - [`search`]: exhaustive maximal-pair enumeration, canonicalization,
//!   and the exploratory symmetric variant.

pub mod crossing;
pub mod error;
pub mod extremal;
pub mod gf2;
pub mod numtheory;
pub mod search;
pub mod sets;

pub use error::{Error, Result};
pub use sets::{Family, Frac, GroundSize, PairInstance, SubsetMask, MAX_GROUND_SIZE};
