//! Exact banding calculus for closed 3-string braids.
//!
//! Everything here is exact integer and rational arithmetic: the
//! representation of the 3-string braid group in PSL2(Z), negative
//! continued fractions, canonical forms for two-bridge links and lens
//! spaces, the closed-form banding of a braid closure to a two-bridge
//! link together with its independent conjugation oracle, and the knot
//! family living in connected sums of lens spaces with its chain-link
//! surgery descriptions.

pub mod banding;
pub mod braid3;
pub mod exactmath;
pub mod family;
pub mod spaces;
pub mod verify;

pub use banding::{band_connected_sum, band_formula, band_oracle, band_slope, BandingResult};
pub use braid3::{BraidWord, ConjugatorDecomposition, Gen, RhoConvention};
pub use exactmath::{bezout_complement, km_relations, ContFrac, ExtRational, Parity, Psl2Mat, Slope};
pub use family::{enumerate_catalog, CatalogEntry, ChainSurgeryDescription, KnotSpec};
pub use spaces::{ConnectedSumLink, H1Order, LensSpace, SimpleKnot, TwoBridgeLink};

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameters ({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("empty continued fraction has no Kirby-Melvin relations")]
    EmptyContFrac,
    #[error("slope mismatch: {0} vs {1}")]
    SlopeMismatch(String, String),
    #[error("banding formula and conjugation oracle disagree: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
