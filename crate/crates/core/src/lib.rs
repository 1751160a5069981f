//! Repetitiveness measures and the string families that stress them.
//!
//! The crate computes the size `chi` of a smallest suffixient set and the
//! run counts `r`, `r_bar`, `r_c` of the terminated, reversed and circular
//! Burrows-Wheeler transforms, builds two extremal families (clustered
//! sigma-ary words and run-minimal binary de Bruijn sequences generated by
//! LFSRs over GF(2)), and verifies their closed-form measures against
//! definition-level oracles.

pub mod alphabet;
pub mod bwt;
pub mod clustered;
pub mod conjecture;
pub mod debruijn;
pub mod error;
pub mod f2poly;
pub mod lfsr;
pub mod oracle;
pub mod runmin;
pub mod sa;
pub mod strings;
pub mod suffixient;

pub use alphabet::{Alphabet, Symbol};
pub use error::{Error, Result};
pub use strings::{CyclicWord, SymbolString};

/// Exact rational used for every reported ratio; the identities under test
/// are integer identities, so floats never appear in reports.
pub type Ratio = num_rational::Ratio<u64>;
