//! Overlined partitions whose even parts come in `r` colors and odd parts in
//! `s` colors.
//!
//! The crate computes `abar_{r,s}(n)` three ways (sparse eta-quotient
//! expansion, a product of theta functions, and a direct combinatorial
//! dynamic program) and machine-checks congruences and identities for these
//! numbers at a configurable truncation depth.
//!
//! - [`ring`] and [`series`]: truncated power series over `Z` or `Z/mZ`.
//! - [`qseries`]: Euler products, theta functions, generating functions and
//!   series identities.
//! - [`oracle`]: combinatorial counts and exhaustive enumeration.
//! - [`lab`]: congruence families, residue profiles and suites.
//! - [`report`]: verification reports and their JSON/CSV renderings.
//! - [`cli`]: the `overcolored` command-line front end.

pub mod arith;
pub mod cli;
pub mod lab;
pub mod oracle;
pub mod qseries;
pub mod report;
pub mod ring;
pub mod series;

pub use qseries::{ColorParams, EtaQuotientSpec};
pub use report::{Status, SuiteReport, VerificationReport};
pub use ring::{CoefficientRing, Integers, ResidueRing};
pub use series::{IntSeries, ModSeries, SeriesError, TruncatedSeries};
