//! Congruence families, residue profiles modulo 4 and 8, and the suites that
//! check them.

mod classify;
mod family;
mod profiles;
mod residues;
mod suites;
mod verify;

use thiserror::Error;

use crate::qseries::ParamError;
use crate::series::SeriesError;

pub use classify::{classify_n, NSquareClassification};
pub use family::{
    CongruenceClaim, CountingFunction, FamilyParams, Scheme, Thm5Form, Thm6Form, Thm7Form, Thm8Form,
};
pub use profiles::{
    das_mod4_table, das_mod8_table, das_profiles, mod4_predicted, mod4_profile, mod4_table, mod8_predicted,
    mod8_profile, mod8_table, ProfileOutcome,
};
pub use residues::{half_non_residues, legendre, mod_inverse, non_residues};
pub use suites::{
    conjecture_claims, conjecture_scan, das_specialization_suite, identities_suite, lemma22_instances,
    lemma22_suite, lemma22_transfer_check, theorem3_suite, theorem4_suite, theorem5_claims,
    theorem5_negative_controls, theorem5_suite, theorem6_claims, theorem6_suite, theorem7_claims,
    theorem7_suite, theorem8_claims, theorem8_suite, IdentityConfig, Thm5Grid, Thm6Grid, TransferInstance,
    PARITY_SPLIT_PARAMS,
};
pub use verify::{run_claims, verify_claim, verify_claim_cached, SeriesCache};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i64, m: u64 },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
