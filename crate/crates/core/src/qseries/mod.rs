//! Named q-series: Euler products, theta functions, eta-quotients and the
//! generating functions of colored (over)partitions with parity-dependent
//! color counts.

mod eta;
mod gf;
mod identities;
mod theta;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use eta::{eta_quotient, eta_quotient_dense, euler_f, euler_f_product, pentagonal_terms};
pub use gf::{cai_product, gf_colored, gf_even_over, gf_odd_over, gf_overcolored};
pub use identities::{
    binomial, verify_binomial_congruence, verify_hirschhorn_dissection, verify_parity_split,
    verify_phi_dual, verify_phi_neg_dual, ParitySplit,
};
pub use theta::{phi, phi_eta, phi_neg, phi_neg_eta};
pub(crate) use identities::parity_double_sum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("color counts must be positive, got r = {r}, s = {s}")]
    NonPositiveColors { r: i64, s: i64 },
    #[error("eta factor scale must be positive")]
    ZeroScale,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime power exponent must be at least 1")]
    ZeroExponent,
}

/// A finite product `prod f_m^e` of Euler products.
///
/// Duplicate scales merge additively; the empty product is `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaQuotientSpec {
    factors: Vec<(u64, i64)>,
}

impl EtaQuotientSpec {
    pub fn new(factors: impl IntoIterator<Item = (u64, i64)>) -> Result<Self, ParamError> {
        let factors: Vec<_> = factors.into_iter().collect();
        if factors.iter().any(|&(m, _)| m == 0) {
            return Err(ParamError::ZeroScale);
        }
        Ok(Self { factors })
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[(u64, i64)] {
        &self.factors
    }

    /// Merged exponents by scale, dropping zero exponents.
    pub fn normalized(&self) -> BTreeMap<u64, i64> {
        let mut merged = BTreeMap::new();
        for &(m, e) in &self.factors {
            *merged.entry(m).or_insert(0) += e;
        }
        merged.retain(|_, e| *e != 0);
        merged
    }

    /// Product of two quotients.
    pub fn times(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self { factors }
    }

    /// Every exponent multiplied by `k`.
    pub fn power(&self, k: i64) -> Self {
        Self {
            factors: self.factors.iter().map(|&(m, e)| (m, e * k)).collect(),
        }
    }

    /// Total number of sparse factor passes needed to expand the quotient.
    pub fn weight(&self) -> u64 {
        self.normalized().values().map(|e| e.unsigned_abs()).sum()
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        if n.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = n.iter().map(|(m, e)| format!("f{m}^{e}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Numbers of colors for even parts (`r`) and odd parts (`s`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorParams {
    r: u64,
    s: u64,
}

impl ColorParams {
    pub fn new(r: i64, s: i64) -> Result<Self, ParamError> {
        if r < 1 || s < 1 {
            return Err(ParamError::NonPositiveColors { r, s });
        }
        Ok(Self {
            r: r as u64,
            s: s as u64,
        })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// `f2^(3s-2r) / (f1^(2s) f4^(s-r))`.
    pub fn overcolored_spec(&self) -> EtaQuotientSpec {
        let (r, s) = (self.r as i64, self.s as i64);
        EtaQuotientSpec {
            factors: vec![(2, 3 * s - 2 * r), (1, -2 * s), (4, r - s)],
        }
    }

    /// `f2^(s-r) / f1^s`.
    pub fn colored_spec(&self) -> EtaQuotientSpec {
        let (r, s) = (self.r as i64, self.s as i64);
        EtaQuotientSpec {
            factors: vec![(2, s - r), (1, -s)],
        }
    }
}

impl fmt::Display for ColorParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, s={})", self.r, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_merges_duplicate_scales() {
        let spec = EtaQuotientSpec::new([(1, 1), (2, 3), (1, -1)]).unwrap();
        let n = spec.normalized();
        assert_eq!(n.len(), 1);
        assert_eq!(n[&2], 3);
        assert!(EtaQuotientSpec::new([(0, 1)]).is_err());
        assert_eq!(EtaQuotientSpec::one().to_string(), "1");
    }

    #[test]
    fn equal_colors_drop_the_f4_factor() {
        let spec = ColorParams::new(3, 3).unwrap().overcolored_spec();
        assert!(!spec.normalized().contains_key(&4));
    }

    #[test]
    fn color_params_validate() {
        assert!(ColorParams::new(0, 1).is_err());
        assert!(ColorParams::new(1, -2).is_err());
        assert!(ColorParams::new(1, 1).is_ok());
    }
}
