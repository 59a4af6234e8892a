//! Dense truncated power series over a [`CoefficientRing`].
//!
//! A [`TruncatedSeries`] of order `N` holds exactly the coefficients of
//! `q^0 .. q^(N-1)`. Binary operations return a series of the smaller order
//! of their operands and never extrapolate beyond it.

use num_bigint::BigInt;
use thiserror::Error;

use crate::ring::{CoefficientRing, Integers, ResidueRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("coefficient rings differ: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("constant term {constant} is not a unit in {ring}")]
    NonUnitConstant { constant: String, ring: String },
    #[error("modulus {0} is outside the supported range [2, 2^32)")]
    InvalidModulus(u64),
    #[error("a truncated series needs at least one coefficient")]
    EmptySeries,
}

/// Result of comparing two series on their common prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    /// Number of leading coefficients compared.
    pub order: usize,
    /// Exponents where the two series differ.
    pub mismatches: Vec<usize>,
}

impl Agreement {
    pub fn is_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R: CoefficientRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

pub type IntSeries = TruncatedSeries<Integers>;
pub type ModSeries = TruncatedSeries<ResidueRing>;

impl<R: CoefficientRing> TruncatedSeries<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptySeries);
        }
        Ok(Self { ring, coeffs })
    }

    /// Build from small integer coefficients, zero-padding (or truncating) to
    /// `order`.
    pub fn from_i64s(ring: R, values: &[i64], order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        let coeffs = (0..order)
            .map(|k| ring.from_i64(values.get(k).copied().unwrap_or(0)))
            .collect();
        Self { ring, coeffs }
    }

    pub fn zero(ring: R, order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        let coeffs = vec![ring.zero(); order];
        Self { ring, coeffs }
    }

    pub fn one(ring: R, order: usize) -> Self {
        Self::monomial(ring, 1, 0, order)
    }

    /// `c * q^k`, truncated to `order`.
    pub fn monomial(ring: R, c: i64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if k < order {
            s.coeffs[k] = s.ring.from_i64(c);
        }
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    /// Coefficient of `q^k`; panics past the truncation order.
    pub fn coeff(&self, k: usize) -> &R::Elem {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        let order = order.min(self.order());
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), SeriesError> {
        if self.ring != other.ring {
            return Err(SeriesError::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.neg(a)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &R::Elem) -> Self {
        Self {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect(),
        }
    }

    /// Multiply by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![self.ring.zero(); n];
        if k < n {
            coeffs[k..].clone_from_slice(&self.coeffs[..n - k]);
        }
        Self {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Schoolbook Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let n = self.order().min(other.order());
        let a = &self.coeffs[..n];
        let b = &other.coeffs[..n];
        let coeffs = (0..n)
            .map(|k| self.ring.dot(a[..=k].iter().zip(b[..=k].iter().rev())))
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Multiplicative inverse to the same order. The constant term must be a
    /// unit of the ring.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.constant_unit_inverse()?;
        let neg_inv0 = self.ring.neg(&inv0);
        let n = self.order();
        let a = &self.coeffs;
        let mut b: Vec<R::Elem> = Vec::with_capacity(n);
        b.push(inv0);
        for k in 1..n {
            let s = self.ring.dot(a[1..=k].iter().zip(b[..k].iter().rev()));
            b.push(self.ring.mul(&neg_inv0, &s));
        }
        Ok(Self {
            ring: self.ring.clone(),
            coeffs: b,
        })
    }

    fn constant_unit_inverse(&self) -> Result<R::Elem, SeriesError> {
        self.ring
            .unit_inverse(&self.coeffs[0])
            .ok_or_else(|| SeriesError::NonUnitConstant {
                constant: self.ring.to_bigint(&self.coeffs[0]).to_string(),
                ring: self.ring.describe(),
            })
    }

    /// Integer power by repeated squaring; negative exponents invert the
    /// positive power.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e < 0 {
            self.constant_unit_inverse()?;
        }
        let mut result = Self::one(self.ring.clone(), self.order());
        let mut base = self.clone();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        if e < 0 {
            result.invert()
        } else {
            Ok(result)
        }
    }

    /// Substitute `q -> q^t`, keeping the order.
    pub fn scale_variable(&self, t: usize) -> Self {
        assert!(t >= 1, "substitution q -> q^t needs t >= 1");
        let n = self.order();
        let mut coeffs = vec![self.ring.zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            match k.checked_mul(t) {
                Some(idx) if idx < n => coeffs[idx] = c.clone(),
                _ => break,
            }
        }
        Self {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Substitute `q -> q^t` into a series known to `ceil(order / t)` terms,
    /// producing a series of the (larger) requested order.
    pub fn inflate(&self, t: usize, order: usize) -> Self {
        assert!(t >= 1 && order >= 1);
        assert!(
            self.order() * t >= order,
            "inflating order {} by {} cannot reach order {}",
            self.order(),
            t,
            order
        );
        let mut coeffs = vec![self.ring.zero(); order];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * t >= order {
                break;
            }
            coeffs[k * t] = c.clone();
        }
        Self {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// The series `sum a(step*n + residue) q^n`, of order
    /// `ceil((order - residue) / step)`.
    pub fn extract_ap(&self, residue: usize, step: usize) -> Self {
        assert!(step >= 1 && residue < step, "need 0 <= residue < step");
        assert!(residue < self.order(), "residue beyond truncation order");
        let coeffs = self
            .coeffs
            .iter()
            .skip(residue)
            .step_by(step)
            .cloned()
            .collect();
        Self {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Compare on the common prefix.
    pub fn agreement(&self, other: &Self) -> Agreement {
        let order = self.order().min(other.order());
        let mismatches = (0..order)
            .filter(|&k| self.coeffs[k] != other.coeffs[k])
            .collect();
        Agreement { order, mismatches }
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| self.ring.to_bigint(c)).collect()
    }

    /// Re-express the coefficients in another ring.
    pub fn map_into<S: CoefficientRing>(&self, ring: S) -> TruncatedSeries<S> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| ring.from_bigint(&self.ring.to_bigint(c)))
            .collect();
        TruncatedSeries { ring, coeffs }
    }
}

impl IntSeries {
    /// Canonical reduction of an exact series modulo `m`.
    pub fn reduce_mod(&self, m: u64) -> Result<ModSeries, SeriesError> {
        let ring = ResidueRing::new(m)?;
        Ok(self.map_into(ring))
    }
}

impl ModSeries {
    /// Reduce further to a divisor of the current modulus.
    pub fn reduce_mod(&self, m: u64) -> Result<ModSeries, SeriesError> {
        let ring = ResidueRing::new(m)?;
        Ok(TruncatedSeries {
            ring,
            coeffs: self.coeffs.iter().map(|c| c % m).collect(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.ring.modulus()
    }
}
