//! Coefficient rings for truncated series.
//!
//! Two rings are provided: [`Integers`] (exact, unbounded) and
//! [`ResidueRing`] (canonical residues in `[0, m)` for any `m >= 2`).
//! Every series operation is generic over [`CoefficientRing`].

use std::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::series::SeriesError;

/// Largest modulus accepted by [`ResidueRing`]. Products of two residues fit in
/// a `u64`, which keeps the convolution inner loop free of 128-bit division.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// Ambient arithmetic for series coefficients.
#[allow(clippy::wrong_self_convention)]
pub trait CoefficientRing: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// `acc += a`, in place.
    fn add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem) {
        *acc = self.add(acc, a);
    }

    /// `acc -= a`, in place.
    fn sub_assign(&self, acc: &mut Self::Elem, a: &Self::Elem) {
        *acc = self.sub(acc, a);
    }

    /// Multiplicative inverse if `a` is a unit.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Dot product `sum a[i] * b[i]`. Rings may override with a faster kernel.
    fn dot<'a, I>(&self, pairs: I) -> Self::Elem
    where
        I: Iterator<Item = (&'a Self::Elem, &'a Self::Elem)>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for (a, b) in pairs {
            acc = self.add(&acc, &self.mul(a, b));
        }
        acc
    }

    /// Exact integer representative of an element (canonical for residues).
    fn to_bigint(&self, a: &Self::Elem) -> BigInt;

    fn describe(&self) -> String;
}

/// The ring of integers with unbounded coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl CoefficientRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn add_assign(&self, acc: &mut BigInt, a: &BigInt) {
        *acc += a;
    }

    fn sub_assign(&self, acc: &mut BigInt, a: &BigInt) {
        *acc -= a;
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn dot<'a, I>(&self, pairs: I) -> BigInt
    where
        I: Iterator<Item = (&'a BigInt, &'a BigInt)>,
    {
        let mut acc = BigInt::zero();
        for (a, b) in pairs {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += a * b;
        }
        acc
    }

    fn to_bigint(&self, a: &BigInt) -> BigInt {
        a.clone()
    }

    fn describe(&self) -> String {
        "Z".to_string()
    }
}

/// Residues modulo `m`, stored as canonical representatives in `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueRing {
    modulus: u64,
}

impl ResidueRing {
    pub fn new(modulus: u64) -> Result<Self, SeriesError> {
        if !(2..=MAX_MODULUS).contains(&modulus) {
            return Err(SeriesError::InvalidModulus(modulus));
        }
        Ok(Self { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduce an arbitrary signed integer into `[0, m)`.
    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }
}

impl Display for ResidueRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}Z", self.modulus)
    }
}

impl CoefficientRing for ResidueRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i64(v)
    }

    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.modulus))
            .to_u64()
            .expect("canonical residue fits in u64")
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.modulus
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn unit_inverse(&self, a: &u64) -> Option<u64> {
        let m = self.modulus as i64;
        let g = (*a as i64).extended_gcd(&m);
        if g.gcd != 1 {
            return None;
        }
        Some(g.x.rem_euclid(m) as u64)
    }

    fn dot<'a, I>(&self, pairs: I) -> u64
    where
        I: Iterator<Item = (&'a u64, &'a u64)>,
    {
        // each product is < 2^64, so a u128 accumulator cannot overflow for
        // any realistic series length
        let mut acc: u128 = 0;
        for (a, b) in pairs {
            acc += (a * b) as u128;
        }
        (acc % self.modulus as u128) as u64
    }

    fn to_bigint(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_ring_rejects_small_and_huge_moduli() {
        assert!(ResidueRing::new(0).is_err());
        assert!(ResidueRing::new(1).is_err());
        assert!(ResidueRing::new(2).is_ok());
        assert!(ResidueRing::new(MAX_MODULUS + 1).is_err());
    }

    #[test]
    fn residues_are_canonical() {
        let r = ResidueRing::new(8).unwrap();
        assert_eq!(r.from_i64(-1), 7);
        assert_eq!(r.from_i64(17), 1);
        assert_eq!(r.from_bigint(&BigInt::from(-9)), 7);
        assert_eq!(r.sub(&1, &3), 6);
        assert_eq!(r.neg(&0), 0);
        assert_eq!(r.add(&7, &7), 6);
    }

    #[test]
    fn unit_inverse_checks_gcd() {
        let r = ResidueRing::new(8).unwrap();
        assert_eq!(r.unit_inverse(&3), Some(3));
        assert_eq!(r.unit_inverse(&2), None);
        assert_eq!(Integers.unit_inverse(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(Integers.unit_inverse(&BigInt::from(2)), None);
    }

    #[test]
    fn dot_matches_naive_sum() {
        let r = ResidueRing::new(1_000_003).unwrap();
        let a: Vec<u64> = (0..50).map(|i| (i * 7919) % 1_000_003).collect();
        let b: Vec<u64> = (0..50).map(|i| (i * 104_729 + 3) % 1_000_003).collect();
        let naive = a
            .iter()
            .zip(&b)
            .fold(0u64, |acc, (x, y)| r.add(&acc, &r.mul(x, y)));
        assert_eq!(r.dot(a.iter().zip(&b)), naive);
    }
}
