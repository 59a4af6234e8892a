//! Identity checks between independently built series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::is_prime;
use crate::report::{Counterexample, NRange, VerificationReport};
use crate::ring::{CoefficientRing, Integers, ResidueRing};
use crate::series::{IntSeries, TruncatedSeries};

use super::{eta_quotient, gf_overcolored, phi, phi_eta, phi_neg, phi_neg_eta, ColorParams, EtaQuotientSpec, ParamError};

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn spec(factors: &[(u64, i64)]) -> EtaQuotientSpec {
    EtaQuotientSpec::new(factors.iter().copied()).expect("positive scales")
}

fn compare<R: CoefficientRing>(
    report: crate::report::ReportBuilder,
    lhs: &TruncatedSeries<R>,
    rhs: &TruncatedSeries<R>,
) -> VerificationReport {
    let agreement = lhs.agreement(rhs);
    let ring = lhs.ring();
    let cex = agreement
        .mismatches
        .iter()
        .map(|&k| Counterexample {
            n: k as u64,
            value: (ring.to_bigint(lhs.coeff(k)) - ring.to_bigint(rhs.coeff(k))).to_string(),
        })
        .collect();
    let order = agreement.order;
    report.finish(
        NRange {
            from: 0,
            to: order as u64 - 1,
        },
        order,
        cex,
    )
}

/// `sum_t c_t q^(shift_t) * eta(spec_t)` over the integers.
fn eta_combination(terms: Vec<(BigInt, usize, EtaQuotientSpec)>, order: usize) -> IntSeries {
    let mut acc = IntSeries::zero(Integers, order);
    for (c, shift, spec) in terms {
        if c.is_zero() || shift >= order {
            continue;
        }
        let term = eta_quotient(&spec, order, &Integers).scalar_mul(&c).shift(shift);
        acc = acc.add(&term).expect("same ring");
    }
    acc
}

/// `1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8)` to the given order.
pub fn verify_hirschhorn_dissection(order: usize) -> VerificationReport {
    let lhs = eta_quotient(&spec(&[(1, -2)]), order, &Integers);
    let rhs = eta_combination(
        vec![
            (BigInt::one(), 0, spec(&[(8, 5), (2, -5), (16, -2)])),
            (BigInt::from(2), 1, spec(&[(4, 2), (16, 2), (2, -5), (8, -1)])),
        ],
        order,
    );
    compare(
        VerificationReport::start("2.1", "2-dissection of 1/f1^2"),
        &lhs,
        &rhs,
    )
}

/// Theta sum for `phi(q^t)` against `f_{2t}^5 / (f_t^2 f_{4t}^2)`.
pub fn verify_phi_dual(t: usize, order: usize) -> VerificationReport {
    compare(
        VerificationReport::start("phi", "phi(q^t) theta sum = eta-quotient").param("t", t as i64),
        &phi(&Integers, t, order),
        &phi_eta(&Integers, t, order),
    )
}

/// Theta sum for `phi(-q^t)` against `f_t^2 / f_{2t}`.
pub fn verify_phi_neg_dual(t: usize, order: usize) -> VerificationReport {
    compare(
        VerificationReport::start("phim", "phi(-q^t) theta sum = eta-quotient").param("t", t as i64),
        &phi_neg(&Integers, t, order),
        &phi_neg_eta(&Integers, t, order),
    )
}

/// `f_m^(p^k) = f_{mp}^(p^(k-1))` modulo `p^k`.
pub fn verify_binomial_congruence(m: u64, p: u64, k: u32, order: usize) -> Result<VerificationReport, ParamError> {
    if !is_prime(p) {
        return Err(ParamError::NotPrime(p));
    }
    if k == 0 {
        return Err(ParamError::ZeroExponent);
    }
    let modulus = p.pow(k);
    let ring = ResidueRing::new(modulus).map_err(|_| ParamError::NotPrime(p))?;
    let lhs = eta_quotient(&spec(&[(m, modulus as i64)]), order, &ring);
    let rhs = eta_quotient(&spec(&[(m * p, p.pow(k - 1) as i64)]), order, &ring);
    Ok(compare(
        VerificationReport::start("binomial", "f_m^(p^k) = f_mp^(p^(k-1))")
            .param("m", m as i64)
            .param("p", p as i64)
            .param("k", k as i64)
            .modulus(modulus),
        &lhs,
        &rhs,
    ))
}

/// The three parity-split checks for one `(r, s)`.
#[derive(Debug, Clone)]
pub struct ParitySplit {
    /// Generating function against the binomial expansion obtained from the
    /// 2-dissection of `1/f1^(2s)`.
    pub full: VerificationReport,
    /// Even-index coefficients against their double-sum form.
    pub even: VerificationReport,
    /// Odd-index coefficients against their double-sum form.
    pub odd: VerificationReport,
}

impl ParitySplit {
    pub fn into_reports(self) -> Vec<VerificationReport> {
        vec![self.full, self.even, self.odd]
    }

    pub fn all_verified(&self) -> bool {
        self.full.is_verified() && self.even.is_verified() && self.odd.is_verified()
    }
}

fn full_expansion(r: i64, s: i64, order: usize) -> IntSeries {
    let prefactor = spec(&[(8, 5 * s), (2, -2 * (s + r)), (4, r - s), (16, -2 * s)]);
    let terms = (0..=s)
        .map(|m| {
            let c = binomial(s as u64, m as u64) << m as usize;
            let inner = spec(&[(4, 2 * m), (16, 4 * m), (8, -6 * m)]);
            (c, m as usize, prefactor.times(&inner))
        })
        .collect();
    eta_combination(terms, order)
}

/// Shared double sum of the even/odd extractions; `odd` selects
/// `binom(s, 2m+1)` and the odd-part prefactor.
pub(crate) fn parity_double_sum(r: i64, s: i64, odd: bool, f8_exponent: i64, order: usize) -> IntSeries {
    let prefactor = if odd {
        spec(&[(4, 5 * s - 6), (8, f8_exponent), (2, -2 * (3 * s + 2 * r - 1)), (16, -2 * (s + r))])
    } else {
        spec(&[(4, 5 * s), (8, f8_exponent), (2, -2 * (3 * s + 2 * r)), (16, -2 * (s + r))])
    };
    let global = if odd { BigInt::from(2) } else { BigInt::one() };
    let mut terms = Vec::new();
    for m in 0..=s {
        let top = if odd { 2 * m + 1 } else { 2 * m };
        let cm = binomial(s as u64, top as u64) << (2 * m) as usize;
        if cm.is_zero() {
            continue;
        }
        let inner_m = spec(&[(2, 4 * m), (8, 8 * m), (4, -12 * m)]);
        for l in 0..=(s + r) {
            let cl = binomial((s + r) as u64, l as u64) << l as usize;
            let inner_l = spec(&[(4, 2 * l), (16, 4 * l), (8, -6 * l)]);
            terms.push((
                &global * &cm * cl,
                (m + l) as usize,
                prefactor.times(&inner_m).times(&inner_l),
            ));
        }
    }
    eta_combination(terms, order)
}

/// Exponent of `f8` in the odd-part prefactor, `3s + 5r + 4`.
pub(crate) fn odd_part_f8_exponent(r: i64, s: i64) -> i64 {
    3 * s + 5 * r + 4
}

/// Parity-split identities for `(r, s)` to the given order of the full series.
pub fn verify_parity_split(p: ColorParams, order: usize) -> ParitySplit {
    let (r, s) = (p.r() as i64, p.s() as i64);
    let gf = gf_overcolored(p, order, &Integers);
    let with_params = |label: &str, desc: &str| {
        VerificationReport::start(label, desc).param("r", r).param("s", s)
    };
    let full = compare(
        with_params("en", "generating function = binomial expansion"),
        &gf,
        &full_expansion(r, s, order),
    );
    let even_part = gf.extract_ap(0, 2);
    let even = compare(
        with_params("e2n", "even-index coefficients = double sum"),
        &even_part,
        &parity_double_sum(r, s, false, 3 * s + 5 * r, even_part.order()),
    );
    let odd_part = gf.extract_ap(1, 2);
    let odd = compare(
        with_params("e21n", "odd-index coefficients = double sum"),
        &odd_part,
        &parity_double_sum(r, s, true, odd_part_f8_exponent(r, s), odd_part.order()),
    );
    ParitySplit { full, even, odd }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_vanishes_above_top() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(40, 20), BigInt::from(137_846_528_820u64));
    }

    #[test]
    fn hirschhorn_small_orders() {
        assert!(verify_hirschhorn_dissection(1).is_verified());
        assert!(verify_hirschhorn_dissection(300).is_verified());
    }

    #[test]
    fn binomial_congruence_small_cases() {
        assert!(verify_binomial_congruence(1, 2, 1, 200).unwrap().is_verified());
        assert!(verify_binomial_congruence(2, 3, 1, 200).unwrap().is_verified());
        assert!(verify_binomial_congruence(1, 4, 1, 10).is_err());
        assert!(verify_binomial_congruence(1, 2, 0, 10).is_err());
    }

    #[test]
    fn parity_split_for_overpartitions() {
        let split = verify_parity_split(ColorParams::new(1, 1).unwrap(), 128);
        assert!(split.all_verified(), "{:?}", split);
    }

    #[test]
    fn odd_part_is_twice_something() {
        let odd = parity_double_sum(2, 3, true, odd_part_f8_exponent(2, 3), 60);
        assert!(odd.to_bigints().iter().all(|c| (c % 2u32).is_zero()));
    }
}
