use crate::ring::CoefficientRing;
use crate::series::TruncatedSeries;

use super::{eta_quotient, EtaQuotientSpec};

fn theta_sum<R: CoefficientRing>(ring: &R, t: usize, order: usize, alternating: bool) -> TruncatedSeries<R> {
    assert!(t >= 1, "theta argument q^t needs t >= 1");
    let mut c = vec![0i64; order];
    c[0] = 1;
    for n in 1usize.. {
        let e = t * n * n;
        if e >= order {
            break;
        }
        c[e] = if alternating && n % 2 == 1 { -2 } else { 2 };
    }
    TruncatedSeries::from_i64s(ring.clone(), &c, order)
}

/// `phi(q^t) = 1 + 2 sum_{n>=1} q^(t n^2)`, built from the theta sum.
pub fn phi<R: CoefficientRing>(ring: &R, t: usize, order: usize) -> TruncatedSeries<R> {
    theta_sum(ring, t, order, false)
}

/// `phi(-q^t) = 1 + 2 sum_{n>=1} (-1)^n q^(t n^2)`.
pub fn phi_neg<R: CoefficientRing>(ring: &R, t: usize, order: usize) -> TruncatedSeries<R> {
    theta_sum(ring, t, order, true)
}

/// `phi(q^t)` as the eta-quotient `f_{2t}^5 / (f_t^2 f_{4t}^2)`.
pub fn phi_eta<R: CoefficientRing>(ring: &R, t: usize, order: usize) -> TruncatedSeries<R> {
    let t = t as u64;
    let spec = EtaQuotientSpec::new([(2 * t, 5), (t, -2), (4 * t, -2)]).expect("positive scales");
    eta_quotient(&spec, order, ring)
}

/// `phi(-q^t)` as the eta-quotient `f_t^2 / f_{2t}`.
pub fn phi_neg_eta<R: CoefficientRing>(ring: &R, t: usize, order: usize) -> TruncatedSeries<R> {
    let t = t as u64;
    let spec = EtaQuotientSpec::new([(t, 2), (2 * t, -1)]).expect("positive scales");
    eta_quotient(&spec, order, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use crate::series::IntSeries;

    #[test]
    fn phi_first_terms() {
        assert_eq!(phi(&Integers, 1, 6), IntSeries::from_i64s(Integers, &[1, 2, 0, 0, 2, 0], 6));
        assert_eq!(phi(&Integers, 7, 7), IntSeries::one(Integers, 7));
        assert_eq!(phi(&Integers, 2, 10), phi(&Integers, 1, 10).scale_variable(2));
    }

    #[test]
    fn phi_neg_first_terms() {
        assert_eq!(
            phi_neg(&Integers, 1, 6),
            IntSeries::from_i64s(Integers, &[1, -2, 0, 0, 2, 0], 6)
        );
        let sum = phi_neg(&Integers, 1, 30).add(&phi(&Integers, 1, 30)).unwrap();
        assert_eq!(sum.coeff(1), &0.into());
        assert_eq!(sum.coeff(4), &4.into());
    }

    #[test]
    fn dual_builds_agree_at_small_order() {
        for t in 1..=4 {
            assert_eq!(phi(&Integers, t, 200), phi_eta(&Integers, t, 200));
            assert_eq!(phi_neg(&Integers, t, 200), phi_neg_eta(&Integers, t, 200));
        }
    }
}
