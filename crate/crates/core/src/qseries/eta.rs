use crate::ring::{CoefficientRing, Integers};
use crate::series::{IntSeries, TruncatedSeries};

use super::EtaQuotientSpec;

/// Nonzero terms of `f_m - 1` below `order`, as `(exponent, is_negative)`.
///
/// From the pentagonal number theorem, `f_1 = sum_k (-1)^k q^(k(3k-1)/2)`
/// over all integers `k`; scaling by `m` gives `f_m`.
pub fn pentagonal_terms(m: usize, order: usize) -> Vec<(usize, bool)> {
    assert!(m >= 1, "Euler product scale must be positive");
    let mut terms = Vec::new();
    for k in 1usize.. {
        let negative = k % 2 == 1;
        let lo = k * (3 * k - 1) / 2 * m;
        if lo >= order {
            break;
        }
        terms.push((lo, negative));
        let hi = k * (3 * k + 1) / 2 * m;
        if hi < order {
            terms.push((hi, negative));
        }
    }
    terms
}

/// `f_m = (q^m; q^m)_inf` to the given order.
pub fn euler_f(m: usize, order: usize) -> IntSeries {
    assert!(order >= 1, "series order must be positive");
    let mut coeffs = vec![0i64; order];
    coeffs[0] = 1;
    for (e, negative) in pentagonal_terms(m, order) {
        coeffs[e] = if negative { -1 } else { 1 };
    }
    IntSeries::from_i64s(Integers, &coeffs, order)
}

/// `prod_{j >= 1, mj < order} (1 - q^(mj))` expanded factor by factor.
///
/// Quadratic in the order; kept as an independent check on [`euler_f`].
pub fn euler_f_product(m: usize, order: usize) -> IntSeries {
    assert!(m >= 1 && order >= 1);
    let mut c = vec![0i64; order];
    c[0] = 1;
    let mut d = m;
    while d < order {
        for n in (d..order).rev() {
            c[n] -= c[n - d];
        }
        d += m;
    }
    IntSeries::from_i64s(Integers, &c, order)
}

fn multiply_by_f<R: CoefficientRing>(ring: &R, c: &mut [R::Elem], terms: &[(usize, bool)]) {
    for n in (1..c.len()).rev() {
        let mut acc = c[n].clone();
        for &(e, negative) in terms {
            if e > n {
                break;
            }
            if negative {
                ring.sub_assign(&mut acc, &c[n - e]);
            } else {
                ring.add_assign(&mut acc, &c[n - e]);
            }
        }
        c[n] = acc;
    }
}

fn divide_by_f<R: CoefficientRing>(ring: &R, c: &mut [R::Elem], terms: &[(usize, bool)]) {
    for n in 1..c.len() {
        let mut acc = c[n].clone();
        for &(e, negative) in terms {
            if e > n {
                break;
            }
            // c_n = b_n - sum_{e} sign(e) c_{n-e}
            if negative {
                ring.add_assign(&mut acc, &c[n - e]);
            } else {
                ring.sub_assign(&mut acc, &c[n - e]);
            }
        }
        c[n] = acc;
    }
}

/// Expand `prod f_m^e` to `order` in `ring`.
///
/// Each factor `f_m` has `O(sqrt(order/m))` nonzero terms with coefficients
/// `+-1`, so every multiplication or division by a single `f_m` is a sparse
/// pass using only additions in the ring. Negative exponents are always
/// legal since `f_m` has constant term 1.
pub fn eta_quotient<R: CoefficientRing>(
    spec: &EtaQuotientSpec,
    order: usize,
    ring: &R,
) -> TruncatedSeries<R> {
    assert!(order >= 1, "series order must be positive");
    let mut c = vec![ring.zero(); order];
    c[0] = ring.one();
    for (m, e) in spec.normalized() {
        let terms = pentagonal_terms(m as usize, order);
        if terms.is_empty() {
            continue;
        }
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                multiply_by_f(ring, &mut c, &terms);
            } else {
                divide_by_f(ring, &mut c, &terms);
            }
        }
    }
    TruncatedSeries::new(ring.clone(), c).expect("order is positive")
}

/// The same quotient through dense series arithmetic: [`euler_f`], `pow`
/// and `mul`. Slower; used to cross-check [`eta_quotient`].
pub fn eta_quotient_dense<R: CoefficientRing>(
    spec: &EtaQuotientSpec,
    order: usize,
    ring: &R,
) -> TruncatedSeries<R> {
    let mut acc = TruncatedSeries::one(ring.clone(), order);
    for (m, e) in spec.normalized() {
        let f = euler_f(m as usize, order).map_into(ring.clone());
        let p = f.pow(e).expect("Euler products have unit constant term");
        acc = acc.mul(&p).expect("same ring");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ResidueRing;

    #[test]
    fn euler_f1_first_terms() {
        assert_eq!(
            euler_f(1, 8).to_bigints(),
            euler_f_product(1, 8).to_bigints()
        );
        let c: Vec<i64> = euler_f(1, 8)
            .to_bigints()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(c, vec![1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn large_scale_is_constant() {
        assert_eq!(euler_f(9, 9), IntSeries::one(Integers, 9));
        assert_eq!(euler_f(20, 5), IntSeries::one(Integers, 5));
    }

    #[test]
    fn scaled_euler_product() {
        assert_eq!(euler_f(2, 12), euler_f(1, 12).scale_variable(2));
    }

    #[test]
    fn overpartitions_of_small_n() {
        let spec = EtaQuotientSpec::new([(2, 1), (1, -2)]).unwrap();
        let s = eta_quotient(&spec, 4, &Integers);
        assert_eq!(s, IntSeries::from_i64s(Integers, &[1, 2, 4, 8], 4));
    }

    #[test]
    fn trivial_quotients_are_one() {
        let one = IntSeries::one(Integers, 10);
        assert_eq!(eta_quotient(&EtaQuotientSpec::one(), 10, &Integers), one);
        let cancel = EtaQuotientSpec::new([(1, 1), (1, -1)]).unwrap();
        assert_eq!(eta_quotient(&cancel, 10, &Integers), one);
    }

    #[test]
    fn sparse_and_dense_routes_agree() {
        let spec = EtaQuotientSpec::new([(2, 7), (1, -4), (4, -3), (3, 2)]).unwrap();
        assert_eq!(
            eta_quotient(&spec, 120, &Integers),
            eta_quotient_dense(&spec, 120, &Integers)
        );
        let m = ResidueRing::new(16).unwrap();
        assert_eq!(eta_quotient(&spec, 120, &m), eta_quotient_dense(&spec, 120, &m));
    }
}
