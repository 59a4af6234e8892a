use crate::ring::CoefficientRing;
use crate::series::TruncatedSeries;

use super::{eta_quotient, phi, ColorParams, EtaQuotientSpec};

/// Generating function of overlined partitions with `r` colors for even parts
/// and `s` colors for odd parts: `f2^(3s-2r) / (f1^(2s) f4^(s-r))`.
pub fn gf_overcolored<R: CoefficientRing>(p: ColorParams, order: usize, ring: &R) -> TruncatedSeries<R> {
    eta_quotient(&p.overcolored_spec(), order, ring)
}

/// Same color scheme without overlining: `f2^(s-r) / f1^s`.
pub fn gf_colored<R: CoefficientRing>(p: ColorParams, order: usize, ring: &R) -> TruncatedSeries<R> {
    eta_quotient(&p.colored_spec(), order, ring)
}

/// Even parts in `r` colors, overlined: `f4^(r-1) / (f1^2 f2^(2r-3))`.
pub fn gf_even_over<R: CoefficientRing>(r: u64, order: usize, ring: &R) -> TruncatedSeries<R> {
    assert!(r >= 1, "need at least one color");
    let r = r as i64;
    let spec = EtaQuotientSpec::new([(4, r - 1), (1, -2), (2, 3 - 2 * r)]).expect("positive scales");
    eta_quotient(&spec, order, ring)
}

/// Odd parts in `s` colors, overlined: `f2^(3s-2) / (f1^(2s) f4^(s-1))`.
pub fn gf_odd_over<R: CoefficientRing>(s: u64, order: usize, ring: &R) -> TruncatedSeries<R> {
    assert!(s >= 1, "need at least one color");
    let s = s as i64;
    let spec = EtaQuotientSpec::new([(2, 3 * s - 2), (1, -2 * s), (4, 1 - s)]).expect("positive scales");
    eta_quotient(&spec, order, ring)
}

/// `phi(q)^s * prod_{i>=1} phi(q^(2^i))^((r+s) 2^(i-1))` truncated to `order`.
///
/// Factors with `2^i >= order` equal 1 to this order and are skipped. Each
/// remaining power is taken on the compressed series in `q^(2^i)` and then
/// inflated, so the work shrinks geometrically with `i`.
pub fn cai_product<R: CoefficientRing>(p: ColorParams, order: usize, ring: &R) -> TruncatedSeries<R> {
    assert!(order >= 1, "series order must be positive");
    let mut acc = phi(ring, 1, order)
        .pow(p.s() as i64)
        .expect("positive exponent");
    let rs = p.r() + p.s();
    let mut i = 1u32;
    while let Some(t) = 1usize.checked_shl(i).filter(|&t| t < order) {
        let exponent = rs << (i - 1);
        let compressed_order = order.div_ceil(t);
        let factor = phi(ring, 1, compressed_order)
            .pow(exponent as i64)
            .expect("positive exponent")
            .inflate(t, order);
        acc = acc.mul(&factor).expect("same ring");
        i += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, ResidueRing};
    use crate::series::IntSeries;

    fn cp(r: i64, s: i64) -> ColorParams {
        ColorParams::new(r, s).unwrap()
    }

    #[test]
    fn overpartitions() {
        let s = gf_overcolored(cp(1, 1), 4, &Integers);
        assert_eq!(s, IntSeries::from_i64s(Integers, &[1, 2, 4, 8], 4));
    }

    #[test]
    fn colored_with_one_color_each_is_partition_function() {
        let s = gf_colored(cp(1, 1), 6, &Integers);
        assert_eq!(s, IntSeries::from_i64s(Integers, &[1, 1, 2, 3, 5, 7], 6));
    }

    #[test]
    fn single_parity_functions_are_specializations() {
        for k in 1..=5u64 {
            assert_eq!(
                gf_even_over(k, 80, &Integers),
                gf_overcolored(cp(k as i64, 1), 80, &Integers)
            );
            assert_eq!(
                gf_odd_over(k, 80, &Integers),
                gf_overcolored(cp(1, k as i64), 80, &Integers)
            );
        }
        assert_eq!(gf_even_over(1, 50, &Integers), gf_odd_over(1, 50, &Integers));
    }

    #[test]
    fn cai_product_at_order_two() {
        for s in 1..=4 {
            let p = cai_product(cp(3, s), 2, &Integers);
            assert_eq!(p, IntSeries::from_i64s(Integers, &[1, 2 * s], 2));
        }
    }

    #[test]
    fn cai_product_matches_eta_route() {
        assert_eq!(cai_product(cp(1, 1), 64, &Integers), gf_overcolored(cp(1, 1), 64, &Integers));
        let m8 = ResidueRing::new(8).unwrap();
        assert_eq!(cai_product(cp(3, 2), 100, &m8), gf_overcolored(cp(3, 2), 100, &m8));
    }
}
