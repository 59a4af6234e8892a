use num_bigint::BigInt;
use overcolored::lab::{classify_n, legendre, mod4_predicted, mod_inverse, non_residues};
use overcolored::oracle::count_overcolored;
use overcolored::qseries::{eta_quotient, eta_quotient_dense, gf_overcolored};
use overcolored::{CoefficientRing, ColorParams, EtaQuotientSpec, IntSeries, Integers, ModSeries, ResidueRing};
use proptest::prelude::*;

fn int_series(max_len: usize) -> impl Strategy<Value = IntSeries> {
    prop::collection::vec(-50i64..50, 1..max_len).prop_map(|v| {
        let n = v.len();
        IntSeries::from_i64s(Integers, &v, n)
    })
}

fn unit_series(max_len: usize) -> impl Strategy<Value = IntSeries> {
    (prop::sample::select(vec![1i64, -1]), prop::collection::vec(-20i64..20, 0..max_len)).prop_map(|(c0, rest)| {
        let mut v = vec![c0];
        v.extend(rest);
        let n = v.len();
        IntSeries::from_i64s(Integers, &v, n)
    })
}

fn eta_spec() -> impl Strategy<Value = EtaQuotientSpec> {
    prop::collection::vec((1u64..=8, -12i64..=12), 0..5).prop_map(|f| EtaQuotientSpec::new(f).unwrap())
}

fn modulus() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 16, 27, 256, 1 << 20, u32::MAX as u64])
}

proptest! {
    #[test]
    fn residue_ring_axioms(m in modulus(), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let r = ResidueRing::new(m).unwrap();
        let (a, b, c) = (r.from_i64(a), r.from_i64(b), r.from_i64(c));
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
        prop_assert_eq!(r.sub(&a, &b), r.add(&a, &r.neg(&b)));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in int_series(20), b in int_series(20), c in int_series(20)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(ab.order(), a.order().min(b.order()));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series(40)) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), IntSeries::one(Integers, a.order()));
    }

    #[test]
    fn pow_adds_exponents(a in unit_series(15), e1 in -4i64..4, e2 in -4i64..4) {
        let lhs = a.pow(e1).unwrap().mul(&a.pow(e2).unwrap()).unwrap();
        prop_assert_eq!(lhs, a.pow(e1 + e2).unwrap());
    }

    #[test]
    fn reduction_is_a_homomorphism(a in int_series(30), b in int_series(30), m in modulus()) {
        let lhs = a.mul(&b).unwrap().reduce_mod(m).unwrap();
        let rhs = a.reduce_mod(m).unwrap().mul(&b.reduce_mod(m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_quotient_commutes_with_reduction(spec in eta_spec(), m in modulus(), order in 1usize..200) {
        let ring = ResidueRing::new(m).unwrap();
        let exact = eta_quotient(&spec, order, &Integers);
        prop_assert_eq!(eta_quotient(&spec, order, &ring), exact.reduce_mod(m).unwrap());
        prop_assert_eq!(eta_quotient_dense(&spec, order, &Integers), exact);
    }

    #[test]
    fn eta_quotients_multiply(a in eta_spec(), b in eta_spec(), order in 1usize..150) {
        let prod = eta_quotient(&a, order, &Integers).mul(&eta_quotient(&b, order, &Integers)).unwrap();
        prop_assert_eq!(prod, eta_quotient(&a.times(&b), order, &Integers));
    }

    #[test]
    fn dissection_interleaves(a in int_series(60), step in 1usize..6) {
        let parts: Vec<IntSeries> = (0..step.min(a.order())).map(|r| a.extract_ap(r, step)).collect();
        for k in 0..a.order() {
            prop_assert_eq!(a.coeff(k), parts[k % step].coeff(k / step));
        }
    }

    #[test]
    fn substitution_is_multiplicative(a in int_series(25), b in int_series(25), t in 1usize..5) {
        let lhs = a.mul(&b).unwrap().scale_variable(t);
        let rhs = a.scale_variable(t).mul(&b.scale_variable(t)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn legendre_is_multiplicative(a in -500i64..500, b in -500i64..500,
                                  p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 101])) {
        let ab = legendre(a * b, p).unwrap();
        prop_assert_eq!(ab, legendre(a, p).unwrap() * legendre(b, p).unwrap());
    }

    #[test]
    fn inverses_invert(a in 1i64..10_000, m in prop::sample::select(vec![3u64, 7, 64, 101, 1000])) {
        if let Ok(inv) = mod_inverse(a, m) {
            prop_assert_eq!((a as u64 % m) * inv % m, 1);
        }
    }

    #[test]
    fn classification_invariants(n in 1u64..100_000) {
        let c = classify_n(n);
        prop_assert_eq!(c.is_twice_square(), c.is_twice_even_square() || c.is_twice_odd_square());
        if let Some(k) = c.square { prop_assert_eq!(k * k, n); }
        if let Some(k) = c.twice_square { prop_assert_eq!(2 * k * k, n); }
        if let Some(k) = c.four_times_square { prop_assert_eq!(4 * k * k, n); }
        // a square and twice a square at once would make sqrt(2) rational
        prop_assert!(!(c.is_square() && c.is_twice_square()));
        let brute = (1..).take_while(|l| 2 * l * l < n)
            .filter(|l| overcolored::arith::exact_sqrt(n - 2 * l * l).is_some_and(|k| k >= 1))
            .count() as u64;
        prop_assert_eq!(c.rep_count, brute);
    }

    #[test]
    fn counts_grow_with_colors(r in 1i64..4, s in 1i64..4) {
        let base = count_overcolored(ColorParams::new(r, s).unwrap(), 40);
        let more_r = count_overcolored(ColorParams::new(r + 1, s).unwrap(), 40);
        let more_s = count_overcolored(ColorParams::new(r, s + 1).unwrap(), 40);
        for n in 0..40 {
            prop_assert!(more_r[n] >= base[n]);
            prop_assert!(more_s[n] >= base[n]);
        }
        prop_assert!((1..40).all(|n| &base[n] % 2u32 == BigInt::from(0)));
    }

    #[test]
    fn mod4_prediction_matches(r in 1i64..10, s in 1i64..10) {
        let p = ColorParams::new(r, s).unwrap();
        let ring = ResidueRing::new(4).unwrap();
        let actual: ModSeries = gf_overcolored(p, 300, &ring);
        prop_assert_eq!(actual, mod4_predicted(p, 300));
    }
}

#[test]
fn non_residue_counts() {
    for p in [3u64, 5, 7, 11, 13] {
        let qnr = non_residues(p).unwrap();
        assert_eq!(qnr.len() as u64, (p - 1) / 2);
        assert!(qnr.iter().all(|&a| legendre(a as i64, p).unwrap() == -1));
    }
}
