//! Acceptance criteria, one pass/fail line each.
//!
//! Every criterion runs even if an earlier one fails; the test fails at the
//! end if any did.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use overcolored::lab::{
    conjecture_scan, das_specialization_suite, identities_suite, lemma22_instances, lemma22_suite,
    mod4_profile, mod8_profile, theorem5_suite, theorem6_suite, theorem7_suite, theorem8_suite,
    IdentityConfig, Thm5Grid, Thm6Grid,
};
use overcolored::oracle::{count_overcolored, enumerate_small};
use overcolored::qseries::{eta_quotient, gf_overcolored};
use overcolored::report::{Expectation, Status};
use overcolored::{ColorParams, EtaQuotientSpec, Integers, ResidueRing, VerificationReport};
use rayon::prelude::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn cp(r: i64, s: i64) -> ColorParams {
    ColorParams::new(r, s).unwrap()
}

/// Every report meets its expectation; detail names the first few that don't.
fn all_expected(reports: &[VerificationReport]) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.meets_expectation())
        .take(3)
        .map(VerificationReport::summary_line)
        .collect();
    let checked = reports.len();
    if bad.is_empty() {
        outcome(true, format!("{checked} claims as expected"))
    } else {
        outcome(false, format!("{checked} claims; unexpected: {}", bad.join(" | ")))
    }
}

fn labels_present(reports: &[VerificationReport], labels: &[&str]) -> Result<(), String> {
    let missing: Vec<&str> = labels
        .iter()
        .copied()
        .filter(|l| !reports.iter().any(|r| r.label == *l))
        .collect();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(format!("missing labels {missing:?}"))
    }
}

fn with_labels(reports: &[VerificationReport], labels: &[&str]) -> Outcome {
    match labels_present(reports, labels) {
        Ok(()) => all_expected(reports),
        Err(e) => outcome(false, e),
    }
}

fn criterion_1() -> Outcome {
    let series = gf_overcolored(cp(1, 1), 4, &Integers);
    let count = series.coeff(3);
    let listed = enumerate_small(cp(1, 1), 3).unwrap().len();
    outcome(
        *count == BigInt::from(8) && listed == 8,
        format!("abar_{{1,1}}(3) = {count}, {listed} objects listed"),
    )
}

fn criterion_2() -> Outcome {
    let bad: Vec<(u64, u64)> = (1..=4i64)
        .flat_map(|r| (1..=4i64).map(move |s| (r, s)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&(r, s)| {
            let p = cp(r, s);
            count_overcolored(p, 301) != gf_overcolored(p, 301, &Integers).to_bigints()
        })
        .map(|(r, s)| (r as u64, s as u64))
        .collect();
    outcome(bad.is_empty(), format!("16 parameter pairs, n <= 300, mismatching pairs {bad:?}"))
}

fn criterion_3() -> Outcome {
    let reports = identities_suite(IdentityConfig::default());
    let core: Vec<VerificationReport> = reports
        .into_iter()
        .filter(|r| ["2.1", "phi", "phim", "en", "e2n", "e21n", "3.1"].contains(&r.label.as_str()))
        .collect();
    let theta_count = core.iter().filter(|r| r.label == "3.1").count();
    if theta_count != 36 {
        return outcome(false, format!("expected 36 theta-product checks, got {theta_count}"));
    }
    let strict = core.iter().all(|r| r.expectation == Expectation::Holds);
    let o = with_labels(&core, &["2.1", "phi", "phim", "en", "e2n", "e21n", "3.1"]);
    outcome(o.pass && strict, o.detail)
}

fn criterion_4() -> Outcome {
    let reports = identities_suite(IdentityConfig { samples: 0, ..IdentityConfig::default() });
    let binomial: Vec<VerificationReport> = reports.into_iter().filter(|r| r.label == "binomial").collect();
    if binomial.len() != 18 || binomial.iter().any(|r| r.order != 1000) {
        return outcome(false, format!("expected 18 checks at order 1000, got {}", binomial.len()));
    }
    all_expected(&binomial)
}

fn profile_grid(f: impl Fn(ColorParams) -> (VerificationReport, usize) + Sync + Send) -> (Vec<VerificationReport>, usize) {
    let results: Vec<(VerificationReport, usize)> = (1..=6i64)
        .flat_map(|r| (1..=6i64).map(move |s| cp(r, s)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(f)
        .collect();
    let multi = results.iter().map(|x| x.1).sum();
    (results.into_iter().map(|x| x.0).collect(), multi)
}

fn criterion_5() -> Outcome {
    let (reports, _) = profile_grid(|p| (mod4_profile(p, 2001).report, 0));
    all_expected(&reports)
}

fn criterion_6() -> Outcome {
    let (reports, multi) = profile_grid(|p| {
        let o = mod8_profile(p, 2001);
        (o.report, o.multi_rep_points)
    });
    let o = all_expected(&reports);
    outcome(o.pass && multi > 0, format!("{}; {multi} multi-representation points", o.detail))
}

fn criterion_7() -> Outcome {
    let reports = theorem5_suite(Thm5Grid { rs_max: 6, ij_max: 2 }, 1000, true);
    let control = reports
        .iter()
        .find(|r| r.label == "1.52-control")
        .is_some_and(|r| r.status == Status::Violated);
    let o = with_labels(
        &reports,
        &["1.15", "1.52", "1.53", "e3n1m4", "e3n2m4", "e9n3m4", "e9n6m4", "e9n3m8", "e9n6m8"],
    );
    outcome(o.pass && control, format!("{}; control violated: {control}", o.detail))
}

fn criterion_8() -> Outcome {
    let reports = theorem6_suite(Thm6Grid { k_max: 3, i_max: 2, j_max: 2, r_max: 6 }, 500);
    with_labels(&reports, &["1.61", "1.62", "1.63", "1.64", "1.65", "1.66", "1.68", "1.69"])
}

fn criterion_9() -> Outcome {
    let mut reports = theorem7_suite(2, 500);
    reports.extend(theorem8_suite(&[3, 5, 7, 11], 2, 500).unwrap());
    with_labels(&reports, &["1.20", "1.21", "1.22", "1.23", "1.24"])
}

fn criterion_10() -> Outcome {
    let reports = das_specialization_suite(6, 500);
    with_labels(&reports, &["1.1", "1.2", "1-specialization", "2-specialization"])
}

fn criterion_11() -> Outcome {
    let instances = lemma22_instances().len();
    let reports = lemma22_suite(200);
    let vacuous = reports.iter().filter(|r| r.note.is_some()).count();
    let o = all_expected(&reports);
    outcome(
        o.pass && instances == 10 && vacuous == 0,
        format!("{}; {instances} instances, {vacuous} with failing premise", o.detail),
    )
}

fn criterion_12() -> Outcome {
    let reports = conjecture_scan(3, 2, 2, 1000);
    let found: usize = reports.iter().map(|r| r.counterexamples.len()).sum();
    outcome(
        reports.len() == 81 && found == 0,
        format!("{} claims, {found} counterexamples", reports.len()),
    )
}

fn criterion_13() -> Outcome {
    let spec = EtaQuotientSpec::new([(1, -12), (2, 12), (3, -7), (4, 9), (6, -12), (8, 5)]).unwrap();
    let ring = ResidueRing::new(256).unwrap();
    let start = Instant::now();
    let s = eta_quotient(&spec, 4096, &ring);
    let elapsed = start.elapsed();
    outcome(
        s.order() == 4096 && elapsed < Duration::from_secs(5),
        format!("order 4096 mod 256 in {elapsed:?}"),
    )
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("overpartitions of 3", criterion_1),
        ("oracle equivalence", criterion_2),
        ("identity suite", criterion_3),
        ("binomial congruences", criterion_4),
        ("mod 4 profile", criterion_5),
        ("mod 8 profile", criterion_6),
        ("mod 2/4/8 families", criterion_7),
        ("powers-of-two families", criterion_8),
        ("modulus 3 and p families", criterion_9),
        ("single-parity specializations", criterion_10),
        ("transfer principle", criterion_11),
        ("conjecture scan", criterion_12),
        ("eta-quotient performance", criterion_13),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        println!(
            "{} criterion {:>2} {name}: {} [{:.1?}]",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            start.elapsed()
        );
        if !o.pass {
            failed.push(i + 1);
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
