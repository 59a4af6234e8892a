//! Residues of `abar_{r,s}(n)` modulo 4 and 8.
//!
//! Each profile compares the generating function against an additive
//! prediction built from theta-type sums, and also checks the case table
//! (square, twice a square, ...) on the indices where it is unambiguous.

use crate::qseries::{gf_even_over, gf_overcolored, ColorParams};
use crate::report::{Counterexample, NRange, ReportBuilder, VerificationReport};
use crate::ring::ResidueRing;
use crate::series::ModSeries;

use super::classify::{classify_n, NSquareClassification};

/// Profile report plus bookkeeping about the case table.
#[derive(Debug, Clone)]
pub struct ProfileOutcome {
    pub report: VerificationReport,
    /// Indices where the case table was checked.
    pub table_points: usize,
    /// Checked indices with at least two representations `k^2 + 2l^2`.
    pub multi_rep_points: usize,
    /// Indices where the `k^2 + 2l^2` row read without multiplicity differs
    /// from the actual residue.
    pub literal_table_disagreements: Vec<u64>,
}

/// `sum_{n>=1} q^(t n^2)` times `c`, modulo `m`.
fn square_sum(ring: &ResidueRing, t: u64, c: i64, order: usize) -> ModSeries {
    let mut v = vec![0i64; order];
    for n in 1u64.. {
        let e = (t * n * n) as usize;
        if e >= order {
            break;
        }
        v[e] = c;
    }
    ModSeries::from_i64s(*ring, &v, order)
}

/// `sum_{n>=1} q^(t (2n - 1)^2)` times `c`.
fn odd_square_sum(ring: &ResidueRing, t: u64, c: i64, order: usize) -> ModSeries {
    let mut v = vec![0i64; order];
    for n in (1u64..).step_by(2) {
        let e = (t * n * n) as usize;
        if e >= order {
            break;
        }
        v[e] = c;
    }
    ModSeries::from_i64s(*ring, &v, order)
}

/// `1 + 2s sum q^(n^2) + 2(r+s) sum q^(2n^2)` modulo 4.
pub fn mod4_predicted(p: ColorParams, order: usize) -> ModSeries {
    let ring = ResidueRing::new(4).unwrap();
    let (r, s) = (p.r() as i64, p.s() as i64);
    ModSeries::one(ring, order)
        .add(&square_sum(&ring, 1, 2 * s, order))
        .and_then(|a| a.add(&square_sum(&ring, 2, 2 * (r + s), order)))
        .expect("same ring")
}

/// The mod-8 additive prediction. The last term
/// `4s(r+s) sum_{m,n>=1} q^(n^2 + 2m^2)` is a genuine double sum, so every
/// representation contributes.
pub fn mod8_predicted(p: ColorParams, order: usize) -> ModSeries {
    let ring = ResidueRing::new(8).unwrap();
    let (r, s) = (p.r() as i64, p.s() as i64);
    let squares = square_sum(&ring, 1, 1, order);
    let twice_squares = square_sum(&ring, 2, 1, order);
    let double_sum = squares
        .mul(&twice_squares)
        .expect("same ring")
        .scalar_mul(&ring.reduce_i64(4 * s * (r + s)));
    [
        square_sum(&ring, 1, 2 * s, order),
        square_sum(&ring, 8, 2 * (3 * r + 2 * s + s * s), order),
        odd_square_sum(&ring, 2, 2 * (r + s * s), order),
        square_sum(&ring, 4, 2 * (r + s) * (r + s + 1), order),
        double_sum,
    ]
    .iter()
    .try_fold(ModSeries::one(ring, order), |acc, t| acc.add(t))
    .expect("same ring")
}

/// Three-row table modulo 4 for `n >= 1`.
pub fn mod4_table(p: ColorParams, c: &NSquareClassification) -> u64 {
    let (r, s) = (p.r(), p.s());
    if c.is_square() {
        2 * s % 4
    } else if c.is_twice_square() {
        2 * (r + s) % 4
    } else {
        0
    }
}

/// Mod-8 table value when exactly one row applies; `k^2 + 2l^2` counts
/// each representation.
pub fn mod8_table(p: ColorParams, c: &NSquareClassification) -> Option<u64> {
    let (r, s) = (p.r(), p.s());
    match c.mod8_case_count() {
        0 => Some(0),
        1 => Some(
            if c.is_square() {
                2 * s
            } else if c.is_twice_even_square() {
                2 * (3 * r + 2 * s + s * s)
            } else if c.is_twice_odd_square() {
                2 * (r + s * s)
            } else {
                c.rep_count * 4 * s * (r + s)
            } % 8,
        ),
        _ => None,
    }
}

/// Residue modulo 4 of `abar*_r(n)` for `n >= 1` (even parts colored, one
/// color for odd parts).
pub fn das_mod4_table(r: u64, c: &NSquareClassification) -> u64 {
    if c.is_square() {
        2
    } else if c.is_twice_square() {
        2 * (r + 1) % 4
    } else {
        0
    }
}

/// Residue modulo 8 of `abar*_r(n)` where exactly one row applies.
pub fn das_mod8_table(r: u64, c: &NSquareClassification) -> Option<u64> {
    match c.mod8_case_count() {
        0 => Some(0),
        1 => Some(
            if c.is_square() {
                2
            } else if c.is_twice_even_square() {
                6 * (r + 1)
            } else if c.is_twice_odd_square() {
                2 * (r + 1)
            } else {
                c.rep_count * 4 * (r + 1)
            } % 8,
        ),
        _ => None,
    }
}

fn profile(
    builder: ReportBuilder,
    actual: &ModSeries,
    predicted: &ModSeries,
    table: impl Fn(&NSquareClassification) -> Option<u64>,
    literal_rep_row: Option<u64>,
) -> ProfileOutcome {
    let order = actual.order().min(predicted.order());
    let mut cex = Vec::new();
    let mut table_points = 0;
    let mut multi_rep_points = 0;
    let mut literal = Vec::new();
    for n in 0..order {
        let a = *actual.coeff(n);
        let series_ok = a == *predicted.coeff(n);
        let mut table_ok = true;
        if n >= 1 {
            let c = classify_n(n as u64);
            if let Some(t) = table(&c) {
                table_points += 1;
                table_ok = t == a;
                if c.rep_count >= 2 {
                    multi_rep_points += 1;
                }
                if let Some(row) = literal_rep_row {
                    if c.rep_count > 0 && c.mod8_case_count() == 1 && row != a {
                        literal.push(n as u64);
                    }
                }
            }
        }
        if !series_ok || !table_ok {
            cex.push(Counterexample {
                n: n as u64,
                value: format!(
                    "{a} (predicted {}, table {})",
                    predicted.coeff(n),
                    if table_ok { "ok" } else { "mismatch" }
                ),
            });
        }
    }
    let mut builder = builder;
    if !literal.is_empty() {
        builder = builder.note(format!(
            "{} indices with an even number of k^2+2l^2 representations differ from the unweighted table row",
            literal.len()
        ));
    }
    ProfileOutcome {
        report: builder.finish(NRange { from: 0, to: order as u64 - 1 }, order, cex),
        table_points,
        multi_rep_points,
        literal_table_disagreements: literal,
    }
}

fn start(label: &str, desc: &str, p: ColorParams, m: u64) -> ReportBuilder {
    VerificationReport::start(label, desc)
        .param("r", p.r() as i64)
        .param("s", p.s() as i64)
        .modulus(m)
}

/// `abar_{r,s}` modulo 4 against its additive prediction and case table.
pub fn mod4_profile(p: ColorParams, order: usize) -> ProfileOutcome {
    let ring = ResidueRing::new(4).unwrap();
    profile(
        start("1.3", "abar mod 4 = 1 + 2s sum q^(n^2) + 2(r+s) sum q^(2n^2)", p, 4),
        &gf_overcolored(p, order, &ring),
        &mod4_predicted(p, order),
        |c| Some(mod4_table(p, c)),
        None,
    )
}

/// `abar_{r,s}` modulo 8 against its additive prediction and case table.
pub fn mod8_profile(p: ColorParams, order: usize) -> ProfileOutcome {
    let ring = ResidueRing::new(8).unwrap();
    let literal_row = 4 * p.s() * (p.r() + p.s()) % 8;
    profile(
        start("1.4", "abar mod 8 = additive theta-sum prediction", p, 8),
        &gf_overcolored(p, order, &ring),
        &mod8_predicted(p, order),
        |c| mod8_table(p, c),
        Some(literal_row),
    )
}

/// The even-parts-colored function `abar*_r` modulo 4 and 8 against the
/// single-parity tables, built from its own generating function.
pub fn das_profiles(r: u64, order: usize) -> (ProfileOutcome, ProfileOutcome) {
    let p = ColorParams::new(r as i64, 1).expect("r >= 1");
    let m4 = ResidueRing::new(4).unwrap();
    let m8 = ResidueRing::new(8).unwrap();
    let four = profile(
        start("1.1", "abar*_r mod 4 table", p, 4),
        &gf_even_over(r, order, &m4),
        &mod4_predicted(p, order),
        |c| Some(das_mod4_table(r, c)),
        None,
    );
    let eight = profile(
        start("1.2", "abar*_r mod 8 table", p, 8),
        &gf_even_over(r, order, &m8),
        &mod8_predicted(p, order),
        |c| das_mod8_table(r, c),
        Some(4 * (r + 1) % 8),
    );
    (four, eight)
}
