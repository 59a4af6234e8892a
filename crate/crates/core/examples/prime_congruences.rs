//! Modulus-3 and modulus-p families, the latter on residues picked out by the
//! Legendre symbol.

use overcolored::lab::{half_non_residues, non_residues, theorem7_suite, theorem8_suite};
use overcolored::report::Expectation;

fn main() {
    for p in [3u64, 5, 7, 11] {
        println!(
            "p = {p:>2}: non-residues {:?}, r with r/2 a non-residue {:?}",
            non_residues(p).unwrap(),
            half_non_residues(p).unwrap()
        );
    }

    let mut reports = theorem7_suite(1, 200);
    reports.extend(theorem8_suite(&[5, 7], 1, 200).unwrap());
    for r in &reports {
        if r.expectation != Expectation::Holds || !r.is_verified() {
            println!("{}", r.summary_line());
        }
    }
    let held = reports.iter().filter(|r| r.expectation == Expectation::Holds && r.is_verified()).count();
    println!("{held} claims held");
}
