//! Vanishing mod p on p^lambda n + C survives moving eta exponents by
//! multiples of p^lambda.

use overcolored::lab::{lemma22_instances, lemma22_transfer_check};
use overcolored::ColorParams;

fn main() {
    for inst in lemma22_instances() {
        let rep = lemma22_transfer_check(&inst.base, &inst.perturbation, inst.p, inst.lambda, inst.c, 150).unwrap();
        println!("{:<40} {}", inst.name, if rep.is_verified() { "holds" } else { "fails" });
    }

    // a base that does not vanish: the check is vacuous and says so
    let base = ColorParams::new(1, 1).unwrap().overcolored_spec();
    let rep = lemma22_transfer_check(&base, &[(1, 1)], 3, 1, 1, 50).unwrap();
    println!("{}", rep.summary_line());
}
