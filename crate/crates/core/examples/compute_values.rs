//! First values of abar_{r,s}(n) from the eta-quotient route, checked
//! against the combinatorial count and the theta product.
//!
//!     cargo run --example compute_values -- 2 3 20

use overcolored::oracle::count_overcolored;
use overcolored::qseries::{cai_product, gf_overcolored};
use overcolored::{ColorParams, Integers};

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (r, s, n) = match args[..] {
        [r, s, n] => (r, s, n as usize),
        [] => (1, 1, 15),
        _ => panic!("usage: compute_values [r s n]"),
    };
    let p = ColorParams::new(r, s).expect("r, s >= 1");
    let order = n + 1;
    let eta = gf_overcolored(p, order, &Integers);
    let theta = cai_product(p, order, &Integers);
    let counted = count_overcolored(p, order);

    println!("abar_{{{r},{s}}}(n), generating function {}", p.overcolored_spec());
    for (k, c) in counted.iter().enumerate() {
        let agree = eta.coeff(k) == c && eta.coeff(k) == theta.coeff(k);
        println!("{k:>4} {:>24} {}", eta.coeff(k), if agree { "" } else { "MISMATCH" });
    }
}
