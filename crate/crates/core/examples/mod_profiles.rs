//! abar_{r,s}(n) modulo 4 and 8 read off from squares and the form k^2 + 2l^2.

use overcolored::lab::{classify_n, mod4_profile, mod8_profile, mod8_table};
use overcolored::qseries::gf_overcolored;
use overcolored::{ColorParams, ResidueRing};

fn main() {
    let p = ColorParams::new(2, 1).unwrap();
    let m8 = ResidueRing::new(8).unwrap();
    let series = gf_overcolored(p, 60, &m8);

    println!(" n  abar mod 8  table  square  2*square  4*square  reps of k^2+2l^2");
    for n in 1..60u64 {
        let c = classify_n(n);
        let table = mod8_table(p, &c).map_or("-".to_string(), |v| v.to_string());
        println!(
            "{n:>2}  {:>10}  {table:>5}  {:>6}  {:>8}  {:>8}  {:>4}",
            series.coeff(n as usize),
            c.is_square(),
            c.is_twice_square(),
            c.is_four_times_square(),
            c.rep_count
        );
    }

    for (r, s) in [(1, 1), (2, 1), (3, 4)] {
        let p = ColorParams::new(r, s).unwrap();
        let four = mod4_profile(p, 2001);
        let eight = mod8_profile(p, 2001);
        println!("{}", four.report.summary_line());
        println!("{}", eight.report.summary_line());
        println!("  {} indices with several representations", eight.multi_rep_points);
    }
}
