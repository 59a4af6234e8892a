//! Every overlined colored partition of a small n.
//!
//!     cargo run --example enumerate -- 2 1 4

use overcolored::oracle::enumerate_small;
use overcolored::ColorParams;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let (r, s, n) = match args[..] {
        [r, s, n] => (r, s, n as u64),
        [] => (1, 1, 3),
        _ => panic!("usage: enumerate [r s n]"),
    };
    let p = ColorParams::new(r, s).expect("r, s >= 1");
    let list = enumerate_small(p, n).unwrap_or_else(|e| panic!("{e}"));
    // colors are subscripts, an overlined part carries a trailing '
    for x in &list {
        println!("{x}");
    }
    println!("{} objects", list.len());
}
