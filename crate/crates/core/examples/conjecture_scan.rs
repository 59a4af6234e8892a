//! Search the three open families abar_{2^(k+1) j + 2^k - 1, 2^k i + 1} for
//! counterexamples.

use overcolored::lab::conjecture_scan;

fn main() {
    let n_max = std::env::args().nth(1).map_or(400, |a| a.parse().expect("n_max"));
    let reports = conjecture_scan(3, 2, 2, n_max);
    let found: Vec<_> = reports.iter().filter(|r| !r.counterexamples.is_empty()).collect();
    for label in ["6.1a", "6.1b", "6.1c"] {
        let deepest = reports
            .iter()
            .filter(|r| r.label == label)
            .filter_map(|r| r.progression.map(|p| p.at(n_max)))
            .max()
            .unwrap_or(0);
        println!("{label}: checked up to coefficient {deepest}");
    }
    if found.is_empty() {
        println!("{} claims, no counterexample", reports.len());
    } else {
        for r in found {
            println!("{}", r.summary_line());
        }
    }
}
