//! Congruences modulo powers of 2 on progressions 2n+1, 3n+r, 4n+r, 8n+r and
//! 9n+r, with the shipped negative controls.

use overcolored::lab::{theorem5_suite, theorem6_suite, Thm5Grid, Thm6Grid};
use overcolored::SuiteReport;

fn main() {
    let five = SuiteReport::new("mod 2/4/8", Default::default(), theorem5_suite(Thm5Grid::default(), 300, true));
    let six = SuiteReport::new(
        "mod 2^k",
        Default::default(),
        theorem6_suite(Thm6Grid { k_max: 2, ..Thm6Grid::default() }, 200),
    );
    for report in [five, six] {
        let unexpected: Vec<_> = report.unexpected().collect();
        println!("{}: {} claims, {} unexpected", report.suite, report.claims.len(), unexpected.len());
        for c in report.claims.iter().filter(|c| c.note.is_some()) {
            println!("  {}", c.summary_line());
        }
    }
}
