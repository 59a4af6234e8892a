//! A suite report as JSON and CSV.

use overcolored::lab::theorem7_suite;
use overcolored::SuiteReport;

fn main() {
    let grid = [("k_max".to_string(), "0".to_string())].into_iter().collect();
    let report = SuiteReport::new("thm7", grid, theorem7_suite(0, 50));
    let json = report.to_json().unwrap();
    assert_eq!(SuiteReport::from_json(&json).unwrap(), report);
    println!("{json}");
    print!("{}", report.to_csv().unwrap());
}
