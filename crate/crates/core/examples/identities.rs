//! Series identities: 2-dissection of 1/f1^2, theta functions two ways,
//! parity splits, theta product and the binomial congruences.

use overcolored::lab::{identities_suite, IdentityConfig};
use overcolored::SuiteReport;

fn main() {
    let cfg = IdentityConfig { order: 1024, ..IdentityConfig::default() };
    let report = SuiteReport::new("identities", Default::default(), identities_suite(cfg));
    print!("{}", report.to_plain());
}
