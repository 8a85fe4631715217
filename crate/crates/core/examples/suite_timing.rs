use std::time::Instant;

use orbitres::oracle::Caps;
use orbitres::verify::{run_suite, SUITES};

fn main() {
    for suite in SUITES {
        let start = Instant::now();
        let r = run_suite(suite, None, 7, &Caps::default()).unwrap();
        println!("{suite}: {}/{} in {:?}", r.passed, r.cases, start.elapsed());
    }
}
