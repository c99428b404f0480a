//! Runs the conjecture suites and prints their tables.
//!
//! cargo run --release --example conjectures -- 9

use permact::harness::{verify, Suite, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cap: Option<usize> = std::env::args().nth(1).map(|s| s.parse()).transpose()?;
    for suite in [Suite::GuoZeng, Suite::BrentiLogconcave, Suite::Divisibility, Suite::Gessel] {
        let n = cap.map_or(suite.default_max_n(), |c| c.min(suite.default_max_n()));
        let r = verify(suite, n, VerifyOptions::default())?;
        println!("{}", r.summary());
        for i in r.instances.iter().filter(|i| i.data.is_some()).take(3) {
            println!("  {}: {}", i.label, i.data.as_ref().unwrap());
        }
    }
    Ok(())
}
