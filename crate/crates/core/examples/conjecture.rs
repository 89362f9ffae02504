//! Image index of SL_{l^2}/mu_l for small odd primes l.
//!
//! cargo run --release --example conjecture -- 5

use schern::repring::{explore_conjecture, RepConfig};

fn main() -> schern::Result<()> {
    let ell: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let report = explore_conjecture(ell, &RepConfig::default())?;
    println!(
        "{}: {} generators, image index {}",
        report.spec, report.generators, report.index
    );
    println!("equals ell: {}", report.matches_conjecture);
    println!(
        "duality: {} rows checked, {} failures",
        report.duality_checked,
        report.duality_failures.len()
    );
    Ok(())
}
