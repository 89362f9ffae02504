//! Image index against the H^4 multiplier for every stored case.
//!
//! cargo run --release --example verify_cases

use schern::repring::{cases, verify_case, RepConfig};

fn main() -> schern::Result<()> {
    let config = RepConfig::default();
    for case in cases() {
        let report = verify_case(&case.case_id, &config)?;
        println!(
            "{:<9} {:<12} generators {:>3}  index {:>3}  expected {:>3}  multiplier {:>3}  {}",
            case.case_id,
            case.spec().to_string(),
            report.generators,
            report.index,
            case.expected_gcd,
            case.h4_multiplier,
            report.verdict
        );
    }
    Ok(())
}
