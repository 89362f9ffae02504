//! Generators of the monoid of dominant weights that descend to SL_n/mu_d.
//!
//! cargo run --example hilbert_basis -- 9 3

use schern::weights::{
    decompose, hilbert_basis, hilbert_candidate_count, monoid_members_up_to, partition_of,
    GroupSpec,
};

fn main() -> schern::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let n = args.next().flatten().unwrap_or(8);
    let d = args.next().flatten().unwrap_or(2);
    let spec = GroupSpec::new(n, d)?;

    let basis = hilbert_basis(&spec);
    println!(
        "{spec}: {} generators from {} candidates",
        basis.len(),
        hilbert_candidate_count(&spec)
    );
    for w in &basis {
        println!("  {:<14} {}", w.to_string(), partition_of(w));
    }

    let members = monoid_members_up_to(&spec, 2, 1 << 20)?;
    let generated = members
        .iter()
        .filter(|w| decompose(w, &basis).is_some())
        .count();
    println!(
        "{generated}/{} members with coordinates <= 2 decompose",
        members.len()
    );
    Ok(())
}
