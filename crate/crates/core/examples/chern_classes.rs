//! n_lambda by tableau enumeration, by the literal truncated product and by
//! the closed form.
//!
//! cargo run --release --example chern_classes -- 8 2,2,2

use schern::chern::{
    c2_closed_form, c2_enumeration, c2_truncated_product, casimir, dual_partition,
};
use schern::combinatorics::Partition;

fn main() -> schern::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);
    let lambda: Partition = args.next().as_deref().unwrap_or("2,1").parse()?;
    let ceiling = 20_000_000;

    let streamed = c2_enumeration(n, &lambda, ceiling)?;
    let closed = c2_closed_form(n, &lambda)?;
    println!("n={n} lambda={lambda} dim={}", closed.dim);
    println!("enumeration   {}", streamed.n_lambda);
    println!(
        "closed form   {}  (casimir {})",
        closed.n_lambda,
        casimir(n, &lambda)?
    );
    if closed.dim <= 5_000u32.into() {
        println!(
            "product       {}",
            c2_truncated_product(n, &lambda, ceiling)?.n_lambda
        );
    }

    let dual = dual_partition(n, &lambda)?;
    println!("dual {dual}      {}", c2_closed_form(n, &dual)?.n_lambda);
    Ok(())
}
