//! Stream semistandard tableaux of a shape and compare the count with the
//! hook-content formula.
//!
//! cargo run --example tableaux -- 4 2,1

use schern::combinatorics::{schur_dimension, ssyt_count, ssyt_stream, Partition, SsytStream};

fn main() -> schern::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let shape: Partition = args.next().as_deref().unwrap_or("2,1").parse()?;

    println!("tableaux of shape {shape} with entries 1..={n}");
    let mut stream = ssyt_stream(n, &shape);
    let mut shown = 0;
    while shown < 10 && stream.advance() {
        let rows: Vec<String> = stream
            .current_rows()
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        println!(
            "  [{}]  content {:?}",
            rows.join(" / "),
            stream.current_counts()
        );
        shown += 1;
    }

    let parts = SsytStream::split(n, &shape);
    println!("{} independent sub-streams by first row", parts.len());
    println!(
        "count {}  hook-content {}",
        ssyt_count(n, &shape),
        schur_dimension(n, &shape)
    );
    Ok(())
}
