//! Recompute a stored generator table and show where it disagrees with the
//! printed values.
//!
//! cargo run --release --example generator_tables -- sl9-mu3

use schern::repring::{case_table, RepConfig};

fn main() -> schern::Result<()> {
    let case = std::env::args().nth(1).unwrap_or_else(|| "sl8-mu2".into());
    let table = case_table(&case, &RepConfig::default())?;

    println!("{}", table.table.caption);
    for r in &table.rows {
        let row = &r.row;
        let value = row.n_lambda.as_ref().map_or("-".into(), |v| v.to_string());
        let mark = if row.flagged {
            "  <- printed differs"
        } else {
            ""
        };
        println!(
            "  {:<12} {:<22} {value:>8}{mark}",
            row.weight.to_string(),
            row.partition.to_string()
        );
    }
    for r in table.flagged() {
        if let Some((dual, printed)) = &r.dual_printed {
            println!(
                "{} printed {}; its dual {dual} is printed as {printed}",
                r.row.weight,
                r.row.printed.unwrap_or_default()
            );
        }
    }
    if !table.unlisted.is_empty() {
        println!(
            "{} generators missing from the printed table:",
            table.unlisted.len()
        );
        for row in &table.unlisted {
            println!(
                "  {:<12} {}",
                row.weight.to_string(),
                row.n_lambda.as_ref().map_or("-".into(), |v| v.to_string())
            );
        }
    }
    println!(
        "gcd of printed rows {}, image index {}",
        table.table_gcd, table.image_index
    );
    Ok(())
}
