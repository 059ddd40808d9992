//! Coefficients of t^500 for both counts, checked against the stored values.
//!
//! Run with `cargo run --release --example weight_500`.

use std::time::Instant;

use trivalent::counting::{pointed_series, unpointed_series_fast};
use trivalent::golden::{CLASSES_500, POINTED_500};

fn main() -> trivalent::Result<()> {
    let order = 500;

    let start = Instant::now();
    let pointed = pointed_series(order)?.to_integers()?;
    println!("pointed ({:.1?}):", start.elapsed());
    let p = pointed[order].to_string();
    println!("  {p}\n  {} digits, matches: {}", p.len(), p == POINTED_500);

    let start = Instant::now();
    let classes = unpointed_series_fast(order)?.to_integers()?;
    println!("classes ({:.1?}):", start.elapsed());
    let c = classes[order].to_string();
    println!("  {c}\n  {} digits, matches: {}", c.len(), c == CLASSES_500);
    Ok(())
}
