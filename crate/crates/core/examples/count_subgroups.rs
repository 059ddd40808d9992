//! Number of subgroups of each index in the modular group, and of their
//! conjugacy classes.
//!
//! `cargo run --example count_subgroups -- 30`

use trivalent::counting::{counts, CountKind};

fn main() -> trivalent::Result<()> {
    let max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let pointed = counts(CountKind::Pointed, max, false)?;
    let classes = counts(CountKind::Classes, max, false)?;
    println!("{:>4} {:>24} {:>22}", "n", "subgroups", "conjugacy classes");
    for n in 1..=max {
        println!("{n:>4} {:>24} {:>22}", pointed[n - 1], classes[n - 1]);
    }
    Ok(())
}
