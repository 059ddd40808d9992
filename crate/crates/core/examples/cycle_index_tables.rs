//! Cycle index series of involutions, of permutations of order 3, and
//! their Hadamard product, up to weight 7, followed by the condensed
//! types series.

use trivalent::bigseries::format_rational;
use trivalent::cycleindex::{zs_prime_dense, zs_prime_factored, DenseCycleIndex};

fn print_by_weight(name: &str, z: &DenseCycleIndex) {
    println!("{name}:");
    for w in 0..=z.max_weight() {
        println!("  [{w}] {}", z.homogeneous(w));
    }
}

fn main() -> trivalent::Result<()> {
    let w = 7;
    let z2 = zs_prime_dense(2, w)?;
    let z3 = zs_prime_dense(3, w)?;
    let product = z2.hadamard(&z3)?;
    print_by_weight("Z_S2", &z2);
    print_by_weight("Z_S3", &z3);
    print_by_weight("Z_S2 . Z_S3", &product);

    let types: Vec<String> = product
        .condense_types()
        .coeffs()
        .iter()
        .map(format_rational)
        .collect();
    println!("types series: {}", types.join(", "));

    // the factored form gives the same numbers with one row per variable
    let factored = zs_prime_factored(2, w)?.hadamard(&zs_prime_factored(3, w)?)?;
    assert_eq!(factored.to_dense(w)?, product);
    for k in 1..=3 {
        let row: Vec<String> = factored.row(k).iter().map(format_rational).collect();
        println!("a_{k},n = {}", row.join(", "));
    }
    Ok(())
}
